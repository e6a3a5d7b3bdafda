#include <hcol/errors.hh>
#include <hcol/targets.hh>

#include <charconv>
#include <sstream>

using std::size_t;
using std::string;
using std::string_view;
using std::vector;

namespace hcol
{
    auto to_string(TargetName name) -> string
    {
        switch (name) {
            case TargetName::A: return "A";
            case TargetName::B: return "B";
            case TargetName::C: return "C";
        }
        return "?";
    }

    auto parse_target_name(string_view text) -> std::optional<TargetName>
    {
        if (text == "A")
            return TargetName::A;
        if (text == "B")
            return TargetName::B;
        if (text == "C")
            return TargetName::C;
        return std::nullopt;
    }

    TargetGraph::TargetGraph(Digraph graph, string name) :
        _graph(std::move(graph)),
        _name(std::move(name)),
        _out(_graph.size()),
        _in(_graph.size())
    {
        if (_graph.size() > ColorSet::capacity)
            throw InvalidArgument("target digraphs are limited to " + std::to_string(ColorSet::capacity) + " vertices");

        for (auto & a : _graph.arcs()) {
            _out[a.from].insert(a.to);
            _in[a.to].insert(a.from);
            if (a.from == a.to)
                _loops.insert(a.from);
        }
    }

    auto TargetGraph::successors(ColorSet from) const -> ColorSet
    {
        ColorSet result;
        for (auto c : from)
            result |= _out[c];
        return result;
    }

    auto TargetGraph::predecessors(ColorSet to) const -> ColorSet
    {
        ColorSet result;
        for (auto c : to)
            result |= _in[c];
        return result;
    }

    auto build_target(TargetName name) -> TargetGraph
    {
        switch (name) {
            case TargetName::A:
                return TargetGraph(Digraph(3, { { 0, 1 }, { 1, 0 }, { 0, 2 }, { 2, 1 } }), "A");
            case TargetName::B:
                return TargetGraph(Digraph(3, { { 0, 1 }, { 1, 0 }, { 0, 2 }, { 1, 2 }, { 2, 1 } }), "B");
            case TargetName::C:
                return TargetGraph(Digraph(3, { { 0, 1 }, { 1, 0 }, { 0, 2 }, { 2, 0 }, { 1, 2 }, { 2, 1 } }), "C");
        }
        throw InvalidArgument("unknown target");
    }

    auto reverse(const TargetGraph & h) -> TargetGraph
    {
        return TargetGraph(reverse(h.graph()), h.name());
    }

    auto full_lists(size_t n, const TargetGraph & h) -> ColorLists
    {
        return ColorLists(n, h.all());
    }

    auto validate_lists(const ColorLists & lists, const Digraph & g, const TargetGraph & h) -> void
    {
        if (lists.size() != g.size())
            throw InvalidArgument("expected " + std::to_string(g.size()) + " lists, got " + std::to_string(lists.size()));
        for (size_t v = 0 ; v < lists.size() ; ++v)
            if ((lists[v].bits() & ~h.all().bits()) != 0)
                throw InvalidArgument("list of vertex " + std::to_string(v) + " names a color outside the target");
    }

    auto is_homomorphism(const Digraph & g, const TargetGraph & h, const Coloring & f) -> bool
    {
        if (f.size() != g.size())
            throw InvalidArgument("coloring covers " + std::to_string(f.size()) + " of " + std::to_string(g.size()) + " vertices");
        for (auto c : f)
            if (c >= h.size())
                throw InvalidArgument("coloring uses color " + std::to_string(c) + " outside the target");

        for (auto & a : g.arcs())
            if (! h.has_arc(f[a.from], f[a.to]))
                return false;
        return true;
    }

    auto respects_lists(const Coloring & f, const ColorLists & lists) -> bool
    {
        if (f.size() != lists.size())
            return false;
        for (size_t v = 0 ; v < f.size() ; ++v)
            if (! lists[v].contains(f[v]))
                return false;
        return true;
    }

    auto parse_lists(string_view text, size_t n, const TargetGraph & h) -> ColorLists
    {
        auto lists = full_lists(n, h);
        vector<bool> seen(n, false);

        std::istringstream in{ string(text) };
        string line;
        size_t line_no = 0;
        while (std::getline(in, line)) {
            ++line_no;
            auto hash = line.find('#');
            if (hash != string::npos)
                line.erase(hash);
            if (line.find_first_not_of(" \t\r") == string::npos)
                continue;

            auto colon = line.find(':');
            if (colon == string::npos)
                throw FormatError(line_no, "expected 'v: c1 c2 ...'");

            std::istringstream head(line.substr(0, colon));
            long long v = -1;
            string trailing;
            if (! (head >> v) || (head >> trailing) || v < 0 || size_t(v) >= n)
                throw FormatError(line_no, "bad vertex id before ':'");
            if (seen[v])
                throw FormatError(line_no, "vertex " + std::to_string(v) + " listed twice");
            seen[v] = true;

            ColorSet list;
            std::istringstream colors(line.substr(colon + 1));
            string token;
            while (colors >> token) {
                Color c = 0;
                auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), c);
                if (ec != std::errc() || ptr != token.data() + token.size())
                    throw FormatError(line_no, "bad color '" + token + "'");
                if (c >= h.size())
                    throw FormatError(line_no, "color " + token + " is not a vertex of the target");
                list.insert(c);
            }
            lists[v] = list;
        }
        return lists;
    }

    auto format_lists(const ColorLists & lists) -> string
    {
        std::ostringstream out;
        for (size_t v = 0 ; v < lists.size() ; ++v) {
            out << v << ':';
            for (auto c : lists[v])
                out << ' ' << c;
            out << '\n';
        }
        return out.str();
    }
}
