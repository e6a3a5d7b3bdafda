#include <hcol/digraph.hh>
#include <hcol/errors.hh>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <optional>
#include <numeric>
#include <queue>
#include <regex>
#include <set>
#include <sstream>

using std::size_t;
using std::string;
using std::string_view;
using std::vector;

namespace hcol
{
    FormatError::FormatError(size_t line, const string & message) :
        Error(line ? "line " + std::to_string(line) + ": " + message : message),
        _line(line)
    {
    }

    Digraph::Digraph(size_t n) :
        _size(n),
        _out(n),
        _in(n),
        _incident(n)
    {
    }

    Digraph::Digraph(size_t n, vector<Arc> arcs) :
        Digraph(n)
    {
        std::set<Arc> seen;
        for (auto & a : arcs) {
            if (a.from >= n || a.to >= n)
                throw InvalidArgument("arc " + std::to_string(a.from) + " -> " + std::to_string(a.to) +
                        " has an endpoint outside 0.." + std::to_string(n) + "-1");
            if (! seen.insert(a).second)
                throw InvalidArgument("duplicate arc " + std::to_string(a.from) + " -> " + std::to_string(a.to));
        }

        _arcs = std::move(arcs);
        for (ArcId id = 0 ; id < _arcs.size() ; ++id) {
            auto [u, v] = _arcs[id];
            _out[u].push_back(v);
            _in[v].push_back(u);
            _incident[u].push_back(id);
            if (u != v)
                _incident[v].push_back(id);
        }
    }

    auto Digraph::has_arc(Vertex u, Vertex v) const -> bool
    {
        if (u >= _size || v >= _size)
            return false;
        return std::find(_out[u].begin(), _out[u].end(), v) != _out[u].end();
    }

    auto operator== (const Digraph & a, const Digraph & b) -> bool
    {
        if (a._size != b._size || a._arcs.size() != b._arcs.size())
            return false;
        vector<Arc> x(a._arcs), y(b._arcs);
        std::sort(x.begin(), x.end());
        std::sort(y.begin(), y.end());
        return x == y;
    }

    auto DigraphBuilder::add_vertex(string label) -> Vertex
    {
        _labels.push_back(std::move(label));
        return Vertex(_labels.size() - 1);
    }

    auto DigraphBuilder::add_arc(Vertex from, Vertex to) -> void
    {
        _arcs.push_back({ from, to });
    }

    auto DigraphBuilder::build() const -> Digraph
    {
        return Digraph(_labels.size(), _arcs);
    }

    auto degree_stats(const Digraph & g) -> DegreeStats
    {
        DegreeStats result;
        for (Vertex v = 0 ; v < g.size() ; ++v) {
            result.max_out = std::max(result.max_out, g.out_degree(v));
            result.max_in = std::max(result.max_in, g.in_degree(v));
        }
        return result;
    }

    auto weak_components(const Digraph & g) -> vector<vector<Vertex>>
    {
        vector<int> which(g.size(), -1);
        vector<vector<Vertex>> result;

        for (Vertex start = 0 ; start < g.size() ; ++start) {
            if (which[start] != -1)
                continue;

            int id = int(result.size());
            result.emplace_back();
            std::queue<Vertex> queue;
            queue.push(start);
            which[start] = id;
            while (! queue.empty()) {
                Vertex v = queue.front();
                queue.pop();
                result.back().push_back(v);
                auto visit = [&] (Vertex w) {
                    if (which[w] == -1) {
                        which[w] = id;
                        queue.push(w);
                    }
                };
                for (auto w : g.out_neighbours(v))
                    visit(w);
                for (auto w : g.in_neighbours(v))
                    visit(w);
            }
            std::sort(result.back().begin(), result.back().end());
        }

        return result;
    }

    auto classify_component(const Digraph & g, std::span<const Vertex> component, DegreeStats bounds) -> ComponentShape
    {
        if (bounds.max_in > 1 && bounds.max_out > 1)
            throw InvalidArgument("classify_component needs a bound with max_in <= 1 or max_out <= 1");

        size_t arcs = 0;
        for (auto v : component) {
            if (g.out_degree(v) > bounds.max_out || g.in_degree(v) > bounds.max_in)
                return { };
            arcs += g.out_degree(v);
        }

        if (arcs + 1 == component.size())
            return { ShapeKind::tree, { } };
        if (arcs != component.size() || component.empty())
            return { };

        // every vertex now has exactly one in-arc (or exactly one out-arc); walk those back from
        // the smallest vertex until something repeats, and the repeated stretch is the cycle
        bool follow_in = bounds.max_in <= 1;
        auto step = [&] (Vertex v) {
            return follow_in ? g.in_neighbours(v)[0] : g.out_neighbours(v)[0];
        };

        Vertex start = *std::min_element(component.begin(), component.end());
        vector<int> position(g.size(), -1);
        vector<Vertex> walk;
        Vertex v = start;
        while (position[v] == -1) {
            position[v] = int(walk.size());
            walk.push_back(v);
            v = step(v);
        }

        vector<Vertex> cycle(walk.begin() + position[v], walk.end());
        if (follow_in)
            std::reverse(cycle.begin(), cycle.end());
        std::rotate(cycle.begin(), std::min_element(cycle.begin(), cycle.end()), cycle.end());
        return { ShapeKind::cycle_with_trees, std::move(cycle) };
    }

    auto reverse(const Digraph & g) -> Digraph
    {
        vector<Arc> arcs;
        arcs.reserve(g.arc_count());
        for (auto & a : g.arcs())
            arcs.push_back({ a.to, a.from });
        return Digraph(g.size(), std::move(arcs));
    }

    auto underlying_undirected_max_degree(const Digraph & g) -> size_t
    {
        size_t result = 0;
        for (Vertex v = 0 ; v < g.size() ; ++v) {
            std::set<Vertex> neighbours;
            for (auto w : g.out_neighbours(v))
                if (w != v)
                    neighbours.insert(w);
            for (auto w : g.in_neighbours(v))
                if (w != v)
                    neighbours.insert(w);
            result = std::max(result, neighbours.size());
        }
        return result;
    }

    namespace
    {
        auto trim(string_view s) -> string_view
        {
            auto first = s.find_first_not_of(" \t\r");
            if (first == string_view::npos)
                return { };
            auto last = s.find_last_not_of(" \t\r");
            return s.substr(first, last - first + 1);
        }

        auto parse_count(string_view token, size_t line, const char * what) -> size_t
        {
            size_t value = 0;
            auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
            if (ec != std::errc() || ptr != token.data() + token.size())
                throw FormatError(line, string("expected ") + what + ", got '" + string(token) + "'");
            return value;
        }

        auto split_ws(string_view s) -> vector<string_view>
        {
            vector<string_view> tokens;
            size_t i = 0;
            while (i < s.size()) {
                while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r'))
                    ++i;
                size_t j = i;
                while (j < s.size() && ! (s[j] == ' ' || s[j] == '\t' || s[j] == '\r'))
                    ++j;
                if (j > i)
                    tokens.push_back(s.substr(i, j - i));
                i = j;
            }
            return tokens;
        }
    }

    auto parse_edge_list(string_view text) -> LabelledDigraph
    {
        std::optional<size_t> n, m;
        vector<Arc> arcs;
        vector<std::pair<Vertex, string>> labels;
        std::set<Arc> seen;

        size_t line_no = 0;
        size_t pos = 0;
        while (pos <= text.size()) {
            auto end = text.find('\n', pos);
            if (end == string_view::npos)
                end = text.size();
            auto line = trim(text.substr(pos, end - pos));
            pos = end + 1;
            ++line_no;

            if (line.empty())
                continue;
            if (line[0] == '#') {
                if (line.starts_with("#label")) {
                    auto rest = trim(line.substr(6));
                    auto space = rest.find_first_of(" \t");
                    auto id = parse_count(rest.substr(0, space), line_no, "a vertex id after #label");
                    labels.emplace_back(Vertex(id), space == string_view::npos ? string() : string(trim(rest.substr(space))));
                }
                continue;
            }

            auto tokens = split_ws(line);
            if (tokens.size() != 2)
                throw FormatError(line_no, "expected two whitespace-separated integers");

            if (! n) {
                n = parse_count(tokens[0], line_no, "a vertex count");
                m = parse_count(tokens[1], line_no, "an arc count");
                continue;
            }

            auto u = parse_count(tokens[0], line_no, "a vertex id");
            auto v = parse_count(tokens[1], line_no, "a vertex id");
            if (u >= *n || v >= *n)
                throw FormatError(line_no, "vertex id out of range 0.." + std::to_string(*n - 1));
            Arc a{ Vertex(u), Vertex(v) };
            if (! seen.insert(a).second)
                throw FormatError(line_no, "duplicate arc " + std::to_string(u) + " " + std::to_string(v));
            arcs.push_back(a);
        }

        if (! n)
            throw FormatError(0, "missing 'n m' header");
        if (arcs.size() != *m)
            throw FormatError(0, "header declares " + std::to_string(*m) + " arcs, found " + std::to_string(arcs.size()));

        LabelledDigraph result{ Digraph(*n, std::move(arcs)), { } };
        if (! labels.empty()) {
            result.labels.resize(*n);
            for (auto & [v, text] : labels) {
                if (v >= *n)
                    throw FormatError(0, "label for vertex " + std::to_string(v) + " out of range");
                result.labels[v] = text;
            }
        }
        return result;
    }

    auto format_edge_list(const Digraph & g, std::span<const string> labels) -> string
    {
        std::ostringstream out;
        for (Vertex v = 0 ; v < labels.size() && v < g.size() ; ++v)
            if (! labels[v].empty())
                out << "#label " << v << ' ' << labels[v] << '\n';
        out << g.size() << ' ' << g.arc_count() << '\n';
        for (auto & a : g.arcs())
            out << a.from << ' ' << a.to << '\n';
        return out.str();
    }

    namespace
    {
        auto dot_quote(string_view s) -> string
        {
            string result = "\"";
            for (char c : s) {
                if (c == '"' || c == '\\')
                    result += '\\';
                result += c;
            }
            return result + "\"";
        }
    }

    auto format_dot(const Digraph & g, std::span<const string> labels, string_view name) -> string
    {
        std::ostringstream out;
        out << "digraph " << dot_quote(name) << " {\n";
        for (Vertex v = 0 ; v < g.size() ; ++v) {
            out << "    " << v;
            if (v < labels.size() && ! labels[v].empty())
                out << " [label=" << dot_quote(labels[v]) << "]";
            out << ";\n";
        }
        for (auto & a : g.arcs())
            out << "    " << a.from << " -> " << a.to << ";\n";
        out << "}\n";
        return out.str();
    }

    auto parse_dot(string_view text) -> LabelledDigraph
    {
        auto open = text.find('{');
        auto close = text.rfind('}');
        if (! trim(text).starts_with("digraph"))
            throw FormatError(1, "expected 'digraph'");
        if (open == string_view::npos || close == string_view::npos || close < open)
            throw FormatError(0, "unbalanced braces");

        static const std::regex edge_re(R"(^\s*(\d+)\s*->\s*(\d+)\s*(\[.*\])?\s*$)");
        static const std::regex node_re(R"re(^\s*(\d+)\s*(\[\s*label\s*=\s*"((?:[^"\\]|\\.)*)"\s*\])?\s*$)re");

        string body(text.substr(open + 1, close - open - 1));
        size_t base_line = 1 + size_t(std::count(text.begin(), text.begin() + open, '\n'));

        size_t n = 0;
        vector<Arc> arcs;
        std::map<Vertex, string> labels;
        size_t line = base_line;
        string statement;
        auto flush = [&] {
            auto s = string(trim(statement));
            statement.clear();
            if (s.empty())
                return;
            std::smatch match;
            if (std::regex_match(s, match, edge_re)) {
                Vertex u = Vertex(std::stoul(match[1])), v = Vertex(std::stoul(match[2]));
                arcs.push_back({ u, v });
                n = std::max<size_t>(n, std::max(u, v) + 1);
            }
            else if (std::regex_match(s, match, node_re)) {
                Vertex v = Vertex(std::stoul(match[1]));
                n = std::max<size_t>(n, v + 1);
                if (match[3].matched) {
                    string unescaped;
                    string raw = match[3];
                    for (size_t i = 0 ; i < raw.size() ; ++i)
                        unescaped += (raw[i] == '\\' && i + 1 < raw.size()) ? raw[++i] : raw[i];
                    labels[v] = unescaped;
                }
            }
            else if (s.starts_with("node") || s.starts_with("edge") || s.starts_with("graph") || s.starts_with("rankdir"))
                return;
            else
                throw FormatError(line, "unsupported DOT statement '" + s + "'");
        };

        for (char c : body) {
            if (c == ';' || c == '\n') {
                flush();
                if (c == '\n')
                    ++line;
            }
            else
                statement += c;
        }
        flush();

        try {
            LabelledDigraph result{ Digraph(n, std::move(arcs)), { } };
            if (! labels.empty()) {
                result.labels.resize(n);
                for (auto & [v, l] : labels)
                    result.labels[v] = l;
            }
            return result;
        }
        catch (const InvalidArgument & e) {
            throw FormatError(0, e.what());
        }
    }

    auto read_file(const string & path) -> string
    {
        std::ifstream in(path, std::ios::binary);
        if (! in)
            throw Error("cannot open '" + path + "' for reading");
        std::ostringstream buffer;
        buffer << in.rdbuf();
        return buffer.str();
    }

    auto write_file(const string & path, string_view contents) -> void
    {
        std::ofstream out(path, std::ios::binary);
        if (! out)
            throw Error("cannot open '" + path + "' for writing");
        out << contents;
    }
}
