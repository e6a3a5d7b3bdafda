#include <hcol/arc_consistency.hh>
#include <hcol/exact_oracle.hh>

#include <algorithm>

using std::optional;
using std::size_t;
using std::vector;

namespace hcol
{
    namespace
    {
        auto check_input(const Digraph & g, const TargetGraph & h, const ColorLists & lists, const OracleOptions & options) -> void
        {
            if (options.vertex_cap && g.size() > *options.vertex_cap)
                throw CapExceeded("input has " + std::to_string(g.size()) + " vertices, over the exact oracle's cap of " +
                        std::to_string(*options.vertex_cap) + "; use the bounded solver, a result limit, or raise the cap");
            validate_lists(lists, g, h);
        }

        /// Is colouring v with c consistent with every arc to a vertex before v in id order?
        auto consistent_with_earlier(const Digraph & g, const TargetGraph & h, const Coloring & f, Vertex v, Color c) -> bool
        {
            for (auto w : g.out_neighbours(v))
                if (w < v && ! h.has_arc(c, f[w]))
                    return false;
                else if (w == v && ! h.has_arc(c, c))
                    return false;
            for (auto w : g.in_neighbours(v))
                if (w < v && ! h.has_arc(f[w], c))
                    return false;
            return true;
        }

        struct Enumerator
        {
            const Digraph & g;
            const TargetGraph & h;
            const std::function<bool (const Coloring &)> & visit;
            Coloring current;

            // returns false once the visitor asks to stop
            auto plain(const ColorLists & lists, Vertex v) -> bool
            {
                if (v == g.size())
                    return visit(current);
                for (auto c : lists[v]) {
                    if (! consistent_with_earlier(g, h, current, v, c))
                        continue;
                    current[v] = c;
                    if (! plain(lists, v + 1))
                        return false;
                }
                return true;
            }

            auto pruned(const ColorLists & lists, Vertex v) -> bool
            {
                if (v == g.size())
                    return visit(current);
                for (auto c : lists[v]) {
                    ColorLists next = lists;
                    next[v] = ColorSet::single(c);
                    if (! propagate(g, h, next, g.incident_arcs(v)))
                        continue;
                    current[v] = c;
                    if (! pruned(next, v + 1))
                        return false;
                }
                return true;
            }
        };

        struct Searcher
        {
            const Digraph & g;
            const TargetGraph & h;

            auto components_of(const ColorLists & lists, const vector<Vertex> & region) -> vector<vector<Vertex>>
            {
                vector<Vertex> open;
                for (auto v : region)
                    if (lists[v].size() > 1)
                        open.push_back(v);

                vector<int> mark(g.size(), -2);
                for (auto v : open)
                    mark[v] = -1;

                vector<vector<Vertex>> result;
                for (auto start : open) {
                    if (mark[start] != -1)
                        continue;
                    int id = int(result.size());
                    result.emplace_back();
                    vector<Vertex> stack{ start };
                    mark[start] = id;
                    while (! stack.empty()) {
                        Vertex v = stack.back();
                        stack.pop_back();
                        result.back().push_back(v);
                        auto visit = [&] (Vertex w) {
                            if (mark[w] == -1) {
                                mark[w] = id;
                                stack.push_back(w);
                            }
                        };
                        for (auto w : g.out_neighbours(v))
                            visit(w);
                        for (auto w : g.in_neighbours(v))
                            visit(w);
                    }
                }
                return result;
            }

            auto choose(const ColorLists & lists, const vector<Vertex> & component) -> Vertex
            {
                return *std::min_element(component.begin(), component.end(), [&] (Vertex a, Vertex b) {
                        auto sa = lists[a].size(), sb = lists[b].size();
                        if (sa != sb)
                            return sa < sb;
                        auto da = g.incident_arcs(a).size(), db = g.incident_arcs(b).size();
                        if (da != db)
                            return da > db;
                        return a < b;
                        });
            }

            // drops every colour whose singleton assignment wipes out under propagation, to a fixpoint
            auto singleton_prune(ColorLists & lists, const vector<Vertex> & component) -> bool
            {
                for (bool changed = true ; changed ; ) {
                    changed = false;
                    for (auto v : component) {
                        if (lists[v].size() < 2)
                            continue;
                        auto options = lists[v];
                        for (auto c : options) {
                            ColorLists trial = lists;
                            trial[v] = ColorSet::single(c);
                            if (propagate(g, h, trial, g.incident_arcs(v)))
                                continue;
                            lists[v].erase(c);
                            if (lists[v].empty() || ! propagate(g, h, lists, g.incident_arcs(v)))
                                return false;
                            changed = true;
                        }
                    }
                }
                return true;
            }

            // lists are arc consistent on entry; on success they are all singletons over region
            auto solve(ColorLists & lists, const vector<Vertex> & region) -> bool
            {
                auto parts = components_of(lists, region);
                if (parts.size() > 1) {
                    for (auto & part : parts)
                        if (! solve(lists, part))
                            return false;
                    return true;
                }
                if (parts.empty())
                    return true;

                auto & component = parts.front();
                if (! singleton_prune(lists, component))
                    return false;
                if (std::none_of(component.begin(), component.end(), [&] (Vertex w) { return lists[w].size() > 1; }))
                    return true;
                Vertex v = choose(lists, component);
                for (auto c : lists[v]) {
                    ColorLists next = lists;
                    next[v] = ColorSet::single(c);
                    if (! propagate(g, h, next, g.incident_arcs(v)))
                        continue;
                    if (solve(next, component)) {
                        lists = std::move(next);
                        return true;
                    }
                }
                return false;
            }
        };
    }

    auto for_each_homomorphism(const Digraph & g, const TargetGraph & h, const ColorLists & lists,
            const std::function<bool (const Coloring &)> & visit, const OracleOptions & options) -> void
    {
        check_input(g, h, lists, options);
        if (has_empty_list(lists))
            return;

        Enumerator e{ g, h, visit, Coloring(g.size(), 0) };
        if (options.prune) {
            auto start = make_arc_consistent(g, lists, h);
            if (has_empty_list(start))
                return;
            e.pruned(start, 0);
        }
        else
            e.plain(lists, 0);
    }

    auto enumerate_homomorphisms(const Digraph & g, const TargetGraph & h, const ColorLists & lists,
            optional<size_t> limit, const OracleOptions & options) -> vector<Coloring>
    {
        vector<Coloring> result;
        if (limit && *limit == 0) {
            check_input(g, h, lists, options);
            return result;
        }
        for_each_homomorphism(g, h, lists, [&] (const Coloring & f) {
                result.push_back(f);
                return ! limit || result.size() < *limit;
                }, options);
        return result;
    }

    auto count_homomorphisms(const Digraph & g, const TargetGraph & h, const ColorLists & lists,
            const OracleOptions & options) -> std::uint64_t
    {
        std::uint64_t count = 0;
        for_each_homomorphism(g, h, lists, [&] (const Coloring &) { ++count; return true; }, options);
        return count;
    }

    auto find_homomorphism(const Digraph & g, const TargetGraph & h, const ColorLists & lists,
            const OracleOptions & options) -> optional<Coloring>
    {
        if (! options.prune) {
            auto first = enumerate_homomorphisms(g, h, lists, 1, options);
            if (first.empty())
                return std::nullopt;
            return first.front();
        }

        check_input(g, h, lists, options);
        if (has_empty_list(lists))
            return std::nullopt;

        auto working = make_arc_consistent(g, lists, h);
        if (has_empty_list(working))
            return std::nullopt;

        vector<Vertex> everything(g.size());
        for (Vertex v = 0 ; v < g.size() ; ++v)
            everything[v] = v;

        Searcher searcher{ g, h };
        if (! searcher.solve(working, everything))
            return std::nullopt;

        Coloring f(g.size());
        for (Vertex v = 0 ; v < g.size() ; ++v)
            f[v] = working[v].first();
        return f;
    }

    auto exists_homomorphism(const Digraph & g, const TargetGraph & h, const ColorLists & lists,
            const OracleOptions & options) -> bool
    {
        return find_homomorphism(g, h, lists, options).has_value();
    }
}
