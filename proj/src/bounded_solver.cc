#include <hcol/arc_consistency.hh>
#include <hcol/bounded_solver.hh>
#include <hcol/errors.hh>

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <vector>

using std::optional;
using std::vector;

namespace hcol
{
    namespace
    {
        /// Smallest color in L(v) compatible with every already-colored neighbour of v.
        auto pick_color(const Digraph & g, const TargetGraph & h, const ColorLists & lists,
                const PartialColoring & f, Vertex v) -> optional<Color>
        {
            for (auto c : lists[v]) {
                bool fits = true;
                for (auto w : g.out_neighbours(v)) {
                    auto it = w == v ? f.end() : f.find(w);
                    if ((w == v && ! h.has_arc(c, c)) || (it != f.end() && ! h.has_arc(c, it->second))) {
                        fits = false;
                        break;
                    }
                }
                for (auto w : g.in_neighbours(v)) {
                    if (! fits)
                        break;
                    auto it = f.find(w);
                    if (it != f.end() && ! h.has_arc(it->second, c))
                        fits = false;
                }
                if (fits)
                    return c;
            }
            return std::nullopt;
        }

        /// Breadth-first extension from every colored vertex to the rest of the component.
        auto extend(const Digraph & g, const TargetGraph & h, const ColorLists & lists, PartialColoring & f,
                std::span<const Vertex> component) -> bool
        {
            std::queue<Vertex> queue;
            for (auto & [v, _] : f)
                queue.push(v);

            while (! queue.empty()) {
                Vertex v = queue.front();
                queue.pop();
                auto reach = [&] (Vertex w) {
                    if (f.contains(w))
                        return true;
                    auto c = pick_color(g, h, lists, f, w);
                    if (! c)
                        return false;
                    f.emplace(w, *c);
                    queue.push(w);
                    return true;
                };
                for (auto w : g.out_neighbours(v))
                    if (! reach(w))
                        return false;
                for (auto w : g.in_neighbours(v))
                    if (! reach(w))
                        return false;
            }
            return f.size() >= component.size();
        }

        auto component_arcs(const Digraph & g, std::span<const Vertex> component) -> vector<ArcId>
        {
            vector<ArcId> result;
            for (auto v : component)
                for (auto id : g.incident_arcs(v))
                    if (g.arc(id).from == v)
                        result.push_back(id);
            return result;
        }

        auto solve_out_two_in_one(const Digraph & g, const ColorLists & lists, const TargetGraph & h) -> optional<Coloring>
        {
            auto consistent = make_arc_consistent(g, lists, h);
            if (has_empty_list(consistent))
                return std::nullopt;

            Coloring result(g.size());
            for (auto & component : weak_components(g)) {
                auto shape = classify_component(g, component, out_two_in_one);
                optional<PartialColoring> part;
                switch (shape.kind) {
                    case ShapeKind::tree:
                        part = solve_tree_component(g, component, consistent, h);
                        break;
                    case ShapeKind::cycle_with_trees:
                        part = solve_cycle_component(g, component, shape.cycle, consistent, h);
                        break;
                    case ShapeKind::unsupported:
                        throw std::logic_error("component outside the degree bound after the global check");
                }
                if (! part)
                    return std::nullopt;
                for (auto & [v, c] : *part)
                    result[v] = c;
            }
            return result;
        }
    }

    auto solve_tree_component(const Digraph & g, std::span<const Vertex> component, const ColorLists & lists,
            const TargetGraph & h) -> optional<PartialColoring>
    {
        if (component.empty())
            return PartialColoring{ };
        for (auto v : component)
            if (lists[v].empty())
                return std::nullopt;

        Vertex seed = *std::min_element(component.begin(), component.end());
        PartialColoring f{ { seed, lists[seed].first() } };
        if (! extend(g, h, lists, f, component))
            return std::nullopt;
        return f;
    }

    auto solve_cycle_component(const Digraph & g, std::span<const Vertex> component, std::span<const Vertex> cycle,
            const ColorLists & lists, const TargetGraph & h) -> optional<PartialColoring>
    {
        if (cycle.empty())
            throw InvalidArgument("solve_cycle_component needs a non-empty cycle");

        auto arcs = component_arcs(g, component);
        Vertex seed = cycle.front();

        for (auto c : lists[seed]) {
            ColorLists pinned = lists;
            pinned[seed] = ColorSet::single(c);
            if (! propagate(g, h, pinned, arcs))
                continue;

            PartialColoring f{ { seed, c } };
            bool ok = true;
            for (std::size_t i = 1 ; i < cycle.size() && ok ; ++i) {
                auto pick = pick_color(g, h, pinned, f, cycle[i]);
                if (pick)
                    f.emplace(cycle[i], *pick);
                else
                    ok = false;
            }

            // a hanging tree that cannot be extended fails this seed color, not the whole component
            if (ok && extend(g, h, pinned, f, component))
                return f;
        }
        return std::nullopt;
    }

    auto solve_bounded(const Digraph & g, const ColorLists & lists, const TargetGraph & h) -> optional<Coloring>
    {
        validate_lists(lists, g, h);

        auto stats = degree_stats(g);
        if (stats.within(out_two_in_one))
            return solve_out_two_in_one(g, lists, h);
        if (stats.within(out_one_in_two))
            return solve_out_two_in_one(reverse(g), lists, reverse(h));

        throw PreconditionError("bounded solver needs max out-degree <= 2 and max in-degree <= 1, or the mirror; got out " +
                std::to_string(stats.max_out) + ", in " + std::to_string(stats.max_in));
    }
}
