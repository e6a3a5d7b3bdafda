#include <hcol/arc_consistency.hh>

#include <algorithm>
#include <deque>
#include <vector>

namespace hcol
{
    auto revise_arc(Vertex u, Vertex v, ColorLists & lists, const TargetGraph & h) -> bool
    {
        if (u == v) {
            auto kept = lists[u] & h.loops();
            bool changed = kept != lists[u];
            lists[u] = kept;
            return changed;
        }

        auto new_u = lists[u] & h.predecessors(lists[v]);
        auto new_v = lists[v] & h.successors(new_u);
        bool changed = new_u != lists[u] || new_v != lists[v];
        lists[u] = new_u;
        lists[v] = new_v;
        return changed;
    }

    namespace
    {
        auto run_worklist(const Digraph & g, const TargetGraph & h, ColorLists & lists,
                std::deque<ArcId> queue, bool stop_on_wipeout) -> bool
        {
            std::vector<bool> queued(g.arc_count(), false);
            for (auto id : queue)
                queued[id] = true;

            auto requeue = [&] (Vertex w, ArcId except) {
                for (auto id : g.incident_arcs(w))
                    if (id != except && ! queued[id]) {
                        queued[id] = true;
                        queue.push_back(id);
                    }
            };

            bool wiped_out = false;
            while (! queue.empty()) {
                ArcId id = queue.front();
                queue.pop_front();
                queued[id] = false;

                auto [u, v] = g.arc(id);
                auto before_u = lists[u], before_v = lists[v];
                if (! revise_arc(u, v, lists, h))
                    continue;

                if (lists[u].empty() || lists[v].empty()) {
                    wiped_out = true;
                    if (stop_on_wipeout)
                        return false;
                }
                if (lists[u] != before_u)
                    requeue(u, id);
                if (lists[v] != before_v)
                    requeue(v, id);
            }
            return ! wiped_out;
        }
    }

    auto make_arc_consistent(const Digraph & g, ColorLists lists, const TargetGraph & h, AcSchedule schedule) -> ColorLists
    {
        validate_lists(lists, g, h);

        std::deque<ArcId> queue;
        for (ArcId id = 0 ; id < g.arc_count() ; ++id)
            queue.push_back(id);
        if (schedule == AcSchedule::reverse)
            std::reverse(queue.begin(), queue.end());

        run_worklist(g, h, lists, std::move(queue), false);
        return lists;
    }

    auto propagate(const Digraph & g, const TargetGraph & h, ColorLists & lists, std::span<const ArcId> seeds) -> bool
    {
        std::deque<ArcId> queue;
        std::vector<bool> seen(g.arc_count(), false);
        for (auto id : seeds)
            if (! seen[id]) {
                seen[id] = true;
                queue.push_back(id);
            }
        return run_worklist(g, h, lists, std::move(queue), true);
    }

    auto has_empty_list(const ColorLists & lists) -> bool
    {
        return std::any_of(lists.begin(), lists.end(), [] (ColorSet s) { return s.empty(); });
    }
}
