#pragma once

#include <hcol/digraph.hh>
#include <hcol/targets.hh>

#include <span>

namespace hcol
{
    /**
     * Prunes both ends of the arc u -> v: a color x survives in L(u) only if some y in L(v)
     * has xy in H, and a color z survives in L(v) only if some w in L(u) has wz in H. For a
     * loop (u == v) only colors carrying a loop in H survive. Returns whether anything was removed.
     */
    auto revise_arc(Vertex u, Vertex v, ColorLists & lists, const TargetGraph & h) -> bool;

    /// Order in which the initial worklist is seeded. Both reach the same fixpoint.
    enum class AcSchedule
    {
        forward,
        reverse
    };

    /**
     * Runs revise_arc to a fixpoint. The worklist starts with every arc in id order (or reversed);
     * whenever a list shrinks, the arcs incident to that vertex are queued again. Empty lists are
     * a legal outcome and are left for the caller to inspect.
     */
    auto make_arc_consistent(const Digraph & g, ColorLists lists, const TargetGraph & h,
            AcSchedule schedule = AcSchedule::forward) -> ColorLists;

    /**
     * In-place propagation seeded with the given arcs, as used inside the solvers. Stops early and
     * returns false as soon as some list empties.
     */
    auto propagate(const Digraph & g, const TargetGraph & h, ColorLists & lists, std::span<const ArcId> seeds) -> bool;

    auto has_empty_list(const ColorLists & lists) -> bool;
}
