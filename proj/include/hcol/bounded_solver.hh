#pragma once

#include <hcol/digraph.hh>
#include <hcol/targets.hh>

#include <optional>
#include <span>

namespace hcol
{
    inline constexpr DegreeStats out_two_in_one{ 2, 1 };
    inline constexpr DegreeStats out_one_in_two{ 1, 2 };

    /**
     * Polynomial list H-coloring for inputs with max out-degree 2 and max in-degree 1, or the
     * mirror bound. Every weak component of such a digraph is a tree or a single directed cycle
     * with trees hanging off it, so: make the lists arc consistent, then color trees greedily
     * from one vertex, and for cycle components try each color of one cycle vertex in turn.
     *
     * Mirror-bounded inputs are solved on reverse(g) against reverse(h), which has the same
     * homomorphisms. Choices are deterministic: smallest seed vertex, smallest color first.
     *
     * Throws PreconditionError if g fits neither bound, InvalidArgument for malformed lists.
     */
    auto solve_bounded(const Digraph & g, const ColorLists & lists, const TargetGraph & h) -> std::optional<Coloring>;

    /// Colors a tree component from arc-consistent lists, seeding its smallest vertex.
    auto solve_tree_component(const Digraph & g, std::span<const Vertex> component, const ColorLists & lists,
            const TargetGraph & h) -> std::optional<PartialColoring>;

    /**
     * Colors a cycle-with-trees component from arc-consistent lists: for each color of the
     * smallest cycle vertex, pin it, re-run arc consistency on the component, walk the cycle,
     * then extend into the hanging trees. The first color that works wins.
     */
    auto solve_cycle_component(const Digraph & g, std::span<const Vertex> component, std::span<const Vertex> cycle,
            const ColorLists & lists, const TargetGraph & h) -> std::optional<PartialColoring>;
}
