#pragma once

#include <hcol/digraph.hh>
#include <hcol/errors.hh>
#include <hcol/targets.hh>

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace hcol
{
    struct OracleOptions
    {
        /// Refuse inputs with more vertices than this; nullopt lifts the cap.
        std::optional<std::size_t> vertex_cap = 24;

        /// Maintain arc consistency after every assignment. Without it, only arcs back to
        /// already-assigned vertices are checked.
        bool prune = true;
    };

    class CapExceeded : public PreconditionError
    {
        public:
            using PreconditionError::PreconditionError;
    };

    /**
     * Calls visit on every list homomorphism g -> h in lexicographic order of the coloring vector,
     * until visit returns false.
     */
    auto for_each_homomorphism(const Digraph & g, const TargetGraph & h, const ColorLists & lists,
            const std::function<bool (const Coloring &)> & visit, const OracleOptions & options = { }) -> void;

    auto enumerate_homomorphisms(const Digraph & g, const TargetGraph & h, const ColorLists & lists,
            std::optional<std::size_t> limit = std::nullopt, const OracleOptions & options = { }) -> std::vector<Coloring>;

    auto count_homomorphisms(const Digraph & g, const TargetGraph & h, const ColorLists & lists,
            const OracleOptions & options = { }) -> std::uint64_t;

    /**
     * Some list homomorphism, not necessarily the lexicographically first. With pruning on, this
     * is a maintained-arc-consistency search that branches on the smallest list (ties: higher
     * degree, then lower id) and solves independent parts of the residual graph separately.
     */
    auto find_homomorphism(const Digraph & g, const TargetGraph & h, const ColorLists & lists,
            const OracleOptions & options = { }) -> std::optional<Coloring>;

    auto exists_homomorphism(const Digraph & g, const TargetGraph & h, const ColorLists & lists,
            const OracleOptions & options = { }) -> bool;
}
