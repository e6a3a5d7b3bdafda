#pragma once

#include <hcol/cnf.hh>
#include <hcol/digraph.hh>
#include <hcol/gadgets.hh>
#include <hcol/targets.hh>

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace hcol
{
    enum class Variant
    {
        unbounded,
        bounded
    };

    auto to_string(Variant v) -> std::string;

    /// A and B encode 1-in-3-SAT, C encodes 3-SAT.
    auto semantics_for(TargetName target) -> Semantics;

    struct ReductionInstance
    {
        Formula formula;
        TargetName target = TargetName::A;
        Variant variant = Variant::unbounded;

        Digraph graph;
        std::vector<std::string> labels;

        /// Basis colors for C; empty otherwise. Colorings are only pinned up to renaming.
        PartialColoring pinned;
        std::optional<Basis> basis;

        /// Literal copies of variable i at index i-1. Unbounded variants have one copy per side.
        std::vector<LiteralCopies> variables;

        /// The vertex carrying each literal occurrence, and the clause gadget's own vertices.
        std::vector<std::array<Vertex, 3>> clause_literals;
        std::vector<std::vector<Vertex>> clause_gadgets;
    };

    auto reduce(const Formula & formula, TargetName target, Variant variant) -> ReductionInstance;

    /**
     * Reads the truth value of each variable off its first positive copy: A and C treat color 1
     * as true, B treats color 0 as true. C colorings are first renamed so the basis reads (0,1,2).
     * Throws InvalidArgument if the coloring is not a homomorphism to the instance's target.
     */
    auto extract_assignment(const ReductionInstance & instance, const Coloring & coloring) -> Assignment;

    /**
     * Fixes literal (and basis) colors from the assignment and lets the exact search fill in the
     * gadget interiors. Throws InvalidArgument if the assignment does not satisfy the formula.
     */
    auto extend_assignment(const ReductionInstance & instance, const Assignment & assignment) -> Coloring;

    struct InstanceReport
    {
        DegreeStats degrees;
        Vertex max_out_vertex = 0;
        std::string max_out_label;
        std::size_t undirected_max_degree = 0;

        bool degrees_ok = true;
        bool meta_ok = true;
        bool gadgets_ok = true;
        std::vector<std::string> problems;

        auto passed() const -> bool { return degrees_ok && meta_ok && gadgets_ok; }
    };

    auto validate_instance(const ReductionInstance & instance) -> InstanceReport;

    /// Versioned JSON for the role -> vertex mapping, keys in a fixed order.
    auto meta_json(const ReductionInstance & instance) -> std::string;
}
