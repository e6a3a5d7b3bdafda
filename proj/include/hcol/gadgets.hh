#pragma once

#include <hcol/digraph.hh>
#include <hcol/targets.hh>

#include <array>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace hcol
{
    using ColorTuple = std::vector<Color>;

    enum class BehaviorMode
    {
        /// The set of interface tuples achieved by some full coloring.
        projection,
        /// For each tuple of a fixed domain, whether a full coloring extends it.
        extension_table
    };

    struct InterfaceBehavior
    {
        TargetName target = TargetName::A;
        BehaviorMode mode = BehaviorMode::projection;
        std::size_t arity = 0;
        std::vector<ColorTuple> domain;   // extension_table only
        std::set<ColorTuple> allowed;

        auto operator== (const InterfaceBehavior &) const -> bool = default;
    };

    /// Which way a clause arc leaves a literal copy of this gadget.
    enum class Attachment
    {
        none,
        outward,
        inward,
        either
    };

    enum class GadgetKind
    {
        u,
        w,
        v,
        w_hat,
        t,
        w_prime,
        u_prime,
        v_prime,
        t_prime,
        basis_triangle,
        clause_chain,
        variable_chain
    };

    auto to_string(GadgetKind kind) -> std::string;
    auto parse_gadget_kind(std::string_view text) -> std::optional<GadgetKind>;

    struct Gadget
    {
        std::string name;
        Digraph graph;
        std::vector<std::string> labels;
        std::vector<Vertex> interface;
        PartialColoring pinned;
        InterfaceBehavior expected;

        /// Literal vertices that each absorb one clause arc in a bounded reduction.
        std::vector<Vertex> literal_copies;
        Attachment attachment = Attachment::none;
    };

    /**
     * Builds one gadget in isolation. `k` is the copy count for u_prime, v_prime and t_prime,
     * and the supply count for the chains; other kinds ignore it. Throws InvalidArgument for k == 0
     * where k matters.
     */
    auto build_gadget(GadgetKind kind, std::size_t k = 1) -> Gadget;

    /// The gadget set checked by verify-gadgets: every fixed gadget plus the bounded families at small k.
    auto standard_gadgets() -> std::vector<Gadget>;

    /**
     * Computes the gadget's behavior with the exact oracle, in the mode (and over the domain) of
     * gadget.expected. `pinned` fixes anchor vertices through singleton lists.
     */
    auto interface_behavior(const Gadget & gadget, const TargetGraph & h, const PartialColoring & pinned) -> InterfaceBehavior;

    struct SlackEntry
    {
        Vertex vertex;
        std::string label;
        std::size_t in_slack;
        std::size_t out_slack;
    };

    struct GadgetReport
    {
        std::string gadget;
        std::string target;
        InterfaceBehavior expected;
        InterfaceBehavior computed;
        bool behavior_matches = false;

        /// One entry per literal copy, against in/out degree 2.
        std::vector<SlackEntry> slack;
        bool degrees_ok = true;

        auto passed() const -> bool { return behavior_matches && degrees_ok; }
    };

    auto verify_gadget(const Gadget & gadget, const TargetGraph & h) -> GadgetReport;

    auto format_report(const GadgetReport & report) -> std::string;
    auto report_json(const std::vector<GadgetReport> & reports) -> std::string;

    struct SearchLimits
    {
        std::size_t max_vertices = 8;
        std::optional<DegreeStats> degree_bounds;
        std::uint64_t seed = 1;

        /// Random digraphs tried per vertex count once exhaustive search stops (above 4 vertices).
        std::size_t samples_per_size = 20000;
    };

    /**
     * Looks for a loopless digraph whose first `spec.arity` vertices, taken as the interface,
     * show exactly the behavior `spec`. Exhaustive up to 4 vertices, seeded random sampling above.
     */
    auto search_gadget(const InterfaceBehavior & spec, const SearchLimits & limits) -> std::optional<Gadget>;

    struct LiteralCopies
    {
        std::vector<Vertex> positive;
        std::vector<Vertex> negative;
    };

    struct Basis
    {
        Vertex zero, one, two;
    };

    /// Pieces the reductions are assembled from. Each appends vertices and arcs to a builder.
    namespace parts
    {
        auto a_variable(DigraphBuilder & b, std::string_view name) -> LiteralCopies;
        auto a_variable_bounded(DigraphBuilder & b, std::string_view name, std::size_t k) -> LiteralCopies;
        auto b_variable(DigraphBuilder & b, std::string_view name) -> LiteralCopies;
        auto b_variable_bounded(DigraphBuilder & b, std::string_view name, std::size_t k) -> LiteralCopies;
        auto c_variable(DigraphBuilder & b, std::string_view name, Vertex anchor) -> LiteralCopies;
        auto c_variable_bounded(DigraphBuilder & b, std::string_view name, Vertex anchor, std::size_t k) -> LiteralCopies;

        /// Returns the three clause-internal vertices.
        auto a_clause(DigraphBuilder & b, std::string_view name, std::array<Vertex, 3> literals) -> std::vector<Vertex>;
        auto b_clause(DigraphBuilder & b, std::string_view name, std::array<Vertex, 3> literals) -> std::vector<Vertex>;
        auto c_clause(DigraphBuilder & b, std::string_view name, std::array<Vertex, 3> literals, Vertex top) -> std::vector<Vertex>;

        auto basis_triangle(DigraphBuilder & b) -> Basis;

        /**
         * A chain of oriented K_{1,1,3} copies hanging off `root`, consecutive copies sharing one
         * degree-two vertex. All degree-two vertices share root's color in any 3-coloring. Returns
         * `count` of them that still have one free in-slot and one free out-slot.
         */
        auto supply_chain(DigraphBuilder & b, std::string_view name, Vertex root, std::size_t count) -> std::vector<Vertex>;
    }
}
