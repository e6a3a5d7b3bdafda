#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hcol
{
    using Vertex = std::uint32_t;
    using ArcId = std::uint32_t;

    struct Arc
    {
        Vertex from;
        Vertex to;

        auto operator<=> (const Arc &) const = default;
    };

    /**
     * A finite digraph on vertices 0..n-1. Arcs are kept in insertion order, which
     * gives every arc a stable id. Loops are allowed, parallel arcs are not.
     * Immutable once constructed.
     */
    class Digraph
    {
        private:
            std::size_t _size = 0;
            std::vector<Arc> _arcs;
            std::vector<std::vector<Vertex>> _out, _in;
            std::vector<std::vector<ArcId>> _incident;

        public:
            Digraph() = default;
            explicit Digraph(std::size_t n);

            /// Throws InvalidArgument on an endpoint >= n or a repeated arc.
            Digraph(std::size_t n, std::vector<Arc> arcs);

            auto size() const -> std::size_t { return _size; }
            auto arc_count() const -> std::size_t { return _arcs.size(); }
            auto arcs() const -> std::span<const Arc> { return _arcs; }
            auto arc(ArcId id) const -> const Arc & { return _arcs[id]; }

            auto out_neighbours(Vertex v) const -> std::span<const Vertex> { return _out[v]; }
            auto in_neighbours(Vertex v) const -> std::span<const Vertex> { return _in[v]; }
            auto out_degree(Vertex v) const -> std::size_t { return _out[v].size(); }
            auto in_degree(Vertex v) const -> std::size_t { return _in[v].size(); }

            /// Ids of every arc with v as an endpoint; a loop appears once.
            auto incident_arcs(Vertex v) const -> std::span<const ArcId> { return _incident[v]; }

            auto has_arc(Vertex u, Vertex v) const -> bool;

            /// Same vertex count and same arc set, ignoring arc order.
            friend auto operator== (const Digraph & a, const Digraph & b) -> bool;
    };

    /// Accumulates labelled vertices and arcs, then freezes them into a Digraph.
    class DigraphBuilder
    {
        private:
            std::vector<std::string> _labels;
            std::vector<Arc> _arcs;

        public:
            auto add_vertex(std::string label = "") -> Vertex;
            auto add_arc(Vertex from, Vertex to) -> void;

            auto size() const -> std::size_t { return _labels.size(); }
            auto labels() const -> const std::vector<std::string> & { return _labels; }
            auto build() const -> Digraph;
    };

    struct DegreeStats
    {
        std::size_t max_out = 0;
        std::size_t max_in = 0;

        auto operator<=> (const DegreeStats &) const = default;

        /// Both maxima at most those of `bound`.
        auto within(const DegreeStats & bound) const -> bool
        {
            return max_out <= bound.max_out && max_in <= bound.max_in;
        }
    };

    enum class ShapeKind
    {
        tree,
        cycle_with_trees,
        unsupported
    };

    struct ComponentShape
    {
        ShapeKind kind = ShapeKind::unsupported;

        /// For cycle_with_trees: the directed cycle, starting at its smallest vertex, in arc order.
        std::vector<Vertex> cycle;
    };

    auto degree_stats(const Digraph & g) -> DegreeStats;

    /// Connected components of the underlying undirected graph, each sorted, ordered by smallest member.
    auto weak_components(const Digraph & g) -> std::vector<std::vector<Vertex>>;

    /**
     * Classifies one weak component of g against a degree bound that has max_in <= 1 or
     * max_out <= 1. A component inside the bound with |C|-1 arcs is a tree; with |C| arcs its
     * single cycle is necessarily directed and is reported. Anything else is unsupported.
     */
    auto classify_component(const Digraph & g, std::span<const Vertex> component, DegreeStats bounds) -> ComponentShape;

    auto reverse(const Digraph & g) -> Digraph;

    /// Maximum number of distinct neighbours in the underlying simple graph; a digon is one edge, loops are ignored.
    auto underlying_undirected_max_degree(const Digraph & g) -> std::size_t;

    struct LabelledDigraph
    {
        Digraph graph;
        std::vector<std::string> labels;
    };

    /**
     * Edge-list text: first non-comment line `n m`, then m lines `u v`. Lines whose first
     * non-blank character is '#' are comments, except that `#label <v> <text>` attaches a label.
     */
    auto parse_edge_list(std::string_view text) -> LabelledDigraph;
    auto format_edge_list(const Digraph & g, std::span<const std::string> labels = {}) -> std::string;

    auto format_dot(const Digraph & g, std::span<const std::string> labels = {}, std::string_view name = "G") -> std::string;

    /// Reads the subset of DOT that format_dot writes: numeric node ids, `label` attributes, `a -> b` edges.
    auto parse_dot(std::string_view text) -> LabelledDigraph;

    auto read_file(const std::string & path) -> std::string;
    auto write_file(const std::string & path, std::string_view contents) -> void;
}
