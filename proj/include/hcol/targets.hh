#pragma once

#include <hcol/digraph.hh>

#include <bit>
#include <cstddef>
#include <cstdint>
#include <iterator>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hcol
{
    using Color = std::uint32_t;

    /// A subset of the target's vertices, stored as a 64-bit mask.
    class ColorSet
    {
        private:
            std::uint64_t _bits = 0;

        public:
            static constexpr std::size_t capacity = 64;

            constexpr ColorSet() = default;
            constexpr explicit ColorSet(std::uint64_t bits) : _bits(bits) { }

            static auto full(std::size_t n) -> ColorSet
            {
                return ColorSet(n >= capacity ? ~std::uint64_t(0) : (std::uint64_t(1) << n) - 1);
            }

            static auto single(Color c) -> ColorSet { return ColorSet(std::uint64_t(1) << c); }

            auto bits() const -> std::uint64_t { return _bits; }
            auto contains(Color c) const -> bool { return c < capacity && ((_bits >> c) & 1); }
            auto insert(Color c) -> void { _bits |= std::uint64_t(1) << c; }
            auto erase(Color c) -> void { _bits &= ~(std::uint64_t(1) << c); }
            auto empty() const -> bool { return _bits == 0; }
            auto size() const -> std::size_t { return std::size_t(std::popcount(_bits)); }

            /// Smallest member; undefined on the empty set.
            auto first() const -> Color { return Color(std::countr_zero(_bits)); }

            auto operator& (ColorSet o) const -> ColorSet { return ColorSet(_bits & o._bits); }
            auto operator| (ColorSet o) const -> ColorSet { return ColorSet(_bits | o._bits); }
            auto operator&= (ColorSet o) -> ColorSet & { _bits &= o._bits; return *this; }
            auto operator|= (ColorSet o) -> ColorSet & { _bits |= o._bits; return *this; }
            auto operator== (const ColorSet &) const -> bool = default;

            class Iterator
            {
                private:
                    std::uint64_t _rest;

                public:
                    using iterator_category = std::forward_iterator_tag;
                    using value_type = Color;
                    using difference_type = std::ptrdiff_t;
                    using pointer = const Color *;
                    using reference = Color;

                    Iterator() : _rest(0) { }
                    explicit Iterator(std::uint64_t rest) : _rest(rest) { }
                    auto operator* () const -> Color { return Color(std::countr_zero(_rest)); }
                    auto operator++ () -> Iterator & { _rest &= _rest - 1; return *this; }
                    auto operator++ (int) -> Iterator { auto old = *this; ++*this; return old; }
                    auto operator== (const Iterator &) const -> bool = default;
            };

            auto begin() const -> Iterator { return Iterator(_bits); }
            auto end() const -> Iterator { return Iterator(0); }
    };

    /// L(v) for every input vertex v.
    using ColorLists = std::vector<ColorSet>;

    /// f(v) for every input vertex v; lexicographic comparison is the enumeration order.
    using Coloring = std::vector<Color>;

    using PartialColoring = std::map<Vertex, Color>;

    enum class TargetName
    {
        A,
        B,
        C
    };

    auto to_string(TargetName name) -> std::string;
    auto parse_target_name(std::string_view text) -> std::optional<TargetName>;

    /**
     * A target digraph H with its adjacency precomputed as color masks. At most 64 vertices.
     */
    class TargetGraph
    {
        private:
            Digraph _graph;
            std::string _name;
            std::vector<ColorSet> _out, _in;
            ColorSet _loops;

        public:
            explicit TargetGraph(Digraph graph, std::string name = "custom");

            auto graph() const -> const Digraph & { return _graph; }
            auto name() const -> const std::string & { return _name; }
            auto size() const -> std::size_t { return _graph.size(); }
            auto all() const -> ColorSet { return ColorSet::full(size()); }

            auto out_set(Color c) const -> ColorSet { return _out[c]; }
            auto in_set(Color c) const -> ColorSet { return _in[c]; }
            auto loops() const -> ColorSet { return _loops; }
            auto has_arc(Color x, Color y) const -> bool { return _out[x].contains(y); }

            /// Union of out-neighbourhoods over `from`.
            auto successors(ColorSet from) const -> ColorSet;
            /// Union of in-neighbourhoods over `to`.
            auto predecessors(ColorSet to) const -> ColorSet;
    };

    auto build_target(TargetName name) -> TargetGraph;

    auto reverse(const TargetGraph & h) -> TargetGraph;

    /// Every vertex of G may take every vertex of H.
    auto full_lists(std::size_t n, const TargetGraph & h) -> ColorLists;

    /// Throws InvalidArgument unless there is one list per vertex of g and every color is a vertex of h.
    auto validate_lists(const ColorLists & lists, const Digraph & g, const TargetGraph & h) -> void;

    /// Throws InvalidArgument if f is not total on g or uses a color outside h.
    auto is_homomorphism(const Digraph & g, const TargetGraph & h, const Coloring & f) -> bool;

    auto respects_lists(const Coloring & f, const ColorLists & lists) -> bool;

    /**
     * List file text: one line `v: c1 c2 ...` per vertex, '#' comments. Vertices that are not
     * mentioned get the full list.
     */
    auto parse_lists(std::string_view text, std::size_t n, const TargetGraph & h) -> ColorLists;
    auto format_lists(const ColorLists & lists) -> std::string;
}
