#include <hcol/errors.hh>
#include <hcol/exact_oracle.hh>
#include <hcol/targets.hh>

#include "oracles.hh"

#include <doctest.h>

#include <random>

using namespace hcol;

namespace
{
    auto has(const Digraph & h, Vertex u, Vertex v) -> bool
    {
        return h.has_arc(u, v);
    }

    /// Colorings of the directed 3-cycle 0 -> 1 -> 2 -> 0.
    auto triangle_colorings(const Digraph & h) -> std::set<std::vector<unsigned>>
    {
        auto all = oracle::naive_homomorphisms(Digraph(3, { { 0, 1 }, { 1, 2 }, { 2, 0 } }), h, oracle::all_lists(3, 3));
        return { all.begin(), all.end() };
    }

    auto rotations_of_021() -> std::set<std::vector<unsigned>>
    {
        return { { 0, 2, 1 }, { 2, 1, 0 }, { 1, 0, 2 } };
    }

    auto loopless(const Digraph & h) -> bool
    {
        for (Vertex v = 0 ; v < h.size() ; ++v)
            if (h.has_arc(v, v))
                return false;
        return true;
    }

    auto a_checklist(const Digraph & h) -> bool
    {
        int digons = 0;
        for (Vertex u = 0 ; u < 3 ; ++u)
            for (Vertex v = u + 1 ; v < 3 ; ++v)
                digons += has(h, u, v) && has(h, v, u);
        return loopless(h) && digons == 1 && has(h, 0, 1) && has(h, 1, 0) &&
            h.out_degree(1) == 1 && triangle_colorings(h) == rotations_of_021();
    }

    auto b_checklist(const Digraph & h) -> bool
    {
        return loopless(h) && ! has(h, 2, 0) && has(h, 0, 2) && has(h, 1, 2) && h.out_degree(2) == 1 &&
            triangle_colorings(h) == rotations_of_021();
    }
}

TEST_SUITE("targets")
{
    TEST_CASE("fixed arc sets")
    {
        CHECK(build_target(TargetName::C).graph() == Digraph(3, { { 0, 1 }, { 1, 0 }, { 0, 2 }, { 2, 0 }, { 1, 2 }, { 2, 1 } }));
        CHECK(build_target(TargetName::A).graph() == Digraph(3, { { 0, 1 }, { 1, 0 }, { 0, 2 }, { 2, 1 } }));
        CHECK(build_target(TargetName::B).graph() == Digraph(3, { { 0, 1 }, { 1, 0 }, { 0, 2 }, { 1, 2 }, { 2, 1 } }));
    }

    TEST_CASE("constraint search pins A and accepts B")
    {
        std::vector<Digraph> as, bs;
        oracle::every_digraph(3, [&] (const Digraph & h) {
            if (a_checklist(h))
                as.push_back(h);
            if (b_checklist(h))
                bs.push_back(h);
        });
        REQUIRE(as.size() == 1);
        CHECK(as.front() == build_target(TargetName::A).graph());

        bool listed = false;
        for (auto & b : bs)
            listed = listed || b == build_target(TargetName::B).graph();
        CHECK(listed);
        CHECK(bs.size() == 2);
        for (auto & b : bs)
            MESSAGE("B candidate: " << format_edge_list(b));
    }

    TEST_CASE("is_homomorphism")
    {
        auto c = build_target(TargetName::C);
        auto a = build_target(TargetName::A);
        auto digon = Digraph(2, { { 0, 1 }, { 1, 0 } });
        CHECK(is_homomorphism(c.graph(), c, { 0, 1, 2 }));
        CHECK(is_homomorphism(digon, a, { 0, 1 }));
        CHECK_FALSE(is_homomorphism(digon, a, { 0, 0 }));
        CHECK_THROWS_AS(is_homomorphism(digon, a, { 0 }), InvalidArgument);
        CHECK_THROWS_AS(is_homomorphism(digon, a, { 0, 3 }), InvalidArgument);
    }

    TEST_CASE("respects_lists")
    {
        auto c = build_target(TargetName::C);
        CHECK(respects_lists({ 0, 2, 1 }, full_lists(3, c)));
        CHECK(respects_lists({ 0, 2 }, { ColorSet::single(0), ColorSet::single(2) }));
        CHECK_FALSE(respects_lists({ 0, 2 }, { ColorSet::single(0), ColorSet() }));
    }

    TEST_CASE("homomorphisms survive reversing both sides")
    {
        std::mt19937_64 rng(3);
        for (auto name : { TargetName::A, TargetName::B, TargetName::C }) {
            auto h = build_target(name);
            for (int i = 0 ; i < 30 ; ++i) {
                auto g = oracle::random_digraph(rng, 5, 0.25);
                std::uniform_int_distribution<Color> color(0, 2);
                Coloring f(5);
                for (auto & c : f)
                    c = color(rng);
                CHECK(is_homomorphism(g, h, f) == is_homomorphism(reverse(g), reverse(h), f));
            }
        }
    }

    TEST_CASE("C-coloring is undirected 3-coloring")
    {
        std::mt19937_64 rng(5);
        auto c = build_target(TargetName::C);
        for (int i = 0 ; i < 200 ; ++i) {
            std::uniform_int_distribution<std::size_t> size(1, 8);
            auto g = oracle::random_digraph(rng, size(rng), 0.35);
            CHECK(exists_homomorphism(g, c, full_lists(g.size(), c)) == oracle::undirected_three_colorable(g));
        }
    }

    TEST_CASE("list files")
    {
        auto c = build_target(TargetName::C);
        auto lists = parse_lists("# pins\n0: 1\n2: 0 2\n", 3, c);
        CHECK(lists[0] == ColorSet::single(1));
        CHECK(lists[1] == c.all());
        CHECK(format_lists(lists) == "0: 1\n1: 0 1 2\n2: 0 2\n");
        CHECK(parse_lists(format_lists(lists), 3, c) == lists);
        CHECK_THROWS_AS(parse_lists("0: 3\n", 3, c), FormatError);
        CHECK_THROWS_AS(parse_lists("0: 1\n0: 2\n", 3, c), FormatError);
        CHECK_THROWS_AS(parse_lists("5: 1\n", 3, c), FormatError);
        CHECK(parse_lists("1:\n", 3, c)[1].empty());
    }

    TEST_CASE("names")
    {
        CHECK(parse_target_name("B") == TargetName::B);
        CHECK_FALSE(parse_target_name("D"));
        CHECK(to_string(TargetName::C) == "C");
        CHECK_THROWS_AS(TargetGraph(Digraph(65)), InvalidArgument);
    }
}
