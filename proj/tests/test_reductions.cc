#include <hcol/errors.hh>
#include <hcol/exact_oracle.hh>
#include <hcol/reductions.hh>

#include "oracles.hh"

#include <doctest.h>

#include <random>

using namespace hcol;

namespace
{
    auto lit(int d) -> Literal
    {
        return { std::uint32_t(d < 0 ? -d : d), d > 0 };
    }

    auto clause(int a, int b, int c) -> Clause
    {
        return { lit(a), lit(b), lit(c) };
    }

    auto example() -> Formula
    {
        return Formula(3, { clause(1, 2, -3) });
    }

    auto uncapped() -> OracleOptions
    {
        return { .vertex_cap = std::nullopt };
    }

    auto colorable(const ReductionInstance & instance) -> std::optional<Coloring>
    {
        auto h = build_target(instance.target);
        return find_homomorphism(instance.graph, h, full_lists(instance.graph.size(), h), uncapped());
    }

    const std::vector<std::pair<TargetName, Variant>> all_six{
        { TargetName::A, Variant::unbounded }, { TargetName::A, Variant::bounded },
        { TargetName::B, Variant::unbounded }, { TargetName::B, Variant::bounded },
        { TargetName::C, Variant::unbounded }, { TargetName::C, Variant::bounded } };
}

TEST_SUITE("reductions")
{
    TEST_CASE("unbounded A size")
    {
        auto instance = reduce(example(), TargetName::A, Variant::unbounded);
        CHECK(instance.graph.size() == 9);
        CHECK(instance.graph.arc_count() == 12);
        CHECK(instance.clause_gadgets.at(0).size() == 3);
    }

    TEST_CASE("bounded degrees")
    {
        CHECK(degree_stats(reduce(example(), TargetName::A, Variant::bounded).graph).within({ 2, 2 }));
        auto c = reduce(example(), TargetName::C, Variant::bounded);
        CHECK(degree_stats(c.graph).within({ 2, 2 }));
        CHECK(underlying_undirected_max_degree(c.graph) <= 4);
    }

    TEST_CASE("extract_assignment examples")
    {
        Formula f(3, { clause(1, 2, 3) });
        auto a = reduce(f, TargetName::A, Variant::unbounded);
        auto h = build_target(TargetName::A);
        auto lists = full_lists(a.graph.size(), h);
        lists[a.variables[0].positive[0]] = ColorSet::single(1);
        lists[a.variables[1].positive[0]] = ColorSet::single(0);
        lists[a.variables[2].positive[0]] = ColorSet::single(0);
        auto coloring = find_homomorphism(a.graph, h, lists);
        REQUIRE(coloring);
        auto assignment = extract_assignment(a, *coloring);
        CHECK(assignment == Assignment{ true, false, false });
        CHECK(evaluate(f, assignment, Semantics::one_in_three));

        auto b = reduce(f, TargetName::B, Variant::unbounded);
        auto hb = build_target(TargetName::B);
        for (auto & col : enumerate_homomorphisms(b.graph, hb, full_lists(b.graph.size(), hb))) {
            auto & l = b.clause_literals[0];
            int zeros = (col[l[0]] == 0) + (col[l[1]] == 0) + (col[l[2]] == 0);
            CHECK(zeros == 1);
        }

        auto c = reduce(f, TargetName::C, Variant::bounded);
        auto hc = build_target(TargetName::C);
        auto cl = full_lists(c.graph.size(), hc);
        for (auto & [v, col] : c.pinned)
            cl[v] = ColorSet::single(col);
        for (auto v : c.clause_literals[0])
            cl[v] = ColorSet::single(0);
        CHECK_FALSE(find_homomorphism(c.graph, hc, cl, uncapped()));

        CHECK_THROWS_AS(extract_assignment(a, Coloring(a.graph.size(), 0)), InvalidArgument);
    }

    TEST_CASE("C colorings are normalized through the basis")
    {
        Formula f(3, { clause(1, 2, 3) });
        auto c = reduce(f, TargetName::C, Variant::unbounded);
        auto coloring = extend_assignment(c, { false, true, false });
        for (auto & col : coloring)
            col = (col + 1) % 3;
        CHECK(extract_assignment(c, coloring) == Assignment{ false, true, false });
    }

    TEST_CASE("extend_assignment examples")
    {
        Formula f(3, { clause(1, 2, 3) });
        auto a = reduce(f, TargetName::A, Variant::unbounded);
        auto coloring = extend_assignment(a, { true, false, false });
        auto h = build_target(TargetName::A);
        CHECK(is_homomorphism(a.graph, h, coloring));
        auto & cycle = a.clause_gadgets[0];
        std::set<std::vector<Color>> rotations{ { 0, 2, 1 }, { 2, 1, 0 }, { 1, 0, 2 } };
        CHECK(rotations.contains({ coloring[cycle[0]], coloring[cycle[1]], coloring[cycle[2]] }));

        auto c = reduce(f, TargetName::C, Variant::bounded);
        auto cc = extend_assignment(c, { true, true, false });
        CHECK(cc[c.basis->zero] == 0);
        CHECK(cc[c.basis->one] == 1);
        CHECK(cc[c.basis->two] == 2);

        CHECK_THROWS_AS(extend_assignment(a, { true, true, false }), InvalidArgument);
    }

    TEST_CASE("validate_instance")
    {
        for (auto [t, v] : all_six)
            CHECK(validate_instance(reduce(example(), t, v)).passed());

        auto instance = reduce(example(), TargetName::A, Variant::bounded);
        auto arcs = std::vector<Arc>(instance.graph.arcs().begin(), instance.graph.arcs().end());
        auto x = instance.clause_literals[0][0];
        Vertex extra = Vertex(instance.graph.size());
        arcs.push_back({ x, extra });
        instance.graph = Digraph(instance.graph.size() + 1, arcs);
        auto report = validate_instance(instance);
        CHECK_FALSE(report.degrees_ok);
        CHECK(report.max_out_vertex == x);

        Formula five(2, { clause(1, 1, 2), clause(1, 1, 1) });
        auto busy = validate_instance(reduce(five, TargetName::A, Variant::unbounded));
        CHECK(busy.degrees.max_out == 6);
        CHECK(busy.max_out_label == "x1");
        CHECK(busy.passed());
    }

    TEST_CASE("equivalence and round trips on random formulas")
    {
        std::mt19937_64 rng(59);
        for (int i = 0 ; i < 40 ; ++i) {
            std::uint32_t vars = 1 + rng() % 4;
            std::uniform_int_distribution<int> v(1, int(vars));
            std::vector<Clause> cs;
            for (std::size_t j = rng() % 4 ; j > 0 ; --j)
                cs.push_back(clause(v(rng) * (rng() % 2 ? 1 : -1), v(rng) * (rng() % 2 ? 1 : -1), v(rng) * (rng() % 2 ? 1 : -1)));
            Formula f(vars, cs);
            for (auto [t, variant] : all_six) {
                auto instance = reduce(f, t, variant);
                auto sat = brute_force_sat(f, semantics_for(t));
                auto coloring = colorable(instance);
                INFO(format_dimacs(f), to_string(t), " ", to_string(variant));
                REQUIRE(sat.has_value() == coloring.has_value());
                if (coloring)
                    CHECK(evaluate(f, extract_assignment(instance, *coloring), semantics_for(t)));
                for (auto & a : oracle::satisfying(f, t != TargetName::C))
                    CHECK(is_homomorphism(instance.graph, build_target(t), extend_assignment(instance, a)));
            }
        }
    }

    TEST_CASE("variables without occurrences still get a gadget")
    {
        Formula f(3, { clause(1, 1, 1) });
        for (auto [t, v] : all_six) {
            auto instance = reduce(f, t, v);
            CHECK(instance.variables.size() == 3);
            CHECK(instance.variables[2].positive.size() == 1);
        }
    }

    TEST_CASE("bounded copies are consumed in clause order")
    {
        Formula f(2, { clause(1, 2, 2), clause(1, -2, 1) });
        auto instance = reduce(f, TargetName::B, Variant::bounded);
        auto & x1 = instance.variables[0].positive;
        REQUIRE(x1.size() == 3);
        CHECK(instance.clause_literals[0][0] == x1[0]);
        CHECK(instance.clause_literals[1][0] == x1[1]);
        CHECK(instance.clause_literals[1][2] == x1[2]);
    }

    TEST_CASE("size grows linearly")
    {
        for (auto [t, v] : all_six) {
            std::vector<std::size_t> sizes;
            for (std::uint32_t m = 1 ; m <= 6 ; ++m) {
                std::vector<Clause> cs;
                for (std::uint32_t j = 0 ; j < m ; ++j)
                    cs.push_back(clause(int(j + 1), -int(j + 2), int(j + 3)));
                sizes.push_back(reduce(Formula(m + 2, cs), t, v).graph.size());
            }
            for (std::size_t i = 1 ; i < sizes.size() ; ++i) {
                CHECK(sizes[i] > sizes[i - 1]);
                auto clauses = i + 1, occurrences = 3 * clauses;
                CHECK(sizes[i] <= 8 * (clauses + occurrences) + 12);
            }
        }
    }

    TEST_CASE("meta json")
    {
        auto text = meta_json(reduce(example(), TargetName::C, Variant::bounded));
        CHECK(text.starts_with("{\n  \"format\": \"hcol-reduction-meta\",\n  \"version\": 1,"));
        CHECK(text.find("\"literal\": -3") != std::string::npos);
        CHECK(meta_json(reduce(example(), TargetName::C, Variant::bounded)) == text);
    }
}
