#include <hcol/cnf.hh>
#include <hcol/errors.hh>

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

    auto random_formula(std::mt19937_64 & rng, std::uint32_t vars, std::size_t clauses) -> Formula
    {
        std::uniform_int_distribution<int> v(1, int(vars));
        std::vector<Clause> cs;
        for (std::size_t i = 0 ; i < clauses ; ++i)
            cs.push_back(clause(v(rng) * (rng() % 2 ? 1 : -1), v(rng) * (rng() % 2 ? 1 : -1), v(rng) * (rng() % 2 ? 1 : -1)));
        return Formula(vars, cs);
    }
}

TEST_SUITE("cnf")
{
    TEST_CASE("parse_dimacs examples")
    {
        auto f = parse_dimacs("p cnf 3 1\n1 2 -3 0\n");
        CHECK(f.variable_count() == 3);
        CHECK(f.clauses() == std::vector<Clause>{ clause(1, 2, -3) });

        auto repeated = parse_dimacs("p cnf 1 1\n1 1 1 0");
        CHECK(repeated.clauses() == std::vector<Clause>{ clause(1, 1, 1) });

        CHECK_THROWS_AS(parse_dimacs("p cnf 2 1\n1 2 0\n"), FormatError);
    }

    TEST_CASE("parse_dimacs errors carry line numbers")
    {
        auto line_of = [] (const char * text) -> std::size_t {
            try {
                parse_dimacs(text);
            }
            catch (const FormatError & e) {
                return e.line();
            }
            return 999;
        };
        CHECK(line_of("c hi\np cnf 2 1\n1 2 0\n") == 3);
        CHECK(line_of("p cnf 2 1\n1 2 3 0\n") == 2);
        CHECK(line_of("p cnf 2 1\n1 x 2 0\n") == 2);
        CHECK(line_of("1 2 3 0\n") == 1);
        CHECK(line_of("p cnf 3 2\n1 2 3 0\n") == 0);
        CHECK(line_of("p cnf 3 1\n1 2 3\n") == 2);
        CHECK(line_of("p dnf 3 1\n") == 1);
    }

    TEST_CASE("clauses may span lines and comments are skipped")
    {
        auto f = parse_dimacs("c start\np cnf 3 2\n1 -2\n3 0 -1 2\nc middle\n3 0\n");
        CHECK(f.clauses() == std::vector<Clause>{ clause(1, -2, 3), clause(-1, 2, 3) });
        CHECK(parse_dimacs(format_dimacs(f)) == f);
    }

    TEST_CASE("evaluate examples")
    {
        Formula f(3, { clause(1, 2, -3) });
        CHECK(evaluate(f, { true, false, true }, Semantics::three_sat));
        CHECK(evaluate(f, { true, false, true }, Semantics::one_in_three));
        CHECK_FALSE(evaluate(Formula(1, { clause(1, 1, 1) }), { true }, Semantics::one_in_three));
        CHECK_FALSE(evaluate(Formula(3, { clause(1, 2, 3) }), { false, false, false }, Semantics::three_sat));
        CHECK_THROWS_AS(evaluate(f, { true }, Semantics::three_sat), InvalidArgument);
    }

    TEST_CASE("brute_force_sat examples")
    {
        CHECK(brute_force_sat(Formula(3, { clause(1, 2, 3) }), Semantics::one_in_three) == Assignment{ true, false, false });
        CHECK_FALSE(brute_force_sat(Formula(1, { clause(1, 1, 1) }), Semantics::one_in_three));
        CHECK(brute_force_sat(Formula(0, { }), Semantics::three_sat) == Assignment{ });
        CHECK_THROWS_AS(brute_force_sat(Formula(25, { }), Semantics::three_sat), PreconditionError);
    }

    TEST_CASE("literals outside the variable range")
    {
        CHECK_THROWS_AS(Formula(2, { clause(1, 2, 3) }), InvalidArgument);
    }

    TEST_CASE("brute force against an independent enumeration")
    {
        std::mt19937_64 rng(53);
        for (int i = 0 ; i < 300 ; ++i) {
            auto f = random_formula(rng, 1 + rng() % 6, rng() % 8);
            for (auto one : { false, true }) {
                auto semantics = one ? Semantics::one_in_three : Semantics::three_sat;
                auto all = oracle::satisfying(f, one);
                auto found = brute_force_sat(f, semantics);
                CHECK(found.has_value() == ! all.empty());
                if (found) {
                    CHECK(evaluate(f, *found, semantics));
                    // independent enumeration counts false as 0, so the first true-first assignment is the last one
                    CHECK(*found == all.back());
                }
                for (auto & a : all)
                    if (one)
                        CHECK(evaluate(f, a, Semantics::three_sat));
            }
        }
    }

    TEST_CASE("semantics names")
    {
        CHECK(parse_semantics("1in3") == Semantics::one_in_three);
        CHECK(parse_semantics("3sat") == Semantics::three_sat);
        CHECK_FALSE(parse_semantics("2sat"));
        CHECK(to_string(Semantics::one_in_three) == "1in3");
    }
}
