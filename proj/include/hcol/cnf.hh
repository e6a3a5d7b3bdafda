#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hcol
{
    struct Literal
    {
        std::uint32_t variable = 1;   // 1-based
        bool positive = true;

        auto operator<=> (const Literal &) const = default;

        /// DIMACS form: +v or -v.
        auto dimacs() const -> int { return positive ? int(variable) : -int(variable); }
    };

    using Clause = std::array<Literal, 3>;

    /// A 3-CNF formula. Every clause has exactly three literal occurrences, repeats allowed.
    class Formula
    {
        private:
            std::uint32_t _variables = 0;
            std::vector<Clause> _clauses;

        public:
            Formula() = default;

            /// Throws InvalidArgument if a literal names variable 0 or one above `variables`.
            Formula(std::uint32_t variables, std::vector<Clause> clauses);

            auto variable_count() const -> std::uint32_t { return _variables; }
            auto clauses() const -> const std::vector<Clause> & { return _clauses; }

            /// Occurrences of the literal (variable, positive) across all clauses.
            auto occurrences(std::uint32_t variable, bool positive) const -> std::size_t;

            auto operator== (const Formula &) const -> bool = default;
    };

    enum class Semantics
    {
        three_sat,
        one_in_three
    };

    auto to_string(Semantics s) -> std::string;
    auto parse_semantics(std::string_view text) -> std::optional<Semantics>;

    /// Truth value of variable i stored at index i-1.
    using Assignment = std::vector<bool>;

    /// Strict DIMACS CNF: `c` comments, one `p cnf n m` header, 0-terminated clauses of exactly three literals.
    auto parse_dimacs(std::string_view text) -> Formula;
    auto format_dimacs(const Formula & formula) -> std::string;

    /**
     * three_sat: every clause has a true literal. one_in_three: every clause has exactly one
     * true literal occurrence, so (x or x or y) with x true counts x twice.
     * Throws InvalidArgument if the assignment does not cover every variable.
     */
    auto evaluate(const Formula & formula, const Assignment & assignment, Semantics semantics) -> bool;

    /**
     * First satisfying assignment in lexicographic order with true before false, found by
     * exhaustive enumeration. Throws PreconditionError above 24 variables.
     */
    auto brute_force_sat(const Formula & formula, Semantics semantics) -> std::optional<Assignment>;
}
