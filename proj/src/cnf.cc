#include <hcol/cnf.hh>
#include <hcol/errors.hh>

#include <charconv>
#include <sstream>

using std::size_t;
using std::string;
using std::string_view;
using std::vector;

namespace hcol
{
    Formula::Formula(std::uint32_t variables, vector<Clause> clauses) :
        _variables(variables),
        _clauses(std::move(clauses))
    {
        for (auto & clause : _clauses)
            for (auto & l : clause)
                if (l.variable == 0 || l.variable > _variables)
                    throw InvalidArgument("literal " + std::to_string(l.dimacs()) + " outside variables 1.." + std::to_string(_variables));
    }

    auto Formula::occurrences(std::uint32_t variable, bool positive) const -> size_t
    {
        size_t count = 0;
        for (auto & clause : _clauses)
            for (auto & l : clause)
                if (l.variable == variable && l.positive == positive)
                    ++count;
        return count;
    }

    auto to_string(Semantics s) -> string
    {
        return s == Semantics::three_sat ? "3sat" : "1in3";
    }

    auto parse_semantics(string_view text) -> std::optional<Semantics>
    {
        if (text == "3sat")
            return Semantics::three_sat;
        if (text == "1in3")
            return Semantics::one_in_three;
        return std::nullopt;
    }

    auto parse_dimacs(string_view text) -> Formula
    {
        std::optional<long long> declared_vars, declared_clauses;
        vector<Clause> clauses;
        vector<Literal> pending;
        size_t pending_line = 0;

        size_t line_no = 0;
        size_t pos = 0;
        while (pos < text.size()) {
            auto end = text.find('\n', pos);
            if (end == string_view::npos)
                end = text.size();
            string line(text.substr(pos, end - pos));
            pos = end + 1;
            ++line_no;

            auto first = line.find_first_not_of(" \t\r");
            if (first == string::npos || line[first] == 'c')
                continue;
            if (line[first] == '%')
                break;

            std::istringstream in(line);
            if (line[first] == 'p') {
                if (declared_vars)
                    throw FormatError(line_no, "second problem line");
                string p, kind, extra;
                long long n = -1, m = -1;
                if (! (in >> p >> kind >> n >> m) || p != "p" || kind != "cnf" || n < 0 || m < 0 || (in >> extra))
                    throw FormatError(line_no, "expected 'p cnf <variables> <clauses>'");
                declared_vars = n;
                declared_clauses = m;
                continue;
            }

            if (! declared_vars)
                throw FormatError(line_no, "clause before the 'p cnf' line");

            string token;
            while (in >> token) {
                long long value = 0;
                auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
                if (ec != std::errc() || ptr != token.data() + token.size())
                    throw FormatError(line_no, "expected an integer literal, got '" + token + "'");

                if (value == 0) {
                    if (pending.size() != 3)
                        throw FormatError(pending_line ? pending_line : line_no,
                                "clause has " + std::to_string(pending.size()) + " literals, expected exactly 3");
                    clauses.push_back({ pending[0], pending[1], pending[2] });
                    pending.clear();
                    pending_line = 0;
                    continue;
                }

                auto variable = value < 0 ? -value : value;
                if (variable > *declared_vars)
                    throw FormatError(line_no, "literal " + token + " exceeds the declared " +
                            std::to_string(*declared_vars) + " variables");
                if (pending.empty())
                    pending_line = line_no;
                pending.push_back({ std::uint32_t(variable), value > 0 });
            }
        }

        if (! declared_vars)
            throw FormatError(0, "missing 'p cnf' line");
        if (! pending.empty())
            throw FormatError(pending_line, "last clause is not terminated by 0");
        if (clauses.size() != size_t(*declared_clauses))
            throw FormatError(0, "header declares " + std::to_string(*declared_clauses) + " clauses, found " +
                    std::to_string(clauses.size()));

        return Formula(std::uint32_t(*declared_vars), std::move(clauses));
    }

    auto format_dimacs(const Formula & formula) -> string
    {
        std::ostringstream out;
        out << "p cnf " << formula.variable_count() << ' ' << formula.clauses().size() << '\n';
        for (auto & clause : formula.clauses())
            out << clause[0].dimacs() << ' ' << clause[1].dimacs() << ' ' << clause[2].dimacs() << " 0\n";
        return out.str();
    }

    auto evaluate(const Formula & formula, const Assignment & assignment, Semantics semantics) -> bool
    {
        if (assignment.size() != formula.variable_count())
            throw InvalidArgument("assignment covers " + std::to_string(assignment.size()) + " of " +
                    std::to_string(formula.variable_count()) + " variables");

        for (auto & clause : formula.clauses()) {
            int true_occurrences = 0;
            for (auto & l : clause)
                if (assignment[l.variable - 1] == l.positive)
                    ++true_occurrences;
            if (semantics == Semantics::three_sat ? true_occurrences == 0 : true_occurrences != 1)
                return false;
        }
        return true;
    }

    auto brute_force_sat(const Formula & formula, Semantics semantics) -> std::optional<Assignment>
    {
        auto n = formula.variable_count();
        if (n > 24)
            throw PreconditionError("brute force is limited to 24 variables, formula has " + std::to_string(n));

        Assignment a(n);
        for (std::uint64_t mask = 0 ; mask < (std::uint64_t(1) << n) ; ++mask) {
            // variable 1 is the most significant position; a 0 bit means true
            for (std::uint32_t i = 0 ; i < n ; ++i)
                a[i] = ((mask >> (n - 1 - i)) & 1) == 0;
            if (evaluate(formula, a, semantics))
                return a;
        }
        return std::nullopt;
    }
}
