#include <hcol/errors.hh>
#include <hcol/exact_oracle.hh>
#include <hcol/reductions.hh>

#include <json.hpp>

#include <algorithm>
#include <set>

using std::size_t;
using std::string;
using std::vector;

namespace hcol
{
    auto to_string(Variant v) -> string
    {
        return v == Variant::bounded ? "bounded" : "unbounded";
    }

    auto semantics_for(TargetName target) -> Semantics
    {
        return target == TargetName::C ? Semantics::three_sat : Semantics::one_in_three;
    }

    namespace
    {
        auto true_color(TargetName target) -> Color
        {
            return target == TargetName::B ? 0 : 1;
        }

        auto false_color(TargetName target) -> Color
        {
            return target == TargetName::B ? 1 : 0;
        }

        auto copies_needed(const Formula & formula, std::uint32_t variable) -> size_t
        {
            return std::max<size_t>({ formula.occurrences(variable, true), formula.occurrences(variable, false), 1 });
        }
    }

    auto reduce(const Formula & formula, TargetName target, Variant variant) -> ReductionInstance
    {
        ReductionInstance instance;
        instance.formula = formula;
        instance.target = target;
        instance.variant = variant;

        bool bounded = variant == Variant::bounded;
        auto n = formula.variable_count();
        auto & clauses = formula.clauses();
        DigraphBuilder b;

        vector<Vertex> anchors, tops;
        if (target == TargetName::C) {
            auto basis = parts::basis_triangle(b);
            instance.basis = basis;
            instance.pinned = { { basis.zero, 0 }, { basis.one, 1 }, { basis.two, 2 } };
            if (bounded) {
                anchors = parts::supply_chain(b, "variables", basis.two, n);
                tops = parts::supply_chain(b, "clauses", basis.one, clauses.size());
            }
            else {
                anchors.assign(n, basis.two);
                tops.assign(clauses.size(), basis.one);
            }
        }

        for (std::uint32_t i = 1 ; i <= n ; ++i) {
            auto name = "x" + std::to_string(i);
            auto k = copies_needed(formula, i);
            switch (target) {
                case TargetName::A:
                    instance.variables.push_back(bounded ? parts::a_variable_bounded(b, name, k) : parts::a_variable(b, name));
                    break;
                case TargetName::B:
                    instance.variables.push_back(bounded ? parts::b_variable_bounded(b, name, k) : parts::b_variable(b, name));
                    break;
                case TargetName::C:
                    instance.variables.push_back(bounded ? parts::c_variable_bounded(b, name, anchors[i - 1], k)
                            : parts::c_variable(b, name, anchors[i - 1]));
                    break;
            }
        }

        vector<size_t> next_positive(n, 0), next_negative(n, 0);
        for (size_t j = 0 ; j < clauses.size() ; ++j) {
            std::array<Vertex, 3> literals;
            for (size_t p = 0 ; p < 3 ; ++p) {
                auto & l = clauses[j][p];
                auto & copies = instance.variables[l.variable - 1];
                auto & side = l.positive ? copies.positive : copies.negative;
                auto & next = l.positive ? next_positive[l.variable - 1] : next_negative[l.variable - 1];
                literals[p] = side[bounded ? next++ : 0];
            }

            auto name = "C" + std::to_string(j + 1);
            instance.clause_literals.push_back(literals);
            switch (target) {
                case TargetName::A: instance.clause_gadgets.push_back(parts::a_clause(b, name, literals)); break;
                case TargetName::B: instance.clause_gadgets.push_back(parts::b_clause(b, name, literals)); break;
                case TargetName::C: instance.clause_gadgets.push_back(parts::c_clause(b, name, literals, tops[j])); break;
            }
        }

        instance.graph = b.build();
        instance.labels = b.labels();
        return instance;
    }

    auto extract_assignment(const ReductionInstance & instance, const Coloring & coloring) -> Assignment
    {
        auto h = build_target(instance.target);
        if (coloring.size() != instance.graph.size() || ! is_homomorphism(instance.graph, h, coloring))
            throw InvalidArgument("not a " + to_string(instance.target) + "-coloring of the instance");

        vector<Color> rename{ 0, 1, 2 };
        if (instance.basis) {
            rename[coloring[instance.basis->zero]] = 0;
            rename[coloring[instance.basis->one]] = 1;
            rename[coloring[instance.basis->two]] = 2;
        }

        Assignment result;
        for (auto & copies : instance.variables)
            result.push_back(rename[coloring[copies.positive.front()]] == true_color(instance.target));
        return result;
    }

    auto extend_assignment(const ReductionInstance & instance, const Assignment & assignment) -> Coloring
    {
        if (! evaluate(instance.formula, assignment, semantics_for(instance.target)))
            throw InvalidArgument("assignment does not " + to_string(semantics_for(instance.target)) + "-satisfy the formula");

        auto & g = instance.graph;
        auto h = build_target(instance.target);
        auto lists = full_lists(g.size(), h);
        for (auto & [v, c] : instance.pinned)
            lists[v] = ColorSet::single(c);

        for (size_t i = 0 ; i < instance.variables.size() ; ++i) {
            auto yes = ColorSet::single(true_color(instance.target)), no = ColorSet::single(false_color(instance.target));
            for (auto v : instance.variables[i].positive)
                lists[v] = assignment[i] ? yes : no;
            for (auto v : instance.variables[i].negative)
                lists[v] = assignment[i] ? no : yes;
        }

        auto coloring = find_homomorphism(g, h, lists, OracleOptions{ .vertex_cap = std::nullopt });
        if (! coloring)
            throw Error("satisfying assignment does not extend to a coloring; the construction is broken");
        if (! is_homomorphism(g, h, *coloring) || ! respects_lists(*coloring, lists))
            throw Error("extension produced an invalid coloring");
        return *coloring;
    }

    auto validate_instance(const ReductionInstance & instance) -> InstanceReport
    {
        InstanceReport report;
        auto & g = instance.graph;
        auto problem = [&] (bool & flag, string text) {
            flag = false;
            report.problems.push_back(std::move(text));
        };
        auto name_of = [&] (Vertex v) {
            return v < instance.labels.size() && ! instance.labels[v].empty() ? instance.labels[v] : std::to_string(v);
        };

        report.degrees = degree_stats(g);
        report.undirected_max_degree = underlying_undirected_max_degree(g);
        for (Vertex v = 0 ; v < g.size() ; ++v)
            if (g.out_degree(v) > g.out_degree(report.max_out_vertex))
                report.max_out_vertex = v;
        if (g.size() > 0)
            report.max_out_label = name_of(report.max_out_vertex);

        if (instance.variant == Variant::bounded) {
            if (! report.degrees.within({ 2, 2 }))
                problem(report.degrees_ok, "degree bound (2,2) exceeded: out " + std::to_string(report.degrees.max_out) +
                        ", in " + std::to_string(report.degrees.max_in));
            if (instance.target == TargetName::C && report.undirected_max_degree > 4)
                problem(report.degrees_ok, "underlying undirected degree " + std::to_string(report.undirected_max_degree) + " exceeds 4");
        }

        auto & formula = instance.formula;
        if (instance.variables.size() != formula.variable_count())
            problem(report.meta_ok, "variable gadget count differs from the formula");
        if (instance.clause_literals.size() != formula.clauses().size() || instance.clause_gadgets.size() != formula.clauses().size())
            problem(report.meta_ok, "clause gadget count differs from the formula");
        if (! report.meta_ok)
            return report;

        auto in_range = [&] (Vertex v) { return v < g.size(); };
        for (auto & [v, _] : instance.pinned)
            if (! in_range(v))
                problem(report.meta_ok, "pinned vertex " + std::to_string(v) + " out of range");

        std::set<Vertex> used;
        for (size_t j = 0 ; j < formula.clauses().size() ; ++j) {
            for (size_t p = 0 ; p < 3 ; ++p) {
                auto & l = formula.clauses()[j][p];
                auto v = instance.clause_literals[j][p];
                auto & copies = instance.variables[l.variable - 1];
                auto & side = l.positive ? copies.positive : copies.negative;
                if (! in_range(v) || std::find(side.begin(), side.end(), v) == side.end())
                    problem(report.meta_ok, "clause " + std::to_string(j + 1) + " literal " + std::to_string(p + 1) +
                            " is not a copy of " + std::to_string(l.dimacs()));
                else if (instance.variant == Variant::bounded && ! used.insert(v).second)
                    problem(report.meta_ok, "literal copy " + name_of(v) + " attached to two clauses");
            }

            auto & lit = instance.clause_literals[j];
            auto & inner = instance.clause_gadgets[j];
            for (auto v : inner)
                if (! in_range(v))
                    problem(report.meta_ok, "clause " + std::to_string(j + 1) + " gadget vertex out of range");
            if (! report.meta_ok)
                continue;

            bool attached = true;
            switch (instance.target) {
                case TargetName::A:
                case TargetName::B:
                    for (size_t p = 0 ; p < 3 ; ++p) {
                        attached = attached && g.has_arc(inner[p], inner[(p + 1) % 3]);
                        attached = attached && (instance.target == TargetName::A ? g.has_arc(lit[p], inner[p]) : g.has_arc(inner[p], lit[p]));
                    }
                    break;
                case TargetName::C:
                    attached = inner.size() == 5 && g.has_arc(lit[0], inner[0]) && g.has_arc(lit[1], inner[1]) && g.has_arc(inner[4], lit[2]);
                    break;
            }
            if (! attached)
                problem(report.gadgets_ok, "clause " + std::to_string(j + 1) + " gadget is not wired to its literals");
        }

        for (size_t i = 0 ; i < instance.variables.size() && report.meta_ok ; ++i) {
            auto & copies = instance.variables[i];
            if (copies.positive.empty() || copies.positive.size() != copies.negative.size())
                problem(report.meta_ok, "variable " + std::to_string(i + 1) + " has unbalanced literal copies");
            else if (instance.target != TargetName::C || instance.variant == Variant::unbounded) {
                auto x = copies.positive.front(), nx = copies.negative.front();
                if (! g.has_arc(x, nx))
                    problem(report.gadgets_ok, "variable " + std::to_string(i + 1) + " lost the arc between its literals");
            }
        }

        return report;
    }

    auto meta_json(const ReductionInstance & instance) -> string
    {
        using nlohmann::ordered_json;
        ordered_json meta;
        meta["format"] = "hcol-reduction-meta";
        meta["version"] = 1;
        meta["target"] = to_string(instance.target);
        meta["variant"] = to_string(instance.variant);
        meta["semantics"] = to_string(semantics_for(instance.target));
        meta["vertices"] = instance.graph.size();
        meta["arcs"] = instance.graph.arc_count();

        if (instance.basis)
            meta["basis"] = { instance.basis->zero, instance.basis->one, instance.basis->two };
        else
            meta["basis"] = nullptr;

        auto pinned = ordered_json::array();
        for (auto & [v, c] : instance.pinned)
            pinned.push_back({ { "vertex", v }, { "color", c } });
        meta["pinned"] = pinned;

        auto variables = ordered_json::array();
        for (size_t i = 0 ; i < instance.variables.size() ; ++i)
            variables.push_back({ { "variable", i + 1 }, { "positive", instance.variables[i].positive },
                    { "negative", instance.variables[i].negative } });
        meta["variables"] = variables;

        auto clauses = ordered_json::array();
        for (size_t j = 0 ; j < instance.clause_literals.size() ; ++j) {
            auto literals = ordered_json::array();
            for (size_t p = 0 ; p < 3 ; ++p)
                literals.push_back({ { "literal", instance.formula.clauses()[j][p].dimacs() }, { "vertex", instance.clause_literals[j][p] } });
            clauses.push_back({ { "clause", j + 1 }, { "literals", literals }, { "gadget", instance.clause_gadgets[j] } });
        }
        meta["clauses"] = clauses;

        return meta.dump(2) + "\n";
    }
}
