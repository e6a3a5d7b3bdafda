#include <hcol/arc_consistency.hh>
#include <hcol/errors.hh>
#include <hcol/exact_oracle.hh>
#include <hcol/gadgets.hh>

#include <json.hpp>

#include <algorithm>
#include <random>
#include <sstream>

using std::size_t;
using std::string;
using std::string_view;
using std::vector;

namespace hcol
{
    namespace
    {
        auto label(string_view name, string_view role) -> string
        {
            return string(name) + "." + string(role);
        }

        auto copy_label(string_view name, bool positive, size_t i) -> string
        {
            return (positive ? "" : "~") + string(name) + "#" + std::to_string(i);
        }
    }

    namespace parts
    {
        auto a_variable(DigraphBuilder & b, string_view name) -> LiteralCopies
        {
            auto x = b.add_vertex(string(name));
            auto nx = b.add_vertex("~" + string(name));
            b.add_arc(x, nx);
            b.add_arc(nx, x);
            return { { x }, { nx } };
        }

        auto a_variable_bounded(DigraphBuilder & b, string_view name, size_t k) -> LiteralCopies
        {
            if (k == 0)
                throw InvalidArgument("a bounded variable gadget needs at least one copy");

            LiteralCopies copies;
            for (size_t i = 1 ; i <= k ; ++i) {
                auto x = b.add_vertex(copy_label(name, true, i));
                auto nx = b.add_vertex(copy_label(name, false, i));
                b.add_arc(x, nx);
                b.add_arc(nx, x);
                copies.positive.push_back(x);
                copies.negative.push_back(nx);
            }

            // connector i_j is a common in-neighbour of copies j and j+1 of one literal, alternating
            // between the negative and the positive side; nothing in A points to both 0 and 1
            for (size_t j = 1 ; j < k ; ++j) {
                auto & side = (j % 2 == 1) ? copies.negative : copies.positive;
                auto connector = b.add_vertex(label(name, "i" + std::to_string(j)));
                b.add_arc(connector, side[j - 1]);
                b.add_arc(connector, side[j]);
            }
            return copies;
        }

        namespace
        {
            struct Hub
            {
                Vertex centre, low, high, in_low, in_high;
            };

            // two transitive triangles sharing `centre`: its out-neighbours are adjacent, so it is
            // not 2 in B, and its in-neighbours are adjacent, so it is not 0; hence centre = 1,
            // low = in_low = 0 and high = in_high = 2
            auto b_hub(DigraphBuilder & b, string_view name) -> Hub
            {
                Hub hub;
                hub.centre = b.add_vertex(label(name, "s"));
                hub.low = b.add_vertex(label(name, "a"));
                hub.high = b.add_vertex(label(name, "b"));
                hub.in_low = b.add_vertex(label(name, "c"));
                hub.in_high = b.add_vertex(label(name, "d"));
                b.add_arc(hub.centre, hub.low);
                b.add_arc(hub.centre, hub.high);
                b.add_arc(hub.low, hub.high);
                b.add_arc(hub.in_low, hub.centre);
                b.add_arc(hub.in_high, hub.centre);
                b.add_arc(hub.in_low, hub.in_high);
                return hub;
            }
        }

        auto b_variable(DigraphBuilder & b, string_view name) -> LiteralCopies
        {
            auto hub = b_hub(b, name);
            auto x = b.add_vertex(string(name));
            auto nx = b.add_vertex("~" + string(name));
            b.add_arc(x, nx);
            b.add_arc(nx, x);
            b.add_arc(nx, hub.high);
            b.add_arc(x, hub.high);
            return { { x }, { nx } };
        }

        auto b_variable_bounded(DigraphBuilder & b, string_view name, size_t k) -> LiteralCopies
        {
            if (k == 0)
                throw InvalidArgument("a bounded variable gadget needs at least one copy");

            auto hub = b_hub(b, name);
            auto j0 = b.add_vertex(label(name, "j0"));
            b.add_arc(hub.high, j0);

            LiteralCopies copies;
            vector<Vertex> thirds;
            for (size_t i = 1 ; i <= k ; ++i) {
                auto x = b.add_vertex(copy_label(name, true, i));
                auto nx = b.add_vertex(copy_label(name, false, i));
                auto t = b.add_vertex(label(name, "t" + std::to_string(i)));
                b.add_arc(x, nx);
                b.add_arc(x, t);
                b.add_arc(nx, t);
                copies.positive.push_back(x);
                copies.negative.push_back(nx);
                thirds.push_back(t);
            }

            // t1 and the hub's 2-vertex share the out-neighbour j0, pinning t1 to 2; each j_i then
            // carries t_i = 2 on to t_{i+1}
            b.add_arc(thirds[0], j0);
            for (size_t i = 1 ; i < k ; ++i) {
                auto j = b.add_vertex(label(name, "j" + std::to_string(i)));
                b.add_arc(thirds[i - 1], j);
                b.add_arc(thirds[i], j);
            }

            // ~x_i -> x_{i+1} forces different colors inside {0, 1}, so x_{i+1} = x_i
            for (size_t i = 1 ; i < k ; ++i)
                b.add_arc(copies.negative[i - 1], copies.positive[i]);

            return copies;
        }

        auto c_variable(DigraphBuilder & b, string_view name, Vertex anchor) -> LiteralCopies
        {
            auto x = b.add_vertex(string(name));
            auto nx = b.add_vertex("~" + string(name));
            b.add_arc(x, nx);
            b.add_arc(nx, x);
            b.add_arc(x, anchor);
            b.add_arc(nx, anchor);
            return { { x }, { nx } };
        }

        auto c_variable_bounded(DigraphBuilder & b, string_view name, Vertex anchor, size_t k) -> LiteralCopies
        {
            if (k == 0)
                throw InvalidArgument("a bounded variable gadget needs at least one copy");

            auto x0 = b.add_vertex(label(name, "x0"));
            auto nx0 = b.add_vertex(label(name, "~x0"));
            b.add_arc(x0, nx0);
            b.add_arc(nx0, anchor);
            b.add_arc(anchor, x0);

            LiteralCopies copies;
            copies.positive = supply_chain(b, string(name), x0, k);
            copies.negative = supply_chain(b, "~" + string(name), nx0, k);
            return copies;
        }

        auto a_clause(DigraphBuilder & b, string_view name, std::array<Vertex, 3> literals) -> vector<Vertex>
        {
            vector<Vertex> cycle;
            for (int i = 0 ; i < 3 ; ++i)
                cycle.push_back(b.add_vertex(label(name, "c" + std::to_string(i))));
            for (int i = 0 ; i < 3 ; ++i) {
                b.add_arc(cycle[i], cycle[(i + 1) % 3]);
                b.add_arc(literals[i], cycle[i]);
            }
            return cycle;
        }

        auto b_clause(DigraphBuilder & b, string_view name, std::array<Vertex, 3> literals) -> vector<Vertex>
        {
            vector<Vertex> cycle;
            for (int i = 0 ; i < 3 ; ++i)
                cycle.push_back(b.add_vertex(label(name, "c" + std::to_string(i))));
            for (int i = 0 ; i < 3 ; ++i) {
                b.add_arc(cycle[i], cycle[(i + 1) % 3]);
                b.add_arc(cycle[i], literals[i]);
            }
            return cycle;
        }

        auto c_clause(DigraphBuilder & b, string_view name, std::array<Vertex, 3> literals, Vertex top) -> vector<Vertex>
        {
            // two chained OR gates: o1 can avoid 0 only if l or l' is 1, and top = 1 needs o1 or l'' to be 1
            auto p1 = b.add_vertex(label(name, "p1"));
            auto q1 = b.add_vertex(label(name, "q1"));
            auto o1 = b.add_vertex(label(name, "o1"));
            auto p2 = b.add_vertex(label(name, "p2"));
            auto q2 = b.add_vertex(label(name, "q2"));
            b.add_arc(literals[0], p1);
            b.add_arc(literals[1], q1);
            b.add_arc(p1, q1);
            b.add_arc(p1, o1);
            b.add_arc(q1, o1);
            b.add_arc(o1, p2);
            b.add_arc(p2, q2);
            b.add_arc(p2, top);
            b.add_arc(top, q2);
            b.add_arc(q2, literals[2]);
            return { p1, q1, o1, p2, q2 };
        }

        auto basis_triangle(DigraphBuilder & b) -> Basis
        {
            Basis basis{ b.add_vertex("basis.0"), b.add_vertex("basis.1"), b.add_vertex("basis.2") };
            b.add_arc(basis.zero, basis.one);
            b.add_arc(basis.one, basis.two);
            b.add_arc(basis.two, basis.zero);
            return basis;
        }

        auto supply_chain(DigraphBuilder & b, string_view name, Vertex root, size_t count) -> vector<Vertex>
        {
            if (count == 0)
                return { };

            // each copy: hubs u -> w, and three degree-two vertices z1 (shared with the previous
            // copy), z2, z3 (shared with the next), oriented so every vertex is 2-in/2-out at most
            size_t copies = std::max<size_t>(1, count - 1);
            vector<Vertex> free;
            Vertex z1 = root;
            for (size_t i = 1 ; i <= copies ; ++i) {
                auto u = b.add_vertex(label(name, "k" + std::to_string(i) + ".u"));
                auto w = b.add_vertex(label(name, "k" + std::to_string(i) + ".w"));
                auto z2 = b.add_vertex(label(name, "k" + std::to_string(i) + ".z2"));
                auto z3 = b.add_vertex(label(name, "k" + std::to_string(i) + ".z3"));
                b.add_arc(u, w);
                b.add_arc(u, z1);
                b.add_arc(z1, w);
                b.add_arc(w, z2);
                b.add_arc(z2, u);
                b.add_arc(w, z3);
                b.add_arc(z3, u);
                free.push_back(z2);
                z1 = z3;
            }
            free.push_back(z1);
            free.resize(count);
            return free;
        }
    }

    auto to_string(GadgetKind kind) -> string
    {
        switch (kind) {
            case GadgetKind::u: return "U";
            case GadgetKind::w: return "W";
            case GadgetKind::v: return "V";
            case GadgetKind::w_hat: return "W_hat";
            case GadgetKind::t: return "T";
            case GadgetKind::w_prime: return "W_prime";
            case GadgetKind::u_prime: return "U_prime";
            case GadgetKind::v_prime: return "V_prime";
            case GadgetKind::t_prime: return "T_prime";
            case GadgetKind::basis_triangle: return "basis_triangle";
            case GadgetKind::clause_chain: return "clause_chain";
            case GadgetKind::variable_chain: return "variable_chain";
        }
        return "?";
    }

    auto parse_gadget_kind(string_view text) -> std::optional<GadgetKind>
    {
        for (auto kind : { GadgetKind::u, GadgetKind::w, GadgetKind::v, GadgetKind::w_hat, GadgetKind::t, GadgetKind::w_prime,
                GadgetKind::u_prime, GadgetKind::v_prime, GadgetKind::t_prime, GadgetKind::basis_triangle,
                GadgetKind::clause_chain, GadgetKind::variable_chain })
            if (to_string(kind) == text)
                return kind;
        return std::nullopt;
    }

    namespace
    {
        auto complementary_pairs(size_t k) -> std::set<ColorTuple>
        {
            ColorTuple first(2 * k, 0), second(2 * k, 1);
            for (size_t i = k ; i < 2 * k ; ++i) {
                first[i] = 1;
                second[i] = 0;
            }
            return { first, second };
        }

        auto boolean_cube() -> vector<ColorTuple>
        {
            vector<ColorTuple> result;
            for (Color a = 0 ; a < 2 ; ++a)
                for (Color b = 0 ; b < 2 ; ++b)
                    for (Color c = 0 ; c < 2 ; ++c)
                        result.push_back({ a, b, c });
            return result;
        }

        auto exactly_one(Color value) -> std::set<ColorTuple>
        {
            std::set<ColorTuple> result;
            for (auto & t : boolean_cube())
                if (std::count(t.begin(), t.end(), value) == 1)
                    result.insert(t);
            return result;
        }

        auto variable_interface(const LiteralCopies & copies) -> vector<Vertex>
        {
            vector<Vertex> result = copies.positive;
            result.insert(result.end(), copies.negative.begin(), copies.negative.end());
            return result;
        }

        auto finish(Gadget & g, const DigraphBuilder & b) -> void
        {
            g.graph = b.build();
            g.labels = b.labels();
            g.expected.arity = g.interface.size();
        }
    }

    auto build_gadget(GadgetKind kind, size_t k) -> Gadget
    {
        Gadget g;
        DigraphBuilder b;
        g.name = to_string(kind);

        auto needs_k = [&] {
            if (k == 0)
                throw InvalidArgument(to_string(kind) + " needs k >= 1");
            g.name += "(" + std::to_string(k) + ")";
        };

        switch (kind) {
            case GadgetKind::u: {
                auto copies = parts::a_variable(b, "x");
                g.interface = variable_interface(copies);
                g.expected = { TargetName::A, BehaviorMode::projection, 0, { }, complementary_pairs(1) };
                break;
            }

            case GadgetKind::v: {
                auto copies = parts::b_variable(b, "x");
                g.interface = variable_interface(copies);
                g.expected = { TargetName::B, BehaviorMode::projection, 0, { }, complementary_pairs(1) };
                break;
            }

            case GadgetKind::t: {
                auto anchor = b.add_vertex("anchor");
                auto copies = parts::c_variable(b, "x", anchor);
                g.interface = variable_interface(copies);
                g.pinned = { { anchor, 2 } };
                g.expected = { TargetName::C, BehaviorMode::projection, 0, { }, complementary_pairs(1) };
                break;
            }

            case GadgetKind::w:
            case GadgetKind::w_hat:
            case GadgetKind::w_prime: {
                std::array<Vertex, 3> literals{ b.add_vertex("l"), b.add_vertex("l'"), b.add_vertex("l''") };
                g.interface.assign(literals.begin(), literals.end());
                if (kind == GadgetKind::w) {
                    parts::a_clause(b, "w", literals);
                    g.expected = { TargetName::A, BehaviorMode::extension_table, 0, boolean_cube(), exactly_one(1) };
                }
                else if (kind == GadgetKind::w_hat) {
                    parts::b_clause(b, "w", literals);
                    g.expected = { TargetName::B, BehaviorMode::extension_table, 0, boolean_cube(), exactly_one(0) };
                }
                else {
                    auto top = b.add_vertex("top");
                    parts::c_clause(b, "w", literals, top);
                    g.pinned = { { top, 1 } };
                    auto allowed = std::set<ColorTuple>{ };
                    for (auto & t : boolean_cube())
                        if (t != ColorTuple{ 0, 0, 0 })
                            allowed.insert(t);
                    g.expected = { TargetName::C, BehaviorMode::extension_table, 0, boolean_cube(), allowed };
                }
                break;
            }

            case GadgetKind::u_prime: {
                needs_k();
                auto copies = parts::a_variable_bounded(b, "x", k);
                g.interface = variable_interface(copies);
                g.literal_copies = g.interface;
                g.attachment = Attachment::outward;
                g.expected = { TargetName::A, BehaviorMode::projection, 0, { }, complementary_pairs(k) };
                break;
            }

            case GadgetKind::v_prime: {
                needs_k();
                auto copies = parts::b_variable_bounded(b, "x", k);
                g.interface = variable_interface(copies);
                g.literal_copies = g.interface;
                g.attachment = Attachment::inward;
                g.expected = { TargetName::B, BehaviorMode::projection, 0, { }, complementary_pairs(k) };
                break;
            }

            case GadgetKind::t_prime: {
                needs_k();
                auto anchor = b.add_vertex("anchor");
                auto copies = parts::c_variable_bounded(b, "x", anchor, k);
                g.interface = variable_interface(copies);
                g.literal_copies = g.interface;
                g.attachment = Attachment::either;
                g.pinned = { { anchor, 2 } };
                g.expected = { TargetName::C, BehaviorMode::projection, 0, { }, complementary_pairs(k) };
                break;
            }

            case GadgetKind::basis_triangle: {
                auto basis = parts::basis_triangle(b);
                g.interface = { basis.zero, basis.one, basis.two };
                std::set<ColorTuple> permutations;
                ColorTuple p{ 0, 1, 2 };
                do
                    permutations.insert(p);
                while (std::next_permutation(p.begin(), p.end()));
                g.expected = { TargetName::C, BehaviorMode::projection, 0, { }, permutations };
                break;
            }

            case GadgetKind::clause_chain:
            case GadgetKind::variable_chain: {
                needs_k();
                auto basis = parts::basis_triangle(b);
                bool clauses = kind == GadgetKind::clause_chain;
                g.interface = parts::supply_chain(b, clauses ? "clauses" : "variables", clauses ? basis.one : basis.two, k);
                g.pinned = { { basis.zero, 0 }, { basis.one, 1 }, { basis.two, 2 } };
                g.literal_copies = g.interface;
                g.attachment = Attachment::either;
                g.expected = { TargetName::C, BehaviorMode::projection, 0, { }, { ColorTuple(k, clauses ? 1 : 2) } };
                break;
            }
        }

        finish(g, b);
        return g;
    }

    auto standard_gadgets() -> vector<Gadget>
    {
        vector<Gadget> result;
        for (auto kind : { GadgetKind::u, GadgetKind::w, GadgetKind::v, GadgetKind::w_hat, GadgetKind::t,
                GadgetKind::w_prime, GadgetKind::basis_triangle })
            result.push_back(build_gadget(kind));
        for (size_t k = 1 ; k <= 4 ; ++k)
            result.push_back(build_gadget(GadgetKind::u_prime, k));
        for (size_t k = 1 ; k <= 4 ; ++k)
            result.push_back(build_gadget(GadgetKind::v_prime, k));
        for (size_t k = 1 ; k <= 3 ; ++k)
            result.push_back(build_gadget(GadgetKind::t_prime, k));
        for (size_t k = 1 ; k <= 3 ; ++k)
            result.push_back(build_gadget(GadgetKind::clause_chain, k));
        for (size_t k = 1 ; k <= 3 ; ++k)
            result.push_back(build_gadget(GadgetKind::variable_chain, k));
        return result;
    }

    namespace
    {
        auto pinned_lists(const Digraph & g, const TargetGraph & h, const PartialColoring & pinned) -> ColorLists
        {
            auto lists = full_lists(g.size(), h);
            for (auto & [v, c] : pinned) {
                if (v >= g.size() || c >= h.size())
                    throw InvalidArgument("pinned vertex or color out of range");
                lists[v] = ColorSet::single(c);
            }
            return lists;
        }

        auto projection(const Digraph & g, const TargetGraph & h, const ColorLists & base,
                const vector<Vertex> & interface) -> std::set<ColorTuple>
        {
            std::set<ColorTuple> result;
            auto start = make_arc_consistent(g, base, h);
            if (has_empty_list(start))
                return result;

            ColorTuple tuple(interface.size());
            auto walk = [&] (auto & self, size_t i, const ColorLists & lists) -> void {
                if (i == interface.size()) {
                    if (exists_homomorphism(g, h, lists))
                        result.insert(tuple);
                    return;
                }
                Vertex v = interface[i];
                for (auto c : lists[v]) {
                    ColorLists next = lists;
                    next[v] = ColorSet::single(c);
                    if (! propagate(g, h, next, g.incident_arcs(v)))
                        continue;
                    tuple[i] = c;
                    self(self, i + 1, next);
                }
            };
            walk(walk, 0, start);
            return result;
        }
    }

    auto interface_behavior(const Gadget & gadget, const TargetGraph & h, const PartialColoring & pinned) -> InterfaceBehavior
    {
        auto & g = gadget.graph;
        if (g.size() > OracleOptions{ }.vertex_cap.value())
            throw CapExceeded("gadget " + gadget.name + " has " + std::to_string(g.size()) + " vertices, over the oracle cap");

        auto base = pinned_lists(g, h, pinned);

        InterfaceBehavior result;
        result.target = gadget.expected.target;
        result.mode = gadget.expected.mode;
        result.arity = gadget.interface.size();

        if (result.mode == BehaviorMode::projection) {
            result.allowed = projection(g, h, base, gadget.interface);
            return result;
        }

        result.domain = gadget.expected.domain;
        for (auto & tuple : result.domain) {
            if (tuple.size() != gadget.interface.size())
                throw InvalidArgument("extension-table tuple has the wrong arity");
            auto lists = base;
            bool possible = true;
            for (size_t i = 0 ; i < tuple.size() ; ++i) {
                if (tuple[i] >= h.size()) {
                    possible = false;
                    break;
                }
                lists[gadget.interface[i]] &= ColorSet::single(tuple[i]);
            }
            if (possible && exists_homomorphism(g, h, lists))
                result.allowed.insert(tuple);
        }
        return result;
    }

    auto verify_gadget(const Gadget & gadget, const TargetGraph & h) -> GadgetReport
    {
        GadgetReport report;
        report.gadget = gadget.name;
        report.target = h.name();
        report.expected = gadget.expected;
        report.computed = interface_behavior(gadget, h, gadget.pinned);
        report.behavior_matches = report.computed == report.expected;

        if (gadget.attachment == Attachment::none)
            return report;

        auto & g = gadget.graph;
        auto saturating = [] (size_t d) { return d >= 2 ? size_t(0) : 2 - d; };
        std::set<Vertex> copies(gadget.literal_copies.begin(), gadget.literal_copies.end());

        for (Vertex v = 0 ; v < g.size() ; ++v)
            if (! copies.contains(v) && (g.in_degree(v) > 2 || g.out_degree(v) > 2))
                report.degrees_ok = false;

        for (auto v : gadget.literal_copies) {
            SlackEntry entry{ v, v < gadget.labels.size() ? gadget.labels[v] : "", saturating(g.in_degree(v)), saturating(g.out_degree(v)) };
            bool fits = false;
            switch (gadget.attachment) {
                case Attachment::outward: fits = entry.out_slack >= 1 && g.in_degree(v) <= 2; break;
                case Attachment::inward: fits = entry.in_slack >= 1 && g.out_degree(v) <= 2; break;
                case Attachment::either: fits = (entry.in_slack >= 1 || entry.out_slack >= 1) &&
                                         g.in_degree(v) <= 2 && g.out_degree(v) <= 2 &&
                                         g.in_degree(v) + g.out_degree(v) <= 3; break;
                case Attachment::none: fits = true; break;
            }
            if (! fits)
                report.degrees_ok = false;
            report.slack.push_back(std::move(entry));
        }
        return report;
    }

    namespace
    {
        auto tuple_text(const ColorTuple & t) -> string
        {
            string s = "(";
            for (size_t i = 0 ; i < t.size() ; ++i)
                s += (i ? "," : "") + std::to_string(t[i]);
            return s + ")";
        }

        auto allowed_text(const std::set<ColorTuple> & allowed) -> string
        {
            string s = "{";
            bool first = true;
            for (auto & t : allowed) {
                s += (first ? "" : " ") + tuple_text(t);
                first = false;
            }
            return s + "}";
        }

        auto mode_text(BehaviorMode mode) -> string
        {
            return mode == BehaviorMode::projection ? "projection" : "extension_table";
        }
    }

    auto format_report(const GadgetReport & report) -> string
    {
        std::ostringstream out;
        out << (report.passed() ? "PASS " : "FAIL ") << report.gadget << " vs " << report.target
            << " [" << mode_text(report.expected.mode) << "]\n";
        out << "  expected: " << allowed_text(report.expected.allowed) << "\n";
        out << "  computed: " << allowed_text(report.computed.allowed) << "\n";
        if (! report.slack.empty()) {
            size_t min_in = 2, min_out = 2;
            for (auto & s : report.slack) {
                min_in = std::min(min_in, s.in_slack);
                min_out = std::min(min_out, s.out_slack);
            }
            out << "  degree audit: " << report.slack.size() << " literal copies, min in-slack " << min_in
                << ", min out-slack " << min_out << (report.degrees_ok ? ", ok" : ", VIOLATION") << "\n";
        }
        return out.str();
    }

    auto report_json(const vector<GadgetReport> & reports) -> string
    {
        auto tuples = [] (const auto & container) {
            auto array = nlohmann::ordered_json::array();
            for (auto & t : container)
                array.push_back(t);
            return array;
        };

        auto result = nlohmann::ordered_json::array();
        for (auto & r : reports) {
            nlohmann::ordered_json entry;
            entry["gadget"] = r.gadget;
            entry["target"] = r.target;
            entry["mode"] = mode_text(r.expected.mode);
            entry["passed"] = r.passed();
            entry["behavior_matches"] = r.behavior_matches;
            entry["expected"] = tuples(r.expected.allowed);
            entry["computed"] = tuples(r.computed.allowed);
            if (r.expected.mode == BehaviorMode::extension_table)
                entry["domain"] = tuples(r.expected.domain);
            auto slack = nlohmann::ordered_json::array();
            for (auto & s : r.slack)
                slack.push_back({ { "vertex", s.vertex }, { "label", s.label }, { "in_slack", s.in_slack }, { "out_slack", s.out_slack } });
            entry["degree_slack"] = slack;
            entry["degrees_ok"] = r.degrees_ok;
            result.push_back(entry);
        }
        return result.dump(2) + "\n";
    }

    auto search_gadget(const InterfaceBehavior & spec, const SearchLimits & limits) -> std::optional<Gadget>
    {
        if (limits.max_vertices > 8)
            throw InvalidArgument("gadget search is limited to 8 vertices");

        // a gadget has to admit some coloring, and tuples must fit the declared shape
        if (spec.allowed.empty() || spec.arity == 0)
            return std::nullopt;
        for (auto & t : spec.allowed)
            if (t.size() != spec.arity)
                return std::nullopt;
        if (spec.mode == BehaviorMode::extension_table)
            for (auto & t : spec.allowed)
                if (std::find(spec.domain.begin(), spec.domain.end(), t) == spec.domain.end())
                    return std::nullopt;

        auto h = build_target(spec.target);
        std::mt19937_64 rng(limits.seed);

        auto try_arcs = [&] (size_t n, vector<Arc> arcs) -> std::optional<Gadget> {
            Gadget candidate;
            candidate.graph = Digraph(n, std::move(arcs));
            if (limits.degree_bounds && ! degree_stats(candidate.graph).within(*limits.degree_bounds))
                return std::nullopt;
            candidate.name = "search";
            for (Vertex v = 0 ; v < n ; ++v)
                candidate.labels.push_back(v < spec.arity ? "i" + std::to_string(v) : "g" + std::to_string(v));
            for (Vertex v = 0 ; v < spec.arity ; ++v)
                candidate.interface.push_back(v);
            candidate.expected = spec;
            if (interface_behavior(candidate, h, { }) == spec)
                return candidate;
            return std::nullopt;
        };

        for (size_t n = spec.arity ; n <= limits.max_vertices ; ++n) {
            vector<Arc> slots;
            for (Vertex u = 0 ; u < n ; ++u)
                for (Vertex v = 0 ; v < n ; ++v)
                    if (u != v)
                        slots.push_back({ u, v });

            if (n <= 4) {
                for (std::uint64_t mask = 0 ; mask < (std::uint64_t(1) << slots.size()) ; ++mask) {
                    vector<Arc> arcs;
                    for (size_t i = 0 ; i < slots.size() ; ++i)
                        if ((mask >> i) & 1)
                            arcs.push_back(slots[i]);
                    if (auto found = try_arcs(n, std::move(arcs)))
                        return found;
                }
                continue;
            }

            std::uniform_real_distribution<double> density(0.15, 0.6), coin(0.0, 1.0);
            for (size_t s = 0 ; s < limits.samples_per_size ; ++s) {
                double p = density(rng);
                vector<Arc> arcs;
                for (auto & a : slots)
                    if (coin(rng) < p)
                        arcs.push_back(a);
                if (auto found = try_arcs(n, std::move(arcs)))
                    return found;
            }
        }
        return std::nullopt;
    }
}
