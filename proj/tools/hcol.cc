#include <hcol/arc_consistency.hh>
#include <hcol/bounded_solver.hh>
#include <hcol/cnf.hh>
#include <hcol/digraph.hh>
#include <hcol/errors.hh>
#include <hcol/exact_oracle.hh>
#include <hcol/gadgets.hh>
#include <hcol/reductions.hh>
#include <hcol/targets.hh>

#include <CLI11.hpp>
#include <json.hpp>

#include <unistd.h>

#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <thread>

using namespace hcol;

using std::string;
using std::vector;

namespace
{
    enum Exit
    {
        positive = 0,
        negative = 1,
        usage = 2,
        precondition = 3
    };

    auto use_color() -> bool
    {
        return std::getenv("NO_COLOR") == nullptr && ::isatty(STDOUT_FILENO);
    }

    auto verdict(bool pass) -> string
    {
        if (! use_color())
            return pass ? "PASS" : "FAIL";
        return pass ? "\033[32mPASS\033[0m" : "\033[31mFAIL\033[0m";
    }

    auto load_target(const string & spec) -> TargetGraph
    {
        if (auto name = parse_target_name(spec))
            return build_target(*name);
        auto parsed = parse_edge_list(read_file(spec));
        return TargetGraph(parsed.graph, std::filesystem::path(spec).stem().string());
    }

    auto load_graph(const string & path) -> LabelledDigraph
    {
        auto text = read_file(path);
        if (path.ends_with(".dot") || path.ends_with(".gv"))
            return parse_dot(text);
        return parse_edge_list(text);
    }

    auto load_lists(const string & path, const Digraph & g, const TargetGraph & h) -> ColorLists
    {
        if (path.empty())
            return full_lists(g.size(), h);
        return parse_lists(read_file(path), g.size(), h);
    }

    struct GraphInput
    {
        string target = "A";
        string graph;
        string lists;
        bool json = false;
        size_t cap = 24;

        auto oracle() const -> OracleOptions
        {
            return OracleOptions{ .vertex_cap = cap ? std::optional<size_t>(cap) : std::nullopt };
        }

        auto add(CLI::App * sub) -> void
        {
            sub->add_option("--target,-t", target, "A, B, C or a target edge-list file")->capture_default_str();
            sub->add_option("-g,--graph", graph, "input digraph (edge list, or DOT by extension)")->required();
            sub->add_option("--lists,-l", lists, "list file, one 'v: c1 c2' line per vertex");
            sub->add_flag("--json", json, "machine-readable output");
        }
    };

    auto print_coloring(const std::optional<Coloring> & f, bool json) -> int
    {
        if (json) {
            nlohmann::ordered_json out;
            out["colorable"] = f.has_value();
            if (f)
                out["coloring"] = *f;
            std::cout << out.dump() << '\n';
        }
        else if (f) {
            std::cout << "COLORABLE\n";
            for (size_t v = 0 ; v < f->size() ; ++v)
                std::cout << v << ' ' << (*f)[v] << '\n';
        }
        else
            std::cout << "NOT COLORABLE\n";
        return f ? Exit::positive : Exit::negative;
    }

    auto run_solve(const GraphInput & in, const string & algo) -> int
    {
        auto h = load_target(in.target);
        auto g = load_graph(in.graph).graph;
        auto lists = load_lists(in.lists, g, h);

        std::optional<Coloring> f;
        if (algo == "bounded")
            f = solve_bounded(g, lists, h);
        else
            f = find_homomorphism(g, h, lists, in.oracle());

        if (f && ! (is_homomorphism(g, h, *f) && respects_lists(*f, lists)))
            throw std::logic_error("solver returned a coloring that does not verify");
        return print_coloring(f, in.json);
    }

    auto run_count(const GraphInput & in) -> int
    {
        auto h = load_target(in.target);
        auto g = load_graph(in.graph).graph;
        auto count = count_homomorphisms(g, h, load_lists(in.lists, g, h), in.oracle());
        if (in.json)
            std::cout << nlohmann::ordered_json{ { "count", count } }.dump() << '\n';
        else
            std::cout << count << '\n';
        return Exit::positive;
    }

    auto run_ac(const GraphInput & in) -> int
    {
        auto h = load_target(in.target);
        auto g = load_graph(in.graph).graph;
        auto result = make_arc_consistent(g, load_lists(in.lists, g, h), h);
        bool wiped = has_empty_list(result);
        if (in.json) {
            nlohmann::ordered_json out;
            out["empty_list"] = wiped;
            auto lists = nlohmann::ordered_json::array();
            for (auto & l : result) {
                vector<Color> colors(l.begin(), l.end());
                lists.push_back(colors);
            }
            out["lists"] = lists;
            std::cout << out.dump() << '\n';
        }
        else
            std::cout << format_lists(result);
        return wiped ? Exit::negative : Exit::positive;
    }

    struct ReduceInput
    {
        string formula;
        string target = "A";
        bool bounded = false;
        string output, meta, dot;
    };

    auto instance_for(const Formula & formula, const string & target, bool bounded) -> ReductionInstance
    {
        auto name = parse_target_name(target);
        if (! name)
            throw InvalidArgument("reductions exist only for targets A, B and C, not '" + target + "'");
        return reduce(formula, *name, bounded ? Variant::bounded : Variant::unbounded);
    }

    auto run_reduce(const ReduceInput & in) -> int
    {
        auto formula = parse_dimacs(read_file(in.formula));
        auto instance = instance_for(formula, in.target, in.bounded);
        auto text = format_edge_list(instance.graph, instance.labels);
        if (in.output.empty())
            std::cout << text;
        else
            write_file(in.output, text);
        if (! in.meta.empty())
            write_file(in.meta, meta_json(instance));
        if (! in.dot.empty())
            write_file(in.dot, format_dot(instance.graph, instance.labels, "G_phi"));

        auto report = validate_instance(instance);
        std::cerr << instance.graph.size() << " vertices, " << instance.graph.arc_count() << " arcs, degrees (out "
            << report.degrees.max_out << ", in " << report.degrees.max_in << ")\n";
        for (auto & p : report.problems)
            std::cerr << "warning: " << p << '\n';
        return Exit::positive;
    }

    struct RoundtripOutcome
    {
        bool passed = false;
        string detail;
    };

    auto roundtrip(const Formula & formula, TargetName target, Variant variant) -> RoundtripOutcome
    {
        auto semantics = semantics_for(target);
        auto sat = brute_force_sat(formula, semantics);
        auto instance = reduce(formula, target, variant);
        auto h = build_target(target);
        auto coloring = find_homomorphism(instance.graph, h, full_lists(instance.graph.size(), h), OracleOptions{ .vertex_cap = std::nullopt });

        string detail = string(sat ? "satisfiable" : "unsatisfiable") + ", " + (coloring ? "colorable" : "not colorable");
        if (sat.has_value() != coloring.has_value())
            return { false, detail + ": decisions disagree" };

        auto report = validate_instance(instance);
        if (! report.passed())
            return { false, detail + ": " + report.problems.front() };

        if (coloring && ! evaluate(formula, extract_assignment(instance, *coloring), semantics))
            return { false, detail + ": extracted assignment does not satisfy" };
        if (sat)
            extend_assignment(instance, *sat);
        return { true, detail };
    }

    auto run_roundtrip(const vector<string> & files, const string & target_text, bool bounded, unsigned threads) -> int
    {
        auto target = parse_target_name(target_text);
        if (! target)
            throw InvalidArgument("roundtrip needs target A, B or C");
        auto variant = bounded ? Variant::bounded : Variant::unbounded;

        vector<RoundtripOutcome> outcomes(files.size());
        vector<std::exception_ptr> failures(files.size());
        std::atomic<size_t> next{ 0 };
        auto worker = [&] {
            for (size_t i ; (i = next++) < files.size() ; ) {
                try {
                    outcomes[i] = roundtrip(parse_dimacs(read_file(files[i])), *target, variant);
                }
                catch (...) {
                    failures[i] = std::current_exception();
                }
            }
        };

        threads = std::max(1u, std::min<unsigned>(threads, unsigned(files.size())));
        vector<std::jthread> pool;
        for (unsigned t = 0 ; t < threads ; ++t)
            pool.emplace_back(worker);
        pool.clear();

        // a single bad file is a usage error; in a batch it is reported and counted as a failure
        if (files.size() == 1 && failures[0])
            std::rethrow_exception(failures[0]);

        bool all = true;
        for (size_t i = 0 ; i < files.size() ; ++i) {
            if (failures[i]) {
                try {
                    std::rethrow_exception(failures[i]);
                }
                catch (const std::exception & e) {
                    outcomes[i] = { false, string("error: ") + e.what() };
                }
            }
            all = all && outcomes[i].passed;
            std::cout << verdict(outcomes[i].passed) << ' ' << files[i] << " (" << to_string(*target) << ", "
                << to_string(variant) << "): " << outcomes[i].detail << '\n';
        }
        return all ? Exit::positive : Exit::negative;
    }

    struct GadgetInput
    {
        string target;
        string report = "text";
        string fixtures;
        bool search = false;
        size_t max_vertices = 5;
    };

    auto run_verify_gadgets(const GadgetInput & in, std::uint64_t seed) -> int
    {
        std::optional<TargetName> only;
        if (! in.target.empty()) {
            only = parse_target_name(in.target);
            if (! only)
                throw InvalidArgument("--target must be A, B or C");
        }

        vector<GadgetReport> reports;
        for (auto & gadget : standard_gadgets()) {
            if (only && gadget.expected.target != *only)
                continue;
            reports.push_back(verify_gadget(gadget, build_target(gadget.expected.target)));
            if (! in.fixtures.empty()) {
                std::filesystem::create_directories(in.fixtures);
                write_file((std::filesystem::path(in.fixtures) / (gadget.name + ".el")).string(),
                        format_edge_list(gadget.graph, gadget.labels));
            }
        }

        if (in.search) {
            for (auto target : { TargetName::A, TargetName::B, TargetName::C }) {
                if (only && target != *only)
                    continue;
                InterfaceBehavior spec{ target, BehaviorMode::projection, 2, { }, { { 0, 1 }, { 1, 0 } } };
                auto found = search_gadget(spec, SearchLimits{ .max_vertices = in.max_vertices, .degree_bounds = std::nullopt, .seed = seed });
                std::cerr << "search " << to_string(target) << "-variable behavior, up to " << in.max_vertices << " vertices: ";
                if (found)
                    std::cerr << found->graph.size() << " vertices, " << found->graph.arc_count() << " arcs\n"
                        << format_edge_list(found->graph);
                else
                    std::cerr << "none found\n";
            }
        }

        bool all = std::all_of(reports.begin(), reports.end(), [] (auto & r) { return r.passed(); });
        if (in.report == "json")
            std::cout << report_json(reports);
        else {
            for (auto & r : reports) {
                auto text = format_report(r);
                std::cout << verdict(r.passed()) << text.substr(4);
            }
            std::cout << reports.size() << " gadgets, " << (all ? "all pass" : "FAILURES") << '\n';
        }
        return all ? Exit::positive : Exit::negative;
    }

    auto run_classify(const string & path, const string & bound, bool json) -> int
    {
        auto g = load_graph(path).graph;
        auto stats = degree_stats(g);
        DegreeStats bounds = out_two_in_one;
        if (bound == "1,2" || (bound == "auto" && ! stats.within(out_two_in_one) && stats.within(out_one_in_two)))
            bounds = out_one_in_two;
        else if (bound != "2,1" && bound != "auto")
            throw InvalidArgument("--bound must be 2,1 or 1,2 or auto");

        auto kind_text = [] (ShapeKind k) {
            switch (k) {
                case ShapeKind::tree: return "tree";
                case ShapeKind::cycle_with_trees: return "cycle_with_trees";
                case ShapeKind::unsupported: return "unsupported";
            }
            return "?";
        };

        nlohmann::ordered_json out;
        out["max_out"] = stats.max_out;
        out["max_in"] = stats.max_in;
        out["bound"] = { bounds.max_out, bounds.max_in };
        auto components = nlohmann::ordered_json::array();
        bool supported = true;
        if (! json)
            std::cout << "degrees: out " << stats.max_out << ", in " << stats.max_in << "; bound (" << bounds.max_out << ","
                << bounds.max_in << ")\n";
        for (auto & c : weak_components(g)) {
            auto shape = classify_component(g, c, bounds);
            supported = supported && shape.kind != ShapeKind::unsupported;
            if (json)
                components.push_back({ { "vertices", c }, { "shape", kind_text(shape.kind) }, { "cycle", shape.cycle } });
            else {
                std::cout << kind_text(shape.kind) << " [";
                for (size_t i = 0 ; i < c.size() ; ++i)
                    std::cout << (i ? " " : "") << c[i];
                std::cout << "]";
                if (shape.kind == ShapeKind::cycle_with_trees) {
                    std::cout << " cycle";
                    for (auto v : shape.cycle)
                        std::cout << ' ' << v;
                }
                std::cout << '\n';
            }
        }
        if (json) {
            out["components"] = components;
            std::cout << out.dump() << '\n';
        }
        return supported ? Exit::positive : Exit::negative;
    }

    auto run_convert(const string & input, const string & output, string to) -> int
    {
        auto g = load_graph(input);
        if (to.empty())
            to = (output.ends_with(".dot") || output.ends_with(".gv")) ? "dot" : "el";
        string text;
        if (to == "dot")
            text = format_dot(g.graph, g.labels);
        else if (to == "el")
            text = format_edge_list(g.graph, g.labels);
        else
            throw InvalidArgument("--to must be el or dot");
        if (output.empty())
            std::cout << text;
        else
            write_file(output, text);
        return Exit::positive;
    }
}

auto main(int argc, char * argv[]) -> int
{
    CLI::App app{ "List H-coloring solver and SAT reduction toolkit for the targets A, B and C" };
    app.require_subcommand(1);

    std::uint64_t seed = 1;
    app.add_option("--seed", seed, "seed for every randomized step")->capture_default_str();

    GraphInput solve_in, count_in, ac_in;
    string algo = "exact";
    auto solve = app.add_subcommand("solve", "decide list H-coloring and print a coloring");
    solve_in.add(solve);
    solve->add_option("--cap", solve_in.cap, "exact oracle vertex limit, 0 for none")->capture_default_str();
    solve->add_option("--algo", algo, "bounded or exact")->check(CLI::IsMember({ "bounded", "exact" }))->capture_default_str();

    auto count = app.add_subcommand("count", "count list homomorphisms");
    count_in.add(count);
    count->add_option("--cap", count_in.cap, "exact oracle vertex limit, 0 for none")->capture_default_str();

    auto ac = app.add_subcommand("ac", "print the arc-consistent lists");
    ac_in.add(ac);

    ReduceInput reduce_in;
    auto reduce_cmd = app.add_subcommand("reduce", "build G_phi for a DIMACS formula");
    reduce_cmd->add_option("-f,--formula", reduce_in.formula, "DIMACS CNF file")->required();
    reduce_cmd->add_option("--target,-t", reduce_in.target, "A, B or C")->capture_default_str();
    reduce_cmd->add_flag("--bounded", reduce_in.bounded, "degree-bounded construction");
    reduce_cmd->add_option("-o,--output", reduce_in.output, "edge-list output (stdout if omitted)");
    reduce_cmd->add_option("--meta", reduce_in.meta, "role-to-vertex JSON");
    reduce_cmd->add_option("--dot", reduce_in.dot, "DOT rendering");

    vector<string> rt_files, rt_batch;
    string rt_target = "A";
    bool rt_bounded = false;
    unsigned rt_threads = std::max(1u, std::thread::hardware_concurrency());
    auto rt = app.add_subcommand("roundtrip", "check sat(phi) <=> colorable(G_phi) and both translations");
    rt->add_option("-f,--formula", rt_files, "DIMACS CNF file");
    rt->add_option("--batch", rt_batch, "several DIMACS files, checked in parallel");
    rt->add_option("--target,-t", rt_target, "A, B or C")->capture_default_str();
    rt->add_flag("--bounded", rt_bounded, "degree-bounded construction");
    rt->add_option("--threads", rt_threads, "worker threads for --batch");

    GadgetInput gadget_in;
    auto vg = app.add_subcommand("verify-gadgets", "check every built-in gadget with the exact oracle");
    vg->add_option("--target,-t", gadget_in.target, "only gadgets for A, B or C");
    vg->add_option("--report", gadget_in.report, "text or json")->check(CLI::IsMember({ "text", "json" }))->capture_default_str();
    vg->add_option("--fixtures", gadget_in.fixtures, "also write each gadget as a labelled edge list into this directory");
    vg->add_flag("--search", gadget_in.search, "search small digraphs for each variable behavior");
    vg->add_option("--max-vertices", gadget_in.max_vertices, "search size limit (at most 8)")->capture_default_str();

    string classify_graph, classify_bound = "auto";
    bool classify_json = false;
    auto classify = app.add_subcommand("classify", "shape of each weak component under a degree bound");
    classify->add_option("-g,--graph", classify_graph, "input digraph")->required();
    classify->add_option("--bound", classify_bound, "2,1 or 1,2 or auto")->capture_default_str();
    classify->add_flag("--json", classify_json, "machine-readable output");

    string convert_in, convert_out, convert_to;
    auto convert = app.add_subcommand("convert", "edge list <-> DOT");
    convert->add_option("-i,--input", convert_in, "edge list or .dot file")->required();
    convert->add_option("-o,--output", convert_out, "output file (stdout if omitted)");
    convert->add_option("--to", convert_to, "el or dot (default: from the output extension)");

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError & e) {
        return app.exit(e) == 0 ? Exit::positive : Exit::usage;
    }

    try {
        if (solve->parsed())
            return run_solve(solve_in, algo);
        if (count->parsed())
            return run_count(count_in);
        if (ac->parsed())
            return run_ac(ac_in);
        if (reduce_cmd->parsed())
            return run_reduce(reduce_in);
        if (rt->parsed()) {
            auto files = rt_files;
            files.insert(files.end(), rt_batch.begin(), rt_batch.end());
            if (files.empty())
                throw InvalidArgument("roundtrip needs -f or --batch");
            return run_roundtrip(files, rt_target, rt_bounded, rt_threads);
        }
        if (vg->parsed())
            return run_verify_gadgets(gadget_in, seed);
        if (classify->parsed())
            return run_classify(classify_graph, classify_bound, classify_json);
        if (convert->parsed())
            return run_convert(convert_in, convert_out, convert_to);
    }
    catch (const PreconditionError & e) {
        std::cerr << "hcol: " << e.what() << '\n';
        return Exit::precondition;
    }
    catch (const std::exception & e) {
        std::cerr << "hcol: " << e.what() << '\n';
        return Exit::usage;
    }
    return Exit::usage;
}
