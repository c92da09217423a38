#include <hgw/behavior.hh>
#include <hgw/document.hh>
#include <hgw/entailment.hh>
#include <hgw/errors.hh>
#include <hgw/family.hh>
#include <hgw/fixtures.hh>
#include <hgw/minimality.hh>
#include <hgw/orbit_relation.hh>
#include <hgw/random_instances.hh>
#include <hgw/solver.hh>
#include <hgw/type_structure.hh>

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

using namespace hgw;

using std::cerr;
using std::cout;
using std::ifstream;
using std::nullopt;
using std::optional;
using std::ostream;
using std::string;
using std::to_string;
using std::vector;

namespace
{
    constexpr int exit_success = 0, exit_unsat = 1, exit_error = 2;

    auto read_text(const string & path) -> string
    {
        if (path == "-")
            return { std::istreambuf_iterator<char>{ std::cin }, {} };
        ifstream in{ path };
        if (! in)
            throw Error{ "cannot read '" + path + "'" };
        return { std::istreambuf_iterator<char>{ in }, {} };
    }

    auto write_text(const string & path, const string & text) -> void
    {
        if (path.empty() || path == "-") {
            cout << text;
            return;
        }
        std::ofstream out{ path };
        if (! out || ! (out << text))
            throw Error{ "cannot write '" + path + "'" };
    }

    auto parse_count(const string & text, const string & what) -> CountOrOmega
    {
        if (text == "omega")
            return nullopt;
        try {
            std::size_t used = 0;
            auto value = std::stoul(text, &used);
            if (used == text.size())
                return unsigned(value);
        }
        catch (const std::exception &) {
        }
        throw CLI::ValidationError{ what, "expected a positive integer or 'omega'" };
    }

    auto parse_auto(const string & text, const string & what) -> optional<unsigned>
    {
        if (text == "auto")
            return nullopt;
        auto c = parse_count(text, what);
        if (! c)
            throw CLI::ValidationError{ what, "expected an integer or 'auto'" };
        return *c;
    }

    struct FamilyOptions
    {
        string kind = "random";
        unsigned k = 3;
        string size = "omega", count = "omega";
        bool complement = false;

        auto add_to(CLI::App & app) -> void
        {
            app.add_option("--family", kind, "random, henson or cliques")
                ->check(CLI::IsMember({ "random", "henson", "cliques" }))
                ->capture_default_str();
            app.add_option("--k", k, "Henson parameter: the forbidden clique size")->capture_default_str();
            app.add_option("--size", size, "Cliques: clique size, integer or omega")->capture_default_str();
            app.add_option("--count", count, "Cliques: number of cliques, integer or omega")->capture_default_str();
            app.add_flag("--complement", complement, "Use the complement of the family");
        }

        auto make() const -> GraphFamily
        {
            auto family = kind == "random"  ? GraphFamily::random()
                : kind == "henson"          ? GraphFamily::henson(k)
                                            : GraphFamily::cliques(parse_count(size, "--size"), parse_count(count, "--count"));
            return complement ? GraphFamily::complement(family) : family;
        }
    };

    auto report_verdict(ostream & out, const Instance & inst, const Verdict & v) -> void
    {
        out << "status: " << to_string(v.status) << "\n";
        out << "mode: " << to_string(v.mode) << "\n";
        if (v.mode != Mode::Oracle)
            out << "minimality: (" << v.k << ", " << v.l << ")\n";
        if (v.assumed_width)
            out << "note: sat assuming relational width (" << v.k << ", " << v.l << ")\n";
        if (v.certificate) {
            out << "certificate: " << v.certificate->to_string() << "\n";
            auto r = realize_certificate(*v.certificate, inst.family());
            out << "assignment:";
            for (unsigned i = 0; i < inst.variable_count(); ++i)
                out << " " << inst.variables()[i] << "=" << r.vertex_of[i];
            out << "\n";
        }
    }

    struct SolveOptions
    {
        string mode = "search", in, l = "auto", priority = "E,N,=", cert;
        unsigned k = 2, max_variables = default_max_variables;
    };

    auto run_solve(const SolveOptions & o) -> int
    {
        auto inst = parse_instance(read_text(o.in));
        auto priority = parse_priority(o.priority);
        auto l = parse_auto(o.l, "--l");

        Verdict v;
        if (o.mode == "oracle")
            v = oracle(inst, o.max_variables);
        else if (o.mode == "width")
            v = decide_width(inst, o.k, l ? *l : l_value(inst.family()));
        else
            v = solve_search(inst, priority, l);

        report_verdict(cout, inst, v);
        if (! o.cert.empty())
            write_text(o.cert, serialize_verdict(inst, v));
        return v.status == Status::Sat ? exit_success : exit_unsat;
    }

    struct MinimalizeOptions
    {
        unsigned k = 2;
        string l = "auto", in, out;
        bool report = false;
    };

    auto run_minimalize(const MinimalizeOptions & o) -> int
    {
        auto inst = parse_instance(read_text(o.in));
        auto l = parse_auto(o.l, "--l").value_or(l_value(inst.family()));
        auto m = establish_minimality(inst, o.k, l);
        auto trivial = is_trivial(m);
        write_text(o.out, serialize_instance(m.instance()));

        if (o.report) {
            ostream & out = (o.out.empty() || o.out == "-") ? cerr : cout;
            out << "minimality: (" << o.k << ", " << l << ")\n";
            out << "constraints: " << m.instance().constraints().size() << "\n";
            out << "trivial: " << (trivial ? "yes" : "no") << "\n";
            if (! trivial && o.k >= 2) {
                out << "simple: " << (is_simple(m) ? "yes" : "no") << "\n";
                auto & vars = m.instance().variables();
                for (unsigned i = 0; i < vars.size(); ++i)
                    for (unsigned j = i + 1; j < vars.size(); ++j)
                        out << "pair " << vars[i] << " " << vars[j] << ": " << m.pair_projection(i, j).name() << "\n";
            }
        }
        return trivial ? exit_unsat : exit_success;
    }

    struct ClassifyOptions
    {
        string in, relation, json;
    };

    auto run_classify(const ClassifyOptions & o) -> int
    {
        auto inst = parse_instance(read_text(o.in));
        vector<string> names;
        if (! o.relation.empty()) {
            (void) inst.relation(o.relation);
            names.push_back(o.relation);
        }
        else
            for (auto & [name, rel] : inst.relations())
                if (! is_builtin_relation_name(name))
                    names.push_back(name);

        nlohmann::ordered_json sidecar = nlohmann::ordered_json::object();
        for (auto & name : names) {
            auto & rel = inst.relation(name);
            cout << "relation " << name << " (arity " << rel.arity() << ", " << rel.orbits().size() << " orbits)\n";
            if (rel.arity() != 4) {
                cout << "  skipped: shapes are quaternary\n";
                continue;
            }
            auto reports = classify(rel, shape_catalog());
            auto & entries = sidecar[name] = nlohmann::ordered_json::array();
            for (auto & r : reports) {
                cout << "  " << r.shape << ": entails=" << (r.entails ? "yes" : "no")
                     << " efficient=" << (r.efficient ? "yes" : "no")
                     << " side-conditions=" << (r.side_conditions_hold ? "yes" : "no");
                if (r.witness_forward)
                    cout << " forward=" << r.witness_forward->to_string();
                if (r.witness_backward)
                    cout << " backward=" << r.witness_backward->to_string();
                cout << "\n";

                nlohmann::ordered_json entry;
                entry["shape"] = r.shape;
                entry["entails"] = r.entails;
                entry["efficient"] = r.efficient;
                entry["side_conditions_hold"] = r.side_conditions_hold;
                entry["witness_forward"] = r.witness_forward ? nlohmann::ordered_json(r.witness_forward->to_string()) : nullptr;
                entry["witness_backward"] = r.witness_backward ? nlohmann::ordered_json(r.witness_backward->to_string()) : nullptr;
                entries.push_back(entry);
            }
        }
        if (! o.json.empty())
            write_text(o.json, sidecar.dump(2) + "\n");
        return exit_success;
    }

    struct BehaviorsOptions
    {
        string spec, check, relation;
        bool print = false;
    };

    auto run_behaviors(const BehaviorsOptions & o) -> int
    {
        auto b = parse_behavior(o.spec);
        if (o.print || o.check.empty())
            cout << format_table(b);
        if (o.check.empty())
            return exit_success;

        auto inst = parse_instance(read_text(o.check));
        bool all_preserved = true;
        for (auto & [name, rel] : inst.relations()) {
            if (! o.relation.empty() && name != o.relation)
                continue;
            auto report = preserves(b, rel, inst.family());
            cout << name << ": " << to_string(report.status);
            if (! report.arguments.empty()) {
                cout << " on";
                for (auto & a : report.arguments)
                    cout << " " << a.to_string();
                if (report.image)
                    cout << " giving " << report.image->to_string();
            }
            cout << "\n";
            if (report.status != PreservationReport::Status::Preserved)
                all_preserved = false;
        }
        return all_preserved ? exit_success : exit_unsat;
    }

    struct TranslateOptions
    {
        string m = "auto", in, out;
        bool refine = false;
    };

    auto run_translate(const TranslateOptions & o) -> int
    {
        auto inst = parse_instance(read_text(o.in));
        auto m = parse_auto(o.m, "--m").value_or(default_m(inst));
        auto ts = build_type_structure(inst.relations(), inst.family(), m);
        auto ti = translate_instance(inst, ts);
        if (o.refine) {
            auto source = establish_minimality(inst, 2 * m, 3 * m);
            ti = refine_translation(source.instance(), ts, ti);
        }
        write_text(o.out, serialize_translation(ts, ti));
        return exit_success;
    }

    auto run_enumerate_types(const FamilyOptions & f, unsigned arity) -> int
    {
        for (auto & t : enumerate_types(f.make(), arity).orbits())
            cout << t.to_string() << "\n";
        return exit_success;
    }

    auto run_fixtures(const FamilyOptions & f, const string & out_dir) -> int
    {
        auto family = f.make();
        vector<std::pair<string, Instance>> docs;
        docs.emplace_back("i1", fixture_i1(family));
        if (l_value(family) > 3)
            docs.emplace_back("i2-source", fixture_i2_source(family));
        docs.emplace_back("i2", fixture_i2(family));

        for (auto & [name, inst] : docs) {
            if (out_dir.empty())
                cout << "# " << name << "\n" << serialize_instance(inst);
            else {
                std::filesystem::create_directories(out_dir);
                auto path = (std::filesystem::path{ out_dir } / (name + ".json")).string();
                write_text(path, serialize_instance(inst));
                cout << path << "\n";
            }
        }
        return exit_success;
    }

    struct BenchOptions
    {
        unsigned instances = 100;
        unsigned long long seed = 1;
        bool timings = false;
        vector<string> families;
    };

    auto bench_families(const vector<string> & requested) -> vector<GraphFamily>
    {
        vector<GraphFamily> all{ GraphFamily::random(), GraphFamily::henson(3), GraphFamily::henson(4),
            GraphFamily::cliques(nullopt, 2), GraphFamily::cliques(2, nullopt), GraphFamily::cliques(nullopt, nullopt) };
        if (requested.empty())
            return all;
        vector<GraphFamily> result;
        for (auto & name : requested) {
            auto it = std::find_if(all.begin(), all.end(), [&](const GraphFamily & f) { return f.name() == name; });
            if (it == all.end())
                throw CLI::ValidationError{ "--families", "unknown family '" + name + "'" };
            result.push_back(*it);
        }
        return result;
    }

    auto run_bench(const BenchOptions & o) -> int
    {
        using clock = std::chrono::steady_clock;
        auto seconds = [](clock::duration d) { return std::chrono::duration<double>(d).count(); };
        bool all_agree = true;

        for (auto & family : bench_families(o.families)) {
            std::mt19937_64 rng{ o.seed };
            unsigned search_disagree = 0, sat = 0;
            clock::duration oracle_time{}, search_time{};
            for (unsigned i = 0; i < o.instances; ++i) {
                auto inst = random_instance(family, rng);
                auto t0 = clock::now();
                auto expected = oracle(inst);
                auto t1 = clock::now();
                auto got = solve_search(inst);
                auto t2 = clock::now();
                oracle_time += t1 - t0;
                search_time += t2 - t1;
                sat += expected.status == Status::Sat;
                search_disagree += expected.status != got.status;
            }

            std::mt19937_64 builtin_rng{ o.seed };
            RandomInstanceOptions builtins;
            builtins.builtins_only = true;
            unsigned width_disagree = 0;
            clock::duration width_time{};
            for (unsigned i = 0; i < o.instances; ++i) {
                auto inst = random_instance(family, builtin_rng, builtins);
                auto t0 = clock::now();
                auto got = decide_width(inst);
                width_time += clock::now() - t0;
                width_disagree += got.status != oracle(inst).status;
            }

            all_agree = all_agree && search_disagree == 0 && width_disagree == 0;
            cout << family.name() << ": instances=" << o.instances << " sat=" << sat
                 << " search-vs-oracle-disagreements=" << search_disagree
                 << " width-vs-oracle-disagreements=" << width_disagree;
            if (o.timings)
                cout << " oracle-s=" << seconds(oracle_time) << " search-s=" << seconds(search_time)
                     << " width-s=" << seconds(width_time);
            cout << "\n";
        }

        if (o.timings) {
            std::mt19937_64 rng{ o.seed };
            for (unsigned n = 10; n <= 60; n += 10) {
                auto inst = random_binary_instance(GraphFamily::random(), rng, n, 3 * n);
                auto t0 = clock::now();
                auto m = establish_minimality(inst, 2, 3);
                auto t1 = clock::now();
                cout << "establish (2, 3) on " << n << " variables: " << seconds(t1 - t0) << " s"
                     << (is_trivial(m) ? " (trivial)" : "") << "\n";
            }
        }
        return all_agree ? exit_success : exit_unsat;
    }
}

auto main(int argc, char * argv[]) -> int
{
    CLI::App app{ "Decision procedures for CSPs over reducts of homogeneous graphs" };
    app.require_subcommand(1);

    SolveOptions solve_options;
    auto solve = app.add_subcommand("solve", "Decide an instance");
    solve->add_option("--mode", solve_options.mode, "width, search or oracle")
        ->check(CLI::IsMember({ "width", "search", "oracle" }))
        ->capture_default_str();
    solve->add_option("--in", solve_options.in, "Instance document, or - for standard input")->required();
    solve->add_option("--k", solve_options.k, "Width mode: k")->capture_default_str();
    solve->add_option("--l", solve_options.l, "l, or auto for the family's bound size")->capture_default_str();
    solve->add_option("--priority", solve_options.priority, "Label order for pinning and branching")
        ->capture_default_str();
    solve->add_option("--max-variables", solve_options.max_variables, "Oracle variable cap")->capture_default_str();
    solve->add_option("--cert", solve_options.cert, "Write the verdict and certificate as JSON");

    MinimalizeOptions minimalize_options;
    auto minimalize = app.add_subcommand("minimalize", "Establish (k, l)-minimality");
    minimalize->add_option("--k", minimalize_options.k)->capture_default_str();
    minimalize->add_option("--l", minimalize_options.l, "An integer, or auto for the family's bound size")
        ->capture_default_str();
    minimalize->add_option("--in", minimalize_options.in, "Instance document")->required();
    minimalize->add_option("--out", minimalize_options.out, "Output document (default: standard output)");
    minimalize->add_flag("--report", minimalize_options.report, "Describe the result");

    ClassifyOptions classify_options;
    auto classify_cmd = app.add_subcommand("classify", "Report which implication shapes each quaternary relation entails");
    classify_cmd->add_option("--in", classify_options.in, "Instance document")->required();
    classify_cmd->add_option("--relation", classify_options.relation, "Only this relation");
    classify_cmd->add_option("--json", classify_options.json, "Also write the reports as JSON");

    BehaviorsOptions behaviors_options;
    auto behaviors = app.add_subcommand("behaviors", "Print a behavior table or check it against relations");
    behaviors->add_option("--spec", behaviors_options.spec, "e.g. max:balanced, min:n_dominated, h_c2omega")
        ->required();
    behaviors->add_flag("--print", behaviors_options.print, "Print the table");
    behaviors->add_option("--check", behaviors_options.check, "Check preservation of the relations of this document");
    behaviors->add_option("--relation", behaviors_options.relation, "Only check this relation");

    TranslateOptions translate_options;
    auto translate = app.add_subcommand("translate", "Translate an instance to the finite structure of m-types");
    translate->add_option("--m", translate_options.m, "An integer, or auto")->capture_default_str();
    translate->add_option("--in", translate_options.in, "Instance document")->required();
    translate->add_option("--out", translate_options.out, "Output document (default: standard output)");
    translate->add_flag("--refine", translate_options.refine, "Refine using the (2m, 3m)-minimal source");

    FamilyOptions enumerate_family;
    unsigned arity = 2;
    auto enumerate = app.add_subcommand("enumerate-types", "List the orbits of tuples of a family");
    enumerate_family.add_to(*enumerate);
    enumerate->add_option("--arity", arity)->required();

    FamilyOptions fixture_family;
    string out_dir;
    auto fixtures = app.add_subcommand("fixtures", "Write the unsolvable minimal fixtures of a family");
    fixture_family.add_to(*fixtures);
    fixtures->add_option("--out-dir", out_dir, "Directory for the documents (default: standard output)");

    BenchOptions bench_options;
    auto bench = app.add_subcommand("bench", "Cross-check the solvers on seeded random instances");
    bench->add_option("--instances", bench_options.instances, "Instances per family")->capture_default_str();
    bench->add_option("--seed", bench_options.seed)->capture_default_str();
    bench->add_option("--families", bench_options.families, "Family names, e.g. random henson(3)");
    bench->add_flag("--timings", bench_options.timings, "Also report wall times");

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::CallForHelp & e) {
        return app.exit(e);
    }
    catch (const CLI::ParseError & e) {
        app.exit(e);
        return exit_error;
    }

    try {
        if (*solve)
            return run_solve(solve_options);
        if (*minimalize)
            return run_minimalize(minimalize_options);
        if (*classify_cmd)
            return run_classify(classify_options);
        if (*behaviors)
            return run_behaviors(behaviors_options);
        if (*translate)
            return run_translate(translate_options);
        if (*enumerate)
            return run_enumerate_types(enumerate_family, arity);
        if (*fixtures)
            return run_fixtures(fixture_family, out_dir);
        if (*bench)
            return run_bench(bench_options);
    }
    catch (const CLI::ValidationError & e) {
        cerr << "error: " << e.what() << "\n";
        return exit_error;
    }
    catch (const std::exception & e) {
        cerr << "error: " << e.what() << "\n";
        return exit_error;
    }
    return exit_error;
}
