#include "qconn/cli.hpp"

#include <iostream>

#include "CLI11.hpp"
#include "qconn/adversary.hpp"
#include "qconn/harness.hpp"
#include "qconn/verify.hpp"

namespace qconn {

namespace {

int do_gen(const std::string& family, std::uint32_t n, std::uint32_t k, std::uint64_t seed,
           const std::string& out) {
    GraphFile g = make_instance(family, n, k, seed);
    save_graph(g, out);
    std::cout << "wrote " << out << "\n";
    return 0;
}

int do_run(const std::string& algo, const std::string& path, std::uint64_t seed) {
    GraphFile g = load_graph(path);
    GroverConfig cfg;
    cfg.rng_seed = seed;
    SingleRun r = run_single(algo, g, cfg, seed);
    std::cout << "answer=" << (r.answer ? "true" : "false")
              << " truth=" << (r.truth ? "true" : "false") << " queries=" << r.queries << "\n";
    return 0;
}

int do_bench(const std::string& config_path) {
    SweepConfig cfg = load_sweep_config(config_path);
    std::vector<TrialRecord> records = run_sweep(cfg);
    if (cfg.out_csv.empty()) {
        emit_csv(records, std::cout);
    } else {
        emit_csv_file(records, cfg.out_csv);
        std::cout << "records=" << records.size() << " correct=" << correct_fraction(records)
                  << " csv=" << cfg.out_csv << "\n";
    }
    if (!cfg.report_json.empty()) {
        FitResult fit = fit_exponent(records, cfg.fit_x);
        emit_report(fit, cfg.report_json);
        std::cout << "slope=" << fit.slope << " report=" << cfg.report_json << "\n";
    }
    return 0;
}

void print_params(const char* head, const AdversaryParams& p) {
    std::cout << head << " m=" << p.m << " m_prime=" << p.m_prime << " l_max=" << p.l_max
              << " bound=" << p.bound << "\n";
}

int do_adversary(const std::string& family, std::uint32_t n, std::uint32_t p, std::uint32_t k,
                 bool check) {
    if (family == "parity") {
        Relation rel = make_parity_relation(n);
        AdversaryParams params = adversary_bound(rel);
        std::cout << "family=parity n=" << n;
        print_params("", params);
        return 0;
    }
    if (family == "cycle") {
        CycleRelationResult res = cycle_relation_params(n);
        std::cout << "family=cycle n=" << n << " per_x_degree=" << res.per_x_degree
                  << " l_edge=" << res.l_edge << " l_nonedge_max=" << res.l_nonedge_max;
        print_params("", res.params);
        if (check) {
            AdversaryParams generic = adversary_bound(materialize_cycle_relation(n));
            print_params("generic", generic);
            if (generic.l_max != res.params.l_max || generic.m != res.params.m)
                throw std::runtime_error("cycle relation cross-check mismatch");
            std::cout << "check=ok\n";
        }
        return 0;
    }
    if (family == "gadget") {
        GadgetRelationResult res = gadget_relation_params(p, k);
        std::cout << "family=gadget p=" << p << " k=" << k << " l_backward=" << res.l_backward
                  << " l_forward=" << res.l_forward;
        print_params("", res.params);
        if (check) {
            AdversaryParams generic = adversary_bound(materialize_gadget_relation(p, k));
            print_params("generic", generic);
            if (generic.m != res.params.m || generic.l_max != res.params.l_max)
                throw std::runtime_error("gadget relation cross-check mismatch");
            std::cout << "check=ok\n";
        }
        return 0;
    }
    std::cerr << "unknown adversary family: " << family << " (parity|cycle|gadget)\n";
    return 2;
}

int do_verify(const std::string& suite) {
    SuiteResult res = run_suite(suite, std::cout);
    return res.ok ? 0 : 1;
}

} // namespace

int cli_main(const std::vector<std::string>& args) {
    CLI::App app{"quantum graph connectivity toolkit"};
    app.require_subcommand(1);

    std::string family = "one-cycle", out, algo = "q_connected", graph_path, config_path;
    std::string suite = "all";
    std::uint32_t n = 8, k = 0, p = 2;
    std::uint64_t seed = 1;
    bool check = false;

    CLI::App* gen = app.add_subcommand("gen", "generate an instance file");
    gen->add_option("--family", family, "instance family")->required();
    gen->add_option("--n", n, "vertex count")->required();
    gen->add_option("--k", k, "degree / clique size / cell count, family dependent");
    gen->add_option("--seed", seed, "generator seed");
    gen->add_option("--out", out, "output path")->required();

    CLI::App* run = app.add_subcommand("run", "run one algorithm on a graph file");
    run->add_option("--algo", algo, "algorithm id")->required();
    run->add_option("--graph", graph_path, "graph file path")->required();
    run->add_option("--seed", seed, "algorithm seed");

    CLI::App* bench = app.add_subcommand("bench", "run a sweep from a config file");
    bench->add_option("--config", config_path, "key=value sweep config")->required();

    CLI::App* adv = app.add_subcommand("adversary", "lower-bound parameter tables");
    adv->add_option("--family", family, "parity | cycle | gadget")->required();
    adv->add_option("--n", n, "instance size (parity, cycle)");
    adv->add_option("--p", p, "gadget level count");
    adv->add_option("--k", k, "gadget clique size");
    adv->add_flag("--check", check, "cross-check against the materialized relation");

    CLI::App* ver = app.add_subcommand("verify", "run invariant suites");
    ver->add_option("--suite", suite,
                    "grover-crosscheck | lemma-corpus | generator-exhaustives | all");

    std::vector<const char*> argv;
    argv.push_back("qconn");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (gen->parsed()) return do_gen(family, n, k, seed, out);
        if (run->parsed()) return do_run(algo, graph_path, seed);
        if (bench->parsed()) return do_bench(config_path);
        if (adv->parsed()) return do_adversary(family, n, p, k == 0 ? 3 : k, check);
        if (ver->parsed()) return do_verify(suite);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

} // namespace qconn
