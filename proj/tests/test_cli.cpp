#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "doctest.h"
#include "qconn/cli.hpp"
#include "qconn/graph.hpp"
#include "qconn/graph_io.hpp"
#include "qconn/harness.hpp"

using namespace qconn;

namespace {

// capture stdout (and swallow stderr) around a cli_main call
struct Captured {
    int code = 0;
    std::string out;
};

Captured run_cli(const std::vector<std::string>& args) {
    std::ostringstream sink, err_sink;
    std::streambuf* old_out = std::cout.rdbuf(sink.rdbuf());
    std::streambuf* old_err = std::cerr.rdbuf(err_sink.rdbuf());
    Captured c;
    c.code = cli_main(args);
    std::cout.rdbuf(old_out);
    std::cerr.rdbuf(old_err);
    c.out = sink.str();
    return c;
}

} // namespace

TEST_CASE("unknown subcommands exit 2") {
    CHECK(run_cli({"frobnicate"}).code == 2);
    CHECK(run_cli({}).code == 2);
    CHECK(run_cli({"run", "--algo", "q_connected"}).code == 2); // missing --graph
}

TEST_CASE("gen then run round trips through files") {
    std::string path = "cli_cycle.txt";
    Captured gen = run_cli({"gen", "--family", "one-cycle", "--n", "12", "--seed", "4",
                            "--out", path});
    CHECK(gen.code == 0);
    std::ifstream probe(path);
    CHECK(probe.good());
    probe.close();

    Captured run = run_cli({"run", "--algo", "q_connected", "--graph", path, "--seed", "9"});
    CHECK(run.code == 0);
    CHECK(run.out.find("answer=") != std::string::npos);
    CHECK(run.out.find("truth=true") != std::string::npos);
    std::remove(path.c_str());
}

TEST_CASE("running on the empty 4-vertex graph prints answer=false") {
    std::string path = "cli_empty.txt";
    save_graph(MatrixGraph::make(4, false), path);
    Captured run = run_cli({"run", "--algo", "q_connected", "--graph", path});
    CHECK(run.code == 0);
    CHECK(run.out.find("answer=false") != std::string::npos);
    std::remove(path.c_str());
}

TEST_CASE("bench writes the configured CSV") {
    std::string cfg_path = "cli_sweep.cfg";
    std::string csv_path = "cli_sweep.csv";
    {
        std::ofstream cfg(cfg_path);
        cfg << "algorithm=q_connected\nfamily=one-cycle\nn=8,12\ntrials=2\nseed=7\nout="
            << csv_path << "\n";
    }
    Captured bench = run_cli({"bench", "--config", cfg_path});
    CHECK(bench.code == 0);
    std::ifstream in(csv_path);
    REQUIRE(in.good());
    std::vector<TrialRecord> recs = parse_csv(in);
    CHECK(recs.size() == 4);
    in.close();
    std::remove(cfg_path.c_str());
    std::remove(csv_path.c_str());
}

TEST_CASE("bench rejects a broken config with a nonzero code") {
    std::string cfg_path = "cli_bad.cfg";
    {
        std::ofstream cfg(cfg_path);
        cfg << "algorithm=q_connected\nfamily=one-cycle\nn=8\nwat=1\n";
    }
    CHECK(run_cli({"bench", "--config", cfg_path}).code == 1);
    std::remove(cfg_path.c_str());
    CHECK(run_cli({"bench", "--config", "missing.cfg"}).code == 1);
}

TEST_CASE("adversary tables print the parameter line") {
    Captured parity = run_cli({"adversary", "--family", "parity", "--n", "5"});
    CHECK(parity.code == 0);
    CHECK(parity.out.find("bound=5") != std::string::npos);

    Captured gadget = run_cli({"adversary", "--family", "gadget", "--p", "2", "--k", "2",
                               "--check"});
    CHECK(gadget.code == 0);
    CHECK(gadget.out.find("check=ok") != std::string::npos);

    CHECK(run_cli({"adversary", "--family", "saturn"}).code == 2);
}

TEST_CASE("verify subcommand gates on suite success") {
    Captured ok = run_cli({"verify", "--suite", "generator-exhaustives"});
    CHECK(ok.code == 0);
    CHECK(ok.out.find("failures=0") != std::string::npos);
    CHECK(run_cli({"verify", "--suite", "nonsense"}).code == 1);
}
