#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "qconn/graph_io.hpp"
#include "qconn/grover.hpp"

namespace qconn {

struct TrialRecord {
    std::string algorithm;
    std::string model; // matrix | list
    std::string family;
    std::uint32_t n = 0;
    std::uint32_t k = 0; // edge-count families store m here
    std::uint32_t trial = 0;
    std::uint64_t seed = 0;
    std::uint64_t queries = 0;
    bool answer = false;
    bool truth = false;
    bool correct = false;
    std::uint64_t ms = 0;
};

struct SweepConfig {
    std::string algorithm;
    std::string family;
    std::vector<std::uint32_t> ns;
    std::vector<std::uint32_t> ks{0}; // zipped with ns when pair, crossed otherwise
    bool pair = false;
    std::uint32_t trials = 50;
    std::uint64_t seed = 1;
    GroverConfig grover;
    std::string out_csv;
    std::string report_json;
    std::string fit_x = "n"; // n | k | m

    void validate() const; // throws on unknown algorithm/family or bad shape
};

struct FitResult {
    double slope = 0.0;
    double intercept = 0.0;
    double residual = 0.0;
    std::uint32_t points = 0;
};

bool known_family(const std::string& name);
bool known_algorithm(const std::string& name);
std::vector<std::string> family_names();
std::vector<std::string> algorithm_names();

// Builds one instance of the named family. k is the clique size (gadget),
// out-degree (rand-list), or cell count m (gnm); ignored elsewhere.
GraphFile make_instance(const std::string& family, std::uint32_t n, std::uint32_t k,
                        std::uint64_t seed);

SweepConfig parse_sweep_config(std::istream& in);
SweepConfig load_sweep_config(const std::string& path);

// Deterministic: per-trial seed = hash chain over (base seed, n, k, trial).
std::vector<TrialRecord> run_sweep(const SweepConfig& cfg);

struct SingleRun {
    bool answer = false;
    bool truth = false;
    std::uint64_t queries = 0;
};

// One algorithm run on a prebuilt graph, with classical ground truth alongside.
SingleRun run_single(const std::string& algorithm, const GraphFile& g, const GroverConfig& cfg,
                     std::uint64_t seed);

// Least squares of log(median queries) against log(x), x_field in {n,k,m}.
FitResult fit_exponent(const std::vector<TrialRecord>& records, const std::string& x_field);
FitResult fit_loglog(const std::vector<std::pair<double, double>>& points);

void emit_csv(const std::vector<TrialRecord>& records, std::ostream& out);
void emit_csv_file(const std::vector<TrialRecord>& records, const std::string& path);
std::string csv_string(const std::vector<TrialRecord>& records);
std::vector<TrialRecord> parse_csv(std::istream& in);

std::string report_json(const FitResult& fit);
void emit_report(const FitResult& fit, const std::string& path);

double correct_fraction(const std::vector<TrialRecord>& records);

} // namespace qconn
