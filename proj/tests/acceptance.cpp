// Acceptance gate: eleven numbered checks, one pass/fail line each.
// Usage: qconn_acceptance [--criterion N]   (default: run all)
// Exit code 0 iff every selected criterion passes.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "qconn/adversary.hpp"
#include "qconn/grover.hpp"
#include "qconn/harness.hpp"
#include "qconn/instances.hpp"
#include "qconn/ledger.hpp"
#include "qconn/quantum_connectivity.hpp"
#include "qconn/rng.hpp"
#include "qconn/statevector.hpp"
#include "qconn/verify.hpp"

using namespace qconn;

namespace {

// pinned tolerances and thresholds
constexpr double kOracleTol = 1e-9;            // 1: |closed form - statevector|
constexpr int kExactTrials = 10000;            // 2: trials at the exact geometry
constexpr int kMinTrials = 10000;              // 3: min-finding trials per size
constexpr double kMinRate = 0.5;               // 3: guaranteed success rate
constexpr double kBandZ = 2.576;               // 3: 99% binomial band
constexpr double kErrorRateMax = 0.05;         // 4: q_connected corpus error
constexpr double kSlopeNLo = 1.35;             // 5: matrix-scaling window
constexpr double kSlopeNHi = 1.75;
constexpr double kSlopeKLo = 0.35;             // 6: list-scaling window vs k
constexpr double kSlopeKHi = 0.70;
constexpr double kLearnConstMax = 4.0;         // 7: mean queries / (n sqrt m)
constexpr double kCycleSlopeLo = 1.3;          // 10: adversary bound growth
constexpr double kCycleSlopeHi = 1.7;
constexpr double kAdvTol = 1e-9;               // 10: exact-value comparisons
constexpr double kRuntimeCapSec = 600.0;       // 5, 6: sweep wall-clock caps

struct Outcome {
    bool pass = false;
    std::string detail;
};

Outcome criterion_1() {
    std::ostringstream quiet;
    SuiteResult res = verify_grover_crosscheck(quiet);
    return {res.ok, res.detail};
}

Outcome criterion_2() {
    QueryLedger ledger;
    Rng rng(20260814);
    int found = 0, exact_charge = 0;
    for (int trial = 0; trial < kExactTrials; ++trial) {
        SearchSpace space(
            4, [](std::uint64_t i) { return i == 2; }, ledger);
        std::uint64_t before = ledger.count();
        SearchOutcome out = grover_known_count(space, 1, rng);
        if (out.found && out.index == 2) ++found;
        if (out.queries == 2 && ledger.count() - before == 2) ++exact_charge;
    }
    std::ostringstream ss;
    ss << "N=4 t=1: found " << found << "/" << kExactTrials << ", exact 2-query charge "
       << exact_charge << "/" << kExactTrials;
    return {found == kExactTrials && exact_charge == kExactTrials, ss.str()};
}

Outcome criterion_3() {
    GroverConfig cfg;
    Rng rng(0x3d5a11);
    const int lower = static_cast<int>(
        std::floor(kMinRate * kMinTrials - kBandZ * std::sqrt(kMinTrials * 0.25)));
    bool pass = true;
    std::ostringstream ss;
    ss << "exact-min rate (floor " << lower << "/" << kMinTrials << "):";
    for (std::uint64_t n : {16u, 64u, 128u}) {
        QueryLedger ledger;
        int exact = 0;
        for (int trial = 0; trial < kMinTrials; ++trial) {
            std::vector<std::uint64_t> keys(n);
            for (auto& k : keys) k = rng.next() >> 1;
            std::uint64_t best = *std::min_element(keys.begin(), keys.end());
            SearchOutcome out = find_min_value(keys, ledger, rng, cfg);
            if (out.found && keys[out.index] == best) ++exact;
        }
        ss << " N=" << n << ": " << exact;
        if (exact < lower) pass = false;
    }
    return {pass, ss.str()};
}

Outcome criterion_4() {
    std::vector<TrialRecord> pool;
    std::uint64_t seed = 101;
    for (const char* fam : {"one-cycle", "two-cycle", "gnp"}) {
        SweepConfig cfg;
        cfg.algorithm = "q_connected";
        cfg.family = fam;
        cfg.ns = {16, 32, 64, 128};
        cfg.trials = 42;
        cfg.seed = seed++;
        std::vector<TrialRecord> recs = run_sweep(cfg);
        pool.insert(pool.end(), recs.begin(), recs.end());
    }
    double err = 1.0 - correct_fraction(pool);
    std::ostringstream ss;
    ss << pool.size() << " mixed instances, error rate " << err << " (cap " << kErrorRateMax
       << ")";
    return {pool.size() >= 500 && err <= kErrorRateMax, ss.str()};
}

Outcome criterion_5() {
    auto t0 = std::chrono::steady_clock::now();
    SweepConfig cfg;
    cfg.algorithm = "q_connected";
    cfg.family = "one-cycle";
    cfg.ns = {64, 128, 256, 512, 1024};
    cfg.trials = 50;
    cfg.seed = 201;
    std::vector<TrialRecord> recs = run_sweep(cfg);
    FitResult fit = fit_exponent(recs, "n");
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::ostringstream ss;
    ss << "median-query slope vs n = " << fit.slope << " (window [" << kSlopeNLo << ", "
       << kSlopeNHi << "], " << secs << "s)";
    return {fit.slope >= kSlopeNLo && fit.slope <= kSlopeNHi && secs <= kRuntimeCapSec,
            ss.str()};
}

Outcome criterion_6() {
    auto t0 = std::chrono::steady_clock::now();
    SweepConfig cfg;
    cfg.algorithm = "q_strongly_connected";
    cfg.family = "gadget";
    cfg.ns = {516, 528, 576}; // p = 256 levels with k = 4, 16, 64
    cfg.ks = {4, 16, 64};
    cfg.pair = true;
    cfg.trials = 40;
    cfg.seed = 301;
    std::vector<TrialRecord> recs = run_sweep(cfg);
    FitResult fit = fit_exponent(recs, "k");
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::ostringstream ss;
    ss << "median-query slope vs k = " << fit.slope << " (window [" << kSlopeKLo << ", "
       << kSlopeKHi << "], " << secs << "s)";
    return {fit.slope >= kSlopeKLo && fit.slope <= kSlopeKHi && secs <= kRuntimeCapSec,
            ss.str()};
}

Outcome criterion_7() {
    SweepConfig cfg;
    cfg.algorithm = "q_connected_learning";
    cfg.family = "gnm";
    cfg.ns = {64};
    cfg.ks = {16, 64, 256, 1024}; // exact cell counts m
    cfg.trials = 50;
    cfg.seed = 401;
    std::vector<TrialRecord> recs = run_sweep(cfg);
    double worst = 0.0;
    std::ostringstream ss;
    ss << "mean queries / (n sqrt m):";
    for (std::uint32_t m : {16u, 64u, 256u, 1024u}) {
        double sum = 0.0;
        int cnt = 0;
        for (const auto& r : recs)
            if (r.k == m) {
                sum += static_cast<double>(r.queries);
                ++cnt;
            }
        double ratio = sum / cnt / (64.0 * std::sqrt(static_cast<double>(m)));
        worst = std::max(worst, ratio);
        ss << " m=" << m << ": " << ratio;
    }
    ss << " (cap " << kLearnConstMax << ")";
    return {worst <= kLearnConstMax, ss.str()};
}

Outcome criterion_8() {
    std::ostringstream quiet;
    SuiteResult res = verify_lemma_corpus(quiet);
    return {res.ok, res.detail};
}

Outcome criterion_9() {
    std::ostringstream quiet;
    SuiteResult res = verify_generator_exhaustives(quiet);
    return {res.ok, res.detail};
}

Outcome criterion_10() {
    bool pass = true;
    std::ostringstream ss;

    double parity_worst = 0.0;
    for (std::uint32_t n = 2; n <= 10; ++n) {
        AdversaryParams p = adversary_bound(make_parity_relation(n));
        parity_worst = std::max(parity_worst, std::abs(p.bound - static_cast<double>(n)));
    }
    if (parity_worst > kAdvTol) pass = false;
    ss << "parity |bound-n| <= " << parity_worst << ";";

    bool gadget_ok = true;
    for (std::uint32_t p = 1; p <= 6 && gadget_ok; ++p) {
        for (std::uint32_t k = 2; k <= 5 && gadget_ok; ++k) {
            GadgetRelationResult res = gadget_relation_params(p, k);
            std::uint64_t deg = static_cast<std::uint64_t>(p) * (k - 1) * (k - 1);
            gadget_ok = res.per_x_degree == deg && res.l_backward == k - 1 &&
                        res.l_forward == static_cast<std::uint64_t>(k - 1) * (k - 1);
        }
    }
    if (!gadget_ok) pass = false;
    ss << " gadget degrees/l-values " << (gadget_ok ? "exact" : "WRONG") << ";";

    std::vector<std::pair<double, double>> pts;
    for (std::uint32_t n = 9; n <= 30; ++n)
        pts.emplace_back(n, cycle_relation_params(n).params.bound);
    FitResult fit = fit_loglog(pts);
    if (fit.slope < kCycleSlopeLo || fit.slope > kCycleSlopeHi) pass = false;
    ss << " cycle bound slope " << fit.slope << " in [" << kCycleSlopeLo << ", "
       << kCycleSlopeHi << "]";
    return {pass, ss.str()};
}

Outcome criterion_11() {
    SweepConfig cfg;
    cfg.algorithm = "q_connected";
    cfg.family = "one-cycle";
    cfg.ns = {16, 32};
    cfg.trials = 20;
    cfg.seed = 777;
    std::string a = csv_string(run_sweep(cfg));
    std::string b = csv_string(run_sweep(cfg));
    std::ostringstream ss;
    ss << "repeated sweep CSV: " << a.size() << " bytes, "
       << (a == b ? "byte-identical" : "MISMATCH");
    return {a == b && !a.empty(), ss.str()};
}

} // namespace

int main(int argc, char** argv) {
    int only = 0;
    for (int i = 1; i < argc; ++i) {
        std::string arg = argv[i];
        if (arg == "--criterion" && i + 1 < argc) {
            only = std::atoi(argv[++i]);
        } else {
            std::cerr << "usage: qconn_acceptance [--criterion N]\n";
            return 2;
        }
    }

    const std::vector<std::function<Outcome()>> criteria = {
        criterion_1, criterion_2, criterion_3, criterion_4, criterion_5, criterion_6,
        criterion_7, criterion_8, criterion_9, criterion_10, criterion_11,
    };
    if (only < 0 || only > static_cast<int>(criteria.size())) {
        std::cerr << "criterion must be in 1.." << criteria.size() << "\n";
        return 2;
    }

    bool all_pass = true;
    int ran = 0, passed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        if (only != 0 && static_cast<int>(i + 1) != only) continue;
        auto t0 = std::chrono::steady_clock::now();
        Outcome out;
        try {
            out = criteria[i]();
        } catch (const std::exception& e) {
            out = {false, std::string("exception: ") + e.what()};
        }
        double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        ++ran;
        passed += out.pass;
        all_pass = all_pass && out.pass;
        std::cout << "criterion " << (i + 1) << ": " << (out.pass ? "PASS" : "FAIL") << "  "
                  << out.detail << "  [" << secs << "s]\n";
    }
    std::cout << "acceptance: " << passed << "/" << ran << " criteria passed\n";
    return all_pass ? 0 : 1;
}
