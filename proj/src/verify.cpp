#include "qconn/verify.hpp"

#include <cmath>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "qconn/grover.hpp"
#include "qconn/instances.hpp"
#include "qconn/ledger.hpp"
#include "qconn/quantum_connectivity.hpp"
#include "qconn/rng.hpp"
#include "qconn/statevector.hpp"

namespace qconn {

SuiteResult verify_grover_crosscheck(std::ostream& log) {
    double worst = 0.0;
    std::uint64_t cases = 0;
    for (std::uint64_t n = 2; n <= 64; ++n) {
        for (std::uint64_t t = 1; t <= n; ++t) {
            std::vector<std::uint64_t> marked(t);
            std::iota(marked.begin(), marked.end(), 0);
            for (std::uint64_t j = 0; j <= 20; ++j) {
                double closed = success_prob_known_t(n, t, j);
                double sv = statevector_success_prob(n, marked, j);
                worst = std::max(worst, std::abs(closed - sv));
                ++cases;
            }
        }
    }
    SuiteResult res;
    res.ok = worst <= 1e-9;
    std::ostringstream ss;
    ss << "grover-crosscheck: cases=" << cases << " worst_abs_diff=" << worst
       << (res.ok ? " ok" : " FAIL");
    res.detail = ss.str();
    log << res.detail << '\n';
    return res;
}

SuiteResult verify_lemma_corpus(std::ostream& log) {
    SuiteResult res;
    std::uint64_t checked = 0, skipped = 0, drawn = 0, failures = 0;
    Rng rng(0x1e44a);
    while (checked < 1000 && drawn < 200000) {
        std::uint32_t n = 5 + static_cast<std::uint32_t>(rng.below(36));
        std::uint32_t k = 2 + static_cast<std::uint32_t>(drawn % 3);
        ListGraph g = gen_random_list(n, k, rng.next());
        ++drawn;
        auto verdict = reduction_lemma_check(g);
        if (!verdict) {
            ++skipped;
            continue;
        }
        ++checked;
        if (!*verdict) ++failures;
    }

    std::uint64_t gadget_checked = 0, gadget_skipped = 0;
    for (std::uint32_t p = 1; p <= 6; ++p) {
        for (std::uint32_t k = 2; k <= 4; ++k) {
            for (std::uint32_t bits = 0; bits < (1u << p); ++bits) {
                GadgetSpec s;
                s.k = k;
                s.x.resize(p);
                for (std::uint32_t i = 0; i < p; ++i) s.x[i] = (bits >> i) & 1;
                s.seed = mix_seed(mix_seed(0x9ad9e7, p * 8 + k), bits);
                ListGraph g = gen_origin_gadget(s);
                auto verdict = reduction_lemma_check(g);
                // spanning from vertex 0 happens exactly on odd parity
                if (verdict.has_value() != parity_of(s.x)) ++failures;
                if (!verdict) {
                    ++gadget_skipped;
                    continue;
                }
                ++gadget_checked;
                if (!*verdict) ++failures;
            }
        }
    }

    res.ok = failures == 0 && checked == 1000;
    std::ostringstream ss;
    ss << "lemma-corpus: random_checked=" << checked << " random_skipped=" << skipped
       << " gadget_checked=" << gadget_checked << " gadget_skipped=" << gadget_skipped
       << " counterexamples=" << failures << (res.ok ? " ok" : " FAIL");
    res.detail = ss.str();
    log << res.detail << '\n';
    return res;
}

SuiteResult verify_generator_exhaustives(std::ostream& log) {
    SuiteResult res;
    std::uint64_t parity_cases = 0, gadget_cases = 0, failures = 0;
    for (std::uint32_t p = 1; p <= 13; ++p) {
        for (std::uint32_t bits = 0; bits < (1u << p); ++bits) {
            ParitySpec s;
            s.x.resize(p);
            for (std::uint32_t i = 0; i < p; ++i) s.x[i] = (bits >> i) & 1;
            ListGraph g = gen_parity_graph(s);
            ++parity_cases;
            if (validate_list(g)) ++failures;
            std::uint64_t want = parity_of(s.x) ? 1 : 2;
            if (count_cycles(g) != want) ++failures;
        }
    }
    for (std::uint32_t p = 1; p <= 8; ++p) {
        for (std::uint32_t k = 2; k <= 4; ++k) {
            for (std::uint32_t bits = 0; bits < (1u << p); ++bits) {
                GadgetSpec s;
                s.k = k;
                s.x.resize(p);
                for (std::uint32_t i = 0; i < p; ++i) s.x[i] = (bits >> i) & 1;
                s.seed = mix_seed(mix_seed(0x6e4a77, p * 8 + k), bits);
                ListGraph g = gen_origin_gadget(s);
                ++gadget_cases;
                if (validate_list(g)) ++failures;
                QueryLedger scratch;
                if (classical_strongly_connected(g, scratch) != parity_of(s.x)) ++failures;
            }
        }
    }
    res.ok = failures == 0;
    std::ostringstream ss;
    ss << "generator-exhaustives: parity_cases=" << parity_cases
       << " gadget_cases=" << gadget_cases << " failures=" << failures
       << (res.ok ? " ok" : " FAIL");
    res.detail = ss.str();
    log << res.detail << '\n';
    return res;
}

SuiteResult run_suite(const std::string& name, std::ostream& log) {
    if (name == "grover-crosscheck") return verify_grover_crosscheck(log);
    if (name == "lemma-corpus") return verify_lemma_corpus(log);
    if (name == "generator-exhaustives") return verify_generator_exhaustives(log);
    if (name == "all") {
        SuiteResult a = verify_grover_crosscheck(log);
        SuiteResult b = verify_lemma_corpus(log);
        SuiteResult c = verify_generator_exhaustives(log);
        SuiteResult res;
        res.ok = a.ok && b.ok && c.ok;
        res.detail = a.detail + "; " + b.detail + "; " + c.detail;
        return res;
    }
    throw std::invalid_argument("unknown suite: " + name);
}

} // namespace qconn
