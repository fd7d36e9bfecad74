#pragma once

#include <iosfwd>
#include <string>

namespace qconn {

struct SuiteResult {
    bool ok = false;
    std::string detail; // one-line summary
};

// Closed-form success probability against the explicit statevector, all
// (N, t, j) with N up to 64 and j up to 20.
SuiteResult verify_grover_crosscheck(std::ostream& log);

// Backward-edge reduction property on a randomized directed corpus plus the
// exhaustive gadget family.
SuiteResult verify_lemma_corpus(std::ostream& log);

// Cycle-parity and gadget-connectivity guarantees of the instance generators,
// exhaustive over the hidden bit string.
SuiteResult verify_generator_exhaustives(std::ostream& log);

// name in {grover-crosscheck, lemma-corpus, generator-exhaustives, all}
SuiteResult run_suite(const std::string& name, std::ostream& log);

} // namespace qconn
