#pragma once

#include <cstdint>
#include <functional>
#include <span>

#include "qconn/ledger.hpp"
#include "qconn/rng.hpp"

namespace qconn {

enum class BoostPolicy { Log2, SqrtLog2 };

struct GroverConfig {
    double bbht_lambda = 8.0 / 7.0;   // round schedule growth factor, in (1, 4/3]
    double bbht_cutoff_factor = 3.0;  // claim empty after this many sqrt(N) iterations
    double min_budget_factor = 10.0;  // total query budget factor for minimum finding
    BoostPolicy boost = BoostPolicy::Log2;
    std::uint64_t rng_seed = 1;

    void validate() const;
    std::uint64_t boost_reps(std::uint64_t n) const;
};

struct SearchOutcome {
    bool found = false;
    std::uint64_t index = 0;   // meaningful only when found
    std::uint64_t queries = 0; // units charged by the call that produced this
};

// Predicate search space. probe() is the charged oracle call; peek() and the
// sampling helpers are simulator-side bookkeeping and cost nothing.
class SearchSpace {
public:
    SearchSpace(std::uint64_t size, std::function<bool(std::uint64_t)> marked,
                QueryLedger& ledger);

    std::uint64_t size() const { return size_; }
    QueryLedger& ledger() const { return *ledger_; }

    bool probe(std::uint64_t i) const;
    bool peek(std::uint64_t i) const;

    // cached scan; call set_marked_count when the caller already knows it
    std::uint64_t marked_count() const;
    void set_marked_count(std::uint64_t t);

    std::uint64_t sample_marked(Rng& rng) const;
    std::uint64_t sample_unmarked(Rng& rng) const;

private:
    std::uint64_t size_;
    std::function<bool(std::uint64_t)> marked_;
    QueryLedger* ledger_;
    mutable std::uint64_t cached_count_;
    mutable bool have_count_ = false;
};

// sin^2((2j+1) asin(sqrt(t/n))): probability that j amplification rounds from
// the uniform state land on one of t marked elements out of n.
double success_prob_known_t(std::uint64_t n, std::uint64_t t, std::uint64_t j);

// Amplitude amplification with the marked count known in advance. Charges
// floor(pi/4 sqrt(N/t)) iterations plus one verification probe.
SearchOutcome grover_known_count(SearchSpace& space, std::uint64_t t, Rng& rng);

// Exponential-schedule search without a known count. Each round picks
// j uniformly below the schedule value, charges j + 1, and measures; claims
// empty once charged iterations reach cutoff_factor * sqrt(N).
SearchOutcome grover_unknown_count(SearchSpace& space, Rng& rng, const GroverConfig& cfg);

// Threshold descent: returns the smallest marked index with probability at
// least 1/2 within a budget of min_budget_factor * sqrt(N) charged queries.
SearchOutcome find_min_index(SearchSpace& space, Rng& rng, const GroverConfig& cfg);

// Same descent over an array of keys; every key read charges one unit.
// Always returns found = true with the index of a candidate minimum.
SearchOutcome find_min_value(std::span<const std::uint64_t> keys, QueryLedger& ledger, Rng& rng,
                             const GroverConfig& cfg);

// Repeats a one-sided search until it succeeds, at most reps times. Queries
// accumulate across attempts.
SearchOutcome boosted(const std::function<SearchOutcome(Rng&)>& attempt, std::uint64_t reps,
                      Rng& rng);

} // namespace qconn
