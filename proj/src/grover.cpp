#include "qconn/grover.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace qconn {

void GroverConfig::validate() const {
    if (!(bbht_lambda > 1.0 && bbht_lambda <= 4.0 / 3.0))
        throw std::invalid_argument("bbht_lambda must lie in (1, 4/3]");
    if (!(bbht_cutoff_factor > 0.0)) throw std::invalid_argument("bbht_cutoff_factor must be > 0");
    if (!(min_budget_factor > 0.0)) throw std::invalid_argument("min_budget_factor must be > 0");
}

std::uint64_t GroverConfig::boost_reps(std::uint64_t n) const {
    if (n <= 1) return 1;
    if (boost == BoostPolicy::Log2) {
        std::uint64_t r = std::bit_width(n - 1); // ceil(log2 n)
        return r < 1 ? 1 : r;
    }
    double r = std::ceil(std::sqrt(std::log2(static_cast<double>(n))));
    return r < 1.0 ? 1 : static_cast<std::uint64_t>(r);
}

SearchSpace::SearchSpace(std::uint64_t size, std::function<bool(std::uint64_t)> marked,
                         QueryLedger& ledger)
    : size_(size), marked_(std::move(marked)), ledger_(&ledger), cached_count_(0) {
    if (size_ == 0) throw std::invalid_argument("search space must be nonempty");
}

bool SearchSpace::probe(std::uint64_t i) const {
    ledger_->charge();
    return marked_(i);
}

bool SearchSpace::peek(std::uint64_t i) const { return marked_(i); }

std::uint64_t SearchSpace::marked_count() const {
    if (!have_count_) {
        std::uint64_t t = 0;
        for (std::uint64_t i = 0; i < size_; ++i)
            if (marked_(i)) ++t;
        cached_count_ = t;
        have_count_ = true;
    }
    return cached_count_;
}

void SearchSpace::set_marked_count(std::uint64_t t) {
    cached_count_ = t;
    have_count_ = true;
}

namespace {

std::uint64_t sample_where(const SearchSpace& space, Rng& rng, bool want_marked,
                           std::uint64_t population) {
    if (population == 0) throw std::logic_error("sampling from empty population");
    // rejection first; bounded, then a counted scan
    std::uint64_t attempts = 8 * (space.size() / population + 1);
    for (std::uint64_t a = 0; a < attempts; ++a) {
        std::uint64_t i = rng.below(space.size());
        if (space.peek(i) == want_marked) return i;
    }
    std::uint64_t target = rng.below(population);
    for (std::uint64_t i = 0; i < space.size(); ++i) {
        if (space.peek(i) == want_marked) {
            if (target == 0) return i;
            --target;
        }
    }
    throw std::logic_error("population count out of sync with predicate");
}

} // namespace

std::uint64_t SearchSpace::sample_marked(Rng& rng) const {
    return sample_where(*this, rng, true, marked_count());
}

std::uint64_t SearchSpace::sample_unmarked(Rng& rng) const {
    return sample_where(*this, rng, false, size_ - marked_count());
}

double success_prob_known_t(std::uint64_t n, std::uint64_t t, std::uint64_t j) {
    if (n == 0) throw std::invalid_argument("empty search space");
    if (t == 0) throw std::invalid_argument("known-count search needs t >= 1");
    if (t > n) throw std::invalid_argument("marked count exceeds space size");
    double theta = std::asin(std::sqrt(static_cast<double>(t) / static_cast<double>(n)));
    double s = std::sin(static_cast<double>(2 * j + 1) * theta);
    double p = s * s;
    if (p < 0.0) p = 0.0;
    if (p > 1.0) p = 1.0;
    return p;
}

SearchOutcome grover_known_count(SearchSpace& space, std::uint64_t t, Rng& rng) {
    const std::uint64_t n = space.size();
    if (t == 0) throw std::invalid_argument("known-count search needs t >= 1");
    if (t != space.marked_count())
        throw std::invalid_argument("declared marked count does not match the space");
    std::uint64_t j = static_cast<std::uint64_t>(
        std::floor(0.25 * M_PI * std::sqrt(static_cast<double>(n) / static_cast<double>(t))));
    double p = success_prob_known_t(n, t, j);
    space.ledger().charge(j);
    SearchOutcome out;
    if (t == n || rng.chance(p)) {
        out.index = space.sample_marked(rng);
        bool ok = space.probe(out.index);
        out.found = ok;
    } else {
        out.index = space.sample_unmarked(rng);
        space.probe(out.index);
        out.found = false;
    }
    out.queries = j + 1;
    return out;
}

SearchOutcome grover_unknown_count(SearchSpace& space, Rng& rng, const GroverConfig& cfg) {
    cfg.validate();
    const std::uint64_t n = space.size();
    const std::uint64_t t = space.marked_count();
    const double root_n = std::sqrt(static_cast<double>(n));
    const std::uint64_t budget =
        static_cast<std::uint64_t>(std::ceil(cfg.bbht_cutoff_factor * root_n));
    // schedule length until the cap, plus the iteration budget; reaching this
    // cap requires pathologically small draws but guarantees termination
    const std::uint64_t round_cap =
        static_cast<std::uint64_t>(
            std::ceil(std::log(std::max(root_n, 2.0)) / std::log(cfg.bbht_lambda))) +
        budget;
    const std::uint64_t start = space.ledger().count();

    double m = 1.0;
    std::uint64_t used = 0;
    SearchOutcome out;
    for (std::uint64_t round = 0; round < round_cap; ++round) {
        std::uint64_t j = rng.below(static_cast<std::uint64_t>(std::ceil(m)));
        if (j > budget - used) j = budget - used;
        space.ledger().charge(j);
        used += j;
        bool success = t > 0 && rng.chance(success_prob_known_t(n, t, j));
        if (success) {
            out.index = space.sample_marked(rng);
            out.found = space.probe(out.index);
            break;
        }
        out.index = space.sample_unmarked(rng);
        space.probe(out.index);
        out.found = false;
        if (used >= budget) break;
        m = std::min(m * cfg.bbht_lambda, root_n);
    }
    out.queries = space.ledger().count() - start;
    return out;
}

namespace {

// Shared threshold descent. key() is the uncounted value map; every charged
// read of a key goes through the wrapped search space.
SearchOutcome threshold_min(std::uint64_t n, const std::function<std::uint64_t(std::uint64_t)>& key,
                            QueryLedger& ledger, Rng& rng, const GroverConfig& cfg,
                            std::uint64_t unmarked_key) {
    cfg.validate();
    if (n == 0) throw std::invalid_argument("empty search space");
    const std::uint64_t start = ledger.count();
    const std::uint64_t budget = static_cast<std::uint64_t>(
        std::ceil(cfg.min_budget_factor * std::sqrt(static_cast<double>(n))));

    std::uint64_t best = rng.below(n);
    ledger.charge(); // read the initial threshold key
    std::uint64_t best_key = key(best);

    while (ledger.count() - start < budget) {
        SearchSpace below(
            n, [&](std::uint64_t i) { return key(i) < best_key; }, ledger);
        SearchOutcome step = grover_unknown_count(below, rng, cfg);
        if (step.found) {
            best = step.index;
            best_key = key(best);
        }
    }
    SearchOutcome out;
    out.found = best_key != unmarked_key;
    out.index = best;
    out.queries = ledger.count() - start;
    return out;
}

} // namespace

SearchOutcome find_min_index(SearchSpace& space, Rng& rng, const GroverConfig& cfg) {
    const std::uint64_t inf = ~0ull;
    return threshold_min(
        space.size(),
        [&](std::uint64_t i) { return space.peek(i) ? i : inf; }, space.ledger(), rng, cfg, inf);
}

SearchOutcome find_min_value(std::span<const std::uint64_t> keys, QueryLedger& ledger, Rng& rng,
                             const GroverConfig& cfg) {
    for (std::uint64_t k : keys)
        if (k == ~0ull) throw std::invalid_argument("key value reserved");
    return threshold_min(
        keys.size(), [&](std::uint64_t i) { return keys[i]; }, ledger, rng, cfg, ~0ull);
}

SearchOutcome boosted(const std::function<SearchOutcome(Rng&)>& attempt, std::uint64_t reps,
                      Rng& rng) {
    if (reps == 0) throw std::invalid_argument("boosted search needs reps >= 1");
    std::uint64_t total = 0;
    SearchOutcome out;
    for (std::uint64_t r = 0; r < reps; ++r) {
        out = attempt(rng);
        total += out.queries;
        if (out.found) break;
    }
    out.queries = total;
    return out;
}

} // namespace qconn
