#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace qconn {

// Explicit relation between two instance families, given as equal-length
// strings over a small integer alphabet plus the related index pairs.
struct Relation {
    std::vector<std::vector<std::int32_t>> xs;
    std::vector<std::vector<std::int32_t>> ys;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
};

struct AdversaryParams {
    std::uint64_t m = 0;       // least relation degree on the x side
    std::uint64_t m_prime = 0; // least relation degree on the y side
    std::uint64_t l_max = 0;   // max l_x * l_y over related pairs, differing positions only
    double bound = 0.0;        // sqrt(m * m_prime / l_max)
};

// Exact evaluation by full enumeration of the given relation.
AdversaryParams adversary_bound(const Relation& rel);

// All n-bit strings, odd weight against even weight, related at Hamming
// distance one. Bound comes out to exactly n.
Relation make_parity_relation(std::uint32_t n);

struct CycleRelationResult {
    AdversaryParams params;
    std::uint64_t per_x_degree = 0; // valid splitting swaps per single cycle
    std::uint64_t l_edge = 0;       // partners available when a present edge is removed
    std::uint64_t l_nonedge_max = 0; // at most 4: neighbor choices around an added edge
};

// Single n-cycles against two-cycle splits with both parts in
// [ceil(n/3), floor(2n/3)]. Enumerates around a canonical cycle; degree and
// l values carry over to the whole orbit by relabeling, which is asserted on
// samples. Requires n >= 9.
CycleRelationResult cycle_relation_params(std::uint32_t n);

struct GadgetRelationResult {
    AdversaryParams params;
    std::uint64_t per_x_degree = 0; // p (k-1)^2, uniform over instances
    std::uint64_t l_backward = 0;   // k-1
    std::uint64_t l_forward = 0;    // (k-1)^2
};

// Clique-funnel instances of opposite parity related by re-slotting one
// column pair. Exact counts from explicit neighborhood enumeration around
// sampled instances. Requires 1 <= p <= 8 and 2 <= k <= 6.
GadgetRelationResult gadget_relation_params(std::uint32_t p, std::uint32_t k);

// Full materializations for cross-checking the shortcuts against
// adversary_bound on small sizes.
Relation materialize_cycle_relation(std::uint32_t n);                    // 9 <= n <= 10
Relation materialize_gadget_relation(std::uint32_t p, std::uint32_t k);  // (k^2)^p 2^p instances

} // namespace qconn
