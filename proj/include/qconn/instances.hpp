#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "qconn/graph.hpp"
#include "qconn/rng.hpp"

namespace qconn {

// Hidden bit string for the permutation families; one bit per column pair.
struct ParitySpec {
    std::vector<std::uint8_t> x;
};

// Out-degree-k hard instance: 2p column vertices plus a k-clique that funnels
// back to vertex 0. slots[i] = (forward slot of v_{2i}, forward slot of
// v_{2i+1}); left empty they are drawn from seed.
struct GadgetSpec {
    std::vector<std::uint8_t> x;
    std::uint32_t k = 2;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> slots;
    std::uint64_t seed = 0;
};

enum class CycleVariant { OneCycle, TwoCycle };

// Labeled cycle instances. For TwoCycle, len_a + len_b == n with both parts
// within [ceil(n/3), floor(2n/3)]; len_a == 0 picks a valid split from seed.
struct CycleSpec {
    std::uint32_t n = 0;
    CycleVariant variant = CycleVariant::OneCycle;
    std::uint32_t len_a = 0;
    std::uint32_t len_b = 0;
    std::uint64_t seed = 0;
};

bool parity_of(const std::vector<std::uint8_t>& bits);

// k = 1 permutation on 2p vertices; column i maps {v_2i, v_2i+1} onto
// {v_2i+2, v_2i+3} straight or crossed according to bit i (indices mod 2p).
// The functional graph has 2 cycles when parity(x) is even, 1 when odd.
ListGraph gen_parity_graph(const ParitySpec& spec);

// n = 2p + k vertices, out-degree k. Strongly connected iff parity(x) is odd.
ListGraph gen_origin_gadget(const GadgetSpec& spec);

MatrixGraph gen_cycle_instance(const CycleSpec& spec);

// Splits a single cycle into two: removes edges {a,b} and {c,d}, adds {a,c}
// and {b,d}. Walking the cycle from a towards b must meet d before c, so
// that both added edges close their own arc; anything else throws.
MatrixGraph two_swap(const MatrixGraph& g, std::uint32_t a, std::uint32_t b, std::uint32_t c,
                     std::uint32_t d);

// Number of orbits of a k = 1 permutation graph (fixed points count).
std::uint64_t count_cycles(const ListGraph& g);

// Cycles of a 2-regular undirected graph, each in traversal order; throws
// unless every vertex has degree exactly 2.
std::vector<std::vector<std::uint32_t>> cycle_decomposition(const MatrixGraph& g);

MatrixGraph gen_random_matrix(std::uint32_t n, double edge_prob, bool directed,
                              std::uint64_t seed);

// Uniform out-degree-k table with distinct non-self neighbors per vertex.
ListGraph gen_random_list(std::uint32_t n, std::uint32_t k, std::uint64_t seed);

// Undirected graph with exactly m_cells ones in the matrix (m_cells / 2 edges).
MatrixGraph gen_gnm_matrix(std::uint32_t n, std::uint64_t m_cells, std::uint64_t seed);

} // namespace qconn
