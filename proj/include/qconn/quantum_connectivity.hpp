#pragma once

#include <cstdint>
#include <optional>

#include "qconn/graph.hpp"
#include "qconn/grover.hpp"
#include "qconn/ledger.hpp"
#include "qconn/rng.hpp"

namespace qconn {

struct AlgoReport {
    bool answer = false;
    bool failed = false; // gave up mid-run; the answer does not count
    std::uint64_t queries = 0;
    std::optional<DfsResult> tree;
};

// Depth-first tree built with amplified neighbor searches: the top of the
// stack repeatedly looks for an unmarked out-neighbor (boosted), pushing on
// success and popping on a verified miss. At most 2n searches per run.
DfsResult q_spanning_tree(const MatrixGraph& g, std::uint32_t root, const GroverConfig& cfg,
                          Rng& rng, QueryLedger& ledger);
DfsResult q_spanning_tree(const ListGraph& g, std::uint32_t root, const GroverConfig& cfg,
                          Rng& rng, QueryLedger& ledger);

// Undirected connectivity: true iff the search tree reaches every vertex.
AlgoReport q_connected(const MatrixGraph& g, const GroverConfig& cfg, Rng& rng);

// Undirected connectivity by learning the whole edge set: with the cell
// count m known, runs known-count searches for t = m down to 1, collecting
// one new cell each time, then decides connectivity classically on the
// learned list. Each t retries at most 10 times before giving up.
AlgoReport q_connected_learning(const MatrixGraph& g, std::uint64_t m_cells,
                                const GroverConfig& cfg, Rng& rng);

// Strong connectivity in the matrix model: spanning search on the graph and
// on its transpose.
AlgoReport q_strongly_connected_matrix(const MatrixGraph& g, const GroverConfig& cfg, Rng& rng);

// Strong connectivity in the out-degree-k list model: stage 1 builds a tree
// with marking order, stage 2 finds each vertex's out-neighbor of least
// marking order, and the answer is read off the union of the two edge sets
// with no further charged queries.
AlgoReport q_strongly_connected_list(const ListGraph& g, const GroverConfig& cfg, Rng& rng);

// Deterministic check of the stage-2 reduction: with A the lowest-index DFS
// tree and B the exact least-marking-order out-neighbor per vertex, the graph
// is strongly connected iff (V, A union B) is. Returns std::nullopt when the
// DFS from vertex 0 does not reach every vertex (both sides trivially false).
std::optional<bool> reduction_lemma_check(const ListGraph& g);

} // namespace qconn
