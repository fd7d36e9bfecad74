#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qconn/ledger.hpp"

namespace qconn {

// Dense adjacency matrix. cells is row-major, one byte per cell.
struct MatrixGraph {
    std::uint32_t n = 0;
    bool directed = false;
    std::vector<std::uint8_t> cells;

    static MatrixGraph make(std::uint32_t n, bool directed = false) {
        MatrixGraph g;
        g.n = n;
        g.directed = directed;
        g.cells.assign(static_cast<std::size_t>(n) * n, 0);
        return g;
    }

    bool at(std::uint32_t u, std::uint32_t v) const {
        return cells[static_cast<std::size_t>(u) * n + v] != 0;
    }

    void set(std::uint32_t u, std::uint32_t v, bool value) {
        cells[static_cast<std::size_t>(u) * n + v] = value ? 1 : 0;
    }

    // Adds u->v, and v->u as well when the graph is undirected.
    void add_edge(std::uint32_t u, std::uint32_t v) {
        set(u, v, true);
        if (!directed) set(v, u, true);
    }

    void remove_edge(std::uint32_t u, std::uint32_t v) {
        set(u, v, false);
        if (!directed) set(v, u, false);
    }

    std::uint64_t cell_count() const {
        std::uint64_t c = 0;
        for (std::uint8_t x : cells) c += x;
        return c;
    }
};

// Out-degree-k neighbor table: nbr(u, i) is the i-th out-neighbor of u.
struct ListGraph {
    std::uint32_t n = 0;
    std::uint32_t k = 0;
    std::vector<std::uint32_t> nbr;

    static ListGraph make(std::uint32_t n, std::uint32_t k) {
        ListGraph g;
        g.n = n;
        g.k = k;
        g.nbr.assign(static_cast<std::size_t>(n) * k, 0);
        return g;
    }

    std::uint32_t at(std::uint32_t u, std::uint32_t i) const {
        return nbr[static_cast<std::size_t>(u) * k + i];
    }

    void set(std::uint32_t u, std::uint32_t i, std::uint32_t v) {
        nbr[static_cast<std::size_t>(u) * k + i] = v;
    }
};

// Returns std::nullopt when valid, otherwise a description of the violation.
std::optional<std::string> validate_matrix(const MatrixGraph& g, bool undirected);
std::optional<std::string> validate_list(const ListGraph& g);

// Depth-first search tree rooted at order[0]. parent[v] == -1 for the root
// and for unmarked vertices.
struct DfsResult {
    std::vector<std::int64_t> parent;
    std::vector<std::uint32_t> order;
    std::vector<std::uint8_t> marked;

    std::vector<std::pair<std::uint32_t, std::uint32_t>> tree_edges() const;
    // position of each vertex in the marking order; -1 when unmarked
    std::vector<std::int64_t> order_index() const;
};

// Classical baselines with query accounting: one ledger unit per matrix cell
// or list slot read.
bool classical_connected(const MatrixGraph& g, QueryLedger& ledger);
bool classical_strongly_connected(const MatrixGraph& g, QueryLedger& ledger);
bool classical_strongly_connected(const ListGraph& g, QueryLedger& ledger);

// Deterministic uncounted DFS; ties broken toward the lowest vertex index.
// Used as the reference for tree-shape properties.
DfsResult classical_dfs(const MatrixGraph& g, std::uint32_t root);
DfsResult classical_dfs(const ListGraph& g, std::uint32_t root);

// True when descendant lies in the subtree rooted at ancestor (reflexive).
// Throws std::invalid_argument when either vertex is unmarked.
bool subtree_contains(const DfsResult& tree, std::uint32_t ancestor, std::uint32_t descendant);

MatrixGraph transpose(const MatrixGraph& g);

// Uncounted helpers on plain adjacency lists (learned edge sets).
std::vector<std::uint8_t> reachable_adj(const std::vector<std::vector<std::uint32_t>>& adj,
                                        std::uint32_t root);
bool strongly_connected_adj(const std::vector<std::vector<std::uint32_t>>& adj);
bool connected_undirected_adj(const std::vector<std::vector<std::uint32_t>>& adj);

} // namespace qconn
