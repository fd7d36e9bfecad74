#include "qconn/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace qconn {

std::optional<std::string> validate_matrix(const MatrixGraph& g, bool undirected) {
    if (g.cells.size() != static_cast<std::size_t>(g.n) * g.n)
        return "cell buffer size does not match n*n";
    for (std::uint8_t c : g.cells)
        if (c > 1) return "cell value outside {0,1}";
    for (std::uint32_t i = 0; i < g.n; ++i)
        if (g.at(i, i)) return "self-loop at vertex " + std::to_string(i);
    if (undirected) {
        for (std::uint32_t i = 0; i < g.n; ++i)
            for (std::uint32_t j = i + 1; j < g.n; ++j)
                if (g.at(i, j) != g.at(j, i))
                    return "asymmetric cells at (" + std::to_string(i) + "," + std::to_string(j) +
                           ")";
    }
    return std::nullopt;
}

std::optional<std::string> validate_list(const ListGraph& g) {
    if (g.nbr.size() != static_cast<std::size_t>(g.n) * g.k)
        return "slot buffer size does not match n*k";
    for (std::uint32_t u = 0; u < g.n; ++u) {
        for (std::uint32_t i = 0; i < g.k; ++i) {
            std::uint32_t v = g.at(u, i);
            if (v >= g.n)
                return "slot (" + std::to_string(u) + "," + std::to_string(i) + ") out of range";
            for (std::uint32_t j = i + 1; j < g.k; ++j)
                if (g.at(u, j) == v)
                    return "duplicate neighbor " + std::to_string(v) + " at vertex " +
                           std::to_string(u);
        }
    }
    return std::nullopt;
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> DfsResult::tree_edges() const {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
    for (std::uint32_t v = 0; v < parent.size(); ++v)
        if (parent[v] >= 0)
            edges.emplace_back(static_cast<std::uint32_t>(parent[v]), v);
    return edges;
}

std::vector<std::int64_t> DfsResult::order_index() const {
    std::vector<std::int64_t> idx(parent.size(), -1);
    for (std::size_t i = 0; i < order.size(); ++i) idx[order[i]] = static_cast<std::int64_t>(i);
    return idx;
}

bool classical_connected(const MatrixGraph& g, QueryLedger& ledger) {
    if (g.n == 0) throw std::invalid_argument("empty graph");
    std::vector<std::uint8_t> seen(g.n, 0);
    std::vector<std::uint32_t> stack{0};
    seen[0] = 1;
    std::uint32_t count = 1;
    while (!stack.empty()) {
        std::uint32_t u = stack.back();
        stack.pop_back();
        for (std::uint32_t v = 0; v < g.n; ++v) {
            ledger.charge();
            if (g.at(u, v) && !seen[v]) {
                seen[v] = 1;
                ++count;
                stack.push_back(v);
            }
        }
    }
    return count == g.n;
}

namespace {

std::uint32_t counted_reach_matrix(const MatrixGraph& g, std::uint32_t root, bool reversed,
                                   QueryLedger& ledger) {
    std::vector<std::uint8_t> seen(g.n, 0);
    std::vector<std::uint32_t> stack{root};
    seen[root] = 1;
    std::uint32_t count = 1;
    while (!stack.empty()) {
        std::uint32_t u = stack.back();
        stack.pop_back();
        for (std::uint32_t v = 0; v < g.n; ++v) {
            ledger.charge();
            bool edge = reversed ? g.at(v, u) : g.at(u, v);
            if (edge && !seen[v]) {
                seen[v] = 1;
                ++count;
                stack.push_back(v);
            }
        }
    }
    return count;
}

} // namespace

bool classical_strongly_connected(const MatrixGraph& g, QueryLedger& ledger) {
    if (g.n == 0) throw std::invalid_argument("empty graph");
    if (g.n == 1) return true;
    if (counted_reach_matrix(g, 0, false, ledger) != g.n) return false;
    return counted_reach_matrix(g, 0, true, ledger) == g.n;
}

bool classical_strongly_connected(const ListGraph& g, QueryLedger& ledger) {
    if (g.n == 0) throw std::invalid_argument("empty graph");
    if (g.n == 1) return true;
    // forward reachability over slots, one charge per slot read
    std::vector<std::uint8_t> seen(g.n, 0);
    std::vector<std::uint32_t> stack{0};
    seen[0] = 1;
    std::uint32_t count = 1;
    std::vector<std::vector<std::uint32_t>> rev(g.n);
    std::vector<std::uint8_t> scanned(g.n, 0);
    while (!stack.empty()) {
        std::uint32_t u = stack.back();
        stack.pop_back();
        scanned[u] = 1;
        for (std::uint32_t i = 0; i < g.k; ++i) {
            ledger.charge();
            std::uint32_t v = g.at(u, i);
            rev[v].push_back(u);
            if (!seen[v]) {
                seen[v] = 1;
                ++count;
                stack.push_back(v);
            }
        }
    }
    if (count != g.n) return false;
    // remaining rows, so the reversed table is complete
    for (std::uint32_t u = 0; u < g.n; ++u) {
        if (scanned[u]) continue;
        for (std::uint32_t i = 0; i < g.k; ++i) {
            ledger.charge();
            rev[g.at(u, i)].push_back(u);
        }
    }
    std::vector<std::uint8_t> rseen = reachable_adj(rev, 0);
    for (std::uint8_t s : rseen)
        if (!s) return false;
    return true;
}

namespace {

// Iterative DFS marking vertices when pushed; the next child is always the
// unmarked neighbor with the lowest vertex index.
template <typename NextChild>
DfsResult dfs_core(std::uint32_t n, std::uint32_t root, NextChild&& next_child) {
    if (root >= n) throw std::invalid_argument("root out of range");
    DfsResult r;
    r.parent.assign(n, -1);
    r.marked.assign(n, 0);
    r.order.reserve(n);
    r.marked[root] = 1;
    r.order.push_back(root);
    std::vector<std::uint32_t> stack{root};
    while (!stack.empty()) {
        std::uint32_t u = stack.back();
        std::int64_t v = next_child(u, r.marked);
        if (v < 0) {
            stack.pop_back();
            continue;
        }
        r.marked[v] = 1;
        r.parent[v] = u;
        r.order.push_back(static_cast<std::uint32_t>(v));
        stack.push_back(static_cast<std::uint32_t>(v));
    }
    return r;
}

} // namespace

DfsResult classical_dfs(const MatrixGraph& g, std::uint32_t root) {
    return dfs_core(g.n, root, [&](std::uint32_t u, const std::vector<std::uint8_t>& marked) {
        for (std::uint32_t v = 0; v < g.n; ++v)
            if (g.at(u, v) && !marked[v]) return static_cast<std::int64_t>(v);
        return static_cast<std::int64_t>(-1);
    });
}

DfsResult classical_dfs(const ListGraph& g, std::uint32_t root) {
    return dfs_core(g.n, root, [&](std::uint32_t u, const std::vector<std::uint8_t>& marked) {
        std::int64_t best = -1;
        for (std::uint32_t i = 0; i < g.k; ++i) {
            std::uint32_t v = g.at(u, i);
            if (!marked[v]) {
                if (best < 0 || static_cast<std::int64_t>(v) < best)
                    best = static_cast<std::int64_t>(v);
            }
        }
        return best;
    });
}

bool subtree_contains(const DfsResult& tree, std::uint32_t ancestor, std::uint32_t descendant) {
    if (ancestor >= tree.marked.size() || descendant >= tree.marked.size())
        throw std::invalid_argument("vertex out of range");
    if (!tree.marked[ancestor] || !tree.marked[descendant])
        throw std::invalid_argument("vertex not in tree");
    std::int64_t v = static_cast<std::int64_t>(descendant);
    while (v >= 0) {
        if (v == static_cast<std::int64_t>(ancestor)) return true;
        v = tree.parent[v];
    }
    return false;
}

MatrixGraph transpose(const MatrixGraph& g) {
    MatrixGraph t = MatrixGraph::make(g.n, g.directed);
    for (std::uint32_t u = 0; u < g.n; ++u)
        for (std::uint32_t v = 0; v < g.n; ++v)
            if (g.at(u, v)) t.set(v, u, true);
    return t;
}

std::vector<std::uint8_t> reachable_adj(const std::vector<std::vector<std::uint32_t>>& adj,
                                        std::uint32_t root) {
    std::vector<std::uint8_t> seen(adj.size(), 0);
    std::vector<std::uint32_t> stack{root};
    seen[root] = 1;
    while (!stack.empty()) {
        std::uint32_t u = stack.back();
        stack.pop_back();
        for (std::uint32_t v : adj[u]) {
            if (!seen[v]) {
                seen[v] = 1;
                stack.push_back(v);
            }
        }
    }
    return seen;
}

bool strongly_connected_adj(const std::vector<std::vector<std::uint32_t>>& adj) {
    std::uint32_t n = static_cast<std::uint32_t>(adj.size());
    if (n == 0) throw std::invalid_argument("empty graph");
    if (n == 1) return true;
    std::vector<std::uint8_t> fwd = reachable_adj(adj, 0);
    for (std::uint8_t s : fwd)
        if (!s) return false;
    std::vector<std::vector<std::uint32_t>> rev(n);
    for (std::uint32_t u = 0; u < n; ++u)
        for (std::uint32_t v : adj[u]) rev[v].push_back(u);
    std::vector<std::uint8_t> bwd = reachable_adj(rev, 0);
    for (std::uint8_t s : bwd)
        if (!s) return false;
    return true;
}

bool connected_undirected_adj(const std::vector<std::vector<std::uint32_t>>& adj) {
    std::uint32_t n = static_cast<std::uint32_t>(adj.size());
    if (n == 0) throw std::invalid_argument("empty graph");
    std::vector<std::uint8_t> seen = reachable_adj(adj, 0);
    for (std::uint8_t s : seen)
        if (!s) return false;
    return true;
}

} // namespace qconn
