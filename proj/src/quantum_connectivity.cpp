#include "qconn/quantum_connectivity.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace qconn {

namespace {

// space_of(u) builds the neighbor search space for the stack top u;
// vertex_of(u, index) maps a found index back to a vertex id.
template <typename SpaceOf, typename VertexOf>
DfsResult spanning_core(std::uint32_t n, std::uint32_t root, const GroverConfig& cfg, Rng& rng,
                        SpaceOf&& space_of, VertexOf&& vertex_of) {
    if (root >= n) throw std::invalid_argument("root out of range");
    cfg.validate();
    DfsResult r;
    r.parent.assign(n, -1);
    r.marked.assign(n, 0);
    r.order.reserve(n);
    r.marked[root] = 1;
    r.order.push_back(root);
    std::vector<std::uint32_t> stack{root};
    const std::uint64_t reps = cfg.boost_reps(n);
    std::uint64_t searches = 0;

    while (!stack.empty()) {
        std::uint32_t u = stack.back();
        SearchSpace space = space_of(u, r.marked);
        SearchOutcome out = boosted(
            [&](Rng& rr) { return grover_unknown_count(space, rr, cfg); }, reps, rng);
        if (++searches > 2ull * n) throw std::logic_error("search count exceeded 2n");
        if (out.found) {
            std::uint32_t v = vertex_of(u, out.index);
            r.marked[v] = 1;
            r.parent[v] = u;
            r.order.push_back(v);
            stack.push_back(v);
        } else {
            stack.pop_back();
        }
    }
    return r;
}

} // namespace

DfsResult q_spanning_tree(const MatrixGraph& g, std::uint32_t root, const GroverConfig& cfg,
                          Rng& rng, QueryLedger& ledger) {
    return spanning_core(
        g.n, root, cfg, rng,
        [&](std::uint32_t u, const std::vector<std::uint8_t>& marked) {
            return SearchSpace(
                g.n, [&g, u, &marked](std::uint64_t v) { return g.at(u, v) && !marked[v]; },
                ledger);
        },
        [](std::uint32_t, std::uint64_t index) { return static_cast<std::uint32_t>(index); });
}

DfsResult q_spanning_tree(const ListGraph& g, std::uint32_t root, const GroverConfig& cfg,
                          Rng& rng, QueryLedger& ledger) {
    if (g.k == 0) throw std::invalid_argument("list graph needs k >= 1");
    return spanning_core(
        g.n, root, cfg, rng,
        [&](std::uint32_t u, const std::vector<std::uint8_t>& marked) {
            return SearchSpace(
                g.k, [&g, u, &marked](std::uint64_t i) { return !marked[g.at(u, i)]; }, ledger);
        },
        [&g](std::uint32_t u, std::uint64_t index) {
            return g.at(u, static_cast<std::uint32_t>(index));
        });
}

AlgoReport q_connected(const MatrixGraph& g, const GroverConfig& cfg, Rng& rng) {
    if (auto err = validate_matrix(g, true)) throw std::invalid_argument(*err);
    if (g.n == 0) throw std::invalid_argument("empty graph");
    QueryLedger ledger;
    AlgoReport report;
    DfsResult tree = q_spanning_tree(g, 0, cfg, rng, ledger);
    report.answer = tree.order.size() == g.n;
    report.queries = ledger.count();
    report.tree = std::move(tree);
    return report;
}

AlgoReport q_connected_learning(const MatrixGraph& g, std::uint64_t m_cells,
                                const GroverConfig& cfg, Rng& rng) {
    if (auto err = validate_matrix(g, true)) throw std::invalid_argument(*err);
    if (g.n == 0) throw std::invalid_argument("empty graph");
    cfg.validate();
    if (m_cells != g.cell_count())
        throw std::invalid_argument("declared cell count does not match the graph");

    AlgoReport report;
    if (m_cells == 0) {
        report.answer = g.n == 1;
        return report;
    }

    QueryLedger ledger;
    const std::uint64_t cells = static_cast<std::uint64_t>(g.n) * g.n;
    std::vector<std::uint8_t> learned(cells, 0);
    std::vector<std::vector<std::uint32_t>> adj(g.n);

    for (std::uint64_t t = m_cells; t >= 1; --t) {
        SearchSpace space(
            cells, [&](std::uint64_t c) { return g.cells[c] != 0 && !learned[c]; }, ledger);
        space.set_marked_count(t);
        bool got = false;
        for (int attempt = 0; attempt < 10; ++attempt) {
            SearchOutcome out = grover_known_count(space, t, rng);
            if (out.found) {
                learned[out.index] = 1;
                std::uint32_t i = static_cast<std::uint32_t>(out.index / g.n);
                std::uint32_t j = static_cast<std::uint32_t>(out.index % g.n);
                adj[i].push_back(j);
                got = true;
                break;
            }
        }
        if (!got) {
            report.failed = true;
            report.queries = ledger.count();
            return report;
        }
    }
    report.answer = connected_undirected_adj(adj);
    report.queries = ledger.count();
    return report;
}

AlgoReport q_strongly_connected_matrix(const MatrixGraph& g, const GroverConfig& cfg, Rng& rng) {
    if (auto err = validate_matrix(g, false)) throw std::invalid_argument(*err);
    if (g.n == 0) throw std::invalid_argument("empty graph");
    QueryLedger ledger;
    AlgoReport report;
    DfsResult fwd = q_spanning_tree(g, 0, cfg, rng, ledger);
    if (fwd.order.size() != g.n) {
        report.answer = false;
        report.queries = ledger.count();
        report.tree = std::move(fwd);
        return report;
    }
    MatrixGraph gt = transpose(g);
    DfsResult bwd = q_spanning_tree(gt, 0, cfg, rng, ledger);
    report.answer = bwd.order.size() == g.n;
    report.queries = ledger.count();
    report.tree = std::move(fwd);
    return report;
}

AlgoReport q_strongly_connected_list(const ListGraph& g, const GroverConfig& cfg, Rng& rng) {
    if (g.k == 0) throw std::invalid_argument("list graph needs k >= 1");
    if (auto err = validate_list(g)) throw std::invalid_argument(*err);
    if (g.n == 0) throw std::invalid_argument("empty graph");
    QueryLedger ledger;
    AlgoReport report;

    DfsResult tree = q_spanning_tree(g, 0, cfg, rng, ledger);
    if (tree.order.size() != g.n) {
        report.answer = false;
        report.queries = ledger.count();
        report.tree = std::move(tree);
        return report;
    }

    std::vector<std::int64_t> ord = tree.order_index();
    const std::uint64_t reps = cfg.boost_reps(g.n);
    std::vector<std::vector<std::uint32_t>> adj(g.n);
    for (auto [u, v] : tree.tree_edges()) adj[u].push_back(v);

    std::vector<std::uint64_t> keys(g.k);
    for (std::uint32_t u = 0; u < g.n; ++u) {
        for (std::uint32_t i = 0; i < g.k; ++i)
            keys[i] = static_cast<std::uint64_t>(ord[g.at(u, i)]);
        // keep the best verified candidate across boosting repetitions
        std::uint64_t best_slot = 0;
        std::uint64_t best_key = ~0ull;
        for (std::uint64_t r = 0; r < reps; ++r) {
            SearchOutcome out = find_min_value(keys, ledger, rng, cfg);
            if (keys[out.index] < best_key) {
                best_key = keys[out.index];
                best_slot = out.index;
            }
        }
        adj[u].push_back(g.at(u, static_cast<std::uint32_t>(best_slot)));
    }

    report.answer = strongly_connected_adj(adj);
    report.queries = ledger.count();
    report.tree = std::move(tree);
    return report;
}

std::optional<bool> reduction_lemma_check(const ListGraph& g) {
    if (g.k == 0) throw std::invalid_argument("list graph needs k >= 1");
    if (auto err = validate_list(g)) throw std::invalid_argument(*err);
    if (g.n == 0) throw std::invalid_argument("empty graph");

    DfsResult tree = classical_dfs(g, 0);
    if (tree.order.size() != g.n) return std::nullopt;

    std::vector<std::int64_t> ord = tree.order_index();
    std::vector<std::vector<std::uint32_t>> adj(g.n);
    for (auto [u, v] : tree.tree_edges()) adj[u].push_back(v);
    for (std::uint32_t u = 0; u < g.n; ++u) {
        std::uint32_t best = g.at(u, 0);
        for (std::uint32_t i = 1; i < g.k; ++i) {
            std::uint32_t v = g.at(u, i);
            if (ord[v] < ord[best]) best = v;
        }
        adj[u].push_back(best);
    }

    QueryLedger scratch;
    bool full = classical_strongly_connected(g, scratch);
    bool reduced = strongly_connected_adj(adj);
    return full == reduced;
}

} // namespace qconn
