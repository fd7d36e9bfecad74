#include "qconn/instances.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace qconn {

bool parity_of(const std::vector<std::uint8_t>& bits) {
    std::uint32_t ones = 0;
    for (std::uint8_t b : bits) {
        if (b > 1) throw std::invalid_argument("bit string entries must be 0 or 1");
        ones += b;
    }
    return (ones & 1) != 0;
}

ListGraph gen_parity_graph(const ParitySpec& spec) {
    const std::uint32_t p = static_cast<std::uint32_t>(spec.x.size());
    if (p == 0) throw std::invalid_argument("bit string must be nonempty");
    const std::uint32_t n = 2 * p;
    ListGraph g = ListGraph::make(n, 1);
    for (std::uint32_t i = 0; i < p; ++i) {
        if (spec.x[i] > 1) throw std::invalid_argument("bit string entries must be 0 or 1");
        std::uint32_t b = spec.x[i];
        g.set(2 * i, 0, (2 * i + 2 + b) % n);
        g.set(2 * i + 1, 0, (2 * i + 3 - b) % n);
    }
    return g;
}

ListGraph gen_origin_gadget(const GadgetSpec& spec) {
    const std::uint32_t p = static_cast<std::uint32_t>(spec.x.size());
    const std::uint32_t k = spec.k;
    if (p == 0) throw std::invalid_argument("bit string must be nonempty");
    if (k < 2) throw std::invalid_argument("gadget needs out-degree k >= 2");
    std::vector<std::pair<std::uint32_t, std::uint32_t>> slots = spec.slots;
    if (slots.empty()) {
        Rng rng(spec.seed);
        slots.reserve(p);
        for (std::uint32_t i = 0; i < p; ++i)
            slots.emplace_back(static_cast<std::uint32_t>(rng.below(k)),
                               static_cast<std::uint32_t>(rng.below(k)));
    }
    if (slots.size() != p) throw std::invalid_argument("need one slot pair per column");
    for (auto [j0, j1] : slots)
        if (j0 >= k || j1 >= k) throw std::invalid_argument("forward slot out of range");

    const std::uint32_t n = 2 * p + k;
    const std::uint32_t two_p = 2 * p;
    ListGraph g = ListGraph::make(n, k);
    // clique vertices: slot 0 funnels to v0, the rest walk the clique
    for (std::uint32_t i = 0; i < k; ++i) {
        std::uint32_t u = two_p + i;
        g.set(u, 0, 0);
        for (std::uint32_t j = 1; j < k; ++j) g.set(u, j, two_p + (i + j) % k);
    }
    for (std::uint32_t i = 0; i < p; ++i) {
        if (spec.x[i] > 1) throw std::invalid_argument("bit string entries must be 0 or 1");
        std::uint32_t b = spec.x[i];
        auto [j0, j1] = slots[i];
        std::uint32_t even = 2 * i, odd = 2 * i + 1;
        for (std::uint32_t j = 0; j < k; ++j) {
            g.set(even, j, j == j0 ? (2 * i + 2 + b) % two_p : two_p + j);
            g.set(odd, j, j == j1 ? (2 * i + 3 - b) % two_p : two_p + j);
        }
    }
    return g;
}

namespace {

// Walks a 2-regular graph from `a` stepping first to `b`; returns the cycle
// order, throwing unless the walk closes after covering all n vertices.
std::vector<std::uint32_t> walk_single_cycle(const MatrixGraph& g, std::uint32_t a,
                                             std::uint32_t b) {
    const std::uint32_t n = g.n;
    std::vector<std::uint32_t> order{a, b};
    std::uint32_t prev = a, cur = b;
    while (order.size() < n) {
        std::uint32_t next = n;
        std::uint32_t degree = 0;
        for (std::uint32_t v = 0; v < n; ++v) {
            if (g.at(cur, v)) {
                ++degree;
                if (v != prev) next = v;
            }
        }
        if (degree != 2 || next == n)
            throw std::invalid_argument("graph is not a single simple cycle");
        order.push_back(next);
        prev = cur;
        cur = next;
    }
    if (!g.at(order.back(), a)) throw std::invalid_argument("graph is not a single simple cycle");
    return order;
}

MatrixGraph cycle_on(const std::vector<std::uint32_t>& verts, std::uint32_t n,
                     MatrixGraph* reuse) {
    MatrixGraph g = reuse ? *reuse : MatrixGraph::make(n, false);
    for (std::size_t i = 0; i < verts.size(); ++i)
        g.add_edge(verts[i], verts[(i + 1) % verts.size()]);
    return g;
}

} // namespace

MatrixGraph gen_cycle_instance(const CycleSpec& spec) {
    const std::uint32_t n = spec.n;
    Rng rng(spec.seed);
    std::vector<std::uint32_t> verts(n);
    std::iota(verts.begin(), verts.end(), 0);
    for (std::uint32_t i = n; i > 1; --i)
        std::swap(verts[i - 1], verts[rng.below(i)]);

    if (spec.variant == CycleVariant::OneCycle) {
        if (n < 3) throw std::invalid_argument("a simple cycle needs n >= 3");
        if (spec.len_a != 0 || spec.len_b != 0)
            throw std::invalid_argument("length split only applies to the two-cycle variant");
        return cycle_on(verts, n, nullptr);
    }

    const std::uint32_t lo = (n + 2) / 3, hi = (2 * n) / 3;
    std::uint32_t len_a = spec.len_a, len_b = spec.len_b;
    if (len_a == 0 && len_b == 0) {
        std::uint32_t first = std::max<std::uint32_t>(lo, 3);
        std::uint32_t last = std::min<std::uint32_t>(hi, n - 3);
        if (first > last) throw std::invalid_argument("no valid two-cycle split for this n");
        len_a = first + static_cast<std::uint32_t>(rng.below(last - first + 1));
        len_b = n - len_a;
    }
    if (len_a + len_b != n) throw std::invalid_argument("cycle lengths must sum to n");
    if (len_a < 3 || len_b < 3) throw std::invalid_argument("each cycle needs length >= 3");
    if (len_a < lo || len_a > hi || len_b < lo || len_b > hi)
        throw std::invalid_argument("cycle lengths must lie in [ceil(n/3), floor(2n/3)]");

    std::vector<std::uint32_t> part_a(verts.begin(), verts.begin() + len_a);
    std::vector<std::uint32_t> part_b(verts.begin() + len_a, verts.end());
    MatrixGraph g = cycle_on(part_a, n, nullptr);
    return cycle_on(part_b, n, &g);
}

MatrixGraph two_swap(const MatrixGraph& g, std::uint32_t a, std::uint32_t b, std::uint32_t c,
                     std::uint32_t d) {
    if (a >= g.n || b >= g.n || c >= g.n || d >= g.n)
        throw std::invalid_argument("vertex out of range");
    if (a == b || a == c || a == d || b == c || b == d || c == d)
        throw std::invalid_argument("swap needs four distinct vertices");
    if (!g.at(a, b) || !g.at(c, d)) throw std::invalid_argument("swap endpoints must be edges");

    std::vector<std::uint32_t> order = walk_single_cycle(g, a, b);
    std::vector<std::uint32_t> pos(g.n);
    for (std::uint32_t i = 0; i < g.n; ++i) pos[order[i]] = i;
    // both added edges must close their own arc: d just before c on the walk
    if (pos[c] != pos[d] + 1)
        throw std::invalid_argument("swap orientation would keep a single cycle");
    std::uint32_t q = pos[d];
    if (q < 3 || g.n - q < 3)
        throw std::invalid_argument("swap arcs must each hold at least 3 vertices");

    MatrixGraph out = g;
    out.remove_edge(a, b);
    out.remove_edge(c, d);
    out.add_edge(a, c);
    out.add_edge(b, d);
    return out;
}

std::uint64_t count_cycles(const ListGraph& g) {
    if (g.k != 1) throw std::invalid_argument("cycle counting needs out-degree 1");
    if (auto err = validate_list(g)) throw std::invalid_argument(*err);
    std::vector<std::uint32_t> indeg(g.n, 0);
    for (std::uint32_t u = 0; u < g.n; ++u) ++indeg[g.at(u, 0)];
    for (std::uint32_t v = 0; v < g.n; ++v)
        if (indeg[v] != 1) throw std::invalid_argument("graph is not a permutation");
    std::vector<std::uint8_t> seen(g.n, 0);
    std::uint64_t cycles = 0;
    for (std::uint32_t v = 0; v < g.n; ++v) {
        if (seen[v]) continue;
        ++cycles;
        std::uint32_t cur = v;
        while (!seen[cur]) {
            seen[cur] = 1;
            cur = g.at(cur, 0);
        }
    }
    return cycles;
}

std::vector<std::vector<std::uint32_t>> cycle_decomposition(const MatrixGraph& g) {
    std::vector<std::vector<std::uint32_t>> nbrs(g.n);
    for (std::uint32_t u = 0; u < g.n; ++u) {
        for (std::uint32_t v = 0; v < g.n; ++v)
            if (g.at(u, v)) nbrs[u].push_back(v);
        if (nbrs[u].size() != 2) throw std::invalid_argument("graph is not 2-regular");
    }
    std::vector<std::uint8_t> seen(g.n, 0);
    std::vector<std::vector<std::uint32_t>> cycles;
    for (std::uint32_t s = 0; s < g.n; ++s) {
        if (seen[s]) continue;
        std::vector<std::uint32_t> cyc{s};
        seen[s] = 1;
        std::uint32_t prev = s, cur = nbrs[s][0];
        while (cur != s) {
            seen[cur] = 1;
            cyc.push_back(cur);
            std::uint32_t next = nbrs[cur][0] == prev ? nbrs[cur][1] : nbrs[cur][0];
            prev = cur;
            cur = next;
        }
        if (cyc.size() < 3) throw std::invalid_argument("degenerate cycle");
        cycles.push_back(std::move(cyc));
    }
    return cycles;
}

MatrixGraph gen_random_matrix(std::uint32_t n, double edge_prob, bool directed,
                              std::uint64_t seed) {
    if (edge_prob < 0.0 || edge_prob > 1.0)
        throw std::invalid_argument("edge probability out of range");
    Rng rng(seed);
    MatrixGraph g = MatrixGraph::make(n, directed);
    for (std::uint32_t u = 0; u < n; ++u) {
        for (std::uint32_t v = directed ? 0 : u + 1; v < n; ++v) {
            if (v == u) continue;
            if (rng.chance(edge_prob)) g.add_edge(u, v);
        }
    }
    return g;
}

ListGraph gen_random_list(std::uint32_t n, std::uint32_t k, std::uint64_t seed) {
    if (k == 0 || k >= n) throw std::invalid_argument("need 1 <= k < n");
    Rng rng(seed);
    ListGraph g = ListGraph::make(n, k);
    std::vector<std::uint32_t> picked;
    for (std::uint32_t u = 0; u < n; ++u) {
        picked.clear();
        while (picked.size() < k) {
            std::uint32_t v = static_cast<std::uint32_t>(rng.below(n));
            if (v == u) continue;
            if (std::find(picked.begin(), picked.end(), v) != picked.end()) continue;
            picked.push_back(v);
        }
        for (std::uint32_t i = 0; i < k; ++i) g.set(u, i, picked[i]);
    }
    return g;
}

MatrixGraph gen_gnm_matrix(std::uint32_t n, std::uint64_t m_cells, std::uint64_t seed) {
    if (m_cells % 2 != 0) throw std::invalid_argument("cell count must be even (undirected)");
    std::uint64_t max_edges = static_cast<std::uint64_t>(n) * (n - 1) / 2;
    std::uint64_t edges = m_cells / 2;
    if (edges > max_edges) throw std::invalid_argument("cell count exceeds simple-graph capacity");
    Rng rng(seed);
    MatrixGraph g = MatrixGraph::make(n, false);
    std::uint64_t placed = 0;
    while (placed < edges) {
        std::uint32_t u = static_cast<std::uint32_t>(rng.below(n));
        std::uint32_t v = static_cast<std::uint32_t>(rng.below(n));
        if (u == v || g.at(u, v)) continue;
        g.add_edge(u, v);
        ++placed;
    }
    return g;
}

} // namespace qconn
