#include "qconn/adversary.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <stdexcept>

#include "qconn/graph.hpp"
#include "qconn/instances.hpp"
#include "qconn/ledger.hpp"
#include "qconn/rng.hpp"

namespace qconn {

AdversaryParams adversary_bound(const Relation& rel) {
    if (rel.pairs.empty()) throw std::invalid_argument("relation has no pairs");
    if (rel.xs.empty() || rel.ys.empty()) throw std::invalid_argument("relation side is empty");
    const std::size_t len = rel.xs[0].size();
    if (len == 0) throw std::invalid_argument("zero-length instance strings");
    for (const auto& s : rel.xs)
        if (s.size() != len) throw std::invalid_argument("instance strings differ in length");
    for (const auto& s : rel.ys)
        if (s.size() != len) throw std::invalid_argument("instance strings differ in length");

    std::vector<std::uint64_t> deg_x(rel.xs.size(), 0), deg_y(rel.ys.size(), 0);
    for (auto [xi, yi] : rel.pairs) {
        if (xi >= rel.xs.size() || yi >= rel.ys.size())
            throw std::invalid_argument("pair index out of range");
        ++deg_x[xi];
        ++deg_y[yi];
    }
    AdversaryParams out;
    out.m = *std::min_element(deg_x.begin(), deg_x.end());
    out.m_prime = *std::min_element(deg_y.begin(), deg_y.end());
    if (out.m == 0 || out.m_prime == 0)
        throw std::invalid_argument("relation contains an instance with no partner");

    std::vector<std::uint64_t> lx(rel.xs.size() * len, 0), ly(rel.ys.size() * len, 0);
    for (auto [xi, yi] : rel.pairs) {
        const auto& x = rel.xs[xi];
        const auto& y = rel.ys[yi];
        bool differs = false;
        for (std::size_t pos = 0; pos < len; ++pos) {
            if (x[pos] != y[pos]) {
                ++lx[xi * len + pos];
                ++ly[yi * len + pos];
                differs = true;
            }
        }
        if (!differs) throw std::invalid_argument("related pair with identical strings");
    }
    for (auto [xi, yi] : rel.pairs) {
        const auto& x = rel.xs[xi];
        const auto& y = rel.ys[yi];
        for (std::size_t pos = 0; pos < len; ++pos)
            if (x[pos] != y[pos])
                out.l_max = std::max(out.l_max, lx[xi * len + pos] * ly[yi * len + pos]);
    }
    out.bound = std::sqrt(static_cast<double>(out.m) * static_cast<double>(out.m_prime) /
                          static_cast<double>(out.l_max));
    return out;
}

Relation make_parity_relation(std::uint32_t n) {
    if (n == 0 || n > 20) throw std::invalid_argument("need 1 <= n <= 20");
    Relation rel;
    std::vector<std::uint32_t> x_idx(1u << n, 0), y_idx(1u << n, 0);
    for (std::uint32_t v = 0; v < (1u << n); ++v) {
        std::vector<std::int32_t> s(n);
        for (std::uint32_t b = 0; b < n; ++b) s[b] = (v >> b) & 1;
        if (__builtin_popcount(v) & 1) {
            x_idx[v] = static_cast<std::uint32_t>(rel.xs.size());
            rel.xs.push_back(std::move(s));
        } else {
            y_idx[v] = static_cast<std::uint32_t>(rel.ys.size());
            rel.ys.push_back(std::move(s));
        }
    }
    for (std::uint32_t v = 0; v < (1u << n); ++v) {
        if (!(__builtin_popcount(v) & 1)) continue;
        for (std::uint32_t b = 0; b < n; ++b)
            rel.pairs.emplace_back(x_idx[v], y_idx[v ^ (1u << b)]);
    }
    return rel;
}

namespace {

// traversal order of a single cycle, starting at 0 toward its smaller neighbor
std::vector<std::uint32_t> cycle_order(const MatrixGraph& g) {
    auto cycles = cycle_decomposition(g);
    if (cycles.size() != 1 || cycles[0].size() != g.n)
        throw std::invalid_argument("graph is not a single cycle");
    std::vector<std::uint32_t> order = cycles[0];
    std::rotate(order.begin(), std::find(order.begin(), order.end(), 0u), order.end());
    if (order.size() > 2 && order[1] > order.back())
        std::reverse(order.begin() + 1, order.end());
    return order;
}

std::vector<std::uint32_t> valid_split_lengths(std::uint32_t n) {
    std::uint32_t lo = (n + 2) / 3, hi = (2 * n) / 3;
    std::vector<std::uint32_t> ds;
    for (std::uint32_t d = lo; d <= hi; ++d)
        if (n - d >= lo && n - d <= hi) ds.push_back(d);
    return ds;
}

struct SplitProduct {
    MatrixGraph g;
    std::vector<std::uint32_t> diff; // differing cells against the source cycle
    std::uint32_t split;             // length of the first part
};

// every valid splitting swap of a single cycle, each two-cycle result once
std::vector<SplitProduct> enumerate_splits(const MatrixGraph& cycle) {
    const std::uint32_t n = cycle.n;
    std::vector<std::uint32_t> order = cycle_order(cycle);
    std::vector<std::uint32_t> ds = valid_split_lengths(n);
    std::vector<SplitProduct> out;
    for (std::uint32_t i = 0; i < n; ++i) {
        for (std::uint32_t d : ds) {
            std::uint32_t j = i + d;
            if (j >= n) continue; // the wrapped copy is enumerated from the partner edge
            SplitProduct sp;
            sp.g = two_swap(cycle, order[i], order[(i + 1) % n], order[(j + 1) % n], order[j]);
            sp.split = d;
            for (std::uint32_t c = 0; c < n * n; ++c)
                if (sp.g.cells[c] != cycle.cells[c]) sp.diff.push_back(c);
            if (sp.diff.size() != 8)
                throw std::logic_error("split must change exactly 8 cells");
            out.push_back(std::move(sp));
        }
    }
    return out;
}

// Enumerates every merge of a two-cycle graph (one edge per part, two
// reconnections), bumping ly at each differing cell. Returns the merge count.
std::uint64_t enumerate_merges(const MatrixGraph& y, std::vector<std::uint64_t>* ly,
                               bool verify) {
    const std::uint32_t n = y.n;
    auto cycles = cycle_decomposition(y);
    if (cycles.size() != 2) throw std::invalid_argument("graph is not a two-cycle split");
    std::uint64_t count = 0;
    auto cell = [n](std::uint32_t u, std::uint32_t v) { return u * n + v; };
    for (std::size_t s = 0; s < cycles[0].size(); ++s) {
        std::uint32_t a1 = cycles[0][s], b1 = cycles[0][(s + 1) % cycles[0].size()];
        for (std::size_t t = 0; t < cycles[1].size(); ++t) {
            std::uint32_t a2 = cycles[1][t], b2 = cycles[1][(t + 1) % cycles[1].size()];
            for (int pairing = 0; pairing < 2; ++pairing) {
                std::uint32_t p1 = pairing ? b2 : a2;
                std::uint32_t p2 = pairing ? a2 : b2;
                if (ly) {
                    for (std::uint32_t c : {cell(a1, b1), cell(b1, a1), cell(a2, b2),
                                            cell(b2, a2), cell(a1, p1), cell(p1, a1),
                                            cell(b1, p2), cell(p2, b1)})
                        ++(*ly)[c];
                }
                if (verify) {
                    MatrixGraph z = y;
                    z.remove_edge(a1, b1);
                    z.remove_edge(a2, b2);
                    z.add_edge(a1, p1);
                    z.add_edge(b1, p2);
                    if (cycle_decomposition(z).size() != 1)
                        throw std::logic_error("merge did not give a single cycle");
                }
                ++count;
            }
        }
    }
    return count;
}

MatrixGraph relabel(const MatrixGraph& g, const std::vector<std::uint32_t>& sigma) {
    MatrixGraph out = MatrixGraph::make(g.n, g.directed);
    for (std::uint32_t u = 0; u < g.n; ++u)
        for (std::uint32_t v = 0; v < g.n; ++v)
            if (g.at(u, v)) out.set(sigma[u], sigma[v], true);
    return out;
}

} // namespace

CycleRelationResult cycle_relation_params(std::uint32_t n) {
    if (n < 9) throw std::invalid_argument("need n >= 9");
    MatrixGraph x0 = MatrixGraph::make(n, false);
    for (std::uint32_t i = 0; i < n; ++i) x0.add_edge(i, (i + 1) % n);

    std::vector<SplitProduct> splits = enumerate_splits(x0);
    CycleRelationResult res;
    res.per_x_degree = splits.size();

    std::vector<std::uint64_t> lx(static_cast<std::size_t>(n) * n, 0);
    for (const auto& sp : splits)
        for (std::uint32_t c : sp.diff) ++lx[c];
    res.l_edge = lx[0 * n + 1];
    for (std::uint32_t u = 0; u < n; ++u) {
        for (std::uint32_t v = 0; v < n; ++v) {
            if (u == v || x0.at(u, v)) continue;
            res.l_nonedge_max = std::max(res.l_nonedge_max, lx[u * n + v]);
        }
    }

    const bool verify_all = n <= 12;
    std::uint64_t l_max = 0;
    std::uint64_t min_merges = ~0ull;
    std::vector<std::uint64_t> ly(static_cast<std::size_t>(n) * n);
    for (const auto& sp : splits) {
        std::fill(ly.begin(), ly.end(), 0);
        std::uint64_t merges = enumerate_merges(sp.g, &ly, verify_all);
        min_merges = std::min(min_merges, merges);
        for (std::uint32_t c : sp.diff) l_max = std::max(l_max, lx[c] * ly[c]);
    }

    // the relation is invariant under relabeling; spot-check the orbit
    Rng rng(mix_seed(0x9e1ab5u, n));
    for (int rep = 0; rep < 3; ++rep) {
        std::vector<std::uint32_t> sigma(n);
        for (std::uint32_t i = 0; i < n; ++i) sigma[i] = i;
        for (std::uint32_t i = n; i > 1; --i)
            std::swap(sigma[i - 1], sigma[rng.below(i)]);
        MatrixGraph xr = relabel(x0, sigma);
        std::vector<SplitProduct> rs = enumerate_splits(xr);
        if (rs.size() != res.per_x_degree)
            throw std::logic_error("relation degree not invariant under relabeling");
        const SplitProduct& probe = rs[rng.below(rs.size())];
        for (const auto& sp : splits) {
            if (sp.split != probe.split) continue;
            if (enumerate_merges(probe.g, nullptr, false) !=
                enumerate_merges(sp.g, nullptr, false))
                throw std::logic_error("merge count not invariant under relabeling");
            break;
        }
    }

    res.params.m = res.per_x_degree;
    res.params.m_prime = min_merges;
    res.params.l_max = l_max;
    res.params.bound = std::sqrt(static_cast<double>(res.params.m) *
                                 static_cast<double>(res.params.m_prime) /
                                 static_cast<double>(l_max));
    return res;
}

Relation materialize_cycle_relation(std::uint32_t n) {
    if (n < 9 || n > 10) throw std::invalid_argument("full enumeration supported for n in [9,10]");
    Relation rel;
    std::map<std::vector<std::int32_t>, std::uint32_t> y_index;

    std::vector<std::uint32_t> perm(n - 1);
    for (std::uint32_t i = 0; i < n - 1; ++i) perm[i] = i + 1;
    do {
        if (perm.front() > perm.back()) continue; // each undirected cycle once
        MatrixGraph g = MatrixGraph::make(n, false);
        g.add_edge(0, perm.front());
        for (std::uint32_t i = 0; i + 1 < n - 1; ++i) g.add_edge(perm[i], perm[i + 1]);
        g.add_edge(perm.back(), 0);
        std::uint32_t xi = static_cast<std::uint32_t>(rel.xs.size());
        rel.xs.emplace_back(g.cells.begin(), g.cells.end());
        for (auto& sp : enumerate_splits(g)) {
            std::vector<std::int32_t> ys(sp.g.cells.begin(), sp.g.cells.end());
            auto [it, fresh] = y_index.try_emplace(std::move(ys),
                                                   static_cast<std::uint32_t>(rel.ys.size()));
            if (fresh) rel.ys.push_back(std::vector<std::int32_t>(it->first));
            rel.pairs.emplace_back(xi, it->second);
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return rel;
}

namespace {

std::vector<GadgetSpec> gadget_neighbors(const GadgetSpec& s) {
    const std::uint32_t p = static_cast<std::uint32_t>(s.x.size());
    std::vector<GadgetSpec> out;
    for (std::uint32_t i = 0; i < p; ++i) {
        for (std::uint32_t h0 = 0; h0 < s.k; ++h0) {
            if (h0 == s.slots[i].first) continue;
            for (std::uint32_t h1 = 0; h1 < s.k; ++h1) {
                if (h1 == s.slots[i].second) continue;
                GadgetSpec t = s;
                t.x[i] ^= 1;
                t.slots[i] = {h0, h1};
                out.push_back(std::move(t));
            }
        }
    }
    return out;
}

std::uint32_t count_diff(const ListGraph& a, const ListGraph& b) {
    std::uint32_t diff = 0;
    for (std::size_t i = 0; i < a.nbr.size(); ++i)
        if (a.nbr[i] != b.nbr[i]) ++diff;
    return diff;
}

GadgetSpec sampled_gadget(std::uint32_t p, std::uint32_t k, bool odd, std::uint64_t seed) {
    Rng rng(seed);
    GadgetSpec s;
    s.k = k;
    s.x.resize(p);
    s.slots.resize(p);
    for (std::uint32_t i = 0; i < p; ++i) {
        s.x[i] = static_cast<std::uint8_t>(rng.below(2));
        s.slots[i] = {static_cast<std::uint32_t>(rng.below(k)),
                      static_cast<std::uint32_t>(rng.below(k))};
    }
    if (parity_of(s.x) != odd) s.x[0] ^= 1;
    return s;
}

} // namespace

GadgetRelationResult gadget_relation_params(std::uint32_t p, std::uint32_t k) {
    if (p < 1 || p > 8) throw std::invalid_argument("need 1 <= p <= 8");
    if (k < 2 || k > 6) throw std::invalid_argument("need 2 <= k <= 6");
    const std::uint64_t degree = static_cast<std::uint64_t>(p) * (k - 1) * (k - 1);

    GadgetRelationResult res;
    res.l_backward = k - 1;
    res.l_forward = static_cast<std::uint64_t>(k - 1) * (k - 1);

    std::uint64_t l_max_seen = 0;
    for (int sample = 0; sample < 6; ++sample) {
        GadgetSpec spec = sampled_gadget(p, k, sample % 2 == 0,
                                         mix_seed(0x6ad6e7u + sample, p * 31u + k));
        ListGraph g = gen_origin_gadget(spec);
        bool g_sc;
        {
            QueryLedger scratch;
            g_sc = classical_strongly_connected(g, scratch);
        }
        if (g_sc != parity_of(spec.x)) throw std::logic_error("parity criterion violated");

        std::vector<GadgetSpec> nbr_specs = gadget_neighbors(spec);
        if (nbr_specs.size() != degree) throw std::logic_error("unexpected relation degree");

        std::vector<ListGraph> nbrs;
        nbrs.reserve(nbr_specs.size());
        for (const auto& t : nbr_specs) {
            ListGraph h = gen_origin_gadget(t);
            if (auto err = validate_list(h)) throw std::logic_error("invalid neighbor: " + *err);
            if (count_diff(g, h) != 4)
                throw std::logic_error("related pair must differ in exactly 4 slots");
            nbrs.push_back(std::move(h));
        }

        // per-position l over the x side, counted explicitly
        auto l_at = [&](const std::vector<ListGraph>& hs, const ListGraph& base,
                        std::uint32_t u, std::uint32_t slot) {
            std::uint64_t c = 0;
            for (const auto& h : hs)
                if (h.at(u, slot) != base.at(u, slot)) ++c;
            return c;
        };
        for (std::uint32_t i = 0; i < p && sample < 2; ++i) {
            auto [j0, j1] = spec.slots[i];
            if (l_at(nbrs, g, 2 * i, j0) != res.l_forward)
                throw std::logic_error("forward l mismatch");
            if (l_at(nbrs, g, 2 * i + 1, j1) != res.l_forward)
                throw std::logic_error("forward l mismatch");
            for (std::uint32_t h0 = 0; h0 < k; ++h0)
                if (h0 != j0 && l_at(nbrs, g, 2 * i, h0) != res.l_backward)
                    throw std::logic_error("backward l mismatch");
        }

        // max product over differing positions of one related pair per sample
        const GadgetSpec& other_spec = nbr_specs[static_cast<std::size_t>(sample) % nbr_specs.size()];
        const ListGraph& other = nbrs[static_cast<std::size_t>(sample) % nbrs.size()];
        std::vector<GadgetSpec> back_specs = gadget_neighbors(other_spec);
        if (back_specs.size() != degree) throw std::logic_error("unexpected relation degree");
        std::vector<ListGraph> back;
        back.reserve(back_specs.size());
        for (const auto& t : back_specs) back.push_back(gen_origin_gadget(t));
        for (std::uint32_t u = 0; u < g.n; ++u) {
            for (std::uint32_t slot = 0; slot < k; ++slot) {
                if (g.at(u, slot) == other.at(u, slot)) continue;
                std::uint64_t prod = l_at(nbrs, g, u, slot) * l_at(back, other, u, slot);
                l_max_seen = std::max(l_max_seen, prod);
            }
        }
    }

    const std::uint64_t l_max_expected =
        static_cast<std::uint64_t>(k - 1) * (k - 1) * (k - 1);
    if (l_max_seen != l_max_expected) throw std::logic_error("l_max mismatch");

    res.per_x_degree = degree;
    res.params.m = degree;
    res.params.m_prime = degree;
    res.params.l_max = l_max_expected;
    res.params.bound = std::sqrt(static_cast<double>(degree) * static_cast<double>(degree) /
                                 static_cast<double>(l_max_expected));
    return res;
}

Relation materialize_gadget_relation(std::uint32_t p, std::uint32_t k) {
    if (p < 1 || k < 2) throw std::invalid_argument("need p >= 1 and k >= 2");
    double total = std::pow(static_cast<double>(k) * k, p) * std::pow(2.0, p);
    if (total > 300000.0) throw std::invalid_argument("instance family too large to materialize");

    const std::uint32_t combos = static_cast<std::uint32_t>(std::pow(k * k, p));
    Relation rel;
    std::map<std::vector<std::int32_t>, std::uint32_t> x_index, y_index;
    std::vector<GadgetSpec> x_specs;

    for (std::uint32_t slot_code = 0; slot_code < combos; ++slot_code) {
        for (std::uint32_t bits = 0; bits < (1u << p); ++bits) {
            GadgetSpec s;
            s.k = k;
            s.x.resize(p);
            s.slots.resize(p);
            std::uint32_t code = slot_code;
            for (std::uint32_t i = 0; i < p; ++i) {
                s.x[i] = (bits >> i) & 1;
                s.slots[i] = {code % k, (code / k) % k};
                code /= k * k;
            }
            ListGraph g = gen_origin_gadget(s);
            std::vector<std::int32_t> str(g.nbr.begin(), g.nbr.end());
            if (parity_of(s.x)) {
                x_index.emplace(std::move(str), static_cast<std::uint32_t>(rel.xs.size()));
                rel.xs.emplace_back(g.nbr.begin(), g.nbr.end());
                x_specs.push_back(std::move(s));
            } else {
                y_index.emplace(std::move(str), static_cast<std::uint32_t>(rel.ys.size()));
                rel.ys.emplace_back(g.nbr.begin(), g.nbr.end());
            }
        }
    }
    for (std::uint32_t xi = 0; xi < x_specs.size(); ++xi) {
        for (const auto& t : gadget_neighbors(x_specs[xi])) {
            ListGraph h = gen_origin_gadget(t);
            std::vector<std::int32_t> str(h.nbr.begin(), h.nbr.end());
            auto it = y_index.find(str);
            if (it == y_index.end()) throw std::logic_error("neighbor not in enumerated family");
            rel.pairs.emplace_back(xi, it->second);
        }
    }
    return rel;
}

} // namespace qconn
