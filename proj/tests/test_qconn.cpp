#include <cmath>
#include <stdexcept>
#include <set>

#include "doctest.h"
#include "qconn/instances.hpp"
#include "qconn/ledger.hpp"
#include "qconn/quantum_connectivity.hpp"

using namespace qconn;

namespace {

GroverConfig default_cfg() { return GroverConfig{}; }

MatrixGraph complete_graph(std::uint32_t n) {
    MatrixGraph g = MatrixGraph::make(n, false);
    for (std::uint32_t u = 0; u < n; ++u)
        for (std::uint32_t v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

} // namespace

TEST_CASE("spanning search marks the component of the root") {
    GroverConfig cfg = default_cfg();

    SUBCASE("two disjoint edges never cross components") {
        MatrixGraph g = MatrixGraph::make(4, false);
        g.add_edge(0, 1);
        g.add_edge(2, 3);
        Rng rng(0x2222);
        for (int rep = 0; rep < 50; ++rep) {
            QueryLedger ledger;
            DfsResult tree = q_spanning_tree(g, 0, cfg, rng, ledger);
            REQUIRE(tree.order.size() == 2);
            CHECK(tree.marked[0]);
            CHECK(tree.marked[1]);
            CHECK(!tree.marked[2]);
            CHECK(!tree.marked[3]);
            CHECK(ledger.count() > 0);
        }
    }

    SUBCASE("complete graph marks everything nearly always") {
        MatrixGraph g = complete_graph(8);
        Rng rng(0x3333);
        int full = 0;
        for (int rep = 0; rep < 100; ++rep) {
            QueryLedger ledger;
            DfsResult tree = q_spanning_tree(g, 0, cfg, rng, ledger);
            if (tree.order.size() == 8) ++full;
        }
        CHECK(full >= 95);
    }

    SUBCASE("tree edges are real and parents precede children") {
        Rng rng(0x4444);
        MatrixGraph g = gen_random_matrix(24, 0.4, false, 0xabc);
        QueryLedger ledger;
        DfsResult tree = q_spanning_tree(g, 0, cfg, rng, ledger);
        auto idx = tree.order_index();
        for (std::uint32_t v : tree.order) {
            if (v == 0) continue;
            auto p = static_cast<std::uint32_t>(tree.parent[v]);
            CHECK(g.at(p, v));
            CHECK(idx[p] < idx[v]);
        }
    }

    SUBCASE("single vertex") {
        MatrixGraph g = MatrixGraph::make(1, false);
        Rng rng(0x5555);
        QueryLedger ledger;
        DfsResult tree = q_spanning_tree(g, 0, cfg, rng, ledger);
        CHECK(tree.order == std::vector<std::uint32_t>{0});
    }
}

TEST_CASE("list-model spanning search stays within the k slots") {
    GroverConfig cfg = default_cfg();
    GadgetSpec spec;
    spec.x = {1, 1, 1}; // odd parity: strongly connected
    spec.k = 3;
    spec.seed = 77;
    ListGraph g = gen_origin_gadget(spec);
    Rng rng(0x6666);
    int full = 0;
    for (int rep = 0; rep < 60; ++rep) {
        QueryLedger ledger;
        DfsResult tree = q_spanning_tree(g, 0, cfg, rng, ledger);
        if (tree.order.size() == g.n) ++full;
        for (std::uint32_t v : tree.order) {
            if (v == 0) continue;
            auto p = static_cast<std::uint32_t>(tree.parent[v]);
            bool is_real = false;
            for (std::uint32_t s = 0; s < g.k; ++s) is_real |= g.at(p, s) == v;
            CHECK(is_real);
        }
    }
    CHECK(full >= 54);
}

TEST_CASE("q_connected decides undirected connectivity") {
    GroverConfig cfg = default_cfg();

    SUBCASE("one-cycles are connected") {
        Rng rng(0x777);
        int good = 0;
        for (int rep = 0; rep < 100; ++rep) {
            MatrixGraph g = gen_cycle_instance(
                {32, CycleVariant::OneCycle, 0, 0, 50u + static_cast<std::uint64_t>(rep)});
            AlgoReport rep_out = q_connected(g, cfg, rng);
            CHECK(rep_out.queries > 0);
            if (rep_out.answer) ++good;
        }
        CHECK(good >= 95);
    }

    SUBCASE("the empty graph is never connected") {
        MatrixGraph g = MatrixGraph::make(4, false);
        Rng rng(0x888);
        for (int rep = 0; rep < 20; ++rep) {
            AlgoReport out = q_connected(g, cfg, rng);
            CHECK(!out.answer);
        }
    }

    SUBCASE("a single vertex is connected") {
        MatrixGraph g = MatrixGraph::make(1, false);
        Rng rng(0x999);
        CHECK(q_connected(g, cfg, rng).answer);
    }

    SUBCASE("asymmetric input is rejected") {
        MatrixGraph g = MatrixGraph::make(3, true);
        g.set(0, 1, true);
        Rng rng(0xaaa);
        CHECK_THROWS_AS(q_connected(g, cfg, rng), std::invalid_argument);
    }
}

TEST_CASE("q_connected_learning learns the edge set under the exact-count promise") {
    GroverConfig cfg = default_cfg();

    SUBCASE("triangle") {
        MatrixGraph g = complete_graph(3);
        Rng rng(0xbbb);
        for (int rep = 0; rep < 20; ++rep) {
            AlgoReport out = q_connected_learning(g, 6, cfg, rng);
            if (!out.failed) CHECK(out.answer);
            CHECK(out.queries > 0);
        }
    }

    SUBCASE("path graphs come back correct nearly always") {
        MatrixGraph g = MatrixGraph::make(8, false);
        for (std::uint32_t i = 0; i + 1 < 8; ++i) g.add_edge(i, i + 1);
        Rng rng(0xccc);
        int good = 0;
        for (int rep = 0; rep < 20; ++rep) {
            AlgoReport out = q_connected_learning(g, g.cell_count(), cfg, rng);
            if (!out.failed && out.answer) ++good;
        }
        CHECK(good >= 18);
    }

    SUBCASE("no edges, several vertices: immediate no") {
        MatrixGraph g = MatrixGraph::make(4, false);
        Rng rng(0xddd);
        AlgoReport out = q_connected_learning(g, 0, cfg, rng);
        CHECK(!out.answer);
        CHECK(out.queries == 0);
    }

    SUBCASE("a wrong promise is rejected up front") {
        MatrixGraph g = complete_graph(3);
        Rng rng(0xeee);
        CHECK_THROWS_AS(q_connected_learning(g, 4, cfg, rng), std::invalid_argument);
    }
}

TEST_CASE("strong connectivity in the matrix model") {
    GroverConfig cfg = default_cfg();

    SUBCASE("directed cycle") {
        MatrixGraph g = MatrixGraph::make(16, true);
        for (std::uint32_t i = 0; i < 16; ++i) g.set(i, (i + 1) % 16, true);
        Rng rng(0xf00);
        int good = 0;
        for (int rep = 0; rep < 20; ++rep)
            if (q_strongly_connected_matrix(g, cfg, rng).answer) ++good;
        CHECK(good >= 18);
    }

    SUBCASE("one arc only") {
        MatrixGraph g = MatrixGraph::make(2, true);
        g.set(0, 1, true);
        Rng rng(0xf01);
        for (int rep = 0; rep < 20; ++rep) CHECK(!q_strongly_connected_matrix(g, cfg, rng).answer);
    }

    SUBCASE("single vertex") {
        MatrixGraph g = MatrixGraph::make(1, true);
        Rng rng(0xf02);
        CHECK(q_strongly_connected_matrix(g, cfg, rng).answer);
    }
}

TEST_CASE("strong connectivity in the list model") {
    GroverConfig cfg = default_cfg();

    SUBCASE("odd-parity permutation graph is one big cycle") {
        ParitySpec spec{{1, 0, 1, 1}}; // parity 1
        ListGraph g = gen_parity_graph(spec);
        Rng rng(0xf10);
        int good = 0;
        for (int rep = 0; rep < 20; ++rep)
            if (q_strongly_connected_list(g, cfg, rng).answer) ++good;
        CHECK(good >= 18);
    }

    SUBCASE("even-parity permutation graph splits and always answers no") {
        ParitySpec spec{{1, 0, 1, 0}}; // parity 0: two cycles
        ListGraph g = gen_parity_graph(spec);
        Rng rng(0xf11);
        for (int rep = 0; rep < 20; ++rep) {
            AlgoReport out = q_strongly_connected_list(g, cfg, rng);
            CHECK(!out.answer); // stage 1 can never mark the unreachable cycle
        }
    }

    SUBCASE("gadgets follow their parity") {
        Rng rng(0xf12);
        GadgetSpec odd;
        odd.x = {1, 1, 1};
        odd.k = 3;
        odd.seed = 5;
        ListGraph godd = gen_origin_gadget(odd);
        int good = 0;
        for (int rep = 0; rep < 20; ++rep)
            if (q_strongly_connected_list(godd, cfg, rng).answer) ++good;
        CHECK(good >= 17);

        GadgetSpec even = odd;
        even.x = {1, 1, 0};
        ListGraph geven = gen_origin_gadget(even);
        for (int rep = 0; rep < 20; ++rep)
            CHECK(!q_strongly_connected_list(geven, cfg, rng).answer);
    }
}

TEST_CASE("reduction lemma on deterministic trees") {
    SUBCASE("strongly connected instance") {
        ParitySpec spec{{1}};
        ListGraph g = gen_parity_graph(spec);
        auto verdict = reduction_lemma_check(g);
        REQUIRE(verdict.has_value());
        CHECK(*verdict);
    }

    SUBCASE("spanning but not strongly connected") {
        // star out of vertex 0: everything reachable, nothing returns
        ListGraph g = ListGraph::make(4, 2);
        g.set(0, 0, 1);
        g.set(0, 1, 2);
        g.set(1, 0, 2);
        g.set(1, 1, 3);
        g.set(2, 0, 3);
        g.set(2, 1, 1);
        g.set(3, 0, 1);
        g.set(3, 1, 2);
        auto verdict = reduction_lemma_check(g);
        REQUIRE(verdict.has_value());
        CHECK(*verdict); // both sides agree on "no"
    }

    SUBCASE("root component too small gives the skip signal") {
        ParitySpec spec{{0}}; // two fixed points
        ListGraph g = gen_parity_graph(spec);
        CHECK(!reduction_lemma_check(g).has_value());
    }

    SUBCASE("random corpus sample stays counterexample-free") {
        Rng rng(0xf20);
        int checked = 0;
        for (int rep = 0; rep < 200; ++rep) {
            std::uint32_t n = 5 + static_cast<std::uint32_t>(rng.below(20));
            ListGraph g = gen_random_list(n, 2 + rep % 3, rng.next());
            auto verdict = reduction_lemma_check(g);
            if (!verdict) continue;
            ++checked;
            CHECK(*verdict);
        }
        CHECK(checked > 30);
    }
}

TEST_CASE("query ledgers accumulate across both stages") {
    GroverConfig cfg = default_cfg();
    GadgetSpec spec;
    spec.x = {1, 1, 1, 1, 1};
    spec.k = 4;
    spec.seed = 11;
    ListGraph g = gen_origin_gadget(spec);
    Rng rng(0xf30);
    AlgoReport out = q_strongly_connected_list(g, cfg, rng);
    // stage 2 alone charges at least n * budget(k) when stage 1 spans
    if (out.tree && out.tree->order.size() == g.n) {
        std::uint64_t stage2_floor = g.n * static_cast<std::uint64_t>(
                                                std::ceil(cfg.min_budget_factor * std::sqrt(4.0)));
        CHECK(out.queries > stage2_floor);
    }
    CHECK(out.queries > 0);
}
