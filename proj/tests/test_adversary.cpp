#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "qconn/adversary.hpp"

using namespace qconn;

TEST_CASE("generic bound evaluation on tiny handmade relations") {
    SUBCASE("single pair") {
        Relation rel;
        rel.xs = {{1, 0}};
        rel.ys = {{0, 0}};
        rel.pairs = {{0, 0}};
        AdversaryParams p = adversary_bound(rel);
        CHECK(p.m == 1);
        CHECK(p.m_prime == 1);
        CHECK(p.l_max == 1);
        CHECK(p.bound == doctest::Approx(1.0));
    }

    SUBCASE("degenerate inputs are rejected") {
        Relation rel;
        CHECK_THROWS_AS(adversary_bound(rel), std::invalid_argument);
        rel.xs = {{1}};
        rel.ys = {{1}};
        rel.pairs = {{0, 0}};
        CHECK_THROWS_AS(adversary_bound(rel), std::invalid_argument); // identical strings
        rel.xs = {{1}, {0}};
        rel.ys = {{0}};
        rel.pairs = {{0, 0}};
        CHECK_THROWS_AS(adversary_bound(rel), std::invalid_argument); // x_1 unrelated
        rel.pairs = {{0, 0}, {5, 0}};
        CHECK_THROWS_AS(adversary_bound(rel), std::invalid_argument); // index range
    }
}

TEST_CASE("parity relation reproduces the linear lower bound") {
    Relation rel = make_parity_relation(4);
    CHECK(rel.xs.size() == 8);
    CHECK(rel.ys.size() == 8);
    CHECK(rel.pairs.size() == 32);
    AdversaryParams p = adversary_bound(rel);
    CHECK(p.m == 4);
    CHECK(p.m_prime == 4);
    CHECK(p.l_max == 1);
    CHECK(p.bound == doctest::Approx(4.0).epsilon(1e-12));

    for (std::uint32_t n = 2; n <= 8; ++n) {
        AdversaryParams q = adversary_bound(make_parity_relation(n));
        CHECK(q.bound == doctest::Approx(static_cast<double>(n)).epsilon(1e-12));
    }
    CHECK_THROWS_AS(make_parity_relation(0), std::invalid_argument);
    CHECK_THROWS_AS(make_parity_relation(24), std::invalid_argument);
}

TEST_CASE("cycle relation parameters at the smallest supported size") {
    CycleRelationResult res = cycle_relation_params(9);
    CHECK(res.per_x_degree == 18); // sum of 9-d over valid split lengths d in {3,4,5,6}
    CHECK(res.l_edge == 4);
    CHECK(res.l_nonedge_max == 2);
    CHECK(res.params.m == 18);
    CHECK(res.params.m_prime == 36);
    CHECK(res.params.l_max == 16);
    CHECK(res.params.bound == doctest::Approx(std::sqrt(18.0 * 36.0 / 16.0)).epsilon(1e-12));
    CHECK_THROWS_AS(cycle_relation_params(8), std::invalid_argument);
}

TEST_CASE("cycle relation agrees with a full materialization at n=9") {
    Relation rel = materialize_cycle_relation(9);
    CHECK(rel.xs.size() == 20160); // 8!/2 labeled 9-cycles
    AdversaryParams generic = adversary_bound(rel);
    CycleRelationResult fast = cycle_relation_params(9);
    CHECK(generic.m == fast.params.m);
    CHECK(generic.m_prime == fast.params.m_prime);
    CHECK(generic.l_max == fast.params.l_max);
    CHECK(generic.bound == doctest::Approx(fast.params.bound).epsilon(1e-12));

    // every related pair differs in exactly 8 cells
    std::size_t len = rel.xs[0].size();
    for (std::size_t s = 0; s < rel.pairs.size(); s += 997) {
        auto [xi, yi] = rel.pairs[s];
        int diff = 0;
        for (std::size_t pos = 0; pos < len; ++pos)
            diff += rel.xs[xi][pos] != rel.ys[yi][pos];
        CHECK(diff == 8);
    }
    CHECK_THROWS_AS(materialize_cycle_relation(12), std::invalid_argument);
}

TEST_CASE("cycle relation bound grows superlinearly") {
    double b9 = cycle_relation_params(9).params.bound;
    double b18 = cycle_relation_params(18).params.bound;
    double b27 = cycle_relation_params(27).params.bound;
    CHECK(b18 > 2.0 * b9);  // linear growth would give exactly 2x
    CHECK(b27 > 1.5 * b18);
}

TEST_CASE("gadget relation parameters match the closed forms") {
    for (std::uint32_t p = 1; p <= 6; ++p) {
        for (std::uint32_t k = 2; k <= 5; ++k) {
            GadgetRelationResult res = gadget_relation_params(p, k);
            const std::uint64_t deg = static_cast<std::uint64_t>(p) * (k - 1) * (k - 1);
            CHECK(res.per_x_degree == deg);
            CHECK(res.params.m == deg);
            CHECK(res.params.m_prime == deg);
            CHECK(res.l_backward == k - 1);
            CHECK(res.l_forward == static_cast<std::uint64_t>(k - 1) * (k - 1));
            CHECK(res.params.l_max ==
                  static_cast<std::uint64_t>(k - 1) * (k - 1) * (k - 1));
            CHECK(res.params.bound ==
                  doctest::Approx(p * std::sqrt(double(k - 1))).epsilon(1e-12));
        }
    }
    CHECK_THROWS_AS(gadget_relation_params(0, 3), std::invalid_argument);
    CHECK_THROWS_AS(gadget_relation_params(2, 1), std::invalid_argument);
}

TEST_CASE("gadget relation agrees with a full materialization") {
    SUBCASE("p=2 k=2") {
        Relation rel = materialize_gadget_relation(2, 2);
        CHECK(rel.xs.size() == 32); // (k^2)^p * 2^p / 2
        CHECK(rel.ys.size() == 32);
        CHECK(rel.pairs.size() == 64);
        AdversaryParams generic = adversary_bound(rel);
        GadgetRelationResult fast = gadget_relation_params(2, 2);
        CHECK(generic.m == fast.params.m);
        CHECK(generic.m_prime == fast.params.m_prime);
        CHECK(generic.l_max == fast.params.l_max);
        CHECK(generic.bound == doctest::Approx(fast.params.bound).epsilon(1e-12));
    }
    SUBCASE("p=2 k=3") {
        AdversaryParams generic = adversary_bound(materialize_gadget_relation(2, 3));
        GadgetRelationResult fast = gadget_relation_params(2, 3);
        CHECK(generic.m == fast.params.m);
        CHECK(generic.m_prime == fast.params.m_prime);
        CHECK(generic.l_max == fast.params.l_max);
    }
    SUBCASE("too large to enumerate") {
        CHECK_THROWS_AS(materialize_gadget_relation(8, 6), std::invalid_argument);
    }
}
