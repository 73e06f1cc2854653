#include <doctest.h>

#include <random>

#include "apolar/unipoly.hpp"

using namespace apolar;

namespace {

UniPoly from_longs(std::initializer_list<long> cs) {
    std::vector<Rat> v;
    for (long c : cs) v.emplace_back(c);
    return UniPoly(std::move(v));
}

}  // namespace

TEST_CASE("squarefree detection") {
    CHECK(is_squarefree(from_longs({-1, 0, 1})));   // t^2 - 1
    CHECK_FALSE(is_squarefree(from_longs({0, 0, 1})));  // t^2
    // (t-1)^2 (t+2) = t^3 - 3t + 2
    CHECK_FALSE(is_squarefree(from_longs({2, -3, 0, 1})));
    CHECK_THROWS(is_squarefree(UniPoly()));
}

TEST_CASE("rational roots with multiplicities") {
    auto r = rational_roots(from_longs({-1, 0, 1}));
    REQUIRE(r.size() == 2);
    CHECK(r[0] == std::pair<Rat, int>{Rat(-1), 1});
    CHECK(r[1] == std::pair<Rat, int>{Rat(1), 1});

    auto r2 = rational_roots(from_longs({-3, 2}));
    REQUIRE(r2.size() == 1);
    CHECK(r2[0].first == make_rat(3, 2));
    CHECK(r2[0].second == 1);

    CHECK(rational_roots(from_longs({1, 0, 1})).empty());

    // t^2 (t - 1/3), scaled: 3t^3 - t^2
    auto r3 = rational_roots(from_longs({0, 0, -1, 3}));
    REQUIRE(r3.size() == 2);
    CHECK(r3[0] == std::pair<Rat, int>{Rat(0), 2});
    CHECK(r3[1] == std::pair<Rat, int>{make_rat(1, 3), 1});
}

TEST_CASE("resultants of known pairs") {
    CHECK(resultant(from_longs({-1, 1}), from_longs({1, 1})) == 2);
    CHECK(resultant(from_longs({0, 0, 1}), from_longs({0, 1})) == 0);
    CHECK(resultant(from_longs({-1, 0, 1}), from_longs({-2, 1})) == 3);
}

TEST_CASE("resultant vanishes exactly on common factors") {
    std::mt19937_64 rng(777);
    std::uniform_int_distribution<long> root(-3, 3);
    auto linear = [&](long r) { return from_longs({-r, 1}); };

    for (int trial = 0; trial < 100; ++trial) {
        UniPoly g = UniPoly::constant(Rat(1));
        UniPoly h = UniPoly::constant(Rat(1));
        std::vector<long> gr, hr;
        int dg = 1 + static_cast<int>(rng() % 3), dh = 1 + static_cast<int>(rng() % 3);
        for (int i = 0; i < dg; ++i) {
            long r = root(rng);
            gr.push_back(r);
            g = g * linear(r);
        }
        for (int i = 0; i < dh; ++i) {
            long r = root(rng);
            hr.push_back(r);
            h = h * linear(r);
        }
        bool share = false;
        for (long a : gr)
            for (long b : hr)
                if (a == b) share = true;
        CHECK((resultant(g, h) == 0) == share);
        CHECK((poly_gcd(g, h).degree() > 0) == share);
    }
}

TEST_CASE("division and gcd basics") {
    UniPoly g = from_longs({2, -3, 0, 1});
    auto [q, r] = g.divmod(from_longs({-1, 1}));
    CHECK(r.is_zero());
    CHECK(q == from_longs({-2, 1, 1}));
    CHECK(poly_gcd(g, g.derivative()) == from_longs({-1, 1}));
}
