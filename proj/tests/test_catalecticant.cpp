#include <doctest.h>

#include <random>

#include "apolar/catalecticant.hpp"
#include "apolar/errors.hpp"

using namespace apolar;

namespace {

ProjPoint pt(std::initializer_list<long> cs) {
    std::vector<Rat> v;
    for (long c : cs) v.emplace_back(c);
    return ProjPoint(std::move(v));
}

RatMatrix random_unimodular(std::mt19937_64& rng, int n) {
    // product of elementary row additions: determinant 1
    RatMatrix m = RatMatrix::identity(static_cast<std::size_t>(n));
    std::uniform_int_distribution<int> c(-2, 2);
    for (int step = 0; step < 6; ++step) {
        int i = static_cast<int>(rng() % static_cast<unsigned>(n));
        int j = static_cast<int>(rng() % static_cast<unsigned>(n));
        if (i == j) continue;
        Rat f(c(rng));
        for (int k = 0; k < n; ++k)
            m.at(static_cast<std::size_t>(i), static_cast<std::size_t>(k)) +=
                f * m.at(static_cast<std::size_t>(j), static_cast<std::size_t>(k));
    }
    return m;
}

WaringDecomposition random_decomposition(std::mt19937_64& rng, int n, int r) {
    std::uniform_int_distribution<long> c(-3, 3);
    WaringDecomposition decomp;
    while (static_cast<int>(decomp.size()) < r) {
        std::vector<Rat> v;
        for (int i = 0; i < n; ++i) v.emplace_back(c(rng));
        bool zero = true;
        for (const Rat& q : v)
            if (q != 0) zero = false;
        if (zero) continue;
        long coef = c(rng);
        if (coef == 0) coef = 1;
        decomp.emplace_back(Rat(coef), ProjPoint(v));
    }
    return decomp;
}

Form eval_decomposition(const WaringDecomposition& d, int n, long deg) {
    Form p(n, deg);
    for (const auto& [coef, point] : d) p = p + power_of_point(point, deg) * coef;
    return p;
}

}  // namespace

TEST_CASE("catalecticant matrices of the named examples") {
    // pure powers have every flattening of rank 1
    for (long d = 2; d <= 6; ++d)
        for (long a = 1; a <= d - 1; ++a)
            CHECK(rank_exact(catalecticant(power_of_point(pt({1, 2, -1}), d), a).m) == 1);

    // x0^3 x1: 3x3 Hankel with b-coordinates (0, 1/4, 0, 0, 0)
    CatalecticantMatrix cm = catalecticant(parse_form("x0^3*x1"), 2);
    CHECK(cm.m.rows() == 3);
    CHECK(cm.m.cols() == 3);
    CHECK(cm.m.at(0, 1) == make_rat(1, 4));
    CHECK(cm.m.at(1, 0) == make_rat(1, 4));
    CHECK(cm.m.at(1, 1) == 0);
    CHECK(rank_exact(cm.m) == 2);

    CHECK(rank_exact(catalecticant(parse_form("x0^2 + x1^2"), 1).m) == 2);

    CHECK_THROWS_AS(catalecticant(parse_form("x0^2 + x1^2"), 2), Error);
}

TEST_CASE("border rank profiles of the named examples") {
    CHECK(border_rank_lower_bound(parse_form("x0^5 + x1^5 + x2^5")).lower_bound == 3);
    for (long d = 3; d <= 7; ++d) {
        Form p = tangent_power(pt({1, 0}), pt({0, 1}), d);
        CHECK(border_rank_lower_bound(p).lower_bound == 2);
    }
    CHECK(border_rank_lower_bound(parse_form("x0^4", 2)).lower_bound == 1);
}

TEST_CASE("profile bound respects matrix dimensions") {
    std::mt19937_64 rng(31337);
    for (int trial = 0; trial < 10; ++trial) {
        int n = 2 + static_cast<int>(rng() % 2);
        long d = 3 + static_cast<long>(rng() % 3);
        Form p = eval_decomposition(random_decomposition(rng, n, 3), n, d);
        if (p.is_zero()) continue;
        BorderRankProfile prof = border_rank_lower_bound(p);
        for (const auto& [a, r] : prof.ranks) {
            std::size_t rows = MonomialBasis(n, a).size();
            std::size_t cols = MonomialBasis(n, d - a).size();
            CHECK(r <= std::min(rows, cols));
        }
    }
}

TEST_CASE("transpose symmetry of flattening ranks") {
    std::mt19937_64 rng(555);
    for (int trial = 0; trial < 20; ++trial) {
        int n = 2 + static_cast<int>(rng() % 2);
        long d = 4 + static_cast<long>(rng() % 3);
        Form p = eval_decomposition(random_decomposition(rng, n, 4), n, d);
        if (p.is_zero()) continue;
        for (long a = 1; a <= d - 1; ++a) {
            CatalecticantMatrix ca = catalecticant(p, a);
            CatalecticantMatrix cda = catalecticant(p, d - a);
            CHECK(ca.m.transposed() == cda.m);
            CHECK(rank_exact(ca.m) == rank_exact(cda.m));
        }
    }
}

TEST_CASE("flattening rank bounded by decomposition length") {
    std::mt19937_64 rng(808);
    for (int trial = 0; trial < 25; ++trial) {
        int n = 2 + static_cast<int>(rng() % 3);
        int r = 1 + static_cast<int>(rng() % 5);
        long d = 3 + static_cast<long>(rng() % 4);
        WaringDecomposition decomp = random_decomposition(rng, n, r);
        Form p = eval_decomposition(decomp, n, d);
        CHECK(rank_upper_from_decomposition(p, decomp, d));
        if (p.is_zero()) continue;
        for (const auto& [a, rank] : border_rank_lower_bound(p).ranks)
            CHECK(rank <= static_cast<std::size_t>(r));
    }
}

TEST_CASE("lower bound subadditivity") {
    std::mt19937_64 rng(909);
    for (int trial = 0; trial < 15; ++trial) {
        int n = 2;
        long d = 4 + static_cast<long>(rng() % 3);
        Form p = eval_decomposition(random_decomposition(rng, n, 2), n, d);
        Form q = eval_decomposition(random_decomposition(rng, n, 2), n, d);
        if (p.is_zero() || q.is_zero() || (p + q).is_zero()) continue;
        CHECK(border_rank_lower_bound(p + q).lower_bound <=
              border_rank_lower_bound(p).lower_bound + border_rank_lower_bound(q).lower_bound);
    }
}

TEST_CASE("lower bound invariant under change of variables") {
    std::mt19937_64 rng(616);
    for (int trial = 0; trial < 15; ++trial) {
        int n = 2 + static_cast<int>(rng() % 2);
        long d = 3 + static_cast<long>(rng() % 3);
        Form p = eval_decomposition(random_decomposition(rng, n, 3), n, d);
        if (p.is_zero()) continue;
        RatMatrix m = random_unimodular(rng, n);
        Form q = change_of_variables(p, m);
        CHECK(border_rank_lower_bound(p).lower_bound == border_rank_lower_bound(q).lower_bound);
    }
}

TEST_CASE("decomposition verification examples") {
    CHECK(rank_upper_from_decomposition(parse_form("x0^2 + x1^2"),
                                        {{Rat(1), pt({1, 0})}, {Rat(1), pt({0, 1})}}, 2));
    // (1/4)(x0+x1)^2 - (1/4)(x0-x1)^2 = x0 x1
    CHECK(rank_upper_from_decomposition(
        parse_form("x0*x1"), {{make_rat(1, 4), pt({1, 1})}, {make_rat(-1, 4), pt({1, -1})}}, 2));
    CHECK_FALSE(rank_upper_from_decomposition(parse_form("x0^3", 2), {{Rat(1), pt({0, 1})}}, 3));
}
