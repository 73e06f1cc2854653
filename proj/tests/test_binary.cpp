#include <doctest.h>

#include <random>

#include "apolar/binary_rank.hpp"
#include "apolar/errors.hpp"
#include "apolar/uniqueness.hpp"

using namespace apolar;

namespace {

ProjPoint pt(std::initializer_list<long> cs) {
    std::vector<Rat> v;
    for (long c : cs) v.emplace_back(c);
    return ProjPoint(std::move(v));
}

// brute-force search for a two-term integer decomposition with small
// entries; independent route to rank <= 2
bool has_two_term_decomposition(const Form& p, long d) {
    for (long a0 = -2; a0 <= 2; ++a0)
        for (long a1 = -2; a1 <= 2; ++a1) {
            if (a0 == 0 && a1 == 0) continue;
            for (long b0 = -2; b0 <= 2; ++b0)
                for (long b1 = -2; b1 <= 2; ++b1) {
                    if (b0 == 0 && b1 == 0) continue;
                    if (a0 * b1 - a1 * b0 == 0) continue;
                    ProjPoint u = pt({a0, a1});
                    ProjPoint v = pt({b0, b1});
                    MonomialBasis basis(2, d);
                    auto sol = solve_exact(
                        forms_as_columns({power_of_point(u, d), power_of_point(v, d)}, basis),
                        dense_coords(p, basis));
                    if (sol) return true;
                }
        }
    return false;
}

}  // namespace

TEST_CASE("binary rank certificates for the named examples") {
    // x0^3 x1 has rank 4 with border rank 2
    BinaryRankCertificate c1 = binary_rank(parse_form("x0^3*x1"));
    CHECK(c1.border_rank == 2);
    CHECK(c1.rank == 4);
    CHECK_FALSE(c1.squarefree);

    BinaryRankCertificate c2 = binary_rank(parse_form("x0^6", 2));
    CHECK(c2.border_rank == 1);
    CHECK(c2.rank == 1);
    CHECK(c2.squarefree);

    Form cubes = parse_form("x0^3 + x1^3");
    BinaryRankCertificate c3 = binary_rank(cubes);
    CHECK(c3.border_rank == 2);
    CHECK(c3.rank == 2);
    CHECK(c3.squarefree);
    CHECK(has_two_term_decomposition(cubes, 3));

    CHECK_THROWS_AS(binary_rank(Form(2, 3)), Error);
    CHECK_THROWS_AS(binary_rank(parse_form("x0*x1*x2")), Error);
}

TEST_CASE("binary decomposition: distinct rational roots") {
    Form p = parse_form("x0^3 + x1^3");
    auto dec = binary_decompose(binary_rank(p), p);
    REQUIRE(std::holds_alternative<WaringDecomposition>(dec));
    auto wd = std::get<WaringDecomposition>(dec);
    REQUIRE(wd.size() == 2);
    CHECK(rank_upper_from_decomposition(p, wd, 3));
    // support {e0, e1}
    bool has_e0 = false, has_e1 = false;
    for (const auto& [c, v] : wd) {
        if (v == pt({1, 0})) has_e0 = true;
        if (v == pt({0, 1})) has_e1 = true;
    }
    CHECK(has_e0);
    CHECK(has_e1);
}

TEST_CASE("binary decomposition: double point scheme") {
    Form p = parse_form("x0^3*x1");
    BinaryRankCertificate cert = binary_rank(p);
    // kernel of C_2 is spanned by X1^2
    CHECK(cert.apolar_generator == UniPoly(std::vector<Rat>{Rat(0), Rat(0), Rat(1)}));
    auto dec = binary_decompose(cert, p);
    REQUIRE(std::holds_alternative<SchemeDecomposition>(dec));
    const auto& sd = std::get<SchemeDecomposition>(dec);
    REQUIRE(sd.scheme.point_count() == 1);
    CHECK(sd.scheme.entries()[0].point == pt({1, 0}));
    REQUIRE(sd.scheme.entries()[0].tangent.has_value());
    CHECK(*sd.scheme.entries()[0].tangent == pt({0, 1}));
    // re-sum: coefficients against {x0^4, x0^3 x1}
    auto m = scheme_span_matrix(sd.scheme, 4, 2);
    auto px = matvec(m, sd.coefficients);
    CHECK(px == dense_coords(p, MonomialBasis(2, 4)));
}

TEST_CASE("binary decomposition: irrational roots certificate") {
    // (x0 + sqrt2 x1)^3 + (x0 - sqrt2 x1)^3 = 2 x0^3 + 12 x0 x1^2
    Form p = parse_form("2*x0^3 + 12*x0*x1^2");
    BinaryRankCertificate cert = binary_rank(p);
    CHECK(cert.border_rank == 2);
    CHECK(cert.squarefree);
    CHECK(cert.rank == 2);
    auto dec = binary_decompose(cert, p);
    REQUIRE(std::holds_alternative<IrrationalRoots>(dec));
    // generator proportional to t^2 - 2
    UniPoly g = std::get<IrrationalRoots>(dec).generator;
    UniPoly expected(std::vector<Rat>{Rat(-2), Rat(0), Rat(1)});
    CHECK(g.monic() == expected);
}

TEST_CASE("point at infinity handled by flag") {
    Form p = parse_form("x1^4", 2);
    BinaryRankCertificate cert = binary_rank(p);
    CHECK(cert.border_rank == 1);
    CHECK(cert.infinity_root);
    auto dec = binary_decompose(cert, p);
    REQUIRE(std::holds_alternative<WaringDecomposition>(dec));
    auto wd = std::get<WaringDecomposition>(dec);
    REQUIRE(wd.size() == 1);
    CHECK(wd[0].second == pt({0, 1}));
    CHECK(wd[0].first == 1);
}

TEST_CASE("certificate mismatch is rejected") {
    BinaryRankCertificate cert = binary_rank(parse_form("x0^3*x1"));
    CHECK_THROWS_AS(binary_decompose(cert, parse_form("x0^4", 2)), Error);
}

TEST_CASE("border rank agrees with the flattening profile") {
    std::mt19937_64 rng(1212);
    std::uniform_int_distribution<long> c(-3, 3);
    for (int trial = 0; trial < 150; ++trial) {
        long d = 2 + static_cast<long>(rng() % 6);
        Form p(2, d);
        for (long j = 0; j <= d; ++j)
            p.add_monomial_coeff(Monomial({static_cast<int>(d - j), static_cast<int>(j)}),
                                 Rat(c(rng)));
        if (p.is_zero()) continue;
        CHECK(binary_rank(p).border_rank ==
              static_cast<long>(border_rank_lower_bound(p).lower_bound));
    }
}

TEST_CASE("rank invariant under unimodular change of variables") {
    std::mt19937_64 rng(343);
    std::uniform_int_distribution<long> c(-2, 2);
    for (int trial = 0; trial < 40; ++trial) {
        long d = 3 + static_cast<long>(rng() % 4);
        Form p(2, d);
        for (long j = 0; j <= d; ++j)
            p.add_monomial_coeff(Monomial({static_cast<int>(d - j), static_cast<int>(j)}),
                                 Rat(c(rng)));
        if (p.is_zero()) continue;
        RatMatrix m = RatMatrix::identity(2);
        m.at(0, 1) = Rat(c(rng));
        m.at(1, 0) = Rat(0);
        RatMatrix m2 = RatMatrix::from_rows({{1, 0}, {1, 1}});
        Form q = change_of_variables(change_of_variables(p, m), m2);
        BinaryRankCertificate cp = binary_rank(p), cq = binary_rank(q);
        CHECK(cp.rank == cq.rank);
        CHECK(cp.border_rank == cq.border_rank);
    }
}

TEST_CASE("decompositions re-sum to the form") {
    std::mt19937_64 rng(5150);
    std::uniform_int_distribution<long> c(-2, 2);
    for (int trial = 0; trial < 120; ++trial) {
        long d = 2 + static_cast<long>(rng() % 5);
        Form p(2, d);
        for (long j = 0; j <= d; ++j)
            p.add_monomial_coeff(Monomial({static_cast<int>(d - j), static_cast<int>(j)}),
                                 Rat(c(rng)));
        if (p.is_zero()) continue;
        auto dec = binary_decompose(binary_rank(p), p);
        if (std::holds_alternative<WaringDecomposition>(dec)) {
            CHECK(rank_upper_from_decomposition(p, std::get<WaringDecomposition>(dec), d));
        } else if (std::holds_alternative<SchemeDecomposition>(dec)) {
            const auto& sd = std::get<SchemeDecomposition>(dec);
            auto m = scheme_span_matrix(sd.scheme, d, 2);
            CHECK(matvec(m, sd.coefficients) == dense_coords(p, MonomialBasis(2, d)));
        }
    }
}
