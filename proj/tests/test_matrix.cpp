#include <doctest.h>

#include <random>

#include "apolar/matrix.hpp"

using namespace apolar;

namespace {

RatMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
    std::uniform_int_distribution<int> num(-4, 4);
    std::uniform_int_distribution<int> den(1, 3);
    RatMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = make_rat(num(rng), den(rng));
    return m;
}

}  // namespace

TEST_CASE("rank of simple matrices") {
    CHECK(rank_exact(RatMatrix::identity(3)) == 3);
    CHECK(rank_exact(RatMatrix(2, 2)) == 0);
    CHECK(rank_exact(RatMatrix::from_rows({{1, 2}, {2, 4}})) == 1);
}

TEST_CASE("kernel basis in reduced form") {
    CHECK(kernel_basis(RatMatrix::identity(2)).empty());

    auto k1 = kernel_basis(RatMatrix::from_rows({{1, 1}}));
    REQUIRE(k1.size() == 1);
    CHECK(k1[0] == std::vector<Rat>{Rat(1), Rat(-1)});

    auto k2 = kernel_basis(RatMatrix::from_rows({{1, 0, 0}, {0, 1, 0}}));
    REQUIRE(k2.size() == 1);
    CHECK(k2[0] == std::vector<Rat>{Rat(0), Rat(0), Rat(1)});
}

TEST_CASE("rank properties on random matrices") {
    std::mt19937_64 rng(12345);
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t rows = 1 + rng() % 6, cols = 1 + rng() % 6;
        RatMatrix m = random_matrix(rng, rows, cols);

        std::size_t r = rank_exact(m);
        CHECK(r == rank_exact(m.transposed()));

        auto kb = kernel_basis(m);
        CHECK(cols == r + kb.size());
        for (const auto& v : kb) {
            auto mv = matvec(m, v);
            for (const Rat& q : mv) CHECK(q == 0);
        }
    }
}

TEST_CASE("determinant agrees with cofactor on small matrices") {
    CHECK(determinant(RatMatrix::from_rows({{2, 1}, {1, 2}})) == 3);
    CHECK(determinant(RatMatrix::from_rows({{1, 2}, {2, 4}})) == 0);
    RatMatrix m = RatMatrix::from_rows({{0, 1, 2}, {3, 0, 4}, {5, 6, 0}});
    // 0*(0-24) - 1*(0-20) + 2*(18-0)
    CHECK(determinant(m) == 56);
    RatMatrix half(2, 2);
    half.at(0, 0) = make_rat(1, 2);
    half.at(1, 1) = make_rat(1, 3);
    CHECK(determinant(half) == make_rat(1, 6));
}

TEST_CASE("solve_exact reports inconsistency and unique solutions") {
    RatMatrix a = RatMatrix::from_rows({{1, 0}, {0, 1}, {1, 1}});
    auto sol = solve_exact(a, {Rat(2), Rat(3), Rat(5)});
    REQUIRE(sol.has_value());
    CHECK((*sol)[0] == 2);
    CHECK((*sol)[1] == 3);
    CHECK_FALSE(solve_exact(a, {Rat(2), Rat(3), Rat(6)}).has_value());
}
