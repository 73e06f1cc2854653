#ifndef APOLAR_TENSOR3_HPP
#define APOLAR_TENSOR3_HPP

#include <array>
#include <cstddef>
#include <map>
#include <vector>

#include "apolar/rational.hpp"
#include "apolar/unipoly.hpp"

namespace apolar {

/// Dense order-3 tensor over a commutative ring scalar (Rat for plain
/// tensors, UniPoly in the degeneration parameter t for families).
template <class S>
struct Tensor3T {
    std::array<std::size_t, 3> dims{0, 0, 0};
    std::vector<S> a;

    Tensor3T() = default;
    Tensor3T(std::size_t na, std::size_t nb, std::size_t nc)
        : dims{na, nb, nc}, a(na * nb * nc) {}

    S& at(std::size_t i, std::size_t j, std::size_t k) {
        return a[(i * dims[1] + j) * dims[2] + k];
    }
    const S& at(std::size_t i, std::size_t j, std::size_t k) const {
        return a[(i * dims[1] + j) * dims[2] + k];
    }

    bool is_zero() const {
        for (const S& v : a)
            if (!(v == S())) return false;
        return true;
    }

    bool operator==(const Tensor3T& o) const { return dims == o.dims && a == o.a; }

    Tensor3T operator+(const Tensor3T& o) const;
    Tensor3T operator-(const Tensor3T& o) const;
};

using Tensor3 = Tensor3T<Rat>;
using PolyTensor3 = Tensor3T<UniPoly>;

/// Sum of outer products u x v x w; evaluating gives the tensor an
/// expression represents, with the term count certifying a rank bound.
template <class S>
struct RankExpressionT {
    struct Term {
        std::vector<S> u, v, w;
    };
    std::array<std::size_t, 3> dims{0, 0, 0};
    std::vector<Term> terms;
};

using RankExpression = RankExpressionT<Rat>;
using PolyRankExpression = RankExpressionT<UniPoly>;

template <class S>
Tensor3T<S> eval_expression(const RankExpressionT<S>& e);

/// The matrix multiplication tensor M_{s,t,u}, dims (st, tu, us), with
/// entry 1 exactly on the matched triples a_{ij} b_{jk} c_{ki}.
Tensor3 matmul_tensor(long s, long t, long u);

/// Block-diagonal direct sum: dims add per mode.
template <class S>
Tensor3T<S> direct_sum(const Tensor3T<S>& t1, const Tensor3T<S>& t2);

/// Exact coefficient extraction per power of t; every degree from 0 to
/// the maximum appears (zero tensors included).
std::map<long, Tensor3> expand_family(const PolyTensor3& pt);

/// The el + 1 term degeneration of M_{e,1,l} + M_{1,h,1}, h = (e-1)(l-1):
///   sum_{i,s} (a_i + t A_{is}) x (b_s + t B_{is}) x (gamma + t^2 c_{si})
///     - (sum a_i) x (sum b_s) x gamma
/// with the first-order arrays arranged so every column of A sums to zero
/// with its last column zero, and every row of B sums to zero with its
/// last row zero; those are exactly the conditions that cancel the t
/// coefficient, and the t^2 coefficient is the target tensor. The t^3
/// coefficient is generally nonzero; the expansion reports whatever
/// degrees actually appear.
struct SchoenhageFamily {
    long e = 0, l = 0, h = 0;
    PolyRankExpression expr;
    std::map<long, Tensor3> expansion;
};

/// Requires e, l >= 2 (InvalidParameter).
SchoenhageFamily schoenhage_family(long e, long l);

/// Fixture for the border-rank-5 approximate multiplication of 2x2
/// matrices with a zero (2,2) slot in the first factor: five Segre points
/// x1..x5 in C^2 x C^2 x C^2 and the first-order directions x1'..x4' in
/// the matrix-multiplication space C^4 x C^4 x C^4.
struct BiniData {
    std::vector<Tensor3> x;              // x1..x5, dims (2,2,2)
    std::vector<Tensor3> xprime;         // x1'..x4', dims (4,4,4)
    Tensor3 partial_matmul;              // matched triples excluding a^2_2
};

BiniData bini_fixture();

struct BiniReport {
    bool relation_holds = false;        // x5 = -x1 - x2 + x3 + x4
    std::size_t span_dimension = 0;     // of x1..x4 (expected 4, a P^3)
    bool x5_in_span = false;
    bool x5_outside_every_triple = false;
    bool partial_matmul_matches = false;  // x1'+x2'+x3'+x4'
    bool all_hold = false;
};

BiniReport bini_check();
BiniReport bini_check(const BiniData& data);

} // namespace apolar

#endif
