#ifndef APOLAR_CATALECTICANT_HPP
#define APOLAR_CATALECTICANT_HPP

#include <map>
#include <utility>
#include <vector>

#include "apolar/forms.hpp"
#include "apolar/matrix.hpp"

namespace apolar {

/// The symmetric flattening C_a(p): S^a V* -> S^{d-a} V as an explicit
/// matrix, rows indexed by degree-a monomials and columns by degree-(d-a)
/// monomials, both graded-lex. Entry (beta, gamma) is the divided-power
/// coefficient b_{beta+gamma} of p, so the matrix of C_{d-a} is the
/// transpose of the matrix of C_a. The rank lower-bounds the border rank.
struct CatalecticantMatrix {
    long a = 0;
    long d = 0;
    std::vector<Monomial> row_index;
    std::vector<Monomial> col_index;
    RatMatrix m;
};

/// Requires 1 <= a <= d-1 (DegreeOutOfRange otherwise).
CatalecticantMatrix catalecticant(const Form& p, long a);

namespace detail {
/// Same matrix for any 0 <= a <= d; the edge degrees are needed by the
/// binary Sylvester search.
CatalecticantMatrix catalecticant_unchecked(const Form& p, long a);
}  // namespace detail

/// Flattening ranks for a = 1..floor(d/2); larger a are redundant by
/// transpose symmetry. lower_bound is the max, a lower bound on border rank.
struct BorderRankProfile {
    std::map<long, std::size_t> ranks;
    std::size_t lower_bound = 0;
};

/// Requires d >= 2.
BorderRankProfile border_rank_lower_bound(const Form& p);

using WaringDecomposition = std::vector<std::pair<Rat, ProjPoint>>;

/// Exact check that sum lambda_i v_i^d reproduces p.
bool rank_upper_from_decomposition(const Form& p, const WaringDecomposition& decomp, long d);

} // namespace apolar

#endif
