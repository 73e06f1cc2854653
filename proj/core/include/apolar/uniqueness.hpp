#ifndef APOLAR_UNIQUENESS_HPP
#define APOLAR_UNIQUENESS_HPP

#include <optional>
#include <variant>
#include <vector>

#include "apolar/binary_rank.hpp"
#include "apolar/catalecticant.hpp"
#include "apolar/forms.hpp"
#include "apolar/matrix.hpp"
#include "apolar/scheme.hpp"

namespace apolar {

/// Matrix whose columns span <v_d(R)>: one column v^d per point and one
/// column x^{d-1} l_y per tangent, in entry order. For d >= deg(R) - 1
/// the columns are independent. Throws DegreeTooSmall.
RatMatrix scheme_span_matrix(const PointedScheme& r, long d, int nvars);

/// Exact solve of scheme_span_matrix * c = p; nullopt when p is not in
/// the span. Unique when in span. Throws DegreeTooSmall.
std::optional<std::vector<Rat>> span_membership(const Form& p, const PointedScheme& r, long d);

/// Columns spanning the intersection of the two column spans, computed
/// from the kernel of the stacked matrix [A | -B].
RatMatrix span_intersection_basis(const RatMatrix& a, const RatMatrix& b);

enum class CertStatus { certified, indeterminate };

/// Certificate that a supplied Waring expression is the unique minimal
/// one. Certified requires (i) exact re-summation, (ii) r <= (d+1)/2 and
/// (iii) flattening lower bound equal to r; then rank = border rank = r
/// and the expression is unique up to trivialities (reordering of the
/// summands and coefficient scaling under point renormalization; the
/// source theorem does not pin the phrase down further). A failed (ii) or
/// (iii) yields Indeterminate, never a non-uniqueness claim.
struct UniquenessCertificate {
    long d = 0;
    long r = 0;
    WaringDecomposition decomposition;
    BorderRankProfile border_rank_witness;
    CertStatus status = CertStatus::indeterminate;
};

/// Throws NotADecomposition when the expression does not re-sum to p,
/// RepeatedPoint / ZeroCoefficient on malformed input.
UniquenessCertificate certify_unique(const Form& p, const WaringDecomposition& decomp, long d);

struct NotBorderRankTwo {
    std::size_t partials_dimension = 0;
};

using Rank2Recovery = std::variant<PointedScheme, NotBorderRankTwo, IrrationalRoots>;

/// Recovers the unique degree <= 2 scheme R with p in <v_d(R)> when the
/// border rank is at most 2 (unique for d >= 3). The span W of the
/// (d-1)-th order partials of p is read off C_{d-1}(p); dim W = 1 gives a
/// single point, dim W = 2 restricts p to the plane W and runs the binary
/// algorithm, dim W >= 3 reports NotBorderRankTwo. Throws DegreeTooSmall
/// for d < 3 and ZeroForm on zero input.
Rank2Recovery recover_rank2_scheme(const Form& p, long d);

} // namespace apolar

#endif
