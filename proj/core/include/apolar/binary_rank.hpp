#ifndef APOLAR_BINARY_RANK_HPP
#define APOLAR_BINARY_RANK_HPP

#include <variant>
#include <vector>

#include "apolar/catalecticant.hpp"
#include "apolar/forms.hpp"
#include "apolar/scheme.hpp"
#include "apolar/unipoly.hpp"

namespace apolar {

/// Exact rank certificate for a binary form, via the apolarity / Sylvester
/// method. border_rank is the least a with ker C_a(p) != 0; the generator
/// is a minimal-degree element of the apolar ideal, stored dehomogenized
/// (g(t) = G(1, t)) together with the multiplicity of the point at
/// infinity [0:1], which is border_rank - deg g. Rank follows the
/// Comas-Seguir dichotomy: border_rank when G is squarefree, otherwise
/// d + 2 - border_rank.
struct BinaryRankCertificate {
    long d = 0;
    long border_rank = 0;
    UniPoly apolar_generator;   // dehomogenized, monomial coefficients
    bool infinity_root = false; // [0:1] is a root of the homogeneous generator
    bool squarefree = false;    // of the homogeneous generator
    long rank = 0;
};

/// Requires a nonzero form in two variables (ZeroForm, WrongVariableCount).
BinaryRankCertificate binary_rank(const Form& p);

/// Waring decomposition extracted from distinct rational roots.
/// Entries are sorted: finite roots ascending, then the point at infinity.
struct SchemeDecomposition {
    PointedScheme scheme;
    std::vector<Rat> coefficients;  // against scheme_span_matrix columns
};

/// Returned when the generator has an irrational root, or a rational root
/// of multiplicity > 2; carries the generator as the certificate.
struct IrrationalRoots {
    UniPoly generator;
    bool infinity_root = false;
};

using BinaryDecomposition = std::variant<WaringDecomposition, SchemeDecomposition, IrrationalRoots>;

/// Decomposition of p from its certificate. Distinct rational roots give
/// the Waring decomposition; a repeated (multiplicity 2) rational root
/// gives the degree-2 scheme with span coefficients. Throws
/// CertificateMismatch when cert was not produced from p.
BinaryDecomposition binary_decompose(const BinaryRankCertificate& cert, const Form& p);

} // namespace apolar

#endif
