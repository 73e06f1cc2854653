#ifndef APOLAR_COUNTEREXAMPLES_HPP
#define APOLAR_COUNTEREXAMPLES_HPP

#include <string>
#include <variant>
#include <vector>

#include "apolar/forms.hpp"
#include "apolar/scheme.hpp"
#include "apolar/uniqueness.hpp"
#include "apolar/unipoly.hpp"

namespace apolar {

/// Cone over k >= 2 points: the union of the lines through the vertex
/// (default e0 in P^3) with the given directions in the hyperplane x0 = 0.
/// general_position means every 3 directions are linearly independent,
/// which makes the tangent star at the vertex a union of exactly
/// binom(k,2) planes.
struct LineUnionCurve {
    ProjPoint vertex;
    std::vector<ProjPoint> directions;  // 4 coordinates, first = 0
    bool general_position = false;

    int k() const { return static_cast<int>(directions.size()); }
};

/// k = 3 gives the coordinate axes e1, e2, e3; k >= 4 appends moment-curve
/// directions (0, 1, t, t^2) at t = 1, 2, ..., whose triple independence
/// is a Vandermonde determinant. Requires 2 <= k <= 12.
LineUnionCurve coordinate_axes_curve(int k);

/// Tangent star at the vertex: for each pair of directions the plane they
/// span, as a linear form in the direction variables (cross-product
/// coordinates scaled to a primitive integer vector, first nonzero
/// positive), and the exact product of all binom(k,2) plane forms.
struct TangentStar {
    std::vector<Form> planes;  // forms in 4 variables, x0 absent
    Form product_form;
};

TangentStar tangent_star(const LineUnionCurve& c);

/// True iff the direction lies on some pair-plane, i.e. the product form
/// vanishes at it. A nonzero x0 component is projected away from the
/// vertex first.
bool star_membership(const TangentStar& ts, const ProjPoint& direction);

/// The witness z = x0^{d-1}(x0 + l_m) with m the sum of the direction
/// forms, replaced by deterministic moment-curve perturbations of m until
/// m avoids the tangent star. Throws NoGenericDirection after 100
/// fallbacks. Requires d >= 3.
struct WitnessPoint {
    Form form;
    ProjPoint direction;     // the direction used (reduced, x0 = 0)
    int fallbacks_used = 0;
};

WitnessPoint witness_point(const LineUnionCurve& c, long d);

/// Full verification that the witness lies in sigma_2 of the ambient
/// Veronese but not in sigma_2 of the re-embedded curve: constructive
/// membership via the recovered degree-2 scheme (unique since
/// d >= 3 = 2*2 - 1), failure of star membership for the recovered
/// tangent, and the binom(k,2) lower bound on defining-equation degrees.
struct CounterexampleReport {
    int k = 0;
    long d = 0;
    Form witness;
    PointedScheme scheme;                // the unique degree-2 scheme
    std::vector<Rat> span_coefficients;  // z against the scheme span
    ProjPoint tangent_direction;
    bool tangent_in_curve_tangent_space = false;  // direction in span of the k directions
    bool tangent_in_star = false;                 // must be false
    bool in_sigma2_ambient = false;
    bool in_sigma2_curve = false;
    long equation_degree_bound = 0;  // binom(k,2)
    bool conclusion_holds = false;
    std::string conclusion;
};

CounterexampleReport verify_counterexample(const LineUnionCurve& c, long d);

/// Common projective zeros of two conics in 3 variables, found by
/// eliminating the first variable with a resultant on the chart x2 = 1
/// plus the line at infinity. Multiplicities come from the resultant root
/// when a fiber carries a single point, otherwise from the fiber gcd.
struct ConicSolution {
    std::vector<std::pair<ProjPoint, int>> points;  // point, multiplicity
    int total_multiplicity() const;
};

struct IrrationalSolutions {
    UniPoly witness;  // the polynomial whose roots left Q
};

struct NotFinite {};

using ConicPairResult = std::variant<ConicSolution, IrrationalSolutions, NotFinite>;

ConicPairResult solve_conic_pair(const Form& q1, const Form& q2);

/// The complete-intersection pipeline: the tangent cone of the fixed pair
/// of cubic lowest-degree parts x1x2 - x2x3 and x1x3 - x2x3 is solved to
/// its four lines, and the tangent star of that 4-line cone is computed.
/// Its single degree-6 equation forces the defining equations of the
/// re-embedded secant variety above degree 5. The genericity of the
/// higher-degree parts of the cubics is not verified here; the pipeline
/// starts from the lowest-degree parts.
struct CiCubicsReport {
    Form conic1;  // 3-variable forms in the direction coordinates
    Form conic2;
    ConicSolution cone_points;
    LineUnionCurve curve;
    TangentStar star;
    long star_equation_degree = 0;   // expected 6
    long not_definable_up_to = 0;    // expected 5
    bool checks_hold = false;
};

CiCubicsReport ci_cubics_pipeline();

} // namespace apolar

#endif
