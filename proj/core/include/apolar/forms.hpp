#ifndef APOLAR_FORMS_HPP
#define APOLAR_FORMS_HPP

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "apolar/matrix.hpp"
#include "apolar/monomial.hpp"
#include "apolar/rational.hpp"

namespace apolar {

/// Hard limit on the number of variables accepted anywhere (x0..x9).
inline constexpr int kMaxVariables = 10;

/// Point of projective space, stored with the first nonzero coordinate
/// scaled to 1 so equality of points is plain coordinate equality.
class ProjPoint {
public:
    ProjPoint() = default;  // unset placeholder, no coordinates
    explicit ProjPoint(std::vector<Rat> coords);
    static ProjPoint unit(int nvars, int axis);

    int nvars() const { return static_cast<int>(c_.size()); }
    const Rat& coord(int i) const { return c_[static_cast<std::size_t>(i)]; }
    const std::vector<Rat>& coords() const { return c_; }
    int pivot() const;  // index of the first nonzero (=1) coordinate

    bool operator==(const ProjPoint& o) const { return c_ == o.c_; }
    bool operator!=(const ProjPoint& o) const { return c_ != o.c_; }
    bool operator<(const ProjPoint& o) const;  // arbitrary total order

    std::string to_string() const;

private:
    std::vector<Rat> c_;
};

/// Homogeneous form of degree d in x0..xn. Coefficients are stored in
/// divided-power coordinates: p = sum over alpha of binom(d,alpha) *
/// b_alpha * x^alpha, with no explicit zeros. Under this convention the
/// catalecticant entries are plain coefficient lookups.
class Form {
public:
    using CoeffMap = std::map<Monomial, Rat, GradedLexBefore>;

    Form() = default;  // unset placeholder (0 variables)
    Form(int nvars, long degree);

    int nvars() const { return nvars_; }
    long degree() const { return degree_; }
    bool is_zero() const { return b_.empty(); }
    std::size_t term_count() const { return b_.size(); }

    const CoeffMap& terms() const { return b_; }
    Rat b(const Monomial& m) const;
    Rat monomial_coeff(const Monomial& m) const;

    void add_b(const Monomial& m, const Rat& v);
    void add_monomial_coeff(const Monomial& m, const Rat& v);

    Form operator+(const Form& o) const;
    Form operator-(const Form& o) const;
    Form operator*(const Rat& s) const;
    bool operator==(const Form& o) const;
    bool operator!=(const Form& o) const { return !(*this == o); }

private:
    int nvars_ = 0;
    long degree_ = 0;
    CoeffMap b_;
};

/// Product of forms, multiplying monomial coefficients.
Form multiply(const Form& f, const Form& g);

/// The linear form with the given coordinates.
Form linear_form(const std::vector<Rat>& coeffs);
Form linear_form(const ProjPoint& v);

/// v^d, the image of v under the degree-d Veronese map: b_alpha is the
/// coordinate product v^alpha.
Form power_of_point(const ProjPoint& v, long d);

/// x^{d-1} * l_y, the tangent direction form at x^d toward y. The tangent
/// is reduced modulo x and renormalized first, so the result depends only
/// on the class of y modulo x. Throws ProportionalPoints.
Form tangent_power(const ProjPoint& x, const ProjPoint& y, long d);

/// Canonical representative of y modulo x: the component of y along x's
/// pivot coordinate is removed, then the first nonzero entry is scaled
/// to 1. Throws ProportionalPoints when y is proportional to x.
ProjPoint reduce_tangent(const ProjPoint& x, const ProjPoint& y);

/// Contraction of p by the dual form q (apolarity action): the result has
/// b'_gamma = sum over beta of c_beta(q) * b_{beta+gamma}(p), where c are
/// q's monomial coefficients. This is the flattening C_a(p) applied to q,
/// up to the positive scaling d!/(d-a)!.
Form apply_diff(const Form& q_dual, const Form& p);

/// Substitute x_i -> row i of m (an (n+1)x(n+1) change of variables).
Form change_of_variables(const Form& p, const RatMatrix& m);

/// If p lies in S^d(span{w0, w1}) returns the binary form q with
/// p = q(l_{w0}, l_{w1}); otherwise nullopt. Decided exactly by solving
/// against the basis l_{w0}^{d-i} l_{w1}^i. Throws DependentBasis.
std::optional<Form> restrict_to_plane(const Form& p, const ProjPoint& w0, const ProjPoint& w1);

/// Parser for the form grammar (see README). Accepts monomial
/// coefficients and converts to divided powers. When nvars is given the
/// form is embedded in that many variables; otherwise the count is
/// inferred from the largest index present.
Form parse_form(std::string_view text, std::optional<int> nvars = std::nullopt);

/// Canonical text: graded-lex descending monomials, monomial coefficients,
/// no '+' before the first term. parse_form(format_form(f)) == f.
std::string format_form(const Form& f);

/// Dense vector of divided-power coefficients over the full degree basis.
std::vector<Rat> dense_coords(const Form& f, const MonomialBasis& basis);

/// Columns are the dense coordinates of the given forms.
RatMatrix forms_as_columns(const std::vector<Form>& forms, const MonomialBasis& basis);

} // namespace apolar

#endif
