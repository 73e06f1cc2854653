#include "apolar/forms.hpp"

#include <algorithm>
#include <sstream>

namespace apolar {

ProjPoint::ProjPoint(std::vector<Rat> coords) : c_(std::move(coords)) {
    require_user(!c_.empty() && static_cast<int>(c_.size()) <= kMaxVariables,
                 "TooManyVariables", "point must have between 1 and 10 coordinates");
    std::size_t p = 0;
    while (p < c_.size() && c_[p] == 0) ++p;
    require_user(p < c_.size(), "ZeroPoint", "projective point with all coordinates zero");
    Rat inv = Rat(1) / c_[p];
    for (std::size_t i = p; i < c_.size(); ++i) c_[i] *= inv;
}

ProjPoint ProjPoint::unit(int nvars, int axis) {
    std::vector<Rat> v(static_cast<std::size_t>(nvars));
    v[static_cast<std::size_t>(axis)] = 1;
    return ProjPoint(std::move(v));
}

int ProjPoint::pivot() const {
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != 0) return static_cast<int>(i);
    return -1;
}

bool ProjPoint::operator<(const ProjPoint& o) const {
    if (c_.size() != o.c_.size()) return c_.size() < o.c_.size();
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != o.c_[i]) return c_[i] < o.c_[i];
    return false;
}

std::string ProjPoint::to_string() const {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (i) os << ",";
        os << rat_to_string(c_[i]);
    }
    os << ")";
    return os.str();
}

Form::Form(int nvars, long degree) : nvars_(nvars), degree_(degree) {
    require_user(nvars >= 1 && nvars <= kMaxVariables, "TooManyVariables",
                 "forms support 1 to 10 variables");
    require_user(degree >= 0, "DegreeOutOfRange", "negative degree");
}

Rat Form::b(const Monomial& m) const {
    auto it = b_.find(m);
    return it == b_.end() ? Rat(0) : it->second;
}

Rat Form::monomial_coeff(const Monomial& m) const { return b(m) * Rat(multinomial(m.exponents())); }

void Form::add_b(const Monomial& m, const Rat& v) {
    require_internal(m.nvars() == nvars_ && m.degree() == degree_, "term outside the form's degree");
    if (v == 0) return;
    auto [it, inserted] = b_.emplace(m, v);
    if (!inserted) {
        it->second += v;
        if (it->second == 0) b_.erase(it);
    }
}

void Form::add_monomial_coeff(const Monomial& m, const Rat& v) {
    add_b(m, v / Rat(multinomial(m.exponents())));
}

Form Form::operator+(const Form& o) const {
    require_internal(nvars_ == o.nvars_ && degree_ == o.degree_, "form shape mismatch in +");
    Form r = *this;
    for (const auto& [m, v] : o.b_) r.add_b(m, v);
    return r;
}

Form Form::operator-(const Form& o) const {
    require_internal(nvars_ == o.nvars_ && degree_ == o.degree_, "form shape mismatch in -");
    Form r = *this;
    for (const auto& [m, v] : o.b_) r.add_b(m, -v);
    return r;
}

Form Form::operator*(const Rat& s) const {
    Form r(nvars_, degree_);
    if (s == 0) return r;
    for (const auto& [m, v] : b_) r.b_.emplace(m, v * s);
    return r;
}

bool Form::operator==(const Form& o) const {
    return nvars_ == o.nvars_ && degree_ == o.degree_ && b_ == o.b_;
}

Form multiply(const Form& f, const Form& g) {
    require_internal(f.nvars() == g.nvars(), "variable count mismatch in product");
    Form r(f.nvars(), f.degree() + g.degree());
    for (const auto& [mf, bf] : f.terms()) {
        Rat cf = bf * Rat(multinomial(mf.exponents()));
        for (const auto& [mg, bg] : g.terms()) {
            Rat cg = bg * Rat(multinomial(mg.exponents()));
            r.add_monomial_coeff(mf * mg, cf * cg);
        }
    }
    return r;
}

Form linear_form(const std::vector<Rat>& coeffs) {
    Form r(static_cast<int>(coeffs.size()), 1);
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i] == 0) continue;
        std::vector<int> e(coeffs.size());
        e[i] = 1;
        r.add_b(Monomial(std::move(e)), coeffs[i]);
    }
    return r;
}

Form linear_form(const ProjPoint& v) { return linear_form(v.coords()); }

Form power_of_point(const ProjPoint& v, long d) {
    require_user(d >= 1, "DegreeOutOfRange", "power_of_point needs d >= 1");
    Form r(v.nvars(), d);
    for (const Monomial& m : Monomial::degree_basis(v.nvars(), d)) {
        Rat b = 1;
        bool zero = false;
        for (int i = 0; i < v.nvars() && !zero; ++i) {
            for (int k = 0; k < m[i]; ++k) b *= v.coord(i);
            if (b == 0) zero = true;
        }
        if (!zero) r.add_b(m, b);
    }
    return r;
}

ProjPoint reduce_tangent(const ProjPoint& x, const ProjPoint& y) {
    require_user(x.nvars() == y.nvars(), "DegreeMismatch", "points in different spaces");
    int p = x.pivot();
    std::vector<Rat> v(y.coords());
    Rat f = y.coord(p);  // x.coord(p) == 1 after normalization
    for (int i = 0; i < x.nvars(); ++i) v[static_cast<std::size_t>(i)] -= f * x.coord(i);
    bool all_zero = true;
    for (const Rat& q : v)
        if (q != 0) all_zero = false;
    require_user(!all_zero, "ProportionalPoints", "tangent direction proportional to the point");
    return ProjPoint(std::move(v));
}

Form tangent_power(const ProjPoint& x, const ProjPoint& y, long d) {
    require_user(d >= 2, "DegreeOutOfRange", "tangent_power needs d >= 2");
    ProjPoint t = reduce_tangent(x, y);
    return multiply(power_of_point(x, d - 1), linear_form(t));
}

Form apply_diff(const Form& q_dual, const Form& p) {
    require_user(q_dual.nvars() == p.nvars(), "DegreeMismatch", "variable count mismatch");
    require_user(q_dual.degree() <= p.degree(), "DegreeMismatch",
                 "contraction degree exceeds the form degree");
    Form r(p.nvars(), p.degree() - q_dual.degree());
    for (const auto& [alpha, bp] : p.terms()) {
        for (const auto& [beta, bq] : q_dual.terms()) {
            if (!beta.divides(alpha)) continue;
            Rat cq = bq * Rat(multinomial(beta.exponents()));
            r.add_b(beta.quotient_of(alpha), cq * bp);
        }
    }
    return r;
}

Form change_of_variables(const Form& p, const RatMatrix& m) {
    const int n = p.nvars();
    require_user(m.rows() == static_cast<std::size_t>(n) && m.cols() == static_cast<std::size_t>(n),
                 "DegreeMismatch", "substitution matrix shape mismatch");
    std::vector<Form> rows;
    rows.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        std::vector<Rat> coeffs(static_cast<std::size_t>(n));
        for (int j = 0; j < n; ++j) coeffs[static_cast<std::size_t>(j)] = m.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
        rows.push_back(linear_form(coeffs));
    }
    Form result(n, p.degree());
    for (const auto& [alpha, b] : p.terms()) {
        Rat c = b * Rat(multinomial(alpha.exponents()));
        Form term(n, 0);
        term.add_b(Monomial(std::vector<int>(static_cast<std::size_t>(n))), Rat(1));
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < alpha[i]; ++k) term = multiply(term, rows[static_cast<std::size_t>(i)]);
        result = result + term * c;
    }
    return result;
}

std::optional<Form> restrict_to_plane(const Form& p, const ProjPoint& w0, const ProjPoint& w1) {
    require_user(w0.nvars() == p.nvars() && w1.nvars() == p.nvars(), "DegreeMismatch",
                 "plane basis in the wrong space");
    require_user(w0 != w1, "DependentBasis", "plane basis points are proportional");
    const long d = p.degree();
    Form l0 = linear_form(w0), l1 = linear_form(w1);

    // columns l0^{d-i} * l1^i
    std::vector<Form> pow0(static_cast<std::size_t>(d) + 1, Form(p.nvars(), 0));
    std::vector<Form> pow1(static_cast<std::size_t>(d) + 1, Form(p.nvars(), 0));
    Form one(p.nvars(), 0);
    one.add_b(Monomial(std::vector<int>(static_cast<std::size_t>(p.nvars()))), Rat(1));
    pow0[0] = pow1[0] = one;
    for (long i = 1; i <= d; ++i) {
        pow0[static_cast<std::size_t>(i)] = multiply(pow0[static_cast<std::size_t>(i - 1)], l0);
        pow1[static_cast<std::size_t>(i)] = multiply(pow1[static_cast<std::size_t>(i - 1)], l1);
    }
    std::vector<Form> cols;
    for (long i = 0; i <= d; ++i)
        cols.push_back(multiply(pow0[static_cast<std::size_t>(d - i)], pow1[static_cast<std::size_t>(i)]));

    MonomialBasis basis(p.nvars(), d);
    RatMatrix a = forms_as_columns(cols, basis);
    auto sol = solve_exact(a, dense_coords(p, basis));
    if (!sol) return std::nullopt;

    Form q(2, d);
    for (long i = 0; i <= d; ++i)
        q.add_monomial_coeff(Monomial({static_cast<int>(d - i), static_cast<int>(i)}),
                             (*sol)[static_cast<std::size_t>(i)]);
    return q;
}

std::vector<Rat> dense_coords(const Form& f, const MonomialBasis& basis) {
    std::vector<Rat> v(basis.size());
    for (const auto& [m, b] : f.terms()) v[basis.index_of(m)] = b;
    return v;
}

RatMatrix forms_as_columns(const std::vector<Form>& forms, const MonomialBasis& basis) {
    RatMatrix m(basis.size(), forms.size());
    for (std::size_t j = 0; j < forms.size(); ++j) {
        for (const auto& [mono, b] : forms[j].terms()) m.at(basis.index_of(mono), j) = b;
    }
    return m;
}

} // namespace apolar
