#include "apolar/counterexamples.hpp"

#include <algorithm>
#include <sstream>

#include "apolar/matrix.hpp"

namespace apolar {

namespace {

// direction (0, u1, u2, u3) -> (u1, u2, u3)
std::vector<Rat> direction3(const ProjPoint& p) {
    return {p.coord(1), p.coord(2), p.coord(3)};
}

ProjPoint direction4(const Rat& u1, const Rat& u2, const Rat& u3) {
    return ProjPoint({Rat(0), u1, u2, u3});
}

Rat det3(const std::vector<Rat>& a, const std::vector<Rat>& b, const std::vector<Rat>& c) {
    return a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) +
           a[2] * (b[0] * c[1] - b[1] * c[0]);
}

bool all_triples_independent(const std::vector<ProjPoint>& dirs) {
    for (std::size_t i = 0; i < dirs.size(); ++i)
        for (std::size_t j = i + 1; j < dirs.size(); ++j)
            for (std::size_t k = j + 1; k < dirs.size(); ++k)
                if (det3(direction3(dirs[i]), direction3(dirs[j]), direction3(dirs[k])) == 0)
                    return false;
    return true;
}

// primitive integer vector with first nonzero entry positive
std::vector<Rat> normalize_plane(std::vector<Rat> v) {
    Int lcm = 1;
    for (const Rat& q : v) lcm = int_lcm(lcm, denominator(q));
    Int content = 0;
    std::vector<Int> iv;
    for (const Rat& q : v) {
        Int x = numerator(q) * (lcm / denominator(q));
        iv.push_back(x);
        content = int_gcd(content, x);
    }
    require_internal(content != 0, "zero plane form");
    int sign = 1;
    for (const Int& x : iv) {
        if (x != 0) {
            sign = x < 0 ? -1 : 1;
            break;
        }
    }
    std::vector<Rat> out;
    for (const Int& x : iv) out.emplace_back(x * sign / content);
    return out;
}

// 4-variable linear form with no x0 component
Form plane_form(const std::vector<Rat>& v3) {
    return linear_form(std::vector<Rat>{Rat(0), v3[0], v3[1], v3[2]});
}

Rat evaluate_linear(const Form& plane, const ProjPoint& m) {
    Rat s = 0;
    for (const auto& [mono, b] : plane.terms())
        for (int i = 0; i < mono.nvars(); ++i)
            if (mono[i] == 1) s += b * m.coord(i);
    return s;
}

ProjPoint project_from_vertex(const ProjPoint& m) {
    if (m.coord(0) == 0) return m;
    return direction4(m.coord(1), m.coord(2), m.coord(3));
}

}  // namespace

LineUnionCurve coordinate_axes_curve(int k) {
    require_user(k >= 2, "InvalidParameter", "need at least two lines");
    require_user(k <= 12, "TooManyLines", "at most 12 lines supported");
    LineUnionCurve c{ProjPoint::unit(4, 0), {}, false};
    int base = std::min(k, 3);
    for (int i = 1; i <= base; ++i) c.directions.push_back(ProjPoint::unit(4, i));
    for (long t = 1; c.k() < k; ++t)
        c.directions.push_back(direction4(Rat(1), Rat(t), Rat(t) * Rat(t)));
    c.general_position = all_triples_independent(c.directions);
    require_user(c.general_position, "GeneralPositionFailure",
                 "moment-curve directions failed the triple independence check");
    return c;
}

TangentStar tangent_star(const LineUnionCurve& c) {
    require_user(c.general_position, "GeneralPositionFailure",
                 "tangent star needs directions in general position");
    TangentStar ts;
    Form product(4, 0);
    product.add_b(Monomial(std::vector<int>(4)), Rat(1));
    for (std::size_t i = 0; i < c.directions.size(); ++i) {
        for (std::size_t j = i + 1; j < c.directions.size(); ++j) {
            auto u = direction3(c.directions[i]);
            auto v = direction3(c.directions[j]);
            std::vector<Rat> cross{u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2],
                                   u[0] * v[1] - u[1] * v[0]};
            Form plane = plane_form(normalize_plane(cross));
            product = multiply(product, plane);
            ts.planes.push_back(std::move(plane));
        }
    }
    ts.product_form = std::move(product);
    return ts;
}

bool star_membership(const TangentStar& ts, const ProjPoint& direction) {
    ProjPoint m = project_from_vertex(direction);
    for (const Form& plane : ts.planes)
        if (evaluate_linear(plane, m) == 0) return true;
    return false;
}

WitnessPoint witness_point(const LineUnionCurve& c, long d) {
    require_user(d >= 3, "DegreeTooSmall", "witness needs d >= 3");
    TangentStar ts = tangent_star(c);

    // direction sum, then deterministic moment-curve perturbations
    std::vector<Rat> sum{Rat(0), Rat(0), Rat(0)};
    for (const ProjPoint& u : c.directions) {
        auto v = direction3(u);
        for (int i = 0; i < 3; ++i) sum[static_cast<std::size_t>(i)] += v[static_cast<std::size_t>(i)];
    }
    long t0 = static_cast<long>(c.directions.size());  // beyond the built-in moment parameters
    for (int attempt = 0; attempt <= 100; ++attempt) {
        std::vector<Rat> m = sum;
        if (attempt > 0) {
            Rat t(t0 + attempt);
            m[0] += 1;
            m[1] += t;
            m[2] += t * t;
        }
        if (m[0] == 0 && m[1] == 0 && m[2] == 0) continue;
        ProjPoint dir = direction4(m[0], m[1], m[2]);
        if (star_membership(ts, dir)) continue;

        Form l(4, 1);
        l.add_b(Monomial({1, 0, 0, 0}), Rat(1));
        for (int i = 0; i < 3; ++i) {
            std::vector<int> e(4);
            e[static_cast<std::size_t>(i + 1)] = 1;
            l.add_b(Monomial(std::move(e)), m[static_cast<std::size_t>(i)]);
        }
        WitnessPoint w{multiply(power_of_point(ProjPoint::unit(4, 0), d - 1), l), dir, attempt};
        return w;
    }
    fail_user("NoGenericDirection", "no direction off the tangent star after 100 fallbacks");
}

CounterexampleReport verify_counterexample(const LineUnionCurve& c, long d) {
    require_user(d >= 3, "DegreeTooSmall", "verification needs d >= 3");
    TangentStar ts = tangent_star(c);
    WitnessPoint w = witness_point(c, d);

    CounterexampleReport rep;
    rep.k = c.k();
    rep.d = d;
    rep.witness = w.form;
    rep.tangent_direction = w.direction;

    // constructive sigma_2 membership in the ambient Veronese: the witness
    // sits on the tangent line at x0^d, recovered as the unique (d >= 3)
    // degree-2 scheme
    Rank2Recovery rec = recover_rank2_scheme(w.form, d);
    require_internal(std::holds_alternative<PointedScheme>(rec),
                     "witness did not recover a rank-2 scheme");
    rep.scheme = std::get<PointedScheme>(rec);
    auto coeffs = span_membership(w.form, rep.scheme, d);
    require_internal(coeffs.has_value(), "witness not in the span of the recovered scheme");
    rep.span_coefficients = *coeffs;
    rep.in_sigma2_ambient = true;

    // the scheme must be the double point at the vertex toward the witness direction
    require_internal(rep.scheme.point_count() == 1 && rep.scheme.entries()[0].tangent.has_value(),
                     "recovered scheme is not a double point");
    require_internal(rep.scheme.entries()[0].point == c.vertex,
                     "recovered scheme not supported at the vertex");
    ProjPoint tangent = *rep.scheme.entries()[0].tangent;
    rep.tangent_direction = tangent;

    // the tangent lies in the curve's Zariski tangent space iff it is a
    // combination of the direction vectors
    RatMatrix dirs(3, c.directions.size());
    for (std::size_t j = 0; j < c.directions.size(); ++j) {
        auto v = direction3(c.directions[j]);
        for (int i = 0; i < 3; ++i) dirs.at(static_cast<std::size_t>(i), j) = v[static_cast<std::size_t>(i)];
    }
    ProjPoint proj = project_from_vertex(tangent);
    RatMatrix tcol(3, 1);
    for (int i = 0; i < 3; ++i) tcol.at(static_cast<std::size_t>(i), 0) = proj.coord(i + 1);
    rep.tangent_in_curve_tangent_space = rank_exact(dirs.augmented(tcol)) == rank_exact(dirs);

    rep.tangent_in_star = star_membership(ts, tangent);
    rep.in_sigma2_curve = rep.tangent_in_star;  // smoothable in X iff tangent in the star
    rep.equation_degree_bound = static_cast<long>(ts.planes.size());
    rep.conclusion_holds =
        rep.in_sigma2_ambient && !rep.tangent_in_star && rep.tangent_in_curve_tangent_space;
    std::ostringstream os;
    if (rep.conclusion_holds)
        os << "z lies in sigma_2(v_d(P^3)) and in <v_d(X)> but not in sigma_2(v_d(X)); "
           << "defining equations need degree " << rep.equation_degree_bound;
    else
        os << "verification incomplete: the witness direction leaves the curve's tangent space";
    rep.conclusion = os.str();
    return rep;
}

int ConicSolution::total_multiplicity() const {
    int t = 0;
    for (const auto& [p, m] : points) t += m;
    return t;
}

namespace {

// coefficients of q as a polynomial in y0, entries in Q[y1] (chart y2 = 1)
std::vector<UniPoly> chart_poly(const Form& q) {
    std::vector<UniPoly> c(static_cast<std::size_t>(q.degree()) + 1);
    for (const auto& [m, b] : q.terms()) {
        Rat coef = b * Rat(multinomial(m.exponents()));
        std::size_t d0 = static_cast<std::size_t>(m[0]);
        c[d0] = c[d0] + UniPoly::monomial(coef, m[1]);
    }
    while (c.size() > 1 && c.back().is_zero()) c.pop_back();
    return c;
}

UniPoly evaluate_chart(const std::vector<UniPoly>& f, const Rat& y1) {
    // specialize y1, keeping the polynomial in y0
    std::vector<Rat> coeffs;
    for (const UniPoly& c : f) coeffs.push_back(c.evaluate(y1));
    return UniPoly(std::move(coeffs));
}

// Sylvester resultant in y0 of two polynomials with UniPoly coefficients,
// by cofactor expansion (the matrices here are at most 4x4).
UniPoly poly_det(std::vector<std::vector<UniPoly>> m) {
    std::size_t n = m.size();
    if (n == 0) return UniPoly::constant(Rat(1));
    if (n == 1) return m[0][0];
    UniPoly det;
    int sign = 1;
    for (std::size_t i = 0; i < n; ++i) {
        if (!m[i][0].is_zero()) {
            std::vector<std::vector<UniPoly>> minor;
            for (std::size_t r = 0; r < n; ++r) {
                if (r == i) continue;
                minor.emplace_back(m[r].begin() + 1, m[r].end());
            }
            UniPoly term = m[i][0] * poly_det(std::move(minor));
            det = (sign > 0) ? det + term : det - term;
        }
        sign = -sign;
    }
    return det;
}

UniPoly resultant_in_y0(const std::vector<UniPoly>& f, const std::vector<UniPoly>& g) {
    const int m = static_cast<int>(f.size()) - 1;
    const int n = static_cast<int>(g.size()) - 1;
    if (m == 0 && n == 0) return UniPoly::constant(Rat(1));
    if (m == 0) {
        UniPoly r = UniPoly::constant(Rat(1));
        for (int i = 0; i < n; ++i) r = r * f[0];
        return r;
    }
    if (n == 0) {
        UniPoly r = UniPoly::constant(Rat(1));
        for (int i = 0; i < m; ++i) r = r * g[0];
        return r;
    }
    std::vector<std::vector<UniPoly>> s(static_cast<std::size_t>(m + n),
                                        std::vector<UniPoly>(static_cast<std::size_t>(m + n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= m; ++j) s[static_cast<std::size_t>(i)][static_cast<std::size_t>(i + j)] = f[static_cast<std::size_t>(m - j)];
    for (int i = 0; i < m; ++i)
        for (int j = 0; j <= n; ++j)
            s[static_cast<std::size_t>(n + i)][static_cast<std::size_t>(i + j)] = g[static_cast<std::size_t>(n - j)];
    return poly_det(std::move(s));
}

// binary form in (y0, y1): restriction of a conic to the line y2 = 0
UniPoly infinity_restriction(const Form& q) {
    // coefficients of t^j where [y0:y1] = [1:t], plus the leading drop
    UniPoly g;
    for (const auto& [m, b] : q.terms()) {
        if (m[2] != 0) continue;
        g = g + UniPoly::monomial(b * Rat(multinomial(m.exponents())), m[1]);
    }
    return g;
}

}  // namespace

ConicPairResult solve_conic_pair(const Form& q1, const Form& q2) {
    require_user(q1.nvars() == 3 && q2.nvars() == 3 && q1.degree() == 2 && q2.degree() == 2,
                 "DegreeMismatch", "expected two conics in three variables");
    require_user(!q1.is_zero() && !q2.is_zero(), "ZeroForm", "zero conic");

    ConicSolution sol;

    // the line at infinity y2 = 0: common roots of the two binary restrictions
    {
        UniPoly g1 = infinity_restriction(q1);
        UniPoly g2 = infinity_restriction(q2);
        if (g1.is_zero() && g2.is_zero()) return NotFinite{};
        // homogeneous degrees on the line are 2; infinity point of the line is [0:1]
        auto handle_line = [&](const UniPoly& g) -> std::optional<IrrationalSolutions> {
            long inf_mult = 2 - std::max(g.degree(), 0);
            auto roots = rational_roots(g.is_zero() ? UniPoly::constant(Rat(1)) : g);
            long found = 0;
            for (const auto& [r, m] : roots) found += m;
            if (!g.is_zero() && found < g.degree()) return IrrationalSolutions{g};
            for (const auto& [r, m] : roots)
                sol.points.emplace_back(ProjPoint({Rat(1), r, Rat(0)}), m);
            if (inf_mult > 0) sol.points.emplace_back(ProjPoint({Rat(0), Rat(1), Rat(0)}), static_cast<int>(inf_mult));
            return std::nullopt;
        };
        if (g1.is_zero() || g2.is_zero()) {
            // one conic contains the whole line; intersect with the other
            if (auto bad = handle_line(g1.is_zero() ? g2 : g1)) return *bad;
        } else {
            UniPoly g = poly_gcd(g1, g2);
            long mutual_inf = std::min(2 - std::max(g1.degree(), 0), 2 - std::max(g2.degree(), 0));
            if (g.degree() > 0) {
                auto roots = rational_roots(g);
                long found = 0;
                for (const auto& [r, m] : roots) found += m;
                if (found < g.degree()) return IrrationalSolutions{g};
                for (const auto& [r, m] : roots)
                    sol.points.emplace_back(ProjPoint({Rat(1), r, Rat(0)}), m);
            }
            if (mutual_inf > 0)
                sol.points.emplace_back(ProjPoint({Rat(0), Rat(1), Rat(0)}), static_cast<int>(mutual_inf));
        }
    }

    // chart y2 = 1
    auto f1 = chart_poly(q1);
    auto f2 = chart_poly(q2);
    const bool f1_const_in_y0 = f1.size() == 1;
    const bool f2_const_in_y0 = f2.size() == 1;

    if (f1_const_in_y0 && f2_const_in_y0) {
        // both conics are cones over the y0 vertex inside this chart
        if (f1[0].is_zero() && f2[0].is_zero()) return NotFinite{};
        UniPoly g = f1[0].is_zero() ? f2[0] : (f2[0].is_zero() ? f1[0] : poly_gcd(f1[0], f2[0]));
        if (g.degree() > 0) return NotFinite{};  // a common vertical line of solutions
        return sol;
    }

    UniPoly res = resultant_in_y0(f1, f2);
    if (res.is_zero()) return NotFinite{};

    auto res_roots = rational_roots(res);
    long rational_mult = 0;
    for (const auto& [r, m] : res_roots) rational_mult += m;
    if (rational_mult < res.degree()) {
        // check whether any lost root could still matter: irrational y1
        // values always correspond to irrational solutions
        return IrrationalSolutions{res};
    }

    for (const auto& [y1, mult] : res_roots) {
        UniPoly h1 = evaluate_chart(f1, y1);
        UniPoly h2 = evaluate_chart(f2, y1);
        if (h1.is_zero() && h2.is_zero()) return NotFinite{};
        UniPoly h = h1.is_zero() ? h2 : (h2.is_zero() ? h1 : poly_gcd(h1, h2));
        if (h.degree() <= 0) continue;  // no common point in this fiber
        auto fiber_roots = rational_roots(h);
        long found = 0;
        for (const auto& [r, m] : fiber_roots) found += m;
        if (found < h.degree()) return IrrationalSolutions{h};
        if (fiber_roots.size() == 1) {
            sol.points.emplace_back(ProjPoint({fiber_roots[0].first, y1, Rat(1)}), mult);
        } else {
            for (const auto& [y0, m] : fiber_roots)
                sol.points.emplace_back(ProjPoint({y0, y1, Rat(1)}), m);
        }
    }
    return sol;
}

CiCubicsReport ci_cubics_pipeline() {
    CiCubicsReport rep;

    // lowest-degree parts of the two cubics at the singular point, in the
    // direction coordinates (x1, x2, x3)
    rep.conic1 = parse_form("x0*x1 - x1*x2", 3);  // x1 x2 - x2 x3
    rep.conic2 = parse_form("x0*x2 - x1*x2", 3);  // x1 x3 - x2 x3

    ConicPairResult res = solve_conic_pair(rep.conic1, rep.conic2);
    require_internal(std::holds_alternative<ConicSolution>(res),
                     "tangent cone of the built-in cubics did not solve over Q");
    rep.cone_points = std::get<ConicSolution>(res);

    rep.curve.vertex = ProjPoint::unit(4, 0);
    for (const auto& [p, m] : rep.cone_points.points)
        rep.curve.directions.push_back(direction4(p.coord(0), p.coord(1), p.coord(2)));
    rep.curve.general_position = all_triples_independent(rep.curve.directions);

    rep.star = tangent_star(rep.curve);
    rep.star_equation_degree = rep.star.product_form.degree();
    rep.not_definable_up_to = rep.star_equation_degree - 1;
    rep.checks_hold = rep.cone_points.points.size() == 4 &&
                      rep.cone_points.total_multiplicity() == 4 && rep.curve.general_position &&
                      rep.star.planes.size() == 6 && rep.star_equation_degree == 6;
    return rep;
}

} // namespace apolar
