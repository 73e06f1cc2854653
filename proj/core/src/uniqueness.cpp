#include "apolar/uniqueness.hpp"

#include <algorithm>
#include <set>

namespace apolar {

RatMatrix scheme_span_matrix(const PointedScheme& r, long d, int nvars) {
    require_user(d >= r.degree() - 1, "DegreeTooSmall",
                 "span matrix needs d >= deg(R) - 1");
    std::vector<Form> cols;
    for (const auto& e : r.entries()) {
        require_user(e.point.nvars() == nvars, "DegreeMismatch", "scheme point in the wrong space");
        cols.push_back(power_of_point(e.point, d));
        if (e.tangent) cols.push_back(tangent_power(e.point, *e.tangent, d));
    }
    MonomialBasis basis(nvars, d);
    return forms_as_columns(cols, basis);
}

std::optional<std::vector<Rat>> span_membership(const Form& p, const PointedScheme& r, long d) {
    require_user(p.degree() == d, "DegreeMismatch", "form degree differs from d");
    RatMatrix a = scheme_span_matrix(r, d, p.nvars());
    MonomialBasis basis(p.nvars(), d);
    return solve_exact(a, dense_coords(p, basis));
}

RatMatrix span_intersection_basis(const RatMatrix& a, const RatMatrix& b) {
    require_internal(a.rows() == b.rows(), "span intersection: ambient mismatch");
    RatMatrix stacked(a.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) stacked.at(i, j) = a.at(i, j);
        for (std::size_t j = 0; j < b.cols(); ++j) stacked.at(i, a.cols() + j) = -b.at(i, j);
    }
    auto kernel = kernel_basis(stacked);
    RatMatrix out(a.rows(), kernel.size());
    for (std::size_t k = 0; k < kernel.size(); ++k) {
        for (std::size_t i = 0; i < a.rows(); ++i) {
            Rat s = 0;
            for (std::size_t j = 0; j < a.cols(); ++j) s += a.at(i, j) * kernel[k][j];
            out.at(i, k) = s;
        }
    }
    return out;
}

UniquenessCertificate certify_unique(const Form& p, const WaringDecomposition& decomp, long d) {
    require_user(!decomp.empty(), "NotADecomposition", "empty decomposition");
    std::set<ProjPoint> seen;
    for (const auto& [coef, point] : decomp) {
        require_user(coef != 0, "ZeroCoefficient", "decomposition with a zero coefficient");
        require_user(seen.insert(point).second, "RepeatedPoint",
                     "decomposition points must be pairwise distinct");
    }
    require_user(rank_upper_from_decomposition(p, decomp, d), "NotADecomposition",
                 "expression does not re-sum to the form");

    UniquenessCertificate cert;
    cert.d = d;
    cert.r = static_cast<long>(decomp.size());
    cert.decomposition = decomp;
    if (d >= 2) {
        cert.border_rank_witness = border_rank_lower_bound(p);
    } else {
        // linear forms: every nonzero one is a first power
        cert.border_rank_witness.lower_bound = 1;
    }

    bool small_rank = 2 * cert.r <= d + 1;  // r <= (d+1)/2
    bool witness_hits = cert.border_rank_witness.lower_bound == static_cast<std::size_t>(cert.r);
    cert.status = (small_rank && witness_hits) ? CertStatus::certified : CertStatus::indeterminate;
    return cert;
}

Rank2Recovery recover_rank2_scheme(const Form& p, long d) {
    require_user(d >= 3, "DegreeTooSmall", "scheme recovery needs d >= 3");
    require_user(p.degree() == d, "DegreeMismatch", "form degree differs from d");
    require_user(!p.is_zero(), "ZeroForm", "scheme recovery of the zero form");

    // W = span of the (d-1)-th order partials, read off the rows of
    // C_{d-1}(p); RREF rows give a canonical basis.
    CatalecticantMatrix cm = detail::catalecticant_unchecked(p, d - 1);
    Rref rr = reduced_row_echelon(cm.m);
    std::size_t dim = rr.pivot_cols.size();

    if (dim >= 3) return NotBorderRankTwo{dim};

    const int n = p.nvars();
    auto basis_row = [&](std::size_t i) {
        std::vector<Rat> v(static_cast<std::size_t>(n));
        for (int j = 0; j < n; ++j) v[static_cast<std::size_t>(j)] = rr.m.at(i, static_cast<std::size_t>(j));
        return ProjPoint(std::move(v));
    };

    if (dim == 1) {
        ProjPoint w = basis_row(0);
        // p is a scalar multiple of w^d
        require_internal(span_membership(p, PointedScheme::single_point(w), d).has_value(),
                         "one-dimensional partials but not a pure power");
        return PointedScheme::single_point(w);
    }

    ProjPoint w0 = basis_row(0), w1 = basis_row(1);
    auto q = restrict_to_plane(p, w0, w1);
    require_internal(q.has_value(), "form not contained in the span of its partials");

    BinaryRankCertificate cert = binary_rank(*q);
    if (cert.border_rank != 2) return NotBorderRankTwo{dim};

    auto embed = [&](const ProjPoint& bp) {
        std::vector<Rat> v(static_cast<std::size_t>(n));
        for (int j = 0; j < n; ++j)
            v[static_cast<std::size_t>(j)] =
                bp.coord(0) * w0.coord(j) + bp.coord(1) * w1.coord(j);
        return ProjPoint(std::move(v));
    };

    BinaryDecomposition dec = binary_decompose(cert, *q);
    if (std::holds_alternative<IrrationalRoots>(dec)) return std::get<IrrationalRoots>(dec);

    PointedScheme out;
    if (std::holds_alternative<WaringDecomposition>(dec)) {
        for (const auto& [coef, bp] : std::get<WaringDecomposition>(dec)) out.append_point(embed(bp));
    } else {
        const PointedScheme& bs = std::get<SchemeDecomposition>(dec).scheme;
        for (const auto& e : bs.entries()) {
            if (e.tangent)
                out.append_double_point(embed(e.point), embed(*e.tangent));
            else
                out.append_point(embed(e.point));
        }
    }
    require_internal(span_membership(p, out, d).has_value(),
                     "recovered scheme does not span the form");
    return out;
}

} // namespace apolar
