#include "apolar/binary_rank.hpp"

#include <algorithm>

#include "apolar/uniqueness.hpp"

namespace apolar {

namespace {

// Left kernel of the stored flattening matrix = ker C_a on the dual side;
// vectors are the monomial coefficients of degree-a dual forms.
std::vector<std::vector<Rat>> apolar_kernel(const Form& p, long a) {
    return kernel_basis(detail::catalecticant_unchecked(p, a).m.transposed());
}

struct HomGenerator {
    // monomial coefficients q_j of G = sum q_j X0^{a-j} X1^j
    std::vector<Rat> q;
    long a = 0;

    UniPoly dehomogenized() const { return UniPoly(q); }  // g(t) = G(1, t)
    long infinity_multiplicity() const { return a - std::max(dehomogenized().degree(), 0); }

    bool squarefree() const {
        // G squarefree <=> g squarefree and [0:1] at most a simple root.
        UniPoly g = dehomogenized();
        return is_squarefree(g) && infinity_multiplicity() <= 1;
    }
};

// When the minimal-degree kernel is a pencil (only possible at
// a = d/2 + 1 with both apolar generators in the same degree), prefer a
// squarefree member: the pencil is base-point free, so at most 2(a-1)
// members are non-squarefree and a short deterministic scan finds one.
HomGenerator pick_generator(const std::vector<std::vector<Rat>>& kernel, long a) {
    HomGenerator gen;
    gen.a = a;
    gen.q = kernel.front();
    if (gen.squarefree() || kernel.size() < 2) return gen;

    const std::vector<Rat>& g2 = kernel[1];
    HomGenerator cand;
    cand.a = a;
    cand.q = g2;
    if (cand.squarefree()) return cand;
    for (long j = 1; j <= 2 * a; ++j) {
        cand.q = kernel.front();
        for (std::size_t i = 0; i < cand.q.size(); ++i) cand.q[i] += Rat(j) * g2[i];
        if (cand.squarefree()) return cand;
    }
    return gen;
}

ProjPoint binary_point(const Rat& root) { return ProjPoint({Rat(1), root}); }

}  // namespace

BinaryRankCertificate binary_rank(const Form& p) {
    require_user(p.nvars() == 2, "WrongVariableCount", "binary rank needs a form in x0, x1");
    require_user(!p.is_zero(), "ZeroForm", "binary rank of the zero form");
    const long d = p.degree();

    BinaryRankCertificate cert;
    cert.d = d;
    for (long a = 1; a <= d / 2 + 1; ++a) {
        auto kernel = apolar_kernel(p, a);
        if (kernel.empty()) continue;
        HomGenerator gen = pick_generator(kernel, a);
        cert.border_rank = a;
        cert.apolar_generator = gen.dehomogenized();
        cert.infinity_root = gen.infinity_multiplicity() > 0;
        cert.squarefree = gen.squarefree();
        cert.rank = cert.squarefree ? a : d + 2 - a;
        return cert;
    }
    fail_internal("InternalError", "no apolar generator up to degree d/2 + 1");
}

BinaryDecomposition binary_decompose(const BinaryRankCertificate& cert, const Form& p) {
    require_user(p.nvars() == 2 && !p.is_zero() && p.degree() == cert.d, "CertificateMismatch",
                 "certificate does not match the form");
    const long d = cert.d;
    const long a = cert.border_rank;
    const UniPoly& g = cert.apolar_generator;
    const long inf_mult = a - std::max(g.degree(), 0);

    // The generator must annihilate p and its degree must be the least
    // kernel degree for p.
    {
        Form dual(2, a);
        for (int j = 0; j <= g.degree(); ++j)
            dual.add_monomial_coeff(Monomial({static_cast<int>(a - j), j}), g.coeff(j));
        require_user(!dual.is_zero() && apply_diff(dual, p).is_zero(), "CertificateMismatch",
                     "apolar generator does not annihilate the form");
        for (long lower = 1; lower < a; ++lower)
            require_user(apolar_kernel(p, lower).empty(), "CertificateMismatch",
                         "certificate border rank is not minimal for the form");
    }

    auto roots = rational_roots(g);
    long found = inf_mult;
    long max_mult = inf_mult;
    for (const auto& [r, m] : roots) {
        found += m;
        max_mult = std::max<long>(max_mult, m);
    }
    if (found < a || max_mult > 2)
        return IrrationalRoots{g, inf_mult > 0};

    if (max_mult <= 1) {
        // distinct roots: honest Waring decomposition
        std::vector<ProjPoint> points;
        for (const auto& [r, m] : roots) points.push_back(binary_point(r));
        if (inf_mult == 1) points.push_back(ProjPoint::unit(2, 1));

        std::vector<Form> cols;
        for (const ProjPoint& v : points) cols.push_back(power_of_point(v, d));
        MonomialBasis basis(2, d);
        auto sol = solve_exact(forms_as_columns(cols, basis), dense_coords(p, basis));
        require_internal(sol.has_value(), "form not in the span of its apolar roots");
        WaringDecomposition out;
        for (std::size_t i = 0; i < points.size(); ++i) out.emplace_back((*sol)[i], points[i]);
        return out;
    }

    // a repeated (double) root: degree-2 structure at that point
    PointedScheme scheme;
    for (const auto& [r, m] : roots) {
        ProjPoint v = binary_point(r);
        if (m == 1)
            scheme.append_point(v);
        else
            scheme.append_double_point(v, ProjPoint::unit(2, 1));
    }
    if (inf_mult == 1)
        scheme.append_point(ProjPoint::unit(2, 1));
    else if (inf_mult == 2)
        scheme.append_double_point(ProjPoint::unit(2, 1), ProjPoint::unit(2, 0));

    auto coeffs = span_membership(p, scheme, d);
    require_internal(coeffs.has_value(), "form not in the span of its apolar scheme");
    return SchemeDecomposition{scheme, *coeffs};
}

} // namespace apolar
