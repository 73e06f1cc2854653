#include "apolar/catalecticant.hpp"

namespace apolar {

namespace detail {

CatalecticantMatrix catalecticant_unchecked(const Form& p, long a) {
    CatalecticantMatrix cm;
    cm.a = a;
    cm.d = p.degree();
    cm.row_index = Monomial::degree_basis(p.nvars(), a);
    cm.col_index = Monomial::degree_basis(p.nvars(), p.degree() - a);
    cm.m = RatMatrix(cm.row_index.size(), cm.col_index.size());
    for (std::size_t i = 0; i < cm.row_index.size(); ++i)
        for (std::size_t j = 0; j < cm.col_index.size(); ++j)
            cm.m.at(i, j) = p.b(cm.row_index[i] * cm.col_index[j]);
    return cm;
}

}  // namespace detail

CatalecticantMatrix catalecticant(const Form& p, long a) {
    require_user(a >= 1 && a <= p.degree() - 1, "DegreeOutOfRange",
                 "contraction degree must satisfy 1 <= a <= d-1");
    return detail::catalecticant_unchecked(p, a);
}

BorderRankProfile border_rank_lower_bound(const Form& p) {
    require_user(p.degree() >= 2, "DegreeOutOfRange", "border rank profile needs d >= 2");
    BorderRankProfile profile;
    for (long a = 1; a <= p.degree() / 2; ++a) {
        std::size_t r = rank_exact(detail::catalecticant_unchecked(p, a).m);
        profile.ranks[a] = r;
        profile.lower_bound = std::max(profile.lower_bound, r);
    }
    return profile;
}

bool rank_upper_from_decomposition(const Form& p, const WaringDecomposition& decomp, long d) {
    require_user(!decomp.empty(), "InvalidParameter", "empty decomposition");
    require_user(p.degree() == d, "DegreeMismatch", "decomposition degree differs from the form");
    Form sum(p.nvars(), d);
    for (const auto& [coef, point] : decomp) {
        require_user(point.nvars() == p.nvars(), "DegreeMismatch",
                     "decomposition point in the wrong space");
        sum = sum + power_of_point(point, d) * coef;
    }
    return sum == p;
}

} // namespace apolar
