#include "apolar/hilbert.hpp"

#include <algorithm>

namespace apolar {

namespace {

// binom(d + shift, k) as a polynomial in d: falling-factorial product
// (d + shift)(d + shift - 1)...(d + shift - k + 1) / k!.
UniPoly binom_poly(long shift, long k) {
    UniPoly p = UniPoly::constant(Rat(1));
    Rat kfact = 1;
    for (long j = 0; j < k; ++j) {
        p = p * UniPoly(std::vector<Rat>{Rat(shift - j), Rat(1)});
        kfact *= Rat(j + 1);
    }
    return p * (Rat(1) / kfact);
}

}  // namespace

HilbertPolynomial::HilbertPolynomial(UniPoly p) : p_(std::move(p)) {
    require_user(!p_.is_zero(), "NotAHilbertPolynomial", "the zero polynomial");
    // deg + 2 consecutive integer values suffice by finite differences
    long upper = 2 * static_cast<long>(p_.degree()) + 2;
    for (long d = 0; d <= upper; ++d)
        require_user(is_integer(p_.evaluate(Rat(d))), "NotAHilbertPolynomial",
                     "polynomial is not integer-valued at d = " + std::to_string(d));
}

HilbertPolynomial hp_points(long r) {
    require_user(r >= 1, "InvalidParameter", "need r >= 1 points");
    return HilbertPolynomial(UniPoly::constant(Rat(r)));
}

HilbertPolynomial hp_projective_space(int n) {
    require_user(n >= 1, "InvalidParameter", "need n >= 1");
    return HilbertPolynomial(binom_poly(n, n));
}

HilbertPolynomial hp_hypersurface(int n, long e) {
    require_user(n >= 1 && e >= 1, "InvalidParameter", "need n >= 1 and e >= 1");
    return HilbertPolynomial(binom_poly(n, n) - binom_poly(n - e, n));
}

HilbertPolynomial hp_rnc(int n) {
    require_user(n >= 1, "InvalidParameter", "need n >= 1");
    return HilbertPolynomial(UniPoly(std::vector<Rat>{Rat(1), Rat(n)}));
}

GotzmannDecomposition gotzmann_number(const HilbertPolynomial& hp) {
    constexpr long kTermBound = 100000;

    UniPoly rem = hp.poly();
    GotzmannDecomposition out;
    long prev_a = -1;
    long i = 1;
    while (!rem.is_zero()) {
        require_user(i <= kTermBound, "NotAHilbertPolynomial",
                     "Gotzmann extraction exceeded the term bound");
        long a = rem.degree();
        require_user(rem.leading() > 0, "NotAHilbertPolynomial",
                     "remainder is negative for large d");
        require_user(prev_a < 0 || a <= prev_a, "NotAHilbertPolynomial",
                     "extracted degrees are not non-increasing");
        rem = rem - binom_poly(a - i + 1, a);
        out.a_list.push_back(a);
        prev_a = a;
        ++i;
    }
    out.gotzmann_number = out.a_list.size();

    // post-hoc symbolic validation of the decomposition identity
    UniPoly sum;
    for (std::size_t j = 0; j < out.a_list.size(); ++j)
        sum = sum + binom_poly(out.a_list[j] - static_cast<long>(j + 1) + 1, out.a_list[j]);
    require_internal(sum == hp.poly(), "Gotzmann decomposition identity failed");
    return out;
}

VeroneseThresholds veronese_threshold(const HilbertPolynomial& p, long r) {
    require_user(r >= 1, "InvalidParameter", "need r >= 1");
    GotzmannDecomposition g = gotzmann_number(p);
    VeroneseThresholds t;
    t.main = static_cast<long>(g.gotzmann_number) + r - 1;
    t.component = std::max(2 * r - 2, t.main);
    t.uniqueness = 2 * r - 1;
    return t;
}

HilbertPolynomial hp_combine(const HilbertPolynomial& h_x, const HilbertPolynomial& h_r,
                             const HilbertPolynomial& h_union) {
    return HilbertPolynomial(h_x.poly() + h_r.poly() - h_union.poly());
}

} // namespace apolar
