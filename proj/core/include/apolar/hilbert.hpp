#ifndef APOLAR_HILBERT_HPP
#define APOLAR_HILBERT_HPP

#include <cstddef>
#include <vector>

#include "apolar/unipoly.hpp"

namespace apolar {

/// Integer-valued nonzero polynomial in the embedding degree d.
/// Integer-valuedness is checked on d = 0 .. 2*deg + 2 (deg + 2
/// consecutive integer values suffice by finite differences); violations
/// throw NotAHilbertPolynomial.
class HilbertPolynomial {
public:
    explicit HilbertPolynomial(UniPoly p);

    const UniPoly& poly() const { return p_; }
    int degree() const { return p_.degree(); }
    Rat evaluate(const Rat& d) const { return p_.evaluate(d); }

    bool operator==(const HilbertPolynomial& o) const { return p_ == o.p_; }

private:
    UniPoly p_;
};

HilbertPolynomial hp_points(long r);                 // constant r
HilbertPolynomial hp_projective_space(int n);        // binom(d+n, n)
HilbertPolynomial hp_hypersurface(int n, long e);    // binom(d+n,n) - binom(d-e+n,n)
HilbertPolynomial hp_rnc(int n);                     // n*d + 1

/// The unique expression P(d) = sum_{i=1..m} binom(d + a_i - i + 1, a_i)
/// with a_1 >= ... >= a_m >= 0; the Gotzmann number is m and the ideal
/// sheaf of any subscheme with Hilbert polynomial P is m-regular.
struct GotzmannDecomposition {
    std::vector<long> a_list;
    std::size_t gotzmann_number = 0;
};

/// Greedy extraction by remainder degree, validated post hoc by the
/// symbolic identity. Inputs where the remainder turns negative at large
/// d or the extraction exceeds 10^5 terms are rejected as
/// NotAHilbertPolynomial.
GotzmannDecomposition gotzmann_number(const HilbertPolynomial& p);

/// Degree thresholds attached to a Hilbert polynomial and a rank r:
///   main        d >= Got(P) + r - 1   span intersection / reduction bound
///   component   d >= max(2r-2, main)  secant variety is a component
///   uniqueness  d >= 2r-1             the degree-r scheme is unique
struct VeroneseThresholds {
    long main = 0;
    long component = 0;
    long uniqueness = 0;
};

VeroneseThresholds veronese_threshold(const HilbertPolynomial& p, long r);

/// h_{X cap R} = h_X + h_R - h_{X cup R}.
HilbertPolynomial hp_combine(const HilbertPolynomial& h_x, const HilbertPolynomial& h_r,
                             const HilbertPolynomial& h_union);

} // namespace apolar

#endif
