#ifndef APOLAR_UNIPOLY_HPP
#define APOLAR_UNIPOLY_HPP

#include <utility>
#include <vector>

#include "apolar/rational.hpp"

namespace apolar {

/// Univariate polynomial over Q, coefficients ascending. The zero
/// polynomial has an empty coefficient list and degree -1.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Rat> coeffs);
    static UniPoly constant(const Rat& c);
    static UniPoly variable();                      // t
    static UniPoly monomial(const Rat& c, int k);   // c * t^k

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    Rat coeff(int k) const;
    const std::vector<Rat>& coeffs() const { return c_; }
    Rat leading() const;

    UniPoly operator+(const UniPoly& o) const;
    UniPoly operator-(const UniPoly& o) const;
    UniPoly operator-() const;
    UniPoly operator*(const UniPoly& o) const;
    UniPoly operator*(const Rat& s) const;
    bool operator==(const UniPoly& o) const { return c_ == o.c_; }

    Rat evaluate(const Rat& x) const;
    UniPoly derivative() const;
    UniPoly monic() const;

    /// Quotient and remainder of this / divisor (divisor nonzero).
    std::pair<UniPoly, UniPoly> divmod(const UniPoly& divisor) const;
    /// Exact division; internal error if the remainder is nonzero.
    UniPoly divexact(const UniPoly& divisor) const;

    std::string to_string(const char* var = "t") const;

private:
    std::vector<Rat> c_;
    void trim();
};

/// Monic gcd; gcd(g, 0) = monic(g). Both zero is an internal error.
UniPoly poly_gcd(const UniPoly& a, const UniPoly& b);

/// True iff gcd(g, g') is constant. Throws ZeroPolynomial on the zero input.
bool is_squarefree(const UniPoly& g);

/// All rational roots with multiplicities, ascending, by the rational-root
/// theorem on the primitive integer form followed by deflation.
std::vector<std::pair<Rat, int>> rational_roots(const UniPoly& g);

/// Determinant of the Sylvester matrix of g and h (both nonzero).
Rat resultant(const UniPoly& g, const UniPoly& h);

} // namespace apolar

#endif
