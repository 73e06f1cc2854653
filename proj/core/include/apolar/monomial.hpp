#ifndef APOLAR_MONOMIAL_HPP
#define APOLAR_MONOMIAL_HPP

#include <cstddef>
#include <map>
#include <vector>

#include "apolar/rational.hpp"

namespace apolar {

/// Exponent vector of a monomial in variables x0..xn. The global order is
/// graded lexicographic with x0 > x1 > ... > xn.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::vector<int> exps);

    int nvars() const { return static_cast<int>(e_.size()); }
    int degree() const;
    int operator[](int i) const { return e_[static_cast<std::size_t>(i)]; }
    const std::vector<int>& exponents() const { return e_; }

    Monomial operator*(const Monomial& o) const;
    bool divides(const Monomial& o) const;
    /// Exponent-wise difference o - this; requires divides(o).
    Monomial quotient_of(const Monomial& o) const;

    bool operator==(const Monomial& o) const { return e_ == o.e_; }
    bool operator!=(const Monomial& o) const { return e_ != o.e_; }

    /// All monomials of the given degree, in graded-lex descending order
    /// (x0^d first, xn^d last).
    static std::vector<Monomial> degree_basis(int nvars, long degree);

private:
    std::vector<int> e_;
};

/// Strict weak order putting monomials in canonical listing order:
/// higher degree first, then lexicographically greater first.
struct GradedLexBefore {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Canonical basis of one degree with O(log) index lookup.
class MonomialBasis {
public:
    MonomialBasis(int nvars, long degree);

    std::size_t size() const { return list_.size(); }
    const Monomial& operator[](std::size_t i) const { return list_[i]; }
    const std::vector<Monomial>& list() const { return list_; }
    std::size_t index_of(const Monomial& m) const;

private:
    std::vector<Monomial> list_;
    std::map<Monomial, std::size_t, GradedLexBefore> index_;
};

} // namespace apolar

#endif
