#include "apolar/unipoly.hpp"

#include <algorithm>
#include <sstream>

#include "apolar/matrix.hpp"

namespace apolar {

UniPoly::UniPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

void UniPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

UniPoly UniPoly::constant(const Rat& c) { return UniPoly(std::vector<Rat>{c}); }

UniPoly UniPoly::variable() { return UniPoly(std::vector<Rat>{Rat(0), Rat(1)}); }

UniPoly UniPoly::monomial(const Rat& c, int k) {
    std::vector<Rat> v(static_cast<std::size_t>(k) + 1);
    v.back() = c;
    return UniPoly(std::move(v));
}

Rat UniPoly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return Rat(0);
    return c_[static_cast<std::size_t>(k)];
}

Rat UniPoly::leading() const {
    require_internal(!c_.empty(), "leading coefficient of zero polynomial");
    return c_.back();
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
    std::vector<Rat> v(std::max(c_.size(), o.c_.size()));
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i < c_.size()) v[i] += c_[i];
        if (i < o.c_.size()) v[i] += o.c_[i];
    }
    return UniPoly(std::move(v));
}

UniPoly UniPoly::operator-(const UniPoly& o) const { return *this + (-o); }

UniPoly UniPoly::operator-() const {
    std::vector<Rat> v(c_);
    for (Rat& q : v) q = -q;
    return UniPoly(std::move(v));
}

UniPoly UniPoly::operator*(const UniPoly& o) const {
    if (is_zero() || o.is_zero()) return UniPoly();
    std::vector<Rat> v(c_.size() + o.c_.size() - 1);
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < o.c_.size(); ++j) v[i + j] += c_[i] * o.c_[j];
    return UniPoly(std::move(v));
}

UniPoly UniPoly::operator*(const Rat& s) const {
    if (s == 0) return UniPoly();
    std::vector<Rat> v(c_);
    for (Rat& q : v) q *= s;
    return UniPoly(std::move(v));
}

Rat UniPoly::evaluate(const Rat& x) const {
    Rat r = 0;
    for (std::size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
    return r;
}

UniPoly UniPoly::derivative() const {
    if (c_.size() <= 1) return UniPoly();
    std::vector<Rat> v(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * Rat(static_cast<long>(i));
    return UniPoly(std::move(v));
}

UniPoly UniPoly::monic() const {
    require_internal(!is_zero(), "monic of zero polynomial");
    return *this * (Rat(1) / leading());
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& divisor) const {
    require_internal(!divisor.is_zero(), "division by zero polynomial");
    UniPoly rem = *this;
    if (rem.degree() < divisor.degree()) return {UniPoly(), rem};
    std::vector<Rat> q(static_cast<std::size_t>(rem.degree() - divisor.degree()) + 1);
    while (!rem.is_zero() && rem.degree() >= divisor.degree()) {
        int shift = rem.degree() - divisor.degree();
        Rat f = rem.leading() / divisor.leading();
        q[static_cast<std::size_t>(shift)] = f;
        rem = rem - divisor * UniPoly::monomial(f, shift);
    }
    return {UniPoly(std::move(q)), rem};
}

UniPoly UniPoly::divexact(const UniPoly& divisor) const {
    auto [q, r] = divmod(divisor);
    require_internal(r.is_zero(), "inexact polynomial division");
    return q;
}

std::string UniPoly::to_string(const char* var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
        if (c_[i] == 0) continue;
        Rat c = c_[i];
        if (first) {
            if (c < 0) {
                os << "-";
                c = -c;
            }
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        }
        if (i == 0 || c != 1) os << rat_to_string(c);
        if (i > 0) {
            if (c != 1) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

UniPoly poly_gcd(const UniPoly& a, const UniPoly& b) {
    require_internal(!(a.is_zero() && b.is_zero()), "gcd of two zero polynomials");
    UniPoly f = a, g = b;
    while (!g.is_zero()) {
        UniPoly r = f.divmod(g).second;
        f = g;
        g = r;
    }
    return f.monic();
}

bool is_squarefree(const UniPoly& g) {
    require_user(!g.is_zero(), "ZeroPolynomial", "squarefree test on the zero polynomial");
    if (g.degree() == 0) return true;
    return poly_gcd(g, g.derivative()).degree() == 0;
}

namespace {

std::vector<Int> positive_divisors(Int n) {
    if (n < 0) n = -n;
    std::vector<Int> ds;
    for (Int i = 1; i * i <= n; ++i) {
        if (n % i == 0) {
            ds.push_back(i);
            Int j = n / i;
            if (j != i) ds.push_back(j);
        }
    }
    return ds;
}

// Exact synthetic division of g by (t - r); requires r to be a root.
UniPoly deflate(const UniPoly& g, const Rat& r) {
    int n = g.degree();
    std::vector<Rat> q(static_cast<std::size_t>(n));
    Rat carry = g.coeff(n);
    for (int i = n - 1; i >= 0; --i) {
        q[static_cast<std::size_t>(i)] = carry;
        carry = g.coeff(i) + carry * r;
    }
    require_internal(carry == 0, "deflation at a non-root");
    return UniPoly(std::move(q));
}

}  // namespace

std::vector<std::pair<Rat, int>> rational_roots(const UniPoly& g) {
    require_user(!g.is_zero(), "ZeroPolynomial", "root search on the zero polynomial");
    std::vector<std::pair<Rat, int>> roots;

    UniPoly work = g;
    // roots at t = 0
    int zero_mult = 0;
    while (work.coeff(0) == 0 && work.degree() > 0) {
        work = work.divexact(UniPoly::variable());
        ++zero_mult;
    }
    if (zero_mult > 0) roots.emplace_back(Rat(0), zero_mult);
    if (work.degree() == 0) {
        std::sort(roots.begin(), roots.end(),
                  [](const auto& x, const auto& y) { return x.first < y.first; });
        return roots;
    }

    // primitive integer form
    Int lcm = 1;
    for (const Rat& c : work.coeffs()) lcm = int_lcm(lcm, denominator(c));
    std::vector<Int> ic;
    Int content = 0;
    for (const Rat& c : work.coeffs()) {
        Int v = numerator(c) * (lcm / denominator(c));
        ic.push_back(v);
        content = int_gcd(content, v);
    }
    if (content > 1)
        for (Int& v : ic) v /= content;

    auto ps = positive_divisors(ic.front());
    auto qs = positive_divisors(ic.back());
    std::vector<Rat> candidates;
    for (const Int& p : ps)
        for (const Int& q : qs) {
            if (int_gcd(p, q) != 1) continue;
            candidates.push_back(make_rat(p, q));
            candidates.push_back(make_rat(-p, q));
        }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    for (const Rat& r : candidates) {
        int mult = 0;
        while (work.degree() > 0 && work.evaluate(r) == 0) {
            work = deflate(work, r);
            ++mult;
        }
        if (mult > 0) roots.emplace_back(r, mult);
    }

    std::sort(roots.begin(), roots.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    return roots;
}

Rat resultant(const UniPoly& g, const UniPoly& h) {
    require_user(!g.is_zero() && !h.is_zero(), "ZeroPolynomial", "resultant of the zero polynomial");
    const int m = g.degree(), n = h.degree();
    if (m == 0 && n == 0) return Rat(1);
    if (m == 0) {
        Rat r = 1;
        for (int i = 0; i < n; ++i) r *= g.coeff(0);
        return r;
    }
    if (n == 0) {
        Rat r = 1;
        for (int i = 0; i < m; ++i) r *= h.coeff(0);
        return r;
    }
    RatMatrix s(static_cast<std::size_t>(m + n), static_cast<std::size_t>(m + n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= m; ++j) s.at(static_cast<std::size_t>(i), static_cast<std::size_t>(i + j)) = g.coeff(m - j);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j <= n; ++j)
            s.at(static_cast<std::size_t>(n + i), static_cast<std::size_t>(i + j)) = h.coeff(n - j);
    return determinant(s);
}

} // namespace apolar
