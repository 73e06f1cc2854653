#include "apolar/monomial.hpp"

#include "apolar/errors.hpp"

namespace apolar {

Monomial::Monomial(std::vector<int> exps) : e_(std::move(exps)) {
    for (int v : e_) require_internal(v >= 0, "negative exponent");
}

int Monomial::degree() const {
    int d = 0;
    for (int v : e_) d += v;
    return d;
}

Monomial Monomial::operator*(const Monomial& o) const {
    require_internal(e_.size() == o.e_.size(), "monomial variable mismatch");
    std::vector<int> v(e_);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] += o.e_[i];
    return Monomial(std::move(v));
}

bool Monomial::divides(const Monomial& o) const {
    if (e_.size() != o.e_.size()) return false;
    for (std::size_t i = 0; i < e_.size(); ++i)
        if (e_[i] > o.e_[i]) return false;
    return true;
}

Monomial Monomial::quotient_of(const Monomial& o) const {
    require_internal(divides(o), "monomial does not divide");
    std::vector<int> v(o.e_);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] -= e_[i];
    return Monomial(std::move(v));
}

std::vector<Monomial> Monomial::degree_basis(int nvars, long degree) {
    std::vector<Monomial> out;
    std::vector<int> cur(static_cast<std::size_t>(nvars));
    // Assign exponents greedily from x0 down; descending choice per slot
    // yields graded-lex descending order.
    auto rec = [&](auto&& self, int var, long rem) -> void {
        if (var == nvars - 1) {
            cur[static_cast<std::size_t>(var)] = static_cast<int>(rem);
            out.emplace_back(cur);
            return;
        }
        for (long e = rem; e >= 0; --e) {
            cur[static_cast<std::size_t>(var)] = static_cast<int>(e);
            self(self, var + 1, rem - e);
        }
    };
    if (nvars > 0) rec(rec, 0, degree);
    return out;
}

bool GradedLexBefore::operator()(const Monomial& a, const Monomial& b) const {
    int da = a.degree(), db = b.degree();
    if (da != db) return da > db;
    return a.exponents() > b.exponents();  // lexicographically greater comes first
}

MonomialBasis::MonomialBasis(int nvars, long degree) : list_(Monomial::degree_basis(nvars, degree)) {
    for (std::size_t i = 0; i < list_.size(); ++i) index_.emplace(list_[i], i);
}

std::size_t MonomialBasis::index_of(const Monomial& m) const {
    auto it = index_.find(m);
    require_internal(it != index_.end(), "monomial not in basis");
    return it->second;
}

} // namespace apolar
