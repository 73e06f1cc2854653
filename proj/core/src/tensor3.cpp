#include "apolar/tensor3.hpp"

#include <algorithm>

#include "apolar/errors.hpp"
#include "apolar/matrix.hpp"

namespace apolar {

template <class S>
Tensor3T<S> Tensor3T<S>::operator+(const Tensor3T<S>& o) const {
    require_internal(dims == o.dims, "tensor dims mismatch in +");
    Tensor3T<S> r = *this;
    for (std::size_t i = 0; i < a.size(); ++i) r.a[i] = r.a[i] + o.a[i];
    return r;
}

template <class S>
Tensor3T<S> Tensor3T<S>::operator-(const Tensor3T<S>& o) const {
    require_internal(dims == o.dims, "tensor dims mismatch in -");
    Tensor3T<S> r = *this;
    for (std::size_t i = 0; i < a.size(); ++i) r.a[i] = r.a[i] - o.a[i];
    return r;
}

template struct Tensor3T<Rat>;
template struct Tensor3T<UniPoly>;

template <class S>
Tensor3T<S> eval_expression(const RankExpressionT<S>& e) {
    Tensor3T<S> t(e.dims[0], e.dims[1], e.dims[2]);
    for (const auto& term : e.terms) {
        require_user(term.u.size() == e.dims[0] && term.v.size() == e.dims[1] &&
                         term.w.size() == e.dims[2],
                     "DimMismatch", "term vector lengths differ from the expression dims");
        for (std::size_t i = 0; i < e.dims[0]; ++i) {
            if (term.u[i] == S()) continue;
            for (std::size_t j = 0; j < e.dims[1]; ++j) {
                if (term.v[j] == S()) continue;
                S uv = term.u[i] * term.v[j];
                for (std::size_t k = 0; k < e.dims[2]; ++k) {
                    if (term.w[k] == S()) continue;
                    t.at(i, j, k) = t.at(i, j, k) + uv * term.w[k];
                }
            }
        }
    }
    return t;
}

template Tensor3 eval_expression(const RankExpression&);
template PolyTensor3 eval_expression(const PolyRankExpression&);

Tensor3 matmul_tensor(long s, long t, long u) {
    require_user(s >= 1 && t >= 1 && u >= 1, "InvalidDims", "matrix sizes must be positive");
    Tensor3 m(static_cast<std::size_t>(s * t), static_cast<std::size_t>(t * u),
              static_cast<std::size_t>(u * s));
    for (long i = 0; i < s; ++i)
        for (long j = 0; j < t; ++j)
            for (long k = 0; k < u; ++k)
                m.at(static_cast<std::size_t>(i * t + j), static_cast<std::size_t>(j * u + k),
                     static_cast<std::size_t>(k * s + i)) = 1;
    return m;
}

template <class S>
Tensor3T<S> direct_sum(const Tensor3T<S>& t1, const Tensor3T<S>& t2) {
    Tensor3T<S> r(t1.dims[0] + t2.dims[0], t1.dims[1] + t2.dims[1], t1.dims[2] + t2.dims[2]);
    for (std::size_t i = 0; i < t1.dims[0]; ++i)
        for (std::size_t j = 0; j < t1.dims[1]; ++j)
            for (std::size_t k = 0; k < t1.dims[2]; ++k) r.at(i, j, k) = t1.at(i, j, k);
    for (std::size_t i = 0; i < t2.dims[0]; ++i)
        for (std::size_t j = 0; j < t2.dims[1]; ++j)
            for (std::size_t k = 0; k < t2.dims[2]; ++k)
                r.at(t1.dims[0] + i, t1.dims[1] + j, t1.dims[2] + k) = t2.at(i, j, k);
    return r;
}

template Tensor3 direct_sum(const Tensor3&, const Tensor3&);
template PolyTensor3 direct_sum(const PolyTensor3&, const PolyTensor3&);

std::map<long, Tensor3> expand_family(const PolyTensor3& pt) {
    long max_deg = 0;
    for (const UniPoly& p : pt.a) max_deg = std::max(max_deg, static_cast<long>(p.degree()));
    std::map<long, Tensor3> out;
    for (long deg = 0; deg <= max_deg; ++deg) {
        Tensor3 t(pt.dims[0], pt.dims[1], pt.dims[2]);
        for (std::size_t i = 0; i < pt.a.size(); ++i) t.a[i] = pt.a[i].coeff(static_cast<int>(deg));
        out.emplace(deg, std::move(t));
    }
    return out;
}

SchoenhageFamily schoenhage_family(long e, long l) {
    require_user(e >= 2 && l >= 2, "InvalidParameter", "need e >= 2 and l >= 2");
    SchoenhageFamily fam;
    fam.e = e;
    fam.l = l;
    fam.h = (e - 1) * (l - 1);
    const long h = fam.h;

    // basis layout: A = a_1..a_e | alpha_{uv} (row-major u,v),
    //               B = b_1..b_l | beta_{uv},
    //               C = c_{si} (row-major s,i) | gamma
    const std::size_t na = static_cast<std::size_t>(e + h);
    const std::size_t nb = static_cast<std::size_t>(l + h);
    const std::size_t nc = static_cast<std::size_t>(e * l + 1);
    fam.expr.dims = {na, nb, nc};

    auto alpha_index = [&](long u, long v) { return static_cast<std::size_t>(e + (u - 1) * (l - 1) + (v - 1)); };
    auto beta_index = [&](long u, long v) { return static_cast<std::size_t>(l + (u - 1) * (l - 1) + (v - 1)); };
    auto c_index = [&](long s, long i) { return static_cast<std::size_t>((s - 1) * e + (i - 1)); };
    const std::size_t gamma_index = static_cast<std::size_t>(e * l);

    // First order terms: the alpha array (e x l) has its last column zero
    // and every column summing to zero; the beta array has its last row
    // zero and every row summing to zero.
    auto alpha_vec = [&](long i, long s) {
        std::vector<Rat> v(na);
        if (s == l) return v;
        if (i < e)
            v[alpha_index(i, s)] = 1;
        else
            for (long u = 1; u <= e - 1; ++u) v[alpha_index(u, s)] = -1;
        return v;
    };
    auto beta_vec = [&](long i, long s) {
        std::vector<Rat> v(nb);
        if (i == e) return v;
        if (s < l)
            v[beta_index(i, s)] = 1;
        else
            for (long w = 1; w <= l - 1; ++w) v[beta_index(i, w)] = -1;
        return v;
    };

    auto lift = [](const std::vector<Rat>& base, const std::vector<Rat>& order1,
                   const std::vector<Rat>& order2, std::size_t n) {
        std::vector<UniPoly> out(n);
        for (std::size_t idx = 0; idx < n; ++idx) {
            std::vector<Rat> coeffs{base[idx], order1[idx], order2[idx]};
            out[idx] = UniPoly(std::move(coeffs));
        }
        return out;
    };
    std::vector<Rat> zero_a(na), zero_b(nb), zero_c(nc);

    for (long i = 1; i <= e; ++i) {
        for (long s = 1; s <= l; ++s) {
            PolyRankExpression::Term term;
            std::vector<Rat> a0(na), b0(nb), c0(nc), c2(nc);
            a0[static_cast<std::size_t>(i - 1)] = 1;
            b0[static_cast<std::size_t>(s - 1)] = 1;
            c0[gamma_index] = 1;
            c2[c_index(s, i)] = 1;
            term.u = lift(a0, alpha_vec(i, s), zero_a, na);
            term.v = lift(b0, beta_vec(i, s), zero_b, nb);
            term.w = lift(c0, zero_c, c2, nc);
            fam.expr.terms.push_back(std::move(term));
        }
    }
    {
        PolyRankExpression::Term corr;
        std::vector<Rat> a0(na), b0(nb), c0(nc);
        for (long i = 1; i <= e; ++i) a0[static_cast<std::size_t>(i - 1)] = -1;
        for (long s = 1; s <= l; ++s) b0[static_cast<std::size_t>(s - 1)] = 1;
        c0[gamma_index] = 1;
        corr.u = lift(a0, zero_a, zero_a, na);
        corr.v = lift(b0, zero_b, zero_b, nb);
        corr.w = lift(c0, zero_c, zero_c, nc);
        fam.expr.terms.push_back(std::move(corr));
    }

    fam.expansion = expand_family(eval_expression(fam.expr));
    return fam;
}

namespace {

Tensor3 segre_point(const std::vector<Rat>& u, const std::vector<Rat>& v,
                    const std::vector<Rat>& w) {
    RankExpression e;
    e.dims = {u.size(), v.size(), w.size()};
    e.terms.push_back({u, v, w});
    return eval_expression(e);
}

// matrix-unit index: basis element with upper index r, lower index c of a
// 2x2 matrix space, flattened row-major
std::size_t mu(long r, long c) { return static_cast<std::size_t>((r - 1) * 2 + (c - 1)); }

std::vector<Rat> unit4(std::size_t i) {
    std::vector<Rat> v(4);
    v[i] = 1;
    return v;
}

std::vector<Rat> sum4(std::size_t i, std::size_t j) {
    std::vector<Rat> v(4);
    v[i] = 1;
    v[j] = 1;
    return v;
}

}  // namespace

BiniData bini_fixture() {
    BiniData data;

    // five Segre points in C^2 x C^2 x C^2 spanning only a P^3
    std::vector<Rat> e0{Rat(1), Rat(0)}, e1{Rat(0), Rat(1)}, both{Rat(1), Rat(1)};
    data.x.push_back(segre_point(e0, e0, e0));          // a1 b1 c1
    data.x.push_back(segre_point(e1, e1, e1));          // a2 b2 c2
    data.x.push_back(segre_point(e0, e0, both));        // a1 b1 (c1+c2)
    data.x.push_back(segre_point(e1, both, e1));        // a2 (b1+b2) c2
    data.x.push_back(segre_point(both, e0, e1));        // (a1+a2) b1 c2

    // first-order directions in the 2x2 matrix multiplication space;
    // upper index = row, lower index = column
    RankExpression xp1, xp2, xp3, xp4;
    xp1.dims = xp2.dims = xp3.dims = xp4.dims = {4, 4, 4};
    xp1.terms.push_back({unit4(mu(1, 1)), unit4(mu(1, 2)), unit4(mu(1, 2))});
    xp1.terms.push_back({unit4(mu(1, 2)), unit4(mu(2, 2)), unit4(mu(1, 2))});
    xp1.terms.push_back({std::vector<Rat>{Rat(0), Rat(-1), Rat(0), Rat(0)}, unit4(mu(2, 1)),
                         unit4(mu(1, 2))});
    xp2.terms.push_back({unit4(mu(1, 1)), unit4(mu(1, 1)), unit4(mu(1, 1))});
    xp2.terms.push_back({unit4(mu(2, 1)), unit4(mu(1, 1)), unit4(mu(2, 1))});
    xp2.terms.push_back({std::vector<Rat>{Rat(0), Rat(0), Rat(-1), Rat(0)}, unit4(mu(1, 1)),
                         unit4(mu(2, 2))});
    xp3.terms.push_back({unit4(mu(1, 2)), unit4(mu(2, 1)), sum4(mu(1, 1), mu(1, 2))});
    xp4.terms.push_back({unit4(mu(2, 1)), sum4(mu(1, 1), mu(1, 2)), unit4(mu(2, 2))});
    data.xprime.push_back(eval_expression(xp1));
    data.xprime.push_back(eval_expression(xp2));
    data.xprime.push_back(eval_expression(xp3));
    data.xprime.push_back(eval_expression(xp4));

    // the multiplication tensor for 2x2 matrices with the a^2_2 slot
    // removed: sum over (i,s) != (2,2) and u of a^i_s b^s_u c^i_u
    data.partial_matmul = Tensor3(4, 4, 4);
    for (long i = 1; i <= 2; ++i)
        for (long s = 1; s <= 2; ++s) {
            if (i == 2 && s == 2) continue;
            for (long u = 1; u <= 2; ++u)
                data.partial_matmul.at(mu(i, s), mu(s, u), mu(i, u)) = 1;
        }
    return data;
}

namespace {

RatMatrix flatten_stack(const std::vector<const Tensor3*>& ts) {
    std::size_t len = ts.empty() ? 0 : ts[0]->a.size();
    RatMatrix m(ts.size(), len);
    for (std::size_t i = 0; i < ts.size(); ++i)
        for (std::size_t j = 0; j < len; ++j) m.at(i, j) = ts[i]->a[j];
    return m;
}

}  // namespace

BiniReport bini_check(const BiniData& data) {
    BiniReport rep;

    Tensor3 combo = data.x[2] + data.x[3] - data.x[0] - data.x[1];
    rep.relation_holds = combo == data.x[4];

    rep.span_dimension = rank_exact(flatten_stack({&data.x[0], &data.x[1], &data.x[2], &data.x[3]}));
    rep.x5_in_span =
        rank_exact(flatten_stack({&data.x[0], &data.x[1], &data.x[2], &data.x[3], &data.x[4]})) ==
        rep.span_dimension;

    rep.x5_outside_every_triple = true;
    for (std::size_t skip = 0; skip < 4; ++skip) {
        std::vector<const Tensor3*> triple;
        for (std::size_t i = 0; i < 4; ++i)
            if (i != skip) triple.push_back(&data.x[i]);
        std::size_t r3 = rank_exact(flatten_stack(triple));
        triple.push_back(&data.x[4]);
        if (!(r3 == 3 && rank_exact(flatten_stack(triple)) == 4))
            rep.x5_outside_every_triple = false;
    }

    Tensor3 sum = data.xprime[0] + data.xprime[1] + data.xprime[2] + data.xprime[3];
    rep.partial_matmul_matches = sum == data.partial_matmul;

    rep.all_hold = rep.relation_holds && rep.span_dimension == 4 && rep.x5_in_span &&
                   rep.x5_outside_every_triple && rep.partial_matmul_matches;
    return rep;
}

BiniReport bini_check() { return bini_check(bini_fixture()); }

} // namespace apolar
