#include "apolar/matrix.hpp"

#include <utility>

namespace apolar {

RatMatrix RatMatrix::identity(std::size_t n) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

RatMatrix RatMatrix::from_rows(std::initializer_list<std::initializer_list<long>> rows) {
    std::size_t r = rows.size();
    std::size_t c = r ? rows.begin()->size() : 0;
    RatMatrix m(r, c);
    std::size_t i = 0;
    for (const auto& row : rows) {
        require_internal(row.size() == c, "ragged initializer");
        std::size_t j = 0;
        for (long v : row) m.at(i, j++) = v;
        ++i;
    }
    return m;
}

RatMatrix RatMatrix::transposed() const {
    RatMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

RatMatrix RatMatrix::augmented(const RatMatrix& other) const {
    require_internal(rows_ == other.rows_, "augment: row mismatch");
    RatMatrix m(rows_, cols_ + other.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) m.at(i, j) = at(i, j);
        for (std::size_t j = 0; j < other.cols_; ++j) m.at(i, cols_ + j) = other.at(i, j);
    }
    return m;
}

namespace {

// Row-wise denominator clearing; rank and right kernel are unaffected.
std::vector<std::vector<Int>> to_integer_rows(const RatMatrix& m, std::vector<Int>* multipliers) {
    std::vector<std::vector<Int>> rows(m.rows(), std::vector<Int>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Int l = 1;
        for (std::size_t j = 0; j < m.cols(); ++j) l = int_lcm(l, denominator(m.at(i, j)));
        if (l == 0) l = 1;
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const Rat& q = m.at(i, j);
            rows[i][j] = numerator(q) * (l / denominator(q));
        }
        if (multipliers) multipliers->push_back(l);
    }
    return rows;
}

}  // namespace

std::size_t rank_exact(const RatMatrix& m) {
    auto a = to_integer_rows(m, nullptr);
    const std::size_t rows = m.rows(), cols = m.cols();
    std::size_t r = 0;
    Int prev = 1;
    for (std::size_t col = 0; col < cols && r < rows; ++col) {
        std::size_t piv = r;
        while (piv < rows && a[piv][col] == 0) ++piv;
        if (piv == rows) continue;
        if (piv != r) std::swap(a[piv], a[r]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = col + 1; j < cols; ++j)
                a[i][j] = (a[r][col] * a[i][j] - a[i][col] * a[r][j]) / prev;
            a[i][col] = 0;
        }
        prev = a[r][col];
        ++r;
    }
    return r;
}

Rat determinant(const RatMatrix& m) {
    require_internal(m.rows() == m.cols(), "determinant of non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return Rat(1);
    std::vector<Int> mult;
    auto a = to_integer_rows(m, &mult);
    int sign = 1;
    Int prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t piv = k;
        while (piv < n && a[piv][k] == 0) ++piv;
        if (piv == n) return Rat(0);
        if (piv != k) {
            std::swap(a[piv], a[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) / prev;
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    Rat det(a[n - 1][n - 1] * sign);
    for (const Int& l : mult) det /= l;
    return det;
}

Rref reduced_row_echelon(const RatMatrix& m) {
    Rref out;
    out.m = m;
    RatMatrix& a = out.m;
    const std::size_t rows = a.rows(), cols = a.cols();
    std::size_t r = 0;
    for (std::size_t col = 0; col < cols && r < rows; ++col) {
        std::size_t piv = r;
        while (piv < rows && a.at(piv, col) == 0) ++piv;
        if (piv == rows) continue;
        if (piv != r)
            for (std::size_t j = 0; j < cols; ++j) std::swap(a.at(piv, j), a.at(r, j));
        Rat inv = Rat(1) / a.at(r, col);
        for (std::size_t j = col; j < cols; ++j) a.at(r, j) *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a.at(i, col) == 0) continue;
            Rat f = a.at(i, col);
            for (std::size_t j = col; j < cols; ++j) a.at(i, j) -= f * a.at(r, j);
        }
        out.pivot_cols.push_back(col);
        ++r;
    }
    return out;
}

std::vector<std::vector<Rat>> kernel_basis(const RatMatrix& m) {
    Rref rr = reduced_row_echelon(m);
    const std::size_t cols = m.cols();
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t c : rr.pivot_cols) is_pivot[c] = true;

    std::vector<std::vector<Rat>> basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rat> v(cols);
        v[f] = 1;
        for (std::size_t i = 0; i < rr.pivot_cols.size(); ++i)
            v[rr.pivot_cols[i]] = -rr.m.at(i, f);
        // scale so the first nonzero entry is 1
        for (std::size_t j = 0; j < cols; ++j) {
            if (v[j] != 0) {
                Rat inv = Rat(1) / v[j];
                for (std::size_t k2 = j; k2 < cols; ++k2) v[k2] *= inv;
                break;
            }
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<std::vector<Rat>> solve_exact(const RatMatrix& a, const std::vector<Rat>& b) {
    require_internal(b.size() == a.rows(), "solve: rhs size mismatch");
    RatMatrix rhs(a.rows(), 1);
    for (std::size_t i = 0; i < a.rows(); ++i) rhs.at(i, 0) = b[i];
    Rref rr = reduced_row_echelon(a.augmented(rhs));
    const std::size_t bcol = a.cols();
    for (std::size_t c : rr.pivot_cols)
        if (c == bcol) return std::nullopt;  // inconsistent
    std::vector<Rat> x(a.cols());
    for (std::size_t i = 0; i < rr.pivot_cols.size(); ++i) x[rr.pivot_cols[i]] = rr.m.at(i, bcol);
    return x;
}

std::vector<Rat> matvec(const RatMatrix& a, const std::vector<Rat>& x) {
    require_internal(x.size() == a.cols(), "matvec: size mismatch");
    std::vector<Rat> y(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        Rat s = 0;
        for (std::size_t j = 0; j < a.cols(); ++j) s += a.at(i, j) * x[j];
        y[i] = s;
    }
    return y;
}

} // namespace apolar
