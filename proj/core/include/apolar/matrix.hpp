#ifndef APOLAR_MATRIX_HPP
#define APOLAR_MATRIX_HPP

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <vector>

#include "apolar/rational.hpp"

namespace apolar {

/// Dense row-major matrix over Q. Value type; safe to share read-only.
class RatMatrix {
public:
    RatMatrix() : rows_(0), cols_(0) {}
    RatMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols) {}

    static RatMatrix identity(std::size_t n);
    static RatMatrix from_rows(std::initializer_list<std::initializer_list<long>> rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rat& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Rat& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    RatMatrix transposed() const;

    /// Horizontal concatenation [this | other]; row counts must agree.
    RatMatrix augmented(const RatMatrix& other) const;

    bool operator==(const RatMatrix& other) const {
        return rows_ == other.rows_ && cols_ == other.cols_ && a_ == other.a_;
    }

private:
    std::size_t rows_, cols_;
    std::vector<Rat> a_;
};

/// Rank over Q by fraction-free (Bareiss) elimination on the row-scaled
/// integer matrix. Pivots are chosen deterministically: first nonzero row
/// in column order.
std::size_t rank_exact(const RatMatrix& m);

/// Determinant of a square matrix, fraction-free on the integer scaling.
Rat determinant(const RatMatrix& m);

struct Rref {
    RatMatrix m;
    std::vector<std::size_t> pivot_cols;
};

/// Reduced row echelon form with the same deterministic pivot rule.
Rref reduced_row_echelon(const RatMatrix& m);

/// Basis of the right null space, one vector per free column, each scaled
/// so its first nonzero entry is 1. Size = cols - rank.
std::vector<std::vector<Rat>> kernel_basis(const RatMatrix& m);

/// Exact solve of A x = b. Returns nullopt when inconsistent; free
/// variables (if any) are set to zero, so the result is the unique
/// solution whenever A has full column rank.
std::optional<std::vector<Rat>> solve_exact(const RatMatrix& a, const std::vector<Rat>& b);

std::vector<Rat> matvec(const RatMatrix& a, const std::vector<Rat>& x);

} // namespace apolar

#endif
