#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <variant>
#include <vector>

#include "mcube/errors.hpp"
#include "mcube/rational.hpp"

namespace mcube {

class RatVector {
public:
    explicit RatVector(std::size_t size) : e_(size) {
        if (size == 0) throw InvalidArgumentError("empty vector");
    }

    RatVector(std::initializer_list<Rational> init) : e_(init) {
        if (e_.empty()) throw InvalidArgumentError("empty vector");
    }

    explicit RatVector(std::vector<Rational> entries) : e_(std::move(entries)) {
        if (e_.empty()) throw InvalidArgumentError("empty vector");
    }

    static RatVector ones(std::size_t size) {
        RatVector v(size);
        for (auto& x : v.e_) x = 1;
        return v;
    }

    static RatVector unit(std::size_t size, std::size_t i) {
        RatVector v(size);
        v[i] = 1;
        return v;
    }

    std::size_t size() const { return e_.size(); }
    Rational& operator[](std::size_t i) { return e_[i]; }
    const Rational& operator[](std::size_t i) const { return e_[i]; }

    auto begin() const { return e_.begin(); }
    auto end() const { return e_.end(); }

    bool is_zero() const {
        for (const auto& x : e_)
            if (!x.is_zero()) return false;
        return true;
    }

    friend bool operator==(const RatVector& a, const RatVector& b) { return a.e_ == b.e_; }

private:
    std::vector<Rational> e_;
};

inline Rational dot(const RatVector& a, const RatVector& b) {
    if (a.size() != b.size()) throw DimensionMismatchError("dot: length mismatch");
    Rational s;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline Rational sum(const RatVector& v) {
    Rational s;
    for (const auto& x : v) s += x;
    return s;
}

inline Rational norm_squared(const RatVector& v) { return dot(v, v); }

inline RatVector operator+(const RatVector& a, const RatVector& b) {
    if (a.size() != b.size()) throw DimensionMismatchError("vector add: length mismatch");
    RatVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline RatVector operator-(const RatVector& a, const RatVector& b) {
    if (a.size() != b.size()) throw DimensionMismatchError("vector sub: length mismatch");
    RatVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline RatVector operator*(const Rational& c, const RatVector& v) {
    RatVector r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = c * v[i];
    return r;
}

// Dense row-major rational matrix.
class RatMatrix {
public:
    RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), e_(rows * cols) {
        if (rows == 0 || cols == 0) throw InvalidArgumentError("empty matrix");
    }

    static RatMatrix identity(std::size_t n) {
        RatMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    static RatMatrix from_rows(std::initializer_list<std::initializer_list<Rational>> rows) {
        if (rows.size() == 0) throw InvalidArgumentError("empty matrix");
        const std::size_t cols = rows.begin()->size();
        RatMatrix m(rows.size(), cols);
        std::size_t i = 0;
        for (const auto& row : rows) {
            if (row.size() != cols) throw DimensionMismatchError("ragged rows");
            std::size_t j = 0;
            for (const auto& x : row) m(i, j++) = x;
            ++i;
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Rational& operator()(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

    bool is_symmetric() const {
        if (!is_square()) return false;
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = i + 1; j < cols_; ++j)
                if ((*this)(i, j) != (*this)(j, i)) return false;
        return true;
    }

    RatMatrix transpose() const {
        RatMatrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    RatVector row(std::size_t i) const {
        RatVector v(cols_);
        for (std::size_t j = 0; j < cols_; ++j) v[j] = (*this)(i, j);
        return v;
    }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
    }

    friend bool operator==(const RatMatrix& a, const RatMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
    }

private:
    std::size_t rows_, cols_;
    std::vector<Rational> e_;
};

inline RatVector operator*(const RatMatrix& m, const RatVector& v) {
    if (m.cols() != v.size()) throw DimensionMismatchError("mat*vec: dimension mismatch");
    RatVector r(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Rational s;
        for (std::size_t j = 0; j < m.cols(); ++j) s += m(i, j) * v[j];
        r[i] = s;
    }
    return r;
}

inline RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
    if (a.cols() != b.rows()) throw DimensionMismatchError("mat*mat: dimension mismatch");
    RatMatrix r(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a(i, k).is_zero()) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) r(i, j) += a(i, k) * b(k, j);
        }
    return r;
}

namespace detail {

// In-place reduced row echelon form over the leading lhs_cols columns.
// Pivot rule: for each column in order, the first remaining row with a
// nonzero entry (row-major scan); keeps kernels and solutions deterministic.
// Returns the pivot columns in order.
inline std::vector<std::size_t> rref(RatMatrix& a, std::size_t lhs_cols) {
    std::vector<std::size_t> pivots;
    std::size_t next_row = 0;
    for (std::size_t col = 0; col < lhs_cols && next_row < a.rows(); ++col) {
        std::size_t pivot_row = next_row;
        while (pivot_row < a.rows() && a(pivot_row, col).is_zero()) ++pivot_row;
        if (pivot_row == a.rows()) continue;
        a.swap_rows(next_row, pivot_row);
        const Rational inv = a(next_row, col).reciprocal();
        for (std::size_t j = col; j < a.cols(); ++j) a(next_row, j) *= inv;
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == next_row || a(i, col).is_zero()) continue;
            const Rational f = a(i, col);
            for (std::size_t j = col; j < a.cols(); ++j) a(i, j) -= f * a(next_row, j);
        }
        pivots.push_back(col);
        ++next_row;
    }
    return pivots;
}

}  // namespace detail

inline std::size_t rank(const RatMatrix& m) {
    RatMatrix work = m;
    return detail::rref(work, m.cols()).size();
}

struct SolveUnique {
    RatVector solution;
};

struct SolveParticular {
    RatVector solution;                 // free variables set to zero
    std::vector<RatVector> null_basis;  // echelon-derived, free variables 1 in index order
};

struct SolveInconsistent {};

using SolveResult = std::variant<SolveUnique, SolveParticular, SolveInconsistent>;

// Exact solve of M x = rhs for square M, including singular systems.
// The returned solution is verified by back-substitution.
inline SolveResult solve(const RatMatrix& m, const RatVector& rhs) {
    if (!m.is_square()) throw DimensionMismatchError("solve: matrix not square");
    const std::size_t n = m.rows();
    if (rhs.size() != n) throw DimensionMismatchError("solve: rhs length mismatch");

    RatMatrix aug(n, n + 1);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n) = rhs[i];
    }
    const std::vector<std::size_t> pivots = detail::rref(aug, n);

    for (std::size_t i = pivots.size(); i < n; ++i)
        if (!aug(i, n).is_zero()) return SolveInconsistent{};

    RatVector x(n);
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug(r, n);

    if (m * x != rhs) throw Error("solve: back-substitution check failed");

    if (pivots.size() == n) return SolveUnique{std::move(x)};

    std::vector<RatVector> basis;
    std::size_t next_pivot = 0;
    for (std::size_t f = 0; f < n; ++f) {
        if (next_pivot < pivots.size() && pivots[next_pivot] == f) {
            ++next_pivot;
            continue;
        }
        RatVector v(n);
        v[f] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -aug(r, f);
        basis.push_back(std::move(v));
    }
    return SolveParticular{std::move(x), std::move(basis)};
}

// Exact inverse via Gauss-Jordan on [M | I]; M M^{-1} = I exactly.
inline RatMatrix inverse(const RatMatrix& m) {
    if (!m.is_square()) throw DimensionMismatchError("inverse: matrix not square");
    const std::size_t n = m.rows();
    RatMatrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = 1;
    }
    if (detail::rref(aug, n).size() != n) throw SingularMatrixError("inverse: singular matrix");
    RatMatrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
    return inv;
}

// Exact determinant by fraction-free (Bareiss) elimination: rows are scaled
// to integers, eliminated over mpz with exact divisions, and the scale is
// divided back out. Keeps intermediate growth polynomial.
inline Rational determinant(const RatMatrix& m) {
    if (!m.is_square()) throw DimensionMismatchError("determinant: matrix not square");
    const std::size_t n = m.rows();

    std::vector<mpz_class> a(n * n);
    mpz_class scale(1);
    for (std::size_t i = 0; i < n; ++i) {
        mpz_class row_lcm(1);
        for (std::size_t j = 0; j < n; ++j)
            mpz_lcm(row_lcm.get_mpz_t(), row_lcm.get_mpz_t(), m(i, j).denominator().get_mpz_t());
        for (std::size_t j = 0; j < n; ++j) {
            const Rational& x = m(i, j);
            a[i * n + j] = x.numerator() * (row_lcm / x.denominator());
        }
        scale *= row_lcm;
    }

    int sign = 1;
    mpz_class prev(1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t pivot = k;
        while (pivot < n && a[pivot * n + k] == 0) ++pivot;
        if (pivot == n) return Rational(0);
        if (pivot != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a[k * n + j], a[pivot * n + j]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                mpz_class t = a[i * n + j] * a[k * n + k] - a[i * n + k] * a[k * n + j];
                mpz_divexact(a[i * n + j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            a[i * n + k] = 0;
        }
        prev = a[k * n + k];
    }

    mpz_class det = a[(n - 1) * n + (n - 1)];
    if (sign < 0) det = -det;
    return Rational(det, scale);
}

struct PsdAnalysis {
    bool semidefinite;
    // When not semidefinite: an exact v with v^T S v < 0.
    std::optional<RatVector> counterexample;
};

// Exact positive-semidefiniteness test for a symmetric rational matrix via
// pivoted symmetric elimination. S is PSD iff every pivot encountered is
// positive and every zero diagonal entry of a residual block has an all-zero
// row in that block. A congruence transform is carried along so that failures
// come with an exact certificate vector. No floating point anywhere.
inline PsdAnalysis analyze_positive_semidefinite(const RatMatrix& s) {
    if (!s.is_symmetric()) throw NotSymmetricError("PSD test requires a symmetric matrix");
    const std::size_t n = s.rows();
    RatMatrix r = s;
    RatMatrix c = RatMatrix::identity(n);  // residual = (C S C^T) on active indices
    std::vector<bool> active(n, true);

    auto congruence_row = [&](std::size_t i) {
        RatVector v(n);
        for (std::size_t j = 0; j < n; ++j) v[j] = c(i, j);
        return v;
    };

    std::size_t remaining = n;
    while (remaining > 0) {
        std::size_t pivot = n;
        for (std::size_t i = 0; i < n; ++i) {
            if (!active[i]) continue;
            const int sg = r(i, i).sign();
            if (sg < 0) return {false, congruence_row(i)};
            if (sg > 0 && pivot == n) pivot = i;
        }
        // Zero diagonal entries must have an all-zero residual row.
        for (std::size_t i = 0; i < n; ++i) {
            if (!active[i] || !r(i, i).is_zero()) continue;
            for (std::size_t j = 0; j < n; ++j) {
                if (!active[j] || j == i || r(i, j).is_zero()) continue;
                // u = t e_i + e_j with u^T R u = 2 t r_ij + r_jj = -1.
                const Rational t = -(r(j, j) + 1) / (2 * r(i, j));
                RatVector v(n);
                for (std::size_t k = 0; k < n; ++k) v[k] = t * c(i, k) + c(j, k);
                return {false, std::move(v)};
            }
            active[i] = false;
            --remaining;
        }
        if (pivot == n) break;  // all remaining diagonals were zero with zero rows

        for (std::size_t j = 0; j < n; ++j) {
            if (!active[j] || j == pivot) continue;
            if (r(j, pivot).is_zero()) continue;
            const Rational f = r(j, pivot) / r(pivot, pivot);
            for (std::size_t k = 0; k < n; ++k) c(j, k) -= f * c(pivot, k);
            for (std::size_t k = 0; k < n; ++k) {
                if (!active[k] || k == pivot) continue;
                r(j, k) -= f * r(pivot, k);
            }
            r(j, pivot) = 0;
        }
        active[pivot] = false;
        --remaining;
    }
    return {true, std::nullopt};
}

// True iff x^T M x <= 0 for all x, decided exactly.
inline bool is_negative_semidefinite(const RatMatrix& m) {
    if (!m.is_symmetric()) throw NotSymmetricError("semidefiniteness test requires symmetry");
    RatMatrix neg(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) neg(i, j) = -m(i, j);
    return analyze_positive_semidefinite(neg).semidefinite;
}

}  // namespace mcube
