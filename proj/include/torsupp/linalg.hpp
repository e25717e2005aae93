#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "torsupp/rational.hpp"

namespace torsupp {

using IntVector = std::vector<Int>;

inline bool is_zero(const IntVector& v) {
    for (const Int& e : v)
        if (e != 0)
            return false;
    return true;
}

inline Int dot(const IntVector& a, const IntVector& b) {
    if (a.size() != b.size())
        throw internal_error("dot product dimension mismatch");
    Int sum = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        sum += a[i] * b[i];
    return sum;
}

inline Rational dot(const IntVector& a, const std::vector<Rational>& x) {
    if (a.size() != x.size())
        throw internal_error("dot product dimension mismatch");
    Rational sum = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        sum += Rational(a[i]) * x[i];
    return sum;
}

struct PrimitivePart {
    IntVector vector;  // gcd 1, first nonzero entry positive
    Int gcd;           // >= 1
    bool flipped;      // input was -gcd * vector
};

inline PrimitivePart primitive_part(const IntVector& v) {
    if (is_zero(v))
        throw input_error("primitive_part of the zero vector");
    Int d = 0;
    for (const Int& e : v)
        d = gcd(d, e); // boost gcd is nonnegative
    IntVector reduced;
    reduced.reserve(v.size());
    for (const Int& e : v)
        reduced.push_back(e / d);
    bool flipped = false;
    for (const Int& e : reduced) {
        if (e != 0) {
            flipped = e < 0;
            break;
        }
    }
    if (flipped)
        for (Int& e : reduced)
            e = -e;
    return PrimitivePart{std::move(reduced), std::move(d), flipped};
}

class RatMatrix {
  public:
    RatMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    static RatMatrix from_rows(const std::vector<std::vector<Rational>>& rows) {
        const std::size_t cols = rows.empty() ? 0 : rows.front().size();
        RatMatrix m(rows.size(), cols);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != cols)
                throw input_error("ragged matrix rows");
            for (std::size_t j = 0; j < cols; ++j)
                m.at(i, j) = rows[i][j];
        }
        return m;
    }

    static RatMatrix from_int_rows(const std::vector<IntVector>& rows) {
        const std::size_t cols = rows.empty() ? 0 : rows.front().size();
        RatMatrix m(rows.size(), cols);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != cols)
                throw input_error("ragged matrix rows");
            for (std::size_t j = 0; j < cols; ++j)
                m.at(i, j) = Rational(rows[i][j]);
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    RatMatrix transposed() const {
        RatMatrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                t.at(j, i) = at(i, j);
        return t;
    }

  private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Rational> data_;
};

// Rank over the rationals by fraction-free (Bareiss) elimination on the
// matrix with denominators cleared row by row.
inline std::size_t rank(const RatMatrix& m) {
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    std::vector<std::vector<Int>> a(rows, std::vector<Int>(cols));
    for (std::size_t i = 0; i < rows; ++i) {
        Int scale = 1;
        for (std::size_t j = 0; j < cols; ++j)
            scale = lcm(scale, denominator(m.at(i, j)));
        for (std::size_t j = 0; j < cols; ++j)
            a[i][j] = numerator(m.at(i, j)) * (scale / denominator(m.at(i, j)));
    }
    Int prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pivot = r;
        while (pivot < rows && a[pivot][c] == 0)
            ++pivot;
        if (pivot == rows)
            continue;
        std::swap(a[r], a[pivot]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j)
                a[i][j] = (a[r][c] * a[i][j] - a[i][c] * a[r][j]) / prev; // exact
            a[i][c] = 0;
        }
        prev = a[r][c];
        ++r;
    }
    return r;
}

// The equation <normal, x> + constant = 0.
struct LinearEquation {
    IntVector normal;
    Rational constant;
};

struct AffineSubspace {
    std::vector<Rational> basepoint;
    std::vector<std::vector<Rational>> basis; // direction vectors, independent

    std::size_t dim() const { return basis.size(); }

    bool satisfies(const LinearEquation& eq) const {
        if (dot(eq.normal, basepoint) + eq.constant != 0)
            return false;
        for (const auto& v : basis)
            if (dot(eq.normal, v) != 0)
                return false;
        return true;
    }
};

// Common solution set of the equations, or absent when inconsistent.
inline std::optional<AffineSubspace>
affine_intersection(std::size_t dimension, const std::vector<LinearEquation>& equations) {
    for (const auto& eq : equations) {
        if (eq.normal.size() != dimension)
            throw input_error("hyperplane dimension mismatch");
        if (is_zero(eq.normal))
            throw input_error("zero normal vector");
    }
    const std::size_t m = equations.size();
    // Augmented system [A | b] for A x = b with b = -constant.
    std::vector<std::vector<Rational>> aug(m, std::vector<Rational>(dimension + 1));
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < dimension; ++j)
            aug[i][j] = Rational(equations[i].normal[j]);
        aug[i][dimension] = -equations[i].constant;
    }
    // Gauss-Jordan to reduced row echelon form.
    std::vector<std::size_t> pivot_cols;
    std::size_t row = 0;
    for (std::size_t col = 0; col < dimension && row < m; ++col) {
        std::size_t pivot = row;
        while (pivot < m && aug[pivot][col] == 0)
            ++pivot;
        if (pivot == m)
            continue;
        std::swap(aug[row], aug[pivot]);
        const Rational lead = aug[row][col];
        for (std::size_t j = col; j <= dimension; ++j)
            aug[row][j] /= lead;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == row || aug[i][col] == 0)
                continue;
            const Rational factor = aug[i][col];
            for (std::size_t j = col; j <= dimension; ++j)
                aug[i][j] -= factor * aug[row][j];
        }
        pivot_cols.push_back(col);
        ++row;
    }
    for (std::size_t i = row; i < m; ++i)
        if (aug[i][dimension] != 0)
            return std::nullopt;

    AffineSubspace result;
    result.basepoint.assign(dimension, Rational(0));
    for (std::size_t k = 0; k < pivot_cols.size(); ++k)
        result.basepoint[pivot_cols[k]] = aug[k][dimension];
    std::vector<bool> is_pivot(dimension, false);
    for (std::size_t col : pivot_cols)
        is_pivot[col] = true;
    for (std::size_t col = 0; col < dimension; ++col) {
        if (is_pivot[col])
            continue;
        std::vector<Rational> direction(dimension, Rational(0));
        direction[col] = 1;
        for (std::size_t k = 0; k < pivot_cols.size(); ++k)
            direction[pivot_cols[k]] = -aug[k][col];
        result.basis.push_back(std::move(direction));
    }
    return result;
}

// Coefficients x with sum_j x_j * spanning[j] = target, if target lies in the
// span. Unique when the spanning vectors are independent.
inline std::optional<std::vector<Rational>>
solve_in_span(const std::vector<IntVector>& spanning, const IntVector& target) {
    if (spanning.empty()) {
        if (is_zero(target))
            return std::vector<Rational>{};
        return std::nullopt;
    }
    const std::size_t n = spanning.front().size();
    if (target.size() != n)
        throw internal_error("solve_in_span dimension mismatch");
    const std::size_t k = spanning.size();
    // Columns are the spanning vectors; solve [S | target] by Gauss-Jordan.
    std::vector<std::vector<Rational>> aug(n, std::vector<Rational>(k + 1));
    for (std::size_t j = 0; j < k; ++j) {
        if (spanning[j].size() != n)
            throw internal_error("solve_in_span ragged spanning set");
        for (std::size_t i = 0; i < n; ++i)
            aug[i][j] = Rational(spanning[j][i]);
    }
    for (std::size_t i = 0; i < n; ++i)
        aug[i][k] = Rational(target[i]);
    std::vector<std::size_t> pivot_cols;
    std::size_t row = 0;
    for (std::size_t col = 0; col < k && row < n; ++col) {
        std::size_t pivot = row;
        while (pivot < n && aug[pivot][col] == 0)
            ++pivot;
        if (pivot == n)
            continue;
        std::swap(aug[row], aug[pivot]);
        const Rational lead = aug[row][col];
        for (std::size_t j = col; j <= k; ++j)
            aug[row][j] /= lead;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == row || aug[i][col] == 0)
                continue;
            const Rational factor = aug[i][col];
            for (std::size_t j = col; j <= k; ++j)
                aug[i][j] -= factor * aug[row][j];
        }
        pivot_cols.push_back(col);
        ++row;
    }
    for (std::size_t i = row; i < n; ++i)
        if (aug[i][k] != 0)
            return std::nullopt;
    std::vector<Rational> solution(k, Rational(0));
    for (std::size_t p = 0; p < pivot_cols.size(); ++p)
        solution[pivot_cols[p]] = aug[p][k];
    return solution;
}

} // namespace torsupp
