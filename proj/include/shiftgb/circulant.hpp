#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "shiftgb/combinatorics.hpp"
#include "shiftgb/matrix.hpp"
#include "shiftgb/monomial.hpp"
#include "shiftgb/polynomial.hpp"

namespace shiftgb {

// Problem size: vectors live in F^n, the free window is x_1..x_d.
struct ShiftShape {
    int n;
    int d;

    ShiftShape(int n_, int d_) : n(n_), d(d_) {
        if (n < 1 || d < 1 || d > n)
            throw value_error("shift shape requires 1 <= d <= n");
    }

    // Number of shift rows, and the degree of every maximal minor.
    int minor_size() const { return n - d + 1; }

    friend bool operator==(const ShiftShape& a, const ShiftShape& b) {
        return a.n == b.n && a.d == b.d;
    }
    friend bool operator!=(const ShiftShape& a, const ShiftShape& b) { return !(a == b); }
};

// A strictly increasing set of n-d+1 column indices in {1..n}, selecting one
// maximal minor of the shift matrix. Any such set automatically satisfies the
// band condition 0 <= c_i - i <= d-1, so every selected diagonal entry lies
// inside the x-band.
class ColumnSet {
  public:
    ColumnSet(std::vector<int> indices, const ShiftShape& shape)
        : indices_(std::move(indices)), shape_(shape) {
        if (static_cast<int>(indices_.size()) != shape.minor_size())
            throw dimension_error("column set must have n-d+1 indices");
        for (std::size_t i = 0; i < indices_.size(); ++i) {
            if (indices_[i] < 1 || indices_[i] > shape.n)
                throw dimension_error("column index out of range");
            if (i > 0 && indices_[i] <= indices_[i - 1])
                throw dimension_error("column indices must be strictly increasing");
        }
    }

    const std::vector<int>& indices() const { return indices_; } // 1-based
    const ShiftShape& shape() const { return shape_; }

    // The complement in {1..n}, ascending (d-1 indices).
    std::vector<int> complement() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(shape_.d - 1));
        std::size_t k = 0;
        for (int c = 1; c <= shape_.n; ++c) {
            if (k < indices_.size() && indices_[k] == c)
                ++k;
            else
                out.push_back(c);
        }
        return out;
    }

    std::string str() const {
        std::string out = "{";
        for (std::size_t i = 0; i < indices_.size(); ++i) {
            if (i)
                out += ',';
            out += std::to_string(indices_[i]);
        }
        return out + "}";
    }

    friend bool operator==(const ColumnSet& a, const ColumnSet& b) {
        return a.shape_ == b.shape_ && a.indices_ == b.indices_;
    }
    friend bool operator!=(const ColumnSet& a, const ColumnSet& b) { return !(a == b); }

  private:
    std::vector<int> indices_;
    ShiftShape shape_;
};

// All column sets for the shape, in lexicographic order.
inline std::vector<ColumnSet> all_column_sets(const ShiftShape& shape) {
    std::vector<ColumnSet> out;
    for (auto& c : combinations_lex(shape.n, shape.minor_size()))
        out.emplace_back(std::move(c), shape);
    return out;
}

// Column selection by a ColumnSet (the X_H / F_H' operation).
inline PolyMatrix select_columns(const PolyMatrix& m, const ColumnSet& H) {
    std::vector<int> idx;
    idx.reserve(H.indices().size());
    for (int c : H.indices())
        idx.push_back(c - 1);
    return m.with_columns(idx);
}

inline ScalarMatrix select_columns(const ScalarMatrix& m, const ColumnSet& H) {
    std::vector<int> idx;
    idx.reserve(H.indices().size());
    for (int c : H.indices())
        idx.push_back(c - 1);
    return m.with_columns(idx);
}

// The (n-d+1) x n matrix whose rows are the successive right shifts of
// (x_1,...,x_d,0,...,0): row i carries x_1..x_d in columns i..i+d-1. The
// shifts stop at n-d, so the band never wraps around.
inline PolyMatrix build_shift_matrix(const ShiftShape& shape, const MonomialOrder& ord,
                                     const FieldSpec& fs) {
    if (ord.var_count() != shape.d)
        throw dimension_error("order variable count must equal d");
    PolyMatrix X(shape.minor_size(), shape.n, ord, fs);
    for (int i = 0; i < shape.minor_size(); ++i)
        for (int v = 1; v <= shape.d; ++v)
            X.set(i, i + v - 1,
                  Polynomial::from_monomial(Monomial::variable(v, shape.d), Scalar::one(fs), ord));
    return X;
}

inline PolyMatrix build_shift_matrix(const ShiftShape& shape) {
    return build_shift_matrix(shape, MonomialOrder::grevlex(shape.d), FieldSpec::rationals());
}

// The square n x n matrix [X; F]: the shift block stacked above the constant
// block F, whose entries are embedded as degree-0 polynomials.
inline PolyMatrix build_full_matrix(const ShiftShape& shape, const ScalarMatrix& F,
                                    const MonomialOrder& ord) {
    if (F.rows() != shape.d - 1 || F.cols() != shape.n)
        throw dimension_error("F must be (d-1) x n");
    PolyMatrix M(shape.n, shape.n, ord, F.field());
    const PolyMatrix X = build_shift_matrix(shape, ord, F.field());
    for (int i = 0; i < X.rows(); ++i)
        for (int j = 0; j < shape.n; ++j)
            M.set(i, j, X.at(i, j));
    for (int i = 0; i < F.rows(); ++i)
        for (int j = 0; j < shape.n; ++j)
            M.set(X.rows() + i, j, Polynomial::constant(F.at(i, j), ord));
    return M;
}

inline PolyMatrix build_full_matrix(const ShiftShape& shape, const ScalarMatrix& F) {
    return build_full_matrix(shape, F, MonomialOrder::grevlex(shape.d));
}

inline constexpr std::size_t kDefaultMinorCap = 500;

struct Minor {
    ColumnSet columns;
    Polynomial det;
};

// All maximal minors det X_H, one per column set H in lexicographic order.
// Each minor is homogeneous of degree n-d+1.
inline std::vector<Minor> enumerate_minors(const ShiftShape& shape, const MonomialOrder& ord,
                                           const FieldSpec& fs,
                                           std::size_t cap = kDefaultMinorCap) {
    const std::uint64_t count = binomial(shape.n, shape.minor_size());
    if (count > cap)
        throw resource_limit_error("minor count " + std::to_string(count) +
                                   " exceeds the cap " + std::to_string(cap));
    const PolyMatrix X = build_shift_matrix(shape, ord, fs);
    std::vector<Minor> out;
    out.reserve(static_cast<std::size_t>(count));
    for (ColumnSet& H : all_column_sets(shape)) {
        // q x q submatrices; q can exceed the default determinant cap only
        // when the minor cap would have fired first, but pass it explicitly
        Polynomial det = poly_determinant(select_columns(X, H), shape.n);
        out.push_back({std::move(H), std::move(det)});
    }
    return out;
}

inline std::vector<Minor> enumerate_minors(const ShiftShape& shape,
                                           std::size_t cap = kDefaultMinorCap) {
    return enumerate_minors(shape, MonomialOrder::grevlex(shape.d), FieldSpec::rationals(), cap);
}

// The exponent vector k with k_j = #{ i : c_i - i = j-1 }: the frequency
// table of the diagonal offsets of H. Its monomial has total degree n-d+1.
inline Monomial column_set_to_exponents(const ColumnSet& H) {
    const ShiftShape& shape = H.shape();
    std::vector<int> k(static_cast<std::size_t>(shape.d), 0);
    const auto& c = H.indices();
    for (std::size_t i = 0; i < c.size(); ++i) {
        const int offset = c[i] - static_cast<int>(i + 1); // in [0, d-1]
        ++k[static_cast<std::size_t>(offset)];
    }
    return Monomial(std::move(k));
}

// Inverse of column_set_to_exponents: expand k into the non-decreasing level
// sequence j_i (k_1 ones, then k_2 twos, ...), then c_i = j_i + i - 1, which
// is strictly increasing.
inline ColumnSet exponents_to_column_set(const Monomial& k, const ShiftShape& shape) {
    if (k.var_count() != shape.d)
        throw dimension_error("exponent vector must have d entries");
    if (k.degree() != shape.minor_size())
        throw value_error("exponent vector must have total degree n-d+1");
    std::vector<int> c;
    c.reserve(static_cast<std::size_t>(shape.minor_size()));
    int i = 1;
    for (int j = 1; j <= shape.d; ++j)
        for (int rep = 0; rep < k.exponent(j); ++rep, ++i)
            c.push_back(j + i - 1);
    return ColumnSet(std::move(c), shape);
}

// The grevlex leading monomial of det X_H, read directly off the diagonal of
// X_H: the diagonal entry in row i is x_{c_i - i + 1}.
inline Monomial leading_monomial_fast(const ColumnSet& H) {
    const ShiftShape& shape = H.shape();
    Monomial acc(shape.d);
    const auto& c = H.indices();
    for (std::size_t i = 0; i < c.size(); ++i) {
        const int var = c[i] - static_cast<int>(i + 1) + 1;
        acc = acc * Monomial::variable(var, shape.d);
    }
    return acc;
}

// det M as the signed sum over column sets H of det X_H * det F_{H'}, with
// sign (-1)^(sum of H + sum of the first n-d+1 row indices): the Laplace
// expansion along the shift rows. Equals the direct symbolic determinant of
// [X; F]. For d = 1, F is empty and det of the 0x0 complement is 1.
inline Polynomial laplace_expansion(const ShiftShape& shape, const ScalarMatrix& F,
                                    const MonomialOrder& ord,
                                    std::size_t cap = kDefaultMinorCap) {
    if (F.rows() != shape.d - 1 || F.cols() != shape.n)
        throw dimension_error("F must be (d-1) x n");
    const FieldSpec& fs = F.field();
    const int q = shape.minor_size();
    const int row_sum = q * (q + 1) / 2;

    Polynomial acc = Polynomial::zero(ord, fs);
    for (const Minor& minor : enumerate_minors(shape, ord, fs, cap)) {
        std::vector<int> comp0; // complement, 0-based
        for (int c : minor.columns.complement())
            comp0.push_back(c - 1);
        const Scalar f_det = scalar_determinant(F.with_columns(comp0));
        if (f_det.is_zero())
            continue;
        int col_sum = 0;
        for (int c : minor.columns.indices())
            col_sum += c;
        const bool negative = (row_sum + col_sum) % 2 != 0;
        acc = acc + minor.det.scaled(negative ? -f_det : f_det);
    }
    return acc;
}

inline Polynomial laplace_expansion(const ShiftShape& shape, const ScalarMatrix& F,
                                    std::size_t cap = kDefaultMinorCap) {
    return laplace_expansion(shape, F, MonomialOrder::grevlex(shape.d), cap);
}

} // namespace shiftgb
