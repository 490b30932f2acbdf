#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "shiftgb/field.hpp"
#include "shiftgb/polynomial.hpp"
#include "shiftgb/rng.hpp"

namespace shiftgb {

// Dense row-major matrix of field elements. May have zero rows (the F block
// for d = 1 is 0 x n); all entries share one FieldSpec.
class ScalarMatrix {
  public:
    ScalarMatrix(int rows, int cols, const FieldSpec& fs)
        : rows_(rows), cols_(cols), field_(fs),
          entries_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols),
                   Scalar::zero(fs)) {
        if (rows < 0 || cols < 0)
            throw dimension_error("negative matrix dimension");
    }

    static ScalarMatrix identity(int n, const FieldSpec& fs) {
        ScalarMatrix m(n, n, fs);
        for (int i = 0; i < n; ++i)
            m.set(i, i, Scalar::one(fs));
        return m;
    }

    static ScalarMatrix from_rows(const std::vector<std::vector<Scalar>>& rows,
                                  const FieldSpec& fs) {
        const int r = static_cast<int>(rows.size());
        const int c = r == 0 ? 0 : static_cast<int>(rows.front().size());
        ScalarMatrix m(r, c, fs);
        for (int i = 0; i < r; ++i) {
            if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != c)
                throw dimension_error("ragged row list");
            for (int j = 0; j < c; ++j)
                m.set(i, j, rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
        }
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const FieldSpec& field() const { return field_; }

    const Scalar& at(int r, int c) const { return entries_[index(r, c)]; }

    void set(int r, int c, Scalar v) {
        if (v.spec() != field_)
            throw domain_mismatch_error("entry field mismatch");
        entries_[index(r, c)] = std::move(v);
    }

    ScalarMatrix transposed() const {
        ScalarMatrix out(cols_, rows_, field_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j)
                out.set(j, i, at(i, j));
        return out;
    }

    // Column selection by 0-based indices, in the given order.
    ScalarMatrix with_columns(const std::vector<int>& idx) const {
        ScalarMatrix out(rows_, static_cast<int>(idx.size()), field_);
        for (int j = 0; j < static_cast<int>(idx.size()); ++j) {
            const int src = idx[static_cast<std::size_t>(j)];
            if (src < 0 || src >= cols_)
                throw dimension_error("column index out of range");
            for (int i = 0; i < rows_; ++i)
                out.set(i, j, at(i, src));
        }
        return out;
    }

    friend ScalarMatrix operator*(const ScalarMatrix& a, const ScalarMatrix& b) {
        if (a.field_ != b.field_)
            throw domain_mismatch_error("matrix product over different fields");
        if (a.cols_ != b.rows_)
            throw dimension_error("matrix product dimension mismatch");
        ScalarMatrix out(a.rows_, b.cols_, a.field_);
        for (int i = 0; i < a.rows_; ++i)
            for (int k = 0; k < a.cols_; ++k) {
                const Scalar& aik = a.at(i, k);
                if (aik.is_zero())
                    continue;
                for (int j = 0; j < b.cols_; ++j)
                    out.set(i, j, out.at(i, j) + aik * b.at(k, j));
            }
        return out;
    }

    friend bool operator==(const ScalarMatrix& a, const ScalarMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.field_ == b.field_ &&
               a.entries_ == b.entries_;
    }
    friend bool operator!=(const ScalarMatrix& a, const ScalarMatrix& b) { return !(a == b); }

  private:
    std::size_t index(int r, int c) const {
        if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
            throw dimension_error("matrix index out of range");
        return static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) +
               static_cast<std::size_t>(c);
    }

    int rows_, cols_;
    FieldSpec field_;
    std::vector<Scalar> entries_;
};

// Exact determinant by fraction-free Bareiss elimination with row pivoting.
// Every division below is exact; det(0x0) is 1.
inline Scalar scalar_determinant(const ScalarMatrix& m) {
    if (m.rows() != m.cols())
        throw dimension_error("determinant of a non-square matrix");
    const int n = m.rows();
    const FieldSpec& fs = m.field();
    if (n == 0)
        return Scalar::one(fs);

    std::vector<std::vector<Scalar>> a(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        a[static_cast<std::size_t>(i)].reserve(static_cast<std::size_t>(n));
        for (int j = 0; j < n; ++j)
            a[static_cast<std::size_t>(i)].push_back(m.at(i, j));
    }

    bool negate = false;
    Scalar prev = Scalar::one(fs);
    for (int k = 0; k + 1 < n; ++k) {
        int pivot = -1;
        for (int r = k; r < n; ++r) {
            if (!a[static_cast<std::size_t>(r)][static_cast<std::size_t>(k)].is_zero()) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0)
            return Scalar::zero(fs);
        if (pivot != k) {
            std::swap(a[static_cast<std::size_t>(pivot)], a[static_cast<std::size_t>(k)]);
            negate = !negate;
        }
        const auto& rowk = a[static_cast<std::size_t>(k)];
        for (int i = k + 1; i < n; ++i) {
            auto& rowi = a[static_cast<std::size_t>(i)];
            for (int j = k + 1; j < n; ++j) {
                rowi[static_cast<std::size_t>(j)] =
                    (rowi[static_cast<std::size_t>(j)] * rowk[static_cast<std::size_t>(k)] -
                     rowi[static_cast<std::size_t>(k)] * rowk[static_cast<std::size_t>(j)]) /
                    prev;
            }
            rowi[static_cast<std::size_t>(k)] = Scalar::zero(fs);
        }
        prev = rowk[static_cast<std::size_t>(k)];
    }
    Scalar det = a[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(n - 1)];
    return negate ? -det : det;
}

// Exact rank by Gaussian elimination over the field.
inline int scalar_rank(const ScalarMatrix& m) {
    const int rows = m.rows(), cols = m.cols();
    std::vector<std::vector<Scalar>> a;
    a.reserve(static_cast<std::size_t>(rows));
    for (int i = 0; i < rows; ++i) {
        std::vector<Scalar> row;
        row.reserve(static_cast<std::size_t>(cols));
        for (int j = 0; j < cols; ++j)
            row.push_back(m.at(i, j));
        a.push_back(std::move(row));
    }
    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r) {
            if (!a[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)].is_zero()) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0)
            continue;
        std::swap(a[static_cast<std::size_t>(pivot)], a[static_cast<std::size_t>(rank)]);
        const Scalar inv = a[static_cast<std::size_t>(rank)][static_cast<std::size_t>(col)].inverse();
        for (int r = rank + 1; r < rows; ++r) {
            const Scalar factor =
                a[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] * inv;
            if (factor.is_zero())
                continue;
            for (int j = col; j < cols; ++j) {
                a[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)] =
                    a[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)] -
                    factor * a[static_cast<std::size_t>(rank)][static_cast<std::size_t>(j)];
            }
        }
        ++rank;
    }
    return rank;
}

// Dense matrix over the polynomial ring; all entries share one monomial
// order and field.
class PolyMatrix {
  public:
    PolyMatrix(int rows, int cols, const MonomialOrder& ord, const FieldSpec& fs)
        : rows_(rows), cols_(cols), order_(ord), field_(fs),
          entries_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols),
                   Polynomial::zero(ord, fs)) {
        if (rows < 0 || cols < 0)
            throw dimension_error("negative matrix dimension");
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const MonomialOrder& order() const { return order_; }
    const FieldSpec& field() const { return field_; }

    const Polynomial& at(int r, int c) const { return entries_[index(r, c)]; }

    void set(int r, int c, Polynomial v) {
        if (v.order() != order_)
            throw dimension_error("entry monomial order mismatch");
        if (v.field() != field_)
            throw domain_mismatch_error("entry field mismatch");
        entries_[index(r, c)] = std::move(v);
    }

    PolyMatrix with_columns(const std::vector<int>& idx) const {
        PolyMatrix out(rows_, static_cast<int>(idx.size()), order_, field_);
        for (int j = 0; j < static_cast<int>(idx.size()); ++j) {
            const int src = idx[static_cast<std::size_t>(j)];
            if (src < 0 || src >= cols_)
                throw dimension_error("column index out of range");
            for (int i = 0; i < rows_; ++i)
                out.set(i, j, at(i, src));
        }
        return out;
    }

    ScalarMatrix evaluate(const std::vector<Scalar>& point) const {
        ScalarMatrix out(rows_, cols_, field_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j)
                out.set(i, j, at(i, j).evaluate(point));
        return out;
    }

    friend bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.order_ == b.order_ &&
               a.field_ == b.field_ && a.entries_ == b.entries_;
    }
    friend bool operator!=(const PolyMatrix& a, const PolyMatrix& b) { return !(a == b); }

  private:
    std::size_t index(int r, int c) const {
        if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
            throw dimension_error("matrix index out of range");
        return static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) +
               static_cast<std::size_t>(c);
    }

    int rows_, cols_;
    MonomialOrder order_;
    FieldSpec field_;
    std::vector<Polynomial> entries_;
};

inline constexpr int kDefaultDeterminantCap = 12;

// Exact symbolic determinant by cofactor expansion along rows, sparsest rows
// first, memoized on the set of remaining columns (sparse: only subsets that
// sparsity actually reaches are stored).
inline Polynomial poly_determinant(const PolyMatrix& m, int side_cap = kDefaultDeterminantCap) {
    if (m.rows() != m.cols())
        throw dimension_error("determinant of a non-square matrix");
    const int n = m.rows();
    if (n > side_cap)
        throw resource_limit_error("matrix side " + std::to_string(n) +
                                   " exceeds the determinant cap " + std::to_string(side_cap));
    if (n > 63)
        throw resource_limit_error("matrix side " + std::to_string(n) +
                                   " exceeds the 63-column mask limit");
    const Polynomial zero = Polynomial::zero(m.order(), m.field());
    if (n == 0)
        return Polynomial::constant(Scalar::one(m.field()), m.order());

    // Rows with many zero entries first; stable sort keeps this
    // deterministic, and the permutation sign is folded into the result.
    std::vector<int> row_order(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        row_order[static_cast<std::size_t>(i)] = i;
    std::vector<int> zero_count(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (m.at(i, j).is_zero())
                ++zero_count[static_cast<std::size_t>(i)];
    std::stable_sort(row_order.begin(), row_order.end(),
                     [&](int a, int b) { return zero_count[static_cast<std::size_t>(a)] >
                                                zero_count[static_cast<std::size_t>(b)]; });
    bool negate = false;
    {
        std::vector<int> perm = row_order;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (perm[static_cast<std::size_t>(i)] > perm[static_cast<std::size_t>(j)])
                    negate = !negate;
    }

    std::unordered_map<std::uint64_t, Polynomial> memo;
    const auto rec = [&](auto&& self, std::uint64_t colmask) -> const Polynomial& {
        if (auto it = memo.find(colmask); it != memo.end())
            return it->second;
        const int remaining = __builtin_popcountll(colmask);
        if (remaining == 0)
            return memo.emplace(colmask, Polynomial::constant(Scalar::one(m.field()), m.order()))
                .first->second;
        const int row = row_order[static_cast<std::size_t>(n - remaining)];
        Polynomial acc = zero;
        int position = 0; // index of the column within the remaining set
        for (int col = 0; col < n; ++col) {
            if (!(colmask & (std::uint64_t(1) << col)))
                continue;
            const Polynomial& entry = m.at(row, col);
            if (!entry.is_zero()) {
                const Polynomial& sub = self(self, colmask & ~(std::uint64_t(1) << col));
                Polynomial prod = entry * sub;
                acc = (position % 2 == 0) ? acc + prod : acc - prod;
            }
            ++position;
        }
        return memo.emplace(colmask, std::move(acc)).first->second;
    };
    const Polynomial& det = rec(rec, n == 63 ? ~std::uint64_t(0) >> 1 : (std::uint64_t(1) << n) - 1);
    return negate ? -det : det;
}

// Uniformly random matrix: integer entries in [lo, hi] over the rationals,
// uniform residues over a prime field. Draws row-major, one entry at a time.
inline ScalarMatrix random_matrix(int rows, int cols, const FieldSpec& fs, Rng& rng,
                                  long long lo = -9, long long hi = 9) {
    ScalarMatrix out(rows, cols, fs);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) {
            if (fs.is_rationals())
                out.set(i, j, Scalar::from_int(rng.range(lo, hi), fs));
            else
                out.set(i, j, Scalar::from_residue(rng.below(fs.modulus()), fs));
        }
    return out;
}

} // namespace shiftgb
