#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "shiftgb/circulant.hpp"
#include "shiftgb/matrix.hpp"
#include "shiftgb/rng.hpp"

namespace shiftgb {

enum class Strategy { Random, Grid };

inline std::string strategy_token(Strategy s) { return s == Strategy::Grid ? "grid" : "random"; }

inline Strategy strategy_from_token(const std::string& tok) {
    if (tok == "grid")
        return Strategy::Grid;
    if (tok == "random")
        return Strategy::Random;
    throw value_error("bad strategy token '" + tok + "'");
}

// The completion problem: find x = (x_1..x_d, 0..0) whose n-d+1 right shifts
// extend the rows of F to a basis of F^n.
struct ProblemInstance {
    ShiftShape shape;
    ScalarMatrix F; // (d-1) x n

    ProblemInstance(const ShiftShape& s, ScalarMatrix f) : shape(s), F(std::move(f)) {
        if (F.rows() != shape.d - 1 || F.cols() != shape.n)
            throw dimension_error("F must be (d-1) x n");
    }

    const FieldSpec& field() const { return F.field(); }
};

struct CompletionResult {
    std::vector<Scalar> x; // the d free entries
    Scalar det_value;      // det M at x, nonzero
    Strategy strategy;
    std::uint64_t attempts; // candidate points evaluated
};

// The n x n matrix over the field whose first n-d+1 rows are the successive
// right shifts of the zero-padded x and whose last d-1 rows are F.
inline ScalarMatrix assemble_completed_matrix(const ShiftShape& shape, const ScalarMatrix& F,
                                              const std::vector<Scalar>& x) {
    if (static_cast<int>(x.size()) != shape.d)
        throw dimension_error("x must have d entries");
    if (F.rows() != shape.d - 1 || F.cols() != shape.n)
        throw dimension_error("F must be (d-1) x n");
    ScalarMatrix M(shape.n, shape.n, F.field());
    for (int i = 0; i < shape.minor_size(); ++i)
        for (int v = 0; v < shape.d; ++v)
            M.set(i, i + v, x[static_cast<std::size_t>(v)]);
    for (int i = 0; i < F.rows(); ++i)
        for (int j = 0; j < shape.n; ++j)
            M.set(shape.minor_size() + i, j, F.at(i, j));
    return M;
}

// True iff the shifts of the padded x together with the rows of F span F^n.
inline bool verify_completion(const ProblemInstance& inst, const std::vector<Scalar>& x) {
    for (const Scalar& v : x)
        if (v.spec() != inst.field())
            throw domain_mismatch_error("x entries must live in the instance field");
    return scalar_rank(assemble_completed_matrix(inst.shape, inst.F, x)) == inst.shape.n;
}

// The evaluation grid per coordinate: n-d+2 points, one more than the
// per-variable degree of det M, so a nonzero det M cannot vanish on the whole
// grid. Over Q these are 1..n-d+2; over F_p the same residues, or all of F_p
// (0..p-1) when p < n-d+2 and the guarantee is out of reach.
inline std::vector<Scalar> sample_set(const ShiftShape& shape, const FieldSpec& fs) {
    const std::uint64_t want = static_cast<std::uint64_t>(shape.minor_size()) + 1;
    std::vector<Scalar> out;
    if (fs.is_prime_field() && fs.modulus() < want) {
        for (std::uint64_t r = 0; r < fs.modulus(); ++r)
            out.push_back(Scalar::from_residue(r, fs));
    } else {
        for (std::uint64_t v = 1; v <= want; ++v)
            out.push_back(Scalar::from_int(static_cast<long long>(v), fs));
    }
    return out;
}

// Per-attempt failure bound for random sampling: degree/(grid size), the
// Schwartz-Zippel bound for det M (degree n-d+1) on a grid of sample_size
// points per coordinate. sample_size 0 means the default n-d+2.
inline rational_t sample_bound(const ShiftShape& shape, std::uint64_t sample_size = 0) {
    if (sample_size == 0)
        sample_size = static_cast<std::uint64_t>(shape.minor_size()) + 1;
    return rational_t(static_cast<std::uint64_t>(shape.minor_size()), sample_size);
}

inline constexpr std::uint64_t kDefaultMaxAttempts = 100000;

// Finds x with det M != 0, the constructive form of the basis-completion
// statement. Every candidate is evaluated along two independent routes (the
// Laplace polynomial at x, and the Bareiss determinant of the assembled
// matrix), which must agree exactly.
//
// Grid sweeps the sample grid in row-major order with x_d varying fastest;
// Random draws coordinates x_1..x_d uniformly from the same grid. Both stop
// at the first nonzero determinant. Over Q a full-grid sweep cannot fail
// (the grid has more points per axis than the degree), so exhaustion there
// is an internal error; over a small prime field it is reported honestly.
inline CompletionResult solve(const ProblemInstance& inst, Strategy strategy,
                              std::uint64_t seed = 42,
                              std::uint64_t max_attempts = kDefaultMaxAttempts) {
    const ShiftShape& shape = inst.shape;
    const int rank = scalar_rank(inst.F);
    if (rank != shape.d - 1)
        throw rank_error("rank(F) = " + std::to_string(rank) + " but d-1 = " +
                         std::to_string(shape.d - 1) + "; the rows of F must be independent");

    const Polynomial det_poly = laplace_expansion(shape, inst.F);
    const std::vector<Scalar> points = sample_set(shape, inst.field());
    const std::uint64_t grid_side = points.size();

    std::vector<Scalar> x(static_cast<std::size_t>(shape.d), Scalar::zero(inst.field()));
    std::uint64_t attempts = 0;

    const auto try_point = [&]() -> Scalar {
        ++attempts;
        const Scalar via_laplace = det_poly.evaluate(x);
        const Scalar via_bareiss =
            scalar_determinant(assemble_completed_matrix(shape, inst.F, x));
        if (via_laplace != via_bareiss)
            throw std::logic_error("determinant cross-check failed: Laplace evaluation and "
                                   "Bareiss elimination disagree");
        return via_laplace;
    };

    if (strategy == Strategy::Grid) {
        std::vector<std::uint64_t> idx(static_cast<std::size_t>(shape.d), 0);
        for (;;) {
            if (attempts >= max_attempts)
                throw search_exhausted_error("no nonzero determinant within " +
                                             std::to_string(max_attempts) + " grid points");
            for (int v = 0; v < shape.d; ++v)
                x[static_cast<std::size_t>(v)] = points[idx[static_cast<std::size_t>(v)]];
            const Scalar det = try_point();
            if (!det.is_zero())
                return {x, det, strategy, attempts};
            // odometer: x_d varies fastest
            int v = shape.d - 1;
            while (v >= 0 && ++idx[static_cast<std::size_t>(v)] == grid_side) {
                idx[static_cast<std::size_t>(v)] = 0;
                --v;
            }
            if (v < 0)
                break; // full grid swept
        }
        if (inst.field().is_rationals())
            throw std::logic_error("grid exhausted over Q with rank(F) = d-1; this contradicts "
                                   "the non-vanishing guarantee");
        throw search_exhausted_error("det M vanishes on all of F_" +
                                     std::to_string(inst.field().modulus()) + "^" +
                                     std::to_string(shape.d));
    }

    Rng rng(seed);
    while (attempts < max_attempts) {
        for (int v = 0; v < shape.d; ++v)
            x[static_cast<std::size_t>(v)] = points[rng.below(grid_side)];
        const Scalar det = try_point();
        if (!det.is_zero())
            return {x, det, strategy, attempts};
    }
    throw search_exhausted_error("no nonzero determinant within " +
                                 std::to_string(max_attempts) + " random attempts");
}

} // namespace shiftgb
