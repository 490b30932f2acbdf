#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "oracle.hpp"
#include "shiftgb/circulant.hpp"
#include "shiftgb/matrix.hpp"

using namespace shiftgb;

namespace {

const FieldSpec Q = FieldSpec::rationals();

ScalarMatrix int_matrix(const std::vector<std::vector<int>>& rows, const FieldSpec& fs = Q) {
    std::vector<std::vector<Scalar>> srows;
    for (const auto& row : rows) {
        std::vector<Scalar> srow;
        for (int v : row)
            srow.push_back(Scalar::from_int(v, fs));
        srows.push_back(std::move(srow));
    }
    return ScalarMatrix::from_rows(srows, fs);
}

} // namespace

TEST_CASE("scalar determinants of known matrices") {
    CHECK(scalar_determinant(ScalarMatrix::identity(5, Q)) == Scalar::one(Q));
    CHECK(scalar_determinant(int_matrix({{1, 2}, {2, 4}})).is_zero());
    // [[x1,x2,0],[0,x1,x2],[f1,f2,f3]] at x=(1,1), f=(1,0,0)
    CHECK(scalar_determinant(int_matrix({{1, 1, 0}, {0, 1, 1}, {1, 0, 0}})) == Scalar::one(Q));
    CHECK(scalar_determinant(ScalarMatrix(0, 0, Q)) == Scalar::one(Q));
    CHECK_THROWS_AS(scalar_determinant(ScalarMatrix(2, 3, Q)), dimension_error);
}

TEST_CASE("scalar rank") {
    ScalarMatrix basis_rows(3, 6, Q);
    for (int i = 0; i < 3; ++i)
        basis_rows.set(i, i, Scalar::one(Q));
    CHECK(scalar_rank(basis_rows) == 3);
    CHECK(scalar_rank(ScalarMatrix(4, 4, Q)) == 0);
    CHECK(scalar_rank(int_matrix({{1, 2, 3}, {2, 4, 6}})) == 1);
}

TEST_CASE("rank is invariant under transposition") {
    Rng rng(8101);
    for (const FieldSpec& fs : {FieldSpec::rationals(), FieldSpec::prime_field(7)}) {
        for (int trial = 0; trial < 40; ++trial) {
            const int r = 1 + static_cast<int>(rng.below(5));
            const int c = 1 + static_cast<int>(rng.below(5));
            const ScalarMatrix m = random_matrix(r, c, fs, rng, -3, 3);
            CHECK(scalar_rank(m) == scalar_rank(m.transposed()));
        }
    }
}

TEST_CASE("determinant is multiplicative") {
    Rng rng(8102);
    for (const FieldSpec& fs : {FieldSpec::rationals(), FieldSpec::prime_field(10007)}) {
        for (int trial = 0; trial < 30; ++trial) {
            const int n = 1 + static_cast<int>(rng.below(5));
            const ScalarMatrix a = random_matrix(n, n, fs, rng);
            const ScalarMatrix b = random_matrix(n, n, fs, rng);
            CHECK(scalar_determinant(a * b) == scalar_determinant(a) * scalar_determinant(b));
        }
    }
}

TEST_CASE("bareiss agrees with the permutation-sum oracle") {
    Rng rng(8103);
    for (const FieldSpec& fs : {FieldSpec::rationals(), FieldSpec::prime_field(7)}) {
        for (int n = 1; n <= 5; ++n) {
            for (int trial = 0; trial < 20; ++trial) {
                const ScalarMatrix m = random_matrix(n, n, fs, rng, -4, 4);
                CHECK(scalar_determinant(m) == oracle::leibniz_determinant(m));
            }
        }
    }
}

TEST_CASE("polynomial determinants of known matrices") {
    const MonomialOrder ord = MonomialOrder::grevlex(3);
    PolyMatrix upper(2, 2, ord, Q);
    upper.set(0, 0, Polynomial::parse("x1", ord, Q));
    upper.set(0, 1, Polynomial::parse("x2", ord, Q));
    upper.set(1, 1, Polynomial::parse("x1", ord, Q));
    CHECK(poly_determinant(upper) == Polynomial::parse("x1^2", ord, Q));

    const ShiftShape shape(4, 3);
    const PolyMatrix X = build_shift_matrix(shape, ord, Q);
    const ColumnSet H({2, 3}, shape);
    CHECK(poly_determinant(select_columns(X, H)) == Polynomial::parse("x2^2 - x1*x3", ord, Q));

    PolyMatrix zero_row(2, 2, ord, Q);
    zero_row.set(0, 0, Polynomial::parse("x1 + x2", ord, Q));
    zero_row.set(0, 1, Polynomial::parse("x3^4", ord, Q));
    CHECK(poly_determinant(zero_row).is_zero());
}

TEST_CASE("polynomial determinant cap") {
    const MonomialOrder ord = MonomialOrder::grevlex(1);
    const PolyMatrix big(13, 13, ord, Q);
    CHECK_THROWS_AS(poly_determinant(big), resource_limit_error);
    CHECK_THROWS_AS(poly_determinant(PolyMatrix(2, 3, ord, Q)), dimension_error);
}

TEST_CASE("cofactor expansion agrees with the permutation-sum oracle") {
    Rng rng(8104);
    const FieldSpec f7 = FieldSpec::prime_field(7);
    for (int n = 1; n <= 4; ++n) {
        for (int trial = 0; trial < 10; ++trial) {
            const MonomialOrder ord = MonomialOrder::grevlex(2);
            PolyMatrix m(n, n, ord, f7);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    if (rng.below(3) != 0) // leave some entries zero
                        m.set(i, j, oracle::random_polynomial(ord, f7, rng, 2, 2));
            CHECK(poly_determinant(m) == oracle::leibniz_determinant(m));
        }
    }
}

TEST_CASE("symbolic determinant evaluation matches the scalar path") {
    Rng rng(8105);
    const FieldSpec fp = FieldSpec::prime_field(10007);
    int trials = 0;
    for (int n = 2; n <= 8 && trials < 100; ++n) {
        for (int d = 1; d <= n && trials < 100; d += 2) {
            const ShiftShape shape(n, d);
            const MonomialOrder ord = MonomialOrder::grevlex(d);
            const ScalarMatrix F = random_matrix(d - 1, n, fp, rng);
            const PolyMatrix M = build_full_matrix(shape, F, ord);
            const Polynomial det = poly_determinant(M, shape.n);
            for (int rep = 0; rep < 6; ++rep) {
                std::vector<Scalar> pt;
                for (int v = 0; v < d; ++v)
                    pt.push_back(oracle::random_scalar(fp, rng));
                CHECK(det.evaluate(pt) == scalar_determinant(M.evaluate(pt)));
                ++trials;
            }
        }
    }
    CHECK(trials >= 100);
}

TEST_CASE("column selection") {
    const ShiftShape shape(4, 3);
    const MonomialOrder ord = MonomialOrder::grevlex(3);
    const PolyMatrix X = build_shift_matrix(shape, ord, Q);

    const PolyMatrix sub = select_columns(X, ColumnSet({1, 4}, shape));
    CHECK(sub.at(0, 0) == Polynomial::parse("x1", ord, Q));
    CHECK(sub.at(0, 1).is_zero());
    CHECK(sub.at(1, 0).is_zero());
    CHECK(sub.at(1, 1) == Polynomial::parse("x3", ord, Q));

    const ShiftShape wide(4, 1);
    const PolyMatrix X1 = build_shift_matrix(wide, MonomialOrder::grevlex(1), Q);
    CHECK(select_columns(X1, ColumnSet({1, 2, 3, 4}, wide)) == X1);

    CHECK_THROWS_AS(ColumnSet({1, 5}, shape), dimension_error);
    CHECK_THROWS_AS(ColumnSet({2, 2}, shape), dimension_error);
    CHECK_THROWS_AS(ColumnSet({1, 2, 3}, shape), dimension_error);
}

TEST_CASE("matrix json shape errors surface as value errors") {
    CHECK_THROWS_AS(ScalarMatrix::from_rows({{Scalar::one(Q)}, {}}, Q), dimension_error);
}
