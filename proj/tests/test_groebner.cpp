#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <vector>

#include "oracle.hpp"
#include "shiftgb/groebner.hpp"

using namespace shiftgb;

namespace {

const FieldSpec Q = FieldSpec::rationals();

} // namespace

TEST_CASE("the grevlex certificate for the worked example") {
    const ShiftShape shape(4, 3);
    const GroebnerReport report = check_buchberger(shape, MonomialOrder::grevlex(3));
    CHECK(report.pair_count == 15);
    CHECK(report.failures.empty());
    CHECK(report.is_groebner_basis());
    CHECK(report.lm_set_complete);
    CHECK(std::string(report.verdict()) == "groebner-basis");
}

TEST_CASE("grlex breaks the certificate for the worked example") {
    const ShiftShape shape(4, 3);
    const GroebnerReport report = check_buchberger(shape, MonomialOrder::grlex(3));
    CHECK(report.pair_count == 15);
    CHECK_FALSE(report.failures.empty());
    CHECK_FALSE(report.lm_set_complete);
    CHECK(std::string(report.verdict()) == "not-groebner-basis");
    for (const SPairFailure& f : report.failures)
        CHECK_FALSE(f.remainder.is_zero());
}

TEST_CASE("d = n is a basis under every order") {
    for (const MonomialOrder& ord :
         {MonomialOrder::lex(5), MonomialOrder::grlex(5), MonomialOrder::grevlex(5)}) {
        const GroebnerReport report = check_buchberger(ShiftShape(5, 5), ord);
        CHECK(report.is_groebner_basis());
        CHECK(report.lm_set_complete);
    }
}

TEST_CASE("pair counts are binomial") {
    for (const auto& [n, d] : std::vector<std::pair<int, int>>{{4, 3}, {5, 3}, {6, 4}}) {
        const GroebnerReport report = check_buchberger(ShiftShape(n, d),
                                                       MonomialOrder::grevlex(d));
        const std::uint64_t m = binomial(n, d - 1);
        CHECK(report.pair_count == m * (m - 1) / 2);
    }
}

TEST_CASE("leading monomial sets under the three orders") {
    const ShiftShape shape(4, 3);
    const std::vector<Monomial> grevlex_lms = lm_set(shape, MonomialOrder::grevlex(3));
    CHECK(grevlex_lms == enumerate_monomials(3, 2, MonomialOrder::grevlex(3)));

    const std::vector<Monomial> lex_lms = lm_set(shape, MonomialOrder::lex(3));
    CHECK(lex_lms.size() == 5);
    const Monomial x2sq(std::vector<int>{0, 2, 0});
    CHECK(std::find(lex_lms.begin(), lex_lms.end(), x2sq) == lex_lms.end());

    const std::vector<Monomial> grlex_lms = lm_set(shape, MonomialOrder::grlex(3));
    CHECK(grlex_lms.size() == 5);
    CHECK(std::find(grlex_lms.begin(), grlex_lms.end(), x2sq) == grlex_lms.end());

    CHECK(lm_set(ShiftShape(6, 1), MonomialOrder::grevlex(1)) ==
          std::vector<Monomial>{Monomial(std::vector<int>{6})});
}

TEST_CASE("grevlex leading monomials never collide") {
    for (const auto& [n, d] : std::vector<std::pair<int, int>>{{5, 3}, {6, 4}, {7, 3}, {8, 5}}) {
        const ShiftShape shape(n, d);
        CHECK(lm_set(shape, MonomialOrder::grevlex(d)).size() ==
              binomial(shape.n, shape.d - 1));
    }
}

TEST_CASE("the minor ideal is the power of the maximal ideal at its degree") {
    CHECK(check_power_ideal(ShiftShape(4, 3)));
    CHECK(check_power_ideal(ShiftShape(5, 5)));
    CHECK(check_power_ideal(ShiftShape(6, 3)));
}

TEST_CASE("minors span the full homogeneous slice (independent rank oracle)") {
    for (const auto& [n, d] : std::vector<std::pair<int, int>>{{4, 3}, {5, 3}, {6, 4}, {6, 3}}) {
        const ShiftShape shape(n, d);
        const MonomialOrder ord = MonomialOrder::grevlex(d);
        std::vector<Polynomial> polys;
        for (const Minor& m : enumerate_minors(shape))
            polys.push_back(m.det);
        const std::vector<Monomial> basis =
            enumerate_monomials(shape.d, shape.minor_size(), ord);
        REQUIRE(polys.size() == basis.size());
        const ScalarMatrix coeffs = oracle::coefficient_matrix(polys, basis, Q);
        CHECK(scalar_rank(coeffs) == static_cast<int>(binomial(shape.n, shape.d - 1)));
    }
}

TEST_CASE("membership counterexamples under weaker orders") {
    const ShiftShape shape(4, 3);
    const auto grlex_ce = membership_counterexample(shape, MonomialOrder::grlex(3));
    REQUIRE(grlex_ce.has_value());
    CHECK(grlex_ce->first.str() == "x2^2");
    CHECK(grlex_ce->second.str() == "x2^2");

    CHECK_FALSE(membership_counterexample(shape, MonomialOrder::grevlex(3)).has_value());
    CHECK_FALSE(membership_counterexample(ShiftShape(4, 4), MonomialOrder::lex(4)).has_value());
}

TEST_CASE("normal forms are divisor-order independent under a certified basis") {
    const ShiftShape shape(5, 3);
    const MonomialOrder ord = MonomialOrder::grevlex(3);
    REQUIRE(check_buchberger(shape, ord).is_groebner_basis());

    std::vector<Polynomial> basis;
    for (const Minor& m : enumerate_minors(shape))
        basis.push_back(m.det);

    Rng rng(11001);
    for (int trial = 0; trial < 25; ++trial) {
        const Polynomial f = oracle::random_polynomial(ord, Q, rng, 6, 4);
        const Polynomial reference = reduce(f, basis).remainder;
        std::vector<Polynomial> shuffled = basis;
        for (std::size_t i = shuffled.size(); i > 1; --i)
            std::swap(shuffled[i - 1], shuffled[rng.below(i)]);
        CHECK(reduce(f, shuffled).remainder == reference);
    }
}

TEST_CASE("random ideal elements reduce to zero under the certified basis") {
    const ShiftShape shape(5, 3);
    const MonomialOrder ord = MonomialOrder::grevlex(3);
    std::vector<Polynomial> basis;
    for (const Minor& m : enumerate_minors(shape))
        basis.push_back(m.det);

    Rng rng(11002);
    for (int trial = 0; trial < 25; ++trial) {
        Polynomial combo = Polynomial::zero(ord, Q);
        for (const Polynomial& g : basis)
            if (rng.below(2) == 0)
                combo = combo + oracle::random_polynomial(ord, Q, rng, 3, 2) * g;
        CHECK(reduce(combo, basis).remainder.is_zero());
    }
}

TEST_CASE("grevlex certificates at moderate shapes") {
    for (const auto& [n, d] : std::vector<std::pair<int, int>>{{5, 3}, {6, 2}, {6, 4}, {7, 6}}) {
        const GroebnerReport report =
            check_buchberger(ShiftShape(n, d), MonomialOrder::grevlex(d));
        CHECK(report.is_groebner_basis());
        CHECK(report.lm_set_complete);
    }
}

TEST_CASE("prime-field coefficients certify as well") {
    const GroebnerReport report =
        check_buchberger(ShiftShape(5, 3), MonomialOrder::grevlex(3),
                         FieldSpec::prime_field(10007));
    CHECK(report.is_groebner_basis());
    CHECK(report.lm_set_complete);
}
