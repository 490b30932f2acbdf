#include <catch2/catch_amalgamated.hpp>

#include "shiftgb/field.hpp"
#include "shiftgb/rng.hpp"

using namespace shiftgb;

TEST_CASE("rational arithmetic is exact") {
    const Scalar half = Scalar::from_rational(1, 2);
    const Scalar third = Scalar::from_rational(1, 3);
    CHECK((half + third).str() == "5/6");
    CHECK((half * third).str() == "1/6");
    CHECK((half - half).is_zero());
}

TEST_CASE("rationals canonicalize on construction") {
    CHECK(Scalar::from_rational(2, 4) == Scalar::from_rational(1, 2));
    CHECK(Scalar::from_rational(2, 4).str() == "1/2");
    CHECK(Scalar::from_rational(-3, 9).str() == "-1/3");
    CHECK_FALSE(Scalar::from_rational(-3, 9).is_zero());
    CHECK(Scalar::from_rational(3, -9).str() == "-1/3");
    CHECK(Scalar::from_rational(0, 7).is_zero());
    CHECK(Scalar::from_rational(6, 3).str() == "2");
}

TEST_CASE("zero denominators are rejected") {
    CHECK_THROWS_AS(Scalar::from_rational(1, 0), division_by_zero_error);
}

TEST_CASE("prime field arithmetic is fully reduced") {
    const FieldSpec f7 = FieldSpec::prime_field(7);
    CHECK(Scalar::from_residue(3, f7).inverse() == Scalar::from_residue(5, f7));
    CHECK(Scalar::from_int(7, f7).is_zero());
    CHECK(Scalar::from_int(-1, f7) == Scalar::from_residue(6, f7));
    CHECK((Scalar::from_residue(4, f7) + Scalar::from_residue(5, f7)) ==
          Scalar::from_residue(2, f7));
}

TEST_CASE("zero inversion and mixed-field arithmetic are rejected") {
    const FieldSpec q = FieldSpec::rationals();
    const FieldSpec f7 = FieldSpec::prime_field(7);
    CHECK_THROWS_AS(Scalar::zero(q).inverse(), division_by_zero_error);
    CHECK_THROWS_AS(Scalar::zero(f7).inverse(), division_by_zero_error);
    CHECK_THROWS_AS(Scalar::one(q) / Scalar::zero(q), division_by_zero_error);
    CHECK_THROWS_AS(Scalar::one(q) + Scalar::one(f7), domain_mismatch_error);
    CHECK_THROWS_AS(Scalar::one(f7) * Scalar::one(q), domain_mismatch_error);
}

TEST_CASE("field axioms hold on randomized triples") {
    Rng rng(20260815);
    for (const FieldSpec& fs :
         {FieldSpec::rationals(), FieldSpec::prime_field(7), FieldSpec::prime_field(10007)}) {
        for (int trial = 0; trial < 200; ++trial) {
            const Scalar a = fs.is_rationals()
                                 ? Scalar::from_rational(rng.range(-20, 20), rng.range(1, 12))
                                 : Scalar::from_residue(rng.below(fs.modulus()), fs);
            const Scalar b = fs.is_rationals()
                                 ? Scalar::from_rational(rng.range(-20, 20), rng.range(1, 12))
                                 : Scalar::from_residue(rng.below(fs.modulus()), fs);
            const Scalar c = fs.is_rationals()
                                 ? Scalar::from_rational(rng.range(-20, 20), rng.range(1, 12))
                                 : Scalar::from_residue(rng.below(fs.modulus()), fs);
            CHECK((a + b) + c == a + (b + c));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a + b == b + a);
            CHECK(a * b == b * a);
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a + Scalar::zero(fs) == a);
            CHECK(a * Scalar::one(fs) == a);
            CHECK((a - a).is_zero());
            if (!a.is_zero()) {
                CHECK(a * a.inverse() == Scalar::one(fs));
                CHECK(a / a == Scalar::one(fs));
            }
        }
    }
}

TEST_CASE("field spec tokens round-trip") {
    CHECK(FieldSpec::rationals().token() == "q");
    CHECK(FieldSpec::prime_field(10007).token() == "fp:10007");
    CHECK(FieldSpec::from_token("q") == FieldSpec::rationals());
    CHECK(FieldSpec::from_token("fp:7") == FieldSpec::prime_field(7));
    CHECK_THROWS_AS(FieldSpec::from_token("fp:6"), value_error);
    CHECK_THROWS_AS(FieldSpec::from_token("fp:10001"), value_error); // 73 * 137
    CHECK_THROWS_AS(FieldSpec::from_token("r"), value_error);
    CHECK_THROWS_AS(FieldSpec::from_token("fp:"), value_error);
    CHECK_THROWS_AS(FieldSpec::prime_field(1), value_error);
}

TEST_CASE("scalar text forms parse back") {
    const FieldSpec q = FieldSpec::rationals();
    const FieldSpec f7 = FieldSpec::prime_field(7);
    for (const char* text : {"5/6", "-1/3", "7", "0", "-12"}) {
        const Scalar s = Scalar::parse(text, q);
        CHECK(Scalar::parse(s.str(), q) == s);
    }
    CHECK(Scalar::parse("5/6", q).str() == "5/6");
    CHECK(Scalar::parse("10", f7).str() == "3");
    CHECK(Scalar::parse("-1", f7) == Scalar::from_residue(6, f7));
    CHECK_THROWS_AS(Scalar::parse("1/0", q), division_by_zero_error);
    CHECK_THROWS_AS(Scalar::parse("abc", q), value_error);
    CHECK_THROWS_AS(Scalar::parse("", q), value_error);
}

TEST_CASE("primality testing is deterministic and correct at word scale") {
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 10007ull, 1000003ull, 2147483647ull})
        CHECK_NOTHROW(FieldSpec::prime_field(p));
    for (std::uint64_t c : {4ull, 6ull, 9ull, 10001ull, 1000001ull, 3215031751ull})
        CHECK_THROWS_AS(FieldSpec::prime_field(c), value_error);
}
