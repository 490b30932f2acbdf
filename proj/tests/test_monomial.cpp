#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "shiftgb/combinatorics.hpp"
#include "shiftgb/monomial.hpp"

using namespace shiftgb;

namespace {

// All monomials in d variables of total degree <= max_deg.
std::vector<Monomial> monomials_up_to(int d, int max_deg) {
    std::vector<Monomial> out;
    std::vector<int> e(static_cast<std::size_t>(d), 0);
    const auto rec = [&](auto&& self, int var, int left) -> void {
        if (var == d) {
            out.emplace_back(e);
            return;
        }
        for (int k = 0; k <= left; ++k) {
            e[static_cast<std::size_t>(var)] = k;
            self(self, var + 1, left - k);
        }
        e[static_cast<std::size_t>(var)] = 0;
    };
    rec(rec, 0, max_deg);
    return out;
}

Monomial mono(std::vector<int> e) { return Monomial(std::move(e)); }

} // namespace

TEST_CASE("order comparisons match the worked example") {
    const Monomial x2sq = mono({0, 2, 0});
    const Monomial x1x3 = mono({1, 0, 1});
    CHECK(MonomialOrder::grevlex(3).compare(x2sq, x1x3) == std::strong_ordering::greater);
    CHECK(MonomialOrder::grlex(3).compare(x2sq, x1x3) == std::strong_ordering::less);
    CHECK(MonomialOrder::lex(3).compare(x2sq, x1x3) == std::strong_ordering::less);
    CHECK(MonomialOrder::grevlex(3).compare(x2sq, x2sq) == std::strong_ordering::equal);
}

TEST_CASE("lex ignores degree, graded orders do not") {
    const Monomial x3 = Monomial::variable(3, 3);
    const Monomial x1sq = mono({2, 0, 0});
    CHECK(MonomialOrder::lex(3).greater(x3, x1sq));
    CHECK(MonomialOrder::grlex(3).greater(x1sq, x3));
    CHECK(MonomialOrder::grevlex(3).greater(x1sq, x3));
}

TEST_CASE("order axioms hold exhaustively at small degree") {
    for (int d = 1; d <= 4; ++d) {
        const std::vector<Monomial> all = monomials_up_to(d, 4);
        for (const MonomialOrder& ord :
             {MonomialOrder::lex(d), MonomialOrder::grlex(d), MonomialOrder::grevlex(d)}) {
            const Monomial unit(d);
            long violations = 0;
            for (const Monomial& a : all) {
                // 1 is the minimum
                if (!(a == unit) && !ord.greater(a, unit))
                    ++violations;
                for (const Monomial& b : all) {
                    const auto ab = ord.compare(a, b);
                    // totality + antisymmetry: compare agrees with equality
                    if ((ab == std::strong_ordering::equal) != (a == b))
                        ++violations;
                    if (ord.compare(b, a) !=
                        (ab == std::strong_ordering::less    ? std::strong_ordering::greater
                         : ab == std::strong_ordering::greater ? std::strong_ordering::less
                                                               : std::strong_ordering::equal))
                        ++violations;
                    for (const Monomial& c : all) {
                        // transitivity on the strict relation
                        if (ord.greater(a, b) && ord.greater(b, c) && !ord.greater(a, c))
                            ++violations;
                    }
                    if (ord.greater(a, b)) {
                        // multiplicativity
                        for (const Monomial& c : all)
                            if (!ord.greater(a * c, b * c))
                                ++violations;
                    }
                }
            }
            REQUIRE(violations == 0);
        }
    }
}

TEST_CASE("graded orders agree across distinct total degrees") {
    for (int d = 1; d <= 4; ++d) {
        const std::vector<Monomial> all = monomials_up_to(d, 4);
        long violations = 0;
        for (const Monomial& a : all)
            for (const Monomial& b : all) {
                if (a.degree() == b.degree())
                    continue;
                const bool expected = a.degree() > b.degree();
                if (MonomialOrder::grlex(d).greater(a, b) != expected)
                    ++violations;
                if (MonomialOrder::grevlex(d).greater(a, b) != expected)
                    ++violations;
            }
        REQUIRE(violations == 0);
    }
}

TEST_CASE("dimension mismatches are rejected") {
    CHECK_THROWS_AS(MonomialOrder::grevlex(3).compare(mono({1, 0}), mono({0, 1, 0})),
                    dimension_error);
    CHECK_THROWS_AS(mono({1, 0}) * mono({1, 0, 0}), dimension_error);
    CHECK_THROWS_AS(Monomial(std::vector<int>{1, -1}), value_error);
    CHECK_THROWS_AS(Monomial(0), dimension_error);
}

TEST_CASE("divisibility, lcm and exact division are consistent") {
    const Monomial a = mono({1, 2, 0});
    const Monomial b = mono({0, 1, 3});
    const Monomial l = a.lcm(b);
    CHECK(l == mono({1, 2, 3}));
    CHECK(a.divides(l));
    CHECK(b.divides(l));
    CHECK(a.divide_into(l) * a == l);
    CHECK(b.divide_into(l) * b == l);
    CHECK_FALSE(a.divides(b));
    CHECK_THROWS_AS(a.divide_into(b), value_error);
    CHECK(mono({0, 0, 0}).divides(a));
}

TEST_CASE("enumerate_monomials produces the full graded slice in order") {
    const MonomialOrder grevlex = MonomialOrder::grevlex(3);
    const std::vector<Monomial> deg2 = enumerate_monomials(3, 2, grevlex);
    REQUIRE(deg2.size() == 6);
    CHECK(deg2[0] == mono({0, 0, 2})); // x3^2
    CHECK(deg2[1] == mono({0, 1, 1})); // x2*x3
    CHECK(deg2[2] == mono({0, 2, 0})); // x2^2
    CHECK(deg2[3] == mono({1, 0, 1})); // x1*x3
    CHECK(deg2[4] == mono({1, 1, 0})); // x1*x2
    CHECK(deg2[5] == mono({2, 0, 0})); // x1^2

    CHECK(enumerate_monomials(1, 5, MonomialOrder::grevlex(1)) ==
          std::vector<Monomial>{mono({5})});
    CHECK(enumerate_monomials(4, 0, MonomialOrder::grevlex(4)) ==
          std::vector<Monomial>{Monomial(4)});

    for (int d = 1; d <= 4; ++d)
        for (int deg = 0; deg <= 5; ++deg) {
            const auto ms = enumerate_monomials(d, deg, MonomialOrder::grevlex(d));
            CHECK(ms.size() == binomial(deg + d - 1, d - 1));
            long bad = 0;
            for (std::size_t i = 0; i + 1 < ms.size(); ++i)
                if (!MonomialOrder::grevlex(d).greater(ms[i], ms[i + 1]))
                    ++bad;
            for (const Monomial& m : ms)
                if (m.degree() != deg)
                    ++bad;
            REQUIRE(bad == 0);
        }
}

TEST_CASE("monomial text rendering") {
    CHECK(mono({2, 0, 1}).str() == "x1^2*x3");
    CHECK(mono({0, 1, 0}).str() == "x2");
    CHECK(Monomial(3).str() == "1");
}

TEST_CASE("binomial coefficients are exact") {
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(8, 4) == 70);
    CHECK(binomial(12, 7) == 792);
    CHECK(binomial(5, 9) == 0);
    for (int n = 1; n <= 12; ++n)
        for (int k = 1; k <= n; ++k)
            CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
}
