#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "shiftgb/circulant.hpp"
#include "shiftgb/polynomial.hpp"

namespace shiftgb {

// One S-pair whose remainder did not vanish.
struct SPairFailure {
    ColumnSet left;
    ColumnSet right;
    Polynomial s_poly;
    Polynomial remainder;
};

struct GroebnerReport {
    ShiftShape shape;
    MonomialOrder order;
    std::size_t pair_count = 0;
    std::vector<SPairFailure> failures; // canonical pair order
    bool lm_set_complete = false;

    bool is_groebner_basis() const { return failures.empty(); }
    const char* verdict() const {
        return is_groebner_basis() ? "groebner-basis" : "not-groebner-basis";
    }
};

// The set of leading monomials of all maximal minors under `ord`, sorted
// descending, duplicates removed.
inline std::vector<Monomial> lm_set(const ShiftShape& shape, const MonomialOrder& ord,
                                    std::size_t cap = kDefaultMinorCap) {
    std::vector<Monomial> lms;
    for (const Minor& m : enumerate_minors(shape, ord, FieldSpec::rationals(), cap))
        lms.push_back(m.det.leading_monomial());
    std::sort(lms.begin(), lms.end(),
              [&](const Monomial& a, const Monomial& b) { return ord.greater(a, b); });
    lms.erase(std::unique(lms.begin(), lms.end()), lms.end());
    return lms;
}

// Buchberger certification: reduces every S-pair of distinct minors by the
// full minor set and records the pairs with nonzero remainder. The set is a
// Groebner basis under `ord` iff no pair fails. lm_set_complete additionally
// states whether the leading monomials are ALL monomials of degree n-d+1.
inline GroebnerReport check_buchberger(const ShiftShape& shape, const MonomialOrder& ord,
                                       const FieldSpec& fs = FieldSpec::rationals(),
                                       std::size_t cap = kDefaultMinorCap) {
    const std::vector<Minor> minors = enumerate_minors(shape, ord, fs, cap);
    std::vector<Polynomial> basis;
    basis.reserve(minors.size());
    for (const Minor& m : minors)
        basis.push_back(m.det);

    GroebnerReport report{shape, ord, 0, {}, false};
    const std::size_t m = minors.size();
    report.pair_count = m * (m - 1) / 2;
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 1; j < m; ++j) {
            Polynomial s = s_polynomial(basis[i], basis[j]);
            Polynomial r = s.is_zero() ? s : reduce(s, basis).remainder;
            if (!r.is_zero())
                report.failures.push_back(
                    {minors[i].columns, minors[j].columns, std::move(s), std::move(r)});
        }
    }

    const std::vector<Monomial> lms = lm_set(shape, ord, cap);
    const std::vector<Monomial> all =
        enumerate_monomials(shape.d, shape.minor_size(), ord);
    report.lm_set_complete = lms == all;
    return report;
}

// True iff the minor ideal coincides with the power of the maximal ideal
// <x_1..x_d> at the generating degree: every monomial of degree n-d+1 has
// grevlex normal form 0 modulo the minors, and every minor is homogeneous of
// that degree.
inline bool check_power_ideal(const ShiftShape& shape,
                              const FieldSpec& fs = FieldSpec::rationals(),
                              std::size_t cap = kDefaultMinorCap) {
    const MonomialOrder ord = MonomialOrder::grevlex(shape.d);
    std::vector<Polynomial> basis;
    for (const Minor& m : enumerate_minors(shape, ord, fs, cap)) {
        if (!m.det.is_homogeneous_of_degree(shape.minor_size()))
            return false;
        basis.push_back(m.det);
    }
    for (const Monomial& mono : enumerate_monomials(shape.d, shape.minor_size(), ord)) {
        const Polynomial p = Polynomial::from_monomial(mono, Scalar::one(fs), ord);
        if (!reduce(p, basis).remainder.is_zero())
            return false;
    }
    return true;
}

// Searches the monomials of degree n-d+1 (descending under `ord`) for one
// with a nonzero normal form modulo the minors, even though every such
// monomial belongs to the ideal. Returns the first hit, or nothing when the
// minors form a Groebner basis under `ord`.
inline std::optional<std::pair<Polynomial, Polynomial>>
membership_counterexample(const ShiftShape& shape, const MonomialOrder& ord,
                          const FieldSpec& fs = FieldSpec::rationals(),
                          std::size_t cap = kDefaultMinorCap) {
    std::vector<Polynomial> basis;
    for (const Minor& m : enumerate_minors(shape, ord, fs, cap))
        basis.push_back(m.det);
    // membership certificates come from the grevlex side, where the minors
    // are known to be a Groebner basis
    const MonomialOrder grevlex = MonomialOrder::grevlex(shape.d);
    std::vector<Polynomial> grevlex_basis;
    for (const Minor& m : enumerate_minors(shape, grevlex, fs, cap))
        grevlex_basis.push_back(m.det);
    for (const Monomial& mono : enumerate_monomials(shape.d, shape.minor_size(), ord)) {
        const Polynomial p = Polynomial::from_monomial(mono, Scalar::one(fs), ord);
        Polynomial r = reduce(p, basis).remainder;
        if (r.is_zero())
            continue;
        const Polynomial membership =
            reduce(Polynomial::from_monomial(mono, Scalar::one(fs), grevlex), grevlex_basis)
                .remainder;
        if (membership.is_zero())
            return std::make_pair(p, std::move(r));
    }
    return std::nullopt;
}

} // namespace shiftgb
