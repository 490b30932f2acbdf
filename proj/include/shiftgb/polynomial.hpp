#pragma once

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "shiftgb/field.hpp"
#include "shiftgb/monomial.hpp"

namespace shiftgb {

struct Term {
    Monomial mono;
    Scalar coef;
};

// A multivariate polynomial as a term list kept strictly descending under the
// monomial order it carries. The zero polynomial is the empty list; no term
// has a zero coefficient. Values are immutable; every operation returns a
// fresh canonical polynomial. Re-sorting under a different order is the
// explicit conversion with_order(), never implicit.
class Polynomial {
  public:
    Polynomial(MonomialOrder ord, FieldSpec field)
        : order_(std::move(ord)), field_(std::move(field)) {}

    static Polynomial zero(const MonomialOrder& ord, const FieldSpec& fs) {
        return Polynomial(ord, fs);
    }

    static Polynomial constant(const Scalar& c, const MonomialOrder& ord) {
        Polynomial p(ord, c.spec());
        if (!c.is_zero())
            p.terms_.push_back({Monomial(ord.var_count()), c});
        return p;
    }

    static Polynomial from_monomial(const Monomial& m, const Scalar& c, const MonomialOrder& ord) {
        if (m.var_count() != ord.var_count())
            throw dimension_error("monomial/order variable count mismatch");
        Polynomial p(ord, c.spec());
        if (!c.is_zero())
            p.terms_.push_back({m, c});
        return p;
    }

    // Builds the canonical form from an arbitrary term list: sorts, merges
    // duplicates, drops zeros.
    static Polynomial from_terms(std::vector<Term> terms, const MonomialOrder& ord,
                                 const FieldSpec& fs) {
        Polynomial p(ord, fs);
        for (const Term& t : terms) {
            if (t.mono.var_count() != ord.var_count())
                throw dimension_error("term variable count mismatch");
            if (t.coef.spec() != fs)
                throw domain_mismatch_error("term coefficient field mismatch");
        }
        std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
            return ord.greater(a.mono, b.mono);
        });
        for (Term& t : terms) {
            if (!p.terms_.empty() && p.terms_.back().mono == t.mono)
                p.terms_.back().coef = p.terms_.back().coef + t.coef;
            else
                p.terms_.push_back(std::move(t));
            if (p.terms_.back().coef.is_zero())
                p.terms_.pop_back();
        }
        return p;
    }

    const MonomialOrder& order() const { return order_; }
    const FieldSpec& field() const { return field_; }
    int var_count() const { return order_.var_count(); }
    const std::vector<Term>& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    const Monomial& leading_monomial() const { return leading_term().mono; }
    const Scalar& leading_coefficient() const { return leading_term().coef; }
    const Term& leading_term() const {
        if (terms_.empty())
            throw value_error("leading term of the zero polynomial");
        return terms_.front();
    }

    int total_degree() const {
        if (terms_.empty())
            throw value_error("total degree of the zero polynomial");
        int deg = 0;
        for (const Term& t : terms_)
            deg = std::max(deg, t.mono.degree());
        return deg;
    }

    // Zero counts as homogeneous of any degree.
    bool is_homogeneous_of_degree(int deg) const {
        for (const Term& t : terms_)
            if (t.mono.degree() != deg)
                return false;
        return true;
    }

    bool is_homogeneous() const {
        return terms_.empty() || is_homogeneous_of_degree(terms_.front().mono.degree());
    }

    Polynomial operator-() const {
        Polynomial out(order_, field_);
        out.terms_.reserve(terms_.size());
        for (const Term& t : terms_)
            out.terms_.push_back({t.mono, -t.coef});
        return out;
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        a.check_context(b);
        Polynomial out(a.order_, a.field_);
        out.terms_.reserve(a.terms_.size() + b.terms_.size());
        std::size_t i = 0, j = 0;
        while (i < a.terms_.size() || j < b.terms_.size()) {
            if (j == b.terms_.size()) {
                out.terms_.push_back(a.terms_[i++]);
            } else if (i == a.terms_.size()) {
                out.terms_.push_back(b.terms_[j++]);
            } else {
                const auto cmp = a.order_.compare(a.terms_[i].mono, b.terms_[j].mono);
                if (cmp > 0) {
                    out.terms_.push_back(a.terms_[i++]);
                } else if (cmp < 0) {
                    out.terms_.push_back(b.terms_[j++]);
                } else {
                    Scalar c = a.terms_[i].coef + b.terms_[j].coef;
                    if (!c.is_zero())
                        out.terms_.push_back({a.terms_[i].mono, std::move(c)});
                    ++i;
                    ++j;
                }
            }
        }
        return out;
    }

    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        a.check_context(b);
        std::vector<Term> acc;
        acc.reserve(a.terms_.size() * b.terms_.size());
        for (const Term& ta : a.terms_)
            for (const Term& tb : b.terms_)
                acc.push_back({ta.mono * tb.mono, ta.coef * tb.coef});
        return from_terms(std::move(acc), a.order_, a.field_);
    }

    Polynomial scaled(const Scalar& c) const {
        if (c.spec() != field_)
            throw domain_mismatch_error("scale coefficient field mismatch");
        Polynomial out(order_, field_);
        if (c.is_zero())
            return out;
        out.terms_.reserve(terms_.size());
        for (const Term& t : terms_)
            out.terms_.push_back({t.mono, t.coef * c});
        return out;
    }

    // Product with the single term c*m; preserves descending order directly.
    Polynomial times_term(const Monomial& m, const Scalar& c) const {
        if (m.var_count() != var_count())
            throw dimension_error("term variable count mismatch");
        if (c.spec() != field_)
            throw domain_mismatch_error("term coefficient field mismatch");
        Polynomial out(order_, field_);
        if (c.is_zero())
            return out;
        out.terms_.reserve(terms_.size());
        for (const Term& t : terms_)
            out.terms_.push_back({t.mono * m, t.coef * c});
        return out;
    }

    // The same polynomial re-sorted under another order on the same
    // variables.
    Polynomial with_order(const MonomialOrder& ord) const {
        if (ord.var_count() != var_count())
            throw dimension_error("order variable count mismatch");
        return from_terms(terms_, ord, field_);
    }

    Scalar evaluate(const std::vector<Scalar>& point) const {
        if (static_cast<int>(point.size()) != var_count())
            throw dimension_error("evaluation point has wrong length");
        for (const Scalar& v : point)
            if (v.spec() != field_)
                throw domain_mismatch_error("evaluation point field mismatch");
        Scalar acc = Scalar::zero(field_);
        for (const Term& t : terms_) {
            Scalar prod = t.coef;
            for (int v = 1; v <= var_count(); ++v)
                for (int e = 0; e < t.mono.exponent(v); ++e)
                    prod = prod * point[static_cast<std::size_t>(v - 1)];
            acc = acc + prod;
        }
        return acc;
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        if (a.order_ != b.order_ || a.field_ != b.field_ || a.terms_.size() != b.terms_.size())
            return false;
        for (std::size_t i = 0; i < a.terms_.size(); ++i)
            if (a.terms_[i].mono != b.terms_[i].mono || a.terms_[i].coef != b.terms_[i].coef)
                return false;
        return true;
    }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    // Canonical text with terms in descending order, e.g. "x2^2 - x1*x3".
    // parse() reads it back losslessly given the same context.
    std::string str() const {
        if (terms_.empty())
            return "0";
        std::string out;
        for (std::size_t i = 0; i < terms_.size(); ++i) {
            const Term& t = terms_[i];
            Scalar c = t.coef;
            if (i == 0) {
                if (field_.is_rationals() && c.rational_value() < 0) {
                    out += '-';
                    c = -c;
                }
            } else {
                if (field_.is_rationals() && c.rational_value() < 0) {
                    out += " - ";
                    c = -c;
                } else {
                    out += " + ";
                }
            }
            if (t.mono.is_one()) {
                out += c.str();
            } else {
                if (!c.is_one())
                    out += c.str() + "*";
                out += t.mono.str();
            }
        }
        return out;
    }

    static Polynomial parse(const std::string& text, const MonomialOrder& ord, const FieldSpec& fs);

    friend std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.str(); }

  private:
    void check_context(const Polynomial& o) const {
        if (order_ != o.order_)
            throw dimension_error("polynomials under different monomial orders");
        if (field_ != o.field_)
            throw domain_mismatch_error("polynomials over different fields");
    }

    MonomialOrder order_;
    FieldSpec field_;
    std::vector<Term> terms_; // strictly descending under order_
};

inline Polynomial Polynomial::parse(const std::string& text, const MonomialOrder& ord,
                                    const FieldSpec& fs) {
    std::size_t pos = 0;
    const auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
    };
    const auto read_uint = [&]() -> bigint_t {
        const std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            ++pos;
        if (pos == start)
            throw value_error("bad polynomial text '" + text + "' (digit expected at " +
                              std::to_string(pos) + ")");
        return bigint_t(text.substr(start, pos - start));
    };
    const auto scalar_from_parts = [&](const bigint_t& num, const bigint_t& den,
                                       bool negative) -> Scalar {
        bigint_t n = negative ? -num : num;
        if (fs.is_rationals())
            return Scalar::from_rational(n, den);
        if (den != 1)
            throw value_error("fractional coefficient over a prime field");
        const bigint_t p(fs.modulus());
        bigint_t r = n % p;
        if (r < 0)
            r += p;
        return Scalar::from_residue(r.convert_to<std::uint64_t>(), fs);
    };

    std::vector<Term> terms;
    skip_ws();
    if (pos == text.size())
        throw value_error("empty polynomial text");
    bool first = true;
    while (pos < text.size()) {
        bool negative = false;
        skip_ws();
        if (!first) {
            if (text[pos] == '+' || text[pos] == '-')
                negative = text[pos++] == '-';
            else
                throw value_error("bad polynomial text '" + text + "' ('+' or '-' expected)");
        } else if (text[pos] == '-' || text[pos] == '+') {
            negative = text[pos++] == '-';
        }
        first = false;

        Scalar coef = scalar_from_parts(1, 1, negative);
        std::vector<int> exps(static_cast<std::size_t>(ord.var_count()), 0);
        bool expect_factor = true;
        while (expect_factor) {
            skip_ws();
            if (pos >= text.size())
                throw value_error("bad polynomial text '" + text + "' (factor expected)");
            if (std::isdigit(static_cast<unsigned char>(text[pos]))) {
                const bigint_t num = read_uint();
                bigint_t den = 1;
                if (pos < text.size() && text[pos] == '/') {
                    ++pos;
                    den = read_uint();
                }
                coef = coef * scalar_from_parts(num, den, false);
            } else if (text[pos] == 'x') {
                ++pos;
                const bigint_t idx = read_uint();
                if (idx < 1 || idx > ord.var_count())
                    throw value_error("variable index out of range in '" + text + "'");
                int power = 1;
                if (pos < text.size() && text[pos] == '^') {
                    ++pos;
                    power = read_uint().convert_to<int>();
                }
                exps[idx.convert_to<std::size_t>() - 1] += power;
            } else {
                throw value_error("bad polynomial text '" + text + "' (unexpected '" +
                                  text[pos] + "')");
            }
            skip_ws();
            if (pos < text.size() && text[pos] == '*')
                ++pos;
            else
                expect_factor = false;
        }
        terms.push_back({Monomial(std::move(exps)), std::move(coef)});
    }
    return from_terms(std::move(terms), ord, fs);
}

struct ReductionResult {
    std::vector<Polynomial> quotients; // aligned with the divisor list
    Polynomial remainder;
};

// Multivariate division of f by the list G: repeatedly takes the largest
// still-reducible term and divides it by the first g in G whose leading
// monomial divides it (ties fixed by G's enumeration order, so remainders
// are reproducible). On return no term of the remainder is divisible by any
// LM(g), and f = sum(quotients[k] * G[k]) + remainder exactly.
inline ReductionResult reduce(const Polynomial& f, const std::vector<Polynomial>& basis) {
    if (basis.empty())
        throw value_error("reduction by an empty basis");
    for (const Polynomial& g : basis) {
        if (g.is_zero())
            throw value_error("reduction by a zero divisor");
        if (g.order() != f.order())
            throw dimension_error("divisor under a different monomial order");
        if (g.field() != f.field())
            throw domain_mismatch_error("divisor over a different field");
    }
    ReductionResult res{
        std::vector<Polynomial>(basis.size(), Polynomial::zero(f.order(), f.field())),
        Polynomial::zero(f.order(), f.field())};
    Polynomial p = f;
    while (!p.is_zero()) {
        const Term& lead = p.leading_term();
        bool reduced = false;
        for (std::size_t k = 0; k < basis.size(); ++k) {
            const Polynomial& g = basis[k];
            if (!g.leading_monomial().divides(lead.mono))
                continue;
            const Monomial qm = g.leading_monomial().divide_into(lead.mono);
            const Scalar qc = lead.coef / g.leading_coefficient();
            res.quotients[k] = res.quotients[k] + Polynomial::from_monomial(qm, qc, f.order());
            p = p - g.times_term(qm, qc);
            reduced = true;
            break;
        }
        if (!reduced) {
            const Polynomial t = Polynomial::from_monomial(lead.mono, lead.coef, f.order());
            res.remainder = res.remainder + t;
            p = p - t;
        }
    }
    return res;
}

// S(f,g) = (lcm/LT(f)) f - (lcm/LT(g)) g with lcm the monomial LCM of the
// leading monomials; the combination that cancels both leading terms.
inline Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
    if (f.is_zero() || g.is_zero())
        throw value_error("S-polynomial of a zero polynomial");
    if (f.order() != g.order())
        throw dimension_error("S-polynomial under different monomial orders");
    if (f.field() != g.field())
        throw domain_mismatch_error("S-polynomial over different fields");
    const Monomial l = f.leading_monomial().lcm(g.leading_monomial());
    const Polynomial left =
        f.times_term(f.leading_monomial().divide_into(l), f.leading_coefficient().inverse());
    const Polynomial right =
        g.times_term(g.leading_monomial().divide_into(l), g.leading_coefficient().inverse());
    return left - right;
}

} // namespace shiftgb
