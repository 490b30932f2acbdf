#pragma once

#include <algorithm>
#include <compare>
#include <numeric>
#include <string>
#include <vector>

#include "shiftgb/combinatorics.hpp"
#include "shiftgb/error.hpp"

namespace shiftgb {

// A monomial in x_1..x_d as its exponent vector, with the total degree
// cached. exponents()[i] is the exponent of x_{i+1}.
class Monomial {
  public:
    explicit Monomial(int var_count) : exp_(static_cast<std::size_t>(var_count), 0), degree_(0) {
        if (var_count < 1)
            throw dimension_error("monomial needs at least one variable");
    }

    explicit Monomial(std::vector<int> exponents) : exp_(std::move(exponents)) {
        if (exp_.empty())
            throw dimension_error("monomial needs at least one variable");
        for (int e : exp_)
            if (e < 0)
                throw value_error("negative exponent");
        degree_ = std::accumulate(exp_.begin(), exp_.end(), 0);
    }

    // The monomial x_var^power (var is 1-based).
    static Monomial variable(int var, int var_count, int power = 1) {
        Monomial m(var_count);
        if (var < 1 || var > var_count)
            throw dimension_error("variable index out of range");
        m.exp_[static_cast<std::size_t>(var - 1)] = power;
        m.degree_ = power;
        return m;
    }

    int var_count() const { return static_cast<int>(exp_.size()); }
    int degree() const { return degree_; }
    int exponent(int var) const { return exp_[static_cast<std::size_t>(var - 1)]; } // 1-based
    const std::vector<int>& exponents() const { return exp_; }
    bool is_one() const { return degree_ == 0; }

    Monomial operator*(const Monomial& o) const {
        check_dim(o);
        std::vector<int> e(exp_);
        for (std::size_t i = 0; i < e.size(); ++i)
            e[i] += o.exp_[i];
        return Monomial(std::move(e));
    }

    bool divides(const Monomial& o) const {
        check_dim(o);
        for (std::size_t i = 0; i < exp_.size(); ++i)
            if (exp_[i] > o.exp_[i])
                return false;
        return true;
    }

    // Quotient o / this; requires divisibility.
    Monomial divide_into(const Monomial& o) const {
        check_dim(o);
        std::vector<int> e(o.exp_);
        for (std::size_t i = 0; i < e.size(); ++i) {
            e[i] -= exp_[i];
            if (e[i] < 0)
                throw value_error("monomial division is not exact");
        }
        return Monomial(std::move(e));
    }

    Monomial lcm(const Monomial& o) const {
        check_dim(o);
        std::vector<int> e(exp_);
        for (std::size_t i = 0; i < e.size(); ++i)
            e[i] = std::max(e[i], o.exp_[i]);
        return Monomial(std::move(e));
    }

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.exp_ == b.exp_; }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }

    // Canonical text, variables ascending: "x1^2*x3", or "1" for the empty
    // monomial.
    std::string str() const {
        std::string out;
        for (std::size_t i = 0; i < exp_.size(); ++i) {
            if (exp_[i] == 0)
                continue;
            if (!out.empty())
                out += '*';
            out += 'x';
            out += std::to_string(i + 1);
            if (exp_[i] > 1) {
                out += '^';
                out += std::to_string(exp_[i]);
            }
        }
        return out.empty() ? "1" : out;
    }

  private:
    void check_dim(const Monomial& o) const {
        if (exp_.size() != o.exp_.size())
            throw dimension_error("monomials over different variable counts");
    }

    std::vector<int> exp_;
    int degree_;
};

enum class OrderKind { Lex, GrLex, GrevLex };

inline std::string order_token(OrderKind k) {
    switch (k) {
    case OrderKind::Lex: return "lex";
    case OrderKind::GrLex: return "grlex";
    default: return "grevlex";
    }
}

inline OrderKind order_from_token(const std::string& tok) {
    if (tok == "lex")
        return OrderKind::Lex;
    if (tok == "grlex")
        return OrderKind::GrLex;
    if (tok == "grevlex")
        return OrderKind::GrevLex;
    throw value_error("bad order token '" + tok + "'");
}

// A total order on monomials in d variables.
//
// Variable precedence is x_d > x_{d-1} > ... > x_1 throughout this library
// (x_1 is the LEAST variable). Most computer-algebra systems default to the
// opposite precedence, x_1 highest; reverse the variable numbering when
// comparing output against such systems.
class MonomialOrder {
  public:
    MonomialOrder(OrderKind kind, int var_count) : kind_(kind), vars_(var_count) {
        if (var_count < 1)
            throw dimension_error("order needs at least one variable");
    }

    static MonomialOrder lex(int d) { return {OrderKind::Lex, d}; }
    static MonomialOrder grlex(int d) { return {OrderKind::GrLex, d}; }
    static MonomialOrder grevlex(int d) { return {OrderKind::GrevLex, d}; }

    OrderKind kind() const { return kind_; }
    int var_count() const { return vars_; }
    std::string token() const { return order_token(kind_); }

    friend bool operator==(const MonomialOrder& a, const MonomialOrder& b) {
        return a.kind_ == b.kind_ && a.vars_ == b.vars_;
    }
    friend bool operator!=(const MonomialOrder& a, const MonomialOrder& b) { return !(a == b); }

    std::strong_ordering compare(const Monomial& a, const Monomial& b) const {
        if (a.var_count() != vars_ || b.var_count() != vars_)
            throw dimension_error("monomial/order variable count mismatch");
        switch (kind_) {
        case OrderKind::Lex:
            return lex_tiebreak(a, b);
        case OrderKind::GrLex:
            if (a.degree() != b.degree())
                return a.degree() <=> b.degree();
            return lex_tiebreak(a, b);
        default: // GrevLex
            if (a.degree() != b.degree())
                return a.degree() <=> b.degree();
            // scan ascending from x_1: at the first difference the monomial
            // with the SMALLER exponent is the greater one
            for (int i = 0; i < vars_; ++i) {
                const int ea = a.exponents()[static_cast<std::size_t>(i)];
                const int eb = b.exponents()[static_cast<std::size_t>(i)];
                if (ea != eb)
                    return eb <=> ea;
            }
            return std::strong_ordering::equal;
        }
    }

    bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
    bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

  private:
    // scan descending from x_d: at the first difference the larger exponent
    // wins
    std::strong_ordering lex_tiebreak(const Monomial& a, const Monomial& b) const {
        for (int i = vars_ - 1; i >= 0; --i) {
            const int ea = a.exponents()[static_cast<std::size_t>(i)];
            const int eb = b.exponents()[static_cast<std::size_t>(i)];
            if (ea != eb)
                return ea <=> eb;
        }
        return std::strong_ordering::equal;
    }

    OrderKind kind_;
    int vars_;
};

// All C(degree+d-1, d-1) monomials in d variables of exactly the given total
// degree, sorted descending under `ord`.
inline std::vector<Monomial> enumerate_monomials(int d, int degree, const MonomialOrder& ord) {
    if (d < 1 || degree < 0)
        throw value_error("enumerate_monomials: need d >= 1 and degree >= 0");
    if (ord.var_count() != d)
        throw dimension_error("enumerate_monomials: order variable count mismatch");
    std::vector<Monomial> out;
    std::vector<int> exps(static_cast<std::size_t>(d), 0);
    const auto emit = [&](auto&& self, int var, int remaining) -> void {
        if (var == d - 1) {
            exps[static_cast<std::size_t>(var)] = remaining;
            out.emplace_back(exps);
            return;
        }
        for (int e = 0; e <= remaining; ++e) {
            exps[static_cast<std::size_t>(var)] = e;
            self(self, var + 1, remaining - e);
        }
        exps[static_cast<std::size_t>(var)] = 0;
    };
    emit(emit, 0, degree);
    std::sort(out.begin(), out.end(),
              [&](const Monomial& a, const Monomial& b) { return ord.greater(a, b); });
    return out;
}

} // namespace shiftgb
