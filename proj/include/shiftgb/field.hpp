#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <ostream>
#include <string>
#include <utility>

#include "shiftgb/error.hpp"

namespace shiftgb {

using bigint_t = boost::multiprecision::cpp_int;
using rational_t = boost::multiprecision::cpp_rational;

namespace detail {

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

inline std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t acc = 1 % m;
    base %= m;
    while (exp) {
        if (exp & 1)
            acc = mulmod(acc, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return acc;
}

// Deterministic Miller-Rabin; the witness set below decides primality for all
// 64-bit integers.
inline bool is_prime_u64(std::uint64_t n) {
    if (n < 2)
        return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0)
            return n == p;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1)
            continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite)
            return false;
    }
    return true;
}

// Extended Euclid on uint64, returns x with a*x = 1 (mod m); a must be
// nonzero mod m and m prime.
inline std::uint64_t invmod(std::uint64_t a, std::uint64_t m) {
    long long t = 0, new_t = 1;
    long long r = static_cast<long long>(m), new_r = static_cast<long long>(a % m);
    while (new_r != 0) {
        const long long q = r / new_r;
        t = std::exchange(new_t, t - q * new_t);
        r = std::exchange(new_r, r - q * new_r);
    }
    if (t < 0)
        t += static_cast<long long>(m);
    return static_cast<std::uint64_t>(t);
}

} // namespace detail

// The exact coefficient domain: the rationals, or a prime field F_p.
class FieldSpec {
  public:
    enum class Kind { Rationals, PrimeField };

    static FieldSpec rationals() { return FieldSpec(Kind::Rationals, 0); }

    static FieldSpec prime_field(std::uint64_t p) {
        if (p > (std::uint64_t(1) << 62))
            throw value_error("prime modulus exceeds the supported machine-word range");
        if (!detail::is_prime_u64(p))
            throw value_error("modulus " + std::to_string(p) + " is not prime");
        return FieldSpec(Kind::PrimeField, p);
    }

    Kind kind() const { return kind_; }
    bool is_rationals() const { return kind_ == Kind::Rationals; }
    bool is_prime_field() const { return kind_ == Kind::PrimeField; }
    std::uint64_t modulus() const { return modulus_; }

    // Textual form used by the CLI: "q" or "fp:<modulus>".
    std::string token() const {
        return is_rationals() ? "q" : "fp:" + std::to_string(modulus_);
    }

    static FieldSpec from_token(const std::string& tok) {
        if (tok == "q")
            return rationals();
        if (tok.rfind("fp:", 0) == 0) {
            const std::string num = tok.substr(3);
            if (num.empty() || num.find_first_not_of("0123456789") != std::string::npos)
                throw value_error("bad field token '" + tok + "'");
            return prime_field(std::stoull(num));
        }
        throw value_error("bad field token '" + tok + "' (expected 'q' or 'fp:<p>')");
    }

    friend bool operator==(const FieldSpec& a, const FieldSpec& b) {
        return a.kind_ == b.kind_ && a.modulus_ == b.modulus_;
    }
    friend bool operator!=(const FieldSpec& a, const FieldSpec& b) { return !(a == b); }

  private:
    FieldSpec(Kind k, std::uint64_t m) : kind_(k), modulus_(m) {}

    Kind kind_;
    std::uint64_t modulus_;
};

// An element of the field named by its FieldSpec. Values are canonical at
// all times: rationals in lowest terms with positive denominator, prime
// field residues fully reduced into [0, p). Immutable after construction.
class Scalar {
  public:
    Scalar() : spec_(FieldSpec::rationals()), rat_(0) {}

    static Scalar zero(const FieldSpec& fs) { return from_int(0, fs); }
    static Scalar one(const FieldSpec& fs) { return from_int(1, fs); }

    static Scalar from_int(long long v, const FieldSpec& fs) {
        if (fs.is_rationals())
            return Scalar(fs, rational_t(v), 0);
        const auto p = static_cast<long long>(fs.modulus());
        long long r = v % p;
        if (r < 0)
            r += p;
        return Scalar(fs, rational_t(), static_cast<std::uint64_t>(r));
    }

    static Scalar from_rational(bigint_t num, bigint_t den = 1) {
        if (den == 0)
            throw division_by_zero_error("rational with zero denominator");
        if (den < 0) { // cpp_rational requires a positive denominator
            num = -num;
            den = -den;
        }
        return Scalar(FieldSpec::rationals(), rational_t(std::move(num), std::move(den)), 0);
    }

    static Scalar from_rational(const rational_t& v) {
        return Scalar(FieldSpec::rationals(), v, 0);
    }

    static Scalar from_residue(std::uint64_t v, const FieldSpec& fs) {
        if (!fs.is_prime_field())
            throw value_error("residue constructor requires a prime field");
        return Scalar(fs, rational_t(), v % fs.modulus());
    }

    const FieldSpec& spec() const { return spec_; }

    bool is_zero() const { return spec_.is_rationals() ? rat_ == 0 : res_ == 0; }
    bool is_one() const { return spec_.is_rationals() ? rat_ == 1 : res_ == 1 % spec_.modulus(); }

    const rational_t& rational_value() const {
        require(spec_.is_rationals(), "rational_value on a prime-field scalar");
        return rat_;
    }

    std::uint64_t residue_value() const {
        require(spec_.is_prime_field(), "residue_value on a rational scalar");
        return res_;
    }

    Scalar operator-() const {
        if (spec_.is_rationals())
            return Scalar(spec_, -rat_, 0);
        return Scalar(spec_, rational_t(), res_ == 0 ? 0 : spec_.modulus() - res_);
    }

    Scalar inverse() const {
        if (is_zero())
            throw division_by_zero_error("inverse of zero");
        if (spec_.is_rationals())
            return Scalar(spec_, rational_t(1) / rat_, 0);
        return Scalar(spec_, rational_t(), detail::invmod(res_, spec_.modulus()));
    }

    friend Scalar operator+(const Scalar& a, const Scalar& b) {
        a.check_same_spec(b);
        if (a.spec_.is_rationals())
            return Scalar(a.spec_, a.rat_ + b.rat_, 0);
        const std::uint64_t p = a.spec_.modulus();
        const auto s = static_cast<unsigned __int128>(a.res_) + b.res_;
        return Scalar(a.spec_, rational_t(), static_cast<std::uint64_t>(s % p));
    }

    friend Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

    friend Scalar operator*(const Scalar& a, const Scalar& b) {
        a.check_same_spec(b);
        if (a.spec_.is_rationals())
            return Scalar(a.spec_, a.rat_ * b.rat_, 0);
        return Scalar(a.spec_, rational_t(), detail::mulmod(a.res_, b.res_, a.spec_.modulus()));
    }

    friend Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }

    friend bool operator==(const Scalar& a, const Scalar& b) {
        if (a.spec_ != b.spec_)
            return false;
        return a.spec_.is_rationals() ? a.rat_ == b.rat_ : a.res_ == b.res_;
    }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    // Canonical text: "num/den" or "num" over the rationals, the reduced
    // residue over a prime field.
    std::string str() const {
        if (spec_.is_prime_field())
            return std::to_string(res_);
        if (denominator(rat_) == 1)
            return numerator(rat_).str();
        return numerator(rat_).str() + "/" + denominator(rat_).str();
    }

    static Scalar parse(const std::string& text, const FieldSpec& fs);

    friend std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

  private:
    Scalar(FieldSpec fs, rational_t r, std::uint64_t v)
        : spec_(std::move(fs)), rat_(std::move(r)), res_(v) {}

    void check_same_spec(const Scalar& other) const {
        if (spec_ != other.spec_)
            throw domain_mismatch_error("operation mixes " + spec_.token() + " and " +
                                        other.spec_.token() + " scalars");
    }

    static void require(bool cond, const char* msg) {
        if (!cond)
            throw value_error(msg);
    }

    FieldSpec spec_;
    rational_t rat_; // used iff spec_ is Rationals
    std::uint64_t res_ = 0; // used iff spec_ is PrimeField
};

inline Scalar Scalar::parse(const std::string& text, const FieldSpec& fs) {
    if (text.empty())
        throw value_error("empty scalar text");
    bool negative = false;
    std::size_t pos = 0;
    if (text[pos] == '-' || text[pos] == '+') {
        negative = text[pos] == '-';
        ++pos;
    }
    const auto read_digits = [&]() -> bigint_t {
        const std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            ++pos;
        if (pos == start)
            throw value_error("bad scalar text '" + text + "'");
        return bigint_t(text.substr(start, pos - start));
    };
    bigint_t num = read_digits();
    bigint_t den = 1;
    if (pos < text.size() && text[pos] == '/') {
        ++pos;
        den = read_digits();
    }
    if (pos != text.size())
        throw value_error("bad scalar text '" + text + "'");
    if (negative)
        num = -num;
    if (fs.is_rationals())
        return from_rational(std::move(num), std::move(den));
    if (den != 1)
        throw value_error("fractional text '" + text + "' for a prime-field scalar");
    const bigint_t p(fs.modulus());
    bigint_t r = num % p;
    if (r < 0)
        r += p;
    return from_residue(r.convert_to<std::uint64_t>(), fs);
}

} // namespace shiftgb
