#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace qident {

using BigInt = mpz_class;

/// Arbitrary-size rational in canonical form: denominator > 0, gcd(|num|, den) = 1.
/// Thin value wrapper around GMP's mpq_class; all arithmetic is exact.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}  // NOLINT: implicit by design, mirrors integer literals
    Rational(const BigInt& n) : v_(n) {}
    Rational(long n, long d) {
        if (d == 0) throw std::domain_error("zero denominator");
        v_ = mpq_class(n, d);
        v_.canonicalize();
    }
    Rational(const BigInt& n, const BigInt& d) {
        if (d == 0) throw std::domain_error("zero denominator");
        v_ = mpq_class(n, d);
        v_.canonicalize();
    }

    /// Accepts "p/q", integers, and plain decimals ("-0.35" -> -7/20).
    static Rational parse(const std::string& text);

    BigInt num() const { return v_.get_num(); }
    BigInt den() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    int sign() const { return sgn(v_); }
    bool is_integer() const { return v_.get_den() == 1; }

    Rational abs() const { return Rational(mpq_class(::abs(v_))); }

    /// Integer power; negative exponents require a nonzero base.
    Rational pow(long e) const {
        if (e == 0) return Rational(1);
        if (is_zero() && e < 0) throw std::domain_error("division by zero");
        Rational base = e > 0 ? *this : inv();
        unsigned long k = static_cast<unsigned long>(e > 0 ? e : -e);
        mpq_class r;
        mpz_pow_ui(r.get_num_mpz_t(), base.v_.get_num_mpz_t(), k);
        mpz_pow_ui(r.get_den_mpz_t(), base.v_.get_den_mpz_t(), k);
        return Rational(std::move(r), already_canonical{});
    }

    Rational inv() const {
        if (is_zero()) throw std::domain_error("division by zero");
        mpq_class r;
        mpq_inv(r.get_mpq_t(), v_.get_mpq_t());
        return Rational(std::move(r), already_canonical{});
    }

    std::string str() const {
        if (v_.get_den() == 1) return v_.get_num().get_str();
        return v_.get_num().get_str() + "/" + v_.get_den().get_str();
    }

    friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ + b.v_)); }
    friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ - b.v_)); }
    friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ * b.v_)); }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero()) throw std::domain_error("division by zero");
        return Rational(mpq_class(a.v_ / b.v_));
    }
    Rational operator-() const { return Rational(mpq_class(-v_)); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) { *this = *this / o; return *this; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    const mpq_class& raw() const { return v_; }

private:
    struct already_canonical {};
    Rational(mpq_class&& v, already_canonical) : v_(std::move(v)) {}
    explicit Rational(mpq_class v) : v_(std::move(v)) {}  // gmp ops keep canonical form
    mpq_class v_;
};

using ExactRational = Rational;

/// Canonical n/d; errors on d = 0.
inline Rational rat(long n, long d) { return Rational(n, d); }
inline Rational rat(const BigInt& n, const BigInt& d) { return Rational(n, d); }

inline Rational Rational::parse(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty rational literal");
    auto slash = text.find('/');
    if (slash != std::string::npos) {
        const std::string ns = text.substr(0, slash), ds = text.substr(slash + 1);
        if (ns.empty() || ds.empty()) throw std::invalid_argument("malformed rational literal");
        BigInt n(ns, 10), d(ds, 10);
        return rat(n, d);
    }
    auto dot = text.find('.');
    if (dot == std::string::npos) return Rational(BigInt(text, 10));
    std::string digits = text.substr(0, dot) + text.substr(dot + 1);
    const std::size_t frac_len = text.size() - dot - 1;
    if (digits.empty() || digits == "-" || digits == "+") throw std::invalid_argument("malformed decimal literal");
    BigInt n(digits, 10), d;
    mpz_ui_pow_ui(d.get_mpz_t(), 10, frac_len);
    return rat(n, d);
}

}  // namespace qident
