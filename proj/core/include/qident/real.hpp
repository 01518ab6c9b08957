#pragma once

#include <mpfr.h>

#include <algorithm>
#include <stdexcept>
#include <string>

#include "qident/rational.hpp"

namespace qident {

/// Arbitrary-precision real carried at an explicit binary precision (MPFR, round-to-nearest).
/// Binary operations produce a value at the larger of the two operand precisions,
/// so mixed-precision expressions never silently lose digits.
class Real {
public:
    explicit Real(mpfr_prec_t prec = 64) { mpfr_init2(v_, prec); mpfr_set_zero(v_, 1); }
    Real(long value, mpfr_prec_t prec) { mpfr_init2(v_, prec); mpfr_set_si(v_, value, MPFR_RNDN); }
    Real(const BigInt& value, mpfr_prec_t prec) {
        mpfr_init2(v_, prec);
        mpfr_set_z(v_, value.get_mpz_t(), MPFR_RNDN);
    }
    /// Exact to within 1 ulp at the target precision.
    Real(const Rational& r, mpfr_prec_t prec) {
        mpfr_init2(v_, prec);
        mpfr_set_q(v_, r.raw().get_mpq_t(), MPFR_RNDN);
    }

    Real(const Real& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
    Real(Real&& o) noexcept { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_swap(v_, o.v_); }
    Real& operator=(const Real& o) {
        if (this != &o) {
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }
    Real& operator=(Real&& o) noexcept {
        if (this != &o) mpfr_swap(v_, o.v_);
        return *this;
    }
    ~Real() { mpfr_clear(v_); }

    mpfr_prec_t precision() const { return mpfr_get_prec(v_); }

    static Real pi(mpfr_prec_t prec) {
        Real r(prec);
        mpfr_const_pi(r.v_, MPFR_RNDN);
        return r;
    }
    /// 2^e, exact.
    static Real pow2(long e, mpfr_prec_t prec) {
        Real r(1, prec);
        mpfr_mul_2si(r.v_, r.v_, e, MPFR_RNDN);
        return r;
    }

    bool is_zero() const { return mpfr_zero_p(v_); }
    int sign() const { return mpfr_sgn(v_); }

    Real abs() const {
        Real r(precision());
        mpfr_abs(r.v_, v_, MPFR_RNDN);
        return r;
    }
    Real sqrt() const {
        if (sign() < 0) throw std::domain_error("sqrt of negative value");
        Real r(precision());
        mpfr_sqrt(r.v_, v_, MPFR_RNDN);
        return r;
    }
    Real pow_int(long e) const {
        Real r(precision());
        mpfr_pow_si(r.v_, v_, e, MPFR_RNDN);
        return r;
    }

    /// floor(log2 |x|); used for the "~2^-k" residual annotations. Requires x != 0.
    long exp2_floor() const { return static_cast<long>(mpfr_get_exp(v_)) - 1; }

    /// Scientific-notation decimal string.
    std::string str(int digits = 20) const {
        char* s = nullptr;
        mpfr_asprintf(&s, "%.*Re", digits, v_);
        std::string out(s);
        mpfr_free_str(s);
        return out;
    }

    friend Real operator+(const Real& a, const Real& b) { return binop(a, b, mpfr_add); }
    friend Real operator-(const Real& a, const Real& b) { return binop(a, b, mpfr_sub); }
    friend Real operator*(const Real& a, const Real& b) { return binop(a, b, mpfr_mul); }
    friend Real operator/(const Real& a, const Real& b) {
        if (b.is_zero()) throw std::domain_error("division by zero");
        return binop(a, b, mpfr_div);
    }
    Real operator-() const {
        Real r(precision());
        mpfr_neg(r.v_, v_, MPFR_RNDN);
        return r;
    }

    Real& operator+=(const Real& o) { *this = *this + o; return *this; }
    Real& operator-=(const Real& o) { *this = *this - o; return *this; }
    Real& operator*=(const Real& o) { *this = *this * o; return *this; }
    Real& operator/=(const Real& o) { *this = *this / o; return *this; }

    friend Real operator*(const Real& a, long b) {
        Real r(a.precision());
        mpfr_mul_si(r.v_, a.v_, b, MPFR_RNDN);
        return r;
    }
    friend Real operator*(long a, const Real& b) { return b * a; }
    friend Real operator/(const Real& a, long b) {
        if (b == 0) throw std::domain_error("division by zero");
        Real r(a.precision());
        mpfr_div_si(r.v_, a.v_, b, MPFR_RNDN);
        return r;
    }

    friend bool operator==(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) == 0; }
    friend bool operator!=(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) != 0; }
    friend bool operator<(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) < 0; }
    friend bool operator<=(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) <= 0; }
    friend bool operator>(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) > 0; }
    friend bool operator>=(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) >= 0; }

private:
    using mpfr_fn = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_srcptr, mpfr_rnd_t);
    static Real binop(const Real& a, const Real& b, mpfr_fn fn) {
        Real r(std::max(a.precision(), b.precision()));
        fn(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    mpfr_t v_;
};

/// Numeric evaluation budget shared by every infinite sum/product.
struct PrecisionContext {
    long precision_bits = 256;
    long tolerance_exp = -80;  // tolerance = 2^tolerance_exp
    int max_terms = 200;
    int max_product_factors = 400;

    PrecisionContext() = default;
    PrecisionContext(long bits, long tol_exp, int terms, int factors)
        : precision_bits(bits), tolerance_exp(tol_exp), max_terms(terms), max_product_factors(factors) {
        validate();
    }
    void validate() const {
        if (precision_bits < 64) throw std::invalid_argument("precision_bits must be >= 64");
        if (max_terms < 8) throw std::invalid_argument("max_terms must be >= 8");
        if (max_product_factors < 1) throw std::invalid_argument("max_product_factors must be >= 1");
    }
    Real tolerance() const { return Real::pow2(tolerance_exp, precision_bits); }
};

using BigReal = Real;

/// Exact to 1 ulp at ctx precision.
inline Real to_real(const Rational& r, const PrecisionContext& ctx) { return Real(r, ctx.precision_bits); }

}  // namespace qident
