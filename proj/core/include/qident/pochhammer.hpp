#pragma once

#include <concepts>
#include <stdexcept>
#include <vector>

#include "qident/rational.hpp"
#include "qident/real.hpp"

namespace qident {

/// Either ExactRational or BigReal: a field type with exact-or-rounded semantics.
template <typename S>
concept Scalar = requires(const S& a, const S& b) {
    { a + b } -> std::convertible_to<S>;
    { a - b } -> std::convertible_to<S>;
    { a * b } -> std::convertible_to<S>;
    { a / b } -> std::convertible_to<S>;
    { -a } -> std::convertible_to<S>;
    { a == b } -> std::convertible_to<bool>;
};

/// Integer constant of the same scalar kind (and, for Real, precision) as `like`.
inline Rational make_like(const Rational&, long v) { return Rational(v); }
inline Real make_like(const Real& like, long v) { return Real(v, like.precision()); }
inline Rational make_like(const Rational&, const BigInt& v) { return Rational(v); }
inline Real make_like(const Real& like, const BigInt& v) { return Real(v, like.precision()); }

inline bool scalar_is_zero(const Rational& v) { return v.is_zero(); }
inline bool scalar_is_zero(const Real& v) { return v.is_zero(); }

/// Rising factorial (x)^(n) = x(x+1)...(x+n-1); empty product for n = 0.
template <Scalar S>
S rising(const S& x, int n) {
    if (n < 0) throw std::invalid_argument("rising: negative order");
    S p = make_like(x, 1);
    for (int j = 0; j < n; ++j) p = p * (x + make_like(x, j));
    return p;
}

/// Falling factorial (x)_(n) = x(x-1)...(x-n+1).
template <Scalar S>
S falling(const S& x, int n) {
    if (n < 0) throw std::invalid_argument("falling: negative order");
    S p = make_like(x, 1);
    for (int j = 0; j < n; ++j) p = p * (x - make_like(x, j));
    return p;
}

/// C(n,k); zero outside 0 <= k <= n.
inline BigInt binomial(long n, long k) {
    if (k < 0 || k > n || n < 0) return BigInt(0);
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

inline BigInt factorial(long n) {
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

enum class StirlingKind { first_unsigned, second };

/// Triangular table of Stirling numbers built by recurrence:
///   first_unsigned: c(n,j) = c(n-1,j-1) + (n-1) c(n-1,j)
///   second:         S(n,j) = S(n-1,j-1) + j c(n-1,j)
class StirlingTable {
public:
    static StirlingTable build(StirlingKind kind, int rows) {
        if (rows < 0) throw std::invalid_argument("stirling_table: negative size");
        StirlingTable t;
        t.kind_ = kind;
        t.rows_.resize(rows + 1);
        t.rows_[0] = {BigInt(1)};
        for (int n = 1; n <= rows; ++n) {
            t.rows_[n].assign(n + 1, BigInt(0));
            for (int j = 1; j <= n; ++j) {
                const BigInt above = j <= n - 1 ? t.rows_[n - 1][j] : BigInt(0);
                const BigInt mult = kind == StirlingKind::first_unsigned ? BigInt(n - 1) : BigInt(j);
                t.rows_[n][j] = t.rows_[n - 1][j - 1] + mult * above;
            }
        }
        return t;
    }

    StirlingKind kind() const { return kind_; }
    int size() const { return static_cast<int>(rows_.size()) - 1; }
    const BigInt& value(int n, int j) const { return rows_.at(n).at(j); }
    const std::vector<BigInt>& row(int n) const { return rows_.at(n); }

private:
    StirlingKind kind_ = StirlingKind::first_unsigned;
    std::vector<std::vector<BigInt>> rows_;
};

inline StirlingTable stirling_table(StirlingKind kind, int rows) { return StirlingTable::build(kind, rows); }

}  // namespace qident
