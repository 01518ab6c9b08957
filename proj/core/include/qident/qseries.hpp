#pragma once

#include <span>
#include <stdexcept>
#include <vector>

#include "qident/pochhammer.hpp"

namespace qident {

/// [n]_q = 1 + q + ... + q^{n-1}; [0]_q = 0. Valid for every q including 0 and 1.
template <Scalar S>
S q_number(int n, const S& q) {
    S s = make_like(q, 0);
    for (int j = 0; j < n; ++j) s = s * q + make_like(q, 1);  // Horner over equal coefficients
    return s;
}

template <Scalar S>
S q_factorial(int n, const S& q) {
    S p = make_like(q, 1);
    for (int j = 1; j <= n; ++j) p = p * q_number(j, q);
    return p;
}

/// Row n of the Gaussian-binomial triangle via the q-Pascal rule
/// [n k] = [n-1 k-1] + q^k [n-1 k]; polynomial in q, so q = 0 and q = 1 need no limits.
template <Scalar S>
std::vector<S> q_binomial_row(int n, const S& q) {
    std::vector<S> row{make_like(q, 1)};
    for (int m = 1; m <= n; ++m) {
        std::vector<S> next;
        next.reserve(m + 1);
        next.push_back(make_like(q, 1));
        S qk = q;
        for (int k = 1; k < m; ++k) {
            next.push_back(row[k - 1] + qk * row[k]);
            qk = qk * q;
        }
        next.push_back(make_like(q, 1));
        row = std::move(next);
    }
    return row;
}

template <Scalar S>
S q_binomial(int n, int k, const S& q) {
    if (k < 0 || k > n || n < 0) return make_like(q, 0);
    return q_binomial_row(n, q)[k];
}

/// Finite q-Pochhammer (a|q)_n = prod_{j=0}^{n-1} (1 - a q^j).
template <Scalar S>
S q_poch(const S& a, const S& q, int n) {
    if (n < 0) throw std::invalid_argument("q_poch: negative order");
    S p = make_like(a, 1);
    S t = a;
    for (int j = 0; j < n; ++j) {
        p = p * (make_like(a, 1) - t);
        t = t * q;
    }
    return p;
}

template <Scalar S>
S q_poch_multi(std::span<const S> as, const S& q, int n) {
    S p = make_like(q, 1);
    for (const S& a : as) p = p * q_poch(a, q, n);
    return p;
}

/// v(x|a) = 1 - 2ax + a^2
template <Scalar S>
S kernel_v(const S& x, const S& a) {
    return make_like(x, 1) - make_like(x, 2) * a * x + a * a;
}

/// l(x|a) = (1+a)^2 - 4x^2 a
template <Scalar S>
S kernel_l(const S& x, const S& a) {
    const S one = make_like(x, 1);
    return (one + a) * (one + a) - make_like(x, 4) * x * x * a;
}

/// w(x,y|a) = (1-a^2)^2 - 4xya(1+a^2) + 4a^2(x^2+y^2)
template <Scalar S>
S kernel_w(const S& x, const S& y, const S& a) {
    const S one = make_like(x, 1);
    const S a2 = a * a;
    return (one - a2) * (one - a2) - make_like(x, 4) * x * y * a * (one + a2) +
           make_like(x, 4) * a2 * (x * x + y * y);
}

// ---- numeric (infinite) objects -------------------------------------------------

/// Parameter bundle for the infinite q-objects: |q| < 1 enforced at use.
struct QPochConfig {
    Real q;
    PrecisionContext ctx;
};

/// (a|q)_inf for |q| < 1. Truncated once the geometric tail bound drops below
/// tolerance/16 (10x-style safety margin over ctx.tolerance); errors:
/// "divergent parameter domain" for |q| >= 1, "convergence budget exceeded" when
/// max_product_factors factors do not reach the bound.
Real q_poch_inf(const Real& a, const Real& q, const PrecisionContext& ctx);
Real q_poch_inf(const Rational& a, const Rational& q, const PrecisionContext& ctx);
inline Real q_poch_inf(const Real& a, const QPochConfig& cfg) { return q_poch_inf(a, cfg.q, cfg.ctx); }

/// prod_{j>=0} l(x|a q^j), same truncation policy (|l - 1| <= 3|a q^j| for |x| <= 1).
Real kernel_l_product(const Real& x, const Real& a, const Real& q, const PrecisionContext& ctx);

/// prod_{j>=0} w(x,y|a q^j)  (|w - 1| <= 15|a q^j| for |x|,|y| <= 1).
Real kernel_w_product(const Real& x, const Real& y, const Real& a, const Real& q,
                      const PrecisionContext& ctx);

// ---- shift laws ------------------------------------------------------------------

enum class ShiftLaw { s1, s2, s3, s4, knk1, knk2 };

/// Exact check of the named finite shift law at rational (a, q) and orders (n, k).
/// s3/s4 are the finite-n analogues of the infinite-product splittings; knk1/knk2
/// require n >= k >= 0. Throws std::domain_error("singular sample") when a
/// denominator vanishes at the sampled point.
bool q_shift_check(ShiftLaw law, const Rational& a, const Rational& q, int n, int k);

}  // namespace qident
