#include "qident/qseries.hpp"

namespace qident {
namespace {

Real one_at(const PrecisionContext& ctx) { return Real(1, ctx.precision_bits); }

// Shared truncation loop: multiplies factors 1 - u_j where |u_j| <= magnitude * |q|^j.
// Stops when the remaining-log bound magnitude*|q|^K / ((1-|q|)(1 - head)) < tol/16.
template <typename FactorFn>
Real truncated_product(const Real& magnitude, const Real& q, const PrecisionContext& ctx, FactorFn factor) {
    const Real one = one_at(ctx);
    if (!(q.abs() < one)) throw std::domain_error("divergent parameter domain");
    const Real tol_cut = ctx.tolerance() / 16;
    const Real qa = q.abs();
    Real p = one;
    Real tail_head = magnitude.abs();  // magnitude * |q|^j
    for (int j = 0; j < ctx.max_product_factors; ++j) {
        const Real denom = one - tail_head;
        if (denom.sign() > 0) {
            const Real tail_bound = tail_head / ((one - qa) * denom);
            if (tail_bound < tol_cut) return p;
        }
        p = p * factor(j);
        tail_head = tail_head * qa;
    }
    // one more chance: the bound may be reached exactly at the budget edge
    const Real denom = one - tail_head;
    if (denom.sign() > 0 && tail_head / ((one - qa) * denom) < tol_cut) return p;
    throw std::runtime_error("convergence budget exceeded");
}

}  // namespace

Real q_poch_inf(const Real& a, const Real& q, const PrecisionContext& ctx) {
    const Real one = one_at(ctx);
    Real t = a;
    return truncated_product(a, q, ctx, [&](int) {
        const Real f = one - t;
        t = t * q;
        return f;
    });
}

Real q_poch_inf(const Rational& a, const Rational& q, const PrecisionContext& ctx) {
    return q_poch_inf(Real(a, ctx.precision_bits), Real(q, ctx.precision_bits), ctx);
}

Real kernel_l_product(const Real& x, const Real& a, const Real& q, const PrecisionContext& ctx) {
    Real t = a;
    return truncated_product(a * 3, q, ctx, [&](int) {
        const Real f = kernel_l(x, t);
        t = t * q;
        return f;
    });
}

Real kernel_w_product(const Real& x, const Real& y, const Real& a, const Real& q,
                      const PrecisionContext& ctx) {
    Real t = a;
    return truncated_product(a * 15, q, ctx, [&](int) {
        const Real f = kernel_w(x, y, t);
        t = t * q;
        return f;
    });
}

bool q_shift_check(ShiftLaw law, const Rational& a, const Rational& q, int n, int k) {
    switch (law) {
        case ShiftLaw::s1: {
            // (a)_{n+k} = (a)_n (a q^n)_k
            return q_poch(a, q, n + k) == q_poch(a, q, n) * q_poch(a * q.pow(n), q, k);
        }
        case ShiftLaw::s2: {
            // (a q^n)_k / (a q^k)_n = (a)_k / (a)_n
            const Rational d1 = q_poch(a * q.pow(k), q, n);
            const Rational d2 = q_poch(a, q, n);
            if (d1.is_zero() || d2.is_zero()) throw std::domain_error("singular sample");
            return q_poch(a * q.pow(n), q, k) / d1 == q_poch(a, q, k) / d2;
        }
        case ShiftLaw::s3: {
            // finite form of (a^2|q^2)_inf = (a)_inf (-a)_inf
            return q_poch(a * a, q * q, n) == q_poch(a, q, n) * q_poch(-a, q, n);
        }
        case ShiftLaw::s4: {
            // finite form of (a)_inf = (a|q^2)_inf (aq|q^2)_inf
            return q_poch(a, q, 2 * n) == q_poch(a, q * q, n) * q_poch(a * q, q * q, n);
        }
        case ShiftLaw::knk1: {
            if (!(n >= k && k >= 0)) throw std::invalid_argument("knk1 requires n >= k >= 0");
            if (q.is_zero() && k == 0) throw std::domain_error("singular sample");  // q^{k-1}
            const Rational shift = a * q.pow(k - 1);
            const Rational den = Rational(1) - a * q.pow(2 * k - 1);
            if (den.is_zero()) throw std::domain_error("singular sample");
            const Rational lhs = q_poch(shift, q, k) * q_poch(a * q.pow(2 * k), q, n - k);
            const Rational rhs = q_poch(shift, q, n) * (Rational(1) - a * q.pow(n + k - 1)) / den;
            return lhs == rhs;
        }
        case ShiftLaw::knk2: {
            if (!(n >= k && k >= 0 && n >= 1)) throw std::invalid_argument("knk2 requires n >= max(k,1), k >= 0");
            const Rational den = q_poch(a * q.pow(k), q, n - 1);
            if (den.is_zero()) throw std::domain_error("singular sample");
            const Rational lhs = q_poch(a, q, k) * q_poch(a * q.pow(n + k - 1), q, n - k);
            return lhs == q_poch(a, q, 2 * n - 1) / den;
        }
    }
    throw std::logic_error("unknown shift law");
}

}  // namespace qident
