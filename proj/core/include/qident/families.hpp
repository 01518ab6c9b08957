#pragma once

#include <span>
#include <stdexcept>
#include <vector>

#include "qident/jacobi.hpp"
#include "qident/qseries.hpp"

namespace qident {

/// Continuous q-Hermite: h_n = 2x h_{n-1} + (q^{n-1} - 1) h_{n-2}, h_0 = 1, h_1 = 2x.
/// h_n(1|q) are the Galois numbers.
template <Scalar S>
S qhermite_eval(int n, const S& x, const S& q) {
    S h0 = make_like(x, 1);
    if (n == 0) return h0;
    S h1 = make_like(x, 2) * x;
    S qpow = q;  // q^{m-1}
    for (int m = 2; m <= n; ++m) {
        S h2 = make_like(x, 2) * x * h1 + (qpow - make_like(x, 1)) * h0;
        h0 = h1;
        h1 = h2;
        qpow = qpow * q;
    }
    return h1;
}

/// Auxiliary family b_n(x|q) = (-1)^n q^C(n,2) h_n(x|1/q), evaluated through the
/// equivalent polynomial recurrence b_n = -2x q^{n-1} b_{n-1} + q^{n-2}(1-q^{n-1}) b_{n-2},
/// which also covers q = 0 (b_0 = b_2 = 1, b_1 = -2x, rest 0).
template <Scalar S>
S bpoly_eval(int n, const S& x, const S& q) {
    S b0 = make_like(x, 1);
    if (n == 0) return b0;
    S b1 = make_like(x, -2) * x;
    S qn1 = q;                    // q^{m-1}
    S qn2 = make_like(x, 1);      // q^{m-2}
    for (int m = 2; m <= n; ++m) {
        S b2 = make_like(x, -2) * x * qn1 * b1 + qn2 * (make_like(x, 1) - qn1) * b0;
        b0 = b1;
        b1 = b2;
        qn2 = qn1;
        qn1 = qn1 * q;
    }
    return b1;
}

/// Continuous q-ultraspherical (Rogers):
/// (1-q^{m+1}) C_{m+1} = 2x(1-beta q^m) C_m - (1-beta^2 q^{m-1}) C_{m-1}, C_0 = 1,
/// C_1 = 2x(1-beta)/(1-q). Throws "singular q" when a leading factor 1-q^{m+1} vanishes.
template <Scalar S>
S rogers_eval(int n, const S& x, const S& beta, const S& q) {
    const S one = make_like(x, 1);
    S c0 = one;
    if (n == 0) return c0;
    if (scalar_is_zero(one - q)) throw std::domain_error("singular q");
    S c1 = make_like(x, 2) * x * (one - beta) / (one - q);
    S qm = q;        // q^m
    S qm1 = one;     // q^{m-1}
    for (int m = 1; m < n; ++m) {
        const S lead = one - qm * q;
        if (scalar_is_zero(lead)) throw std::domain_error("singular q");
        S c2 = (make_like(x, 2) * x * (one - beta * qm) * c1 - (one - beta * beta * qm1) * c0) / lead;
        c0 = c1;
        c1 = c2;
        qm1 = qm;
        qm = qm * q;
    }
    return c1;
}

/// The (y, rho) parametrization of the two complex-conjugate ASC parameters
/// a = rho e^{i t}, b = rho e^{-i t} with cos t = y; the complex pair itself is
/// never materialized.
template <Scalar S>
struct ASCParams {
    S y, rho, q;
};

/// Al-Salam--Chihara in the (y, rho) parametrization:
/// p_{n+1} = (2x - 2 rho y q^n) p_n - (1-q^n)(1-rho^2 q^{n-1}) p_{n-1}, p_0 = 1.
/// rho = 0 degenerates to the q-Hermite recurrence.
template <Scalar S>
S asc_eval(int n, const S& x, const S& y, const S& rho, const S& q) {
    const S one = make_like(x, 1);
    S p0 = one;
    if (n == 0) return p0;
    S p1 = make_like(x, 2) * x - make_like(x, 2) * rho * y;
    S qm = q;                 // q^m
    S qm1 = one;              // q^{m-1}
    for (int m = 1; m < n; ++m) {
        S p2 = (make_like(x, 2) * x - make_like(x, 2) * rho * y * qm) * p1 -
               (one - qm) * (one - rho * rho * qm1) * p0;
        p0 = p1;
        p1 = p2;
        qm1 = qm;
        qm = qm * q;
    }
    return p1;
}

template <Scalar S>
S asc_eval(int n, const S& x, const ASCParams<S>& p) {
    return asc_eval(n, x, p.y, p.rho, p.q);
}

/// g_n(x|y,rho,q) = rho^n p_n(y|x, 1/rho, q) for rho != 0, and b_n(x|q) at rho = 0.
template <Scalar S>
S g_eval(int n, const S& x, const S& y, const S& rho, const S& q) {
    if (scalar_is_zero(rho)) return bpoly_eval(n, x, q);
    S rn = make_like(x, 1);
    for (int i = 0; i < n; ++i) rn = rn * rho;
    return rn * asc_eval(n, y, x, make_like(x, 1) / rho, q);
}

/// Askey--Wilson alpha_n, defined by its expansion in ASC polynomials:
/// alpha_n = sum_j [n j]_q p_j(x|y,rho1,q) rho2^{n-j} (rho1^2 q^j)_{n-j}
///           / (rho1^2 rho2^2 q^{n+j-1})_{n-j} * g_{n-j}(z|y, rho1 rho2 q^{n-1}, q).
template <Scalar S>
S aw_alpha_eval(int n, const S& x, const S& y, const S& rho1, const S& z, const S& rho2, const S& q) {
    const auto row = q_binomial_row(n, q);
    const S r1sq = rho1 * rho1;
    const S bsq = r1sq * rho2 * rho2;
    S qn1 = make_like(q, 1);  // q^{n-1}
    for (int i = 0; i < n - 1; ++i) qn1 = qn1 * q;
    const S twist = rho1 * rho2 * qn1;
    S qj = make_like(q, 1);
    S sum = make_like(x, 0);
    for (int j = 0; j <= n; ++j) {
        const S den = q_poch(bsq * qn1 * qj, q, n - j);
        if (scalar_is_zero(den)) throw std::domain_error("singular parameters");
        S r2pow = make_like(x, 1);
        for (int i = 0; i < n - j; ++i) r2pow = r2pow * rho2;
        sum = sum + row[j] * asc_eval(j, x, y, rho1, q) * r2pow * q_poch(r1sq * qj, q, n - j) / den *
                        g_eval(n - j, z, y, twist, q);
        qj = qj * q;
    }
    return sum;
}

enum class Family { q_hermite, chebyshev_u, rogers, al_salam_chihara, askey_wilson };

/// Squared norms against each family's orthogonality density.
/// Parameter layout: q_hermite {q}; chebyshev_u {q} (unused, fixes the scalar kind);
/// rogers {beta, q}; al_salam_chihara {rho, q}; askey_wilson {y, rho1, z, rho2, q}.
template <Scalar S>
S family_norm(Family f, int n, std::span<const S> params) {
    if (params.empty()) throw std::invalid_argument("family_norm: missing parameters");
    switch (f) {
        case Family::q_hermite: {
            const S& q = params[0];
            return q_poch(q, q, n);
        }
        case Family::chebyshev_u:
            return make_like(params[0], 1);
        case Family::rogers: {
            const S &beta = params[0], &q = params[1];
            S qn = make_like(q, 1);
            for (int i = 0; i < n; ++i) qn = qn * q;
            const S den = (make_like(q, 1) - beta * qn) * q_poch(q, q, n);
            if (scalar_is_zero(den)) throw std::domain_error("singular parameters");
            return q_poch(beta * beta, q, n) * (make_like(q, 1) - beta) / den;
        }
        case Family::al_salam_chihara: {
            const S &rho = params[0], &q = params[1];
            return q_poch(q, q, n) * q_poch(rho * rho, q, n);
        }
        case Family::askey_wilson: {
            const S &y = params[0], &rho1 = params[1], &z = params[2], &rho2 = params[3], &q = params[4];
            const S bsq = rho1 * rho1 * rho2 * rho2;
            S qn1 = make_like(q, 1);
            for (int i = 0; i < n - 1; ++i) qn1 = qn1 * q;
            const S den = q_poch(bsq, q, 2 * n) * q_poch(bsq * qn1, q, n);
            if (scalar_is_zero(den)) throw std::domain_error("singular parameters");
            S wprod = make_like(q, 1);
            S t = rho1 * rho2;
            for (int j = 0; j < n; ++j) {
                wprod = wprod * kernel_w(z, y, t);
                t = t * q;
            }
            return q_poch(q, q, n) * q_poch(rho1 * rho1, q, n) * q_poch(rho2 * rho2, q, n) * wprod / den;
        }
    }
    throw std::logic_error("unknown family");
}

// ---- densities -------------------------------------------------------------------

enum class DensityFamily { f_h, f_c, f_cn, f_c2n };

/// One density instance: family + its rational parameter tuple + numeric budget.
/// Parameter layout: f_h {q}; f_c {beta, q}; f_cn {rho, q}; f_c2n {rho1, rho2, q}.
struct DensitySpec {
    DensityFamily family;
    std::vector<Rational> params;
    PrecisionContext ctx;
};

/// Evaluate the density at a point on its support.
/// Point layout: f_h {x}; f_c {x}; f_cn {x, y} for f_CN(x|y,rho,q); f_c2n {x, y, z}.
/// Errors: "outside support" for arguments with |t| >= 1, "divergent parameter domain"
/// for parameter bounds, "convergence budget exceeded" from product truncation.
Real density_eval(const DensitySpec& spec, std::span<const Rational> point);

}  // namespace qident
