#include "qident/families.hpp"

namespace qident {
namespace {

void require_open_unit(const Rational& v, const char* what) {
    if (!(v.abs() < Rational(1))) throw std::domain_error(what);
}

Real f_h_value(const Real& x, const Rational& q, const PrecisionContext& ctx) {
    const auto prec = ctx.precision_bits;
    const Real one(1, prec);
    const Real qr(q, prec);
    // 2 (q)_inf sqrt(1-x^2) / pi * prod_{k>=1} l(x|q^k)
    const Real tail = kernel_l_product(x, qr, qr, ctx);  // factors l(x|q^{1+j})
    return Real(2, prec) * q_poch_inf(qr, qr, ctx) * (one - x * x).sqrt() / Real::pi(prec) * tail;
}

Real f_cn_value(const Real& x, const Real& y, const Rational& rho, const Rational& q,
                const PrecisionContext& ctx) {
    const auto prec = ctx.precision_bits;
    const Real rr(rho, prec), qr(q, prec);
    return f_h_value(x, q, ctx) * q_poch_inf(rr * rr, qr, ctx) / kernel_w_product(x, y, rr, qr, ctx);
}

Real point_on_support(const Rational& t, const PrecisionContext& ctx) {
    if (!(t.abs() < Rational(1))) throw std::domain_error("outside support");
    return Real(t, ctx.precision_bits);
}

}  // namespace

Real density_eval(const DensitySpec& spec, std::span<const Rational> point) {
    const PrecisionContext& ctx = spec.ctx;
    switch (spec.family) {
        case DensityFamily::f_h: {
            const Rational& q = spec.params.at(0);
            require_open_unit(q, "divergent parameter domain");
            return f_h_value(point_on_support(point[0], ctx), q, ctx);
        }
        case DensityFamily::f_c: {
            const Rational &beta = spec.params.at(0), &q = spec.params.at(1);
            require_open_unit(beta, "divergent parameter domain");
            require_open_unit(q, "divergent parameter domain");
            const auto prec = ctx.precision_bits;
            const Real x = point_on_support(point[0], ctx);
            const Real br(beta, prec), qr(q, prec);
            const Real norm = q_poch_inf(br * br, qr, ctx) /
                              (q_poch_inf(br, qr, ctx) * q_poch_inf(br * qr, qr, ctx));
            return norm * f_h_value(x, q, ctx) / kernel_l_product(x, br, qr, ctx);
        }
        case DensityFamily::f_cn: {
            const Rational &rho = spec.params.at(0), &q = spec.params.at(1);
            require_open_unit(rho, "divergent parameter domain");
            require_open_unit(q, "divergent parameter domain");
            return f_cn_value(point_on_support(point[0], ctx), point_on_support(point[1], ctx), rho, q, ctx);
        }
        case DensityFamily::f_c2n: {
            const Rational &rho1 = spec.params.at(0), &rho2 = spec.params.at(1), &q = spec.params.at(2);
            require_open_unit(rho1, "divergent parameter domain");
            require_open_unit(rho2, "divergent parameter domain");
            require_open_unit(q, "divergent parameter domain");
            const Real x = point_on_support(point[0], ctx);
            const Real y = point_on_support(point[1], ctx);
            const Real z = point_on_support(point[2], ctx);
            // f_CN(y|x,rho1) f_CN(x|z,rho2) / f_CN(y|z,rho1 rho2)
            return f_cn_value(y, x, rho1, q, ctx) * f_cn_value(x, z, rho2, q, ctx) /
                   f_cn_value(y, z, rho1 * rho2, q, ctx);
        }
    }
    throw std::logic_error("unknown density family");
}

}  // namespace qident
