#include "qident/jacobi.hpp"

namespace qident {
namespace {

Rational half() { return Rational(1, 2); }

Rational checked_div(const Rational& num, const Rational& den) {
    if (den.is_zero()) throw std::domain_error("singular parameters");
    return num / den;
}

Rational sign_pow(int e) { return e % 2 == 0 ? Rational(1) : Rational(-1); }

}  // namespace

ConnectionMatrix ConnectionMatrix::build(int N, const JacobiParams<Rational>& source,
                                         const JacobiParams<Rational>& target) {
    ConnectionMatrix m;
    m.rows_ = conn_triangle(N, source, target);
    return m;
}

Rational ccon_closed(CconCase c, int n, int j, const Rational& a, const Rational& b) {
    if (j < 0 || j > n) throw std::invalid_argument("ccon_closed: need 0 <= j <= n");
    const Rational fnj = Rational(factorial(n - j));
    switch (c) {
        case CconCase::ebb:
            return Rational(binomial(n, j)) * rising(Rational(2) * b + (n - 1), j) * rising(b + j, n - j) /
                   Rational(factorial(n));
        case CconCase::oebb:
            return sign_pow(n - j) *
                   checked_div(Rational(factorial(n)) * rising(b + j, n - j) * (Rational(2) * b + (2 * j - 1)),
                               fnj * rising(Rational(2) * b + (j - 1), n + 1));
        case CconCase::ea12:
            return checked_div(rising(a - half() + n, j) * rising(half(), n),
                               Rational(factorial(j)) * fnj * rising(half(), j));
        case CconCase::oea12:
            // the printed numerator factor is n! (validated against the general inverse-coefficient form)
            return sign_pow(n - j) *
                   checked_div((a - half() + 2 * j) * rising(half() + j, n - j) * Rational(factorial(n)),
                               fnj * rising(a - half() + j, n + 1));
        case CconCase::ea32:
            return checked_div(rising(a + half() + n, j) * rising(Rational(3, 2), n),
                               Rational(factorial(j)) * fnj * rising(Rational(3, 2), j));
        case CconCase::oea32:
            return sign_pow(n - j) *
                   checked_div((a + half() + 2 * j) * rising(Rational(3, 2) + j, n - j) * Rational(factorial(n)),
                               fnj * rising(a + half() + j, n + 1));
        case CconCase::a12:
            return sign_pow(n - j) *
                   checked_div(rising(half(), n) * rising(a - b, n - j) * rising(a - half() + n, j) *
                                   (b - half() + 2 * j),
                               fnj * rising(half(), j) * rising(b + half() + 2 * j, n - j) *
                                   rising(b - half() + j, j + 1));
        case CconCase::a32:
            return sign_pow(n - j) *
                   checked_div(rising(Rational(3, 2), n) * rising(a - b, n - j) * rising(a + half() + n, j) *
                                   (b + half() + 2 * j),
                               fnj * rising(Rational(3, 2), j) * rising(b + Rational(3, 2) + 2 * j, n - j) *
                                   rising(b + half() + j, j + 1));
        case CconCase::ab:
            return sign_pow(n - j) *
                   checked_div(rising(b + j, n - j) * rising(a - b, n - j) * rising(a + b + (n - 1), j) *
                                   (Rational(2) * b + (2 * j - 1)),
                               fnj * rising(Rational(2) * b + (j - 1), n + 1));
        case CconCase::ba:
            return sign_pow(n - j) *
                   checked_div(rising(b + j, n - j) * rising(Rational(2) * b + (n - 1), j) * rising(b - a, n - j) *
                                   (a + b + (2 * j - 1)),
                               fnj * rising(a + b + (j - 1), n + 1));
        case CconCase::aabb: {
            if ((n - j) % 2 == 1) return Rational(0);
            const int h = (n - j) / 2;
            return checked_div((Rational(2) * b + (2 * j - 1)) * rising(Rational(2) * a + (n - 1), j) *
                                   rising(a - b, h) * rising(b + j, h) * rising(a + Rational(n + j, 2), h),
                               Rational(factorial(h)) * rising(Rational(2) * b + (j - 1), n + 1));
        }
    }
    throw std::logic_error("unknown ccon case");
}

Rational beta_moment(int k, const JacobiParams<Rational>& p) {
    if (k < 0) throw std::invalid_argument("beta_moment: negative order");
    if (p.a.sign() <= 0 || p.b.sign() <= 0) throw std::domain_error("invalid shape parameters");
    // E[(2u-1)^k] with u ~ Beta(a,b) on [0,1] and E[u^j] = (a)^(j)/(a+b)^(j)
    Rational sum = 0;
    Rational two_j = 1;
    for (int j = 0; j <= k; ++j) {
        const Rational term =
            Rational(binomial(k, j)) * two_j * rising(p.a, j) / rising(p.a + p.b, j);
        sum += (k - j) % 2 == 0 ? term : -term;
        two_j *= 2;
    }
    return sum;
}

Rational density_ratio_exact(const JacobiParams<Rational>& source, const JacobiParams<Rational>& target,
                             const Rational& x) {
    const Rational dc = target.a - source.a, dd = target.b - source.b;
    if (!dc.is_integer() || !dd.is_integer()) throw std::domain_error("unsupported parameter offset");
    const long m = dc.num().get_si(), k = dd.num().get_si();
    if (m < 0 || k < 0) throw std::domain_error("unsupported parameter offset");
    // h(x|c,d)/h(x|a,b) = (x+1)^{c-a} (1-x)^{d-b} B(a,b) / (B(c,d) 2^{(c-a)+(d-b)})
    // with B(a,b)/B(a+m,b+k) = (a+b)^(m+k) / ((a)^(m) (b)^(k))
    const Rational bratio =
        rising(source.a + source.b, static_cast<int>(m + k)) /
        (rising(source.a, static_cast<int>(m)) * rising(source.b, static_cast<int>(k)));
    return (x + 1).pow(m) * (Rational(1) - x).pow(k) * bratio / Rational(2).pow(m + k);
}

DensityExpansionResult density_ratio_expansion_check(const JacobiParams<Rational>& source,
                                                     const JacobiParams<Rational>& target,
                                                     const Rational& x, const PrecisionContext& ctx) {
    if (!(Rational(2) * target.a > source.a) || !(Rational(2) * target.b > source.b))
        throw std::domain_error("outside convergence domain");
    if (!(x.abs() < Rational(1))) throw std::domain_error("outside support");
    const Real lhs(density_ratio_exact(source, target, x), ctx.precision_bits);
    const Real tol = ctx.tolerance();

    auto run = [&](bool ab_cd_order) {
        Real sum(0, ctx.precision_bits);
        Real best = (lhs - sum).abs();
        int used = ctx.max_terms;
        for (int n = 0; n < ctx.max_terms; ++n) {
            const Rational cn0 = ab_cd_order ? conn_coeff(n, 0, source, target)
                                             : conn_coeff(n, 0, target, source);
            const Rational term = cn0 * jacobi_eval(n, x, source) / jacobi_norm(n, source);
            sum += Real(term, ctx.precision_bits);
            best = (lhs - sum).abs();
            if (best < tol) {
                used = n + 1;
                break;
            }
        }
        return std::pair<Real, int>(best, used);
    };

    auto [res_ab, used_ab] = run(true);
    auto [res_cd, used_cd] = run(false);
    DensityExpansionResult out{.converged = false,
                               .order = DensityExpansionResult::Order::ab_cd,
                               .terms_used = 0,
                               .residual = res_ab,
                               .residual_other = res_cd};
    const bool ab_ok = res_ab < tol, cd_ok = res_cd < tol;
    // the two conventions coincide for source == target; ab_cd is canonical on a tie
    if (ab_ok) {
        out.converged = true;
        out.order = DensityExpansionResult::Order::ab_cd;
        out.terms_used = used_ab;
        out.residual = res_ab;
        out.residual_other = res_cd;
    } else if (cd_ok) {
        out.converged = true;
        out.order = DensityExpansionResult::Order::cd_ab;
        out.terms_used = used_cd;
        out.residual = res_cd;
        out.residual_other = res_ab;
    }
    return out;
}

}  // namespace qident
