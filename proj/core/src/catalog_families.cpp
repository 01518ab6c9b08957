#include "catalog_util.hpp"

// The Askey-Wilson-scheme pairs: Rogers/Rogers, q-Hermite/Rogers, Rogers/Chebyshev-U,
// ASC/q-Hermite, and AW/ASC -- finite zero-sums and the density-ratio expansions.

namespace qident::detail {
namespace {

// (beta)_inf and friends that recur in the density ratios
Real poch_inf(const Rational& a, const Rational& q, const PrecisionContext& ctx) {
    return q_poch_inf(real_of(a, ctx), real_of(q, ctx), ctx);
}

}  // namespace

void register_families(std::vector<IdentityRecord>& out) {
    // ---- Rogers with two different parameters ----
    out.push_back(exact_rec(
        "rogers.rogers.fin", "rogers-pair-finite",
        "sum_j [n j]_q g^j b^{n-j} (b/g)_j (g/b)_{n-j} (1-b q^{2j}) (g q^{j+1})_{n-1} / (b q^j)_{n+1} = 0",
        {den_var("beta", 7, nullptr), den_var("gamma", 5, nullptr), den_var("q", 8, nullptr)},
        1, 8, [](int n, Pt p) {
            const Rational &b = p[0], &g = p[1], &q = p[2];
            const auto row = q_binomial_row(n, q);
            Rational s = 0;
            for (int j = 0; j <= n; ++j) {
                const Rational den = nonzero(q_poch(b * q.pow(j), q, n + 1));
                s += row[j] * g.pow(j) * b.pow(n - j) * q_poch(b / g, q, j) * q_poch(g / b, q, n - j) *
                     (Rational(1) - b * q.pow(2 * j)) * q_poch(g * q.pow(j + 1), q, n - 1) / den;
            }
            return s;
        }));

    out.push_back(series_rec(
        "rogers.rogers.series", "rogers-pair-density",
        "f_C(x|beta,q)/f_C(x|gamma,q) = sum_n a_n C_{2n}(x|gamma,q), a_n from the CC pair",
        {"beta", "gamma", "q", "x"},
        {{Rational(3, 10), Rational(1, 2), Rational(2, 5), Rational(0)},
         {Rational(3, 10), Rational(1, 2), Rational(2, 5), Rational(1, 4)}},
        0.65,
        [](Pt p, const PrecisionContext& ctx) {
            const Rational &b = p[0], &g = p[1], &q = p[2], &x = p[3];
            const Real xb = real_of(x, ctx), qr = real_of(q, ctx);
            const Real fb = poch_inf(b * b, q, ctx) /
                            (poch_inf(b, q, ctx) * poch_inf(b * q, q, ctx) *
                             kernel_l_product(xb, real_of(b, ctx), qr, ctx));
            const Real fg = poch_inf(g * g, q, ctx) /
                            (poch_inf(g, q, ctx) * poch_inf(g * q, q, ctx) *
                             kernel_l_product(xb, real_of(g, ctx), qr, ctx));
            return fb / fg;
        },
        [](int n, Pt p, const PrecisionContext& ctx) {
            const Rational &b = p[0], &g = p[1], &q = p[2], &x = p[3];
            const Rational a_n = b.pow(n) * q_poch(g / b, q, n) * q_poch(g, q, n) * (Rational(1) - b) *
                                 (Rational(1) - g * q.pow(2 * n)) * q_poch(q, q, 2 * n) /
                                 (q_poch(q, q, n) * q_poch(b, q, n + 1) * (Rational(1) - g) *
                                  q_poch(g * g, q, 2 * n));
            return real_of(a_n * rogers_eval(2 * n, x, g, q), ctx);
        }));

    // ---- q-Hermite and Rogers ----
    out.push_back(exact_rec(
        "qh.rogers.p1", "qh-rogers-finite-1",
        "sum_k (-1)^k q^C(k,2) [n k]_q (beta q^{n-k})_{n-1} = 0",
        {free_var("beta", [](int n) { return static_cast<long>(n) + 1; }),
         free_var("q", [](int n) { return 2L * n * n + 2; })},
        1, 8, [](int n, Pt p) {
            const Rational &b = p[0], &q = p[1];
            const auto row = q_binomial_row(n, q);
            QTriangular qt(q);
            Rational s = 0;
            for (int k = 0; k <= n; ++k) {
                s += sign(k) * qt.value * row[k] * q_poch(b * q.pow(n - k), q, n - 1);
                qt.advance();
            }
            return s;
        }));

    out.push_back(exact_rec(
        "qh.rogers.p2", "qh-rogers-finite-2",
        "sum_k (-1)^k q^C(k,2) [n k]_q (1-beta q^{2k}) (beta)_k (beta q^{n+k+1})_{n-k} = 0"
        "  (the quotient form cleared by (beta)_{2n+1})",
        {free_var("beta", [](int n) { return 2L * n + 2; }),
         free_var("q", [](int n) { return 3L * n * n + 2 * n + 2; })},
        1, 8, [](int n, Pt p) {
            const Rational &b = p[0], &q = p[1];
            const auto row = q_binomial_row(n, q);
            QTriangular qt(q);
            Rational s = 0;
            for (int k = 0; k <= n; ++k) {
                s += sign(k) * qt.value * row[k] * (Rational(1) - b * q.pow(2 * k)) * q_poch(b, q, k) *
                     q_poch(b * q.pow(n + k + 1), q, n - k);
                qt.advance();
            }
            return s;
        }));

    out.push_back(exact_rec(
        "qh.rogers.p3", "qh-rogers-finite-3",
        "sum_j [n j]_q (beta)_j prod_{i<n-j} (beta - q^i) = 0   (beta^{n-j} (1/beta)_{n-j} cleared)",
        {free_var("beta", [](int n) { return 2L * n + 1; }),
         free_var("q", [](int n) { return 2L * n * n + 2; })},
        1, 8, [](int n, Pt p) {
            const Rational &b = p[0], &q = p[1];
            const auto row = q_binomial_row(n, q);
            Rational s = 0;
            for (int j = 0; j <= n; ++j) {
                Rational prod = 1, qi = 1;
                for (int i = 0; i < n - j; ++i) {
                    prod *= (b - qi);
                    qi *= q;
                }
                s += row[j] * q_poch(b, q, j) * prod;
            }
            return s;
        }));

    const std::vector<std::string> bq{"beta", "q"};
    out.push_back(series_rec(
        "qh.rogers.series1", "qh-rogers-density-1",
        "(beta,beta q)_inf (-beta)_inf^2 / (beta^2)_inf = sum_n beta^n q^C(n,2) (beta)_n (1-beta q^{2n})"
        " (q)_{2n} (beta^2|q^2)_n / ((q)_n (beta^2)_{2n} (1-beta) (q^2|q^2)_n)",
        bq, {{Rational(3, 10), Rational(1, 2)}}, 0.6,
        [](Pt p, const PrecisionContext& ctx) {
            const Rational &b = p[0], &q = p[1];
            return poch_inf(b, q, ctx) * poch_inf(b * q, q, ctx) * poch_inf(-b, q, ctx) *
                   poch_inf(-b, q, ctx) / poch_inf(b * b, q, ctx);
        },
        [](int n, Pt p, const PrecisionContext& ctx) {
            const Rational &b = p[0], &q = p[1];
            const Rational num = b.pow(n) * q.pow(static_cast<long>(n) * (n - 1) / 2) * q_poch(b, q, n) *
                                 (Rational(1) - b * q.pow(2 * n)) * q_poch(q, q, 2 * n) *
                                 q_poch(b * b, q * q, n);
            const Rational den = q_poch(q, q, n) * q_poch(b * b, q, 2 * n) * (Rational(1) - b) *
                                 q_poch(q * q, q * q, n);
            return real_of(num / den, ctx);
        }));
    out.push_back(series_rec(
        "qh.rogers.series2", "qh-rogers-density-2",
        "(beta^2)_inf / ((beta,beta q)_inf (-beta)_inf^2) = sum_n (-beta)^n (1-beta) (q|q^2)_n"
        " / ((q)_n (beta)_{n+1})",
        bq, {{Rational(3, 10), Rational(1, 2)}}, 0.6,
        [](Pt p, const PrecisionContext& ctx) {
            const Rational &b = p[0], &q = p[1];
            return poch_inf(b * b, q, ctx) / (poch_inf(b, q, ctx) * poch_inf(b * q, q, ctx) *
                                              poch_inf(-b, q, ctx) * poch_inf(-b, q, ctx));
        },
        [](int n, Pt p, const PrecisionContext& ctx) {
            const Rational &b = p[0], &q = p[1];
            return real_of(sign(n) * b.pow(n) * (Rational(1) - b) * q_poch(q, q * q, n) /
                               (q_poch(q, q, n) * q_poch(b, q, n + 1)),
                           ctx);
        }));

    // ---- Rogers and Chebyshev-U ----
    out.push_back(exact_rec(
        "rogers.chebU.fin1", "rogers-chebU-finite-1",
        "sum_k [n k]_q [n+k+1 k+1]_q q^k b^{n-k} (b/q)_k (q/b)_{n-k} (1-b q^{2k})"
        " / ((b q^k)_{n+1} (1-q^{n+k+1})) = 0",
        {den_var("beta", 7, [](int n) { return 3L * n + 4; }),
         den_var("q", 8, [](int n) { return 4L * n * n + 6 * n + 4; })},
        1, 8, [](int n, Pt p) {
            const Rational &b = p[0], &q = p[1];
            Rational s = 0;
            for (int k = 0; k <= n; ++k) {
                const Rational den =
                    nonzero(q_poch(b * q.pow(k), q, n + 1) * (Rational(1) - q.pow(n + k + 1)));
                s += q_binomial(n, k, q) * q_binomial(n + k + 1, k + 1, q) * q.pow(k) * b.pow(n - k) *
                     q_poch(b / q, q, k) * q_poch(q / b, q, n - k) * (Rational(1) - b * q.pow(2 * k)) /
                     den;
            }
            return s;
        }));

    out.push_back(exact_rec(
        "rogers.chebU.fin2", "rogers-chebU-finite-2",
        "sum_k [2n+1 n-k]_q b^k q^{n-k} (q/b)_k (b/q)_{n-k} (1-q^{2k+1}) (b q^{k+1})_{n-1} = 0",
        {den_var("beta", 7, [](int n) { return 3L * n + 4; }),
         den_var("q", 8, [](int n) { return 4L * n * n + 6 * n + 4; })},
        1, 8, [](int n, Pt p) {
            const Rational &b = p[0], &q = p[1];
            const auto row = q_binomial_row(2 * n + 1, q);
            Rational s = 0;
            for (int k = 0; k <= n; ++k)
                s += row[n - k] * b.pow(k) * q.pow(n - k) * q_poch(q / b, q, k) * q_poch(b / q, q, n - k) *
                     (Rational(1) - q.pow(2 * k + 1)) * q_poch(b * q.pow(k + 1), q, n - 1);
            return s;
        }));

    out.push_back(series_rec(
        "rogers.chebU.series1", "rogers-chebU-density-1",
        "(q b^2|q^2)_inf (-q)_inf (q^2|q^2)_inf / (b^2|q^2)_inf = sum_n (-1)^n b^n (q/b)_n / (b)_{n+1}",
        bq, {{Rational(3, 10), Rational(2, 5)}}, 0.6,
        [](Pt p, const PrecisionContext& ctx) {
            const Rational &b = p[0], &q = p[1];
            const Rational q2 = q * q;
            return poch_inf(q * b * b, q2, ctx) * poch_inf(-q, q, ctx) * poch_inf(q2, q2, ctx) /
                   poch_inf(b * b, q2, ctx);
        },
        [](int n, Pt p, const PrecisionContext& ctx) {
            const Rational &b = p[0], &q = p[1];
            return real_of(sign(n) * b.pow(n) * q_poch(q / b, q, n) / q_poch(b, q, n + 1), ctx);
        }));
    out.push_back(series_rec(
        "rogers.chebU.series2", "rogers-chebU-density-2",
        "(b,bq)_inf (-b)_inf^2 / ((b^2)_inf (q)_inf (-q)_inf^2) = sum_n (-1)^n q^n (b/q)_n (b)_n (q|q^2)_n"
        " (1-b q^{2n}) (1-q) / ((q)_n (q)_{n+1} (1-b) (b^2 q|q^2)_n)",
        bq, {{Rational(3, 10), Rational(2, 5)}}, 0.6,
        [](Pt p, const PrecisionContext& ctx) {
            const Rational &b = p[0], &q = p[1];
            return poch_inf(b, q, ctx) * poch_inf(b * q, q, ctx) * poch_inf(-b, q, ctx) *
                   poch_inf(-b, q, ctx) /
                   (poch_inf(b * b, q, ctx) * poch_inf(q, q, ctx) * poch_inf(-q, q, ctx) *
                    poch_inf(-q, q, ctx));
        },
        [](int n, Pt p, const PrecisionContext& ctx) {
            const Rational &b = p[0], &q = p[1];
            const Rational num = sign(n) * q.pow(n) * q_poch(b / q, q, n) * q_poch(b, q, n) *
                                 q_poch(q, q * q, n) * (Rational(1) - b * q.pow(2 * n)) * (Rational(1) - q);
            const Rational den = q_poch(q, q, n) * q_poch(q, q, n + 1) * (Rational(1) - b) *
                                 q_poch(b * b * q, q * q, n);
            return real_of(num / den, ctx);
        },
        "scalar factors (1-q)/(1-b) restored from the density-ratio derivation"));
    out.push_back(series_rec(
        "rogers.chebU.nice", "rogers-chebU-x1",
        "(b^2)_inf (q)_inf^3 / (b)_inf^4 = sum_n (2n+1) b^n (q/b)_n / (b)_{n+1}",
        bq, {{Rational(3, 10), Rational(2, 5)}}, 0.6,
        [](Pt p, const PrecisionContext& ctx) {
            const Rational &b = p[0], &q = p[1];
            const Real pq = poch_inf(q, q, ctx), pb = poch_inf(b, q, ctx);
            return poch_inf(b * b, q, ctx) * pq * pq * pq / (pb * pb * pb * pb);
        },
        [](int n, Pt p, const PrecisionContext& ctx) {
            const Rational &b = p[0], &q = p[1];
            return real_of(Rational(2 * n + 1) * b.pow(n) * q_poch(q / b, q, n) / q_poch(b, q, n + 1),
                           ctx);
        }));

    // ---- ASC and q-Hermite ----
    out.push_back(exact_rec(
        "asc.qh.fin", "asc-qh-zero-sum",
        "sum_j [n j]_q h_j(y|q) b_{n-j}(y|q) = 0",
        {free_var("y", [](int n) { return 2L * n + 1; }),
         free_var("q", [](int n) { return 2L * n * n + 2; })},
        1, 12, [](int n, Pt p) {
            const Rational &y = p[0], &q = p[1];
            const auto row = q_binomial_row(n, q);
            Rational s = 0;
            for (int j = 0; j <= n; ++j)
                s += row[j] * qhermite_eval(j, y, q) * bpoly_eval(n - j, y, q);
            return s;
        }));

    const std::vector<std::string> pm_names{"x", "y", "rho", "q"};
    const std::vector<std::vector<Rational>> pm_pts{
        {Rational(3, 10), Rational(3, 10), Rational(2, 5), Rational(1, 2)}};
    out.push_back(series_rec(
        "asc.qh.pm", "poisson-mehler",
        "(rho^2)_inf / prod_j w(x,y|rho q^j) = sum_j rho^j h_j(x|q) h_j(y|q) / (q)_j",
        pm_names, pm_pts, 0.6,
        [](Pt p, const PrecisionContext& ctx) {
            return poch_inf(p[2] * p[2], p[3], ctx) /
                   kernel_w_product(real_of(p[0], ctx), real_of(p[1], ctx), real_of(p[2], ctx),
                                    real_of(p[3], ctx), ctx);
        },
        [](int j, Pt p, const PrecisionContext& ctx) {
            return real_of(p[2].pow(j) * qhermite_eval(j, p[0], p[3]) * qhermite_eval(j, p[1], p[3]) /
                               q_poch(p[3], p[3], j),
                           ctx);
        }));
    out.push_back(series_rec(
        "asc.qh.inv", "poisson-mehler-inverse",
        "prod_j w(x,y|rho q^j) / (rho^2)_inf = sum_j rho^j b_j(y|q) p_j(x|y,rho,q) / ((q)_j (rho^2)_j)",
        pm_names, pm_pts, 0.6,
        [](Pt p, const PrecisionContext& ctx) {
            return kernel_w_product(real_of(p[0], ctx), real_of(p[1], ctx), real_of(p[2], ctx),
                                    real_of(p[3], ctx), ctx) /
                   poch_inf(p[2] * p[2], p[3], ctx);
        },
        [](int j, Pt p, const PrecisionContext& ctx) {
            const Rational &x = p[0], &y = p[1], &rho = p[2], &q = p[3];
            return real_of(rho.pow(j) * bpoly_eval(j, y, q) * asc_eval(j, x, y, rho, q) /
                               (q_poch(q, q, j) * q_poch(rho * rho, q, j)),
                           ctx);
        }));

    const std::vector<std::string> diag_names{"x", "rho", "q"};
    const std::vector<std::vector<Rational>> diag_pts{{Rational(3, 10), Rational(2, 5), Rational(1, 2)}};
    out.push_back(series_rec(
        "asc.qh.diag1", "poisson-mehler-diagonal",
        "(rho^2)_inf / ((rho)_inf^2 prod_j l(x|rho q^j)) = sum_j rho^j h_j(x|q)^2 / (q)_j",
        diag_names, diag_pts, 0.6,
        [](Pt p, const PrecisionContext& ctx) {
            const Real pr = poch_inf(p[1], p[2], ctx);
            return poch_inf(p[1] * p[1], p[2], ctx) /
                   (pr * pr *
                    kernel_l_product(real_of(p[0], ctx), real_of(p[1], ctx), real_of(p[2], ctx), ctx));
        },
        [](int j, Pt p, const PrecisionContext& ctx) {
            const Rational h = qhermite_eval(j, p[0], p[2]);
            return real_of(p[1].pow(j) * h * h / q_poch(p[2], p[2], j), ctx);
        }));
    out.push_back(series_rec(
        "asc.qh.diag2", "poisson-mehler-diagonal-inverse",
        "(rho)_inf^2 prod_j l(x|rho q^j) / (rho^2)_inf = sum_j rho^j b_j(x|q) C_j(x|rho,q) / (rho^2)_j",
        diag_names, diag_pts, 0.6,
        [](Pt p, const PrecisionContext& ctx) {
            const Real pr = poch_inf(p[1], p[2], ctx);
            return pr * pr *
                   kernel_l_product(real_of(p[0], ctx), real_of(p[1], ctx), real_of(p[2], ctx), ctx) /
                   poch_inf(p[1] * p[1], p[2], ctx);
        },
        [](int j, Pt p, const PrecisionContext& ctx) {
            const Rational &x = p[0], &rho = p[1], &q = p[2];
            return real_of(rho.pow(j) * bpoly_eval(j, x, q) * rogers_eval(j, x, rho, q) /
                               q_poch(rho * rho, q, j),
                           ctx);
        },
        "norm reduces to (rho^2)_j after p_j(x|x,rho,q) = (q)_j C_j(x|rho,q)"));

    // ---- AW and ASC ----
    out.push_back(exact_rec(
        "aw.asc.fin1", "aw-asc-zero-sum-1",
        "sum_j [n j]_q (b^2 q^j)_{n-1} p_j(z|y,b,q) g_{n-j}(z|y,b q^{n-1},q) = 0, b = rho1 rho2",
        {free_var("y", nullptr), free_var("z", nullptr), den_var("beta", 7, nullptr),
         den_var("q", 8, nullptr)},
        1, 8, [](int n, Pt p) {
            const Rational &y = p[0], &z = p[1], &b = p[2], &q = p[3];
            const auto row = q_binomial_row(n, q);
            const Rational twist = b * q.pow(n - 1);
            Rational s = 0;
            for (int j = 0; j <= n; ++j)
                s += row[j] * q_poch(b * b * q.pow(j), q, n - 1) * asc_eval(j, z, y, b, q) *
                     g_eval(n - j, z, y, twist, q);
            return s;
        }));

    out.push_back(exact_rec(
        "aw.asc.fin2", "aw-asc-zero-sum-2",
        "sum_j [n j]_q p_{n-j}(z|y,b q^j,q) g_j(z|y,b q^{j-1},q) (1-b^2 q^{2j-1})"
        " / ((b^2 q^{j-1})_n (1-b^2 q^{n+j-1})) = 0",
        {free_var("y", nullptr), free_var("z", nullptr), den_var("beta", 7, nullptr),
         den_var("q", 8, nullptr)},
        1, 8, [](int n, Pt p) {
            const Rational &y = p[0], &z = p[1], &b = p[2], &q = p[3];
            const auto row = q_binomial_row(n, q);
            Rational s = 0;
            for (int j = 0; j <= n; ++j) {
                const Rational den = nonzero(q_poch(b * b * q.pow(j - 1), q, n) *
                                             (Rational(1) - b * b * q.pow(n + j - 1)));
                s += row[j] * asc_eval(n - j, z, y, b * q.pow(j), q) *
                     g_eval(j, z, y, b * q.pow(j - 1), q) * (Rational(1) - b * b * q.pow(2 * j - 1)) /
                     den;
            }
            return s;
        }));

    const std::vector<std::string> aw_names{"x", "y", "z", "rho1", "rho2", "q"};
    const std::vector<std::vector<Rational>> aw_pts{{Rational(1, 10), Rational(2, 10), Rational(3, 10),
                                                     Rational(4, 10), Rational(5, 10), Rational(6, 10)}};
    out.push_back(series_rec(
        "aw.asc.series1", "aw-asc-density-1",
        "f_CN(z|x,rho2,q)/f_CN(z|y,rho1 rho2,q) = sum_n rho2^n p_n(z|y,b,q) p_n(x|y,rho1,q)"
        " / ((b^2)_n (q)_n), b = rho1 rho2",
        aw_names, aw_pts, 0.65,
        [](Pt p, const PrecisionContext& ctx) {
            const Rational &x = p[0], &y = p[1], &z = p[2], &r1 = p[3], &r2 = p[4], &q = p[5];
            const Rational b = r1 * r2;
            const Real zr = real_of(z, ctx), qr = real_of(q, ctx);
            return poch_inf(r2 * r2, q, ctx) * kernel_w_product(zr, real_of(y, ctx), real_of(b, ctx), qr, ctx) /
                   (poch_inf(b * b, q, ctx) *
                    kernel_w_product(zr, real_of(x, ctx), real_of(r2, ctx), qr, ctx));
        },
        [](int n, Pt p, const PrecisionContext& ctx) {
            const Rational &x = p[0], &y = p[1], &z = p[2], &r1 = p[3], &r2 = p[4], &q = p[5];
            const Rational b = r1 * r2;
            return real_of(r2.pow(n) * asc_eval(n, z, y, b, q) * asc_eval(n, x, y, r1, q) /
                               (q_poch(b * b, q, n) * q_poch(q, q, n)),
                           ctx);
        },
        "f_CN arguments in the f_h-free order; the printed f_CN(x|z,...) diverges"));
    out.push_back(series_rec(
        "aw.asc.series2", "aw-asc-density-2",
        "f_CN(z|y,b,q)/f_CN(z|x,rho2,q) = sum_n rho2^n (b^2)_{2n} g_n(z|y,b q^{n-1},q)"
        " alpha_n(x|y,rho1,z,rho2,q) / ((q)_n (rho2^2)_n prod_{j<n} w(z,y|b q^j))",
        aw_names, aw_pts, 0.65,
        [](Pt p, const PrecisionContext& ctx) {
            const Rational &x = p[0], &y = p[1], &z = p[2], &r1 = p[3], &r2 = p[4], &q = p[5];
            const Rational b = r1 * r2;
            const Real zr = real_of(z, ctx), qr = real_of(q, ctx);
            return poch_inf(b * b, q, ctx) *
                   kernel_w_product(zr, real_of(x, ctx), real_of(r2, ctx), qr, ctx) /
                   (poch_inf(r2 * r2, q, ctx) *
                    kernel_w_product(zr, real_of(y, ctx), real_of(b, ctx), qr, ctx));
        },
        [](int n, Pt p, const PrecisionContext& ctx) {
            const Rational &x = p[0], &y = p[1], &z = p[2], &r1 = p[3], &r2 = p[4], &q = p[5];
            const Rational b = r1 * r2;
            Rational wprod = 1, t = b;
            for (int j = 0; j < n; ++j) {
                wprod *= kernel_w(z, y, t);
                t *= q;
            }
            const Rational num = r2.pow(n) * q_poch(b * b, q, 2 * n) *
                                 g_eval(n, z, y, b * q.pow(n - 1), q) *
                                 aw_alpha_eval(n, x, y, r1, z, r2, q);
            return real_of(num / (q_poch(q, q, n) * q_poch(r2 * r2, q, n) * wprod), ctx);
        },
        "coefficient uses the quadrature-validated norm; the (b^2 q^{n-1})_n factors cancel"));

    // ---- z = y specializations in Rogers form ----
    out.push_back(exact_rec(
        "aw.asc.c1", "aw-asc-rogers-1",
        "sum_j (rho q^{n-1})^{n-j} (rho^2 q^j)_{n-1} C_j(x|rho,q) C_{n-j}(x|rho^{-1} q^{-(n-1)},q) = 0",
        {free_var("x", nullptr), den_var("rho", 7, nullptr), den_var("q", 8, nullptr)},
        1, 8, [](int n, Pt p) {
            const Rational &x = p[0], &rho = p[1], &q = p[2];
            const Rational inv = rho.inv() * q.pow(-(n - 1));
            const Rational base = rho * q.pow(n - 1);
            Rational s = 0;
            for (int j = 0; j <= n; ++j)
                s += base.pow(n - j) * q_poch(rho * rho * q.pow(j), q, n - 1) * rogers_eval(j, x, rho, q) *
                     rogers_eval(n - j, x, inv, q);
            return s;
        }));

    out.push_back(exact_rec(
        "aw.asc.c2", "aw-asc-rogers-2",
        "sum_j (rho q^{j-1})^j C_j(x|rho^{-1} q^{-(j-1)},q) C_{n-j}(x|rho q^j,q)"
        " / ((rho^2 q^{j-1})_j (rho^2 q^{2j})_{n-j}) = 0",
        {free_var("x", nullptr), den_var("rho", 7, nullptr), den_var("q", 8, nullptr)},
        1, 8, [](int n, Pt p) {
            const Rational &x = p[0], &rho = p[1], &q = p[2];
            Rational s = 0;
            for (int j = 0; j <= n; ++j) {
                const Rational den = nonzero(q_poch(rho * rho * q.pow(j - 1), q, j) *
                                             q_poch(rho * rho * q.pow(2 * j), q, n - j));
                s += (rho * q.pow(j - 1)).pow(j) * rogers_eval(j, x, rho.inv() * q.pow(-(j - 1)), q) *
                     rogers_eval(n - j, x, rho * q.pow(j), q) / den;
            }
            return s;
        }));

    // ---- the final pair in a = rho^2 q ----
    out.push_back(exact_rec(
        "aw.asc.a1", "aw-asc-a-form-1",
        "sum_k [n k]_q (-1)^k q^C(n-k,2) (a q^k)_{n-1} = 0",
        {free_var("a", [](int n) { return static_cast<long>(n) + 1; }),
         free_var("q", [](int n) { return 2L * n * n + 2; })},
        1, 8, [](int n, Pt p) {
            const Rational &a = p[0], &q = p[1];
            const auto row = q_binomial_row(n, q);
            Rational s = 0;
            for (int k = 0; k <= n; ++k) {
                const Rational qc = q.pow(static_cast<long>(n - k) * (n - k - 1) / 2);
                s += sign(k) * row[k] * qc * q_poch(a * q.pow(k), q, n - 1);
            }
            return s;
        }));

    out.push_back(exact_rec(
        "aw.asc.a2", "aw-asc-a-form-2",
        "sum_k [n k]_q (-1)^k q^C(k,2) (1-a q^{2k-1}) / (a q^{k-1})_{n+1} = 0",
        {den_var("a", 7, [](int n) { return 2L * n + 4; }),
         den_var("q", 8, [](int n) { return 3L * n * n + 6 * n + 4; })},
        1, 8, [](int n, Pt p) {
            const Rational &a = p[0], &q = p[1];
            const auto row = q_binomial_row(n, q);
            QTriangular qt(q);
            Rational s = 0;
            for (int k = 0; k <= n; ++k) {
                const Rational den = nonzero(q_poch(a * q.pow(k - 1), q, n + 1));
                s += sign(k) * qt.value * row[k] * (Rational(1) - a * q.pow(2 * k - 1)) / den;
                qt.advance();
            }
            return s;
        }));
}

}  // namespace qident::detail
