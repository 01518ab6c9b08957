#include "catalog_util.hpp"

// q-machinery: the Euler expansions, the shift laws, the kernel factorizations,
// and the q-Hermite / Chebyshev-U pair (finite and infinite).

namespace qident::detail {
namespace {

// prod over the conjugate pair (1 - A e^{i t})(1 - A e^{-i t}) with cos t rational:
// the eliminated real form (1 - A c)^2 + A^2 (1 - c^2).
Rational conj_pair(const Rational& c, const Rational& A) {
    return (Rational(1) - A * c).pow(2) + A * A * (Rational(1) - c * c);
}

}  // namespace

void register_q(std::vector<IdentityRecord>& out) {
    out.push_back(exact_rec(
        "q.euler.finite_zero", "euler-zero-sum",
        "sum_j [n j]_q q^C(j,2) (-1)^j = 0 for n >= 1",
        {free_var("q", [](int n) { return static_cast<long>(n) * (n - 1) / 2 + n + 1; })}, 1, 20,
        [](int n, Pt p) {
            const Rational& q = p[0];
            const auto row = q_binomial_row(n, q);
            QTriangular qt(q);
            Rational s = 0;
            for (int j = 0; j <= n; ++j) {
                s += sign(j) * row[j] * qt.value;
                qt.advance();
            }
            return s;
        }));

    // ---- shift laws (inner loop over the second order k <= n) ----
    out.push_back(exact_rec(
        "q.shift.s1", "poch-split",
        "(a)_{n+k} = (a)_n (a q^n)_k",
        {free_var("a", [](int n) { return 2L * n + 1; }),
         free_var("q", [](int n) { return 2L * n * n + 2; })},
        1, 12, [](int n, Pt p) {
            const Rational &a = p[0], &q = p[1];
            Rational acc = 0;
            for (int k = 0; k <= n; ++k)
                acc += (q_poch(a, q, n + k) - q_poch(a, q, n) * q_poch(a * q.pow(n), q, k)).abs();
            return acc;
        }));

    out.push_back(exact_rec(
        "q.shift.s2", "poch-swap",
        "(a q^n)_k (a)_n = (a)_k (a q^k)_n  (cross-multiplied form of the quotient law)",
        {free_var("a", [](int n) { return 2L * n + 1; }),
         free_var("q", [](int n) { return 2L * n * n + 2; })},
        1, 12, [](int n, Pt p) {
            const Rational &a = p[0], &q = p[1];
            Rational acc = 0;
            for (int k = 0; k <= n; ++k)
                acc += (q_poch(a * q.pow(n), q, k) * q_poch(a, q, n) -
                        q_poch(a, q, k) * q_poch(a * q.pow(k), q, n))
                           .abs();
            return acc;
        }));

    out.push_back(exact_rec(
        "q.shift.s3", "square-split",
        "(a,-a|q)_n = (a^2|q^2)_n  (finite form of the infinite-product splitting)",
        {free_var("a", [](int n) { return 2L * n + 1; }),
         free_var("q", [](int n) { return static_cast<long>(n) * (n - 1) + 2; })},
        1, 12, [](int n, Pt p) {
            const Rational &a = p[0], &q = p[1];
            return q_poch(a, q, n) * q_poch(-a, q, n) - q_poch(a * a, q * q, n);
        },
        "checked numerically at infinity by the q_poch_inf unit suite"));

    out.push_back(exact_rec(
        "q.shift.s4", "even-odd-split",
        "(a|q)_{2n} = (a|q^2)_n (aq|q^2)_n  (finite form of the infinite-product splitting)",
        {free_var("a", [](int n) { return 2L * n + 1; }),
         free_var("q", [](int n) { return 2L * n * n + 2; })},
        1, 12, [](int n, Pt p) {
            const Rational &a = p[0], &q = p[1];
            return q_poch(a, q, 2 * n) - q_poch(a, q * q, n) * q_poch(a * q, q * q, n);
        },
        "checked numerically at infinity by the q_poch_inf unit suite"));

    out.push_back(exact_rec(
        "q.shift.knk1", "knk-split-1",
        "(a q^{k-1})_k (a q^{2k})_{n-k} (1 - a q^{2k-1}) = (a q^{k-1})_n (1 - a q^{n+k-1})",
        {free_var("a", [](int n) { return 2L * n + 2; }),
         var("q", "rational, nonzero", [](int n) { return 2L * n * n + 2 * n + 2; }, excl_zero())},
        1, 12, [](int n, Pt p) {
            const Rational &a = p[0], &q = p[1];
            Rational acc = 0;
            for (int k = 0; k <= n; ++k) {
                const Rational shift = a * q.pow(k - 1);
                acc += (q_poch(shift, q, k) * q_poch(a * q.pow(2 * k), q, n - k) *
                            (Rational(1) - a * q.pow(2 * k - 1)) -
                        q_poch(shift, q, n) * (Rational(1) - a * q.pow(n + k - 1)))
                           .abs();
            }
            return acc;
        }));

    out.push_back(exact_rec(
        "q.shift.knk2", "knk-split-2",
        "(a)_k (a q^{n+k-1})_{n-k} (a q^k)_{n-1} = (a)_{2n-1}",
        {free_var("a", [](int n) { return 2L * n + 1; }),
         free_var("q", [](int n) { return 2L * n * n + 2 * n + 2; })},
        1, 12, [](int n, Pt p) {
            const Rational &a = p[0], &q = p[1];
            Rational acc = 0;
            for (int k = 0; k <= n; ++k)
                acc += (q_poch(a, q, k) * q_poch(a * q.pow(n + k - 1), q, n - k) *
                            q_poch(a * q.pow(k), q, n - 1) -
                        q_poch(a, q, 2 * n - 1))
                           .abs();
            return acc;
        }));

    // ---- kernel factorizations, complex side eliminated pairwise ----
    out.push_back(exact_rec(
        "q.kernel.rozklv", "v-factorization",
        "(a e^{it}, a e^{-it} | q)_n = prod_{k<n} v(x|a q^k), x = cos t, pair-eliminated",
        {free_var("x", nullptr), free_var("a", nullptr), free_var("q", nullptr)}, 1, 8,
        [](int n, Pt p) {
            const Rational &x = p[0], &a = p[1], &q = p[2];
            Rational lhs = 1, rhs = 1, A = a;
            for (int k = 0; k < n; ++k) {
                lhs *= conj_pair(x, A);
                rhs *= kernel_v(x, A);
                A *= q;
            }
            return lhs - rhs;
        }));

    out.push_back(exact_rec(
        "q.kernel.rozkll", "l-factorization",
        "(a e^{2it}, a e^{-2it} | q)_n = prod_{k<n} l(x|a q^k): v(2x^2-1|A) = l(x|A) per factor",
        {free_var("x", nullptr), free_var("a", nullptr), free_var("q", nullptr)}, 1, 8,
        [](int n, Pt p) {
            const Rational &x = p[0], &a = p[1], &q = p[2];
            const Rational c2 = Rational(2) * x * x - 1;  // cos 2t
            Rational lhs = 1, rhs = 1, A = a;
            for (int k = 0; k < n; ++k) {
                lhs *= conj_pair(c2, A);
                rhs *= kernel_l(x, A);
                A *= q;
            }
            return lhs - rhs;
        }));

    out.push_back(exact_rec(
        "q.kernel.rozklw", "w-factorization",
        "(t e^{i(u+v)},...,t e^{-i(u+v)} | q)_n = prod_{k<n} w(x,y|t q^k): the two conjugate pairs"
        " multiply to (1+A^2)^2 - 4xyA(1+A^2) + 4A^2(x^2+y^2-1)",
        {free_var("x", nullptr), free_var("y", nullptr), free_var("a", nullptr), free_var("q", nullptr)},
        1, 8, [](int n, Pt p) {
            const Rational &x = p[0], &y = p[1], &a = p[2], &q = p[3];
            Rational lhs = 1, rhs = 1, A = a;
            for (int k = 0; k < n; ++k) {
                const Rational A2 = A * A;
                lhs *= (Rational(1) + A2).pow(2) - Rational(4) * x * y * A * (Rational(1) + A2) +
                       Rational(4) * A2 * (x * x + y * y - 1);
                rhs *= kernel_w(x, y, A);
                A *= q;
            }
            return lhs - rhs;
        }));

    // ---- Euler expansions, infinite ----
    const std::vector<std::string> tq{"t", "q"};
    out.push_back(series_rec(
        "q.euler.binT", "euler-inverse-product",
        "1/(t)_inf = sum_k t^k/(q)_k",
        tq, {{Rational(1, 3), Rational(1, 2)}}, 0.55,
        [](Pt p, const PrecisionContext& ctx) {
            return real_of(1, ctx) / q_poch_inf(p[0], p[1], ctx);
        },
        [](int k, Pt p, const PrecisionContext& ctx) {
            return real_of(p[0].pow(k) / q_poch(p[1], p[1], k), ctx);
        },
        "finite companion 1/(t)_{n+1} = sum_j [n+j j]_q t^j exercised by the unit suite"));
    out.push_back(series_rec(
        "q.euler.obinT", "euler-product",
        "(t)_inf = sum_k (-1)^k q^C(k,2) t^k/(q)_k",
        tq, {{Rational(1, 3), Rational(1, 2)}}, 0.55,
        [](Pt p, const PrecisionContext& ctx) { return q_poch_inf(p[0], p[1], ctx); },
        [](int k, Pt p, const PrecisionContext& ctx) {
            const Rational qc = p[1].pow(static_cast<long>(k) * (k - 1) / 2);
            return real_of(sign(k) * qc * p[0].pow(k) / q_poch(p[1], p[1], k), ctx);
        }));
    out.push_back(series_rec(
        "q.euler.inf_zero", "euler-zero-limit",
        "sum_j (-1)^j q^C(j,2)/(q)_j = 0",
        {"q"}, {{Rational(1, 2)}}, 0.55,
        [](Pt, const PrecisionContext& ctx) { return Real(0, ctx.precision_bits); },
        [](int j, Pt p, const PrecisionContext& ctx) {
            const Rational qc = p[0].pow(static_cast<long>(j) * (j - 1) / 2);
            return real_of(sign(j) * qc / q_poch(p[0], p[0], j), ctx);
        }));

    // ---- q-Hermite vs Chebyshev-U ----
    out.push_back(exact_rec(
        "qh.chebU.fin1", "qh-chebU-finite-1",
        "sum_j (-1)^j q^C(j,2) [m m-j]_q [2m-j m]_q / (1-q^{m-j+1}) = 0",
        {var("q", "rational, not 0 or a unit", [](int n) { return 2L * n * n + 2 * n + 2; },
             excl_zero_units())},
        1, 8, [](int m, Pt p) {
            const Rational& q = p[0];
            QTriangular qt(q);
            Rational s = 0;
            for (int j = 0; j <= m; ++j) {
                const Rational den = nonzero(Rational(1) - q.pow(m - j + 1));
                s += sign(j) * qt.value * q_binomial(m, m - j, q) * q_binomial(2 * m - j, m, q) / den;
                qt.advance();
            }
            return s;
        }));

    out.push_back(exact_rec(
        "qh.chebU.fin2", "qh-chebU-finite-2",
        "sum_k (-1)^k q^C(k,2) [2m m-k]_q (1-q^{2k+1}) / (1-q^{m+k+1}) = 0",
        {var("q", "rational, not 0 or a unit", [](int n) { return 4L * n * n + 4 * n + 2; },
             excl_zero_units())},
        1, 8,
        [](int m, Pt p) {
            const Rational& q = p[0];
            const auto row = q_binomial_row(2 * m, q);
            QTriangular qt(q);
            Rational s = 0;
            for (int k = 0; k <= m; ++k) {
                const Rational den = nonzero(Rational(1) - q.pow(m + k + 1));
                s += sign(k) * qt.value * row[m - k] * (Rational(1) - q.pow(2 * k + 1)) / den;
                qt.advance();
            }
            return s;
        },
        "exponent read as C(k,2); the printed C(m-k,2) fails the CC derivation and exact check"));

    const std::vector<std::string> xq{"x", "q"};
    const std::vector<std::vector<Rational>> inU_pts{{Rational(0), Rational(1, 2)},
                                                     {Rational(3, 10), Rational(1, 2)}};
    auto lhs_lprod = [](Pt p, const PrecisionContext& ctx) {
        const Real x = real_of(p[0], ctx), q = real_of(p[1], ctx);
        return q_poch_inf(q, q, ctx) * kernel_l_product(x, q, q, ctx);
    };
    out.push_back(series_rec(
        "qh.chebU.inU", "U-expansion",
        "(q)_inf prod_{j>=1} l(x|q^j) = sum_j (-1)^j q^C(j+1,2) U_{2j}(x)",
        xq, inU_pts, 0.6, lhs_lprod,
        [](int j, Pt p, const PrecisionContext& ctx) {
            const Rational qc = p[1].pow(static_cast<long>(j) * (j + 1) / 2);
            return real_of(sign(j) * qc * chebyshev_U(2 * j, p[0]), ctx);
        }));
    out.push_back(series_rec(
        "qh.chebU.nah", "h-expansion",
        "1/((q)_inf prod_{j>=1} l(x|q^j)) = sum_j (1-q) q^j h_{2j}(x|q) / ((q)_j^2 (1-q^{j+1}))",
        xq, inU_pts, 0.6,
        [lhs_lprod](Pt p, const PrecisionContext& ctx) { return real_of(1, ctx) / lhs_lprod(p, ctx); },
        [](int j, Pt p, const PrecisionContext& ctx) {
            const Rational& q = p[1];
            const Rational den = q_poch(q, q, j).pow(2) * (Rational(1) - q.pow(j + 1));
            return real_of((Rational(1) - q) * q.pow(j) * qhermite_eval(2 * j, p[0], q) / den, ctx);
        }));
    out.push_back(series_rec(
        "qh.chebU.galois", "galois-expansion",
        "1/(q)_inf^3 = sum_j (1-q) q^j G_{2j}(q) / ((q)_j^2 (1-q^{j+1}))",
        {"q"}, {{Rational(1, 2)}}, 0.6,
        [](Pt p, const PrecisionContext& ctx) {
            const Real v = q_poch_inf(p[0], p[0], ctx);
            return real_of(1, ctx) / (v * v * v);
        },
        [](int j, Pt p, const PrecisionContext& ctx) {
            const Rational& q = p[0];
            const Rational den = q_poch(q, q, j).pow(2) * (Rational(1) - q.pow(j + 1));
            return real_of((Rational(1) - q) * q.pow(j) * qhermite_eval(2 * j, Rational(1), q) / den, ctx);
        },
        "G_n(q) = h_n(1|q), the subspace-count polynomials"));
}

}  // namespace qident::detail
