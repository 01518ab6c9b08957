#include "catalog_util.hpp"

// Jacobi connection-coefficient machinery: the inverse-pair lemma, the generic
// connection-matrix laws, the eleven closed special-pattern forms checked against
// the generic double sum, the eight two-variable Pochhammer identities they imply,
// and the beta-density ratio expansion (both coefficient-order conventions).
//
// Variables of rational-function records carry fixed distinct denominators so the
// integer-shifted pole hyperplanes (a+b+k = 0, 2b+k = 0, ...) cannot be hit.

namespace qident::detail {
namespace {

using JP = JacobiParams<Rational>;

Rational half() { return Rational(1, 2); }

}  // namespace

void register_jacobi(std::vector<IdentityRecord>& out) {
    auto deg3 = [](int n) { return 3L * n + 2; };

    out.push_back(exact_rec(
        "jacobi.inverse.odwr", "inverse-pair",
        "sum_k e_{n,k}(a,b) etilde_{k,m}(a,b) = delta_{n,m}, m = 0..n",
        {den_var("a", 7, deg3), den_var("b", 8, deg3)}, 1, 12, [](int n, Pt p) {
            const JP par{p[0], p[1]};
            const auto e = e_row(n, par);
            const auto et = etilde_table(n, par);
            Rational acc = 0;
            for (int m = 0; m <= n; ++m) {
                Rational s = m == n ? Rational(-1) : Rational(0);
                for (int k = m; k <= n; ++k) s += e[k] * et[k][m];
                acc += s.abs();
            }
            return acc;
        }));

    out.push_back(exact_rec(
        "jacobi.inverse.odw2", "inverse-pair-flipped",
        "sum_k etilde_{n,k}(a,b) e_{k,m}(a,b) = delta_{n,m}, m = 0..n",
        {den_var("a", 7, deg3), den_var("b", 8, deg3)}, 1, 12, [](int n, Pt p) {
            const JP par{p[0], p[1]};
            const auto et = etilde_table(n, par);
            Rational acc = 0;
            for (int m = 0; m <= n; ++m) {
                Rational s = m == n ? Rational(-1) : Rational(0);
                for (int k = m; k <= n; ++k) s += et[n][k] * e_coeff(k, m, par);
                acc += s.abs();
            }
            return acc;
        }));

    out.push_back(exact_rec(
        "jacobi.conn.compose", "cc-composition",
        "c_{n,j}(a,b;c,d) = sum_k c_{n,k}(a,b;e,f) c_{k,j}(e,f;c,d)",
        {den_var("a", 7, nullptr), den_var("b", 8, nullptr), den_var("c", 5, nullptr),
         den_var("d", 9, nullptr), den_var("e", 11, nullptr), den_var("f", 13, nullptr)},
        1, 10, [](int n, Pt p) {
            const JP ab{p[0], p[1]}, cd{p[2], p[3]}, ef{p[4], p[5]};
            const auto direct = conn_row(n, ab, cd);
            const auto left = conn_row(n, ab, ef);
            const auto right = conn_triangle(n, ef, cd);
            Rational acc = 0;
            for (int j = 0; j <= n; ++j) {
                Rational s = -direct[j];
                for (int k = j; k <= n; ++k) s += left[k] * right[k][j];
                acc += s.abs();
            }
            return acc;
        }));

    out.push_back(exact_rec(
        "jacobi.conn.inverse", "cc-inverse",
        "sum_k c_{n,k}(a,b;c,d) c_{k,j}(c,d;a,b) = delta_{n,j}",
        {den_var("a", 7, nullptr), den_var("b", 8, nullptr), den_var("c", 5, nullptr),
         den_var("d", 9, nullptr)},
        1, 10, [](int n, Pt p) {
            const JP ab{p[0], p[1]}, cd{p[2], p[3]};
            const auto fwd = conn_row(n, ab, cd);
            const auto back = conn_triangle(n, cd, ab);
            Rational acc = 0;
            for (int j = 0; j <= n; ++j) {
                Rational s = j == n ? Rational(-1) : Rational(0);
                for (int k = j; k <= n; ++k) s += fwd[k] * back[k][j];
                acc += s.abs();
            }
            return acc;
        }));

    out.push_back(exact_rec(
        "jacobi.conn.parity", "cc-symmetric-parity",
        "c_{n,j}(a,a;b,b) = 0 when n-j is odd",
        {den_var("a", 7, [](int n) { return 3L * n + 3; }), den_var("b", 8, [](int n) { return 3L * n + 3; })},
        1, 10, [](int n, Pt p) {
            const auto row = conn_row(n, JP{p[0], p[0]}, JP{p[1], p[1]});
            Rational acc = 0;
            for (int j = (n % 2 == 0) ? 1 : 0; j <= n; j += 2) acc += row[j].abs();
            return acc;
        }));

    out.push_back(exact_rec(
        "jacobi.conn.reflect", "cc-reflection",
        "c_{n,j}(a,b;c,d) = (-1)^{n-j} c_{n,j}(b,a;d,c)",
        {den_var("a", 7, nullptr), den_var("b", 8, nullptr), den_var("c", 5, nullptr),
         den_var("d", 9, nullptr)},
        1, 10, [](int n, Pt p) {
            const auto fwd = conn_row(n, JP{p[0], p[1]}, JP{p[2], p[3]});
            const auto swp = conn_row(n, JP{p[1], p[0]}, JP{p[3], p[2]});
            Rational acc = 0;
            for (int j = 0; j <= n; ++j) acc += (fwd[j] - sign(n - j) * swp[j]).abs();
            return acc;
        }));

    // the eleven closed forms, each checked against the generic inverse-pair sums
    struct CconEntry {
        const char* id;
        const char* anchor;
        const char* display;
        CconCase c;
        bool needs_a, needs_b;
    };
    const CconEntry entries[] = {
        {"jacobi.ccon.ebb", "e-bb", "e_{n,j}(b,b) closed form", CconCase::ebb, false, true},
        {"jacobi.ccon.oebb", "etilde-bb", "etilde_{n,j}(b,b) closed form", CconCase::oebb, false, true},
        {"jacobi.ccon.ea12", "e-a-half", "e_{n,j}(a,1/2) closed form", CconCase::ea12, true, false},
        {"jacobi.ccon.oea12", "etilde-a-half", "etilde_{n,j}(a,1/2) closed form", CconCase::oea12, true, false},
        {"jacobi.ccon.ea32", "e-a-3half", "e_{n,j}(a,3/2) closed form", CconCase::ea32, true, false},
        {"jacobi.ccon.oea32", "etilde-a-3half", "etilde_{n,j}(a,3/2) closed form", CconCase::oea32, true, false},
        {"jacobi.ccon.a12", "cc-half-half", "c_{n,j}(a,1/2;b,1/2) closed form", CconCase::a12, true, true},
        {"jacobi.ccon.a32", "cc-3half-3half", "c_{n,j}(a,3/2;b,3/2) closed form", CconCase::a32, true, true},
        {"jacobi.ccon.ab", "cc-ab-bb", "c_{n,j}(a,b;b,b) closed form", CconCase::ab, true, true},
        {"jacobi.ccon.ba", "cc-bb-ab", "c_{n,j}(b,b;a,b) closed form", CconCase::ba, true, true},
        {"jacobi.ccon.aabb", "cc-aa-bb", "c_{n,j}(a,a;b,b) closed form (even n-j)", CconCase::aabb, true, true},
    };
    auto deg_cc = [](int n) { return 3L * n + 3; };
    for (const auto& e : entries) {
        const CconCase c = e.c;
        std::string notes;
        if (c == CconCase::oea12 || c == CconCase::oea32)
            notes = "numerator factorial read as n! (a printed j! fails the generic oracle for n >= 2)";
        std::vector<VariableSpec> vars;
        if (e.needs_a) vars.push_back(den_var("a", 7, deg_cc));
        if (e.needs_b) vars.push_back(den_var("b", 8, deg_cc));
        out.push_back(exact_rec(
            e.id, e.anchor, e.display, std::move(vars), 1, 10,
            [c](int n, Pt p) {
                const Rational& a = p[0];
                const Rational& b = p.size() > 1 ? p[1] : p[0];
                Rational acc = 0;
                switch (c) {
                    case CconCase::ebb:
                    case CconCase::oebb: {
                        const JP par{p[0], p[0]};  // single variable named b
                        for (int j = 0; j <= n; ++j) {
                            const Rational general =
                                c == CconCase::ebb ? e_coeff(n, j, par) : etilde_coeff(n, j, par);
                            acc += (ccon_closed(c, n, j, p[0], p[0]) - general).abs();
                        }
                        return acc;
                    }
                    case CconCase::ea12:
                    case CconCase::oea12:
                    case CconCase::ea32:
                    case CconCase::oea32: {
                        const Rational second =
                            (c == CconCase::ea12 || c == CconCase::oea12) ? half() : Rational(3, 2);
                        const JP par{p[0], second};
                        const bool is_e = c == CconCase::ea12 || c == CconCase::ea32;
                        for (int j = 0; j <= n; ++j) {
                            const Rational general = is_e ? e_coeff(n, j, par) : etilde_coeff(n, j, par);
                            acc += (ccon_closed(c, n, j, p[0], 0) - general).abs();
                        }
                        return acc;
                    }
                    case CconCase::a12:
                    case CconCase::a32: {
                        const Rational second = c == CconCase::a12 ? half() : Rational(3, 2);
                        const auto row = conn_row(n, JP{a, second}, JP{b, second});
                        for (int j = 0; j <= n; ++j)
                            acc += (ccon_closed(c, n, j, a, b) - row[j]).abs();
                        return acc;
                    }
                    case CconCase::ab: {
                        const auto row = conn_row(n, JP{a, b}, JP{b, b});
                        for (int j = 0; j <= n; ++j)
                            acc += (ccon_closed(c, n, j, a, b) - row[j]).abs();
                        return acc;
                    }
                    case CconCase::ba: {
                        const auto row = conn_row(n, JP{b, b}, JP{a, b});
                        for (int j = 0; j <= n; ++j)
                            acc += (ccon_closed(c, n, j, a, b) - row[j]).abs();
                        return acc;
                    }
                    case CconCase::aabb: {
                        const auto row = conn_row(n, JP{a, a}, JP{b, b});
                        for (int j = 0; j <= n; ++j)
                            acc += (ccon_closed(c, n, j, a, b) - row[j]).abs();
                        return acc;
                    }
                }
                return acc;
            },
            notes));
    }

    // Corollary: two-variable Pochhammer identities
    auto deg_upr = [](int n) { return 2L * n + 1; };
    out.push_back(exact_rec(
        "jacobi.upr.x_y", "upr-x-y",
        "sum_j (-1)^{n-j} C(n,j) (x+y+n-1)^(n-j) (x+n-j)^(j) (2y+n-j)^(j) (y)^(n-j) = (x-y)^(n) (y)^(n)",
        {free_var("x", deg_upr), free_var("y", deg_upr)}, 1, 10, [](int n, Pt p) {
            const Rational &x = p[0], &y = p[1];
            Rational s = 0;
            for (int j = 0; j <= n; ++j)
                s += sign(n - j) * Rational(binomial(n, j)) * rising(x + y + (n - 1), n - j) *
                     rising(x + (n - j), j) * rising(Rational(2) * y + (n - j), j) * rising(y, n - j);
            return s - rising(x - y, n) * rising(y, n);
        }));

    out.push_back(exact_rec(
        "jacobi.upr.y_x", "upr-y-x",
        "sum_j (-1)^j C(n,j) (2y+n-1)^(j) (y+j)^(n-j) (x)^(j) (x+y+j)^(n-j) = (y-x)^(n) (y)^(n)",
        {free_var("x", deg_upr), free_var("y", deg_upr)}, 1, 10, [](int n, Pt p) {
            const Rational &x = p[0], &y = p[1];
            Rational s = 0;
            for (int j = 0; j <= n; ++j)
                s += sign(j) * Rational(binomial(n, j)) * rising(Rational(2) * y + (n - 1), j) *
                     rising(y + j, n - j) * rising(x, j) * rising(x + y + j, n - j);
            return s - rising(y - x, n) * rising(y, n);
        }));

    auto deg_001 = [](int n) { return 5L * n + 3; };
    out.push_back(exact_rec(
        "jacobi.upr.i001", "upr-001",
        "sum_j C(n,j) (2b+n-1)^(j) (b-a)^(n-j) (a-b)^(j) (a+b+2j-1) / ((a+b+j-1)^(n+1) (2b)^(j)) = 0",
        {den_var("a", 7, deg_001), den_var("b", 8, deg_001)}, 1, 10, [](int n, Pt p) {
            const Rational &a = p[0], &b = p[1];
            Rational s = 0;
            for (int j = 0; j <= n; ++j) {
                const Rational den = nonzero(rising(a + b + (j - 1), n + 1) * rising(Rational(2) * b, j));
                s += Rational(binomial(n, j)) * rising(Rational(2) * b + (n - 1), j) * rising(b - a, n - j) *
                     rising(a - b, j) * (a + b + (2 * j - 1)) / den;
            }
            return s;
        }));

    out.push_back(exact_rec(
        "jacobi.upr.i002", "upr-002",
        "sum_j C(n,j) (a+b+n-1)^(j) (a-b)^(n-j) (b-a)^(j) (2b+2j-1) / ((2b+j-1)^(n+1) (a+b)^(j)) = 0",
        {den_var("a", 7, deg_001), den_var("b", 8, deg_001)}, 1, 10, [](int n, Pt p) {
            const Rational &a = p[0], &b = p[1];
            Rational s = 0;
            for (int j = 0; j <= n; ++j) {
                const Rational den = nonzero(rising(Rational(2) * b + (j - 1), n + 1) * rising(a + b, j));
                s += Rational(binomial(n, j)) * rising(a + b + (n - 1), j) * rising(a - b, n - j) *
                     rising(b - a, j) * (Rational(2) * b + (2 * j - 1)) / den;
            }
            return s;
        }));

    out.push_back(exact_rec(
        "jacobi.upr.dd1", "upr-dd1",
        "sum_{j<=2n} (-1)^j C(2n,j) (x+j)^(2n-j) (2x+2n-1)^(j) (y)^(j) (2y+j)^(2n-j)"
        " = (2n)!/n! (x-y)^(n) (y)^(n) (x+n)^(n)",
        {free_var("x", [](int n) { return 2L * n + 1; }), free_var("y", [](int n) { return 2L * n + 1; })},
        1, 10, [](int n, Pt p) {
            const Rational &x = p[0], &y = p[1];
            Rational s = 0;
            for (int j = 0; j <= 2 * n; ++j)
                s += sign(j) * Rational(binomial(2 * n, j)) * rising(x + j, 2 * n - j) *
                     rising(Rational(2) * x + (2 * n - 1), j) * rising(y, j) *
                     rising(Rational(2) * y + j, 2 * n - j);
            return s - Rational(factorial(2 * n)) / Rational(factorial(n)) * rising(x - y, n) *
                           rising(y, n) * rising(x + n, n);
        }));

    out.push_back(exact_rec(
        "jacobi.upr.dd2", "upr-dd2",
        "sum_{j<=2n+1} (-1)^j C(2n+1,j) (2x+2n)^(j) (x+j)^(2n+1-j) (y)^(j) (2y+j)^(2n+1-j) = 0",
        {free_var("x", [](int n) { return 2L * n + 2; }), free_var("y", [](int n) { return 2L * n + 2; })},
        1, 10, [](int n, Pt p) {
            const Rational &x = p[0], &y = p[1];
            Rational s = 0;
            for (int j = 0; j <= 2 * n + 1; ++j)
                s += sign(j) * Rational(binomial(2 * n + 1, j)) * rising(Rational(2) * x + 2 * n, j) *
                     rising(x + j, 2 * n + 1 - j) * rising(y, j) *
                     rising(Rational(2) * y + j, 2 * n + 1 - j);
            return s;
        }));

    auto deg_aa = [](int n) { return 6L * n + 2; };
    out.push_back(exact_rec(
        "jacobi.upr.aaababaa", "upr-offdiag-1",
        "sum_s C(n,s) (x-y)^(n-s) (y-x)^(s) (x+y+n-1)^(s) / ((x+y)^(s) (2y+s-1)^(s) (2y+2s)^(n-s)) = 0",
        {den_var("x", 7, deg_aa), den_var("y", 8, deg_aa)}, 1, 10, [](int n, Pt p) {
            const Rational &x = p[0], &y = p[1];
            Rational acc = 0;
            for (int s = 0; s <= n; ++s) {
                const Rational den = nonzero(rising(x + y, s) * rising(Rational(2) * y + (s - 1), s) *
                                             rising(Rational(2) * y + 2 * s, n - s));
                acc += Rational(binomial(n, s)) * rising(x - y, n - s) * rising(y - x, s) *
                       rising(x + y + (n - 1), s) / den;
            }
            return acc;
        }));

    out.push_back(exact_rec(
        "jacobi.upr.aabbbbaa", "upr-offdiag-2",
        "sum_s C(n,s) (y-x)^(s) (x-y)^(n-s) (x+n-1/2)^(s) / ((x+1/2)^(s) (y+s-1/2)^(s) (y+2s+1/2)^(n-s)) = 0",
        {den_var("x", 7, deg_aa), den_var("y", 8, deg_aa)}, 1, 10, [](int n, Pt p) {
            const Rational &x = p[0], &y = p[1];
            Rational acc = 0;
            for (int s = 0; s <= n; ++s) {
                const Rational den = nonzero(rising(x + half(), s) * rising(y + s - half(), s) *
                                             rising(y + 2 * s + half(), n - s));
                acc += Rational(binomial(n, s)) * rising(y - x, s) * rising(x - y, n - s) *
                       rising(x + n - half(), s) / den;
            }
            return acc;
        }));

    // density-ratio expansion in the denominator family, both coefficient-order conventions
    const std::vector<std::string> names{"a", "b", "c", "d", "x"};
    const std::vector<std::vector<Rational>> pts{
        {1, 1, 2, 3, Rational(-2, 5)},
        {1, 1, 2, 3, Rational(1, 5)},
    };
    auto lhs_ratio = [](Pt p, const PrecisionContext& ctx) {
        return real_of(density_ratio_exact(JP{p[0], p[1]}, JP{p[2], p[3]}, p[4]), ctx);
    };
    out.push_back(series_rec(
        "jacobi.density.expansion.ab_cd", "density-expansion",
        "h(x|c,d)/h(x|a,b) = sum_n c_{n,0}(a,b;c,d) J_n(x|a,b) / norm_n(a,b)", names, pts, 0.5,
        lhs_ratio,
        [](int n, Pt p, const PrecisionContext& ctx) {
            const JP src{p[0], p[1]}, tgt{p[2], p[3]};
            return real_of(conn_coeff(n, 0, src, tgt) * jacobi_eval(n, p[4], src) / jacobi_norm(n, src),
                           ctx);
        },
        "coefficient order c_{n,0}(a,b;c,d): the convergent convention"));
    out.push_back([&] {
        IdentityRecord r = series_rec(
            "jacobi.density.expansion.cd_ab", "density-expansion-alt",
            "h(x|c,d)/h(x|a,b) vs sum_n c_{n,0}(c,d;a,b) J_n(x|a,b) / norm_n(a,b)", names, pts, 0.5,
            lhs_ratio,
            [](int n, Pt p, const PrecisionContext& ctx) {
                const JP src{p[0], p[1]}, tgt{p[2], p[3]};
                return real_of(
                    conn_coeff(n, 0, tgt, src) * jacobi_eval(n, p[4], src) / jacobi_norm(n, src), ctx);
            },
            "coefficient order c_{n,0}(c,d;a,b): documented non-convergent sibling");
        r.negative_control = true;
        return r;
    }());
}

}  // namespace qident::detail
