#include "catalog_util.hpp"

// Classical Pochhammer identities: Vandermonde splittings, the three Stirling
// expansions, and the three binomial alternating sums equal to (b-a)^(n).

namespace qident::detail {
namespace {

long deg_n(int n) { return n; }

const StirlingTable& first_kind_table() {
    static const StirlingTable t = StirlingTable::build(StirlingKind::first_unsigned, 24);
    return t;
}
const StirlingTable& second_kind_table() {
    static const StirlingTable t = StirlingTable::build(StirlingKind::second, 24);
    return t;
}

}  // namespace

void register_poch(std::vector<IdentityRecord>& out) {
    out.push_back(exact_rec(
        "poch.vandermonde.rising", "vandermonde-rising",
        "(x+y)^(n) = sum_k C(n,k) (x)^(k) (y)^(n-k)",
        {free_var("x", deg_n), free_var("y", deg_n)}, 1, 10, [](int n, Pt p) {
            const Rational &x = p[0], &y = p[1];
            Rational s = 0;
            for (int k = 0; k <= n; ++k) s += Rational(binomial(n, k)) * rising(x, k) * rising(y, n - k);
            return rising(x + y, n) - s;
        }));

    out.push_back(exact_rec(
        "poch.vandermonde.falling", "vandermonde-falling",
        "(x+y)_(n) = sum_k C(n,k) (x)_(k) (y)_(n-k)",
        {free_var("x", deg_n), free_var("y", deg_n)}, 1, 10, [](int n, Pt p) {
            const Rational &x = p[0], &y = p[1];
            Rational s = 0;
            for (int k = 0; k <= n; ++k) s += Rational(binomial(n, k)) * falling(x, k) * falling(y, n - k);
            return falling(x + y, n) - s;
        }));

    out.push_back(exact_rec(
        "poch.stirling.s1", "stirling-falling",
        "(x)_(n) = sum_j (-1)^{n-j} [n j] x^j",
        {free_var("x", deg_n)}, 1, 15, [](int n, Pt p) {
            const Rational& x = p[0];
            Rational s = 0, xp = 1;
            for (int j = 0; j <= n; ++j) {
                s += sign(n - j) * Rational(first_kind_table().value(n, j)) * xp;
                xp *= x;
            }
            return falling(x, n) - s;
        }));

    out.push_back(exact_rec(
        "poch.stirling.srising", "stirling-rising",
        "(x)^(n) = sum_j [n j] x^j",
        {free_var("x", deg_n)}, 1, 15, [](int n, Pt p) {
            const Rational& x = p[0];
            Rational s = 0, xp = 1;
            for (int j = 0; j <= n; ++j) {
                s += Rational(first_kind_table().value(n, j)) * xp;
                xp *= x;
            }
            return rising(x, n) - s;
        }));

    out.push_back(exact_rec(
        "poch.stirling.s2", "stirling-monomial",
        "x^n = sum_j {n j} (x)_(j)",
        {free_var("x", deg_n)}, 1, 15, [](int n, Pt p) {
            const Rational& x = p[0];
            Rational s = 0;
            for (int j = 0; j <= n; ++j) s += Rational(second_kind_table().value(n, j)) * falling(x, j);
            return x.pow(n) - s;
        }));

    out.push_back(exact_rec(
        "poch.lemma_ab.rozn", "ab-sum-1",
        "sum_j (-1)^j C(n,j) (a)^(j) (b+j)^(n-j) = (b-a)^(n)",
        {free_var("a", deg_n), free_var("b", deg_n)}, 1, 12, [](int n, Pt p) {
            const Rational &a = p[0], &b = p[1];
            Rational s = 0;
            for (int j = 0; j <= n; ++j)
                s += sign(j) * Rational(binomial(n, j)) * rising(a, j) * rising(b + j, n - j);
            return s - rising(b - a, n);
        }));

    out.push_back(exact_rec(
        "poch.lemma_ab.rozn2", "ab-sum-2",
        "sum_j (-1)^{n-j} C(n,j) (b+n-1)^(j) (a+j)^(n-j) = (b-a)^(n)",
        {free_var("a", deg_n), free_var("b", deg_n)}, 1, 12, [](int n, Pt p) {
            const Rational &a = p[0], &b = p[1];
            Rational s = 0;
            for (int j = 0; j <= n; ++j)
                s += sign(n - j) * Rational(binomial(n, j)) * rising(b + (n - 1), j) * rising(a + j, n - j);
            return s - rising(b - a, n);
        }));

    out.push_back(exact_rec(
        "poch.lemma_ab.rozn3", "ab-sum-3",
        "sum_j (-1)^j C(n,j) (b)^(n-j) (a+1-j)^(j) = (b-a)^(n)",
        {free_var("a", deg_n), free_var("b", deg_n)}, 1, 12, [](int n, Pt p) {
            const Rational &a = p[0], &b = p[1];
            Rational s = 0;
            for (int j = 0; j <= n; ++j)
                s += sign(j) * Rational(binomial(n, j)) * rising(b, n - j) * rising(a + (1 - j), j);
            return s - rising(b - a, n);
        }));
}

}  // namespace qident::detail
