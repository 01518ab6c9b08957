#include "qident/catalog.hpp"

#include <algorithm>

#include "catalog_util.hpp"

namespace qident {

namespace detail {

void register_controls(std::vector<IdentityRecord>& out) {
    // Deliberately wrong Pascal rule: the soundness control every aggregate run can name.
    out.push_back([] {
        IdentityRecord r = exact_rec(
            "registry.selftest.sabotaged", "control-pascal",
            "C(n,k) = C(n-1,k-1) + C(n-1,k) + 1  (deliberately false)",
            {free_var("x", [](int) { return 1L; })}, 1, 2, [](int n, Pt) {
                Rational acc = 0;
                for (int k = 1; k < n; ++k)
                    acc += (Rational(binomial(n, k)) -
                            (Rational(binomial(n - 1, k - 1)) + Rational(binomial(n - 1, k)) + 1))
                               .abs();
                return acc + (n == 1 ? Rational(1) : Rational(0));
            },
            "negative control: must report failed with a witness");
        r.negative_control = true;
        return r;
    }());

    // The zero-sum with the auxiliary family taken literally as printed,
    // b_n = (-1)^n q^C(n,2) h_n(x|q): contradicts the b_{2n}(0|q) special value
    // and fails at n = 2.
    out.push_back([] {
        IdentityRecord r = exact_rec(
            "registry.selftest.bn_literal", "control-bn-literal",
            "sum_j [n j]_q h_j(y|q) btilde_{n-j}(y|q) with btilde_m = (-1)^m q^C(m,2) h_m(y|q)",
            {var("y", "rational, nonzero", [](int n) { return static_cast<long>(n) + 1; }, excl_zero()),
             var("q", "rational, not 0 or a unit", [](int n) { return 2L * n * n + 2; },
                 excl_zero_units())},
            2, 2, [](int n, Pt p) {
                const Rational &y = p[0], &q = p[1];
                const auto row = q_binomial_row(n, q);
                Rational s = 0;
                for (int j = 0; j <= n; ++j) {
                    const int m = n - j;
                    const Rational btilde =
                        sign(m) * q.pow(static_cast<long>(m) * (m - 1) / 2) * qhermite_eval(m, y, q);
                    s += row[j] * qhermite_eval(j, y, q) * btilde;
                }
                return s;
            },
            "erratum control: the printed auxiliary-family formula; h_n(x|1/q) is the working form");
        r.negative_control = true;
        return r;
    }());
}

}  // namespace detail

const std::vector<IdentityRecord>& catalog() {
    static const std::vector<IdentityRecord> records = [] {
        std::vector<IdentityRecord> out;
        detail::register_poch(out);
        detail::register_jacobi(out);
        detail::register_q(out);
        detail::register_families(out);
        detail::register_controls(out);
        std::sort(out.begin(), out.end(),
                  [](const IdentityRecord& a, const IdentityRecord& b) { return a.id < b.id; });
        for (std::size_t i = 1; i < out.size(); ++i)
            if (out[i].id == out[i - 1].id) throw std::logic_error("duplicate catalog id: " + out[i].id);
        return out;
    }();
    return records;
}

const IdentityRecord& find_record(std::string_view id) {
    const auto& all = catalog();
    const auto it = std::lower_bound(all.begin(), all.end(), id,
                                     [](const IdentityRecord& r, std::string_view v) { return r.id < v; });
    if (it == all.end() || it->id != id) throw std::invalid_argument("unknown identity id: " + std::string(id));
    return *it;
}

}  // namespace qident
