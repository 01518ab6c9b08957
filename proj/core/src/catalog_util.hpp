#pragma once

// Internal builders shared by the catalog_*.cpp registration units.

#include <utility>

#include "qident/catalog.hpp"
#include "qident/families.hpp"
#include "qident/jacobi.hpp"
#include "qident/pochhammer.hpp"
#include "qident/qseries.hpp"

namespace qident::detail {

using DiffFn = std::function<Rational(int, std::span<const Rational>)>;
using Pt = std::span<const Rational>;

inline VariableSpec free_var(std::string name, std::function<long(int)> degree) {
    return {std::move(name), "rational", std::move(degree), nullptr};
}

inline VariableSpec var(std::string name, std::string domain, std::function<long(int)> degree,
                        std::function<bool(const Rational&)> excluded) {
    return {std::move(name), std::move(domain), std::move(degree), std::move(excluded)};
}

inline std::function<bool(const Rational&)> excl_zero() {
    return [](const Rational& v) { return v.is_zero(); };
}
inline std::function<bool(const Rational&)> excl_zero_units() {
    return [](const Rational& v) { return v.is_zero() || v == Rational(1) || v == Rational(-1); };
}

// Keep only values whose canonical denominator is exactly d. Giving each variable
// of a record a distinct fixed denominator makes every integer-shifted linear pole
// (a+b+k, 2b+k, x+1/2+k, ...) unreachable, while grids of distinct values remain a
// valid interpolation node set. Implies nonzero and non-unit for d >= 2.
inline std::function<bool(const Rational&)> only_den(long d) {
    return [d](const Rational& v) { return v.den() != BigInt(d); };
}

inline VariableSpec den_var(std::string name, long d, std::function<long(int)> degree) {
    std::string domain = "rational with denominator " + std::to_string(d);
    return {std::move(name), std::move(domain), std::move(degree), only_den(d)};
}

inline IdentityRecord exact_rec(std::string id, std::string anchor, std::string display,
                                std::vector<VariableSpec> vars, int min_n, int max_n, DiffFn diff,
                                std::string notes = {}) {
    IdentityRecord r;
    r.id = std::move(id);
    r.anchor = std::move(anchor);
    r.kind = RecordKind::exact_polynomial;
    r.display = std::move(display);
    r.notes = std::move(notes);
    auto ex = std::make_shared<ExactIdentity>();
    ex->vars = std::move(vars);
    ex->min_n = min_n;
    ex->max_n = max_n;
    ex->difference = std::move(diff);
    r.exact = std::move(ex);
    return r;
}

inline IdentityRecord series_rec(
    std::string id, std::string anchor, std::string display, std::vector<std::string> param_names,
    std::vector<std::vector<Rational>> points, double ratio_bound,
    std::function<Real(Pt, const PrecisionContext&)> lhs,
    std::function<Real(int, Pt, const PrecisionContext&)> term, std::string notes = {}) {
    IdentityRecord r;
    r.id = std::move(id);
    r.anchor = std::move(anchor);
    r.kind = RecordKind::numeric_series;
    r.display = std::move(display);
    r.notes = std::move(notes);
    auto se = std::make_shared<SeriesIdentity>();
    se->param_names = std::move(param_names);
    se->points = std::move(points);
    se->ratio_bound = ratio_bound;
    se->lhs = std::move(lhs);
    se->term = std::move(term);
    r.series = std::move(se);
    return r;
}

inline Rational sign(int e) { return e % 2 == 0 ? Rational(1) : Rational(-1); }

inline Rational nonzero(Rational v) {
    if (v.is_zero()) throw std::domain_error("singular sample");
    return v;
}

// q^C(j,2) walker: multiply by q^{j-1} each step.
struct QTriangular {
    Rational value{1}, step{1};
    const Rational q;
    explicit QTriangular(const Rational& q_) : q(q_) {}
    void advance() {  // from q^C(j,2) to q^C(j+1,2)
        value *= step;
        step *= q;
    }
};

inline Real real_of(const Rational& v, const PrecisionContext& ctx) {
    return Real(v, ctx.precision_bits);
}

}  // namespace qident::detail
