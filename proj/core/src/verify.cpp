#include "qident/verify.hpp"

#include <algorithm>
#include <chrono>
#include <deque>
#include <sstream>

namespace qident {
namespace {

using Clock = std::chrono::steady_clock;

long ms_since(Clock::time_point t0) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
}

// Deterministic, platform-independent stream seed per (config seed, record, variable).
std::uint64_t fnv1a(std::string_view s, std::uint64_t h) {
    for (const char c : s) {
        h ^= static_cast<unsigned char>(c);
        h *= 1099511628211ull;
    }
    return h;
}

std::uint64_t stream_seed(std::uint64_t base, std::string_view record_id, std::size_t var_index, int n) {
    std::uint64_t h = fnv1a(record_id, 14695981039346656037ull ^ base);
    h ^= 0x9e3779b97f4a7c15ull * (var_index + 1);
    h ^= 0x517cc1b727220a95ull * static_cast<std::uint64_t>(n + 1);
    return h ? h : 1;
}

// Smallest sampler whose admissible pool covers `want` values; bounds grow as the
// per-variable exclusions thin the pool out.
std::vector<Rational> draw_values(std::uint64_t seed, std::size_t want,
                                  const VariableSpec& var_spec) {
    std::vector<RationalSampler::Predicate> excl;
    if (var_spec.excluded) excl.push_back(var_spec.excluded);
    for (long nb = std::max<long>(12, static_cast<long>(want / 3)); nb < (1L << 24); nb *= 2) {
        RationalSampler sampler(seed, nb, 16, excl);
        if (sampler.pool_size() >= want) return sampler.sample(want);
    }
    throw std::runtime_error("sample space exhausted");
}

std::string format_residual(const Real& r) {
    if (r.is_zero()) return "0";
    std::ostringstream os;
    os << r.str(6) << " ~2^" << r.exp2_floor();
    return os.str();
}

std::string format_witness(int n, const std::vector<VariableSpec>& vars,
                           std::span<const Rational> point) {
    std::ostringstream os;
    os << "n=" << n;
    for (std::size_t i = 0; i < vars.size(); ++i) os << ", " << vars[i].name << "=" << point[i].str();
    return os.str();
}

struct EvalOutcome {
    enum Kind { zero, nonzero, singular } kind;
    Rational value;
};

EvalOutcome evaluate(const ExactIdentity& ex, int n, std::span<const Rational> point) {
    try {
        Rational d = ex.difference(n, point);
        return {d.is_zero() ? EvalOutcome::zero : EvalOutcome::nonzero, std::move(d)};
    } catch (const std::domain_error&) {
        return {EvalOutcome::singular, Rational(0)};
    }
}

}  // namespace

std::string_view to_string(VerifyStatus s) {
    switch (s) {
        case VerifyStatus::proved_exact: return "proved_exact";
        case VerifyStatus::passed_numeric: return "passed_numeric";
        case VerifyStatus::failed: return "failed";
        case VerifyStatus::skipped_singular: return "skipped_singular";
    }
    return "unknown";
}

VerificationReport verify_exact(const IdentityRecord& rec, const VerifyConfig& cfg) {
    if (rec.kind != RecordKind::exact_polynomial || !rec.exact)
        throw std::invalid_argument("kind mismatch");
    const auto t0 = Clock::now();
    const ExactIdentity& ex = *rec.exact;
    VerificationReport rep;
    rep.id = rec.id;
    rep.seed = cfg.seed;
    rep.note = rec.notes;
    const int max_n = cfg.max_n > 0 ? cfg.max_n : ex.max_n;
    const bool grid_mode = ex.vars.size() <= 2;
    rep.probabilistic_fallback = !grid_mode && !ex.vars.empty();

    for (int n = ex.min_n; n <= max_n; ++n) {
        if (ex.vars.empty()) {
            const auto out = evaluate(ex, n, {});
            if (out.kind == EvalOutcome::singular) {
                rep.status = VerifyStatus::skipped_singular;
                rep.elapsed_ms = ms_since(t0);
                return rep;
            }
            ++rep.points_tested;
            if (out.kind == EvalOutcome::nonzero) {
                rep.status = VerifyStatus::failed;
                rep.witness = format_witness(n, ex.vars, {});
                rep.max_residual = "exact nonzero: " + out.value.str();
                rep.elapsed_ms = ms_since(t0);
                return rep;
            }
            continue;
        }

        // per-variable value lists, each with spare replacements for singular retries
        std::vector<std::vector<Rational>> values(ex.vars.size());
        std::vector<std::size_t> need(ex.vars.size());
        try {
            for (std::size_t i = 0; i < ex.vars.size(); ++i) {
                const long deg = grid_mode ? ex.vars[i].degree(n) : 0;
                need[i] = grid_mode ? static_cast<std::size_t>(deg + 1)
                                    : static_cast<std::size_t>(cfg.trials) * 12;
                values[i] = draw_values(stream_seed(cfg.seed, rec.id, i, n), need[i] + 48, ex.vars[i]);
            }
        } catch (const std::runtime_error&) {
            rep.status = VerifyStatus::skipped_singular;
            rep.note = "sample space exhausted";
            rep.elapsed_ms = ms_since(t0);
            return rep;
        }

        if (grid_mode) {
            // full cartesian grid; a singular hit replaces the offending coordinate value
            // and restarts this level's scan (pole sets are thin, so this terminates fast)
            std::vector<std::size_t> spare_next(ex.vars.size(), 0);
            for (std::size_t i = 0; i < ex.vars.size(); ++i) spare_next[i] = need[i];
            std::vector<std::size_t> idx(ex.vars.size(), 0);
            std::vector<Rational> point(ex.vars.size(), Rational(0));
            std::size_t flat = 0, grid_points = 0;
            std::size_t total = 1;
            for (const auto ni : need) total *= ni;
            int retries = 0;
            while (flat < total) {
                std::size_t rem = flat;
                for (std::size_t i = 0; i < ex.vars.size(); ++i) {
                    idx[i] = rem % need[i];
                    rem /= need[i];
                    point[i] = values[i][idx[i]];
                }
                const auto out = evaluate(ex, n, point);
                if (out.kind == EvalOutcome::singular) {
                    bool replaced = false;
                    for (std::size_t i = ex.vars.size(); i-- > 0;) {
                        if (spare_next[i] < values[i].size()) {
                            values[i][idx[i]] = values[i][spare_next[i]++];
                            replaced = true;
                            break;
                        }
                    }
                    if (!replaced || ++retries > 512) {
                        rep.status = VerifyStatus::skipped_singular;
                        rep.elapsed_ms = ms_since(t0);
                        return rep;
                    }
                    flat = 0;
                    grid_points = 0;
                    continue;
                }
                ++grid_points;
                if (out.kind == EvalOutcome::nonzero) {
                    rep.points_tested += static_cast<long>(grid_points);
                    rep.status = VerifyStatus::failed;
                    rep.witness = format_witness(n, ex.vars, point);
                    rep.max_residual = "exact nonzero: " + out.value.str();
                    rep.elapsed_ms = ms_since(t0);
                    return rep;
                }
                ++flat;
            }
            rep.points_tested += static_cast<long>(grid_points);
        } else {
            // >= 3 free variables: `trials` admissible joint samples, flagged probabilistic
            std::size_t accepted = 0, cursor = 0;
            const std::size_t limit = values[0].size();
            while (accepted < static_cast<std::size_t>(cfg.trials) && cursor < limit) {
                std::vector<Rational> point(ex.vars.size(), Rational(0));
                for (std::size_t i = 0; i < ex.vars.size(); ++i) point[i] = values[i][cursor];
                ++cursor;
                const auto out = evaluate(ex, n, point);
                if (out.kind == EvalOutcome::singular) continue;
                ++rep.points_tested;
                ++accepted;
                if (out.kind == EvalOutcome::nonzero) {
                    rep.status = VerifyStatus::failed;
                    rep.witness = format_witness(n, ex.vars, point);
                    rep.max_residual = "exact nonzero: " + out.value.str();
                    rep.elapsed_ms = ms_since(t0);
                    return rep;
                }
            }
            if (accepted < static_cast<std::size_t>(cfg.trials)) {
                rep.status = VerifyStatus::skipped_singular;
                rep.elapsed_ms = ms_since(t0);
                return rep;
            }
        }
    }

    rep.status = VerifyStatus::proved_exact;
    rep.residual_exact_zero = true;
    rep.max_residual = "0 (exact)";
    rep.elapsed_ms = ms_since(t0);
    return rep;
}

namespace {

struct SeriesPointResult {
    bool passed = false;
    int terms_used = 0;
    Real residual;
    std::string error;
};

SeriesPointResult run_series_point(const SeriesIdentity& se, std::span<const Rational> params,
                                   const PrecisionContext& ctx) {
    SeriesPointResult out;
    const Real tol = ctx.tolerance();
    const Real floor = Real::pow2(ctx.tolerance_exp - 10, ctx.precision_bits);
    Real ratio4(1, ctx.precision_bits);
    {
        Real r(Rational(static_cast<long>(se.ratio_bound * 4096), 4096), ctx.precision_bits);
        ratio4 = r * r * r * r;
    }
    Real lhs(ctx.precision_bits);
    try {
        lhs = se.lhs(params, ctx);
    } catch (const std::exception& e) {
        out.error = e.what();
        return out;
    }
    Real sum(0, ctx.precision_bits);
    out.residual = lhs.abs();
    std::deque<Real> window;  // last 8 term magnitudes
    for (int j = 0; j < ctx.max_terms; ++j) {
        Real t(ctx.precision_bits);
        try {
            t = se.term(j, params, ctx);
        } catch (const std::exception& e) {
            out.error = e.what();
            return out;
        }
        sum += t;
        window.push_back(t.abs());
        if (window.size() > 8) window.pop_front();
        out.residual = (lhs - sum).abs();
        out.terms_used = j + 1;
        if (!(out.residual < tol)) continue;
        // fast path: the expansion has effectively terminated
        if (window.size() >= 2 && window[window.size() - 1] < floor && window[window.size() - 2] < floor &&
            out.residual < tol / 4) {
            out.passed = true;
            return out;
        }
        // eventual-decay gate over the trailing window
        if (window.size() == 8) {
            Real head(0, ctx.precision_bits), tail(0, ctx.precision_bits);
            for (int i = 0; i < 4; ++i) {
                if (head < window[i]) head = window[i];
                if (tail < window[i + 4]) tail = window[i + 4];
            }
            if (tail <= ratio4 * head + floor) {
                out.passed = true;
                return out;
            }
        }
    }
    return out;
}

}  // namespace

VerificationReport verify_series(const IdentityRecord& rec, const VerifyConfig& cfg) {
    if (rec.kind != RecordKind::numeric_series || !rec.series)
        throw std::invalid_argument("kind mismatch");
    const auto t0 = Clock::now();
    const SeriesIdentity& se = *rec.series;
    VerificationReport rep;
    rep.id = rec.id;
    rep.seed = cfg.seed;
    rep.note = rec.notes;
    Real worst(0, cfg.ctx.precision_bits);
    for (const auto& point : se.points) {
        const auto r = run_series_point(se, point, cfg.ctx);
        ++rep.points_tested;
        rep.terms_used = std::max(rep.terms_used, r.terms_used);
        if (worst < r.residual) worst = r.residual;
        if (!r.passed) {
            rep.status = VerifyStatus::failed;
            std::ostringstream os;
            for (std::size_t i = 0; i < se.param_names.size(); ++i)
                os << (i ? ", " : "") << se.param_names[i] << "=" << point[i].str();
            rep.witness = os.str();
            if (!r.error.empty()) rep.note = r.error;
            rep.max_residual = format_residual(r.residual);
            rep.elapsed_ms = ms_since(t0);
            return rep;
        }
    }
    rep.status = VerifyStatus::passed_numeric;
    rep.max_residual = format_residual(worst);
    rep.elapsed_ms = ms_since(t0);
    return rep;
}

VerificationReport verify_series_at(const IdentityRecord& rec, const VerifyConfig& cfg,
                                    std::span<const Rational> params) {
    if (rec.kind != RecordKind::numeric_series || !rec.series)
        throw std::invalid_argument("kind mismatch");
    IdentityRecord pinned = rec;
    auto se = std::make_shared<SeriesIdentity>(*rec.series);
    se->points = {std::vector<Rational>(params.begin(), params.end())};
    pinned.series = se;
    return verify_series(pinned, cfg);
}

VerificationReport verify_record(const IdentityRecord& rec, const VerifyConfig& cfg) {
    return rec.kind == RecordKind::exact_polynomial ? verify_exact(rec, cfg) : verify_series(rec, cfg);
}

namespace {

bool filter_selects_control(std::string_view prefix, std::string_view id) {
    if (prefix.empty()) return false;
    const auto last_dot = id.rfind('.');
    return prefix.size() > last_dot;  // the filter reaches into the final component
}

}  // namespace

AggregateReport verify_all(std::string_view id_prefix, const VerifyConfig& cfg) {
    AggregateReport agg;
    agg.id_filter = std::string(id_prefix);
    agg.config = cfg;
    for (const IdentityRecord& rec : catalog()) {
        if (rec.id.compare(0, id_prefix.size(), id_prefix) != 0) continue;
        if (rec.negative_control && !filter_selects_control(id_prefix, rec.id)) continue;
        agg.reports.push_back(verify_record(rec, cfg));
    }
    std::sort(agg.reports.begin(), agg.reports.end(),
              [](const auto& a, const auto& b) { return a.id < b.id; });
    for (const auto& r : agg.reports) {
        ++agg.total;
        switch (r.status) {
            case VerifyStatus::proved_exact: ++agg.proved_exact; break;
            case VerifyStatus::passed_numeric: ++agg.passed_numeric; break;
            case VerifyStatus::failed: ++agg.failed; break;
            case VerifyStatus::skipped_singular: ++agg.skipped; break;
        }
    }
    return agg;
}

IdentityRecord perturb_record(const IdentityRecord& rec, const Rational& eps) {
    if (rec.kind != RecordKind::exact_polynomial || !rec.exact)
        throw std::invalid_argument("kind mismatch");
    IdentityRecord mut = rec;
    mut.id = rec.id + ".perturbed";
    auto ex = std::make_shared<ExactIdentity>(*rec.exact);
    auto base = rec.exact;
    ex->difference = [base, eps](int n, std::span<const Rational> pt) {
        return base->difference(n, pt) + eps;
    };
    mut.exact = ex;
    return mut;
}

}  // namespace qident
