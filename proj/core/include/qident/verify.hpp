#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "qident/catalog.hpp"
#include "qident/sampler.hpp"

namespace qident {

enum class VerifyStatus { proved_exact, passed_numeric, failed, skipped_singular };

std::string_view to_string(VerifyStatus s);

struct VerificationReport {
    std::string id;
    VerifyStatus status = VerifyStatus::failed;
    long points_tested = 0;
    bool residual_exact_zero = false;
    std::string max_residual;  // "0 (exact)" or decimal with "~2^-k" annotation
    int terms_used = 0;
    std::uint64_t seed = 0;
    bool probabilistic_fallback = false;
    std::string witness;  // reproducible failing parameter tuple
    std::string note;
    long elapsed_ms = 0;
};

struct VerifyConfig {
    std::uint64_t seed = 42;
    int max_n = 0;    // 0 = use each record's own level range
    int trials = 20;  // joint samples per level for records with >= 3 free variables
    PrecisionContext ctx;
};

/// Exact engine: grids exceeding every per-variable degree bound (<= 2 variables),
/// otherwise `trials` admissible joint samples per level, flagged probabilistic.
/// Status: proved_exact, failed (with witness), or skipped_singular when no
/// admissible point set could be assembled.
VerificationReport verify_exact(const IdentityRecord& rec, const VerifyConfig& cfg);

/// Numeric engine: partial sums at every pinned point until |lhs - sum| < ctx.tolerance
/// with eventually-decaying terms, within ctx.max_terms.
VerificationReport verify_series(const IdentityRecord& rec, const VerifyConfig& cfg);

/// Numeric engine at one explicit parameter point (overrides the record's pinned points).
VerificationReport verify_series_at(const IdentityRecord& rec, const VerifyConfig& cfg,
                                    std::span<const Rational> params);

/// Dispatch on record kind. Throws std::invalid_argument("kind mismatch") if the
/// record payload is missing for its kind.
VerificationReport verify_record(const IdentityRecord& rec, const VerifyConfig& cfg);

struct AggregateReport {
    std::string id_filter;
    VerifyConfig config;
    std::vector<VerificationReport> reports;  // ordered by id
    long total = 0, proved_exact = 0, passed_numeric = 0, failed = 0, skipped = 0;
    bool all_passed() const { return failed == 0; }
};

/// Run every catalog record whose id starts with `id_prefix` (all when empty).
/// Negative controls are included only when the filter names them past their last
/// dotted component, so default sweeps stay green while explicit filters can
/// exercise the documented-failure records.
AggregateReport verify_all(std::string_view id_prefix, const VerifyConfig& cfg);

/// Mutation-testing hook: the same exact record with the difference shifted by eps.
IdentityRecord perturb_record(const IdentityRecord& rec, const Rational& eps);

}  // namespace qident
