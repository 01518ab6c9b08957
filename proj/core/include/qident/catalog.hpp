#pragma once

#include <functional>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qident/rational.hpp"
#include "qident/real.hpp"

namespace qident {

enum class RecordKind { exact_polynomial, numeric_series };

struct VariableSpec {
    std::string name;
    std::string domain;                             // human-readable domain note for listings
    std::function<long(int)> degree;                // per-variable degree bound at level n (exact kind)
    std::function<bool(const Rational&)> excluded;  // per-value exclusion; null = none
};

/// A finitely-parametrized identity proved by exact evaluation on per-variable grids
/// exceeding every degree bound (<= 2 free variables), or spot-checked at `trials`
/// admissible joint samples per n when more variables are free (flagged probabilistic).
struct ExactIdentity {
    std::vector<VariableSpec> vars;
    int min_n = 1;
    int max_n = 10;  // per-record default level range; config may override
    /// LHS - RHS at level n (exact). Components of multi-part identities are folded
    /// as a sum of absolute differences, which vanishes iff every component does.
    /// Throws std::domain_error on a singular point; the engine resamples.
    std::function<Rational(int, std::span<const Rational>)> difference;
};

/// An infinite expansion checked numerically: partial sums of `term` against `lhs`
/// at pinned parameter points, with an eventual-decay requirement on term magnitudes.
struct SeriesIdentity {
    std::vector<std::string> param_names;
    std::vector<std::vector<Rational>> points;
    double ratio_bound = 0.75;  // eventual geometric decay bound, < 1
    std::function<Real(std::span<const Rational>, const PrecisionContext&)> lhs;
    std::function<Real(int, std::span<const Rational>, const PrecisionContext&)> term;
};

struct IdentityRecord {
    std::string id;       // dotted, stable, unique
    std::string anchor;   // short label of the underlying statement
    RecordKind kind = RecordKind::exact_polynomial;
    std::string display;  // the statement being verified, in plain notation
    std::string notes;
    /// Documented-to-fail records (sabotage controls, the non-convergent
    /// density-expansion convention). Excluded from aggregate runs unless the
    /// filter names them specifically.
    bool negative_control = false;
    std::shared_ptr<const ExactIdentity> exact;
    std::shared_ptr<const SeriesIdentity> series;
};

/// All registered identities, ordered by id. Built once, immutable afterwards.
const std::vector<IdentityRecord>& catalog();

/// Lookup by exact id; throws std::invalid_argument for unknown ids.
const IdentityRecord& find_record(std::string_view id);

namespace detail {
// per-family registration units, assembled by catalog()
void register_poch(std::vector<IdentityRecord>&);
void register_jacobi(std::vector<IdentityRecord>&);
void register_q(std::vector<IdentityRecord>&);
void register_families(std::vector<IdentityRecord>&);
void register_controls(std::vector<IdentityRecord>&);
}  // namespace detail

}  // namespace qident
