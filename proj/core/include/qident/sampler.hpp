#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "qident/rational.hpp"

namespace qident {

/// Deterministic stream of small admissible rationals.
///
/// The candidate pool is every canonical p/q with |p| <= numerator_bound and
/// 1 <= q <= denominator_bound that fails all exclusion predicates. Sampling is a
/// seeded Fisher-Yates pass over the enumerated pool, so identical
/// (seed, bounds, exclusions) always reproduce the same sequence, independent of
/// the platform's distribution implementations.
class RationalSampler {
public:
    using Predicate = std::function<bool(const Rational&)>;

    explicit RationalSampler(std::uint64_t seed, long numerator_bound = 12, long denominator_bound = 8,
                             std::vector<Predicate> exclusions = {});

    /// `count` pairwise-distinct admissible rationals. Throws std::runtime_error
    /// "sample space exhausted" when the admissible pool is smaller than count.
    std::vector<Rational> sample(std::size_t count) const;

    std::size_t pool_size() const { return pool_.size(); }
    std::uint64_t seed() const { return seed_; }

private:
    std::uint64_t seed_;
    std::vector<Rational> pool_;  // admissible candidates in a fixed enumeration order
};

/// Spec-named operation.
inline std::vector<Rational> sample_rationals(const RationalSampler& s, std::size_t count) {
    return s.sample(count);
}

}  // namespace qident
