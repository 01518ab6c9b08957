#include "qident/sampler.hpp"

#include <random>
#include <stdexcept>

namespace qident {
namespace {

// Unbiased bounded draw with a fully specified algorithm (std::uniform_int_distribution
// is implementation-defined, which would break cross-toolchain determinism of pinned samples).
std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t bound) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % bound;
}

}  // namespace

RationalSampler::RationalSampler(std::uint64_t seed, long numerator_bound, long denominator_bound,
                                 std::vector<Predicate> exclusions)
    : seed_(seed) {
    if (numerator_bound < 1 || denominator_bound < 1)
        throw std::invalid_argument("sampler bounds must be positive");
    for (long d = 1; d <= denominator_bound; ++d) {
        for (long n = -numerator_bound; n <= numerator_bound; ++n) {
            const Rational r(n, d);
            if (r.den() != d) continue;  // non-canonical duplicate, already enumerated
            bool excluded = false;
            for (const auto& p : exclusions) {
                if (p(r)) { excluded = true; break; }
            }
            if (!excluded) pool_.push_back(r);
        }
    }
}

std::vector<Rational> RationalSampler::sample(std::size_t count) const {
    if (count > pool_.size()) throw std::runtime_error("sample space exhausted");
    std::mt19937_64 rng(seed_);
    std::vector<Rational> deck = pool_;
    for (std::size_t i = deck.size() - 1; i > 0; --i) {
        const std::size_t j = static_cast<std::size_t>(draw_below(rng, i + 1));
        std::swap(deck[i], deck[j]);
    }
    deck.resize(count);
    return deck;
}

}  // namespace qident
