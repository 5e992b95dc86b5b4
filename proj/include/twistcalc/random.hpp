#pragma once

#include <cstdint>
#include <random>

#include "twistcalc/ore.hpp"
#include "twistcalc/semilin.hpp"

namespace twc {

/// Deterministic generator for randomized identity checks; a fixed default
/// seed keeps suite output reproducible.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::int64_t below(std::int64_t n) {
        return static_cast<std::int64_t>(eng_() % static_cast<std::uint64_t>(n));
    }
    std::int64_t range(std::int64_t lo, std::int64_t hi) { return lo + below(hi - lo + 1); }
    bool chance(int percent) { return below(100) < percent; }

private:
    std::mt19937_64 eng_;
};

Scalar random_scalar(Rng& rng, const FieldPtr& f);
Scalar random_nonzero_scalar(Rng& rng, const FieldPtr& f);
CoeffElem random_coeff(Rng& rng, const AlgebraPtr& alg, int max_degree, int max_terms);
CoeffElem random_nonzero_coeff(Rng& rng, const AlgebraPtr& alg, int max_degree, int max_terms);
OreOperator random_operator(Rng& rng, const OrePtr& alg, int max_opdeg, int max_coeff_deg,
                            int max_terms);
CoeffMatrix random_matrix(Rng& rng, const AlgebraPtr& alg, int rank, int max_degree);

} // namespace twc
