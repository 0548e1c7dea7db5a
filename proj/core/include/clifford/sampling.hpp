#pragma once

#include <cstdint>
#include <random>

#include "clifford/torus.hpp"
#include "clifford/vector_field.hpp"

namespace clifford {

/// Seeded generators for randomized sweeps and property tests. A sampler is
/// deterministic for a given seed; per-trial samplers derive independent
/// seeds so trials can run in any order.
class Sampler {
public:
    explicit Sampler(uint64_t seed) : rng_(seed) {}

    /// Independent sampler for trial `index` under the same master seed.
    static Sampler for_trial(uint64_t seed, uint64_t index);

    uint64_t uint(uint64_t bound);  // uniform in [0, bound)
    bool chance(double p);

    /// Numerator in [-max_num, max_num], denominator in [1, max_den].
    Rational rational(long max_num = 9, long max_den = 4);
    Rational nonzero_rational(long max_num = 9, long max_den = 4);

    Monomial monomial(int max_degree);
    /// Sparse polynomial of total degree <= max_degree with up to max_terms
    /// terms (possibly zero).
    MPoly mpoly(int max_degree, int max_terms = 4);
    MPoly nonzero_mpoly(int max_degree, int max_terms = 4);

    UPoly upoly(int max_degree, int max_terms = 4, const std::string& var = "t");

    /// Parameter block with every entry of degree <= max_degree; entries may
    /// vanish.
    CliffordParams params(int max_degree);

    /// Torus-invariant field with all four components nonzero, built from
    /// random parameters (retries until nondegenerate). Half of the samples
    /// plant hyperplane factors from the rational circle-point stream so the
    /// detection pipeline sees nontrivial meridians and parallels.
    VectorField nondegenerate_field(int max_degree);

    std::mt19937_64& rng() { return rng_; }

private:
    std::mt19937_64 rng_;
};

}  // namespace clifford
