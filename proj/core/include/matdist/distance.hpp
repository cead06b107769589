#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "matdist/rng.hpp"
#include "matdist/spheres.hpp"

namespace matdist {

/// Point sets in M_n(F_q)^r are deduplicated tuple-index lists.
using PointSet = TupleSet;

/// Uniform random subset of the tuple space, without replacement, by Floyd's
/// algorithm against a membership bitmap: exactly `size` PRNG draws, uniform
/// over subsets, identical across platforms for a fixed seed.
PointSet random_point_set(FieldPtr field, unsigned n, unsigned r, std::uint64_t size,
                          SplitMix64& rng, std::uint64_t budget = kDefaultBudget);

/// The distance set Delta(E): all values ||X - Y|| over pairs, as sorted
/// matrix indices. Quadratic in #E with early exit once every radius is seen.
std::vector<std::uint64_t> distance_set(const PointSet& e);

enum class IncidenceMode { Direct, Fourier, Both };

/// Exact rational as a decimal fraction string pair (kept printable without
/// dragging GMP types through report consumers).
struct IncidenceRow {
    std::uint64_t t_index = 0;
    mpq_class nu_direct;    // pair-counting side
    mpq_class nu_fourier;   // inversion-formula side (when computed)
    mpq_class sphere_term;  // #sigma_T / q^{rn^2}
    mpq_class error_term;   // nu - sphere term, from the spectral sum
};

struct IncidenceReport {
    unsigned n = 0, r = 0, q = 0;
    std::uint64_t set_size = 0;
    std::uint64_t distance_count = 0;  // #Delta(E)
    std::vector<IncidenceRow> rows;    // indexed by radius (matrix index order)
    std::vector<std::pair<std::string, double>> reference_exponents;
    bool modes_agree = true;
};

/// The incidence function nu(T) computed by direct pair counting and/or the
/// Fourier-side identity
///   nu(T) = #sigma_T / q^{rn^2}
///         + q^{2rn^2} (#E)^{-2} sum_{M != 0} |E^(M)|^2 sigma_T^(M),
/// both in exact rational arithmetic; the two sides must agree exactly.
IncidenceReport incidence(const PointSet& e, IncidenceMode mode,
                          std::uint64_t budget = kDefaultBudget);

/// Exact number of ordered pairs of E at every distance, via the difference
/// multiset: IDFT(|DFT(1_E)|^2) summed over each sphere. All arithmetic is
/// integer cyclotomic; the result equals direct pair counting exactly.
std::vector<mpz_class> pair_distance_counts_transform(const PointSet& e, unsigned threads = 1);

struct ThresholdRow {
    std::uint64_t size = 0;
    unsigned trials = 0;
    unsigned successes = 0;  // trials with Delta(E) = M_n(F_q)
    double success_fraction = 0.0;
    double exponent_logq = 0.0;  // log_q(#E)
};

struct ThresholdReport {
    unsigned n = 0, r = 0, q = 0;
    std::uint64_t seed = 0;
    std::vector<ThresholdRow> rows;
    /// Reference threshold exponents for this (n, r); reference lines only,
    /// never asserted (the implied constants are unknowable at fixed q).
    std::vector<std::pair<std::string, double>> reference_exponents;
    unsigned monotonicity_violations = 0;  // success fraction drops along the schedule
};

/**
 * Random-set threshold experiment: for each target size, samples `trials`
 * uniform subsets E (deterministic from `seed`) and reports the fraction
 * with Delta(E) equal to all of M_n(F_q).
 *
 * Realized distances are counted exactly: small sets by direct pairs, larger
 * ones through the difference-multiset computed with an exact cyclotomic
 * DFT over the additive group (F_p)^{g r n^2} (integer coordinates
 * throughout; no floats).
 */
ThresholdReport threshold_experiment(FieldPtr field, unsigned n, unsigned r,
                                     const std::vector<std::uint64_t>& sizes, unsigned trials,
                                     std::uint64_t seed, std::uint64_t budget = kDefaultBudget);

/// Reference exponents for Delta(E) = M_n thresholds at the given (n, r).
std::vector<std::pair<std::string, double>> threshold_reference_exponents(unsigned n, unsigned r);

}  // namespace matdist
