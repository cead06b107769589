#pragma once

#include <cstdint>
#include <vector>

#include "matdist/gauss.hpp"

namespace matdist {

/// Exact value num / q^qexp; the shape of sphere Fourier coefficients and
/// spectra (denominators are powers of q only).
struct ScaledCyc {
    CycInt num;
    unsigned qexp = 0;
};

/**
 * M_n(F_q) partitioned into similarity classes, with the B = 0 Gauss sum of
 * each class: the shared substrate of the sphere counting and FT formulas
 * (the Gauss-sum factor is a class function; the phase factor psi(-ST) is
 * not, so sweeps tally phases per element and multiply per class).
 */
struct ClassifiedSpace {
    FieldPtr field;
    unsigned n = 0;
    std::vector<std::uint16_t> class_of;  // matrix index -> class id
    std::vector<FqMatrix> reps;           // class id -> first matrix (lowest index)
    std::vector<CycInt> g0;               // class id -> G(rep, 0)
};

ClassifiedSpace classify_space(FieldPtr field, unsigned n, GaussCache& cache);

/// #sigma_T by the character-sum formula
///   #sigma_T = q^{n^2(r-1)} + q^{-n^2} sum_{S != 0} psi(-ST) G(S,0)^r;
/// the cyclotomic sum provably reduces to a rational multiple of q^{n^2}, so
/// a NonIntegerResultError can only signal an implementation bug.
mpz_class sphere_count_formula(const FqMatrix& t, unsigned r, const ClassifiedSpace& cs);

/// The formula evaluated for every radius T at once (indexed by matrix
/// index), sharing one phase-histogram pass per T across all requested r.
std::vector<std::vector<mpz_class>> sphere_counts_formula_multi(const ClassifiedSpace& cs,
                                                                const std::vector<unsigned>& rs,
                                                                unsigned threads = 1);

/// Exhaustive sphere sizes: one pass over M_n^r tallying ||X|| per radius.
/// Requires q^{rn^2} within budget (and, for r >= 2, a q^{n^2} x q^{n^2}
/// addition table, so q^{n^2} <= 4096).
std::vector<std::uint64_t> sphere_counts_brute_all(FieldPtr field, unsigned n, unsigned r,
                                                   std::uint64_t budget = kDefaultBudget);

mpz_class sphere_count_brute(FieldPtr field, unsigned n, unsigned r, const FqMatrix& t,
                             std::uint64_t budget = kDefaultBudget);

/// Sphere Fourier coefficient at M != 0 by the character-sum formula:
///   sigma_T^(M) = q^{-(r+1)n^2} sum_{S != 0} psi(-ST) prod_i G(S, -M_i).
ScaledCyc sphere_ft_formula(const FqMatrix& t, const FqTuple& m, const ClassifiedSpace& cs,
                            std::uint64_t budget = kDefaultBudget);

/// As above for every radius T at one M, sharing the per-S Gauss products.
std::vector<ScaledCyc> sphere_ft_formula_all_t(const FqTuple& m, const ClassifiedSpace& cs,
                                               std::uint64_t budget = kDefaultBudget);

/// Deduplicated point set E inside M_n(F_q)^r, elements as tuple indices.
struct TupleSet {
    FieldPtr field;
    unsigned n = 0, r = 0;
    std::vector<std::uint64_t> elems;  // sorted, unique
};

/// Full spectrum of the indicator of E: unscaled[M] = sum_{A in E}
/// conj(psi)(M . A), so E^(M) = unscaled[M] / q^{rn^2}.
struct Spectrum {
    FieldPtr field;
    unsigned n = 0, r = 0;
    unsigned qexp = 0;
    std::vector<CycInt> unscaled;  // indexed by tuple index of M
};

Spectrum dft_indicator(const TupleSet& e, std::uint64_t budget = kDefaultBudget);

/// Exact Plancherel identity: sum_M |E^(M)|^2 == #E / q^{rn^2}, checked in
/// cyclotomic arithmetic without scaling denominators.
bool plancherel_check(const TupleSet& e, std::uint64_t budget = kDefaultBudget);

/// Exact Fourier inversion: reconstructing the indicator from the spectrum
/// returns exactly 1 on E and 0 elsewhere.
bool inversion_check(const TupleSet& e, std::uint64_t budget = kDefaultBudget);

/// Members of sigma_T as a TupleSet (brute enumeration).
TupleSet sphere_members(FieldPtr field, unsigned n, unsigned r, const FqMatrix& t,
                        std::uint64_t budget = kDefaultBudget);

}  // namespace matdist
