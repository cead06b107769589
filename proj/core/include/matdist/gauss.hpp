#pragma once

#include <map>
#include <optional>

#include "matdist/cyclotomic.hpp"
#include "matdist/enumerate.hpp"
#include "matdist/matrix.hpp"
#include "matdist/simclass.hpp"

namespace matdist {

/**
 * Quadratic matrix Gauss sum G(A, B) = sum over X in M_n(F_q) of
 * psi(A X^2 + B X), with psi(M) = zeta_p^{Tr_{F_q/F_p}(Tr M)}. Evaluation
 * tallies the trace exponents into a length-p histogram and combines once,
 * so the q^{n^2} loop costs integer increments rather than cyclotomic
 * additions.
 */
CycInt gauss_sum(const FqMatrix& a, const FqMatrix& b, std::uint64_t budget = kDefaultBudget);

/**
 * Cache of B = 0 Gauss sums keyed by similarity class (cycle type): Tr(A X^2)
 * is conjugation-invariant, so G(A, 0) is a class function. Entries are
 * written once per class and read concurrently afterwards.
 */
class GaussCache {
  public:
    GaussCache(FieldPtr field, unsigned n, std::uint64_t budget = kDefaultBudget);

    /// G(a, 0), computed once per similarity class.
    const CycInt& value_b0(const FqMatrix& a);
    /// Fills the cache with one entry per similarity class of M_n(F_q).
    void precompute_classes();

    std::size_t entries() const { return cache_.size(); }
    IrrSieve& sieve() { return sieve_; }
    const Field& field() const { return *field_; }
    unsigned n() const { return n_; }
    std::uint64_t budget() const { return budget_; }

  private:
    FieldPtr field_;
    unsigned n_;
    std::uint64_t budget_;
    IrrSieve sieve_;
    std::map<std::string, CycInt> cache_;
};

/// Exact magnitude law check for one matrix: G(A,0) * conj(G(A,0)) must
/// equal q^{n^2 + rho_A} with rho_A the Gram-matrix radical dimension.
/// When B is supplied and nonzero, the float ratio |G(A,B)|^2 / q^{n^2+rho}
/// under the principal embedding is recorded and must stay <= 1 + 1e-9.
struct MagnitudeReport {
    unsigned radical_dim = 0;
    mpz_class expected;              // q^{n^2 + rho}
    mpz_class magnitude_squared_b0;  // exact |G(A,0)|^2
    std::optional<double> ratio_b;   // |G(A,B)|^2 / expected, B != 0 case
    std::optional<CycInt> magnitude_squared_b;  // exact |G(A,B)|^2 (may be irrational)
};

MagnitudeReport verify_magnitude(const FqMatrix& a,
                                 const std::optional<FqMatrix>& b = std::nullopt,
                                 GaussCache* cache = nullptr);

}  // namespace matdist
