#pragma once

#include <cstdint>
#include <gmpxx.h>

#include "matdist/matrix.hpp"

namespace matdist {

inline constexpr std::uint64_t kDefaultBudget = 1ull << 32;

/// Throws BudgetExceededError unless size <= budget.
void check_budget(const mpz_class& size, std::uint64_t budget, const char* what);

/**
 * Index-addressable enumeration of M_n(F_q). Elements appear exactly once in
 * row-major lexicographic order; enumeration by index range partitions
 * naturally across workers.
 */
class MatrixSpace {
  public:
    MatrixSpace(FieldPtr field, unsigned n, std::uint64_t budget = kDefaultBudget);
    std::uint64_t size() const { return size_; }
    FqMatrix at(std::uint64_t index) const { return FqMatrix::from_index(*field_, n_, index); }
    const Field& field() const { return *field_; }
    unsigned n() const { return n_; }

  private:
    FieldPtr field_;
    unsigned n_;
    std::uint64_t size_;
};

/// Index-addressable enumeration of M_n(F_q)^r, lexicographic (X_1 major).
class TupleSpace {
  public:
    TupleSpace(FieldPtr field, unsigned n, unsigned r, std::uint64_t budget = kDefaultBudget);
    std::uint64_t size() const { return size_; }
    std::uint64_t matrix_block() const { return block_; }
    FqTuple at(std::uint64_t index) const { return FqTuple::from_index(*field_, n_, r_, index); }
    const Field& field() const { return *field_; }
    unsigned n() const { return n_; }
    unsigned r() const { return r_; }

  private:
    FieldPtr field_;
    unsigned n_, r_;
    std::uint64_t size_, block_;
};

/// Monic polynomials of degree d in canonical order.
class MonicPolySpace {
  public:
    MonicPolySpace(FieldPtr field, unsigned d, std::uint64_t budget = kDefaultBudget);
    std::uint64_t size() const { return size_; }
    FqPoly at(std::uint64_t index) const { return monic_poly_at(*field_, d_, index); }

  private:
    FieldPtr field_;
    unsigned d_;
    std::uint64_t size_;
};

}  // namespace matdist
