#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "matdist/field.hpp"
#include "matdist/poly.hpp"

namespace matdist {

/**
 * Dense square matrix over F_q, entries stored row-major as element indices.
 * Dimensions in every supported workload are tiny (n <= 4), so there is no
 * sparse path and no fast multiplication.
 */
class FqMatrix {
  public:
    FqMatrix(const Field& f, unsigned n) : f_(&f), n_(n), e_(static_cast<std::size_t>(n) * n, 0) {}

    static FqMatrix identity(const Field& f, unsigned n);
    static FqMatrix diag(const Field& f, const std::vector<std::uint16_t>& values);
    /// Companion matrix of a monic polynomial.
    static FqMatrix companion(const FqPoly& f);
    static FqMatrix block_diag(const std::vector<FqMatrix>& blocks);

    const Field& field() const { return *f_; }
    unsigned n() const { return n_; }

    std::uint16_t at(unsigned i, unsigned j) const { return e_[i * n_ + j]; }
    void set(unsigned i, unsigned j, std::uint16_t v) { e_[i * n_ + j] = v; }
    const std::vector<std::uint16_t>& entries() const { return e_; }

    FqMatrix operator+(const FqMatrix& o) const;
    FqMatrix operator-(const FqMatrix& o) const;
    FqMatrix operator*(const FqMatrix& o) const;
    FqMatrix operator-() const;
    FqMatrix scaled(std::uint16_t s) const;
    bool operator==(const FqMatrix& o) const { return n_ == o.n_ && e_ == o.e_; }
    bool operator!=(const FqMatrix& o) const { return !(*this == o); }
    bool is_zero() const;

    std::uint16_t trace() const;
    FqMatrix transpose() const;
    unsigned rank() const;
    bool invertible() const { return rank() == n_; }

    /// Row-major lexicographic index (entry (0,0) most significant).
    std::uint64_t to_index() const;
    static FqMatrix from_index(const Field& f, unsigned n, std::uint64_t index);

    /// Literal format: rows separated by ';', entries by ','; extension-field
    /// entries use "c0+c1*t" tokens. Example: "1,0;0,2".
    static FqMatrix parse(const Field& f, const std::string& text);
    std::string str() const;

  private:
    void check_compat(const FqMatrix& o) const;
    const Field* f_;
    unsigned n_;
    std::vector<std::uint16_t> e_;
};

/// Characteristic polynomial det(T*I - A), monic of degree n, by the
/// division-free Berkowitz recursion (valid over any commutative ring, so no
/// pivoting or interpolation constraints from small q).
FqPoly char_poly(const FqMatrix& a);

/// Inverse by Gauss-Jordan elimination; throws on singular input.
FqMatrix inverse(const FqMatrix& a);

/// Evaluates a polynomial at a matrix argument.
FqMatrix eval_at_matrix(const FqPoly& f, const FqMatrix& a);

/**
 * An r-tuple of n x n matrices; the points of the distance-set model.
 * norm() is the norm-like map X -> sum of X_i^2.
 */
class FqTuple {
  public:
    FqTuple(const Field& f, unsigned n, unsigned r)
        : mats_(r, FqMatrix(f, n)) {}
    explicit FqTuple(std::vector<FqMatrix> mats);

    unsigned r() const { return static_cast<unsigned>(mats_.size()); }
    unsigned n() const { return mats_[0].n(); }
    const Field& field() const { return mats_[0].field(); }
    const FqMatrix& operator[](unsigned i) const { return mats_[i]; }
    FqMatrix& operator[](unsigned i) { return mats_[i]; }

    FqMatrix norm() const;
    /// Dot product sum of A_i * B_i.
    FqMatrix dot(const FqTuple& o) const;
    FqTuple operator-(const FqTuple& o) const;
    bool operator==(const FqTuple& o) const { return mats_ == o.mats_; }
    bool is_zero() const;

    std::uint64_t to_index() const;
    static FqTuple from_index(const Field& f, unsigned n, unsigned r, std::uint64_t index);

    std::string str() const;

  private:
    std::vector<FqMatrix> mats_;
};

}  // namespace matdist
