#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "matdist/field.hpp"

namespace matdist {

/**
 * Univariate polynomial over F_q. Coefficients are element indices, constant
 * term first, with no trailing zeros; the zero polynomial has an empty list.
 */
class FqPoly {
  public:
    explicit FqPoly(const Field& f) : f_(&f) {}
    FqPoly(const Field& f, std::vector<std::uint16_t> coeffs);

    static FqPoly zero(const Field& f) { return FqPoly(f); }
    static FqPoly one(const Field& f) { return FqPoly(f, {f.one()}); }
    static FqPoly x(const Field& f) { return FqPoly(f, {0, f.one()}); }
    static FqPoly constant(const Field& f, std::uint16_t c) { return FqPoly(f, {c}); }
    /// From integer coefficients, reduced through the prime subfield.
    static FqPoly from_ints(const Field& f, const std::vector<long long>& coeffs);

    const Field& field() const { return *f_; }
    const std::vector<std::uint16_t>& coeffs() const { return c_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_monic() const { return !c_.empty() && c_.back() == f_->one(); }
    std::uint16_t coeff(unsigned i) const { return i < c_.size() ? c_[i] : 0; }
    std::uint16_t leading() const { return c_.empty() ? 0 : c_.back(); }

    FqPoly operator+(const FqPoly& o) const;
    FqPoly operator-(const FqPoly& o) const;
    FqPoly operator*(const FqPoly& o) const;
    bool operator==(const FqPoly& o) const;
    bool operator!=(const FqPoly& o) const { return !(*this == o); }

    /// Quotient and remainder by a nonzero divisor.
    std::pair<FqPoly, FqPoly> divmod(const FqPoly& divisor) const;
    FqPoly mod(const FqPoly& divisor) const { return divmod(divisor).second; }
    bool divisible_by(const FqPoly& divisor) const { return mod(divisor).is_zero(); }

    FqPoly monic() const;
    FqPoly pow(unsigned e) const;
    std::uint16_t eval(std::uint16_t x) const;

    /// f(T^2): the coefficient of T^{2i} is coeff(i).
    FqPoly compose_square() const;
    /// Monic normalization of f(-T), i.e. (-1)^{deg f} * f(-T). A monic
    /// irreducible f != T satisfies reflect(f) == f exactly when f is a
    /// polynomial in T^2.
    FqPoly reflect() const;
    /// For f = pi(T^2), recovers pi; only valid when odd coefficients vanish.
    FqPoly decompose_square() const;

    /// Encoding of the coefficient tuple with the high-degree coefficient
    /// most significant; (degree, encoding) ascending is the canonical order
    /// used for sieves, factor lists, and default moduli.
    std::uint64_t encoding() const;

    std::string str(const std::string& var = "T") const;

  private:
    void trim();
    const Field* f_;
    std::vector<std::uint16_t> c_;
};

/// Canonical order: by degree, then by coefficient encoding.
bool poly_less(const FqPoly& a, const FqPoly& b);

struct PolyLess {
    bool operator()(const FqPoly& a, const FqPoly& b) const { return poly_less(a, b); }
};

/**
 * Deterministic cache of monic irreducibles over one field, built degree by
 * degree: a monic polynomial of degree d is irreducible iff it is divisible
 * by no cached irreducible of degree <= d/2. Lists are in canonical order,
 * so every consumer sees the same polynomials in the same sequence.
 * Build the needed degrees once (single writer), then read concurrently.
 */
class IrrSieve {
  public:
    explicit IrrSieve(FieldPtr field, std::uint64_t budget = (1ull << 32))
        : field_(std::move(field)), budget_(budget) {}

    const Field& field() const { return *field_; }

    /// All monic irreducibles of exactly degree d, canonical order.
    const std::vector<FqPoly>& irreducibles(unsigned d);

    bool is_irreducible(const FqPoly& f);

    /// Complete factorization of a monic polynomial into monic irreducibles
    /// with multiplicities, sorted canonically; the expanded product equals
    /// the input exactly.
    std::vector<std::pair<FqPoly, unsigned>> factor(const FqPoly& f);

  private:
    void ensure(unsigned d);
    FieldPtr field_;
    std::uint64_t budget_;
    std::vector<std::vector<FqPoly>> by_degree_;  // by_degree_[d]
};

/// Number of monic polynomials of degree d over F_q (= q^d), with budget check.
std::uint64_t monic_count(const Field& f, unsigned d, std::uint64_t budget);

/// Decodes the canonical index of a monic degree-d polynomial.
FqPoly monic_poly_at(const Field& f, unsigned d, std::uint64_t index);

}  // namespace matdist
