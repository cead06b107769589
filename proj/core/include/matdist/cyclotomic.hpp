#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "matdist/errors.hpp"
#include "matdist/field.hpp"

namespace matdist {

/**
 * An exact element of Z[zeta_p], zeta_p a primitive p-th root of unity,
 * stored in canonical reduced coordinates on the integral basis
 * 1, zeta, ..., zeta^{p-2} (using zeta^{p-1} = -(1 + zeta + ... + zeta^{p-2})).
 * Because the power basis is a Z-basis for prime p, reduced coordinates are
 * unique and equality is a plain coordinate comparison. Coordinates are
 * arbitrary-precision: character sums over M_n(F_q) reach magnitude q^{n^2}
 * and their norms q^{2n^2}, which overflows 64-bit integers already at
 * moderate parameters.
 */
class CycInt {
  public:
    /// Zero in Z[zeta_p].
    explicit CycInt(unsigned p) : p_(p), c_(p - 1) {}

    static CycInt integer(unsigned p, const mpz_class& v) {
        CycInt r(p);
        r.c_[0] = v;
        return r;
    }

    /// zeta_p^k (k taken mod p).
    static CycInt root(unsigned p, unsigned k);

    /// Sum of counts[c] * zeta^c for c in [0, p); the combine step of
    /// histogram-based character sums.
    static CycInt from_counts(unsigned p, const std::vector<mpz_class>& counts);
    static CycInt from_counts(unsigned p, const std::vector<std::uint64_t>& counts);

    unsigned prime() const { return p_; }
    const std::vector<mpz_class>& coords() const { return c_; }

    CycInt& operator+=(const CycInt& o);
    CycInt& operator-=(const CycInt& o);
    CycInt operator+(const CycInt& o) const {
        CycInt r = *this;
        r += o;
        return r;
    }
    CycInt operator-(const CycInt& o) const {
        CycInt r = *this;
        r -= o;
        return r;
    }
    CycInt operator*(const CycInt& o) const;
    CycInt& operator*=(const CycInt& o) {
        *this = *this * o;
        return *this;
    }
    CycInt operator*(const mpz_class& s) const;
    CycInt operator-() const;

    /// Galois conjugation zeta -> zeta^{-1} (complex conjugation under the
    /// principal embedding).
    CycInt conj() const;

    /// v * conj(v); rational and nonnegative under the principal embedding.
    CycInt magnitude_squared() const { return *this * conj(); }

    bool operator==(const CycInt& o) const { return p_ == o.p_ && c_ == o.c_; }
    bool operator!=(const CycInt& o) const { return !(*this == o); }
    bool is_zero() const;

    /// True iff the reduced coordinate vector is supported on the rational
    /// coordinate only.
    bool is_rational() const;
    /// The rational value; throws NotRationalError otherwise.
    mpz_class as_integer() const;

    /// Principal embedding zeta_p -> exp(2*pi*i/p). Float values never feed
    /// an exact assertion; they serve trend windows and reports only.
    std::complex<double> to_complex() const;

    std::string to_string() const;

  private:
    unsigned p_;
    std::vector<mpz_class> c_;
};

/// Additive character of F_q: psi(x) = zeta_p^{Tr_{F_q/F_p}(x)}.
CycInt psi(const Field& f, std::uint16_t x);

}  // namespace matdist
