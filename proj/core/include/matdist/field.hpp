#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "matdist/errors.hpp"

namespace matdist {

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/**
 * A finite field F_q with q = p^g elements, p an odd prime.
 *
 * Elements are represented by their index in [0, q): the element with
 * base-p digits (c0, c1, ..., c_{g-1}) is the residue class of
 * c0 + c1*t + ... + c_{g-1}*t^{g-1} modulo the field's modulus polynomial.
 * All arithmetic is table-driven, so exhaustive sweeps cost one lookup per
 * operation. Fields are immutable after construction and safe to share
 * across threads.
 *
 * When no modulus is supplied for an extension, the default is the first
 * monic irreducible of degree g in the canonical polynomial order
 * (coefficient tuples compared from the highest degree down), which is a
 * fixed, reproducible choice per (p, g). Defaults exist for q <= 49.
 */
class Field {
  public:
    /// Builds a field. `modulus` is the coefficient list of a monic
    /// irreducible polynomial over F_p, constant term first, length g+1.
    static FieldPtr make(unsigned p, unsigned g = 1,
                         std::optional<std::vector<unsigned>> modulus = std::nullopt);

    /// Parses "p", "p^g", or "p^g/c0,c1,...,1" (explicit modulus).
    static FieldPtr parse(const std::string& spec);
    std::string spec_string() const;

    unsigned p() const { return p_; }
    unsigned g() const { return g_; }
    unsigned q() const { return q_; }
    const std::vector<unsigned>& modulus() const { return modulus_; }

    bool same_spec(const Field& other) const {
        return p_ == other.p_ && g_ == other.g_ && modulus_ == other.modulus_;
    }

    // Arithmetic on element indices.
    std::uint16_t add(std::uint16_t a, std::uint16_t b) const { return add_[idx(a, b)]; }
    std::uint16_t sub(std::uint16_t a, std::uint16_t b) const { return add_[idx(a, neg_[b])]; }
    std::uint16_t mul(std::uint16_t a, std::uint16_t b) const { return mul_[idx(a, b)]; }
    std::uint16_t neg(std::uint16_t a) const { return neg_[a]; }
    std::uint16_t inv(std::uint16_t a) const;
    std::uint16_t div(std::uint16_t a, std::uint16_t b) const { return mul(a, inv(b)); }
    std::uint16_t pow(std::uint16_t a, std::uint64_t e) const;

    std::uint16_t zero() const { return 0; }
    std::uint16_t one() const { return 1 % q_; }

    /// Embeds an integer via the prime subfield (reduction mod p).
    std::uint16_t from_int(long long v) const;

    /// Absolute trace Tr_{F_q/F_p} as a residue in [0, p).
    unsigned trace_p(std::uint16_t a) const { return trace_[a]; }

    /// Base-p digits (c0, ..., c_{g-1}) of an element index.
    std::vector<unsigned> coeffs(std::uint16_t a) const;
    std::uint16_t from_coeffs(const std::vector<unsigned>& c) const;

    /// Element text format: plain integers for the prime subfield, otherwise
    /// "c0+c1*t" style tokens (e.g. "2+t", "1+2*t", "t^2").
    std::string format_element(std::uint16_t a) const;
    std::uint16_t parse_element(const std::string& text) const;

    // Raw table access for hot loops.
    const std::uint16_t* add_table() const { return add_.data(); }
    const std::uint16_t* mul_table() const { return mul_.data(); }
    const std::uint16_t* neg_table() const { return neg_.data(); }
    const std::uint8_t* trace_table() const { return trace_.data(); }

  private:
    Field() = default;
    std::size_t idx(std::uint16_t a, std::uint16_t b) const {
        return static_cast<std::size_t>(a) * q_ + b;
    }

    unsigned p_ = 0, g_ = 0, q_ = 0;
    std::vector<unsigned> modulus_;  // constant term first, monic
    std::vector<std::uint16_t> add_, mul_, neg_, inv_;
    std::vector<std::uint8_t> trace_;
};

/// A field element bound to its field; convenience value type for code that
/// is not performance critical.
class FqElem {
  public:
    FqElem() : f_(nullptr), v_(0) {}
    FqElem(const Field& f, std::uint16_t v) : f_(&f), v_(v) {}

    std::uint16_t index() const { return v_; }
    const Field& field() const { return *f_; }

    FqElem operator+(const FqElem& o) const { return bin(o, &Field::add); }
    FqElem operator-(const FqElem& o) const { return bin(o, &Field::sub); }
    FqElem operator*(const FqElem& o) const { return bin(o, &Field::mul); }
    FqElem operator-() const { return FqElem(*f_, f_->neg(v_)); }
    FqElem inverse() const { return FqElem(*f_, f_->inv(v_)); }

    bool operator==(const FqElem& o) const { return v_ == o.v_ && f_->same_spec(*o.f_); }
    bool is_zero() const { return v_ == 0; }

    unsigned trace_p() const { return f_->trace_p(v_); }
    std::string str() const { return f_->format_element(v_); }

  private:
    using BinOp = std::uint16_t (Field::*)(std::uint16_t, std::uint16_t) const;
    FqElem bin(const FqElem& o, BinOp op) const {
        if (!f_->same_spec(*o.f_)) throw FieldMismatchError("elements from different fields");
        return FqElem(*f_, (f_->*op)(v_, o.v_));
    }

    const Field* f_;
    std::uint16_t v_;
};

}  // namespace matdist
