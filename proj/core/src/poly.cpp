#include "matdist/poly.hpp"

#include <algorithm>

namespace matdist {

FqPoly::FqPoly(const Field& f, std::vector<std::uint16_t> coeffs) : f_(&f), c_(std::move(coeffs)) {
    trim();
}

FqPoly FqPoly::from_ints(const Field& f, const std::vector<long long>& coeffs) {
    std::vector<std::uint16_t> c;
    c.reserve(coeffs.size());
    for (long long v : coeffs) c.push_back(f.from_int(v));
    return FqPoly(f, std::move(c));
}

void FqPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

FqPoly FqPoly::operator+(const FqPoly& o) const {
    std::vector<std::uint16_t> r(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = f_->add(coeff(i), o.coeff(i));
    return FqPoly(*f_, std::move(r));
}

FqPoly FqPoly::operator-(const FqPoly& o) const {
    std::vector<std::uint16_t> r(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = f_->sub(coeff(i), o.coeff(i));
    return FqPoly(*f_, std::move(r));
}

FqPoly FqPoly::operator*(const FqPoly& o) const {
    if (is_zero() || o.is_zero()) return FqPoly(*f_);
    std::vector<std::uint16_t> r(c_.size() + o.c_.size() - 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j)
            r[i + j] = f_->add(r[i + j], f_->mul(c_[i], o.c_[j]));
    }
    return FqPoly(*f_, std::move(r));
}

bool FqPoly::operator==(const FqPoly& o) const { return c_ == o.c_ && f_->same_spec(*o.f_); }

std::pair<FqPoly, FqPoly> FqPoly::divmod(const FqPoly& divisor) const {
    if (divisor.is_zero()) throw Error("polynomial division by zero");
    FqPoly rem = *this;
    const int dd = divisor.degree();
    const std::uint16_t lead_inv = f_->inv(divisor.leading());
    std::vector<std::uint16_t> quot(rem.degree() >= dd ? rem.degree() - dd + 1 : 0, 0);
    while (rem.degree() >= dd) {
        const int shift = rem.degree() - dd;
        const std::uint16_t factor = f_->mul(rem.leading(), lead_inv);
        quot[shift] = factor;
        for (int i = 0; i <= dd; ++i)
            rem.c_[i + shift] = f_->sub(rem.c_[i + shift], f_->mul(factor, divisor.c_[i]));
        rem.trim();
    }
    return {FqPoly(*f_, std::move(quot)), rem};
}

FqPoly FqPoly::monic() const {
    if (is_zero() || is_monic()) return *this;
    const std::uint16_t s = f_->inv(leading());
    std::vector<std::uint16_t> r(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] = f_->mul(c_[i], s);
    return FqPoly(*f_, std::move(r));
}

FqPoly FqPoly::pow(unsigned e) const {
    FqPoly r = FqPoly::one(*f_);
    FqPoly base = *this;
    while (e > 0) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

std::uint16_t FqPoly::eval(std::uint16_t x) const {
    std::uint16_t acc = 0;
    for (std::size_t i = c_.size(); i-- > 0;) acc = f_->add(f_->mul(acc, x), c_[i]);
    return acc;
}

FqPoly FqPoly::compose_square() const {
    if (is_zero()) return *this;
    std::vector<std::uint16_t> r(2 * c_.size() - 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) r[2 * i] = c_[i];
    return FqPoly(*f_, std::move(r));
}

FqPoly FqPoly::reflect() const {
    std::vector<std::uint16_t> r = c_;
    for (std::size_t i = 0; i < r.size(); ++i)
        if (i % 2 == 1) r[i] = f_->neg(r[i]);
    FqPoly out(*f_, std::move(r));
    // f(-T) has leading coefficient (-1)^deg; normalize back to monic.
    if (degree() % 2 == 1) {
        for (auto& c : out.c_) c = f_->neg(c);
    }
    return out;
}

FqPoly FqPoly::decompose_square() const {
    std::vector<std::uint16_t> r((c_.size() + 1) / 2, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (i % 2 == 1 && c_[i] != 0) throw Error("polynomial has odd-degree terms");
        if (i % 2 == 0) r[i / 2] = c_[i];
    }
    return FqPoly(*f_, std::move(r));
}

std::uint64_t FqPoly::encoding() const {
    std::uint64_t v = 0;
    for (std::size_t i = c_.size(); i-- > 0;) v = v * f_->q() + c_[i];
    return v;
}

std::string FqPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t i = c_.size(); i-- > 0;) {
        if (c_[i] == 0) continue;
        std::string term;
        std::string cs = f_->format_element(c_[i]);
        const bool needs_parens = cs.find('+') != std::string::npos || cs.find('t') != std::string::npos;
        if (i == 0) {
            term = needs_parens ? "(" + cs + ")" : cs;
        } else {
            if (cs != "1") term += needs_parens ? "(" + cs + ")*" : cs + "*";
            term += var;
            if (i > 1) term += "^" + std::to_string(i);
        }
        if (!out.empty()) out += " + ";
        out += term;
    }
    return out;
}

bool poly_less(const FqPoly& a, const FqPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a.encoding() < b.encoding();
}

std::uint64_t monic_count(const Field& f, unsigned d, std::uint64_t budget) {
    std::uint64_t n = 1;
    for (unsigned i = 0; i < d; ++i) {
        if (n > budget / f.q())
            throw BudgetExceededError("monic polynomial space of degree " + std::to_string(d) +
                                      " exceeds the enumeration budget");
        n *= f.q();
    }
    return n;
}

FqPoly monic_poly_at(const Field& f, unsigned d, std::uint64_t index) {
    std::vector<std::uint16_t> c(d + 1, 0);
    for (unsigned i = 0; i < d; ++i) {
        c[i] = static_cast<std::uint16_t>(index % f.q());
        index /= f.q();
    }
    c[d] = f.one();
    return FqPoly(f, std::move(c));
}

const std::vector<FqPoly>& IrrSieve::irreducibles(unsigned d) {
    ensure(d);
    return by_degree_[d];
}

void IrrSieve::ensure(unsigned d) {
    // Irreducibles exist in every degree >= 1, so an empty slot means unbuilt.
    if (by_degree_.size() <= d) by_degree_.resize(d + 1);
    for (unsigned e = 1; e <= d; ++e) {
        if (!by_degree_[e].empty()) continue;
        const std::uint64_t count = monic_count(*field_, e, budget_);
        std::vector<FqPoly> found;
        for (std::uint64_t i = 0; i < count; ++i) {
            FqPoly f = monic_poly_at(*field_, e, i);
            bool reducible = false;
            for (unsigned le = 1; le * 2 <= e && !reducible; ++le)
                for (const FqPoly& g : by_degree_[le])
                    if (f.divisible_by(g)) {
                        reducible = true;
                        break;
                    }
            if (!reducible) found.push_back(std::move(f));
        }
        by_degree_[e] = std::move(found);
    }
}

bool IrrSieve::is_irreducible(const FqPoly& f) {
    if (f.degree() < 1) return false;
    ensure(static_cast<unsigned>(f.degree()));
    const auto& list = by_degree_[f.degree()];
    FqPoly m = f.monic();
    return std::binary_search(list.begin(), list.end(), m, poly_less);
}

std::vector<std::pair<FqPoly, unsigned>> IrrSieve::factor(const FqPoly& f) {
    if (!f.is_monic()) throw NonMonicError("factorization requires a monic polynomial");
    if (f.degree() < 1) throw NonMonicError("factorization requires degree >= 1");
    std::vector<std::pair<FqPoly, unsigned>> out;
    FqPoly rest = f;
    for (unsigned d = 1; 2 * static_cast<int>(d) <= rest.degree(); ++d) {
        ensure(d);
        for (const FqPoly& pi : by_degree_[d]) {
            if (2 * static_cast<int>(d) > rest.degree()) break;
            unsigned mult = 0;
            while (rest.divisible_by(pi)) {
                rest = rest.divmod(pi).first;
                ++mult;
            }
            if (mult > 0) out.emplace_back(pi, mult);
        }
    }
    if (rest.degree() >= 1) out.emplace_back(rest, 1);
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return poly_less(a.first, b.first); });
    return out;
}

}  // namespace matdist
