#include "matdist/cyclotomic.hpp"

#include <cmath>

namespace matdist {

CycInt CycInt::root(unsigned p, unsigned k) {
    k %= p;
    CycInt r(p);
    if (k < p - 1) {
        r.c_[k] = 1;
    } else {
        for (auto& c : r.c_) c = -1;  // zeta^{p-1}
    }
    return r;
}

CycInt CycInt::from_counts(unsigned p, const std::vector<mpz_class>& counts) {
    CycInt r(p);
    const mpz_class& top = counts[p - 1];
    for (unsigned i = 0; i + 1 < p; ++i) r.c_[i] = counts[i] - top;
    return r;
}

CycInt CycInt::from_counts(unsigned p, const std::vector<std::uint64_t>& counts) {
    std::vector<mpz_class> z(p);
    for (unsigned i = 0; i < p; ++i) z[i] = mpz_class(static_cast<unsigned long>(counts[i]));
    return from_counts(p, z);
}

CycInt& CycInt::operator+=(const CycInt& o) {
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
}

CycInt& CycInt::operator-=(const CycInt& o) {
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
}

CycInt CycInt::operator*(const CycInt& o) const {
    // Convolve exponents in [0, 2p-4], then fold zeta^e for e >= p-1:
    // zeta^{p-1} = -(1 + ... + zeta^{p-2}), zeta^e = zeta^{e-p} for e >= p.
    const unsigned m = p_ - 1;
    std::vector<mpz_class> conv(2 * m - 1);
    for (unsigned i = 0; i < m; ++i) {
        if (c_[i] == 0) continue;
        for (unsigned j = 0; j < m; ++j) {
            if (o.c_[j] == 0) continue;
            conv[i + j] += c_[i] * o.c_[j];
        }
    }
    CycInt r(p_);
    for (unsigned e = 0; e < m; ++e) r.c_[e] = conv[e];
    for (unsigned e = m; e < 2 * m - 1; ++e) {
        if (conv[e] == 0) continue;
        if (e == m) {  // e == p-1
            for (unsigned i = 0; i < m; ++i) r.c_[i] -= conv[e];
        } else {  // e >= p
            r.c_[e - p_] += conv[e];
        }
    }
    return r;
}

CycInt CycInt::operator*(const mpz_class& s) const {
    CycInt r = *this;
    for (auto& c : r.c_) c *= s;
    return r;
}

CycInt CycInt::operator-() const {
    CycInt r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

CycInt CycInt::conj() const {
    // zeta^i -> zeta^{p-i}; the image exponent p-1 (from i = 1) reduces.
    CycInt r(p_);
    r.c_[0] = c_[0];
    for (unsigned i = 1; i < p_ - 1; ++i) {
        const unsigned e = p_ - i;
        if (e == p_ - 1) {
            for (unsigned j = 0; j < p_ - 1; ++j) r.c_[j] -= c_[i];
        } else {
            r.c_[e] += c_[i];
        }
    }
    return r;
}

bool CycInt::is_zero() const {
    for (const auto& c : c_)
        if (c != 0) return false;
    return true;
}

bool CycInt::is_rational() const {
    for (std::size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

mpz_class CycInt::as_integer() const {
    if (!is_rational()) throw NotRationalError("cyclotomic value is irrational: " + to_string());
    return c_[0];
}

std::complex<double> CycInt::to_complex() const {
    std::complex<double> acc(0.0, 0.0);
    const double twopi = 2.0 * 3.14159265358979323846;
    for (unsigned i = 0; i < p_ - 1; ++i) {
        if (c_[i] == 0) continue;
        const double angle = twopi * i / p_;
        acc += c_[i].get_d() * std::complex<double>(std::cos(angle), std::sin(angle));
    }
    return acc;
}

std::string CycInt::to_string() const {
    std::string out;
    for (unsigned i = 0; i < p_ - 1; ++i) {
        if (c_[i] == 0) continue;
        std::string term = c_[i].get_str();
        if (i > 0) {
            if (term == "1") term.clear();
            else if (term == "-1") term = "-";
            term += "z";
            if (i > 1) term += "^" + std::to_string(i);
        }
        if (!out.empty() && term[0] != '-') out += "+";
        out += term;
    }
    return out.empty() ? "0" : out;
}

CycInt psi(const Field& f, std::uint16_t x) {
    return CycInt::root(f.p(), f.trace_p(x));
}

}  // namespace matdist
