#include "matdist/field.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace matdist {

namespace {

bool is_odd_prime(unsigned p) {
    if (p < 3 || p % 2 == 0) return false;
    for (unsigned d = 3; d * d <= p; d += 2)
        if (p % d == 0) return false;
    return true;
}

// Dense polynomial helpers over F_p used only during field construction.
using PPoly = std::vector<unsigned>;  // constant term first, may carry trailing zeros

void trim(PPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

int deg(const PPoly& f) { return static_cast<int>(f.size()) - 1; }

PPoly mul_mod_p(const PPoly& a, const PPoly& b, unsigned p) {
    if (a.empty() || b.empty()) return {};
    PPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    trim(r);
    return r;
}

// Remainder of a by monic b.
PPoly rem_mod_p(PPoly a, const PPoly& b, unsigned p) {
    trim(a);
    const int db = deg(b);
    while (deg(a) >= db) {
        const unsigned lead = a.back();
        const int shift = deg(a) - db;
        for (int i = 0; i <= db; ++i) {
            unsigned sub = (lead * b[i]) % p;
            unsigned& c = a[i + shift];
            c = (c + p - sub) % p;
        }
        trim(a);
    }
    return a;
}

// Decodes poly index with the highest-degree coefficient most significant,
// fixing total degree d (monic leading coefficient appended by caller).
PPoly decode_lower_coeffs(std::uint64_t index, unsigned d, unsigned p) {
    PPoly c(d, 0);
    for (unsigned i = 0; i < d; ++i) {  // c[0] least significant
        c[i] = static_cast<unsigned>(index % p);
        index /= p;
    }
    return c;
}

bool divides(const PPoly& f, const PPoly& g, unsigned p) {
    return rem_mod_p(g, f, p).empty();
}

// Trial division by every monic polynomial of degree 1..deg(f)/2.
bool irreducible_mod_p(const PPoly& f, unsigned p) {
    const int d = deg(f);
    if (d <= 0) return false;
    if (d == 1) return true;
    if (f[0] == 0) return false;  // divisible by t
    for (int e = 1; 2 * e <= d; ++e) {
        std::uint64_t count = 1;
        for (int i = 0; i < e; ++i) count *= p;
        for (std::uint64_t idx = 0; idx < count; ++idx) {
            PPoly div = decode_lower_coeffs(idx, e, p);
            div.push_back(1);
            if (divides(div, f, p)) return false;
        }
    }
    return true;
}

PPoly default_modulus(unsigned p, unsigned g) {
    std::uint64_t count = 1;
    for (unsigned i = 0; i < g; ++i) count *= p;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
        PPoly f = decode_lower_coeffs(idx, g, p);
        f.push_back(1);
        if (irreducible_mod_p(f, p)) return f;
    }
    throw NoDefaultModulusError("no irreducible of degree " + std::to_string(g));
}

}  // namespace

FieldPtr Field::make(unsigned p, unsigned g, std::optional<std::vector<unsigned>> modulus) {
    if (!is_odd_prime(p)) throw NotOddPrimeError("p = " + std::to_string(p) + " is not an odd prime");
    if (g < 1) throw ConfigError("extension degree must be >= 1");

    std::uint64_t q = 1;
    for (unsigned i = 0; i < g; ++i) {
        q *= p;
        if (q > 4096) throw ConfigError("q = p^g too large for table-driven representation (max 4096)");
    }

    PPoly mod;
    if (modulus) {
        mod = *modulus;
        trim(mod);
        if (deg(mod) != static_cast<int>(g) || mod.back() != 1)
            throw ReducibleModulusError("modulus must be monic of degree g");
        for (unsigned c : mod)
            if (c >= p) throw ReducibleModulusError("modulus coefficients must lie in [0, p)");
        if (!irreducible_mod_p(mod, p))
            throw ReducibleModulusError("modulus is reducible over F_p");
    } else if (g == 1) {
        mod = {0, 1};  // F_p as F_p[t]/(t)
    } else {
        if (q > 49)
            throw NoDefaultModulusError("no default modulus for q = " + std::to_string(q) +
                                        " > 49; supply one explicitly");
        mod = default_modulus(p, g);
    }

    auto field = std::shared_ptr<Field>(new Field());
    field->p_ = p;
    field->g_ = g;
    field->q_ = static_cast<unsigned>(q);
    field->modulus_ = mod;

    const unsigned Q = field->q_;
    auto decode = [&](std::uint16_t a) {
        PPoly c(g, 0);
        for (unsigned i = 0; i < g; ++i) {
            c[i] = a % p;
            a = static_cast<std::uint16_t>(a / p);
        }
        trim(c);
        return c;
    };
    auto encode = [&](const PPoly& c) {
        unsigned v = 0, mult = 1;
        for (std::size_t i = 0; i < c.size(); ++i) {
            v += c[i] * mult;
            mult *= p;
        }
        return static_cast<std::uint16_t>(v);
    };

    field->add_.resize(static_cast<std::size_t>(Q) * Q);
    field->mul_.resize(static_cast<std::size_t>(Q) * Q);
    field->neg_.resize(Q);
    field->inv_.assign(Q, 0);
    field->trace_.resize(Q);

    for (unsigned a = 0; a < Q; ++a) {
        PPoly ca = decode(static_cast<std::uint16_t>(a));
        // negation digit-wise
        PPoly cn = ca;
        for (auto& c : cn) c = (p - c) % p;
        field->neg_[a] = encode(cn);
        for (unsigned b = 0; b < Q; ++b) {
            PPoly cb = decode(static_cast<std::uint16_t>(b));
            PPoly s(std::max(ca.size(), cb.size()), 0);
            for (std::size_t i = 0; i < s.size(); ++i) {
                unsigned x = (i < ca.size() ? ca[i] : 0) + (i < cb.size() ? cb[i] : 0);
                s[i] = x % p;
            }
            field->add_[static_cast<std::size_t>(a) * Q + b] = encode(s);
            PPoly m = rem_mod_p(mul_mod_p(ca, cb, p), mod, p);
            field->mul_[static_cast<std::size_t>(a) * Q + b] = encode(m);
        }
    }
    for (unsigned a = 1; a < Q; ++a) {
        for (unsigned b = 1; b < Q; ++b) {
            if (field->mul_[static_cast<std::size_t>(a) * Q + b] == field->one()) {
                field->inv_[a] = static_cast<std::uint16_t>(b);
                break;
            }
        }
    }
    // Absolute trace via repeated Frobenius: a + a^p + ... + a^{p^{g-1}}.
    for (unsigned a = 0; a < Q; ++a) {
        std::uint16_t acc = 0;
        std::uint16_t power = static_cast<std::uint16_t>(a);
        for (unsigned i = 0; i < g; ++i) {
            acc = field->add(acc, power);
            power = field->pow(power, p);
        }
        // The trace lands in the prime subfield, whose elements are the
        // indices 0..p-1.
        field->trace_[a] = static_cast<std::uint8_t>(acc);
    }
    return field;
}

std::uint16_t Field::inv(std::uint16_t a) const {
    if (a == 0) throw Error("division by zero in F_q");
    return inv_[a];
}

std::uint16_t Field::pow(std::uint16_t a, std::uint64_t e) const {
    std::uint16_t r = one();
    std::uint16_t base = a;
    while (e > 0) {
        if (e & 1) r = mul(r, base);
        base = mul(base, base);
        e >>= 1;
    }
    return r;
}

std::uint16_t Field::from_int(long long v) const {
    long long m = v % static_cast<long long>(p_);
    if (m < 0) m += p_;
    return static_cast<std::uint16_t>(m);
}

std::vector<unsigned> Field::coeffs(std::uint16_t a) const {
    std::vector<unsigned> c(g_, 0);
    for (unsigned i = 0; i < g_; ++i) {
        c[i] = a % p_;
        a = static_cast<std::uint16_t>(a / p_);
    }
    return c;
}

std::uint16_t Field::from_coeffs(const std::vector<unsigned>& c) const {
    unsigned v = 0, mult = 1;
    for (std::size_t i = 0; i < c.size() && i < g_; ++i) {
        v += (c[i] % p_) * mult;
        mult *= p_;
    }
    return static_cast<std::uint16_t>(v);
}

std::string Field::format_element(std::uint16_t a) const {
    if (g_ == 1 || a < p_) return std::to_string(a);
    auto c = coeffs(a);
    std::string out;
    for (unsigned i = 0; i < g_; ++i) {
        if (c[i] == 0) continue;
        if (!out.empty()) out += "+";
        if (i == 0) {
            out += std::to_string(c[i]);
        } else {
            if (c[i] != 1) out += std::to_string(c[i]) + "*";
            out += "t";
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out.empty() ? "0" : out;
}

std::uint16_t Field::parse_element(const std::string& text) const {
    // Grammar: term ('+' term)*, term = int | [int '*'] 't' ['^' int].
    // A leading '-' on a term is accepted and folded mod p.
    std::vector<unsigned> c(g_, 0);
    std::size_t i = 0;
    const std::string& s = text;
    auto skip_ws = [&] { while (i < s.size() && isspace(static_cast<unsigned char>(s[i]))) ++i; };
    bool first = true;
    while (true) {
        skip_ws();
        if (i >= s.size()) break;
        long long sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            if (first && s[i] == '+') ++i;
            else {
                sign = (s[i] == '-') ? -1 : 1;
                ++i;
            }
        } else if (!first) {
            throw ConfigError("bad element literal: '" + text + "'");
        }
        skip_ws();
        long long coef = 1;
        bool saw_num = false;
        if (i < s.size() && isdigit(static_cast<unsigned char>(s[i]))) {
            coef = 0;
            while (i < s.size() && isdigit(static_cast<unsigned char>(s[i])))
                coef = coef * 10 + (s[i++] - '0');
            saw_num = true;
        }
        skip_ws();
        unsigned power = 0;
        if (i < s.size() && (s[i] == '*' || s[i] == 't')) {
            if (s[i] == '*') {
                ++i;
                skip_ws();
            }
            if (i >= s.size() || s[i] != 't') throw ConfigError("bad element literal: '" + text + "'");
            ++i;
            power = 1;
            if (i < s.size() && s[i] == '^') {
                ++i;
                power = 0;
                while (i < s.size() && isdigit(static_cast<unsigned char>(s[i])))
                    power = power * 10 + (s[i++] - '0');
            }
        } else if (!saw_num) {
            throw ConfigError("bad element literal: '" + text + "'");
        }
        if (power >= g_) throw ConfigError("power t^" + std::to_string(power) + " out of range for this field");
        long long v = sign * coef % static_cast<long long>(p_);
        if (v < 0) v += p_;
        c[power] = (c[power] + static_cast<unsigned>(v)) % p_;
        first = false;
    }
    return from_coeffs(c);
}

FieldPtr Field::parse(const std::string& spec) {
    auto caret = spec.find('^');
    auto slash = spec.find('/');
    try {
        if (caret == std::string::npos) {
            if (slash != std::string::npos) throw ConfigError("modulus given without degree: '" + spec + "'");
            return make(static_cast<unsigned>(std::stoul(spec)));
        }
        unsigned p = static_cast<unsigned>(std::stoul(spec.substr(0, caret)));
        std::string rest = spec.substr(caret + 1);
        if (slash == std::string::npos) {
            return make(p, static_cast<unsigned>(std::stoul(rest)));
        }
        unsigned g = static_cast<unsigned>(std::stoul(spec.substr(caret + 1, slash - caret - 1)));
        std::vector<unsigned> mod;
        std::stringstream ss(spec.substr(slash + 1));
        std::string tok;
        while (std::getline(ss, tok, ','))
            mod.push_back(static_cast<unsigned>(std::stoul(tok)));
        return make(p, g, mod);
    } catch (const std::invalid_argument&) {
        throw ConfigError("unparsable field spec: '" + spec + "'");
    } catch (const std::out_of_range&) {
        throw ConfigError("unparsable field spec: '" + spec + "'");
    }
}

std::string Field::spec_string() const {
    if (g_ == 1) return std::to_string(p_);
    std::string s = std::to_string(p_) + "^" + std::to_string(g_) + "/";
    for (std::size_t i = 0; i < modulus_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(modulus_[i]);
    }
    return s;
}

}  // namespace matdist
