#include "matdist/spheres.hpp"

#include <algorithm>
#include <map>

#include "matdist/parallel.hpp"

namespace matdist {

namespace {

std::uint64_t pow_u64(std::uint64_t base, unsigned e) {
    std::uint64_t r = 1;
    for (unsigned i = 0; i < e; ++i) r *= base;
    return r;
}

mpz_class mpz_pow(unsigned base, unsigned long e) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), base, e);
    return r;
}

// Flattened entries of every matrix in M_n(F_q), by matrix index.
std::vector<std::uint8_t> all_entries(const Field& f, unsigned n, std::uint64_t count) {
    const unsigned nn = n * n;
    std::vector<std::uint8_t> out(count * nn);
    std::vector<std::uint16_t> x(nn, 0);
    for (std::uint64_t mi = 0;; ++mi) {
        for (unsigned k = 0; k < nn; ++k) out[mi * nn + k] = static_cast<std::uint8_t>(x[k]);
        if (mi + 1 == count) break;
        for (std::size_t d = nn; d-- > 0;) {
            if (++x[d] < f.q()) break;
            x[d] = 0;
        }
    }
    return out;
}

// Exponent histogram of psi(-S T) per class, for one T. hist has
// classes x p slots, zeroed by the caller.
void phase_histograms(const ClassifiedSpace& cs, const std::vector<std::uint8_t>& entries,
                      const FqMatrix& t, std::vector<std::uint64_t>& hist) {
    const Field& f = *cs.field;
    const unsigned n = cs.n;
    const unsigned nn = n * n;
    const unsigned p = f.p();
    const std::uint16_t* add = f.add_table();
    const std::uint16_t* mul = f.mul_table();
    const std::uint8_t* trp = f.trace_table();
    const std::uint16_t* negt = f.neg_table();
    const unsigned q = f.q();

    // t_cols[k] = T[j][i] flattened to pair with S[i][j]
    std::vector<std::uint16_t> tt(nn);
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j) tt[i * n + j] = t.at(j, i);

    const std::uint64_t count = cs.class_of.size();
    for (std::uint64_t s = 1; s < count; ++s) {  // S = 0 excluded
        const std::uint8_t* se = entries.data() + s * nn;
        std::uint16_t acc = 0;
        for (unsigned k = 0; k < nn; ++k) acc = add[static_cast<std::size_t>(acc) * q + mul[static_cast<std::size_t>(se[k]) * q + tt[k]]];
        const unsigned e = trp[negt[acc]];
        ++hist[static_cast<std::size_t>(cs.class_of[s]) * p + e];
    }
}

}  // namespace

ClassifiedSpace classify_space(FieldPtr field, unsigned n, GaussCache& cache) {
    ClassifiedSpace cs;
    cs.field = field;
    cs.n = n;
    MatrixSpace space(field, n, cache.budget());
    cs.class_of.resize(space.size());
    std::map<std::string, std::uint16_t> ids;
    for (std::uint64_t mi = 0; mi < space.size(); ++mi) {
        const FqMatrix a = space.at(mi);
        const std::string key = cycle_type(a, cache.sieve()).key();
        auto it = ids.find(key);
        if (it == ids.end()) {
            it = ids.emplace(key, static_cast<std::uint16_t>(cs.reps.size())).first;
            cs.reps.push_back(a);
            cs.g0.push_back(cache.value_b0(a));
        }
        cs.class_of[mi] = it->second;
    }
    return cs;
}

mpz_class sphere_count_formula(const FqMatrix& t, unsigned r, const ClassifiedSpace& cs) {
    const Field& f = *cs.field;
    const unsigned n = cs.n;
    const unsigned p = f.p();
    const std::vector<std::uint8_t> entries = all_entries(f, n, cs.class_of.size());

    std::vector<std::uint64_t> hist(cs.reps.size() * p, 0);
    phase_histograms(cs, entries, t, hist);

    CycInt total(p);
    for (std::size_t c = 0; c < cs.reps.size(); ++c) {
        std::vector<std::uint64_t> counts(hist.begin() + c * p, hist.begin() + (c + 1) * p);
        CycInt phase = CycInt::from_counts(p, counts);
        CycInt power = CycInt::integer(p, 1);
        for (unsigned i = 0; i < r; ++i) power *= cs.g0[c];
        total += phase * power;
    }
    // #sigma_T = q^{n^2(r-1)} + total / q^{n^2}
    if (!total.is_rational())
        throw NonIntegerResultError("sphere formula sum is irrational for T = " + t.str());
    const mpz_class qnn = mpz_pow(f.q(), static_cast<unsigned long>(n) * n);
    mpz_class quot, rem;
    mpz_tdiv_qr(quot.get_mpz_t(), rem.get_mpz_t(), total.as_integer().get_mpz_t(), qnn.get_mpz_t());
    if (rem != 0)
        throw NonIntegerResultError("sphere formula sum not divisible by q^{n^2} for T = " + t.str());
    return mpz_pow(f.q(), static_cast<unsigned long>(n) * n * (r - 1)) + quot;
}

std::vector<std::vector<mpz_class>> sphere_counts_formula_multi(const ClassifiedSpace& cs,
                                                                const std::vector<unsigned>& rs,
                                                                unsigned threads) {
    const Field& f = *cs.field;
    const unsigned n = cs.n;
    const unsigned p = f.p();
    const std::uint64_t count = cs.class_of.size();
    const std::vector<std::uint8_t> entries = all_entries(f, n, count);
    const mpz_class qnn = mpz_pow(f.q(), static_cast<unsigned long>(n) * n);

    // Per class and r: G(rep,0)^r.
    std::vector<std::vector<CycInt>> powers(rs.size());
    for (std::size_t k = 0; k < rs.size(); ++k) {
        powers[k].reserve(cs.reps.size());
        for (const CycInt& g : cs.g0) {
            CycInt acc = CycInt::integer(p, 1);
            for (unsigned i = 0; i < rs[k]; ++i) acc *= g;
            powers[k].push_back(std::move(acc));
        }
    }

    std::vector<std::vector<mpz_class>> out(rs.size(), std::vector<mpz_class>(count));
    parallel_chunks(0, count, threads, [&](unsigned, std::uint64_t lo, std::uint64_t hi) {
        std::vector<std::uint64_t> hist(cs.reps.size() * p);
        for (std::uint64_t ti = lo; ti < hi; ++ti) {
            const FqMatrix t = FqMatrix::from_index(f, n, ti);
            std::fill(hist.begin(), hist.end(), 0);
            phase_histograms(cs, entries, t, hist);
            std::vector<CycInt> phases;
            phases.reserve(cs.reps.size());
            for (std::size_t c = 0; c < cs.reps.size(); ++c) {
                std::vector<std::uint64_t> counts(hist.begin() + c * p, hist.begin() + (c + 1) * p);
                phases.push_back(CycInt::from_counts(p, counts));
            }
            for (std::size_t k = 0; k < rs.size(); ++k) {
                CycInt total(p);
                for (std::size_t c = 0; c < cs.reps.size(); ++c) total += phases[c] * powers[k][c];
                if (!total.is_rational())
                    throw NonIntegerResultError("sphere formula sum is irrational");
                mpz_class quot, rem;
                mpz_tdiv_qr(quot.get_mpz_t(), rem.get_mpz_t(), total.as_integer().get_mpz_t(),
                            qnn.get_mpz_t());
                if (rem != 0) throw NonIntegerResultError("sphere formula sum not divisible by q^{n^2}");
                out[k][ti] = mpz_pow(f.q(), static_cast<unsigned long>(n) * n * (rs[k] - 1)) + quot;
            }
        }
    });
    return out;
}

std::vector<std::uint64_t> sphere_counts_brute_all(FieldPtr field, unsigned n, unsigned r,
                                                   std::uint64_t budget) {
    const Field& f = *field;
    const unsigned nn = n * n;
    mpz_class space_size = mpz_pow(f.q(), static_cast<unsigned long>(nn) * r);
    check_budget(space_size, budget, "tuple space");
    const std::uint64_t block = pow_u64(f.q(), nn);

    // Matrix-index tables: square of each matrix, and sums of pairs.
    std::vector<std::uint32_t> sq(block);
    {
        MatrixSpace ms(field, n, budget);
        for (std::uint64_t mi = 0; mi < block; ++mi) {
            const FqMatrix x = ms.at(mi);
            sq[mi] = static_cast<std::uint32_t>((x * x).to_index());
        }
    }
    std::vector<std::uint64_t> hist(block, 0);
    if (r == 1) {
        for (std::uint64_t mi = 0; mi < block; ++mi) ++hist[sq[mi]];
        return hist;
    }
    if (block > 4096)
        throw BudgetExceededError("brute sphere pass with r >= 2 needs q^{n^2} <= 4096");
    std::vector<std::uint32_t> add(block * block);
    {
        const unsigned q = f.q();
        // entrywise addition on matrix indices via base-q digits
        for (std::uint64_t a = 0; a < block; ++a)
            for (std::uint64_t b = 0; b < block; ++b) {
                std::uint64_t va = a, vb = b, out = 0, mult = 1;
                for (unsigned k = 0; k < nn; ++k) {
                    const std::uint64_t da = va % q, db = vb % q;
                    out += static_cast<std::uint64_t>(f.add(static_cast<std::uint16_t>(da),
                                                            static_cast<std::uint16_t>(db))) *
                           mult;
                    va /= q;
                    vb /= q;
                    mult *= q;
                }
                add[a * block + b] = static_cast<std::uint32_t>(out);
            }
    }
    // Odometer over r matrix indices with prefix norms.
    std::vector<std::uint32_t> digit(r, 0), prefix(r, 0);
    prefix[0] = sq[0];
    for (unsigned i = 1; i < r; ++i) prefix[i] = add[static_cast<std::uint64_t>(prefix[i - 1]) * block + sq[0]];
    for (;;) {
        // innermost digit runs the whole block
        const std::uint32_t base = r >= 2 ? prefix[r - 2] : 0;
        for (std::uint64_t last = 0; last < block; ++last)
            ++hist[add[static_cast<std::uint64_t>(base) * block + sq[last]]];
        // advance digit r-2 ... 0
        int d = static_cast<int>(r) - 2;
        while (d >= 0 && ++digit[d] == block) {
            digit[d] = 0;
            --d;
        }
        if (d < 0) break;
        // recompute prefixes from level d on
        for (unsigned i = static_cast<unsigned>(d); i + 1 < r; ++i)
            prefix[i] = i == 0 ? sq[digit[0]]
                               : add[static_cast<std::uint64_t>(prefix[i - 1]) * block + sq[digit[i]]];
    }
    return hist;
}

mpz_class sphere_count_brute(FieldPtr field, unsigned n, unsigned r, const FqMatrix& t,
                             std::uint64_t budget) {
    const auto hist = sphere_counts_brute_all(field, n, r, budget);
    return mpz_class(static_cast<unsigned long>(hist[t.to_index()]));
}

namespace {

// prod_i G(S, -M_i) for every S, then per-T phase combination.
std::vector<CycInt> gauss_products(const FqTuple& m, const ClassifiedSpace& cs,
                                   std::uint64_t budget) {
    const Field& f = *cs.field;
    const unsigned n = cs.n;
    const std::uint64_t count = cs.class_of.size();
    std::vector<CycInt> prod(count, CycInt::integer(f.p(), 1));
    for (std::uint64_t si = 0; si < count; ++si) {
        const FqMatrix s = FqMatrix::from_index(f, n, si);
        CycInt acc = CycInt::integer(f.p(), 1);
        for (unsigned i = 0; i < m.r(); ++i) acc *= gauss_sum(s, -m[i], budget);
        prod[si] = std::move(acc);
    }
    return prod;
}

}  // namespace

ScaledCyc sphere_ft_formula(const FqMatrix& t, const FqTuple& m, const ClassifiedSpace& cs,
                            std::uint64_t budget) {
    if (m.is_zero()) throw ConfigError("sphere FT formula requires M != 0");
    const Field& f = *cs.field;
    const unsigned n = cs.n;
    const std::uint64_t count = cs.class_of.size();
    const std::vector<CycInt> prod = gauss_products(m, cs, budget);
    CycInt total(f.p());
    for (std::uint64_t si = 1; si < count; ++si) {
        const FqMatrix s = FqMatrix::from_index(f, n, si);
        const unsigned e = f.trace_p(f.neg((s * t).trace()));
        total += prod[si] * CycInt::root(f.p(), e);
    }
    return ScaledCyc{std::move(total), (m.r() + 1) * n * n};
}

std::vector<ScaledCyc> sphere_ft_formula_all_t(const FqTuple& m, const ClassifiedSpace& cs,
                                               std::uint64_t budget) {
    if (m.is_zero()) throw ConfigError("sphere FT formula requires M != 0");
    const Field& f = *cs.field;
    const unsigned n = cs.n;
    const unsigned p = f.p();
    const std::uint64_t count = cs.class_of.size();
    const std::vector<CycInt> prod = gauss_products(m, cs, budget);
    std::vector<ScaledCyc> out;
    out.reserve(count);
    for (std::uint64_t ti = 0; ti < count; ++ti) {
        const FqMatrix t = FqMatrix::from_index(f, n, ti);
        // bucket the Gauss products by phase exponent, then combine
        std::vector<CycInt> buckets(p, CycInt(p));
        for (std::uint64_t si = 1; si < count; ++si) {
            const FqMatrix s = FqMatrix::from_index(f, n, si);
            const unsigned e = f.trace_p(f.neg((s * t).trace()));
            buckets[e] += prod[si];
        }
        CycInt total(p);
        for (unsigned e = 0; e < p; ++e) total += buckets[e] * CycInt::root(p, e);
        out.push_back(ScaledCyc{std::move(total), (m.r() + 1) * n * n});
    }
    return out;
}

Spectrum dft_indicator(const TupleSet& e, std::uint64_t budget) {
    const Field& f = *e.field;
    const unsigned p = f.p();
    TupleSpace space(e.field, e.n, e.r, budget);
    Spectrum spec;
    spec.field = e.field;
    spec.n = e.n;
    spec.r = e.r;
    spec.qexp = e.r * e.n * e.n;
    spec.unscaled.reserve(space.size());

    std::vector<FqTuple> points;
    points.reserve(e.elems.size());
    for (std::uint64_t idx : e.elems) points.push_back(space.at(idx));

    for (std::uint64_t mi = 0; mi < space.size(); ++mi) {
        const FqTuple m = space.at(mi);
        std::vector<std::uint64_t> counts(p, 0);
        for (const FqTuple& a : points) {
            const unsigned ex = f.trace_p(m.dot(a).trace());
            ++counts[(p - ex % p) % p];  // conj(psi) flips the exponent sign
        }
        spec.unscaled.push_back(CycInt::from_counts(p, counts));
    }
    return spec;
}

bool plancherel_check(const TupleSet& e, std::uint64_t budget) {
    const Spectrum spec = dft_indicator(e, budget);
    const Field& f = *e.field;
    CycInt total(f.p());
    for (const CycInt& s : spec.unscaled) total += s.magnitude_squared();
    // sum |E^(M)|^2 = #E / q^{rn^2}  <=>  sum S_M conj(S_M) = #E * q^{rn^2}
    mpz_class expected = mpz_class(static_cast<unsigned long>(e.elems.size())) *
                         mpz_pow(f.q(), spec.qexp);
    return total.is_rational() && total.as_integer() == expected;
}

bool inversion_check(const TupleSet& e, std::uint64_t budget) {
    const Spectrum spec = dft_indicator(e, budget);
    const Field& f = *e.field;
    const unsigned p = f.p();
    TupleSpace space(e.field, e.n, e.r, budget);
    const mpz_class qrnn = mpz_pow(f.q(), spec.qexp);
    for (std::uint64_t ai = 0; ai < space.size(); ++ai) {
        const FqTuple a = space.at(ai);
        std::vector<CycInt> buckets(p, CycInt(p));
        for (std::uint64_t mi = 0; mi < space.size(); ++mi) {
            const FqTuple m = space.at(mi);
            buckets[f.trace_p(m.dot(a).trace())] += spec.unscaled[mi];
        }
        CycInt total(p);
        for (unsigned ex = 0; ex < p; ++ex) total += buckets[ex] * CycInt::root(p, ex);
        const bool member = std::binary_search(e.elems.begin(), e.elems.end(), ai);
        if (!total.is_rational()) return false;
        if (total.as_integer() != (member ? qrnn : mpz_class(0))) return false;
    }
    return true;
}

TupleSet sphere_members(FieldPtr field, unsigned n, unsigned r, const FqMatrix& t,
                        std::uint64_t budget) {
    TupleSpace space(field, n, r, budget);
    TupleSet out;
    out.field = field;
    out.n = n;
    out.r = r;
    const std::uint64_t target = t.to_index();
    for (std::uint64_t xi = 0; xi < space.size(); ++xi)
        if (space.at(xi).norm().to_index() == target) out.elems.push_back(xi);
    return out;
}

}  // namespace matdist
