#include "matdist/distance.hpp"

#include <algorithm>
#include <cmath>

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

struct Bitmap {
    explicit Bitmap(std::uint64_t bits) : words((bits + 63) / 64, 0) {}
    bool get(std::uint64_t i) const { return (words[i >> 6] >> (i & 63)) & 1; }
    void set(std::uint64_t i) { words[i >> 6] |= (1ull << (i & 63)); }
    std::vector<std::uint64_t> words;
};

/// Norm of a tuple index via matrix-index tables: block = q^{n^2}, sq maps a
/// matrix index to the index of its square, add adds two matrix indices
/// entrywise. Requires block <= 4096 (64 MB table ceiling).
struct NormIndexer {
    std::uint64_t block = 0;
    unsigned r = 0;
    std::vector<std::uint32_t> sq;
    std::vector<std::uint32_t> add;

    NormIndexer(const Field& f, unsigned n, unsigned r_in) : r(r_in) {
        const unsigned nn = n * n;
        block = pow_u64(f.q(), nn);
        if (block > 4096) throw BudgetExceededError("norm indexer needs q^{n^2} <= 4096");
        sq.resize(block);
        for (std::uint64_t mi = 0; mi < block; ++mi) {
            const FqMatrix x = FqMatrix::from_index(f, n, mi);
            sq[mi] = static_cast<std::uint32_t>((x * x).to_index());
        }
        add.resize(block * block);
        const unsigned q = f.q();
        for (std::uint64_t a = 0; a < block; ++a)
            for (std::uint64_t b = 0; b < block; ++b) {
                std::uint64_t va = a, vb = b, out = 0, mult = 1;
                for (unsigned k = 0; k < nn; ++k) {
                    out += static_cast<std::uint64_t>(
                               f.add(static_cast<std::uint16_t>(va % q),
                                     static_cast<std::uint16_t>(vb % q))) *
                           mult;
                    va /= q;
                    vb /= q;
                    mult *= q;
                }
                add[a * block + b] = static_cast<std::uint32_t>(out);
            }
    }

    std::uint32_t norm(std::uint64_t tuple_index) const {
        std::uint32_t acc = 0;
        for (unsigned i = 0; i < r; ++i) {
            const std::uint64_t mi = tuple_index % block;
            tuple_index /= block;
            acc = add[static_cast<std::uint64_t>(acc) * block + sq[mi]];
        }
        return acc;
    }
};

/**
 * In-place unnormalized DFT over the additive group (Z_p)^K with exact
 * Z[zeta_p] coordinates: data holds (p-1) int64 coordinates per point,
 * point-major. Intermediate values stay below #E * p^K in absolute value,
 * far inside the int64 range for every supported configuration.
 */
void group_dft(std::vector<std::int64_t>& data, unsigned p, unsigned k, bool inverse,
               unsigned threads) {
    const std::uint64_t n = pow_u64(p, k);
    const unsigned m = p - 1;
    for (unsigned dim = 0; dim < k; ++dim) {
        const std::uint64_t stride = pow_u64(p, dim);
        const std::uint64_t block = stride * p;
        const std::uint64_t blocks = n / block;
        parallel_chunks(0, blocks, threads, [&](unsigned, std::uint64_t lo, std::uint64_t hi) {
            std::vector<std::int64_t> acc(static_cast<std::size_t>(p) * p);
            std::vector<const std::int64_t*> in(p);
            for (std::uint64_t blk = lo; blk < hi; ++blk) {
                const std::uint64_t base = blk * block;
                for (std::uint64_t off = 0; off < stride; ++off) {
                    for (unsigned i = 0; i < p; ++i)
                        in[i] = data.data() + (base + off + i * stride) * m;
                    std::fill(acc.begin(), acc.end(), 0);
                    // acc[j][e] over exponents e in [0,p): sum_i x_i zeta^{ij}
                    for (unsigned i = 0; i < p; ++i) {
                        for (unsigned c = 0; c < m; ++c) {
                            const std::int64_t v = in[i][c];
                            if (v == 0) continue;
                            for (unsigned j = 0; j < p; ++j) {
                                const unsigned rot = inverse ? (p - i * j % p) % p : i * j % p;
                                acc[static_cast<std::size_t>(j) * p + (c + rot) % p] += v;
                            }
                        }
                    }
                    for (unsigned j = 0; j < p; ++j) {
                        std::int64_t* out = data.data() + (base + off + j * stride) * m;
                        const std::int64_t top = acc[static_cast<std::size_t>(j) * p + p - 1];
                        for (unsigned c = 0; c < m; ++c)
                            out[c] = acc[static_cast<std::size_t>(j) * p + c] - top;
                    }
                }
            }
        });
    }
}

}  // namespace

PointSet random_point_set(FieldPtr field, unsigned n, unsigned r, std::uint64_t size,
                          SplitMix64& rng, std::uint64_t budget) {
    TupleSpace space(field, n, r, budget);
    if (size > space.size()) throw ConfigError("requested set size exceeds the space");
    PointSet out;
    out.field = field;
    out.n = n;
    out.r = r;
    Bitmap bits(space.size());
    // Floyd's sampling: j from N-size to N-1, insert t ~ U[0, j] or j itself.
    for (std::uint64_t j = space.size() - size; j < space.size(); ++j) {
        const std::uint64_t t = rng.bounded(j + 1);
        if (bits.get(t)) bits.set(j);
        else bits.set(t);
    }
    out.elems.reserve(size);
    for (std::uint64_t w = 0; w < bits.words.size(); ++w) {
        std::uint64_t word = bits.words[w];
        while (word) {
            const unsigned b = static_cast<unsigned>(__builtin_ctzll(word));
            out.elems.push_back(w * 64 + b);
            word &= word - 1;
        }
    }
    return out;
}

std::vector<std::uint64_t> distance_set(const PointSet& e) {
    const Field& f = *e.field;
    const std::uint64_t radii = pow_u64(f.q(), e.n * e.n);
    std::vector<bool> seen(radii, false);
    std::uint64_t found = 0;
    std::vector<FqTuple> pts;
    pts.reserve(e.elems.size());
    for (std::uint64_t idx : e.elems) pts.push_back(FqTuple::from_index(f, e.n, e.r, idx));
    for (std::size_t i = 0; i < pts.size() && found < radii; ++i)
        for (std::size_t j = 0; j < pts.size(); ++j) {
            const std::uint64_t t = (pts[i] - pts[j]).norm().to_index();
            if (!seen[t]) {
                seen[t] = true;
                if (++found == radii) break;
            }
        }
    std::vector<std::uint64_t> out;
    for (std::uint64_t t = 0; t < radii; ++t)
        if (seen[t]) out.push_back(t);
    return out;
}

std::vector<std::pair<std::string, double>> threshold_reference_exponents(unsigned n, unsigned r) {
    std::vector<std::pair<std::string, double>> out;
    if (n == 1 && r >= 2) out.emplace_back("(r+1)/2", (r + 1) / 2.0);
    if (n == 2 && r >= 4) out.emplace_back("3r+3", 3.0 * r + 3.0);
    if (n == 3 && r >= 3) out.emplace_back("7r+4", 7.0 * r + 4.0);
    if (n >= 3 && r >= 3)
        out.emplace_back("rn^2-(r-2)(n-1)",
                         static_cast<double>(r) * n * n - static_cast<double>(r - 2) * (n - 1));
    return out;
}

IncidenceReport incidence(const PointSet& e, IncidenceMode mode, std::uint64_t budget) {
    const Field& f = *e.field;
    const unsigned n = e.n, r = e.r;
    const unsigned p = f.p();
    if (e.elems.empty()) throw ConfigError("incidence needs a nonempty point set");
    const std::uint64_t radii = pow_u64(f.q(), n * n);
    const mpz_class esq = mpz_class(static_cast<unsigned long>(e.elems.size())) *
                          mpz_class(static_cast<unsigned long>(e.elems.size()));

    IncidenceReport report;
    report.n = n;
    report.r = r;
    report.q = f.q();
    report.set_size = e.elems.size();
    report.reference_exponents = threshold_reference_exponents(n, r);
    report.rows.resize(radii);
    for (std::uint64_t t = 0; t < radii; ++t) report.rows[t].t_index = t;

    const bool direct = mode != IncidenceMode::Fourier;
    const bool fourier = mode != IncidenceMode::Direct;

    if (direct) {
        std::vector<std::uint64_t> counts(radii, 0);
        std::vector<FqTuple> pts;
        pts.reserve(e.elems.size());
        for (std::uint64_t idx : e.elems) pts.push_back(FqTuple::from_index(f, n, r, idx));
        for (const auto& x : pts)
            for (const auto& y : pts) ++counts[(x - y).norm().to_index()];
        for (std::uint64_t t = 0; t < radii; ++t) {
            report.rows[t].nu_direct = mpq_class(mpz_class(static_cast<unsigned long>(counts[t])), esq);
            report.rows[t].nu_direct.canonicalize();
        }
        report.distance_count = static_cast<std::uint64_t>(
            std::count_if(counts.begin(), counts.end(), [](std::uint64_t c) { return c > 0; }));
    }

    if (fourier) {
        GaussCache cache(e.field, n, budget);
        const ClassifiedSpace cs = classify_space(e.field, n, cache);
        const auto sphere_counts = sphere_counts_formula_multi(cs, {r}, 1)[0];
        const Spectrum spec = dft_indicator(e, budget);
        const mpz_class qrnn = mpz_pow(f.q(), static_cast<unsigned long>(r) * n * n);
        const mpz_class qr1nn = mpz_pow(f.q(), static_cast<unsigned long>(r + 1) * n * n);

        // |S_M|^2 once per M
        TupleSpace mspace(e.field, n, r, budget);
        std::vector<CycInt> s_sq;
        s_sq.reserve(mspace.size());
        for (const CycInt& s : spec.unscaled) s_sq.push_back(s.magnitude_squared());

        // sigma_T^ numerators for all T, per M
        std::vector<CycInt> w_t(radii, CycInt(p));
        for (std::uint64_t mi = 1; mi < mspace.size(); ++mi) {
            const FqTuple m = mspace.at(mi);
            const auto fts = sphere_ft_formula_all_t(m, cs, budget);
            for (std::uint64_t t = 0; t < radii; ++t) w_t[t] += s_sq[mi] * fts[t].num;
        }
        for (std::uint64_t t = 0; t < radii; ++t) {
            mpq_class sphere_term(sphere_counts[t], qrnn);
            sphere_term.canonicalize();
            if (!w_t[t].is_rational())
                throw NonIntegerResultError("incidence spectral sum is irrational");
            mpq_class err(w_t[t].as_integer(), esq * qr1nn);
            err.canonicalize();
            report.rows[t].sphere_term = sphere_term;
            report.rows[t].error_term = err;
            report.rows[t].nu_fourier = sphere_term + err;
        }
        if (!direct) {
            report.distance_count = static_cast<std::uint64_t>(std::count_if(
                report.rows.begin(), report.rows.end(),
                [](const IncidenceRow& row) { return row.nu_fourier > 0; }));
        }
    }

    if (direct && fourier) {
        for (std::uint64_t t = 0; t < radii; ++t)
            if (report.rows[t].nu_direct != report.rows[t].nu_fourier) {
                report.modes_agree = false;
                break;
            }
    }
    return report;
}

std::vector<mpz_class> pair_distance_counts_transform(const PointSet& e, unsigned threads) {
    const Field& f = *e.field;
    const unsigned p = f.p();
    const unsigned k = f.g() * e.r * e.n * e.n;
    const std::uint64_t n = pow_u64(p, k);
    const unsigned m = p - 1;

    // memory guard: (p-1) int64 coordinates per point
    if (n > (3ull << 30) / (8 * m))
        throw BudgetExceededError("transform array would exceed the memory ceiling");

    std::vector<std::int64_t> data(n * m, 0);
    for (std::uint64_t idx : e.elems) data[idx * m] = 1;

    group_dft(data, p, k, false, threads);

    // pointwise v * conj(v), in exponent space then reduced
    parallel_chunks(0, n, threads, [&](unsigned, std::uint64_t lo, std::uint64_t hi) {
        std::vector<std::int64_t> acc(p);
        for (std::uint64_t i = lo; i < hi; ++i) {
            std::int64_t* v = data.data() + i * m;
            std::fill(acc.begin(), acc.end(), 0);
            for (unsigned c1 = 0; c1 < m; ++c1) {
                if (v[c1] == 0) continue;
                for (unsigned c2 = 0; c2 < m; ++c2)
                    acc[(c1 + p - c2) % p] += v[c1] * v[c2];
            }
            const std::int64_t top = acc[p - 1];
            for (unsigned c = 0; c < m; ++c) v[c] = acc[c] - top;
        }
    });

    group_dft(data, p, k, true, threads);

    NormIndexer indexer(f, e.n, e.r);
    const std::uint64_t radii = indexer.block;
    const unsigned used_threads = threads ? threads : 1;
    std::vector<std::vector<__int128>> sums(used_threads, std::vector<__int128>(radii, 0));
    std::vector<bool> rational_ok(used_threads, true);
    parallel_chunks(0, n, used_threads, [&](unsigned chunk, std::uint64_t lo, std::uint64_t hi) {
        for (std::uint64_t i = lo; i < hi; ++i) {
            const std::int64_t* v = data.data() + i * m;
            for (unsigned c = 1; c < m; ++c)
                if (v[c] != 0) rational_ok[chunk] = false;
            sums[chunk][indexer.norm(i)] += static_cast<__int128>(v[0]);
        }
    });
    for (unsigned c = 0; c < used_threads; ++c)
        if (!rational_ok[c])
            throw NonIntegerResultError("difference-multiset transform produced irrational values");

    std::vector<mpz_class> counts(radii, 0);
    for (std::uint64_t t = 0; t < radii; ++t) {
        __int128 total = 0;
        for (unsigned c = 0; c < used_threads; ++c) total += sums[c][t];
        // divide by the group order (exact); the quotient is a pair count
        // bounded by (#E)^2, far inside int64
        if (total % static_cast<__int128>(n) != 0)
            throw NonIntegerResultError("transform counts not divisible by the group order");
        counts[t] = mpz_class(static_cast<long>(total / static_cast<__int128>(n)));
    }
    return counts;
}

ThresholdReport threshold_experiment(FieldPtr field, unsigned n, unsigned r,
                                     const std::vector<std::uint64_t>& sizes, unsigned trials,
                                     std::uint64_t seed, std::uint64_t budget) {
    const Field& f = *field;
    TupleSpace space(field, n, r, budget);
    const std::uint64_t radii = pow_u64(f.q(), n * n);
    const unsigned threads = default_thread_count();

    ThresholdReport report;
    report.n = n;
    report.r = r;
    report.q = f.q();
    report.seed = seed;
    report.reference_exponents = threshold_reference_exponents(n, r);

    SplitMix64 master(seed);
    for (std::size_t si = 0; si < sizes.size(); ++si) {
        const std::uint64_t size = sizes[si];
        if (size == 0 || size > space.size())
            throw ConfigError("threshold size " + std::to_string(size) + " out of range");
        ThresholdRow row;
        row.size = size;
        row.trials = trials;
        row.exponent_logq = std::log(static_cast<double>(size)) / std::log(static_cast<double>(f.q()));
        for (unsigned t = 0; t < trials; ++t) {
            bool success = false;
            if (size == space.size()) {
                // whole space: Delta(E) is exactly the image of the norm map
                NormIndexer indexer(f, n, r);
                std::vector<bool> seen(radii, false);
                for (std::uint64_t i = 0; i < space.size(); ++i) seen[indexer.norm(i)] = true;
                success = std::find(seen.begin(), seen.end(), false) == seen.end();
            } else {
                SplitMix64 rng = master.split(si * 1000003ull + t);
                PointSet e = random_point_set(field, n, r, size, rng, budget);
                if (e.elems.size() <= 1024) {
                    success = distance_set(e).size() == radii;
                } else {
                    const auto counts = pair_distance_counts_transform(e, threads);
                    success = std::find(counts.begin(), counts.end(), mpz_class(0)) == counts.end();
                }
            }
            if (success) ++row.successes;
        }
        row.success_fraction = trials ? static_cast<double>(row.successes) / trials : 0.0;
        if (!report.rows.empty() && row.success_fraction < report.rows.back().success_fraction)
            ++report.monotonicity_violations;
        report.rows.push_back(row);
    }
    return report;
}

}  // namespace matdist
