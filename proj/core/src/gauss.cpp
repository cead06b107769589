#include "matdist/gauss.hpp"

#include <cmath>

#include "matdist/quadform.hpp"

namespace matdist {

CycInt gauss_sum(const FqMatrix& a, const FqMatrix& b, std::uint64_t budget) {
    const Field& f = a.field();
    if (a.n() != b.n() || !f.same_spec(b.field()))
        throw FieldMismatchError("G(A,B) needs A, B of the same shape and field");
    const unsigned n = a.n();
    mpz_class sz;
    mpz_ui_pow_ui(sz.get_mpz_t(), f.q(), static_cast<unsigned long>(n) * n);
    check_budget(sz, budget, "Gauss sum domain");
    const std::uint64_t total = sz.get_ui();

    const unsigned p = f.p();
    std::vector<std::uint64_t> counts(p, 0);

    // X runs through the space by odometer on its raw entries.
    std::vector<std::uint16_t> x(static_cast<std::size_t>(n) * n, 0);
    std::vector<std::uint16_t> xsq(x.size());
    for (std::uint64_t it = 0;; ++it) {
        // xsq = X^2
        for (unsigned i = 0; i < n; ++i)
            for (unsigned j = 0; j < n; ++j) {
                std::uint16_t acc = 0;
                for (unsigned k = 0; k < n; ++k)
                    acc = f.add(acc, f.mul(x[i * n + k], x[k * n + j]));
                xsq[i * n + j] = acc;
            }
        // Tr(A * X^2 + B * X) = sum_{i,j} A[i][j] * xsq[j][i] + B[i][j] * x[j][i]
        std::uint16_t tr = 0;
        for (unsigned i = 0; i < n; ++i)
            for (unsigned j = 0; j < n; ++j) {
                tr = f.add(tr, f.mul(a.at(i, j), xsq[j * n + i]));
                tr = f.add(tr, f.mul(b.at(i, j), x[j * n + i]));
            }
        ++counts[f.trace_p(tr)];

        if (it + 1 == total) break;
        for (std::size_t d = x.size(); d-- > 0;) {
            if (++x[d] < f.q()) break;
            x[d] = 0;
        }
    }
    return CycInt::from_counts(p, counts);
}

GaussCache::GaussCache(FieldPtr field, unsigned n, std::uint64_t budget)
    : field_(std::move(field)), n_(n), budget_(budget), sieve_(field_, budget) {}

const CycInt& GaussCache::value_b0(const FqMatrix& a) {
    const std::string key = cycle_type(a, sieve_).key();
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    CycInt value = gauss_sum(a, FqMatrix(*field_, n_), budget_);
    return cache_.emplace(key, std::move(value)).first->second;
}

void GaussCache::precompute_classes() {
    for (const auto& [ct, rep] : all_class_reps(field_, n_, sieve_)) {
        const std::string key = ct.key();
        if (cache_.count(key)) continue;
        cache_.emplace(key, gauss_sum(rep, FqMatrix(*field_, n_), budget_));
    }
}

MagnitudeReport verify_magnitude(const FqMatrix& a, const std::optional<FqMatrix>& b,
                                 GaussCache* cache) {
    const Field& f = a.field();
    const unsigned n = a.n();
    MagnitudeReport report;
    report.radical_dim = gram_matrix(a).radical_dim;
    mpz_ui_pow_ui(report.expected.get_mpz_t(), f.q(),
                  static_cast<unsigned long>(n) * n + report.radical_dim);

    const CycInt g0 = cache ? cache->value_b0(a) : gauss_sum(a, FqMatrix(f, n));
    const CycInt mag = g0.magnitude_squared();
    if (!mag.is_rational() || mag.as_integer() != report.expected)
        throw MagnitudeMismatchError("G(A,0) magnitude law failed for A = " + a.str() +
                                     ": |G|^2 = " + mag.to_string() + ", expected " +
                                     report.expected.get_str());
    report.magnitude_squared_b0 = mag.as_integer();

    if (b && !b->is_zero()) {
        const CycInt gb = gauss_sum(a, *b);
        CycInt magb = gb.magnitude_squared();
        const double ratio = magb.to_complex().real() / report.expected.get_d();
        report.ratio_b = ratio;
        report.magnitude_squared_b = std::move(magb);
        if (ratio > 1.0 + 1e-9)
            throw MagnitudeMismatchError("|G(A,B)|^2 exceeds q^{n^2+rho} for A = " + a.str() +
                                         ", B = " + b->str());
    }
    return report;
}

}  // namespace matdist
