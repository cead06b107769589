#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "matdist/distance.hpp"
#include "matdist/spheres.hpp"

using namespace matdist;

TEST_CASE("brute counts at the reference points") {
    FieldPtr f = Field::make(3);
    // the 2x2 nilpotents form the radius-0 sphere at r = 1
    CHECK(sphere_count_brute(f, 2, 1, FqMatrix(*f, 2)) == 9);
    // n = 1, T = 1: the two square roots of 1
    CHECK(sphere_count_brute(f, 1, 1, FqMatrix::identity(*f, 1)) == 2);
    // spheres partition the space
    const auto hist = sphere_counts_brute_all(f, 2, 2);
    std::uint64_t total = 0;
    for (auto c : hist) total += c;
    CHECK(total == 6561);
}

TEST_CASE("formula equals brute force at (2,3,1)") {
    FieldPtr f = Field::make(3);
    GaussCache cache(f, 2);
    const ClassifiedSpace cs = classify_space(f, 2, cache);
    const auto brute = sphere_counts_brute_all(f, 2, 1);
    const auto formula = sphere_counts_formula_multi(cs, {1}, 1)[0];
    for (std::size_t t = 0; t < brute.size(); ++t)
        CHECK(formula[t] == mpz_class(static_cast<unsigned long>(brute[t])));
}

TEST_CASE("single-radius formula agrees with the sweep") {
    FieldPtr f = Field::make(3);
    GaussCache cache(f, 2);
    const ClassifiedSpace cs = classify_space(f, 2, cache);
    const auto all = sphere_counts_formula_multi(cs, {2}, 1)[0];
    MatrixSpace space(f, 2);
    for (std::uint64_t t = 0; t < space.size(); t += 17)
        CHECK(sphere_count_formula(space.at(t), 2, cs) == all[t]);
}

TEST_CASE("sphere FT formula equals the direct DFT at a spot check") {
    FieldPtr f = Field::make(3);
    GaussCache cache(f, 2);
    const ClassifiedSpace cs = classify_space(f, 2, cache);
    const FqMatrix t = FqMatrix::identity(*f, 2);
    const TupleSet sphere = sphere_members(f, 2, 1, t);
    const Spectrum spec = dft_indicator(sphere);
    TupleSpace mspace(f, 2, 1);
    for (std::uint64_t mi : {1ull, 5ull, 40ull, 80ull}) {
        const ScaledCyc ft = sphere_ft_formula(t, mspace.at(mi), cs);
        // sigma^(M) = unscaled / q^{rn^2} = ft.num / q^{(r+1)n^2}
        CHECK(spec.unscaled[mi] * mpz_class(81) == ft.num);
    }
}

TEST_CASE("FT formula rejects M = 0") {
    FieldPtr f = Field::make(3);
    GaussCache cache(f, 2);
    const ClassifiedSpace cs = classify_space(f, 2, cache);
    CHECK_THROWS_AS(sphere_ft_formula(FqMatrix(*f, 2), FqTuple(*f, 2, 1), cs), ConfigError);
}

TEST_CASE("spectrum of degenerate sets") {
    FieldPtr f = Field::make(3);
    // whole space: E^ = delta_0
    TupleSet whole{f, 1, 1, {0, 1, 2}};
    const Spectrum sw = dft_indicator(whole);
    CHECK(sw.unscaled[0] == CycInt::integer(3, 3));
    CHECK(sw.unscaled[1].is_zero());
    CHECK(sw.unscaled[2].is_zero());
    // single point at the origin: E^ constant
    TupleSet origin{f, 1, 1, {0}};
    const Spectrum so = dft_indicator(origin);
    for (const auto& v : so.unscaled) CHECK(v == CycInt::integer(3, 1));
}

TEST_CASE("Plancherel and inversion on a random subset") {
    FieldPtr f = Field::make(3);
    SplitMix64 rng(99);
    const PointSet e = random_point_set(f, 2, 1, 17, rng);
    CHECK(e.elems.size() == 17);
    CHECK(plancherel_check(e));
    CHECK(inversion_check(e));
}
