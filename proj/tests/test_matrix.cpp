#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "matdist/enumerate.hpp"
#include "matdist/matrix.hpp"
#include "matdist/rng.hpp"

using namespace matdist;

TEST_CASE("norm-like map on tuples") {
    FieldPtr f = Field::make(3);
    const FqMatrix zero(*f, 2);
    const FqMatrix id = FqMatrix::identity(*f, 2);
    CHECK(FqTuple({zero, zero}).norm() == zero);
    CHECK(FqTuple({id}).norm() == id);  // I^2 = I
    // J nilpotent: J^2 + J^2 = 0
    FqMatrix j(*f, 2);
    j.set(0, 1, 1);
    CHECK(FqTuple({j, j}).norm() == zero);
}

TEST_CASE("rank") {
    FieldPtr f = Field::make(3);
    CHECK(FqMatrix(*f, 2).rank() == 0);
    CHECK(FqMatrix::identity(*f, 3).rank() == 3);
    FqMatrix j(*f, 2);
    j.set(0, 1, 1);
    CHECK(j.rank() == 1);
}

TEST_CASE("characteristic polynomial basics") {
    FieldPtr f = Field::make(3);
    CHECK(char_poly(FqMatrix(*f, 2)) == FqPoly::from_ints(*f, {0, 0, 1}));  // T^2

    const FqPoly t2p1 = FqPoly::from_ints(*f, {1, 0, 1});
    CHECK(char_poly(FqMatrix::companion(t2p1)) == t2p1);

    // char poly of diag(1,2) = (T-1)(T-2), expanded exactly over F_3
    const FqMatrix d = FqMatrix::diag(*f, {1, 2});
    const FqPoly expected =
        FqPoly::from_ints(*f, {-1, 1}) * FqPoly::from_ints(*f, {-2, 1});
    CHECK(char_poly(d) == expected);
    CHECK(expected == FqPoly::from_ints(*f, {2, 0, 1}));
}

TEST_CASE("companion property for every monic cubic over F_3") {
    FieldPtr f = Field::make(3);
    MonicPolySpace space(f, 3);
    for (std::uint64_t i = 0; i < space.size(); ++i) {
        const FqPoly g = space.at(i);
        CHECK(char_poly(FqMatrix::companion(g)) == g);
    }
}

TEST_CASE("char poly is a similarity invariant") {
    SplitMix64 rng(7);
    for (unsigned q : {3u, 5u}) {
        FieldPtr f = Field::make(q);
        for (unsigned n : {2u, 3u}) {
            MatrixSpace space(f, n);
            for (int trial = 0; trial < 100; ++trial) {
                const FqMatrix a = space.at(rng.bounded(space.size()));
                FqMatrix p(*f, n);
                do {
                    p = space.at(rng.bounded(space.size()));
                } while (!p.invertible());
                CHECK(char_poly(a) == char_poly(p * a * inverse(p)));
            }
        }
    }
}

TEST_CASE("Cayley-Hamilton over all of M_2(F_3)") {
    FieldPtr f = Field::make(3);
    MatrixSpace space(f, 2);
    for (std::uint64_t i = 0; i < space.size(); ++i) {
        const FqMatrix a = space.at(i);
        CHECK(eval_at_matrix(char_poly(a), a).is_zero());
    }
}

TEST_CASE("index round trip and lexicographic order") {
    FieldPtr f = Field::make(3);
    MatrixSpace space(f, 2);
    CHECK(space.size() == 81);
    for (std::uint64_t i = 0; i < space.size(); ++i) CHECK(space.at(i).to_index() == i);
    // first entry most significant
    CHECK(space.at(27).at(0, 0) == 1);
    CHECK(space.at(1).at(1, 1) == 1);

    TupleSpace tspace(f, 2, 2);
    for (std::uint64_t i = 0; i < tspace.size(); i += 101) CHECK(tspace.at(i).to_index() == i);
}

TEST_CASE("literals parse and format") {
    FieldPtr f = Field::make(3);
    const FqMatrix d = FqMatrix::parse(*f, "1,0;0,2");
    CHECK(d == FqMatrix::diag(*f, {1, 2}));
    CHECK(d.str() == "1,0;0,2");
    CHECK_THROWS_AS(FqMatrix::parse(*f, "1,0;2"), ConfigError);

    FieldPtr f9 = Field::make(3, 2);
    const FqMatrix m = FqMatrix::parse(*f9, "1+2*t,0;t,2");
    CHECK(m.at(0, 0) == f9->from_coeffs({1, 2}));
    CHECK(m.at(1, 0) == f9->from_coeffs({0, 1}));
    CHECK(FqMatrix::parse(*f9, m.str()) == m);
}

TEST_CASE("inverse and arithmetic guards") {
    FieldPtr f = Field::make(5);
    MatrixSpace space(f, 2);
    SplitMix64 rng(3);
    for (int trial = 0; trial < 50; ++trial) {
        FqMatrix p(*f, 2);
        do {
            p = space.at(rng.bounded(space.size()));
        } while (!p.invertible());
        CHECK(p * inverse(p) == FqMatrix::identity(*f, 2));
    }
    CHECK_THROWS_AS(inverse(FqMatrix(*f, 2)), Error);
    FieldPtr g = Field::make(3);
    CHECK_THROWS_AS(FqMatrix(*f, 2) + FqMatrix(*g, 2), FieldMismatchError);
    CHECK_THROWS_AS(FqMatrix(*f, 2) * FqMatrix(*f, 3), DimensionMismatchError);
}
