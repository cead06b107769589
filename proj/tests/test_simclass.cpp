#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "matdist/enumerate.hpp"
#include "matdist/simclass.hpp"

using namespace matdist;

TEST_CASE("partitions") {
    const Partition p({1, 2, 1});
    CHECK(p.parts() == std::vector<unsigned>{2, 1, 1});
    CHECK(p.size() == 4);
    CHECK(p.sum_squares() == 6);
    CHECK(p.count_eq(1) == 2);
    CHECK(p.conjugate().parts() == std::vector<unsigned>{3, 1});
    CHECK(p.conjugate().conjugate() == p);
    CHECK(Partition::all(4).size() == 5);
    CHECK(Partition::all(12).size() == 77);
    CHECK(p.str() == "(2,1,1)");
}

TEST_CASE("cycle types of the standard examples") {
    FieldPtr f = Field::make(3);
    IrrSieve sieve(f);

    const CycleType zero = cycle_type(FqMatrix(*f, 2), sieve);
    REQUIRE(zero.factors.size() == 1);
    CHECK(zero.factors[0].first == FqPoly::x(*f));
    CHECK(zero.factors[0].second == Partition({1, 1}));

    FqMatrix j(*f, 2);
    j.set(0, 1, 1);
    const CycleType jordan = cycle_type(j, sieve);
    REQUIRE(jordan.factors.size() == 1);
    CHECK(jordan.factors[0].second == Partition({2}));

    const FqPoly t2p1 = FqPoly::from_ints(*f, {1, 0, 1});
    const CycleType comp = cycle_type(FqMatrix::companion(t2p1), sieve);
    REQUIRE(comp.factors.size() == 1);
    CHECK(comp.factors[0].first == t2p1);
    CHECK(comp.factors[0].second == Partition({1}));
}

TEST_CASE("quadratic class types of the standard examples") {
    FieldPtr f = Field::make(3);
    IrrSieve sieve(f);

    // diag(1, -1): one plus-pair
    const auto [qct1, tau1] = quad_class_type(FqMatrix::diag(*f, {1, 2}), sieve);
    CHECK(tau1.str() == "(1^(1) 1^(1))_(+1)");
    REQUIRE(qct1.plus.size() == 1);
    CHECK(std::get<0>(qct1.plus[0]) == FqPoly::from_ints(*f, {1, 1}));  // smaller mate T+1

    // companion(T^2+1): even group with pi = T + 1
    const auto [qct2, tau2] =
        quad_class_type(FqMatrix::companion(FqPoly::from_ints(*f, {1, 0, 1})), sieve);
    CHECK(tau2.str() == "(1^(1))_(2)");
    REQUIRE(qct2.sq.size() == 1);
    CHECK(qct2.sq[0].first == FqPoly::from_ints(*f, {1, 1}));

    // diag(1, 2, 0) over F_7: alpha plus two unpaired factors
    FieldPtr f7 = Field::make(7);
    IrrSieve sieve7(f7);
    const auto [qct3, tau3] = quad_class_type(FqMatrix::diag(*f7, {1, 2, 0}), sieve7);
    CHECK(tau3.alpha == Partition({1}));
    CHECK(tau3.minus.size() == 2);
    CHECK(tau3.str() == "0^(1)·(1^(1) 1^(1))_(-1)");
}

TEST_CASE("centralizer sizes against the brute-force commutant") {
    FieldPtr f = Field::make(3);
    IrrSieve sieve(f);
    MatrixSpace space(f, 2);
    auto brute = [&](const FqMatrix& a) {
        std::uint64_t count = 0;
        for (std::uint64_t pi = 0; pi < space.size(); ++pi) {
            const FqMatrix p = space.at(pi);
            if (p * a == a * p && p.invertible()) ++count;
        }
        return count;
    };

    const FqMatrix zero(*f, 2);
    CHECK(centralizer_order(class_type(cycle_type(zero, sieve)), 3) == 48);
    CHECK(brute(zero) == 48);

    FqMatrix j(*f, 2);
    j.set(0, 1, 1);
    CHECK(centralizer_order(class_type(cycle_type(j, sieve)), 3) == 6);
    CHECK(brute(j) == 6);

    const FqMatrix c = FqMatrix::companion(FqPoly::from_ints(*f, {1, 0, 1}));
    CHECK(centralizer_order(class_type(cycle_type(c, sieve)), 3) == 8);
    CHECK(brute(c) == 8);
}

TEST_CASE("class sizes") {
    FieldPtr f = Field::make(3);
    IrrSieve sieve(f);
    CHECK(gl_order(3, 2) == 48);
    CHECK(similarity_class_size(class_type(cycle_type(FqMatrix(*f, 2), sieve)), 3, 2) == 1);
    FqMatrix j(*f, 2);
    j.set(0, 1, 1);
    CHECK(similarity_class_size(class_type(cycle_type(j, sieve)), 3, 2) == 8);

    // orbit sizes weighted by cycle-type count partition the space
    mpz_class total = 0;
    for (const auto& [ct, rep] : all_class_reps(f, 2, sieve))
        total += similarity_class_size(class_type(ct), 3, 2);
    CHECK(total == 81);
}

TEST_CASE("cycle-type counts per quadratic class type") {
    FieldPtr f = Field::make(3);
    IrrSieve sieve(f);
    const QuadPools pools = build_quad_pools(sieve, 2);
    auto find_y = [&](const std::string& type_str) {
        for (const auto& tau : enumerate_quad_class_shapes(2))
            if (tau.str() == type_str) return count_quad_cycle_types(tau, pools);
        return mpz_class(-1);
    };
    CHECK(find_y("0^(1)·(1^(1))_(-1)") == 2);   // q - 1
    CHECK(find_y("(1^(1) 1^(1))_(+1)") == 1);   // (q-1)/2 unordered pairs
    CHECK(find_y("(1^(1))_(2)") == 1);          // (q-1)/2 even irreducibles
    CHECK(find_y("(1^(1) 1^(1))_(-1)") == 0);   // needs two mate-pairs
}

TEST_CASE("representatives realize their type") {
    for (const char* spec : {"3", "5"}) {
        FieldPtr f = Field::parse(spec);
        IrrSieve sieve(f);
        for (unsigned n : {2u, 3u}) {
            for (const auto& tau : enumerate_quad_class_types(n, sieve)) {
                const FqMatrix rep = representative(tau, sieve);
                CHECK(quad_class_type(rep, sieve).second == tau);
            }
        }
    }
}

TEST_CASE("quadratic class types refine class types consistently") {
    FieldPtr f = Field::make(5);
    IrrSieve sieve(f);
    MatrixSpace space(f, 2);
    for (std::uint64_t mi = 0; mi < space.size(); ++mi) {
        const FqMatrix a = space.at(mi);
        const auto [qct, tau] = quad_class_type(a, sieve);
        CHECK(tau.degree() == 2);
        CHECK(qct.degree() == 2);
        CHECK(tau.flatten() == class_type(cycle_type(a, sieve)));
    }
}
