#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "matdist/enumerate.hpp"
#include "matdist/poly.hpp"

using namespace matdist;

namespace {

// Gauss's necklace count of monic irreducibles: (1/d) sum_{e | d} mu(e) q^{d/e}.
std::uint64_t necklace_count(unsigned q, unsigned d) {
    auto mobius = [](unsigned n) {
        int m = 1;
        for (unsigned p = 2; p * p <= n; ++p)
            if (n % p == 0) {
                n /= p;
                if (n % p == 0) return 0;
                m = -m;
            }
        if (n > 1) m = -m;
        return m;
    };
    long long total = 0;
    for (unsigned e = 1; e <= d; ++e) {
        if (d % e != 0) continue;
        const int mu = mobius(e);
        if (mu == 0) continue;
        std::uint64_t power = 1;
        for (unsigned i = 0; i < d / e; ++i) power *= q;
        total += mu * static_cast<long long>(power);
    }
    return static_cast<std::uint64_t>(total) / d;
}

}  // namespace

TEST_CASE("arithmetic and division") {
    FieldPtr f = Field::make(3);
    const FqPoly a = FqPoly::from_ints(*f, {1, 0, 1});  // 1 + T^2
    const FqPoly b = FqPoly::from_ints(*f, {2, 1});     // 2 + T
    const auto [q, r] = a.divmod(b);
    CHECK(q * b + r == a);
    CHECK(r.degree() < b.degree());
    CHECK((a * b).degree() == 3);
    CHECK(a.eval(1) == 2);
    CHECK(a.eval(f->from_int(-1)) == 2);
}

TEST_CASE("factorization over F_3") {
    FieldPtr f = Field::make(3);
    IrrSieve sieve(f);

    const FqPoly t2 = FqPoly::from_ints(*f, {0, 0, 1});
    auto factors = sieve.factor(t2);
    REQUIRE(factors.size() == 1);
    CHECK(factors[0].first == FqPoly::x(*f));
    CHECK(factors[0].second == 2);

    const FqPoly t2p1 = FqPoly::from_ints(*f, {1, 0, 1});  // irreducible: no root mod 3
    factors = sieve.factor(t2p1);
    REQUIRE(factors.size() == 1);
    CHECK(factors[0].first == t2p1);
    CHECK(factors[0].second == 1);

    const FqPoly t2m1 = FqPoly::from_ints(*f, {-1, 0, 1});  // (T+1)(T+2)
    factors = sieve.factor(t2m1);
    REQUIRE(factors.size() == 2);
    CHECK(factors[0].first == FqPoly::from_ints(*f, {1, 1}));
    CHECK(factors[1].first == FqPoly::from_ints(*f, {2, 1}));

    CHECK_THROWS_AS(sieve.factor(FqPoly::from_ints(*f, {1, 2})), NonMonicError);
}

TEST_CASE("factor product reproduces the input") {
    FieldPtr f = Field::make(5);
    IrrSieve sieve(f);
    MonicPolySpace space(f, 4);
    for (std::uint64_t i = 0; i < space.size(); i += 7) {
        const FqPoly g = space.at(i);
        auto factors = sieve.factor(g);
        FqPoly prod = FqPoly::one(*f);
        int weighted = 0;
        for (const auto& [pi, mult] : factors) {
            prod = prod * pi.pow(mult);
            weighted += pi.degree() * static_cast<int>(mult);
        }
        CHECK(prod == g);
        CHECK(weighted == g.degree());
    }
}

TEST_CASE("irreducible counts match the necklace formula") {
    for (unsigned q : {3u, 5u}) {
        FieldPtr f = Field::make(q);
        IrrSieve sieve(f);
        for (unsigned d = 1; d <= 4; ++d)
            CHECK(sieve.irreducibles(d).size() == necklace_count(q, d));
    }
    // the three monic irreducible quadratics over F_3
    FieldPtr f = Field::make(3);
    IrrSieve sieve(f);
    const auto& irr2 = sieve.irreducibles(2);
    REQUIRE(irr2.size() == 3);
    CHECK(irr2[0] == FqPoly::from_ints(*f, {1, 0, 1}));
    CHECK(irr2[1] == FqPoly::from_ints(*f, {2, 1, 1}));
    CHECK(irr2[2] == FqPoly::from_ints(*f, {2, 2, 1}));
}

TEST_CASE("reflect and square decomposition") {
    FieldPtr f = Field::make(3);
    const FqPoly t2p1 = FqPoly::from_ints(*f, {1, 0, 1});
    CHECK(t2p1.reflect() == t2p1);  // polynomial in T^2
    CHECK(t2p1.decompose_square() == FqPoly::from_ints(*f, {1, 1}));
    CHECK(FqPoly::from_ints(*f, {1, 1}).compose_square() == t2p1);

    const FqPoly tm1 = FqPoly::from_ints(*f, {-1, 1});  // T - 1
    CHECK(tm1.reflect() == FqPoly::from_ints(*f, {1, 1}));  // T + 1
    CHECK(tm1.reflect().reflect() == tm1);
}

TEST_CASE("enumeration budget") {
    FieldPtr f = Field::make(3);
    CHECK(MatrixSpace(f, 2).size() == 81);
    CHECK(TupleSpace(f, 2, 2).size() == 6561);
    CHECK_THROWS_AS(MatrixSpace(f, 4, 1000), BudgetExceededError);
}
