#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "matdist/field.hpp"

using namespace matdist;

TEST_CASE("prime field construction") {
    FieldPtr f = Field::make(3);
    CHECK(f->p() == 3);
    CHECK(f->g() == 1);
    CHECK(f->q() == 3);
    CHECK(f->add(1, 2) == 0);
    CHECK(f->mul(2, 2) == 1);
    CHECK(f->inv(2) == 2);
}

TEST_CASE("explicit modulus accepted when irreducible") {
    // t^2 + 1 has no root mod 3
    FieldPtr f = Field::make(3, 2, std::vector<unsigned>{1, 0, 1});
    CHECK(f->q() == 9);
    CHECK(f->modulus() == std::vector<unsigned>{1, 0, 1});
}

TEST_CASE("reducible modulus rejected") {
    CHECK_THROWS_AS(Field::make(3, 2, std::vector<unsigned>{0, 0, 1}), ReducibleModulusError);
    CHECK_THROWS_AS(Field::make(3, 2, std::vector<unsigned>{2, 0, 1}), ReducibleModulusError);
}

TEST_CASE("composite or even characteristic rejected") {
    CHECK_THROWS_AS(Field::make(4), NotOddPrimeError);
    CHECK_THROWS_AS(Field::make(9), NotOddPrimeError);
    CHECK_THROWS_AS(Field::make(2), NotOddPrimeError);
}

TEST_CASE("no default modulus above q = 49") {
    CHECK_THROWS_AS(Field::make(3, 4), NoDefaultModulusError);  // q = 81
    CHECK_NOTHROW(Field::make(3, 4, std::vector<unsigned>{2, 0, 0, 1, 1}));
}

TEST_CASE("default moduli are the canonical first irreducibles") {
    // Verified in-test by trial division: no lex-earlier monic of the same
    // degree is irreducible.
    auto first_irreducible = [](unsigned p, unsigned g) {
        auto has_factor = [&](const std::vector<unsigned>& f) {
            // root test suffices for degree <= 3 over F_p
            for (unsigned x = 0; x < p; ++x) {
                unsigned acc = 0;
                for (std::size_t i = f.size(); i-- > 0;) acc = (acc * x + f[i]) % p;
                if (acc == 0) return true;
            }
            return false;
        };
        std::uint64_t count = 1;
        for (unsigned i = 0; i < g; ++i) count *= p;
        for (std::uint64_t idx = 0; idx < count; ++idx) {
            std::vector<unsigned> f(g + 1, 0);
            std::uint64_t v = idx;
            for (unsigned i = 0; i < g; ++i) {
                f[i] = static_cast<unsigned>(v % p);
                v /= p;
            }
            f[g] = 1;
            if (!has_factor(f)) return f;
        }
        return std::vector<unsigned>{};
    };
    CHECK(Field::make(3, 2)->modulus() == first_irreducible(3, 2));
    CHECK(Field::make(5, 2)->modulus() == first_irreducible(5, 2));
    CHECK(Field::make(7, 2)->modulus() == first_irreducible(7, 2));
    CHECK(Field::make(3, 3)->modulus() == first_irreducible(3, 3));
    // concrete values, frozen for reproducibility of emitted numbers
    CHECK(Field::make(3, 2)->modulus() == std::vector<unsigned>{1, 0, 1});
    CHECK(Field::make(5, 2)->modulus() == std::vector<unsigned>{2, 0, 1});
    CHECK(Field::make(3, 3)->modulus() == std::vector<unsigned>{1, 2, 0, 1});
    CHECK(Field::make(7, 2)->modulus() == std::vector<unsigned>{1, 0, 1});
}

TEST_CASE("absolute trace") {
    FieldPtr f3 = Field::make(3);
    CHECK(f3->trace_p(2) == 2);  // identity on the prime field

    FieldPtr f9 = Field::make(3, 2, std::vector<unsigned>{1, 0, 1});
    CHECK(f9->trace_p(f9->one()) == 2);  // Tr(1) = g * 1 = 2 mod 3
    // t satisfies t^2 = -1, so t^3 = -t and Tr(t) = t + t^3 = 0
    const std::uint16_t t = f9->from_coeffs({0, 1});
    CHECK(f9->trace_p(t) == 0);
}

TEST_CASE("field spec strings round trip") {
    for (const char* spec : {"3", "5", "3^2/1,0,1", "5^2/2,0,1"}) {
        FieldPtr f = Field::parse(spec);
        CHECK(f->spec_string() == spec);
    }
    CHECK(Field::parse("3^2")->q() == 9);
    CHECK_THROWS_AS(Field::parse("abc"), ConfigError);
}

TEST_CASE("element format and parse") {
    FieldPtr f9 = Field::make(3, 2);
    for (unsigned v = 0; v < 9; ++v)
        CHECK(f9->parse_element(f9->format_element(static_cast<std::uint16_t>(v))) == v);
    CHECK(f9->parse_element("1+2*t") == f9->from_coeffs({1, 2}));
    CHECK(f9->parse_element("t") == f9->from_coeffs({0, 1}));
    CHECK(f9->parse_element("-1") == f9->from_coeffs({2, 0}));
}

TEST_CASE("FqElem operators") {
    FieldPtr f = Field::make(5);
    FqElem a(*f, 3), b(*f, 4);
    CHECK((a + b).index() == 2);
    CHECK((a * b).index() == 2);
    CHECK((a - b).index() == 4);
    CHECK((a * a.inverse()).index() == 1);
    FieldPtr g = Field::make(7);
    CHECK_THROWS_AS(a + FqElem(*g, 1), FieldMismatchError);
}
