#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "matdist/enumerate.hpp"
#include "matdist/quadform.hpp"
#include "matdist/rng.hpp"

using namespace matdist;

TEST_CASE("gram radical at the reference points") {
    FieldPtr f = Field::make(3);
    CHECK(gram_matrix(FqMatrix(*f, 2)).radical_dim == 4);                  // A = 0
    CHECK(gram_matrix(FqMatrix::identity(*f, 2)).radical_dim == 0);        // 1 + 1 != 0
    CHECK(gram_matrix(FqMatrix::diag(*f, {1, 2})).radical_dim == 2);       // diag(1,-1)
}

TEST_CASE("gram matrix represents the trace form") {
    // Q_A(X) = Tr(A X^2) must equal (1/2) X^T G X for random X
    SplitMix64 rng(11);
    for (const char* spec : {"3", "5", "7"}) {
        FieldPtr f = Field::parse(spec);
        MatrixSpace space(f, 2);
        const std::uint16_t half = f->inv(f->from_int(2));
        for (int trial = 0; trial < 200; ++trial) {
            const FqMatrix a = space.at(rng.bounded(space.size()));
            const FqMatrix x = space.at(rng.bounded(space.size()));
            const FqMatrix gram = gram_matrix(a).gram;
            // flatten x to the standard basis coordinates
            std::uint16_t quad = 0;
            for (unsigned i = 0; i < 4; ++i)
                for (unsigned j = 0; j < 4; ++j) {
                    const std::uint16_t xi = x.at(i / 2, i % 2);
                    const std::uint16_t xj = x.at(j / 2, j % 2);
                    quad = f->add(quad, f->mul(f->mul(xi, gram.at(i, j)), xj));
                }
            quad = f->mul(quad, half);
            CHECK(quad == (a * x * x).trace());
        }
    }
}

TEST_CASE("radical is n^2 exactly for the zero matrix") {
    FieldPtr f = Field::make(3);
    MatrixSpace space(f, 2);
    for (std::uint64_t mi = 0; mi < space.size(); ++mi) {
        const FqMatrix a = space.at(mi);
        CHECK((gram_matrix(a).radical_dim == 4) == a.is_zero());
    }
}

TEST_CASE("partition radical term") {
    CHECK(radical_partition_term(Partition({1, 1})) == 4);
    CHECK(radical_partition_term(Partition({2})) == 2);
    CHECK(radical_partition_term(Partition({2, 1})) == 5);
    CHECK(radical_partition_term(Partition({3})) == 3);
    CHECK(radical_partition_term(Partition()) == 0);
}

TEST_CASE("type-formula radical at the reference types") {
    FieldPtr f = Field::make(3);
    IrrSieve sieve(f);

    auto rho_of = [&](unsigned n, const std::string& type_str) {
        for (const auto& tau : enumerate_quad_class_shapes(n))
            if (tau.str() == type_str) return static_cast<int>(radical_from_type(tau));
        return -1;
    };
    CHECK(rho_of(2, "0^(2)") == 2);
    CHECK(rho_of(2, "(1^(1))_(2)") == 2);
    CHECK(rho_of(3, "0^(1,1)·(1^(1))_(-1)") == 4);
    CHECK(rho_of(3, "(1^(1,1) 1^(1))_(+1)") == 4);
    CHECK(rho_of(3, "(1^(2) 1^(1))_(+1)") == 2);
}

TEST_CASE("cross-oracle on all of M_2(F_3)") {
    FieldPtr f = Field::make(3);
    IrrSieve sieve(f);
    MatrixSpace space(f, 2);
    for (std::uint64_t mi = 0; mi < space.size(); ++mi) {
        const FqMatrix a = space.at(mi);
        CHECK(radical_from_type(quad_class_type(a, sieve).second) ==
              gram_matrix(a).radical_dim);
    }
}

TEST_CASE("the plain plus-group scaling disagrees with the Gram oracle") {
    // diag(1, -1) has Gram radical 2; the undoubled variant yields 1
    FieldPtr f = Field::make(3);
    IrrSieve sieve(f);
    const auto [qct, tau] = quad_class_type(FqMatrix::diag(*f, {1, 2}), sieve);
    CHECK(radical_from_type(tau) == 2);
    CHECK(radical_from_type_alt(tau) == 1);
}
