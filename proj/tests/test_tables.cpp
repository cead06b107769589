#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "matdist/tables.hpp"

using namespace matdist;

TEST_CASE("M_2 table at q = 3") {
    FieldPtr f = Field::make(3);
    const TypeTable table = build_type_table(f, 2, 4);

    // every realized reference row matches the reference radical
    for (const auto& row : table.rows) {
        if (row.reference_label.empty() || !row.realized) continue;
        CHECK(row.rho_matches_reference);
        REQUIRE(row.rho_gram.has_value());
        CHECK(*row.rho_gram == row.rho_formula);
    }
    // the single-eigenvalue Jordan class is realized but absent from the
    // reference list, and must be flagged
    CHECK(std::find(table.extra_types.begin(), table.extra_types.end(), "(1^(2))_(-1)") !=
          table.extra_types.end());
    CHECK(std::find(table.extra_types.begin(), table.extra_types.end(), "(1^(1,1))_(-1)") !=
          table.extra_types.end());
    // the two-distinct-pair type needs q >= 5
    CHECK(std::find(table.missing_references.begin(), table.missing_references.end(),
                    "(1^(1) 1^(1))_(-1)") != table.missing_references.end());

    const std::string csv = type_table_csv(table);
    CHECK(csv.rfind("type,rho,centralizer,class_size,y,contribution_exponent,paper_row,match_flag",
                    0) == 0);
    CHECK(csv.find("MISMATCH") == std::string::npos);
}

TEST_CASE("reference rows carry the expected radicals") {
    const std::vector<unsigned> m2{4, 2, 1, 2, 2, 0, 0};
    const auto& r2 = reference_rows_m2();
    REQUIRE(r2.size() == m2.size());
    for (std::size_t i = 0; i < m2.size(); ++i) CHECK(r2[i].rho == m2[i]);

    const std::vector<unsigned> m3{9, 5, 3, 4, 2, 3, 3, 1, 1, 0, 2, 0, 0, 2, 2, 4};
    const auto& r3 = reference_rows_m3();
    REQUIRE(r3.size() == m3.size());
    for (std::size_t i = 0; i < m3.size(); ++i) CHECK(r3[i].rho == m3[i]);
}

TEST_CASE("byte-stable CSV output") {
    FieldPtr f = Field::make(3);
    const std::string a = type_table_csv(build_type_table(f, 2, 4));
    const std::string b = type_table_csv(build_type_table(f, 2, 4));
    CHECK(a == b);
}

TEST_CASE("tail report is finite and nonempty") {
    FieldPtr f = Field::make(3);
    const TailReport rep = tail_bound_report(f, 3, 3);
    CHECK(!rep.rows.empty());
    CHECK(rep.max_ratio > 0);
    CHECK(rep.max_ratio < 1e6);
    CHECK(!rep.argmax_type.empty());
    // the trivial type is excluded
    for (const auto& row : rep.rows) CHECK(row.type_str != "0^(1,1,1)");
}
