#pragma once

#include <optional>
#include <string>
#include <vector>

#include "matdist/gauss.hpp"
#include "matdist/quadform.hpp"
#include "matdist/simclass.hpp"

namespace matdist {

/// One row of the reference table of quadratic class type invariants for
/// M_2 / M_3 (radical invariant plus asymptotic orders); computed
/// enumerations are diffed against these rows, and disagreements are
/// reported, never auto-corrected.
struct ReferenceRow {
    const char* label;        // "i", "ii", ...
    const char* type;         // canonical type string (q-independent)
    unsigned rho;             // radical invariant
    const char* centralizer;  // asymptotic order, e.g. "~q^4"
    const char* class_size;   // asymptotic order
    const char* cycle_count;  // asymptotic order of y
};

const std::vector<ReferenceRow>& reference_rows_m2();
const std::vector<ReferenceRow>& reference_rows_m3();

/// One computed row of the quadratic-class-type table over a concrete field.
struct TypeRow {
    QuadClassType type;
    std::string type_str;
    unsigned rho_formula = 0;              // type-formula radical
    std::optional<unsigned> rho_gram;      // Gram radical on a representative (when realizable)
    mpz_class centralizer;
    mpz_class class_size;
    mpz_class y;                           // number of quadratic cycle types
    double contribution_exponent = 0.0;    // log_q(q^{r*rho/2} * y * s)
    std::string reference_label;           // matching reference row, if any
    bool rho_matches_reference = false;
    bool realized = false;                 // y > 0 over this field
};

struct TypeTable {
    unsigned n = 0, q = 0, r = 0;
    std::vector<TypeRow> rows;                     // enumerated types, reference rows first
    std::vector<std::string> missing_references;   // reference types with y = 0 here
    std::vector<std::string> extra_types;          // realized types absent from the reference
};

/// Enumerates every quadratic class type shape of degree n, computes its
/// exact invariants over the field, takes the Gram radical on a concrete
/// representative whenever one exists, and diffs against the reference rows.
TypeTable build_type_table(FieldPtr field, unsigned n, unsigned r,
                           std::uint64_t budget = kDefaultBudget);

/// CSV rendering with the fixed column schema
/// type,rho,centralizer,class_size,y,contribution_exponent,paper_row,match_flag.
std::string type_table_csv(const TypeTable& table);

/// Tail-bound report: for every nontrivial type (not 0^(1,...,1)), the exact
/// square of T = q^{r*rho/2} * y * s against the envelope
/// q^{r*n^2/2 - (n-1)(r-2)}; the maximal ratio is recorded, not asserted.
struct TailRow {
    std::string type_str;
    unsigned rho = 0;
    mpz_class y;
    mpz_class class_size;
    mpq_class ratio_squared;  // T^2 / q^{2(rn^2/2 - (n-1)(r-2))}
    double ratio = 0.0;
};

struct TailReport {
    unsigned n = 0, q = 0, r = 0;
    std::vector<TailRow> rows;
    double max_ratio = 0.0;
    std::string argmax_type;
};

TailReport tail_bound_report(FieldPtr field, unsigned n, unsigned r,
                             std::uint64_t budget = kDefaultBudget);

}  // namespace matdist
