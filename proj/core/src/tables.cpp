#include "matdist/tables.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

namespace matdist {

const std::vector<ReferenceRow>& reference_rows_m2() {
    static const std::vector<ReferenceRow> rows = {
        {"i", "0^(1,1)", 4, "~q^4", "~1", "1"},
        {"ii", "0^(2)", 2, "~q^2", "~q^2", "x1"},
        {"iii", "0^(1)·(1^(1))_(-1)", 1, "~q^2", "~q^2", "xq"},
        {"iv", "(1^(1) 1^(1))_(+1)", 2, "~q^2", "~q^2", "xq"},
        {"v", "(1^(1))_(2)", 2, "~q^2", "~q^2", "xq"},
        {"vi", "(1^(1) 1^(1))_(-1)", 0, "~q^2", "~q^2", "xq^2"},
        {"vii", "(2^(1))_(-1)", 0, "~q^2", "~q^2", "xq^2"},
    };
    return rows;
}

const std::vector<ReferenceRow>& reference_rows_m3() {
    static const std::vector<ReferenceRow> rows = {
        {"i", "0^(1,1,1)", 9, "~q^9", "~1", "1"},
        {"ii", "0^(2,1)", 5, "~q^5", "~q^4", "x1"},
        {"iii", "0^(3)", 3, "~q^3", "~q^6", "x1"},
        {"iv", "0^(1,1)·(1^(1))_(-1)", 4, "~q^5", "~q^4", "xq"},
        {"v", "0^(2)·(1^(1))_(-1)", 2, "~q^3", "~q^6", "xq"},
        {"vi", "0^(1)·(1^(1) 1^(1))_(+1)", 3, "~q^3", "~q^6", "xq"},
        {"vii", "0^(1)·(1^(1))_(2)", 3, "~q^3", "~q^6", "xq"},
        {"viii", "0^(1)·(1^(1) 1^(1))_(-1)", 1, "~q^3", "~q^6", "xq^2"},
        {"ix", "0^(1)·(2^(1))_(-1)", 1, "~q^3", "~q^6", "xq^2"},
        {"x", "(3^(1))_(-1)", 0, "~q^3", "~q^6", "xq^3"},
        {"xi", "(1^(1))_(2)·(1^(1))_(-1)", 2, "~q^3", "~q^6", "xq^2"},
        {"xii", "(1^(1) 2^(1))_(-1)", 0, "~q^3", "~q^6", "xq^3"},
        {"xiii", "(1^(1) 1^(1) 1^(1))_(-1)", 0, "~q^3", "~q^6", "xq^3"},
        {"xiv", "(1^(1) 1^(1))_(+1)·(1^(1))_(-1)", 2, "~q^3", "~q^6", "xq^2"},
        {"xv", "(1^(2) 1^(1))_(+1)", 2, "~q^3", "~q^6", "xq"},
        {"xvi", "(1^(1,1) 1^(1))_(+1)", 4, "~q^5", "~q^4", "xq"},
    };
    return rows;
}

TypeTable build_type_table(FieldPtr field, unsigned n, unsigned r, std::uint64_t budget) {
    TypeTable table;
    table.n = n;
    table.q = field->q();
    table.r = r;

    const auto& reference = n == 2 ? reference_rows_m2() : reference_rows_m3();
    IrrSieve sieve(field, budget);
    const QuadPools pools = build_quad_pools(sieve, n);

    std::map<std::string, const ReferenceRow*> ref_by_type;
    for (const auto& row : reference) ref_by_type.emplace(row.type, &row);

    std::map<std::string, TypeRow> computed;
    for (const auto& tau : enumerate_quad_class_shapes(n)) {
        TypeRow row;
        row.type = tau;
        row.type_str = tau.str();
        row.rho_formula = radical_from_type(tau);
        const ClassType flat = tau.flatten();
        row.centralizer = centralizer_order(flat, field->q());
        row.class_size = similarity_class_size(flat, field->q(), n);
        row.y = count_quad_cycle_types(tau, pools);
        row.realized = row.y > 0;
        if (row.realized) {
            const FqMatrix rep = representative(tau, sieve);
            row.rho_gram = gram_matrix(rep).radical_dim;
        }
        // contribution exponent log_q(q^{r*rho/2} * y * s); zero y yields -inf,
        // reported as NaN-free sentinel below
        const unsigned rho = row.rho_gram ? *row.rho_gram : row.rho_formula;
        if (row.realized) {
            const double logq = std::log(static_cast<double>(field->q()));
            row.contribution_exponent = 0.5 * r * rho +
                                        (std::log(row.y.get_d()) + std::log(row.class_size.get_d())) / logq;
        } else {
            row.contribution_exponent = -1.0;
        }
        auto it = ref_by_type.find(row.type_str);
        if (it != ref_by_type.end()) {
            row.reference_label = it->second->label;
            row.rho_matches_reference = row.rho_formula == it->second->rho &&
                                        (!row.rho_gram || *row.rho_gram == it->second->rho);
        }
        computed.emplace(row.type_str, std::move(row));
    }

    // reference rows first, in their own order, then extras canonically
    for (const auto& ref : reference) {
        auto it = computed.find(ref.type);
        if (it == computed.end() || !it->second.realized)
            table.missing_references.push_back(ref.type);
        if (it != computed.end()) {
            table.rows.push_back(it->second);
            computed.erase(it);
        }
    }
    for (auto& [str, row] : computed) {
        if (!row.realized) continue;  // unrealizable shapes outside the reference are noise
        table.extra_types.push_back(str);
        table.rows.push_back(std::move(row));
    }
    return table;
}

std::string type_table_csv(const TypeTable& table) {
    std::ostringstream out;
    out << "type,rho,centralizer,class_size,y,contribution_exponent,paper_row,match_flag\n";
    for (const auto& row : table.rows) {
        out << '"' << row.type_str << '"' << ',';
        if (row.rho_gram) out << *row.rho_gram;
        else out << row.rho_formula;
        out << ',' << row.centralizer.get_str() << ',' << row.class_size.get_str() << ','
            << row.y.get_str() << ',';
        if (row.realized) out << row.contribution_exponent;
        else out << "";
        out << ',' << row.reference_label << ',';
        if (row.reference_label.empty()) out << (row.realized ? "extra" : "unrealized");
        else if (!row.realized) out << "unrealized_here";
        else out << (row.rho_matches_reference ? "match" : "MISMATCH");
        out << '\n';
    }
    return out.str();
}

TailReport tail_bound_report(FieldPtr field, unsigned n, unsigned r, std::uint64_t budget) {
    TailReport report;
    report.n = n;
    report.q = field->q();
    report.r = r;

    IrrSieve sieve(field, budget);
    const QuadPools pools = build_quad_pools(sieve, n);
    const long envelope2 = static_cast<long>(r) * n * n - 2l * (n - 1) * (r - 2);

    for (const auto& tau : enumerate_quad_class_types(n, sieve)) {
        // skip the trivial type 0^(1,...,1) (the zero matrix)
        if (tau.plus.empty() && tau.sq.empty() && tau.minus.empty() &&
            tau.alpha.max_part() == 1)
            continue;
        TailRow row;
        row.type_str = tau.str();
        row.rho = radical_from_type(tau);
        row.y = count_quad_cycle_types(tau, pools);
        row.class_size = similarity_class_size(tau.flatten(), field->q(), n);
        // ratio^2 = q^{r*rho} y^2 s^2 / q^{r n^2 - 2(n-1)(r-2)}
        mpz_class num = row.y * row.y * row.class_size * row.class_size;
        mpz_class den = 1;
        long exp_num = static_cast<long>(r) * row.rho;
        long exp_den = envelope2;
        long net = exp_num - exp_den;
        mpz_class scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), field->q(), static_cast<unsigned long>(net < 0 ? -net : net));
        if (net >= 0) num *= scale;
        else den *= scale;
        row.ratio_squared = mpq_class(num, den);
        row.ratio_squared.canonicalize();
        row.ratio = std::sqrt(row.ratio_squared.get_d());
        if (row.ratio > report.max_ratio) {
            report.max_ratio = row.ratio;
            report.argmax_type = row.type_str;
        }
        report.rows.push_back(std::move(row));
    }
    return report;
}

}  // namespace matdist
