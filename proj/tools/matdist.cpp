// matdist: exact computations around matrix distance sets over small finite
// fields: quadratic matrix Gauss sums, similarity class invariants, matrix
// spheres and their Fourier transforms, incidence and threshold experiments.
//
// Exit codes: 0 success, 2 verification failure, 3 budget exceeded,
// 4 configuration error.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "matdist/distance.hpp"
#include "matdist/quadform.hpp"
#include "matdist/tables.hpp"
#include "matdist/verify.hpp"

using nlohmann::json;
using namespace matdist;

namespace {

constexpr const char* kSchemaVersion = "1";

struct RunConfig {
    std::string field_spec = "3";
    unsigned n = 2;
    unsigned r = 1;
    std::uint64_t budget = kDefaultBudget;
    std::uint64_t seed = 0;
    std::string format = "text";
    std::string out_path;
};

void emit(const RunConfig& cfg, const std::string& text) {
    if (cfg.out_path.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << '\n';
    } else {
        std::ofstream f(cfg.out_path);
        if (!f) throw ConfigError("cannot open output path: " + cfg.out_path);
        f << text;
        if (!text.empty() && text.back() != '\n') f << '\n';
    }
}

json cyc_json(const CycInt& v) {
    json coords = json::array();
    for (const auto& c : v.coords()) coords.push_back(c.get_str());
    return json{{"p", v.prime()}, {"coords", coords}};
}

json mpq_json(const mpq_class& v) {
    return json{{"num", v.get_num().get_str()}, {"den", v.get_den().get_str()}};
}

FqTuple parse_tuple(const Field& f, unsigned n, unsigned r, const std::string& text) {
    std::vector<FqMatrix> mats;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, '|')) mats.push_back(FqMatrix::parse(f, part));
    if (mats.size() != r)
        throw ConfigError("tuple literal has " + std::to_string(mats.size()) +
                          " matrices, expected r = " + std::to_string(r));
    for (const auto& m : mats)
        if (m.n() != n) throw ConfigError("tuple entries must be " + std::to_string(n) + "x" +
                                          std::to_string(n));
    return FqTuple(std::move(mats));
}

int cmd_field_info(const RunConfig& cfg) {
    FieldPtr f = Field::parse(cfg.field_spec);
    json j{{"schema_version", kSchemaVersion},
           {"p", f->p()},
           {"g", f->g()},
           {"q", f->q()},
           {"modulus", f->modulus()},
           {"spec", f->spec_string()}};
    if (cfg.format == "json") {
        emit(cfg, j.dump(2));
    } else {
        std::ostringstream os;
        os << "F_" << f->q() << ": p = " << f->p() << ", g = " << f->g() << ", modulus ";
        FqPoly mod(*f, std::vector<std::uint16_t>(f->modulus().begin(), f->modulus().end()));
        os << mod.str("t") << ", spec " << f->spec_string();
        emit(cfg, os.str());
    }
    return 0;
}

int cmd_classify(const RunConfig& cfg, const std::string& a_lit) {
    FieldPtr f = Field::parse(cfg.field_spec);
    const FqMatrix a = FqMatrix::parse(*f, a_lit);
    IrrSieve sieve(f, cfg.budget);
    const CycleType ct = cycle_type(a, sieve);
    const QuadCycleType qct = quad_cycle_type(ct);
    const QuadClassType tau = quad_class_type_of(qct);
    const ClassType t = class_type(ct);
    const QuadFormData qf = gram_matrix(a);
    const mpz_class cent = centralizer_order(t, f->q());
    const mpz_class size = similarity_class_size(t, f->q(), a.n());

    if (cfg.format == "json") {
        json j{{"schema_version", kSchemaVersion},
               {"matrix", a.str()},
               {"char_poly", char_poly(a).str()},
               {"cycle_type", ct.str()},
               {"class_type", t.str()},
               {"quad_cycle_type", qct.str()},
               {"quad_class_type", tau.str()},
               {"centralizer", cent.get_str()},
               {"class_size", size.get_str()},
               {"radical_gram", qf.radical_dim},
               {"radical_formula", radical_from_type(tau)}};
        emit(cfg, j.dump(2));
    } else {
        std::ostringstream os;
        os << "A = " << a.str() << " over F_" << f->q() << "\n"
           << "  char poly        " << char_poly(a).str() << "\n"
           << "  cycle type       " << ct.str() << "\n"
           << "  class type       " << t.str() << "\n"
           << "  quad cycle type  " << qct.str() << "\n"
           << "  quad class type  " << tau.str() << "\n"
           << "  centralizer      " << cent.get_str() << "\n"
           << "  class size       " << size.get_str() << "\n"
           << "  radical (gram)   " << qf.radical_dim << "\n"
           << "  radical (type)   " << radical_from_type(tau);
        emit(cfg, os.str());
    }
    return 0;
}

int cmd_gauss(const RunConfig& cfg, const std::string& a_lit, const std::string& b_lit) {
    FieldPtr f = Field::parse(cfg.field_spec);
    const FqMatrix a = FqMatrix::parse(*f, a_lit);
    const FqMatrix b = b_lit.empty() ? FqMatrix(*f, a.n()) : FqMatrix::parse(*f, b_lit);
    const CycInt g = gauss_sum(a, b, cfg.budget);
    const unsigned rho = gram_matrix(a).radical_dim;
    const CycInt mag = g.magnitude_squared();

    json j{{"schema_version", kSchemaVersion},
           {"A", a.str()},
           {"B", b.str()},
           {"value_coords", cyc_json(g)},
           {"rho", rho}};
    if (mag.is_rational()) j["magnitude_squared"] = mag.as_integer().get_str();
    if (cfg.format == "json") {
        emit(cfg, j.dump(2));
    } else {
        std::ostringstream os;
        os << "G(A,B) = " << g.to_string() << "\n|G|^2 = " << mag.to_string()
           << "\nrho(A) = " << rho;
        emit(cfg, os.str());
    }
    return 0;
}

int cmd_sphere(const RunConfig& cfg, const std::string& t_lit, bool brute,
               const std::string& ft_lit) {
    FieldPtr f = Field::parse(cfg.field_spec);
    const FqMatrix t = FqMatrix::parse(*f, t_lit);
    const unsigned n = t.n();
    json j{{"schema_version", kSchemaVersion}, {"T", t.str()}, {"n", n}, {"r", cfg.r}};

    mpz_class count;
    std::string method;
    if (brute) {
        count = sphere_count_brute(f, n, cfg.r, t, cfg.budget);
        method = "brute";
    } else {
        GaussCache cache(f, n, cfg.budget);
        const ClassifiedSpace cs = classify_space(f, n, cache);
        count = sphere_count_formula(t, cfg.r, cs);
        method = "formula";
    }
    mpz_class main_term;
    mpz_ui_pow_ui(main_term.get_mpz_t(), f->q(),
                  static_cast<unsigned long>(n) * n * (cfg.r - 1));
    mpq_class ratio(count, main_term);
    ratio.canonicalize();
    j["count"] = count.get_str();
    j["method"] = method;
    j["ratio_to_main_term"] = ratio.get_d();

    if (!ft_lit.empty()) {
        GaussCache cache(f, n, cfg.budget);
        const ClassifiedSpace cs = classify_space(f, n, cache);
        const FqTuple m = parse_tuple(*f, n, cfg.r, ft_lit);
        const ScaledCyc ft = sphere_ft_formula(t, m, cs, cfg.budget);
        j["ft"] = {{"M", m.str()},
                   {"numerator", cyc_json(ft.num)},
                   {"q_exponent", ft.qexp},
                   {"value_float", std::abs(ft.num.to_complex()) /
                                       std::pow(static_cast<double>(f->q()), ft.qexp)}};
    }
    if (cfg.format == "json") {
        emit(cfg, j.dump(2));
    } else {
        std::ostringstream os;
        os << "#sigma_T = " << count.get_str() << " (" << method << ")\n"
           << "ratio to q^(n^2(r-1)) = " << ratio.get_d();
        if (j.contains("ft"))
            os << "\nsigma_T^(M) = " << j["ft"]["numerator"]["coords"].dump() << " / q^"
               << j["ft"]["q_exponent"];
        emit(cfg, os.str());
    }
    return 0;
}

int cmd_spectrum(const RunConfig& cfg, std::uint64_t size) {
    FieldPtr f = Field::parse(cfg.field_spec);
    SplitMix64 rng(cfg.seed);
    const PointSet e = random_point_set(f, cfg.n, cfg.r, size, rng, cfg.budget);
    const Spectrum spec = dft_indicator(e, cfg.budget);
    const bool plancherel = plancherel_check(e, cfg.budget);
    const bool inversion = inversion_check(e, cfg.budget);

    json entries = json::array();
    for (std::size_t mi = 0; mi < spec.unscaled.size(); ++mi) {
        if (spec.unscaled[mi].is_zero()) continue;
        entries.push_back({{"M_index", mi}, {"numerator", cyc_json(spec.unscaled[mi])}});
    }
    json j{{"schema_version", kSchemaVersion},
           {"set_size", e.elems.size()},
           {"q_exponent", spec.qexp},
           {"plancherel_exact", plancherel},
           {"inversion_exact", inversion},
           {"nonzero_coefficients", entries.size()},
           {"spectrum", entries}};
    if (cfg.format == "json") {
        emit(cfg, j.dump(2));
    } else {
        std::ostringstream os;
        os << "#E = " << e.elems.size() << ", spectrum denominator q^" << spec.qexp << "\n"
           << "plancherel exact: " << (plancherel ? "yes" : "NO") << "\n"
           << "inversion exact:  " << (inversion ? "yes" : "NO") << "\n"
           << "nonzero coefficients: " << entries.size();
        emit(cfg, os.str());
    }
    return (plancherel && inversion) ? 0 : 2;
}

int cmd_tables(const RunConfig& cfg, unsigned n, unsigned r_opt) {
    FieldPtr f = Field::parse(cfg.field_spec);
    if (n != 2 && n != 3) throw ConfigError("tables support n = 2 or n = 3");
    const unsigned r = r_opt ? r_opt : (n == 2 ? 4 : 3);
    const TypeTable table = build_type_table(f, n, r, cfg.budget);

    if (cfg.format == "csv") {
        emit(cfg, type_table_csv(table));
    } else if (cfg.format == "json") {
        const auto& reference = n == 2 ? reference_rows_m2() : reference_rows_m3();
        json rows = json::array();
        for (const auto& row : table.rows) {
            json jr{{"type", row.type_str},
                    {"rho_formula", row.rho_formula},
                    {"centralizer", row.centralizer.get_str()},
                    {"class_size", row.class_size.get_str()},
                    {"y", row.y.get_str()},
                    {"paper_row", row.reference_label},
                    {"realized", row.realized}};
            if (row.rho_gram) jr["rho_gram"] = *row.rho_gram;
            if (row.realized) jr["contribution_exponent"] = row.contribution_exponent;
            if (!row.reference_label.empty()) {
                jr["match"] = row.rho_matches_reference;
                for (const auto& ref : reference)
                    if (row.reference_label == ref.label)
                        jr["reference_orders"] = {{"rho", ref.rho},
                                                  {"centralizer", ref.centralizer},
                                                  {"class_size", ref.class_size},
                                                  {"cycle_types", ref.cycle_count}};
            }
            rows.push_back(jr);
        }
        json j{{"schema_version", kSchemaVersion},
               {"n", n},
               {"q", f->q()},
               {"r", r},
               {"rows", rows},
               {"missing_from_this_field", table.missing_references},
               {"types_absent_from_reference", table.extra_types}};
        emit(cfg, j.dump(2));
    } else {
        std::ostringstream os;
        os << type_table_csv(table);
        if (!table.extra_types.empty()) {
            os << "\n# realized types absent from the reference list:\n";
            for (const auto& s : table.extra_types) os << "#   " << s << "\n";
        }
        if (!table.missing_references.empty()) {
            os << "# reference types not realized over F_" << f->q() << ":\n";
            for (const auto& s : table.missing_references) os << "#   " << s << "\n";
        }
        emit(cfg, os.str());
    }
    return 0;
}

int cmd_lemma56(const RunConfig& cfg, unsigned n, unsigned r_opt) {
    FieldPtr f = Field::parse(cfg.field_spec);
    const unsigned r = r_opt ? r_opt : 3;
    const TailReport rep = tail_bound_report(f, n, r, cfg.budget);
    if (cfg.format == "json") {
        json rows = json::array();
        for (const auto& row : rep.rows)
            rows.push_back({{"type", row.type_str},
                            {"rho", row.rho},
                            {"y", row.y.get_str()},
                            {"class_size", row.class_size.get_str()},
                            {"ratio_squared", mpq_json(row.ratio_squared)},
                            {"ratio", row.ratio}});
        json j{{"schema_version", kSchemaVersion},
               {"n", n},
               {"q", f->q()},
               {"r", r},
               {"max_ratio", rep.max_ratio},
               {"argmax_type", rep.argmax_type},
               {"rows", rows}};
        emit(cfg, j.dump(2));
    } else {
        std::ostringstream os;
        os << "tail ratios q^(r*rho/2) y s / q^(rn^2/2-(n-1)(r-2)) at (n,r,q) = (" << n << ","
           << r << "," << f->q() << ")\n";
        for (const auto& row : rep.rows)
            os << "  " << row.type_str << ": rho = " << row.rho << ", y = " << row.y.get_str()
               << ", s = " << row.class_size.get_str() << ", ratio = " << row.ratio << "\n";
        os << "max ratio = " << rep.max_ratio << " at " << rep.argmax_type;
        emit(cfg, os.str());
    }
    return 0;
}

int cmd_distance(const RunConfig& cfg, const std::string& sizes_csv, unsigned trials,
                 const std::string& mode) {
    FieldPtr f = Field::parse(cfg.field_spec);
    std::vector<std::uint64_t> sizes;
    std::stringstream ss(sizes_csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) sizes.push_back(std::stoull(tok));
    if (sizes.empty()) throw ConfigError("--sizes requires at least one size");

    if (mode == "incidence") {
        json reports = json::array();
        bool all_agree = true;
        SplitMix64 master(cfg.seed);
        for (std::size_t i = 0; i < sizes.size(); ++i) {
            SplitMix64 rng = master.split(i);
            const PointSet e = random_point_set(f, cfg.n, cfg.r, sizes[i], rng, cfg.budget);
            const IncidenceReport rep = incidence(e, IncidenceMode::Both, cfg.budget);
            all_agree = all_agree && rep.modes_agree;
            json rows = json::array();
            for (const auto& row : rep.rows)
                rows.push_back({{"T_index", row.t_index},
                                {"nu_direct", mpq_json(row.nu_direct)},
                                {"nu_fourier", mpq_json(row.nu_fourier)},
                                {"sphere_term", mpq_json(row.sphere_term)},
                                {"error_term", mpq_json(row.error_term)}});
            json exps = json::array();
            for (const auto& [name, value] : rep.reference_exponents)
                exps.push_back({{"name", name}, {"exponent", value}});
            reports.push_back({{"set_size", rep.set_size},
                               {"distance_count", rep.distance_count},
                               {"modes_agree", rep.modes_agree},
                               {"threshold_exponents", exps},
                               {"rows", rows}});
        }
        json j{{"schema_version", kSchemaVersion},
               {"mode", "incidence"},
               {"n", cfg.n},
               {"r", cfg.r},
               {"q", f->q()},
               {"seed", cfg.seed},
               {"reports", reports}};
        emit(cfg, cfg.format == "json" ? j.dump(2) : j.dump(2));
        return all_agree ? 0 : 2;
    }

    const ThresholdReport rep =
        threshold_experiment(f, cfg.n, cfg.r, sizes, trials, cfg.seed, cfg.budget);
    if (cfg.format == "json") {
        json rows = json::array();
        for (const auto& row : rep.rows)
            rows.push_back({{"size", row.size},
                            {"trials", row.trials},
                            {"successes", row.successes},
                            {"success_fraction", row.success_fraction},
                            {"exponent_logq", row.exponent_logq}});
        json exps = json::array();
        for (const auto& [name, value] : rep.reference_exponents)
            exps.push_back({{"name", name}, {"exponent", value}});
        json j{{"schema_version", kSchemaVersion},
               {"mode", "sample"},
               {"n", cfg.n},
               {"r", cfg.r},
               {"q", f->q()},
               {"seed", rep.seed},
               {"rows", rows},
               {"reference_exponents", exps},
               {"monotonicity_violations", rep.monotonicity_violations}};
        emit(cfg, j.dump(2));
    } else {
        std::ostringstream os;
        os << "threshold experiment at (n,r,q) = (" << cfg.n << "," << cfg.r << "," << f->q()
           << "), seed " << rep.seed << "\n";
        os << "size  log_q(#E)  success fraction\n";
        for (const auto& row : rep.rows)
            os << row.size << "  " << row.exponent_logq << "  " << row.success_fraction << "\n";
        os << "reference exponents (for comparison only):";
        for (const auto& [name, value] : rep.reference_exponents)
            os << " " << name << " = " << value << ";";
        emit(cfg, os.str());
    }
    return 0;
}

int cmd_verify(const RunConfig& cfg, const std::string& suite) {
    const auto reports = verify_suites(suite, cfg.budget);
    bool all_pass = true;
    if (cfg.format == "json") {
        json suites = json::array();
        for (const auto& rep : reports) {
            json checks = json::array();
            for (const auto& c : rep.checks) {
                checks.push_back({{"name", c.name}, {"pass", c.pass}, {"details", c.details}});
                all_pass = all_pass && c.pass;
            }
            suites.push_back({{"suite", rep.suite}, {"checks", checks}, {"pass", rep.all_pass()}});
        }
        emit(cfg, json{{"schema_version", kSchemaVersion}, {"suites", suites}, {"pass", all_pass}}
                      .dump(2));
    } else {
        std::ostringstream os;
        for (const auto& rep : reports) {
            os << "suite " << rep.suite << "\n";
            for (const auto& c : rep.checks) {
                os << "  [" << (c.pass ? "PASS" : "FAIL") << "] " << c.name;
                if (!c.details.empty()) os << "  -- " << c.details;
                os << "\n";
                all_pass = all_pass && c.pass;
            }
        }
        emit(cfg, os.str());
    }
    return all_pass ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact matrix Gauss sums, class types, spheres and distance sets over F_q"};
    app.require_subcommand(1);

    RunConfig cfg;
    app.add_option("--field", cfg.field_spec, "field spec: \"p\", \"p^g\", or \"p^g/c0,c1,...,1\"");
    app.add_option("--n", cfg.n, "matrix dimension n");
    app.add_option("--r", cfg.r, "tuple length r");
    app.add_option("--budget", cfg.budget, "enumeration budget (elements)");
    app.add_option("--seed", cfg.seed, "PRNG seed for sampled experiments");
    app.add_option("--format", cfg.format, "output format: text|json|csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    app.add_option("--out", cfg.out_path, "write output to this path instead of stdout");

    auto* sc_field = app.add_subcommand("field-info", "describe the field");

    std::string a_lit, b_lit;
    auto* sc_classify = app.add_subcommand("classify", "similarity invariants of a matrix");
    sc_classify->add_option("--A", a_lit, "matrix literal, e.g. \"1,0;0,2\"")->required();

    auto* sc_gauss = app.add_subcommand("gauss", "quadratic matrix Gauss sum G(A,B)");
    sc_gauss->add_option("--A", a_lit, "matrix literal")->required();
    sc_gauss->add_option("--B", b_lit, "matrix literal (default 0)");

    std::string t_lit, ft_lit;
    bool brute = false;
    auto* sc_sphere = app.add_subcommand("sphere", "matrix sphere size and Fourier transform");
    sc_sphere->add_option("--T", t_lit, "radius matrix literal")->required();
    sc_sphere->add_flag("--brute", brute, "count by exhaustive enumeration instead of the formula");
    sc_sphere->add_option("--ft", ft_lit, "also evaluate sigma_T^(M) at this tuple (matrices joined by '|')");

    std::uint64_t spectrum_size = 16;
    auto* sc_spectrum = app.add_subcommand("spectrum", "DFT of a seeded random point set");
    sc_spectrum->add_option("--size", spectrum_size, "point-set size");

    unsigned tables_n = 2, tables_r = 0;
    auto* sc_tables = app.add_subcommand("tables", "quadratic class type invariant tables");
    sc_tables->add_option("--n", tables_n, "dimension (2 or 3)");
    sc_tables->add_option("--r", tables_r, "tuple length for the contribution column");

    unsigned l56_n = 3, l56_r = 3;
    auto* sc_lemma = app.add_subcommand("lemma56", "tail-bound ratios over nontrivial types");
    sc_lemma->add_option("--n", l56_n, "dimension");
    sc_lemma->add_option("--r", l56_r, "tuple length");

    std::string sizes_csv, dist_mode = "sample";
    unsigned trials = 3;
    auto* sc_distance = app.add_subcommand("distance", "distance-set experiments");
    sc_distance->add_option("--sizes", sizes_csv, "comma-separated set sizes")->required();
    sc_distance->add_option("--trials", trials, "trials per size");
    sc_distance->add_option("--mode", dist_mode, "sample|incidence")
        ->check(CLI::IsMember({"sample", "incidence"}));

    std::string suite = "all";
    auto* sc_verify = app.add_subcommand("verify", "run verification suites");
    sc_verify->add_option("--suite", suite,
                          "ff|simclass|quadform|gauss|spheres|distance|all");

    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    CLI11_PARSE(app, argc, argv);

    try {
        if (sc_field->parsed()) return cmd_field_info(cfg);
        if (sc_classify->parsed()) return cmd_classify(cfg, a_lit);
        if (sc_gauss->parsed()) return cmd_gauss(cfg, a_lit, b_lit);
        if (sc_sphere->parsed()) return cmd_sphere(cfg, t_lit, brute, ft_lit);
        if (sc_spectrum->parsed()) return cmd_spectrum(cfg, spectrum_size);
        if (sc_tables->parsed()) return cmd_tables(cfg, tables_n, tables_r);
        if (sc_lemma->parsed()) return cmd_lemma56(cfg, l56_n, l56_r);
        if (sc_distance->parsed()) return cmd_distance(cfg, sizes_csv, trials, dist_mode);
        if (sc_verify->parsed()) return cmd_verify(cfg, suite);
    } catch (const BudgetExceededError& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return 3;
    } catch (const MagnitudeMismatchError& e) {
        std::cerr << "verification failure: " << e.what() << "\n";
        return 2;
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 4;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    }
    return 4;
}
