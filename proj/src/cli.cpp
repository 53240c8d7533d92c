#include "umbral/cli.hpp"

#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "umbral/grid.hpp"
#include "umbral/io.hpp"
#include "umbral/registry.hpp"
#include "umbral/report.hpp"
#include "umbral/sequences.hpp"

#include "CLI11.hpp"
#include "json.hpp"

namespace umbral {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ---- shared option plumbing -------------------------------------------------

struct TableOptions {
    std::string family;
    std::optional<int> k;
    std::optional<std::string> lambda;
    std::optional<long> mu;
    std::optional<int> s;
    int n_max = 8;
    std::string format = "text";
    std::string output;
};

struct VerifyOptions {
    std::string identities;  // comma list; empty with all=false is an error
    bool all = false;
    std::string grid_file;
    std::string k_list, lambda_list, mu_list, s_list, y_list;
    std::optional<int> n_max;
    std::string output;
    bool mu_certify = false;
};

struct ErrataOptions {
    std::string grid_file;
    std::optional<int> n_max;
    std::string output;
};

struct ExportOptions {
    std::string output_dir;
    std::string format = "json";
    std::string grid_file;
    std::optional<int> n_max;
};

template <typename T>
std::vector<T> parse_int_list(const std::string& text, const char* what) {
    std::vector<T> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            out.push_back(static_cast<T>(std::stol(item)));
        } catch (const std::exception&) {
            throw UsageError(std::string(what) + ": cannot parse integer '" + item + "'");
        }
    }
    if (out.empty()) throw UsageError(std::string(what) + ": empty list");
    return out;
}

std::vector<Rational> parse_rational_list(const std::string& text, const char* what) {
    std::vector<Rational> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            out.push_back(Rational::parse(item));
        } catch (const std::exception&) {
            throw UsageError(std::string(what) + ": cannot parse rational '" + item + "'");
        }
    }
    if (out.empty()) throw UsageError(std::string(what) + ": empty list");
    return out;
}

GridConfig load_grid(const std::string& grid_file) {
    if (grid_file.empty()) return GridConfig::defaults();
    std::ifstream in(grid_file);
    if (!in) throw UsageError("cannot open grid file '" + grid_file + "'");
    nlohmann::json j;
    try {
        in >> j;
        return GridConfig::from_json(j);
    } catch (const UsageError&) {
        throw;
    } catch (const std::exception& e) {
        throw UsageError("invalid grid file '" + grid_file + "': " + e.what());
    }
}

void write_or_print(const std::string& output, const std::string& text, std::ostream& out) {
    if (output.empty()) {
        out << text;
        return;
    }
    std::ofstream file(output);
    if (!file) throw UsageError("cannot write output file '" + output + "'");
    file << text;
}

// ---- table -------------------------------------------------------------------

struct FamilyTable {
    nlohmann::ordered_json params;
    std::vector<Polynomial> rows;
};

int require_k(const TableOptions& opt) {
    if (!opt.k) throw UsageError("family '" + opt.family + "' requires --k");
    return *opt.k;
}

Rational require_lambda(const TableOptions& opt) {
    if (!opt.lambda) throw UsageError("family '" + opt.family + "' requires --lambda");
    try {
        return Rational::parse(*opt.lambda);
    } catch (const std::exception&) {
        throw UsageError("cannot parse --lambda '" + *opt.lambda + "'");
    }
}

long require_mu(const TableOptions& opt) {
    if (!opt.mu) throw UsageError("family '" + opt.family + "' requires --mu");
    return *opt.mu;
}

int require_s(const TableOptions& opt) {
    if (!opt.s) throw UsageError("family '" + opt.family + "' requires --s (the order)");
    if (*opt.s < 0) throw UsageError("--s must be nonnegative");
    return *opt.s;
}

FamilyTable family_table(const TableOptions& opt) {
    const std::string& family = opt.family;
    const int n = opt.n_max;
    FamilyTable t;
    if (family == "peters") {
        Rational lambda = require_lambda(opt);
        long mu = require_mu(opt);
        t.params["lambda"] = lambda.str();
        t.params["mu"] = mu;
        t.rows = peters_polys(lambda, mu, n);
    } else if (family == "boole") {
        Rational lambda = require_lambda(opt);
        t.params["lambda"] = lambda.str();
        t.rows = peters_polys(lambda, 1, n);
    } else if (family == "changhee") {
        t.rows = peters_polys(Rational(1), 1, n);
    } else if (family == "poly-cauchy1") {
        int k = require_k(opt);
        t.params["k"] = k;
        t.rows = poly_cauchy1_polys(k, n);
    } else if (family == "poly-cauchy2") {
        int k = require_k(opt);
        t.params["k"] = k;
        t.rows = poly_cauchy2_polys(k, n);
    } else if (family == "bernoulli") {
        int s = require_s(opt);
        t.params["s"] = s;
        t.rows = bernoulli_polys(s, n);
    } else if (family == "frobenius-euler") {
        int s = require_s(opt);
        Rational lambda = require_lambda(opt);
        if (lambda == Rational(1)) throw UsageError("frobenius-euler requires lambda != 1");
        t.params["s"] = s;
        t.params["lambda"] = lambda.str();
        t.rows = frobenius_euler_polys(s, lambda, n);
    } else if (family == "cauchy1") {
        int s = require_s(opt);
        t.params["s"] = s;
        t.rows = cauchy1_polys(s, n);
    } else if (family == "cauchy2") {
        int s = require_s(opt);
        t.params["s"] = s;
        t.rows = cauchy2_polys(s, n);
    } else if (family == "cp" || family == "cphat") {
        MixedParams p{require_k(opt), require_lambda(opt), require_mu(opt)};
        t.params["k"] = p.k;
        t.params["lambda"] = p.lambda.str();
        t.params["mu"] = p.mu;
        t.rows = family == "cp" ? cp_oracle(p, n) : cphat_oracle(p, n);
    } else if (family == "falling" || family == "rising") {
        for (int i = 0; i <= n; ++i) {
            t.rows.push_back(family == "falling" ? falling_poly(i) : rising_poly(i));
        }
    } else {
        throw UsageError("unknown family '" + family + "'");
    }
    return t;
}

std::string render_table(const std::string& family, const FamilyTable& t,
                         const std::string& format) {
    std::string text;
    if (format == "json") {
        nlohmann::ordered_json rows = nlohmann::ordered_json::array();
        for (int i = 0; i < static_cast<int>(t.rows.size()); ++i) {
            rows.push_back(polynomial_row_to_json(family, t.params, i,
                                                  t.rows[static_cast<std::size_t>(i)]));
        }
        text = rows.dump(2);
        text += "\n";
    } else if (format == "csv" || format == "text") {
        const std::string sep = format == "csv" ? "," : ", ";
        for (int i = 0; i < static_cast<int>(t.rows.size()); ++i) {
            text += coefficient_row(t.rows[static_cast<std::size_t>(i)], i + 1, sep);
            text += "\n";
        }
    } else {
        throw UsageError("unknown format '" + format + "' (expected json, csv or text)");
    }
    return text;
}

int cmd_table(const TableOptions& opt, std::ostream& out) {
    if (opt.n_max < 0) throw UsageError("--n must be nonnegative");
    FamilyTable t = family_table(opt);
    write_or_print(opt.output, render_table(opt.family, t, opt.format), out);
    return 0;
}

// ---- verify -------------------------------------------------------------------

std::vector<std::string> resolve_identity_ids(const VerifyOptions& opt) {
    std::vector<std::string> ids;
    if (opt.all) {
        for (const auto& d : identity_registry()) ids.push_back(d.id);
        return ids;
    }
    if (opt.identities.empty()) {
        throw UsageError("verify: pass --identities <comma list> or --all");
    }
    std::stringstream ss(opt.identities);
    std::string item;
    std::vector<std::string> requested;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        if (!find_identity(item)) throw UsageError("unknown identity '" + item + "'");
        requested.push_back(item);
    }
    if (requested.empty()) throw UsageError("verify: empty identity list");
    // Canonical registry order keeps reports byte-identical for a given set.
    for (const auto& d : identity_registry()) {
        for (const auto& r : requested) {
            if (d.id == r) {
                ids.push_back(d.id);
                break;
            }
        }
    }
    return ids;
}

GridConfig verify_grid(const VerifyOptions& opt) {
    GridConfig grid = load_grid(opt.grid_file);
    if (!opt.k_list.empty()) grid.k_values = parse_int_list<int>(opt.k_list, "--k");
    if (!opt.lambda_list.empty()) {
        grid.lambda_values = parse_rational_list(opt.lambda_list, "--lambda");
    }
    if (!opt.mu_list.empty()) grid.mu_values = parse_int_list<long>(opt.mu_list, "--mu");
    if (!opt.s_list.empty()) grid.s_values = parse_int_list<int>(opt.s_list, "--s");
    if (!opt.y_list.empty()) grid.y_values = parse_rational_list(opt.y_list, "--y");
    // The flag may lower n_max to 0 (trivially verified degenerate runs);
    // only grid files are held to the n_max >= 1 invariant.
    if (opt.n_max) grid.n_max = *opt.n_max;
    if (grid.n_max < 0) throw UsageError("--n-max must be nonnegative");
    return grid;
}

bool lambda_applicable(const IdentityDescriptor& desc, const Rational& lambda) {
    if (desc.lambda_must_be_one && lambda != Rational(1)) return false;
    if (desc.lambda_must_differ_from_one && lambda == Rational(1)) return false;
    // The T4/T5-style displays are stated with explicit inverse powers
    // of lambda, so lambda = 0 points cannot exercise them.
    if ((desc.id == "T4" || desc.id == "R43" || desc.id == "T5" || desc.id == "R51") &&
        lambda.is_zero()) {
        return false;
    }
    return true;
}

struct VerifyOutcome {
    nlohmann::ordered_json entries = nlohmann::ordered_json::array();
    int verified = 0;
    int errata_resolved = 0;
    int failed = 0;
};

void verify_one_point(const IdentityDescriptor& desc, const MixedParams& params, int n_max,
                      const AuxValues& aux, VerifyOutcome& outcome) {
    IdentityReport stated = identity_eval(desc.id, params, n_max, aux);
    nlohmann::ordered_json entry = stated.to_json();
    if (stated.verified()) {
        outcome.verified += 1;
    } else if (desc.suite == Suite::B && !desc.correction.empty()) {
        IdentityReport corrected = identity_eval(desc.id, params, n_max, aux, true);
        nlohmann::ordered_json fix;
        fix["description"] = desc.correction;
        fix["status"] = corrected.status;
        if (corrected.first_fail) {
            fix["first_fail"] = corrected.to_json()["first_fail"];
        }
        entry["correction"] = fix;
        if (corrected.verified()) {
            entry["status"] = "errata-resolved";
            outcome.errata_resolved += 1;
        } else {
            outcome.failed += 1;
        }
    } else {
        outcome.failed += 1;
    }
    outcome.entries.push_back(std::move(entry));
}

int cmd_verify(const VerifyOptions& opt, std::ostream& out) {
    GridConfig grid = verify_grid(opt);
    std::vector<std::string> ids = resolve_identity_ids(opt);

    VerifyOutcome outcome;
    for (const auto& id : ids) {
        const IdentityDescriptor& desc = *find_identity(id);
        bool any_point = false;
        for (const auto& lambda : grid.lambda_values) {
            if (!lambda_applicable(desc, lambda)) continue;
            for (int k : grid.k_values) {
                for (long mu : grid.mu_values) {
                    MixedParams params{k, lambda, mu};
                    if (desc.uses_s) {
                        for (int s : grid.s_values) {
                            AuxValues aux;
                            aux.s = s;
                            verify_one_point(desc, params, grid.n_max, aux, outcome);
                            any_point = true;
                        }
                    } else if (desc.uses_y) {
                        for (const auto& y : grid.y_values) {
                            AuxValues aux;
                            aux.y = y;
                            verify_one_point(desc, params, grid.n_max, aux, outcome);
                            any_point = true;
                        }
                    } else {
                        verify_one_point(desc, params, grid.n_max, {}, outcome);
                        any_point = true;
                    }
                }
            }
        }
        if (!any_point) {
            // A constrained identity with no applicable grid point is
            // reported, never silently dropped, and fails the run.
            nlohmann::ordered_json entry;
            entry["id"] = id;
            entry["status"] = "skipped-no-applicable-grid-point";
            outcome.entries.push_back(std::move(entry));
            outcome.failed += 1;
        }
    }

    nlohmann::ordered_json certificates = nlohmann::ordered_json::array();
    if (opt.mu_certify) {
        for (const auto& id : ids) {
            const IdentityDescriptor& desc = *find_identity(id);
            AuxValues aux;
            if (desc.uses_s) aux.s = grid.s_values.front();
            if (desc.uses_y) aux.y = grid.y_values.front();
            Rational lambda(1, 2);
            if (!lambda_applicable(desc, lambda)) lambda = Rational(1);
            IdentityReport cert = mu_certification(id, 2, lambda, 5, aux);
            if (!cert.verified()) outcome.failed += 1;
            certificates.push_back(cert.to_json());
        }
    }

    nlohmann::ordered_json report;
    report["grid"] = grid.to_json();
    report["identities"] = ids;
    report["results"] = std::move(outcome.entries);
    nlohmann::ordered_json summary;
    summary["total"] = outcome.verified + outcome.errata_resolved + outcome.failed;
    summary["verified"] = outcome.verified;
    summary["errata_resolved"] = outcome.errata_resolved;
    summary["failed"] = outcome.failed;
    report["summary"] = summary;
    if (opt.mu_certify) report["mu_certificates"] = std::move(certificates);

    write_or_print(opt.output, report.dump(2) + "\n", out);
    return outcome.failed == 0 ? 0 : 1;
}

// ---- errata -------------------------------------------------------------------

int cmd_errata(const ErrataOptions& opt, std::ostream& out) {
    GridConfig grid = load_grid(opt.grid_file);
    if (opt.n_max) grid.n_max = *opt.n_max;

    std::ostringstream doc;
    doc << "errata review: stated forms vs corrected forms (suite B)\n";
    doc << "grid: " << grid.to_json().dump() << "\n\n";
    int unresolved = 0;
    for (const auto& desc : identity_registry()) {
        if (desc.suite != Suite::B) continue;
        // First failing point of the stated form, if any.
        std::optional<IdentityReport> witness;
        bool stated_ok = true;
        for (const auto& lambda : grid.lambda_values) {
            if (!lambda_applicable(desc, lambda)) continue;
            for (int k : grid.k_values) {
                for (long mu : grid.mu_values) {
                    MixedParams params{k, lambda, mu};
                    std::vector<AuxValues> auxes;
                    if (desc.uses_s) {
                        for (int s : grid.s_values) {
                            AuxValues a;
                            a.s = s;
                            auxes.push_back(a);
                        }
                    } else if (desc.uses_y) {
                        for (const auto& y : grid.y_values) {
                            AuxValues a;
                            a.y = y;
                            auxes.push_back(a);
                        }
                    } else {
                        auxes.push_back({});
                    }
                    for (const auto& aux : auxes) {
                        IdentityReport r = identity_eval(desc.id, params, grid.n_max, aux);
                        if (!r.verified() && !witness) {
                            witness = r;
                            stated_ok = false;
                        }
                    }
                }
            }
        }

        doc << "identity " << desc.id << "\n";
        doc << "  statement: " << desc.statement << "\n";
        if (stated_ok) {
            doc << "  stated form: verified exactly over the grid\n";
            doc << "  correction: none needed\n\n";
            continue;
        }
        const auto& fail = *witness;
        doc << "  stated form: FAILED first at (k=" << fail.params.k
            << ", lambda=" << fail.params.lambda.str() << ", mu=" << fail.params.mu << ")";
        for (const auto& [key, value] : fail.aux) doc << ", " << key << "=" << value;
        if (fail.first_fail) {
            doc << ", n=" << fail.first_fail->n;
            if (fail.first_fail->m) doc << ", m=" << *fail.first_fail->m;
            doc << ", coefficient " << fail.first_fail->coeff_index << ": lhs="
                << fail.first_fail->lhs << " rhs=" << fail.first_fail->rhs;
        }
        doc << "\n";
        if (desc.correction.empty()) {
            doc << "  correction: NONE REGISTERED (unresolved)\n\n";
            unresolved += 1;
            continue;
        }
        doc << "  proposed correction: " << desc.correction << "\n";
        // Re-run the corrected form at the witness point and across the grid.
        bool corrected_ok = true;
        std::optional<IdentityReport> corrected_witness;
        for (const auto& lambda : grid.lambda_values) {
            if (!lambda_applicable(desc, lambda)) continue;
            for (int k : grid.k_values) {
                for (long mu : grid.mu_values) {
                    MixedParams params{k, lambda, mu};
                    std::vector<AuxValues> auxes;
                    if (desc.uses_s) {
                        for (int s : grid.s_values) {
                            AuxValues a;
                            a.s = s;
                            auxes.push_back(a);
                        }
                    } else if (desc.uses_y) {
                        for (const auto& y : grid.y_values) {
                            AuxValues a;
                            a.y = y;
                            auxes.push_back(a);
                        }
                    } else {
                        auxes.push_back({});
                    }
                    for (const auto& aux : auxes) {
                        IdentityReport r = identity_eval(desc.id, params, grid.n_max, aux, true);
                        if (!r.verified()) {
                            corrected_ok = false;
                            if (!corrected_witness) corrected_witness = r;
                        }
                    }
                }
            }
        }
        if (corrected_ok) {
            doc << "  corrected form: verified exactly over the grid\n\n";
        } else {
            unresolved += 1;
            doc << "  corrected form: STILL FAILING";
            if (corrected_witness && corrected_witness->first_fail) {
                doc << " (n=" << corrected_witness->first_fail->n << ", coefficient "
                    << corrected_witness->first_fail->coeff_index << ")";
            }
            doc << "\n\n";
        }
    }
    doc << "unresolved: " << unresolved << "\n";
    write_or_print(opt.output, doc.str(), out);
    return unresolved == 0 ? 0 : 1;
}

// ---- export -------------------------------------------------------------------

std::string filename_token(const Rational& r) {
    std::string s = r.str();
    std::string out;
    for (char c : s) {
        if (c == '-') out += 'n';
        else if (c == '/') out += 'd';
        else out += c;
    }
    return out;
}

int cmd_export(const ExportOptions& opt, std::ostream& out) {
    if (opt.output_dir.empty()) throw UsageError("export: --output <directory> is required");
    GridConfig grid = load_grid(opt.grid_file);
    if (opt.n_max) grid.n_max = *opt.n_max;
    std::filesystem::create_directories(opt.output_dir);

    const std::string ext = opt.format == "json" ? ".json" : (opt.format == "csv" ? ".csv" : ".txt");
    int files = 0;
    auto emit = [&](const std::string& family, const std::string& stem, const TableOptions& topt) {
        FamilyTable t = family_table(topt);
        std::string text = render_table(family, t, opt.format);
        std::filesystem::path path = std::filesystem::path(opt.output_dir) / (stem + ext);
        std::ofstream file(path);
        if (!file) throw UsageError("cannot write '" + path.string() + "'");
        file << text;
        files += 1;
    };

    // Peters-type families exercise lambda = 0 as well; it is a valid
    // (constant-prefactor) degenerate point for tables even though the
    // stated T4/T5-style identities cannot be evaluated there.
    std::vector<Rational> lambdas_with_zero = grid.lambda_values;
    bool has_zero = false;
    for (const auto& l : lambdas_with_zero) has_zero = has_zero || l.is_zero();
    if (!has_zero) lambdas_with_zero.push_back(Rational(0));

    TableOptions base;
    base.n_max = grid.n_max;
    base.format = opt.format;

    for (const auto& family : {"cp", "cphat"}) {
        for (int k : grid.k_values) {
            for (const auto& lambda : lambdas_with_zero) {
                for (long mu : grid.mu_values) {
                    TableOptions topt = base;
                    topt.family = family;
                    topt.k = k;
                    topt.lambda = lambda.str();
                    topt.mu = mu;
                    emit(family, std::string(family) + "_k" + std::to_string(k) + "_lam" +
                                     filename_token(lambda) + "_mu" + std::to_string(mu),
                         topt);
                }
            }
        }
    }
    for (const auto& lambda : lambdas_with_zero) {
        for (long mu : grid.mu_values) {
            TableOptions topt = base;
            topt.family = "peters";
            topt.lambda = lambda.str();
            topt.mu = mu;
            emit("peters", "peters_lam" + filename_token(lambda) + "_mu" + std::to_string(mu),
                 topt);
        }
        TableOptions boole = base;
        boole.family = "boole";
        boole.lambda = lambda.str();
        emit("boole", "boole_lam" + filename_token(lambda), boole);
    }
    {
        TableOptions topt = base;
        topt.family = "changhee";
        emit("changhee", "changhee", topt);
    }
    for (const auto& family : {"poly-cauchy1", "poly-cauchy2"}) {
        for (int k : grid.k_values) {
            TableOptions topt = base;
            topt.family = family;
            topt.k = k;
            emit(family, std::string(family) + "_k" + std::to_string(k), topt);
        }
    }
    for (const auto& family : {"bernoulli", "cauchy1", "cauchy2"}) {
        for (int s : grid.s_values) {
            TableOptions topt = base;
            topt.family = family;
            topt.s = s;
            emit(family, std::string(family) + "_s" + std::to_string(s), topt);
        }
    }
    for (int s : grid.s_values) {
        for (const auto& lambda : grid.lambda_values) {
            if (lambda == Rational(1)) continue;
            TableOptions topt = base;
            topt.family = "frobenius-euler";
            topt.s = s;
            topt.lambda = lambda.str();
            emit("frobenius-euler",
                 "frobenius-euler_s" + std::to_string(s) + "_lam" + filename_token(lambda), topt);
        }
    }
    for (const auto& family : {"falling", "rising"}) {
        TableOptions topt = base;
        topt.family = family;
        emit(family, family, topt);
    }
    out << "exported " << files << " tables to " << opt.output_dir << "\n";
    return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact umbral-calculus kernel for Peters / poly-Cauchy mixed-type families"};
    app.require_subcommand(1);

    TableOptions topt;
    auto* table = app.add_subcommand("table", "print exact coefficient tables for a family");
    table->add_option("--family", topt.family,
                      "peters | boole | changhee | poly-cauchy1 | poly-cauchy2 | bernoulli | "
                      "frobenius-euler | cauchy1 | cauchy2 | cp | cphat | falling | rising")
        ->required();
    table->add_option("--k", topt.k, "polylog-factorial index");
    table->add_option("--lambda", topt.lambda, "rational parameter, e.g. 1/2 or -3");
    table->add_option("--mu", topt.mu, "integer parameter");
    table->add_option("--s", topt.s, "order parameter for higher-order families");
    table->add_option("--n,--n-max", topt.n_max, "rows 0..n (default 8)");
    table->add_option("--format", topt.format, "json | csv | text (default text)");
    table->add_option("--output", topt.output, "write to file instead of stdout");

    VerifyOptions vopt;
    auto* verify = app.add_subcommand("verify", "verify registered identities over a grid");
    verify->add_option("--identities", vopt.identities, "comma-separated identity ids");
    verify->add_flag("--all", vopt.all, "verify every registered identity");
    verify->add_option("--grid", vopt.grid_file, "JSON grid config file");
    verify->add_option("--k", vopt.k_list, "override grid k list (comma separated)");
    verify->add_option("--lambda", vopt.lambda_list, "override grid lambda list");
    verify->add_option("--mu", vopt.mu_list, "override grid mu list");
    verify->add_option("--s", vopt.s_list, "override grid s list");
    verify->add_option("--y", vopt.y_list, "override grid y list");
    int vnmax = -1;
    verify->add_option("--n-max", vnmax, "override grid n_max");
    verify->add_option("--output", vopt.output, "write JSON report to file");
    verify->add_flag("--mu-certify", vopt.mu_certify,
                     "append exactness-in-mu certificates at (k=2, lambda=1/2, n=5)");

    ErrataOptions eopt;
    auto* errata = app.add_subcommand("errata",
                                      "evaluate stated vs corrected forms and emit the errata document");
    errata->add_option("--grid", eopt.grid_file, "JSON grid config file");
    int enmax = -1;
    errata->add_option("--n-max", enmax, "override grid n_max");
    errata->add_option("--output", eopt.output, "write document to file");

    ExportOptions xopt;
    auto* exporter = app.add_subcommand("export", "write tables for every family over the grid");
    exporter->add_option("--output", xopt.output_dir, "target directory")->required();
    exporter->add_option("--format", xopt.format, "json | csv | text (default json)");
    exporter->add_option("--grid", xopt.grid_file, "JSON grid config file");
    int xnmax = -1;
    exporter->add_option("--n-max", xnmax, "override grid n_max");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*table) return cmd_table(topt, out);
        if (*verify) {
            if (vnmax >= 0) vopt.n_max = vnmax;
            return cmd_verify(vopt, out);
        }
        if (*errata) {
            if (enmax >= 0) eopt.n_max = enmax;
            return cmd_errata(eopt, out);
        }
        if (*exporter) {
            if (xnmax >= 0) xopt.n_max = xnmax;
            return cmd_export(xopt, out);
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 1;
    }
    err << "error: no command\n";
    return 2;
}

}  // namespace umbral
