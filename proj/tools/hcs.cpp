// hcs: hypercomplex number system workbench.
//
// Subcommands: table, exp, spectrum, verify, catalog. Exit codes: 0 on
// success, 2 on usage/input errors, 3 on verification or numeric failures.
// JSON goes to stdout, diagnostics to stderr. Identical seed and flags give
// byte-identical JSON.

#include <charconv>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "hcs/catalog.hpp"
#include "hcs/exponent.hpp"
#include "hcs/hns.hpp"
#include "hcs/spectral.hpp"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitVerification = 3;

// Input/precondition problems exit 2; numeric failures discovered while
// computing exit 3.
int classify_error(const std::exception& e) {
    if (dynamic_cast<const hcs::ValidationError*>(&e) ||
        dynamic_cast<const hcs::NotFoundError*>(&e) ||
        dynamic_cast<const hcs::SystemMismatchError*>(&e) ||
        dynamic_cast<const hcs::NoUnitError*>(&e))
        return kExitUsage;
    return kExitVerification;
}

struct GlobalOpts {
    std::string catalog_path; // --catalog flag, overrides HCS_CATALOG
    std::string format = "text";
};

std::optional<std::string> active_catalog_path(const GlobalOpts& opts) {
    if (!opts.catalog_path.empty()) return opts.catalog_path;
    if (const char* env = std::getenv("HCS_CATALOG"); env && *env)
        return std::string(env);
    return std::nullopt;
}

// The active catalog: the file named by --catalog/HCS_CATALOG when present,
// extended with any built-ins whose names it does not shadow; otherwise the
// built-ins alone.
hcs::Catalog active_catalog(const GlobalOpts& opts) {
    auto path = active_catalog_path(opts);
    if (!path) return hcs::Catalog::builtins();
    hcs::Catalog cat = hcs::Catalog::load(*path);
    for (auto& s : hcs::builtin_systems())
        if (!cat.contains(s->name())) cat.add(std::move(s));
    return cat;
}

std::vector<double> parse_coeffs(const std::string& text) {
    std::vector<double> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find(',', start);
        if (end == std::string::npos) end = text.size();
        std::string item = text.substr(start, end - start);
        // trim spaces
        const auto a = item.find_first_not_of(" \t");
        const auto b = item.find_last_not_of(" \t");
        if (a == std::string::npos)
            throw hcs::ValidationError("--coeffs: empty entry in \"" + text + "\"");
        item = item.substr(a, b - a + 1);
        try {
            std::size_t used = 0;
            const double v = std::stod(item, &used);
            if (used != item.size()) throw std::invalid_argument(item);
            out.push_back(v);
        } catch (const std::exception&) {
            throw hcs::ValidationError("--coeffs: \"" + item +
                                       "\" is not a decimal number");
        }
        start = end + 1;
        if (end == text.size()) break;
    }
    return out;
}

hcs::HyperNum make_number(const hcs::HnsPtr& system, const std::string& coeffs_text) {
    auto coeffs = parse_coeffs(coeffs_text);
    if (coeffs.size() != system->dim())
        throw hcs::ValidationError("--coeffs: system \"" + system->name() +
                                   "\" needs " + std::to_string(system->dim()) +
                                   " coefficients, got " +
                                   std::to_string(coeffs.size()));
    return hcs::HyperNum(system, std::move(coeffs));
}

std::string render_vector(const std::vector<double>& v) {
    std::string out = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ", ";
        out += hcs::format_double(v[i]);
    }
    return out + "]";
}

json coeffs_json(const std::vector<double>& v) { return json(v); }

// ---------------------------------------------------------------- table --

int cmd_table(const GlobalOpts& opts, const std::string& system_name) {
    auto system = active_catalog(opts).find(system_name);
    const std::size_t n = system->dim();

    std::vector<std::vector<std::string>> cells(n, std::vector<std::string>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            std::vector<double> v(n, 0.0);
            for (const hcs::Term& t : system->cell(i, j)) v[t.basis] += t.coeff;
            cells[i][j] = hcs::natural_form(hcs::HyperNum(system, std::move(v)));
        }

    if (opts.format == "json") {
        json doc{{"system", system->name()}, {"dim", n}, {"table", cells}};
        std::cout << doc.dump(2) << '\n';
        return kExitOk;
    }

    std::vector<std::size_t> width(n);
    for (std::size_t j = 0; j < n; ++j) {
        width[j] = 1 + std::to_string(j + 1).size(); // header "e<j>"
        for (std::size_t i = 0; i < n; ++i)
            width[j] = std::max(width[j], cells[i][j].size());
    }
    std::size_t label_width = system->name().size();
    for (std::size_t i = 0; i < n; ++i)
        label_width = std::max(label_width, 1 + std::to_string(i + 1).size());

    auto pad = [](const std::string& s, std::size_t w) {
        return s + std::string(w - s.size(), ' ');
    };
    std::cout << pad(system->name(), label_width) << " |";
    for (std::size_t j = 0; j < n; ++j)
        std::cout << ' ' << pad("e" + std::to_string(j + 1), width[j]);
    std::cout << '\n';
    for (std::size_t i = 0; i < n; ++i) {
        std::cout << pad("e" + std::to_string(i + 1), label_width) << " |";
        for (std::size_t j = 0; j < n; ++j) std::cout << ' ' << pad(cells[i][j], width[j]);
        std::cout << '\n';
    }
    return kExitOk;
}

// ------------------------------------------------------------------ exp --

int cmd_exp(const GlobalOpts& opts, const std::string& system_name,
            const std::string& coeffs_text, const std::string& method, double tol) {
    auto system = active_catalog(opts).find(system_name);
    const hcs::HyperNum m = make_number(system, coeffs_text);

    if (method == "all") {
        hcs::ExpReport report = hcs::crosscheck_exp(m);
        if (report.results.size() < 2) {
            const std::string reason = report.errors.empty()
                                           ? "no methods applicable"
                                           : report.errors.begin()->second;
            throw hcs::NoUnitError("exp: cannot cross-validate: " + reason);
        }
        if (opts.format == "json") {
            json results;
            for (const auto& [name, value] : report.results)
                results[name] = coeffs_json(value.coeffs());
            json doc{{"system", system->name()},
                     {"coeffs", coeffs_json(m.coeffs())},
                     {"results", results},
                     {"deviation", report.max_pairwise_deviation}};
            if (report.terms_used) doc["terms_used"] = *report.terms_used;
            if (!report.errors.empty()) doc["errors"] = report.errors;
            std::cout << doc.dump(2) << '\n';
        } else {
            std::cout << "system: " << system->name() << '\n'
                      << "coeffs: " << render_vector(m.coeffs()) << '\n';
            for (const auto& [name, value] : report.results) {
                std::cout << name << ": " << render_vector(value.coeffs());
                if (name == "series" && report.terms_used)
                    std::cout << " (terms " << *report.terms_used << ')';
                std::cout << '\n';
            }
            for (const auto& [name, why] : report.errors)
                std::cout << name << ": error: " << why << '\n';
            std::cout << "max deviation: "
                      << hcs::format_double(report.max_pairwise_deviation) << '\n';
        }
        return report.max_pairwise_deviation <= tol ? kExitOk : kExitVerification;
    }

    hcs::HyperNum value = hcs::HyperNum::zero(system);
    std::optional<unsigned> terms;
    if (method == "series") {
        auto r = hcs::exp_series(m);
        value = r.value;
        terms = r.terms_used;
    } else if (method == "matrix") {
        value = hcs::exp_matrix(m);
    } else if (method == "eigen") {
        value = hcs::exp_eigen(m);
    } else if (method == "closed") {
        if (system->dim() == 4)
            value = hcs::exp_closed_g47(m);
        else if (system->dim() == 5)
            value = hcs::exp_closed_g51(m);
        else
            throw hcs::SystemMismatchError(
                "exp: closed form exists only for the 4- and 5-dimensional "
                "cyclic systems");
    } else if (method == "dft") {
        value = hcs::exp_cyclic_dft(m);
    } else {
        throw hcs::ValidationError("exp: unknown method \"" + method + "\"");
    }

    if (opts.format == "json") {
        json doc{{"system", system->name()},
                 {"coeffs", coeffs_json(m.coeffs())},
                 {"results", json{{method, coeffs_json(value.coeffs())}}}};
        if (terms) doc["terms_used"] = *terms;
        std::cout << doc.dump(2) << '\n';
    } else {
        std::cout << "system: " << system->name() << '\n'
                  << "coeffs: " << render_vector(m.coeffs()) << '\n'
                  << method << ": " << render_vector(value.coeffs());
        if (terms) std::cout << " (terms " << *terms << ')';
        std::cout << '\n';
    }
    return kExitOk;
}

// ------------------------------------------------------------- spectrum --

int cmd_spectrum(const GlobalOpts& opts, const std::string& system_name,
                 const std::string& coeffs_text, double pair_tol, unsigned trials,
                 std::uint64_t seed) {
    auto system = active_catalog(opts).find(system_name);
    hcs::IsoSignature sig = hcs::iso_signature(system, trials, seed, pair_tol);

    std::optional<hcs::HyperNum> m;
    std::optional<hcs::Spectrum> spect;
    if (!coeffs_text.empty()) {
        m = make_number(system, coeffs_text);
        spect = hcs::spectrum(*m, pair_tol);
    }

    if (opts.format == "json") {
        json doc{{"system", system->name()}, {"signature", sig.label}};
        if (m) doc["coeffs"] = coeffs_json(m->coeffs());
        if (spect) {
            json pairs = json::array();
            for (const auto& p : spect->pairs)
                pairs.push_back(json::array({p.real(), p.imag()}));
            doc["spectrum"] = json{{"reals", json(spect->reals)}, {"pairs", pairs}};
        }
        std::cout << doc.dump(2) << '\n';
        return kExitOk;
    }

    std::cout << "system: " << system->name() << '\n';
    if (m) std::cout << "coeffs: " << render_vector(m->coeffs()) << '\n';
    if (spect) {
        std::cout << "reals: " << render_vector(spect->reals) << '\n' << "pairs: [";
        for (std::size_t i = 0; i < spect->pairs.size(); ++i) {
            if (i) std::cout << ", ";
            std::cout << hcs::format_double(spect->pairs[i].real()) << '+'
                      << hcs::format_double(spect->pairs[i].imag()) << 'i';
        }
        std::cout << "]\n";
    }
    std::cout << "signature: " << sig.label << '\n';
    return kExitOk;
}

// --------------------------------------------------------------- verify --

struct SuiteResult {
    std::string name;
    bool ran = false;
    std::string skip_reason;
    unsigned passed = 0;
    unsigned total = 0;
    double worst = 0.0;
    double bound = 0.0;
};

int cmd_verify(const GlobalOpts& opts, const std::string& system_name,
               unsigned trials, double tol, std::uint64_t seed) {
    if (trials == 0) throw hcs::ValidationError("verify: --trials must be at least 1");
    auto system = active_catalog(opts).find(system_name);
    const std::size_t n = system->dim();
    hcs::unit_element(system); // Exp undefined without a unit: exit 2 up front

    std::mt19937_64 rng(seed);
    auto sample = [&](double radius) {
        std::uniform_real_distribution<double> dist(-radius, radius);
        std::vector<double> c(n);
        for (double& v : c) v = dist(rng);
        return hcs::HyperNum(system, std::move(c));
    };

    std::vector<SuiteResult> suites;

    { // Every applicable Exp route must agree pairwise within tol.
        SuiteResult s{.name = "method-agreement", .ran = true, .bound = tol};
        for (unsigned t = 0; t < trials; ++t) {
            auto report = hcs::crosscheck_exp(sample(2.0));
            s.worst = std::max(s.worst, report.max_pairwise_deviation);
            ++s.total;
            if (report.results.size() >= 2 && report.within(tol)) ++s.passed;
        }
        suites.push_back(std::move(s));
    }

    {
        SuiteResult s{.name = "homomorphism", .bound = 1e-8};
        if (!hcs::check_properties(system).commutative) {
            s.skip_reason = "system is not commutative";
        } else {
            s.ran = true;
            for (unsigned t = 0; t < trials; ++t) {
                auto a = sample(1.0), b = sample(1.0);
                const double dev = hcs::inf_norm(
                    hcs::sub(hcs::exp_matrix(hcs::add(a, b)),
                             hcs::multiply(hcs::exp_matrix(a), hcs::exp_matrix(b))));
                s.worst = std::max(s.worst, dev);
                ++s.total;
                if (dev <= s.bound) ++s.passed;
            }
        }
        suites.push_back(std::move(s));
    }

    { // Forward difference of Exp(tM) at t = 1 against M*Exp(M).
        const double h = 1e-5;
        SuiteResult s{.name = "ode-derivative", .ran = true, .bound = 10.0 * h};
        for (unsigned t = 0; t < trials; ++t) {
            auto m = sample(0.5);
            auto exp_m = hcs::exp_matrix(m);
            auto exp_mh = hcs::exp_matrix(hcs::scale(m, 1.0 + h));
            const double err = hcs::inf_norm(hcs::sub(
                hcs::scale(hcs::sub(exp_mh, exp_m), 1.0 / h), hcs::multiply(m, exp_m)));
            s.worst = std::max(s.worst, err);
            ++s.total;
            if (err <= s.bound) ++s.passed;
        }
        suites.push_back(std::move(s));
    }

    {
        SuiteResult s{.name = "oracle-spectrum", .bound = 1e-9};
        if (!hcs::is_cyclic_table(*system)) {
            s.skip_reason = "system is not a cyclic group algebra";
        } else {
            s.ran = true;
            for (unsigned t = 0; t < trials; ++t) {
                auto m = sample(2.0);
                auto oracle = hcs::circulant_eigenvalues(m.coeffs());
                double scale_mag = 1.0;
                for (const auto& z : oracle) scale_mag = std::max(scale_mag, std::abs(z));
                const double dev =
                    hcs::multiset_deviation(hcs::spectrum(m).multiset(), oracle) /
                    scale_mag;
                s.worst = std::max(s.worst, dev);
                ++s.total;
                if (dev <= s.bound) ++s.passed;
            }
        }
        suites.push_back(std::move(s));
    }

    bool all_pass = true;
    unsigned passed = 0, total = 0;
    for (const auto& s : suites) {
        if (!s.ran) continue;
        passed += s.passed;
        total += s.total;
        if (s.passed != s.total) all_pass = false;
    }

    if (opts.format == "json") {
        json jsuites;
        for (const auto& s : suites) {
            json entry;
            if (s.ran) {
                entry = json{{"passed", s.passed},
                             {"total", s.total},
                             {"worst", s.worst},
                             {"bound", s.bound}};
            } else {
                entry = json{{"skipped", s.skip_reason}};
            }
            jsuites[s.name] = std::move(entry);
        }
        json doc{{"system", system->name()},
                 {"seed", seed},
                 {"trials", trials},
                 {"suites", jsuites},
                 {"pass", all_pass}};
        std::cout << doc.dump(2) << '\n';
    } else {
        std::cout << "system: " << system->name() << "  seed: " << seed
                  << "  trials: " << trials << '\n';
        for (const auto& s : suites) {
            if (!s.ran) {
                std::cout << s.name << ": skipped (" << s.skip_reason << ")\n";
                continue;
            }
            std::cout << s.name << ": " << s.passed << '/' << s.total << " pass (worst "
                      << hcs::format_double(s.worst) << ", bound "
                      << hcs::format_double(s.bound) << ")\n";
        }
        std::cout << "result: " << (all_pass ? "PASS" : "FAIL") << " (" << passed << '/'
                  << total << ")\n";
    }
    return all_pass ? kExitOk : kExitVerification;
}

// -------------------------------------------------------------- catalog --

void print_catalog_list(const GlobalOpts& opts, const hcs::Catalog& cat) {
    if (opts.format == "json") {
        json names = json::array();
        for (const auto& s : cat.systems())
            names.push_back(json{{"name", s->name()}, {"dim", s->dim()}});
        std::cout << json{{"systems", names}}.dump(2) << '\n';
        return;
    }
    for (const auto& s : cat.systems())
        std::cout << s->name() << " (dim " << s->dim() << ")\n";
}

int cmd_catalog_list(const GlobalOpts& opts) {
    print_catalog_list(opts, active_catalog(opts));
    return kExitOk;
}

int cmd_catalog_export(const GlobalOpts& opts, const std::string& path) {
    hcs::Catalog cat = active_catalog(opts);
    cat.save(path);
    std::cerr << "wrote " << cat.size() << " systems to " << path << '\n';
    return kExitOk;
}

int cmd_catalog_import(const GlobalOpts& opts, const std::string& path_flag) {
    std::string path = path_flag;
    if (path.empty()) {
        if (auto p = active_catalog_path(opts))
            path = *p;
        else
            throw hcs::ValidationError(
                "catalog import: no file given (use --path or HCS_CATALOG)");
    }
    print_catalog_list(opts, hcs::Catalog::load(path));
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"hypercomplex number system workbench"};
    app.require_subcommand(1);

    GlobalOpts opts;
    app.add_option("--catalog", opts.catalog_path,
                   "catalog file to use (overrides HCS_CATALOG)");
    app.add_option("--format", opts.format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();

    std::string system_name, coeffs_text, method = "all", path;
    double tol = 1e-8, pair_tol = 1e-9;
    unsigned trials_spectrum = 8, trials_verify = 200;
    std::uint64_t seed = 1;

    auto* table_cmd = app.add_subcommand("table", "render a multiplication table");
    table_cmd->add_option("--system", system_name, "system name")->required();

    auto* exp_cmd = app.add_subcommand("exp", "hypercomplex exponential");
    exp_cmd->add_option("--system", system_name, "system name")->required();
    exp_cmd->add_option("--coeffs", coeffs_text, "comma-separated coefficients")
        ->required();
    exp_cmd->add_option("--method", method, "series|matrix|eigen|closed|dft|all")
        ->check(CLI::IsMember({"series", "matrix", "eigen", "closed", "dft", "all"}))
        ->capture_default_str();
    exp_cmd->add_option("--tol", tol, "cross-validation tolerance for --method all")
        ->capture_default_str();

    auto* spectrum_cmd =
        app.add_subcommand("spectrum", "eigenvalue structure and signature");
    spectrum_cmd->add_option("--system", system_name, "system name")->required();
    spectrum_cmd->add_option("--coeffs", coeffs_text,
                             "element whose spectrum to print (optional)");
    spectrum_cmd->add_option("--pair-tol", pair_tol, "conjugate-pair tolerance")
        ->capture_default_str();
    spectrum_cmd->add_option("--trials", trials_spectrum, "signature sampling trials")
        ->capture_default_str();
    spectrum_cmd->add_option("--seed", seed, "sampling seed")->capture_default_str();

    auto* verify_cmd = app.add_subcommand("verify", "run the verification suites");
    verify_cmd->add_option("--system", system_name, "system name")->required();
    verify_cmd->add_option("--trials", trials_verify, "trials per suite")
        ->capture_default_str();
    verify_cmd->add_option("--tol", tol, "method-agreement tolerance")
        ->capture_default_str();
    verify_cmd->add_option("--seed", seed, "sampling seed")->capture_default_str();

    auto* catalog_cmd = app.add_subcommand("catalog", "manage system definitions");
    catalog_cmd->require_subcommand(1);
    auto* list_cmd = catalog_cmd->add_subcommand("list", "list available systems");
    auto* export_cmd =
        catalog_cmd->add_subcommand("export", "write the active catalog to a file");
    export_cmd->add_option("--path", path, "output file")->required();
    auto* import_cmd =
        catalog_cmd->add_subcommand("import", "validate and list a catalog file");
    import_cmd->add_option("--path", path, "input file (default: HCS_CATALOG)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*table_cmd) return cmd_table(opts, system_name);
        if (*exp_cmd) return cmd_exp(opts, system_name, coeffs_text, method, tol);
        if (*spectrum_cmd)
            return cmd_spectrum(opts, system_name, coeffs_text, pair_tol,
                                trials_spectrum, seed);
        if (*verify_cmd) return cmd_verify(opts, system_name, trials_verify, tol, seed);
        if (*catalog_cmd) {
            if (*list_cmd) return cmd_catalog_list(opts);
            if (*export_cmd) return cmd_catalog_export(opts, path);
            if (*import_cmd) return cmd_catalog_import(opts, path);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return classify_error(e);
    }
    return kExitUsage;
}
