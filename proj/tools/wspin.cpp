// wspin: command-line front end for the W-spin toolkit.
//
// Subcommands: analyze, group, curve, eliminate, bound, solve, profile,
// identity.  Reports are emitted as JSON (default), flattened CSV, or
// "key: value" text; identical flags and seed give byte-identical output.
//
// Exit codes: 0 success, 2 input error (bad flags, unparsable polynomial or
// file), 3 domain error (degenerate polynomial, decoration outside the
// symmetry group, unsupported arity), 4 numeric failure (quadrature failure
// or residue-energy identity violation beyond tolerance).

#include <cmath>
#include <complex>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "wspin/error.hpp"
#include "wspin/orbicurve.hpp"
#include "wspin/polynomial.hpp"
#include "wspin/radial.hpp"
#include "wspin/rational.hpp"
#include "wspin/report_json.hpp"

namespace {

using nlohmann::ordered_json;

struct Options {
    std::string format = "json";
    bool format_given = false;
    std::uint64_t seed = 20240823;
    double tol = 1e-6;
    std::string out;
};

// One CSV field: quote only when the content requires it.
std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string quoted = "\"";
    for (char c : s) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    quoted += '"';
    return quoted;
}

// Flatten a report to "key,value" lines; nested values stay as JSON.
std::string render_csv(const ordered_json& doc) {
    std::string out = "key,value\n";
    for (const auto& [key, value] : doc.items()) {
        const std::string text =
            value.is_string() ? value.get<std::string>() : value.dump();
        out += csv_field(key) + "," + csv_field(text) + "\n";
    }
    return out;
}

std::string render(const ordered_json& doc, const std::string& format) {
    if (format == "json") return doc.dump(2) + "\n";
    if (format == "csv") return render_csv(doc);
    return wspin::render_text(doc);
}

// Writes the rendered payload to --out or stdout.
void emit(const std::string& payload, const Options& opt) {
    if (opt.out.empty()) {
        std::cout << payload;
        return;
    }
    std::ofstream f(opt.out, std::ios::binary);
    if (!f) throw wspin::ParseError("cannot open output file " + opt.out, 0);
    f << payload;
}

void write_file(const std::string& path, const std::string& payload) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw wspin::ParseError("cannot open output file " + path, 0);
    f << payload;
}

std::string read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw wspin::ParseError("cannot read file " + path, 0);
    std::ostringstream buf;
    buf << f.rdbuf();
    return buf.str();
}

// Accepts "re" or "re,im".
std::complex<double> parse_complex(const std::string& text) {
    std::size_t pos = 0;
    double re = 0.0, im = 0.0;
    try {
        re = std::stod(text, &pos);
        if (pos < text.size()) {
            if (text[pos] != ',')
                throw wspin::ParseError("expected ',' in complex value '" + text + "'", pos);
            std::size_t pos2 = 0;
            im = std::stod(text.substr(pos + 1), &pos2);
            if (pos + 1 + pos2 != text.size())
                throw wspin::ParseError("trailing characters in complex value '" + text + "'",
                                        pos + 1 + pos2);
        }
    } catch (const std::invalid_argument&) {
        throw wspin::ParseError("cannot parse complex value '" + text + "'", 0);
    } catch (const std::out_of_range&) {
        throw wspin::ParseError("complex value out of range '" + text + "'", 0);
    }
    return {re, im};
}

ordered_json profile_json(const wspin::RadialProfile& p) {
    ordered_json doc;
    doc["r"] = p.r;
    doc["family"] = wspin::to_string(p.family);
    doc["param"] = p.param;
    doc["rho"] = p.rho;
    doc["u_tilde"] = p.u_tilde;
    std::vector<double> u_norm(p.rho.size());
    for (std::size_t i = 0; i < p.rho.size(); ++i)
        u_norm[i] = p.u_tilde[i] * std::pow(p.rho[i], -1.0 / p.r);
    doc["u_norm"] = u_norm;
    return doc;
}

int run_analyze(const std::string& poly, const Options& opt) {
    const wspin::QHPolynomial w = wspin::parse_poly(poly);
    const ordered_json doc = wspin::analyze_report(w, opt.seed);
    emit(render(doc, opt.format), opt);
    // A refuted nondegeneracy check is a domain error even though the report
    // (with its witness) is still emitted.
    if (doc.at("nondegenerate").is_boolean() && !doc.at("nondegenerate").get<bool>())
        return 3;
    return 0;
}

int run_group(const std::string& poly, const Options& opt) {
    const ordered_json doc = wspin::group_report(wspin::parse_poly(poly));
    emit(render(doc, opt.format), opt);
    return 0;
}

int run_curve(const std::string& file, const std::string& p_text, const Options& opt) {
    nlohmann::json raw;
    try {
        raw = nlohmann::json::parse(read_file(file));
    } catch (const nlohmann::json::exception& e) {
        throw wspin::ParseError(std::string("invalid JSON: ") + e.what(), 0);
    }
    const wspin::SpinCurveSpec spec = wspin::curve_spec_from_json(raw);
    std::optional<wspin::Rational> p;
    if (!p_text.empty()) p = wspin::parse_rational(p_text);
    emit(render(wspin::curve_report(spec, p), opt.format), opt);
    return 0;
}

int run_eliminate(const std::string& poly, const std::string& var, const Options& opt) {
    const ordered_json doc = wspin::eliminate_report(wspin::parse_poly(poly), var);
    emit(render(doc, opt.format), opt);
    return 0;
}

int run_bound(const std::string& poly, const std::vector<std::string>& s_text,
              bool empirical, int samples, const Options& opt) {
    const wspin::QHPolynomial w = wspin::parse_poly(poly);
    ordered_json doc;
    if (empirical) {
        doc = wspin::bound_empirical_report(w, samples, opt.seed);
    } else {
        std::vector<std::complex<double>> s;
        s.reserve(s_text.size());
        for (const auto& v : s_text) s.push_back(parse_complex(v));
        doc = wspin::bound_certified_report(w, s);
    }
    emit(render(doc, opt.format), opt);
    return 0;
}

void check_grid(double rho_min, double rho_max) {
    if (!(rho_min > 0.0) || !(rho_min < rho_max))
        throw wspin::ParseError("grid flags require 0 < rho-min < rho-max", 0);
}

int run_solve(int r, double u0, double rho_min, double rho_max, int count,
              const Options& opt) {
    check_grid(rho_min, rho_max);
    const wspin::RadialProfile profile = wspin::radial_profile(
        r, wspin::RadialFamily::global, u0, rho_min, rho_max, count);
    if (!opt.out.empty()) write_file(opt.out, wspin::profile_csv(profile));
    const ordered_json doc = wspin::identity_report(r, u0);
    std::cout << render(doc, opt.format);
    return doc.at("rel_err").get<double>() > opt.tol ? 4 : 0;
}

int run_profile(int r, wspin::RadialFamily family, double param, double rho_min,
                double rho_max, int count, const Options& opt) {
    check_grid(rho_min, rho_max);
    const wspin::RadialProfile profile =
        wspin::radial_profile(r, family, param, rho_min, rho_max, count);
    // Profiles are tabular, so CSV is the default; JSON is opt-in.
    if (opt.format_given && opt.format == "json")
        emit(render(profile_json(profile), "json"), opt);
    else
        emit(wspin::profile_csv(profile), opt);
    return 0;
}

int run_identity(int r, double u0, const Options& opt) {
    const ordered_json doc = wspin::identity_report(r, u0);
    emit(render(doc, opt.format), opt);
    return doc.at("rel_err").get<double>() > opt.tol ? 4 : 0;
}

// Resolves the default tolerance from WSPIN_DEFAULT_TOL; an explicit --tol
// still wins because CLI11 overwrites the variable after this runs.
double default_tolerance() {
    const char* env = std::getenv("WSPIN_DEFAULT_TOL");
    if (!env || !*env) return 1e-6;
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end == env || *end != '\0' || !(v > 0.0) || !std::isfinite(v)) {
        std::cerr << "warning: ignoring invalid WSPIN_DEFAULT_TOL='" << env << "'\n";
        return 1e-6;
    }
    return v;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"W-spin toolkit: weights, symmetry groups, spin-curve "
                 "bookkeeping, root bounds and radial solutions"};
    app.require_subcommand(1);

    Options opt;
    opt.tol = default_tolerance();

    std::vector<CLI::Option*> format_opts;
    auto add_common = [&](CLI::App* cmd) {
        format_opts.push_back(
            cmd->add_option("--format", opt.format, "Output format")
                ->check(CLI::IsMember({"json", "csv", "text"})));
        cmd->add_option("--seed", opt.seed, "Random seed for sampling runs");
        cmd->add_option("--tol", opt.tol,
                        "Tolerance for identity checks (default 1e-6, or "
                        "WSPIN_DEFAULT_TOL)");
        cmd->add_option("--out", opt.out, "Write output to this file");
    };
    add_common(&app);

    std::string poly, var, curve_file, p_text;
    std::vector<std::string> s_text;
    bool empirical = false, singular = false;
    int samples = 200;
    int r = 0, count = 200;
    double u0 = 0.0, c_param = 0.0, rho_min = 1e-8, rho_max = 1e4;

    auto* analyze = app.add_subcommand("analyze",
        "Weights, growth exponents, admissible ranges and nondegeneracy");
    analyze->add_option("polynomial", poly, "Quasi-homogeneous polynomial")->required();
    add_common(analyze);

    auto* group = app.add_subcommand("group", "Maximal diagonal symmetry group");
    group->add_option("polynomial", poly, "Quasi-homogeneous polynomial")->required();
    add_common(group);

    auto* curve = app.add_subcommand("curve",
        "Classify a decorated spin curve: Ramond marks, bundle degrees, index shifts");
    curve->add_option("spec", curve_file, "Curve spec JSON file")->required();
    curve->add_option("--p", p_text, "Integrability exponent p as a rational, e.g. 5/2");
    add_common(curve);

    auto* eliminate = app.add_subcommand("eliminate",
        "One-variable elimination polynomial of the gradient system");
    eliminate->add_option("polynomial", poly, "Quasi-homogeneous polynomial")->required();
    eliminate->add_option("variable", var, "Variable to keep")->required();
    add_common(eliminate);

    auto* bound = app.add_subcommand("bound",
        "Certified root radii at given gradient values, or empirical sup-ratio probe");
    bound->add_option("polynomial", poly, "Quasi-homogeneous polynomial")->required();
    bound->add_option("--s", s_text,
                      "Gradient values, one per variable, each 're' or 're,im'");
    bound->add_flag("--empirical", empirical, "Monte-Carlo sup-ratio probe instead");
    bound->add_option("--samples", samples, "Samples per radius stage")
        ->check(CLI::PositiveNumber);
    add_common(bound);

    auto add_grid = [&](CLI::App* cmd) {
        cmd->add_option("--rho-min", rho_min, "Smallest grid radius");
        cmd->add_option("--rho-max", rho_max, "Largest grid radius");
        cmd->add_option("--count", count, "Grid point count")->check(CLI::PositiveNumber);
    };

    auto* solve = app.add_subcommand("solve",
        "Solve the radial equation: identity report to stdout, profile CSV to --out");
    solve->add_option("--r", r, "Family index (at least 3)")
        ->required()->check(CLI::Range(3, 1000000));
    solve->add_option("--u0", u0, "Boundary value at rho=0")
        ->required()->check(CLI::PositiveNumber);
    add_grid(solve);
    add_common(solve);

    auto* profile = app.add_subcommand("profile",
        "Sample a radial profile on a logarithmic grid (CSV by default)");
    profile->add_option("--r", r, "Family index (at least 3)")
        ->required()->check(CLI::Range(3, 1000000));
    auto* opt_u0 = profile->add_option("--u0", u0, "Regular profile with this boundary value")
        ->check(CLI::PositiveNumber);
    auto* opt_c = profile->add_option("--c", c_param, "Local model with this constant")
        ->check(CLI::PositiveNumber);
    auto* opt_sing = profile->add_flag("--singular", singular, "Blow-up limit profile");
    opt_u0->excludes(opt_c)->excludes(opt_sing);
    opt_c->excludes(opt_sing);
    add_grid(profile);
    add_common(profile);

    auto* identity = app.add_subcommand("identity",
        "Residue-energy identity check {r, u0, R, E, rel_err}");
    identity->add_option("--r", r, "Family index (at least 3)")
        ->required()->check(CLI::Range(3, 1000000));
    identity->add_option("--u0", u0, "Boundary value at rho=0")
        ->required()->check(CLI::PositiveNumber);
    add_common(identity);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    for (const CLI::Option* o : format_opts)
        if (o->count() > 0) opt.format_given = true;

    try {
        if (*analyze) return run_analyze(poly, opt);
        if (*group) return run_group(poly, opt);
        if (*curve) return run_curve(curve_file, p_text, opt);
        if (*eliminate) return run_eliminate(poly, var, opt);
        if (*bound) {
            if (empirical == !s_text.empty()) {
                std::cerr << "error: bound requires exactly one of --s or --empirical\n";
                return 2;
            }
            return run_bound(poly, s_text, empirical, samples, opt);
        }
        if (*solve) return run_solve(r, u0, rho_min, rho_max, count, opt);
        if (*profile) {
            wspin::RadialFamily family = wspin::RadialFamily::singular;
            double param = 0.0;
            if (opt_u0->count()) {
                family = wspin::RadialFamily::global;
                param = u0;
            } else if (opt_c->count()) {
                family = wspin::RadialFamily::local;
                param = c_param;
            } else if (!singular) {
                std::cerr << "error: profile requires one of --u0, --c, --singular\n";
                return 2;
            }
            return run_profile(r, family, param, rho_min, rho_max, count, opt);
        }
        if (*identity) return run_identity(r, u0, opt);
    } catch (const wspin::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const wspin::ZeroPolynomial& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const wspin::DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const wspin::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    }
    return 0;
}
