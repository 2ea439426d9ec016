#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <doctest.h>
#include <nlohmann/json.hpp>

#include "support/cli_runner.hpp"
#include "support/schema_check.hpp"
#include "wspin/radial.hpp"

using nlohmann::json;
using wspin_test::CliResult;
using wspin_test::load_schema;
using wspin_test::matches_schema;
using wspin_test::run_cli;

namespace {

void check_schema(const char* schema_name, const json& doc) {
    std::string why;
    const bool ok = matches_schema(load_schema(schema_name), doc, &why);
    INFO(schema_name << ": " << why << "\n" << doc.dump(2));
    CHECK(ok);
}

// Writes a scratch input file and returns its path.
std::string scratch_file(const std::string& name, const std::string& content) {
    const std::string path = "/tmp/wspin_cli_" + name;
    std::ofstream f(path, std::ios::binary);
    f << content;
    return path;
}

const char* kA2Spec = R"({
  "genus": 0,
  "superpotential": "x^3",
  "marks": [
    {"label": "p1", "phases": ["1/3"]},
    {"label": "p2", "phases": ["1/3"]},
    {"label": "p3", "phases": ["2/3"]}
  ]
})";

const char* kD4Spec = R"({
  "genus": 0,
  "superpotential": "x^3+x*y^2",
  "marks": [
    {"label": "a", "phases": ["0", "1/2"]},
    {"label": "b", "phases": ["0", "1/2"]}
  ]
})";

}  // namespace

TEST_CASE("analyze: pinned growth data and schema") {
    const CliResult res = run_cli({"analyze", "x^3+x*y^3"});
    REQUIRE(res.exit_code == 0);
    const json doc = json::parse(res.out);
    check_schema("analyze", doc);
    CHECK(doc["q"] == json({"1/3", "2/9"}));
    CHECK(doc["kappa_i"] == json({"1", "2/5"}));
    CHECK(doc["lp_sup"] == json({"2", "5"}));
    CHECK(doc["lp1_sup"] == "18/7");
    CHECK(doc["nondegenerate"] == true);

    const CliResult quintic = run_cli({"analyze", "x^5"});
    REQUIRE(quintic.exit_code == 0);
    const json qdoc = json::parse(quintic.out);
    CHECK(qdoc["lp_sup"] == json({"6"}));
    CHECK(qdoc["lp1_sup"] == "5/2");
}

TEST_CASE("analyze: degenerate input exits 3 but still reports") {
    const CliResult res = run_cli({"analyze", "x^2*y^2+x^4", "--seed", "42"});
    CHECK(res.exit_code == 3);
    const json doc = json::parse(res.out);
    check_schema("analyze", doc);
    CHECK(doc["nondegenerate"] == false);
    REQUIRE(doc.contains("witness"));
    CHECK(doc["witness"].size() == 2);
}

TEST_CASE("analyze: input errors exit 2, weight failures exit 3") {
    CHECK(run_cli({"analyze", "x^3+??"}).exit_code == 2);
    CHECK(run_cli({"analyze", ""}).exit_code == 2);
    const CliResult nosys = run_cli({"analyze", "x^2+y^3+x*y"});
    CHECK(nosys.exit_code == 3);
    CHECK(nosys.err.find("error:") != std::string::npos);
    CHECK(run_cli({"analyze", "x*y"}).exit_code == 3);
}

TEST_CASE("group: full enumeration with exact phases") {
    const CliResult res = run_cli({"group", "x^3+x*y^2"});
    REQUIRE(res.exit_code == 0);
    const json doc = json::parse(res.out);
    check_schema("group", doc);
    CHECK(doc["order"] == 6);
    bool found = false;
    for (const auto& element : doc["elements"])
        if (element == json({"1/3", "5/6"})) found = true;
    CHECK(found);
}

TEST_CASE("eliminate: pinned certificate and failure modes") {
    const CliResult res = run_cli({"eliminate", "x^3+x*y^2", "x"});
    REQUIRE(res.exit_code == 0);
    const json doc = json::parse(res.out);
    check_schema("eliminate", doc);
    CHECK(doc["elimination"] == "12*x^4 - 4*s1*x^2 + s2^2");
    CHECK(doc["degree"] == 4);

    // Unknown variable and too many variables are domain errors.
    CHECK(run_cli({"eliminate", "x^3+x*y^2", "z"}).exit_code == 3);
    CHECK(run_cli({"eliminate", "x^2*y+y^2*z+z^2*x", "x"}).exit_code == 3);
}

TEST_CASE("bound: certified radii at pinned gradient values") {
    const CliResult res =
        run_cli({"bound", "x^3", "--s", "3"});
    REQUIRE(res.exit_code == 0);
    const json doc = json::parse(res.out);
    check_schema("bound_certified", doc);
    CHECK(doc["D"][0].get<double>() == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(doc["C"][0].get<double>() == doctest::Approx(1.0).epsilon(1e-12));

    const CliResult d4 =
        run_cli({"bound", "x^3+x*y^2", "--s", "1", "--s", "0,2"});
    REQUIRE(d4.exit_code == 0);
    const json ddoc = json::parse(d4.out);
    check_schema("bound_certified", ddoc);
    REQUIRE(ddoc["D"].size() == 2);
    for (const auto& v : ddoc["D"]) CHECK(v.get<double>() > 0.0);
}

TEST_CASE("bound: empirical probe flags the degenerate direction") {
    const CliResult res = run_cli(
        {"bound", "x^2*y^2+x^4", "--empirical", "--seed", "42", "--samples", "200"});
    REQUIRE(res.exit_code == 0);
    const json doc = json::parse(res.out);
    check_schema("bound_empirical", doc);
    bool unbounded = false;
    for (const auto& v : doc["verdict"])
        if (v == "unbounded") unbounded = true;
    CHECK(unbounded);

    const CliResult good =
        run_cli({"bound", "x^3+y^4", "--empirical", "--samples", "200"});
    REQUIRE(good.exit_code == 0);
    for (const auto& v : json::parse(good.out)["verdict"])
        CHECK(v == "stabilized");
}

TEST_CASE("bound: exactly one of --s and --empirical") {
    CHECK(run_cli({"bound", "x^3"}).exit_code == 2);
    CHECK(run_cli({"bound", "x^3", "--s", "1", "--empirical"}).exit_code == 2);
}

TEST_CASE("curve: pinned sphere reports") {
    const std::string a2 = scratch_file("a2.json", kA2Spec);
    const CliResult res = run_cli({"curve", a2, "--p", "5/2"});
    REQUIRE(res.exit_code == 0);
    const json doc = json::parse(res.out);
    check_schema("curve", doc);
    CHECK(doc["degrees"] == json({"-1"}));
    CHECK(doc["admissible"] == true);
    CHECK(doc["p"] == "5/2");
    CHECK(doc["index_shift"]["x"] == 0);

    const std::string d4 = scratch_file("d4.json", kD4Spec);
    const CliResult dres = run_cli({"curve", d4, "--p", "3"});
    REQUIRE(dres.exit_code == 0);
    const json ddoc = json::parse(dres.out);
    check_schema("curve", ddoc);
    CHECK(ddoc["marks"][0]["ramond"] == json({true, false}));
    CHECK(ddoc["index_shift"]["x"] == 2);
    CHECK(ddoc["index_shift"]["y"].is_null());

    // The input files themselves satisfy the published input schema.
    check_schema("curve_spec", json::parse(std::string(kA2Spec)));
    check_schema("curve_spec", json::parse(std::string(kD4Spec)));
}

TEST_CASE("curve: inadmissible decorations still report cleanly") {
    const std::string path = scratch_file("a2_bad.json", R"({
      "genus": 0,
      "superpotential": "x^3",
      "marks": [
        {"label": "p1", "phases": ["1/3"]},
        {"label": "p2", "phases": ["1/3"]},
        {"label": "p3", "phases": ["1/3"]}
      ]
    })");
    const CliResult res = run_cli({"curve", path});
    REQUIRE(res.exit_code == 0);
    const json doc = json::parse(res.out);
    CHECK(doc["degrees"] == json({"-2/3"}));
    CHECK(doc["admissible"] == false);
    CHECK_FALSE(doc.contains("index_shift"));
}

TEST_CASE("curve: file and domain failures map to distinct exit codes") {
    CHECK(run_cli({"curve", "/tmp/wspin_cli_does_not_exist.json"}).exit_code == 2);
    const std::string broken = scratch_file("broken.json", "{not json");
    CHECK(run_cli({"curve", broken}).exit_code == 2);
    const std::string badphase = scratch_file("badphase.json", R"({
      "genus": 0, "superpotential": "x^3",
      "marks": [{"label": "m", "phases": ["1/2"]}]
    })");
    const CliResult res = run_cli({"curve", badphase});
    CHECK(res.exit_code == 3);
    CHECK(res.err.find("error:") != std::string::npos);
    // Structurally broken marks are input errors.
    const std::string badmark = scratch_file("badmark.json", R"({
      "genus": 0, "superpotential": "x^3",
      "marks": [{"phases": ["0"]}]
    })");
    CHECK(run_cli({"curve", badmark}).exit_code == 2);
    // An unparsable exponent is an input error too.
    const std::string a2 = scratch_file("a2.json", kA2Spec);
    CHECK(run_cli({"curve", a2, "--p", "five"}).exit_code == 2);
}

TEST_CASE("solve: identity to stdout, profile artifact to --out") {
    const std::string out_path = "/tmp/wspin_cli_solve_profile.csv";
    std::remove(out_path.c_str());
    const CliResult res =
        run_cli({"solve", "--r", "3", "--u0", "1", "--rho-min", "0.1",
                 "--rho-max", "10", "--count", "21", "--out", out_path});
    REQUIRE(res.exit_code == 0);
    const json doc = json::parse(res.out);
    check_schema("identity", doc);
    CHECK(doc["rel_err"].get<double>() < 1e-6);
    CHECK(doc["R"].get<double>() == doctest::Approx(0.9997928145486051));

    std::ifstream csv(out_path);
    REQUIRE(csv.good());
    std::string header;
    REQUIRE(std::getline(csv, header));
    CHECK(header == "rho,u_tilde,u_norm");
    std::string line;
    std::size_t rows = 0;
    while (std::getline(csv, line)) ++rows;
    CHECK(rows == 21);
}

TEST_CASE("solve: near-singular boundary values degenerate as expected") {
    const std::string out_path = "/tmp/wspin_cli_solve_singular.csv";
    std::remove(out_path.c_str());
    const CliResult res =
        run_cli({"solve", "--r", "3", "--u0", "1e6", "--rho-min", "0.1",
                 "--rho-max", "10", "--count", "13", "--out", out_path});
    REQUIRE(res.exit_code == 0);
    const json doc = json::parse(res.out);
    CHECK(doc["R"].get<double>() > 1e17);

    // Each sampled value sits within 0.1% of the blow-up envelope.
    std::ifstream csv(out_path);
    std::string line;
    REQUIRE(std::getline(csv, line));  // header
    while (std::getline(csv, line)) {
        std::istringstream fields(line);
        std::string rho_text, u_text;
        REQUIRE(std::getline(fields, rho_text, ','));
        REQUIRE(std::getline(fields, u_text, ','));
        const double rho = std::stod(rho_text);
        const double u = std::stod(u_text);
        const double envelope = wspin::singular_solution(3, rho);
        CHECK(std::abs(u - envelope) / envelope < 1e-3);
    }
}

TEST_CASE("solve: flag validation") {
    CHECK(run_cli({"solve", "--r", "2", "--u0", "1"}).exit_code == 2);
    CHECK(run_cli({"solve", "--r", "3", "--u0", "-1"}).exit_code == 2);
    CHECK(run_cli({"solve", "--r", "3"}).exit_code == 2);
    CHECK(run_cli({"solve", "--r", "3", "--u0", "1", "--rho-min", "5",
                   "--rho-max", "1"}).exit_code == 2);
}

TEST_CASE("profile: CSV by default, JSON on request") {
    const CliResult csv = run_cli({"profile", "--r", "3", "--singular",
                                   "--rho-min", "0.5", "--rho-max", "2",
                                   "--count", "5"});
    REQUIRE(csv.exit_code == 0);
    CHECK(csv.out.rfind("rho,u_tilde,u_norm\n", 0) == 0);

    // Text format also renders the table as CSV; JSON is the only override.
    const CliResult text = run_cli({"profile", "--r", "3", "--singular",
                                    "--rho-min", "0.5", "--rho-max", "2",
                                    "--count", "5", "--format", "text"});
    REQUIRE(text.exit_code == 0);
    CHECK(text.out == csv.out);

    const CliResult js = run_cli({"profile", "--r", "3", "--c", "1",
                                  "--rho-min", "0.5", "--rho-max", "2",
                                  "--count", "5", "--format", "json"});
    REQUIRE(js.exit_code == 0);
    const json doc = json::parse(js.out);
    check_schema("profile", doc);
    CHECK(doc["family"] == "local");
    CHECK(doc["param"] == 1.0);
    CHECK(doc["rho"].size() == 5);

    // Exactly one family selector.
    CHECK(run_cli({"profile", "--r", "3"}).exit_code == 2);
    CHECK(run_cli({"profile", "--r", "3", "--u0", "1", "--c", "1"}).exit_code == 2);
}

TEST_CASE("identity: tolerance gate and environment default") {
    const CliResult ok = run_cli({"identity", "--r", "3", "--u0", "2"});
    REQUIRE(ok.exit_code == 0);
    const json doc = json::parse(ok.out);
    check_schema("identity", doc);
    CHECK(doc["rel_err"].get<double>() < 1e-6);

    // An unreachable tolerance flips only the exit code; the report remains.
    // (u0 = 1 has a tiny but nonzero quadrature error, unlike u0 = 2.)
    const CliResult strict =
        run_cli({"identity", "--r", "3", "--u0", "1", "--tol", "1e-20"});
    CHECK(strict.exit_code == 4);
    check_schema("identity", json::parse(strict.out));

    const CliResult env_strict = run_cli({"identity", "--r", "3", "--u0", "1"},
                                         {{"WSPIN_DEFAULT_TOL", "1e-20"}});
    CHECK(env_strict.exit_code == 4);

    // An explicit flag beats the environment.
    const CliResult flag_wins =
        run_cli({"identity", "--r", "3", "--u0", "1", "--tol", "1e-3"},
                {{"WSPIN_DEFAULT_TOL", "1e-20"}});
    CHECK(flag_wins.exit_code == 0);

    // Garbage in the environment is ignored with a warning.
    const CliResult garbage = run_cli({"identity", "--r", "3", "--u0", "2"},
                                      {{"WSPIN_DEFAULT_TOL", "not-a-number"}});
    CHECK(garbage.exit_code == 0);
    CHECK(garbage.err.find("warning") != std::string::npos);
}

TEST_CASE("output formats: csv and text renderings") {
    const CliResult csv = run_cli({"analyze", "x^3", "--format", "csv"});
    REQUIRE(csv.exit_code == 0);
    CHECK(csv.out.rfind("key,value\n", 0) == 0);
    CHECK(csv.out.find("polynomial,x^3\n") != std::string::npos);
    CHECK(csv.out.find("d,3\n") != std::string::npos);

    const CliResult text = run_cli({"analyze", "x^3", "--format", "text"});
    REQUIRE(text.exit_code == 0);
    CHECK(text.out.find("polynomial: x^3\n") != std::string::npos);
    CHECK(text.out.find("group_order: 3\n") != std::string::npos);

    CHECK(run_cli({"analyze", "x^3", "--format", "yaml"}).exit_code == 2);
}

TEST_CASE("--out redirects the report and leaves stdout empty") {
    const std::string path = "/tmp/wspin_cli_redirect.json";
    std::remove(path.c_str());
    const CliResult direct = run_cli({"group", "x^3+y^4"});
    const CliResult redirected = run_cli({"group", "x^3+y^4", "--out", path});
    REQUIRE(redirected.exit_code == 0);
    CHECK(redirected.out.empty());
    std::ifstream f(path, std::ios::binary);
    std::ostringstream buf;
    buf << f.rdbuf();
    CHECK(buf.str() == direct.out);
}

TEST_CASE("byte-identical reruns") {
    const std::vector<std::vector<std::string>> invocations = {
        {"analyze", "x^3+x*y^3"},
        {"group", "x^3+x*y^2"},
        {"bound", "x^2*y^2+x^4", "--empirical", "--seed", "9"},
        {"identity", "--r", "4", "--u0", "0.5"},
        {"profile", "--r", "3", "--u0", "1", "--rho-min", "0.1", "--rho-max",
         "10", "--count", "33"},
    };
    for (const auto& args : invocations) {
        const CliResult first = run_cli(args);
        const CliResult second = run_cli(args);
        REQUIRE(first.exit_code == second.exit_code);
        CHECK(first.out == second.out);
    }
    // Distinct seeds change the sampled numbers but not the verdict.
    const CliResult a =
        run_cli({"bound", "x^3+y^4", "--empirical", "--seed", "1"});
    const CliResult b =
        run_cli({"bound", "x^3+y^4", "--empirical", "--seed", "2"});
    CHECK(a.out != b.out);
    CHECK(json::parse(a.out)["verdict"] == json::parse(b.out)["verdict"]);
}

TEST_CASE("top-level usage errors") {
    CHECK(run_cli({"--help"}).exit_code == 0);
    CHECK(run_cli({"analyze", "--help"}).exit_code == 0);
    CHECK(run_cli({}).exit_code == 2);
    CHECK(run_cli({"frobnicate"}).exit_code == 2);
    CHECK(run_cli({"analyze", "x^3", "--no-such-flag"}).exit_code == 2);
    CHECK(run_cli({"analyze"}).exit_code == 2);
}
