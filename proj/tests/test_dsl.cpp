#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gradedgeom/dsl.hpp"

#include <json.hpp>

#include <set>
#include <sstream>

using namespace gg::dsl;
using nlohmann::json;

namespace {

std::pair<int, std::string> run(const std::string &src, bool as_json = false, int trunc = 8) {
    ParseResult p = parse(src);
    REQUIRE_MESSAGE(p.ok(), (p.diagnostics.empty() ? "" : p.diagnostics.front().str()));
    std::ostringstream out, err;
    RunOptions opts;
    opts.json = as_json;
    opts.trunc = trunc;
    int rc = run_script(p.script, opts, out, err);
    return {rc, as_json ? out.str() : out.str() + err.str()};
}

std::string run_ok(const std::string &src) {
    auto [rc, out] = run(src);
    CHECK(rc == 0);
    return out;
}

} // namespace

TEST_CASE("parsing declarations and commands") {
    ParseResult p = parse("chart C { x:1, y:2 } deg C (x*y + x^3);");
    REQUIRE(p.ok());
    REQUIRE(p.script.items.size() == 2);
    const auto &decl = std::get<ChartDecl>(p.script.items[0]);
    CHECK(decl.name == "C");
    CHECK(decl.coords ==
          std::vector<std::pair<std::string, int>>{{"x", 1}, {"y", 2}});
    const auto &cmd = std::get<Command>(p.script.items[1]);
    CHECK(cmd.keyword == "deg");
    REQUIRE(cmd.args.size() == 2);
    CHECK(cmd.args[0].kind == Arg::Kind::ident);
    CHECK(cmd.args[1].kind == Arg::Kind::expr);
}

TEST_CASE("parse errors carry spans and recovery finds later errors") {
    ParseResult p = parse("deg C (x + );\nbogus Q;\ndeg C (x);");
    CHECK(!p.ok());
    REQUIRE(p.diagnostics.size() >= 2);
    // first error at the dangling '+' expression on line 1
    CHECK(p.diagnostics[0].span.line == 1);
    // recovery reaches the second bad statement
    bool found_bogus = false;
    for (const auto &d : p.diagnostics) found_bogus |= d.message.find("bogus") != std::string::npos;
    CHECK(found_bogus);

    ParseResult q = parse("deg C (x + );");
    REQUIRE(!q.ok());
    CHECK(q.diagnostics[0].span.line == 1);
    CHECK(q.diagnostics[0].span.col == 12);
}

TEST_CASE("pretty-printing round-trips") {
    std::vector<std::string> sources = {
        "chart C { x:1, y:2 }\ndeg C (x*y + x^3);",
        "bundle V over C { s1:0, s2:-2 }\nsecdeg V (s1 + x*s2);",
        "cl 3;\nclmul (e1*e2) (e2*e3);",
        "interp C 2 ((x + 1)^2 - 2*x - 1);",
        "rees C 2 (x^2 + x*y) 1/2;\nzoom V -1 -1 (s1);",
        "order C (d[x] + x*d[x]);\npathcheck C (t - t^2) (t^2/3);",
    };
    for (const auto &src : sources) {
        ParseResult p1 = parse(src);
        REQUIRE(p1.ok());
        std::string printed = pretty_print(p1.script);
        ParseResult p2 = parse(printed);
        REQUIRE(p2.ok());
        CHECK(pretty_print(p2.script) == printed);
    }
}

TEST_CASE("documented one-liners") {
    CHECK(run_ok("chart C { x:1, y:2 } deg C (x*y + x^3);") == "deg: 3\n");
    CHECK(run_ok("chart C { x:1 } bundle V over C { s1:0, s2:-2 } secdeg V (s1 + x*s2);") ==
          "secdeg: -1\n");
    CHECK(run_ok("chart C { x:1 } interp C 2 (x^2 + x^3);") == "interp: x~^2 + t*x~^3\n");
    CHECK(run_ok("cl 3; clmul (e1*e2) (e2*e3);") == "clmul: -e1*e3\n");
    CHECK(run_ok("chart C { x:1 } order C (d[x] + x*d[x]);") == "order: -1\n");
}

TEST_CASE("every command keyword dispatches") {
    // one working script per keyword; this enumerates the dispatch table
    const std::map<std::string, std::string> scripts = {
        {"deg", "chart C { x:1 } deg C (x^2);"},
        {"lead", "chart C { x:1, y:2 } lead C (y + x^3);"},
        {"grmul", "chart C { x:1, y:2 } grmul C 1 (x) 2 (y);"},
        {"rees", "chart C { x:1, y:2 } rees C 2 (x^2 + x*y) 0;"},
        {"eval", "chart C { x:1 } eval C (x^2) 3;"},
        {"interp", "chart C { x:1 } interp C 1 (x + x^2);"},
        {"zoom", "chart C { x:1 } bundle V over C { s1:0 } zoom V 0 2 (s1);"},
        {"morph", "chart C { x:1, y:2 } morph C C (x) (y + x^2);"},
        {"ranks", "chart C { x:1 } bundle V over C { s1:0, s2:-2 } ranks V;"},
        {"dual", "chart C { x:1 } bundle V over C { s1:0, s2:-2 } dual V;"},
        {"tensor", "chart C { x:1 } bundle V over C { s1:0 } tensor V V;"},
        {"shift", "chart C { x:1 } bundle V over C { s1:0 } shift V 2;"},
        {"pullback", "chart C { x:1 } bundle V over C { s1:0 } chart D { u:1 } "
                     "pullback D V (u + u^2);"},
        {"secdeg", "chart C { x:1 } bundle V over C { s1:0 } secdeg V (s1);"},
        {"approx", "chart C { x:1 } bundle V over C { s1:0, s2:-2 } approx V -1 (s1 + x*s2);"},
        {"secinterp", "chart C { x:1 } bundle V over C { s1:0, s2:-2 } "
                      "secinterp V -1 (s1 + x*s2);"},
        {"order", "chart C { x:1 } order C (d[x]);"},
        {"linearize", "chart C { x:1 } linearize C -1 (d[x] + x*d[x]);"},
        {"opinterp", "chart C { x:1 } opinterp C -1 (d[x] + x*d[x]);"},
        {"recover", "chart C { x:1 } recover C 2 (x^2);"},
        {"clmul", "cl 2; clmul (e1) (e2);"},
        {"cldeg", "cl 2; cldeg (1 + e1*e2);"},
        {"grsym", "cl 2; grsym (e1*e2 + e1) 2;"},
        {"getzler", "cl 2; getzler (e1*d[u1] + e2*d[u2]);"},
        {"symbol", "cl 2; symbol -2 (e1*d[u1] + e2*d[u2]);"},
        {"severa", "cl 3; severa (1 + t*e1);"},
        {"pathcheck", "chart C { x:1, y:2 } pathcheck C (t) (t^2);"},
    };
    std::set<std::string> covered;
    for (const auto &kw : command_keywords()) {
        auto it = scripts.find(kw);
        REQUIRE_MESSAGE(it != scripts.end(), ("no dispatch script for " + kw));
        auto [rc, out] = run(it->second);
        CHECK_MESSAGE(rc == 0, (kw + ": " + out));
        CHECK(out.find(kw + ":") != std::string::npos);
        covered.insert(kw);
    }
    CHECK(covered.size() == command_keywords().size());
}

TEST_CASE("variant argument forms") {
    // bundle-valued deg: fiber coordinates carry weight -v
    CHECK(run_ok("chart C { x:1 } bundle V over C { s1:0, s2:-2 } deg V (y2 + x*y1);") ==
          "deg: 1\n");
    // compose a fiber polynomial with a section
    CHECK(run_ok("chart C { x:1 } bundle V over C { s1:0, s2:-2 } "
                 "eval V (y1 + y2^2) (s1 + x*s2);") == "eval: 1 + x^2\n");
    // hom / sym / wedge via tensor modes
    CHECK(run_ok("chart C { x:1 } bundle V over C { s1:0, s2:-2 } tensor hom V V;") ==
          "tensor: { s1'.s1:0, s1'.s2:-2, s2'.s1:2, s2'.s2:0 }\n");
    CHECK(run_ok("chart C { x:1 } bundle V over C { s1:0, s2:-2 } tensor wedge V 2;") ==
          "tensor: { s1.s2:-2 }\n");
    // restriction through ranks
    CHECK(run_ok("chart C { x:1 } bundle V over C { s1:0, s2:-2 } ranks V s2;") ==
          "ranks: { 0: 1, 1: 0 }\n");
    // path order along a weighted path
    CHECK(run_ok("chart C { x:1, y:2 } order C (x*y) (t) (t^2 + t^3);") == "order: 3\n");
    // clifford pair paths
    CHECK(run_ok("cl 3; pathcheck (1 + t^2*e1*e2) (1);") == "pathcheck: true\n");
    CHECK(run_ok("cl 3; pathcheck (1 + t*e1*e2) (1);") == "pathcheck: false\n");
    // zoom with a perturbed exponent is a falsifiability control
    CHECK(run_ok("chart C { x:1 } bundle V over C { s1:0 } zoom V 1 2 (x*s1) 1;") ==
          "zoom: false\n");
    // conjugated rotor action on a weighted jet
    CHECK(run_ok("cl 3; severa 3/5 4/5 1 2 (e1*e2 + e2*e3) (t^2*e1*e2) (t^2*e1*e3) (1 + t*e1);") ==
          "severa: true\n");
    CHECK(run_ok("cl 3; severa left 3/5 4/5 1 2 (e1*e2) (1);") == "severa: false\n");
}

TEST_CASE("evaluation errors produce diagnostics and exit code 1") {
    ParseResult p = parse("chart C { x:1 } deg C (q);\ndeg C (x);");
    REQUIRE(p.ok());
    std::ostringstream out, err;
    int rc = run_script(p.script, RunOptions{}, out, err);
    CHECK(rc == 1);
    CHECK(err.str().find("unknown coordinate") != std::string::npos);
    // later commands still run
    CHECK(out.str() == "deg: 1\n");
}

TEST_CASE("json output matches the result schema") {
    auto [rc, text] = run(
        "chart C { x:1, y:2 } bundle V over C { s1:0, s2:-2 }\n"
        "deg C (x*y + x^3); interp C 2 (x^2 + x^3); secdeg V (s1 + x*s2);\n"
        "ranks V; dual V; recover C 1 (x);",
        true);
    REQUIRE(rc == 0);
    json results = json::parse(text);
    REQUIRE(results.is_array());
    REQUIRE(results.size() == 6);
    std::set<std::string> kinds;
    for (const auto &r : results) {
        REQUIRE(r.contains("command"));
        REQUIRE(r.contains("inputs"));
        REQUIRE(r["inputs"].is_array());
        REQUIRE(r.contains("result"));
        REQUIRE(r["result"].contains("kind"));
        REQUIRE(r["result"].contains("value"));
        kinds.insert(r["result"]["kind"].get<std::string>());
    }
    CHECK(kinds == std::set<std::string>{"degree", "laurent", "ranks", "weights", "bool"});
    // rationals appear as exact num/den strings, polynomials as monomial lists
    const json &interp = results[1]["result"];
    CHECK(interp["kind"] == "laurent");
    const json &mono = interp["value"][0]["value"][0];
    CHECK(mono["coeff"]["num"] == "1");
    CHECK(mono["coeff"]["den"] == "1");
    CHECK(mono["exps"] == json::array({2}));
    CHECK(results[0]["result"]["value"] == 3);
}

TEST_CASE("truncation option reaches jet commands") {
    // the jet (t^3 e1e2) is weighted at truncation >= 3 but undecidable below
    auto [rc, out] = run("cl 3; severa (1 + t^3*e1*e2);", false, 8);
    CHECK(rc == 0);
    CHECK(out == "severa: true\n");
    auto [rc2, out2] = run("cl 3; severa (1 + t^3*e1*e2);", false, 2);
    CHECK(rc2 == 1); // below the decidable truncation for dimension 3
}
