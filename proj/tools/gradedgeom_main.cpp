#include "gradedgeom/dsl.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

int run_command(const std::string &path, bool json, int trunc) {
    std::string source;
    if (path == "-") {
        std::ostringstream os;
        os << std::cin.rdbuf();
        source = os.str();
    } else {
        std::ifstream in(path);
        if (!in) {
            std::cerr << "error: cannot open '" << path << "'\n";
            return 1;
        }
        std::ostringstream os;
        os << in.rdbuf();
        source = os.str();
    }
    gg::dsl::ParseResult parsed = gg::dsl::parse(source);
    if (!parsed.ok()) {
        for (const auto &d : parsed.diagnostics) std::cerr << d.str() << "\n";
        return 2;
    }
    gg::dsl::RunOptions options;
    options.json = json;
    options.trunc = trunc;
    return gg::dsl::run_script(parsed.script, options, std::cout, std::cerr);
}

// Quick self-contained property checks, meant as a smoke test of an installed
// binary. The full suites live in the test executables.
int check_command() {
    const char *script = R"(
chart C { x:1, y:2 }
bundle V over C { s1:0, s2:-2 }
cl 3;
deg C (x*y + x^3);
secdeg V (s1 + x*s2);
interp C 2 (x^2 + x^3);
clmul (e1*e2) (e2*e3);
order C (d[x] + x*d[x]);
)";
    const char *expected = R"(deg: 3
secdeg: -1
interp: x~^2 + t*x~^3
clmul: -e1*e3
order: -1
)";
    gg::dsl::ParseResult parsed = gg::dsl::parse(script);
    if (!parsed.ok()) {
        for (const auto &d : parsed.diagnostics) std::cerr << d.str() << "\n";
        return 1;
    }
    std::ostringstream out;
    int rc = gg::dsl::run_script(parsed.script, gg::dsl::RunOptions{}, out, std::cerr);
    if (rc != 0) return 1;
    if (out.str() != expected) {
        std::cerr << "self-check mismatch:\n" << out.str();
        return 1;
    }
    std::cout << "ok\n";
    return 0;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"exact calculus of weighted charts, graded bundles, and rescaled operators"};
    app.require_subcommand(1);

    std::string path;
    bool json = false;
    int trunc = 8;
    CLI::App *run = app.add_subcommand("run", "evaluate a script file ('-' for stdin)");
    run->add_option("file", path, "script path")->required();
    run->add_flag("--json", json, "machine-readable output");
    run->add_option("--trunc", trunc, "jet truncation order for t-dependent arguments")
        ->check(CLI::Range(0, 64));

    CLI::App *check = app.add_subcommand("check", "run the built-in smoke checks");

    CLI11_PARSE(app, argc, argv);

    if (run->parsed()) return run_command(path, json, trunc);
    if (check->parsed()) return check_command();
    return 0;
}
