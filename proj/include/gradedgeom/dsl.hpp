#pragma once

#include "gradedgeom/rational.hpp"

#include <iosfwd>
#include <memory>
#include <string>
#include <variant>
#include <vector>

namespace gg::dsl {

// Half-open character span into the source text, 1-based line/column.
struct Span {
    int line = 1;
    int col = 1;
    int len = 0;

    bool operator==(const Span &) const = default;
};

struct Diagnostic {
    enum class Severity { error };
    Severity severity = Severity::error;
    Span span;
    std::string message;

    std::string str() const;
};

// Expression AST. Evaluation is context dependent (polynomial, section,
// operator, Clifford element), so the tree stays uninterpreted here.
struct Expr;
using ExprPtr = std::unique_ptr<Expr>;

struct Expr {
    enum class Kind { number, ident, deriv, add, sub, mul, div, neg, pow };
    Kind kind;
    Span span;
    Rational number;    // kind == number
    std::string name;   // kind == ident / deriv
    ExprPtr lhs, rhs;   // binary ops; lhs only for neg
    int exponent = 0;   // kind == pow (applied to lhs)
};

struct ChartDecl {
    std::string name;
    std::vector<std::pair<std::string, int>> coords; // name : weight
    Span span;
};

struct BundleDecl {
    std::string name;
    std::string base;
    std::vector<std::pair<std::string, int>> frames; // name : vertical weight
    Span span;
};

struct ClDecl {
    int dim = 0;
    Span span;
};

// Command argument: bare identifier, integer, rational literal, or a
// parenthesized expression.
struct Arg {
    enum class Kind { ident, integer, rational, expr };
    Kind kind;
    Span span;
    std::string ident;
    long integer = 0;
    Rational rational;
    ExprPtr expr;
};

struct Command {
    std::string keyword;
    std::vector<Arg> args;
    Span span;
};

using Item = std::variant<ChartDecl, BundleDecl, ClDecl, Command>;

struct Script {
    std::vector<Item> items;
};

struct ParseResult {
    Script script;
    std::vector<Diagnostic> diagnostics;

    bool ok() const { return diagnostics.empty(); }
};

ParseResult parse(const std::string &input);

// Canonical source form; parse(pretty_print(s)) produces an identical Script.
std::string pretty_print(const Script &script);
std::string pretty_print(const Expr &e);

// Command keywords, in dispatch-table order.
const std::vector<std::string> &command_keywords();

struct RunOptions {
    bool json = false;
    int trunc = 8; // jet truncation order for t-dependent arguments
};

// Evaluates every command, writing results to out and evaluation diagnostics
// to err. Returns 0 on success, 1 if any command failed.
int run_script(const Script &script, const RunOptions &options, std::ostream &out,
               std::ostream &err);

} // namespace gg::dsl
