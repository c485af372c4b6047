#include "gradedgeom/bundle.hpp"
#include "gradedgeom/chart.hpp"
#include "gradedgeom/clifford.hpp"
#include "gradedgeom/diffop.hpp"
#include "gradedgeom/dsl.hpp"
#include "gradedgeom/errors.hpp"
#include "gradedgeom/getzler.hpp"

#include <json.hpp>

#include <bit>
#include <functional>
#include <ostream>
#include <sstream>

namespace gg::dsl {

namespace {

using nlohmann::json;

struct EvalError {
    Diagnostic diag;
};

[[noreturn]] void evfail(const Span &span, const std::string &msg) {
    throw EvalError{Diagnostic{Diagnostic::Severity::error, span, msg}};
}

struct Env {
    std::map<std::string, WeightedChart> charts;
    std::map<std::string, WeightedBundle> bundles;
    int cl_dim = 0; // 0 = no Clifford algebra declared
};

// ---------------------------------------------------------------------------
// Generic expression values: every expression evaluates to a sum of terms
// coeff * (commuting variables) * (Clifford blade) * d^beta. Multiplication
// combines blades by the Clifford product and adds derivative exponents, so
// an operator expression denotes the normal-ordered sum of its terms, not an
// operator composition.

struct GenKey {
    std::map<std::string, int> vars;
    uint32_t blade = 0;
    std::map<std::string, int> dmap;

    auto operator<=>(const GenKey &) const = default;
};

using GenElt = std::map<GenKey, Rational>;

void gen_add_term(GenElt &g, const GenKey &k, const Rational &c) {
    if (c == 0) return;
    auto it = g.find(k);
    if (it == g.end())
        g.emplace(k, c);
    else {
        it->second += c;
        if (it->second == 0) g.erase(it);
    }
}

GenElt gen_scalar(const Rational &c) {
    GenElt g;
    gen_add_term(g, GenKey{}, c);
    return g;
}

GenElt gen_add(const GenElt &a, const GenElt &b) {
    GenElt g = a;
    for (const auto &[k, c] : b) gen_add_term(g, k, c);
    return g;
}

GenElt gen_neg(const GenElt &a) {
    GenElt g;
    for (const auto &[k, c] : a) g.emplace(k, -c);
    return g;
}

GenElt gen_mul(const GenElt &a, const GenElt &b, int cl_dim) {
    GenElt g;
    for (const auto &[ka, ca] : a)
        for (const auto &[kb, cb] : b) {
            GenKey k;
            k.vars = ka.vars;
            for (const auto &[n, e] : kb.vars) k.vars[n] += e;
            k.dmap = ka.dmap;
            for (const auto &[n, e] : kb.dmap) k.dmap[n] += e;
            Rational c = ca * cb;
            if (ka.blade == 0 && kb.blade == 0) {
                k.blade = 0;
            } else {
                CliffordElt prod =
                    CliffordElt::blade(cl_dim, ka.blade) * CliffordElt::blade(cl_dim, kb.blade);
                if (prod.is_zero()) continue;
                k.blade = prod.terms().begin()->first;
                c *= prod.terms().begin()->second;
            }
            gen_add_term(g, k, c);
        }
    return g;
}

// e<i> with 1 <= i <= dim (and no leading zero) names a Clifford generator.
bool is_generator_name(const std::string &name, int dim, int &index) {
    if (dim == 0 || name.size() < 2 || name[0] != 'e' || name[1] == '0') return false;
    for (size_t i = 1; i < name.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(name[i]))) return false;
    index = std::stoi(name.substr(1));
    return index >= 1 && index <= dim;
}

GenElt eval_expr(const Expr &e, const Env &env) {
    switch (e.kind) {
    case Expr::Kind::number: return gen_scalar(e.number);
    case Expr::Kind::ident: {
        int idx = 0;
        GenKey k;
        if (is_generator_name(e.name, env.cl_dim, idx))
            k.blade = 1u << (idx - 1);
        else
            k.vars[e.name] = 1;
        GenElt g;
        g.emplace(k, Rational(1));
        return g;
    }
    case Expr::Kind::deriv: {
        GenKey k;
        k.dmap[e.name] = 1;
        GenElt g;
        g.emplace(k, Rational(1));
        return g;
    }
    case Expr::Kind::add: return gen_add(eval_expr(*e.lhs, env), eval_expr(*e.rhs, env));
    case Expr::Kind::sub:
        return gen_add(eval_expr(*e.lhs, env), gen_neg(eval_expr(*e.rhs, env)));
    case Expr::Kind::neg: return gen_neg(eval_expr(*e.lhs, env));
    case Expr::Kind::mul:
        return gen_mul(eval_expr(*e.lhs, env), eval_expr(*e.rhs, env), env.cl_dim);
    case Expr::Kind::div: {
        GenElt num = eval_expr(*e.lhs, env);
        GenElt den = eval_expr(*e.rhs, env);
        if (den.empty()) evfail(e.rhs->span, "division by zero");
        if (den.size() != 1 || !(den.begin()->first == GenKey{}))
            evfail(e.rhs->span, "division is only defined by nonzero constants");
        Rational d = den.begin()->second;
        GenElt g;
        for (const auto &[k, c] : num) g.emplace(k, c / d);
        return g;
    }
    case Expr::Kind::pow: {
        GenElt base = eval_expr(*e.lhs, env);
        GenElt acc = gen_scalar(Rational(1));
        for (int i = 0; i < e.exponent; ++i) acc = gen_mul(acc, base, env.cl_dim);
        return acc;
    }
    }
    evfail(e.span, "unreachable expression kind");
}

// ---------------------------------------------------------------------------
// Conversions from generic values into the core domain types.

Poly key_monomial(const GenKey &k, const Rational &c) {
    std::vector<std::pair<std::string, int>> factors(k.vars.begin(), k.vars.end());
    return Poly::monomial(c, factors);
}

Poly to_poly(const GenElt &g, const Span &span) {
    Poly out;
    for (const auto &[k, c] : g) {
        if (k.blade != 0) evfail(span, "Clifford generators are not allowed here");
        if (!k.dmap.empty()) evfail(span, "derivative symbols are not allowed here");
        out += key_monomial(k, c);
    }
    return out;
}

Rational to_rational(const GenElt &g, const Span &span) {
    Poly p = to_poly(g, span);
    if (!p.is_constant()) evfail(span, "expected a constant expression");
    return p.is_zero() ? Rational(0) : p.constant_value();
}

Section to_section(const WeightedBundle &b, const GenElt &g, const Span &span) {
    Section s;
    s.components.assign(b.rank(), Poly());
    for (const auto &[k, c] : g) {
        if (k.blade != 0) evfail(span, "Clifford generators are not allowed in a section");
        if (!k.dmap.empty()) evfail(span, "derivative symbols are not allowed in a section");
        int frame = -1;
        GenKey rest = k;
        for (size_t a = 0; a < b.rank(); ++a) {
            auto it = rest.vars.find(b.frame_names()[a]);
            if (it == rest.vars.end()) continue;
            if (frame >= 0 || it->second != 1)
                evfail(span, "section terms must be linear in the frame elements");
            frame = static_cast<int>(a);
            rest.vars.erase(it);
        }
        if (frame < 0) evfail(span, "section term has no frame element");
        for (const auto &[n, e] : rest.vars)
            if (!b.base().has_coord(n)) evfail(span, "unknown coordinate '" + n + "'");
        s.components[frame] += key_monomial(rest, c);
    }
    return s;
}

DiffOp to_scalar_op(const WeightedChart &chart, const GenElt &g, const Span &span) {
    DiffOp op(WeightedBundle::scalar(chart));
    for (const auto &[k, c] : g) {
        if (k.blade != 0) evfail(span, "Clifford generators are not allowed here");
        for (const auto &[n, e] : k.vars)
            if (!chart.has_coord(n)) evfail(span, "unknown coordinate '" + n + "'");
        Exps beta(chart.dim(), 0);
        for (const auto &[n, e] : k.dmap) {
            if (!chart.has_coord(n)) evfail(span, "d[" + n + "]: unknown coordinate");
            beta[chart.index_of(n)] = e;
        }
        op.add_term(std::move(beta), key_monomial(GenKey{k.vars, 0, {}}, c));
    }
    return op;
}

CliffordElt to_clifford(int dim, const GenElt &g, const Span &span) {
    CliffordElt out(dim);
    for (const auto &[k, c] : g) {
        if (!k.vars.empty())
            evfail(span, "unknown identifier '" + k.vars.begin()->first + "' in a Clifford expression");
        if (!k.dmap.empty()) evfail(span, "derivative symbols are not allowed here");
        out = out + CliffordElt::blade(dim, k.blade, c);
    }
    return out;
}

ClJet to_cl_jet(int dim, const GenElt &g, const Span &span, int trunc) {
    ClJet jet(trunc);
    for (int n = 0; n <= trunc; ++n) jet.set(n, CliffordElt(dim));
    for (const auto &[k, c] : g) {
        int texp = 0;
        for (const auto &[n, e] : k.vars) {
            if (n != "t") evfail(span, "only the parameter 't' may appear in a jet expression");
            texp = e;
        }
        if (!k.dmap.empty()) evfail(span, "derivative symbols are not allowed here");
        if (texp > trunc) continue;
        jet.set(texp, jet.coeff(texp) + CliffordElt::blade(dim, k.blade, c));
    }
    return jet;
}

RatJet to_rat_jet(const GenElt &g, const Span &span, int trunc) {
    RatJet jet(trunc);
    for (const auto &[k, c] : g) {
        if (k.blade != 0 || !k.dmap.empty())
            evfail(span, "expected a polynomial in 't'");
        int texp = 0;
        for (const auto &[n, e] : k.vars) {
            if (n != "t") evfail(span, "only the parameter 't' may appear in a jet expression");
            texp = e;
        }
        if (texp > trunc) continue;
        jet.set(texp, jet.coeff(texp) + c);
    }
    return jet;
}

GetzlerOp to_getzler(int k, const GenElt &g, const Span &span) {
    GetzlerOp op(k);
    const WeightedChart &chart = op.chart();
    for (const auto &[key, c] : g) {
        for (const auto &[n, e] : key.vars)
            if (!chart.has_coord(n))
                evfail(span, "unknown identifier '" + n + "' (expected u1..u" + std::to_string(k) + ")");
        Exps beta(chart.dim(), 0);
        for (const auto &[n, e] : key.dmap) {
            if (!chart.has_coord(n)) evfail(span, "d[" + n + "]: unknown coordinate");
            beta[chart.index_of(n)] = e;
        }
        op.add_term(key_monomial(GenKey{key.vars, 0, {}}, c), CliffordElt::blade(k, key.blade),
                    std::move(beta));
    }
    return op;
}

// ---------------------------------------------------------------------------
// Display and serialization.

json json_rat(const Rational &r) {
    return json{{"num", rat_num(r).str()}, {"den", rat_den(r).str()}};
}

json json_monomials(const Poly &p) {
    json out = json::array();
    for (const auto &[e, c] : p.terms()) out.push_back(json{{"coeff", json_rat(c)}, {"exps", e}});
    return out;
}

json res_poly(const Poly &p) {
    return json{{"kind", "poly"}, {"vars", p.vars()}, {"value", json_monomials(p)}};
}

json res_degree(const FiltDegree &d) {
    json v = d.is_finite() ? json(d.value()) : json("inf");
    return json{{"kind", "degree"}, {"value", v}};
}

json res_bool(bool b) { return json{{"kind", "bool"}, {"value", b}}; }

json res_laurent(const LaurentParam &l) {
    json entries = json::array();
    for (const auto &[k, p] : l.terms())
        entries.push_back(json{{"t", k}, {"vars", p.vars()}, {"value", json_monomials(p)}});
    return json{{"kind", "laurent"}, {"value", entries}};
}

json res_weights(const WeightedBundle &b) {
    json entries = json::array();
    for (size_t a = 0; a < b.rank(); ++a)
        entries.push_back(json{{"frame", b.frame_names()[a]}, {"weight", b.vweights()[a]}});
    return json{{"kind", "weights"}, {"value", entries}};
}

std::string weights_text(const WeightedBundle &b) {
    std::ostringstream os;
    os << "{ ";
    for (size_t a = 0; a < b.rank(); ++a) {
        if (a) os << ", ";
        os << b.frame_names()[a] << ":" << b.vweights()[a];
    }
    os << " }";
    return os.str();
}

std::map<std::string, std::string> tilde_renames(const WeightedChart &chart) {
    std::map<std::string, std::string> out;
    for (const auto &c : chart.coords()) out[c] = c + "~";
    return out;
}

Poly frame_var(const std::string &name) { return Poly::var(name); }

Poly section_display(const WeightedBundle &b, const std::vector<Poly> &comps) {
    Poly out;
    for (size_t a = 0; a < comps.size(); ++a) out += comps[a] * frame_var(b.frame_names()[a]);
    return out;
}

Poly dvars_monomial(const WeightedChart &chart, const Exps &beta, bool tilde) {
    Poly out(1);
    for (size_t j = 0; j < beta.size(); ++j)
        if (beta[j] > 0)
            out *= Poly::var("d[" + chart.coords()[j] + (tilde ? "~" : "") + "]", beta[j]);
    return out;
}

Poly op_display(const DiffOp &op) {
    const WeightedChart &chart = op.bundle().base();
    Poly out;
    for (const auto &[key, c] : op.terms())
        out += c * dvars_monomial(chart, key.beta, false);
    return out;
}

LaurentParam laurent_op_display(const LaurentDiffOp &op) {
    const WeightedChart &chart = op.bundle().base();
    auto renames = tilde_renames(chart);
    LaurentParam out;
    for (const auto &[key, lp] : op.terms()) {
        LaurentParam renamed = lp.rename_vars(renames);
        out += renamed * LaurentParam(dvars_monomial(chart, key.beta, true));
    }
    return out;
}

Poly clifford_display(int dim, const std::map<uint32_t, Rational> &terms) {
    Poly out;
    for (const auto &[bits, c] : terms) {
        std::vector<std::pair<std::string, int>> factors;
        for (int i = 0; i < dim; ++i)
            if (bits & (1u << i)) factors.emplace_back("e" + std::to_string(i + 1), 1);
        out += Poly::monomial(c, factors);
    }
    return out;
}

Poly getzler_symbol_display(const GetzlerSymbol &s) {
    WeightedChart chart(GetzlerOp(s.dim()).chart());
    Poly out;
    for (const auto &[key, c] : s.terms())
        out += c * clifford_display(s.dim(), {{key.first, Rational(1)}}) *
               dvars_monomial(chart, key.second, false);
    return out;
}

// ---------------------------------------------------------------------------
// Command dispatch.

struct Result {
    std::string text;
    json result;
};

const Arg &arg(const Command &cmd, size_t i) {
    if (i >= cmd.args.size())
        evfail(cmd.span, "'" + cmd.keyword + "' is missing arguments");
    return cmd.args[i];
}

std::string ident_arg(const Command &cmd, size_t i) {
    const Arg &a = arg(cmd, i);
    if (a.kind != Arg::Kind::ident) evfail(a.span, "expected a name");
    return a.ident;
}

long int_arg(const Command &cmd, size_t i) {
    const Arg &a = arg(cmd, i);
    if (a.kind != Arg::Kind::integer) evfail(a.span, "expected an integer");
    return a.integer;
}

Rational rat_arg(const Command &cmd, size_t i) {
    const Arg &a = arg(cmd, i);
    if (a.kind == Arg::Kind::integer) return Rational(a.integer);
    if (a.kind == Arg::Kind::rational) return a.rational;
    evfail(a.span, "expected a rational number");
}

const Expr &expr_arg(const Command &cmd, size_t i) {
    const Arg &a = arg(cmd, i);
    if (a.kind != Arg::Kind::expr) evfail(a.span, "expected a parenthesized expression");
    return *a.expr;
}

void expect_arity(const Command &cmd, size_t n, const std::string &usage) {
    if (cmd.args.size() != n)
        evfail(cmd.span, "usage: " + cmd.keyword + " " + usage);
}

const WeightedChart &get_chart(const Env &env, const Command &cmd, size_t i) {
    std::string name = ident_arg(cmd, i);
    auto it = env.charts.find(name);
    if (it == env.charts.end()) evfail(arg(cmd, i).span, "unknown chart '" + name + "'");
    return it->second;
}

const WeightedBundle &get_bundle(const Env &env, const Command &cmd, size_t i) {
    std::string name = ident_arg(cmd, i);
    auto it = env.bundles.find(name);
    if (it == env.bundles.end()) evfail(arg(cmd, i).span, "unknown bundle '" + name + "'");
    return it->second;
}

bool names_bundle(const Env &env, const Command &cmd, size_t i) {
    return arg(cmd, i).kind == Arg::Kind::ident && env.bundles.count(arg(cmd, i).ident) > 0;
}

int require_cl(const Env &env, const Command &cmd) {
    if (env.cl_dim == 0)
        evfail(cmd.span, "'" + cmd.keyword + "' requires a prior 'cl <dim>;' declaration");
    return env.cl_dim;
}

Poly poly_arg(const Env &env, const Command &cmd, size_t i) {
    return to_poly(eval_expr(expr_arg(cmd, i), env), arg(cmd, i).span);
}

Section section_arg(const Env &env, const WeightedBundle &b, const Command &cmd, size_t i) {
    return to_section(b, eval_expr(expr_arg(cmd, i), env), arg(cmd, i).span);
}

Result degree_result(const FiltDegree &d) { return {d.str(), res_degree(d)}; }
Result bool_result(bool b) { return {b ? "true" : "false", res_bool(b)}; }
Result poly_result(const Poly &p) { return {p.str(), res_poly(p)}; }
Result laurent_result(const LaurentParam &l) { return {l.str(), res_laurent(l)}; }
Result weights_result(const WeightedBundle &b) { return {weights_text(b), res_weights(b)}; }

Result graded_result(const FiltDegree &d, const Poly &rep) {
    json r = res_poly(rep);
    r["degree"] = d.is_finite() ? json(d.value()) : json("inf");
    return {rep.str() + " (degree " + d.str() + ")", r};
}

Result cmd_deg(Env &env, const Command &cmd) {
    expect_arity(cmd, 2, "<chart|bundle> (expr)");
    if (names_bundle(env, cmd, 0))
        return degree_result(fiber_poly_degree(get_bundle(env, cmd, 0), poly_arg(env, cmd, 1)));
    return degree_result(filtration_degree(get_chart(env, cmd, 0), poly_arg(env, cmd, 1)));
}

Result cmd_lead(Env &env, const Command &cmd) {
    if (cmd.args.size() == 3) {
        const WeightedChart &chart = get_chart(env, cmd, 0);
        long i = int_arg(cmd, 1);
        return poly_result(homogeneous_part(chart, poly_arg(env, cmd, 2), i));
    }
    expect_arity(cmd, 2, "<chart> [level] (expr)");
    GrClass c = leading_class(get_chart(env, cmd, 0), poly_arg(env, cmd, 1));
    return graded_result(c.degree, c.rep);
}

Result cmd_grmul(Env &env, const Command &cmd) {
    expect_arity(cmd, 5, "<chart> i (f) j (g)");
    const WeightedChart &chart = get_chart(env, cmd, 0);
    GrClass a = gr_class(chart, poly_arg(env, cmd, 2), int_arg(cmd, 1));
    GrClass b = gr_class(chart, poly_arg(env, cmd, 4), int_arg(cmd, 3));
    GrClass p = gr_mul(a, b);
    return graded_result(p.degree, p.rep);
}

Result cmd_rees(Env &env, const Command &cmd) {
    expect_arity(cmd, 4, "<chart> i (f) t-value");
    const WeightedChart &chart = get_chart(env, cmd, 0);
    ReesElement e = rees_make(chart, poly_arg(env, cmd, 2), int_arg(cmd, 1));
    Rational t = rat_arg(cmd, 3);
    if (t != 0) return poly_result(rees_eval(e, t));
    // t = 0: the associated-graded fiber, one class per level.
    std::vector<GrClass> classes = rees_fiber0(chart, e);
    std::ostringstream os;
    os << "{ ";
    json entries = json::array();
    bool first = true;
    for (const auto &c : classes) {
        if (!first) os << ", ";
        first = false;
        os << c.degree.str() << ": " << c.rep.str();
        entries.push_back(
            json{{"t", c.degree.value()}, {"vars", c.rep.vars()}, {"value", json_monomials(c.rep)}});
    }
    os << " }";
    return {os.str(), json{{"kind", "laurent"}, {"value", entries}}};
}

Result cmd_eval(Env &env, const Command &cmd) {
    if (names_bundle(env, cmd, 0)) {
        expect_arity(cmd, 3, "<bundle> (fiber-poly) (section)");
        const WeightedBundle &b = get_bundle(env, cmd, 0);
        return poly_result(compose(b, poly_arg(env, cmd, 1), section_arg(env, b, cmd, 2)));
    }
    const WeightedChart &chart = get_chart(env, cmd, 0);
    expect_arity(cmd, 2 + chart.dim(), "<chart> (f) q1 ... qm");
    Poly f = poly_arg(env, cmd, 1);
    std::map<std::string, Rational> point;
    for (size_t j = 0; j < chart.dim(); ++j) point[chart.coords()[j]] = rat_arg(cmd, 2 + j);
    Rational v = f.eval(point);
    return {rat_str(v), res_poly(Poly(v))};
}

Result cmd_interp(Env &env, const Command &cmd) {
    expect_arity(cmd, 3, "<chart> i (f)");
    const WeightedChart &chart = get_chart(env, cmd, 0);
    LaurentParam l = zoom_rescale(chart, poly_arg(env, cmd, 2), int_arg(cmd, 1));
    return laurent_result(l.rename_vars(tilde_renames(chart)));
}

Result cmd_zoom(Env &env, const Command &cmd) {
    if (cmd.args.size() != 4 && cmd.args.size() != 5)
        evfail(cmd.span, "usage: zoom <bundle> i lambda (section) [exponent-shift]");
    const WeightedBundle &b = get_bundle(env, cmd, 0);
    long shift = cmd.args.size() == 5 ? int_arg(cmd, 4) : 0;
    return bool_result(zoom_equivariance_check(b, section_arg(env, b, cmd, 3), int_arg(cmd, 1),
                                               rat_arg(cmd, 2), shift));
}

Result cmd_morph(Env &env, const Command &cmd) {
    const WeightedChart &src = get_chart(env, cmd, 0);
    const WeightedChart &dst = get_chart(env, cmd, 1);
    expect_arity(cmd, 2 + dst.dim(), "<src-chart> <dst-chart> (phi1) ... (phin)");
    std::vector<Poly> phi;
    for (size_t j = 0; j < dst.dim(); ++j) phi.push_back(poly_arg(env, cmd, 2 + j));
    return bool_result(is_weighted_morphism(src, dst, phi));
}

Result cmd_ranks(Env &env, const Command &cmd) {
    if (cmd.args.empty()) evfail(cmd.span, "usage: ranks <bundle> [coords-to-kill...]");
    WeightedBundle b = get_bundle(env, cmd, 0);
    if (cmd.args.size() > 1) {
        std::set<std::string> base_kill, fiber_kill;
        for (size_t j = 1; j < cmd.args.size(); ++j) {
            std::string name = ident_arg(cmd, j);
            if (b.base().has_coord(name)) {
                base_kill.insert(name);
                continue;
            }
            bool found = false;
            for (size_t a = 0; a < b.rank(); ++a)
                if (b.frame_names()[a] == name) {
                    fiber_kill.insert(b.fiber_names()[a]);
                    found = true;
                }
            if (!found)
                evfail(arg(cmd, j).span, "'" + name + "' is neither a coordinate nor a frame element");
        }
        b = restrict_to_subbundle(b, base_kill, fiber_kill);
    }
    std::map<int, int> ranks = fiber_filtration_ranks(b);
    std::ostringstream os;
    os << "{ ";
    json entries = json::array();
    bool first = true;
    for (const auto &[i, k] : ranks) {
        if (!first) os << ", ";
        first = false;
        os << i << ": " << k;
        entries.push_back(json{{"level", i}, {"rank", k}});
    }
    os << " }";
    return {os.str(), json{{"kind", "ranks"}, {"value", entries}}};
}

Result cmd_dual(Env &env, const Command &cmd) {
    expect_arity(cmd, 1, "<bundle>");
    return weights_result(dual(get_bundle(env, cmd, 0)));
}

Result cmd_tensor(Env &env, const Command &cmd) {
    if (!cmd.args.empty() && arg(cmd, 0).kind == Arg::Kind::ident &&
        !env.bundles.count(arg(cmd, 0).ident)) {
        std::string mode = ident_arg(cmd, 0);
        if (mode == "hom") {
            expect_arity(cmd, 3, "hom <bundle> <bundle>");
            return weights_result(hom(get_bundle(env, cmd, 1), get_bundle(env, cmd, 2)));
        }
        if (mode == "sym" || mode == "wedge") {
            expect_arity(cmd, 3, mode + " <bundle> n");
            const WeightedBundle &b = get_bundle(env, cmd, 1);
            int n = static_cast<int>(int_arg(cmd, 2));
            return weights_result(mode == "sym" ? sym(b, n) : wedge(b, n));
        }
        evfail(arg(cmd, 0).span, "unknown bundle or mode '" + mode + "'");
    }
    expect_arity(cmd, 2, "<bundle> <bundle>");
    return weights_result(tensor(get_bundle(env, cmd, 0), get_bundle(env, cmd, 1)));
}

Result cmd_shift(Env &env, const Command &cmd) {
    expect_arity(cmd, 2, "<bundle> k");
    return weights_result(shift(get_bundle(env, cmd, 0), static_cast<int>(int_arg(cmd, 1))));
}

Result cmd_pullback(Env &env, const Command &cmd) {
    const WeightedChart &src = get_chart(env, cmd, 0);
    const WeightedBundle &b = get_bundle(env, cmd, 1);
    size_t m = b.base().dim();
    if (cmd.args.size() != 2 + m && cmd.args.size() != 3 + m)
        evfail(cmd.span, "usage: pullback <src-chart> <bundle> (phi1) ... (phim) [(section)]");
    std::vector<Poly> phi;
    for (size_t j = 0; j < m; ++j) phi.push_back(poly_arg(env, cmd, 2 + j));
    WeightedBundle pb = pullback(src, phi, b);
    if (cmd.args.size() == 2 + m) return weights_result(pb);
    Section s = pullback_section(src, phi, b, section_arg(env, b, cmd, 2 + m));
    return poly_result(section_display(pb, s.components));
}

Result cmd_secdeg(Env &env, const Command &cmd) {
    expect_arity(cmd, 2, "<bundle> (section)");
    const WeightedBundle &b = get_bundle(env, cmd, 0);
    return degree_result(section_degree(b, section_arg(env, b, cmd, 1)));
}

Result cmd_approx(Env &env, const Command &cmd) {
    expect_arity(cmd, 3, "<bundle> i (section)");
    const WeightedBundle &b = get_bundle(env, cmd, 0);
    GrSection g = homogeneous_approx(b, section_arg(env, b, cmd, 2), int_arg(cmd, 1));
    return graded_result(g.degree, section_display(b, g.components));
}

Result cmd_secinterp(Env &env, const Command &cmd) {
    expect_arity(cmd, 3, "<bundle> i (section)");
    const WeightedBundle &b = get_bundle(env, cmd, 0);
    std::vector<LaurentParam> comps =
        interpolate_section(b, section_arg(env, b, cmd, 2), int_arg(cmd, 1));
    auto renames = tilde_renames(b.base());
    LaurentParam out;
    for (size_t a = 0; a < comps.size(); ++a)
        out += comps[a].rename_vars(renames) * LaurentParam(frame_var(b.frame_names()[a]));
    return laurent_result(out);
}

Result cmd_order(Env &env, const Command &cmd, const RunOptions &opts) {
    const WeightedChart &chart = get_chart(env, cmd, 0);
    if (cmd.args.size() > 2) {
        // order <chart> (f) (g1) ... (gm): vanishing order of f along the path.
        expect_arity(cmd, 2 + chart.dim(), "<chart> (f) (g1) ... (gm)");
        std::vector<RatJet> gamma;
        for (size_t j = 0; j < chart.dim(); ++j)
            gamma.push_back(
                to_rat_jet(eval_expr(expr_arg(cmd, 2 + j), env), arg(cmd, 2 + j).span, opts.trunc));
        return degree_result(path_order(chart, poly_arg(env, cmd, 1), gamma));
    }
    expect_arity(cmd, 2, "<chart> (operator)");
    return degree_result(
        do_weighted_order(to_scalar_op(chart, eval_expr(expr_arg(cmd, 1), env), arg(cmd, 1).span)));
}

Result cmd_linearize(Env &env, const Command &cmd) {
    expect_arity(cmd, 3, "<chart> q (operator)");
    const WeightedChart &chart = get_chart(env, cmd, 0);
    DiffOp lin = weighted_linearization(
        to_scalar_op(chart, eval_expr(expr_arg(cmd, 2), env), arg(cmd, 2).span), int_arg(cmd, 1));
    return poly_result(op_display(lin));
}

Result cmd_opinterp(Env &env, const Command &cmd) {
    expect_arity(cmd, 3, "<chart> q (operator)");
    const WeightedChart &chart = get_chart(env, cmd, 0);
    LaurentDiffOp fam = interpolate_operator(
        to_scalar_op(chart, eval_expr(expr_arg(cmd, 2), env), arg(cmd, 2).span), int_arg(cmd, 1));
    return laurent_result(laurent_op_display(fam));
}

Result cmd_recover(Env &env, const Command &cmd) {
    expect_arity(cmd, 3, "<chart|bundle> i (expr)");
    if (names_bundle(env, cmd, 0)) {
        const WeightedBundle &b = get_bundle(env, cmd, 0);
        return bool_result(recover_section_weighting(b, section_arg(env, b, cmd, 2), int_arg(cmd, 1)));
    }
    return bool_result(
        recover_scalar_weighting(get_chart(env, cmd, 0), poly_arg(env, cmd, 2), int_arg(cmd, 1)));
}

Result cmd_clmul(Env &env, const Command &cmd) {
    expect_arity(cmd, 2, "(a) (b)");
    int dim = require_cl(env, cmd);
    CliffordElt a = to_clifford(dim, eval_expr(expr_arg(cmd, 0), env), arg(cmd, 0).span);
    CliffordElt b = to_clifford(dim, eval_expr(expr_arg(cmd, 1), env), arg(cmd, 1).span);
    CliffordElt p = a * b;
    return {p.str(), res_poly(clifford_display(dim, p.terms()))};
}

Result cmd_cldeg(Env &env, const Command &cmd) {
    expect_arity(cmd, 1, "(a)");
    int dim = require_cl(env, cmd);
    return degree_result(
        cl_degree(to_clifford(dim, eval_expr(expr_arg(cmd, 0), env), arg(cmd, 0).span)));
}

Result cmd_grsym(Env &env, const Command &cmd) {
    expect_arity(cmd, 2, "(a) l");
    int dim = require_cl(env, cmd);
    ExteriorElt s =
        gr_symbol(to_clifford(dim, eval_expr(expr_arg(cmd, 0), env), arg(cmd, 0).span),
                  static_cast<int>(int_arg(cmd, 1)));
    return {s.str(), res_poly(clifford_display(dim, s.terms()))};
}

Result cmd_getzler(Env &env, const Command &cmd) {
    expect_arity(cmd, 1, "(operator)");
    int dim = require_cl(env, cmd);
    return degree_result(
        getzler_order(to_getzler(dim, eval_expr(expr_arg(cmd, 0), env), arg(cmd, 0).span)));
}

Result cmd_symbol(Env &env, const Command &cmd) {
    expect_arity(cmd, 2, "q (operator)");
    int dim = require_cl(env, cmd);
    GetzlerSymbol s = getzler_symbol(
        to_getzler(dim, eval_expr(expr_arg(cmd, 1), env), arg(cmd, 1).span), int_arg(cmd, 0));
    return poly_result(getzler_symbol_display(s));
}

Result cmd_severa(Env &env, const Command &cmd, const RunOptions &opts) {
    int dim = require_cl(env, cmd);
    if (cmd.args.size() == 1)
        return bool_result(is_weighted_cl_jet(
            to_cl_jet(dim, eval_expr(expr_arg(cmd, 0), env), arg(cmd, 0).span, opts.trunc), dim));
    bool left_only = arg(cmd, 0).kind == Arg::Kind::ident;
    size_t base = 0;
    if (left_only) {
        if (ident_arg(cmd, 0) != "left") evfail(arg(cmd, 0).span, "expected 'left'");
        base = 1;
    }
    Rotor g = rotor_from_pythagorean(dim, rat_arg(cmd, base), rat_arg(cmd, base + 1),
                                     static_cast<int>(int_arg(cmd, base + 2)),
                                     static_cast<int>(int_arg(cmd, base + 3)));
    CliffordElt xi =
        to_clifford(dim, eval_expr(expr_arg(cmd, base + 4), env), arg(cmd, base + 4).span);
    if (left_only) {
        expect_arity(cmd, 7, "left c s i j (xi) (c-jet)");
        ClJet c = to_cl_jet(dim, eval_expr(expr_arg(cmd, 6), env), arg(cmd, 6).span, opts.trunc);
        return bool_result(severa_left_only_check(g, xi, c, opts.trunc));
    }
    expect_arity(cmd, 8, "c s i j (xi) (xi1) (xi2) (c-jet)");
    ClJet xi1 = to_cl_jet(dim, eval_expr(expr_arg(cmd, 5), env), arg(cmd, 5).span, opts.trunc);
    ClJet xi2 = to_cl_jet(dim, eval_expr(expr_arg(cmd, 6), env), arg(cmd, 6).span, opts.trunc);
    ClJet c = to_cl_jet(dim, eval_expr(expr_arg(cmd, 7), env), arg(cmd, 7).span, opts.trunc);
    return bool_result(severa_action_check(g, xi, xi1, xi2, c, opts.trunc));
}

Result cmd_pathcheck(Env &env, const Command &cmd, const RunOptions &opts) {
    if (!cmd.args.empty() && arg(cmd, 0).kind == Arg::Kind::expr) {
        expect_arity(cmd, 2, "(g1) (g2)");
        int dim = require_cl(env, cmd);
        ClJet g1 = to_cl_jet(dim, eval_expr(expr_arg(cmd, 0), env), arg(cmd, 0).span, opts.trunc);
        ClJet g2 = to_cl_jet(dim, eval_expr(expr_arg(cmd, 1), env), arg(cmd, 1).span, opts.trunc);
        return bool_result(pair_path_check(g1, g2));
    }
    const WeightedChart &chart = get_chart(env, cmd, 0);
    expect_arity(cmd, 1 + chart.dim(), "<chart> (g1) ... (gm)");
    std::vector<RatJet> gamma;
    for (size_t j = 0; j < chart.dim(); ++j)
        gamma.push_back(
            to_rat_jet(eval_expr(expr_arg(cmd, 1 + j), env), arg(cmd, 1 + j).span, opts.trunc));
    return bool_result(is_weighted_path(chart, gamma));
}

Result dispatch(Env &env, const Command &cmd, const RunOptions &opts) {
    const std::string &k = cmd.keyword;
    if (k == "deg") return cmd_deg(env, cmd);
    if (k == "lead") return cmd_lead(env, cmd);
    if (k == "grmul") return cmd_grmul(env, cmd);
    if (k == "rees") return cmd_rees(env, cmd);
    if (k == "eval") return cmd_eval(env, cmd);
    if (k == "interp") return cmd_interp(env, cmd);
    if (k == "zoom") return cmd_zoom(env, cmd);
    if (k == "morph") return cmd_morph(env, cmd);
    if (k == "ranks") return cmd_ranks(env, cmd);
    if (k == "dual") return cmd_dual(env, cmd);
    if (k == "tensor") return cmd_tensor(env, cmd);
    if (k == "shift") return cmd_shift(env, cmd);
    if (k == "pullback") return cmd_pullback(env, cmd);
    if (k == "secdeg") return cmd_secdeg(env, cmd);
    if (k == "approx") return cmd_approx(env, cmd);
    if (k == "secinterp") return cmd_secinterp(env, cmd);
    if (k == "order") return cmd_order(env, cmd, opts);
    if (k == "linearize") return cmd_linearize(env, cmd);
    if (k == "opinterp") return cmd_opinterp(env, cmd);
    if (k == "recover") return cmd_recover(env, cmd);
    if (k == "clmul") return cmd_clmul(env, cmd);
    if (k == "cldeg") return cmd_cldeg(env, cmd);
    if (k == "grsym") return cmd_grsym(env, cmd);
    if (k == "getzler") return cmd_getzler(env, cmd);
    if (k == "symbol") return cmd_symbol(env, cmd);
    if (k == "severa") return cmd_severa(env, cmd, opts);
    if (k == "pathcheck") return cmd_pathcheck(env, cmd, opts);
    evfail(cmd.span, "no handler for '" + k + "'");
}

json command_inputs(const Command &cmd) {
    json inputs = json::array();
    for (const auto &a : cmd.args) {
        switch (a.kind) {
        case Arg::Kind::ident: inputs.push_back(a.ident); break;
        case Arg::Kind::integer: inputs.push_back(std::to_string(a.integer)); break;
        case Arg::Kind::rational: inputs.push_back(rat_str(a.rational)); break;
        case Arg::Kind::expr: inputs.push_back(pretty_print(*a.expr)); break;
        }
    }
    return inputs;
}

void apply_decl(Env &env, const Item &item) {
    if (const auto *c = std::get_if<ChartDecl>(&item)) {
        std::vector<std::string> names;
        std::vector<int> weights;
        for (const auto &[n, w] : c->coords) {
            names.push_back(n);
            weights.push_back(w);
        }
        try {
            env.charts[c->name] = WeightedChart(std::move(names), std::move(weights));
        } catch (const std::exception &e) {
            evfail(c->span, std::string("invalid chart: ") + e.what());
        }
    } else if (const auto *b = std::get_if<BundleDecl>(&item)) {
        auto it = env.charts.find(b->base);
        if (it == env.charts.end()) evfail(b->span, "unknown chart '" + b->base + "'");
        std::vector<std::string> names;
        std::vector<int> weights;
        for (const auto &[n, w] : b->frames) {
            names.push_back(n);
            weights.push_back(w);
        }
        try {
            env.bundles[b->name] = WeightedBundle(it->second, std::move(names), std::move(weights));
        } catch (const std::exception &e) {
            evfail(b->span, std::string("invalid bundle: ") + e.what());
        }
    } else if (const auto *d = std::get_if<ClDecl>(&item)) {
        if (d->dim < 1 || d->dim > 30) evfail(d->span, "Clifford dimension out of range");
        env.cl_dim = d->dim;
    }
}

} // namespace

int run_script(const Script &script, const RunOptions &options, std::ostream &out,
               std::ostream &err) {
    Env env;
    json results = json::array();
    bool failed = false;
    for (const auto &item : script.items) {
        const auto *cmd = std::get_if<Command>(&item);
        try {
            if (!cmd) {
                apply_decl(env, item);
                continue;
            }
            Result r = dispatch(env, *cmd, options);
            if (options.json)
                results.push_back(
                    json{{"command", cmd->keyword}, {"inputs", command_inputs(*cmd)},
                         {"result", r.result}});
            else
                out << cmd->keyword << ": " << r.text << "\n";
        } catch (const EvalError &e) {
            failed = true;
            err << e.diag.str() << "\n";
            if (options.json && cmd)
                results.push_back(json{{"command", cmd->keyword}, {"error", e.diag.message}});
        } catch (const std::exception &e) {
            failed = true;
            Span span = cmd ? cmd->span : Span{};
            Diagnostic d{Diagnostic::Severity::error, span, e.what()};
            err << d.str() << "\n";
            if (options.json && cmd)
                results.push_back(json{{"command", cmd->keyword}, {"error", e.what()}});
        }
    }
    if (options.json) out << results.dump(2) << "\n";
    return failed ? 1 : 0;
}

} // namespace gg::dsl
