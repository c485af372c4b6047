// End-to-end acceptance checks. Prints one pass/fail line per criterion and
// exits 0 iff all pass. argv[1] names the golden-script directory.
#include "gradedgeom/chart.hpp"
#include "gradedgeom/bundle.hpp"
#include "gradedgeom/clifford.hpp"
#include "gradedgeom/diffop.hpp"
#include "gradedgeom/dsl.hpp"
#include "gradedgeom/errors.hpp"
#include "gradedgeom/getzler.hpp"

#include <json.hpp>

#include <bit>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

using namespace gg;
namespace fs = std::filesystem;

namespace {

std::mt19937 rng(271828);
int failures_in_criterion = 0;

void expect(bool ok, const std::string &what) {
    if (!ok) {
        ++failures_in_criterion;
        std::cerr << "  check failed: " << what << "\n";
    }
}

const std::vector<WeightedChart> &test_charts() {
    static const std::vector<WeightedChart> charts = {
        WeightedChart({"x"}, {1}),
        WeightedChart({"x", "y"}, {1, 2}),
        WeightedChart({"u", "v", "w"}, {2, 3, 1}),
    };
    return charts;
}

const std::vector<WeightedBundle> &test_bundles() {
    static const std::vector<WeightedBundle> bundles = {
        WeightedBundle(WeightedChart({"x"}, {1}), {"s1", "s2"}, {0, -2}),
        WeightedBundle(WeightedChart({"x", "y"}, {1, 2}), {"a", "b"}, {1, -1}),
        WeightedBundle(WeightedChart({"u", "v", "w"}, {2, 3, 1}), {"p"}, {0}),
    };
    return bundles;
}

Poly random_poly(const WeightedChart &chart, int max_terms = 3, int max_exp = 3) {
    std::uniform_int_distribution<int> nterms(0, max_terms);
    std::uniform_int_distribution<int> coeff(-9, 9);
    std::uniform_int_distribution<int> exp(0, max_exp);
    Poly p;
    int t = nterms(rng);
    for (int i = 0; i < t; ++i) {
        Poly term{Rational(coeff(rng))};
        for (const auto &v : chart.coords()) term *= Poly::var(v, exp(rng));
        p += term;
    }
    return p;
}

Poly random_nonzero_poly(const WeightedChart &chart) {
    while (true) {
        Poly p = random_poly(chart);
        if (!p.is_zero()) return p;
    }
}

Section random_nonzero_section(const WeightedBundle &b) {
    while (true) {
        Section s;
        bool nonzero = false;
        for (size_t a = 0; a < b.rank(); ++a) {
            s.components.push_back(random_poly(b.base(), 3, 2));
            nonzero = nonzero || !s.components.back().is_zero();
        }
        if (nonzero) return s;
    }
}

DiffOp random_nonzero_diffop(const WeightedBundle &b) {
    std::uniform_int_distribution<int> nterms(1, 3);
    std::uniform_int_distribution<size_t> slot(0, b.rank() - 1);
    std::uniform_int_distribution<int> bexp(0, 2);
    while (true) {
        DiffOp op(b);
        int t = nterms(rng);
        for (int i = 0; i < t; ++i) {
            Exps beta(b.base().dim());
            for (auto &e : beta) e = bexp(rng);
            op.add_term(slot(rng), slot(rng), std::move(beta), random_poly(b.base(), 3, 2));
        }
        if (!op.terms().empty()) return op;
    }
}

void for_each_monomial(size_t nvars, int maxdeg, const std::function<void(const Exps &)> &fn) {
    Exps e(nvars, 0);
    std::function<void(size_t, int)> rec = [&](size_t pos, int left) {
        if (pos == nvars) {
            fn(e);
            return;
        }
        for (int d = 0; d <= left; ++d) {
            e[pos] = d;
            rec(pos + 1, left - d);
        }
    };
    rec(0, maxdeg);
}

CliffordElt random_bivector(int dim) {
    std::uniform_int_distribution<int> coeff(-3, 3);
    CliffordElt out(dim);
    for (int i = 1; i <= dim; ++i)
        for (int j = i + 1; j <= dim; ++j)
            out = out + CliffordElt::blade(dim, (1u << (i - 1)) | (1u << (j - 1)),
                                           Rational(coeff(rng)));
    return out;
}

// c = (1-t^2)/(1+t^2), s = 2t/(1+t^2): rational points on the unit circle.
Rotor random_rotor(int dim) {
    std::uniform_int_distribution<int> num(-5, 5);
    std::uniform_int_distribution<int> plane(1, dim);
    Rational t(num(rng), 7);
    Rational den = 1 + t * t;
    int i = plane(rng), j = plane(rng);
    while (j == i) j = plane(rng);
    return rotor_from_pythagorean(dim, (1 - t * t) / den, 2 * t / den, i, j);
}

ClJet random_weighted_jet(int dim, int trunc) {
    std::uniform_int_distribution<int> coeff(-3, 3);
    std::uniform_int_distribution<uint32_t> bits(0, (1u << dim) - 1);
    ClJet out(trunc);
    out.set(0, CliffordElt(dim, Rational(1)));
    for (int j = 1; j <= trunc; ++j) {
        CliffordElt c(dim);
        for (int tries = 0; tries < 3; ++tries) {
            uint32_t b = bits(rng);
            if (std::popcount(b) <= j) c = c + CliffordElt::blade(dim, b, Rational(coeff(rng)));
        }
        out.set(j, c);
    }
    return out;
}

ClJet random_bivector_tail(int dim, int trunc) {
    ClJet out(trunc);
    for (int j = 0; j <= trunc; ++j) out.set(j, CliffordElt(dim));
    for (int j = 2; j <= trunc; ++j) out.set(j, random_bivector(dim));
    return out;
}

// --- criteria ---------------------------------------------------------------

void degree_calculus() {
    for (int trial = 0; trial < 300; ++trial) {
        const auto &chart = test_charts()[trial % test_charts().size()];
        Poly f = random_nonzero_poly(chart), g = random_nonzero_poly(chart);
        expect(filtration_degree(chart, f * g) ==
                   filtration_degree(chart, f) + filtration_degree(chart, g),
               "deg(fg) = deg f + deg g");
    }
    for (const auto &chart : test_charts())
        for_each_monomial(chart.dim(), 6, [&](const Exps &e1) {
            std::vector<std::pair<std::string, int>> f1;
            for (size_t i = 0; i < e1.size(); ++i) f1.emplace_back(chart.coords()[i], e1[i]);
            Poly m1 = Poly::monomial(Rational(1), f1);
            for_each_monomial(chart.dim(), 3, [&](const Exps &e2) {
                std::vector<std::pair<std::string, int>> f2;
                for (size_t i = 0; i < e2.size(); ++i) f2.emplace_back(chart.coords()[i], e2[i]);
                Poly m2 = Poly::monomial(Rational(1), f2);
                expect(filtration_degree(chart, m1 + m2) >=
                           min(filtration_degree(chart, m1), filtration_degree(chart, m2)),
                       "deg(f+g) >= min");
            });
        });
}

void rank2_example() {
    WeightedChart c({"x"}, {1});
    WeightedBundle V(c, {"s1", "s2"}, {0, -2});
    Section s{{Poly(1), Poly::var("x")}}; // s1 + x s2
    expect(section_degree(V, s) == FiltDegree::of(-1), "degree -1 in the original frame");
    // adapted frame: t1 = s1 + x s2, t2 = s2, both assigned their own degrees
    WeightedBundle Vp(c, {"t1", "t2"}, {0, -2});
    Section sp{{Poly(1), Poly()}}; // the same section written as t1
    expect(section_degree(Vp, sp) == FiltDegree::of(0), "degree 0 in the adapted frame");
}

void interpolation_laws() {
    for (int trial = 0; trial < 200; ++trial) {
        const auto &chart = test_charts()[trial % test_charts().size()];
        Poly f = random_nonzero_poly(chart);
        long d = filtration_degree(chart, f).value();
        long i = d - (trial % 3); // any i <= deg f
        LaurentParam fam = zoom_rescale(chart, f, i);
        expect(!fam.has_negative_powers(), "no negative powers at i <= deg");
        expect(fam.coeff(0) == homogeneous_part(chart, f, i), "t=0 slice is the level-i part");
        expect(fam.eval_param(Rational(1)) == f, "t=1 slice is f");
    }
    for (int trial = 0; trial < 200; ++trial) {
        const auto &b = test_bundles()[trial % test_bundles().size()];
        Section s = random_nonzero_section(b);
        long i = section_degree(b, s).value() - (trial % 3);
        std::vector<LaurentParam> fam = interpolate_section(b, s, i);
        GrSection g = homogeneous_approx(b, s, i);
        for (size_t a = 0; a < b.rank(); ++a) {
            expect(!fam[a].has_negative_powers(), "section family has no negative powers");
            expect(fam[a].coeff(0) == g.components[a], "t=0 slice is the approximation");
            expect(fam[a].eval_param(Rational(1)) == s.components[a], "t=1 slice is the section");
        }
    }
}

void approx_functoriality() {
    std::uniform_int_distribution<int> coeff(-9, 9);
    std::uniform_int_distribution<int> fexp(0, 2);
    std::uniform_int_distribution<int> bexp(0, 2);
    // scalar multiplication
    for (int trial = 0; trial < 100; ++trial) {
        const auto &b = test_bundles()[trial % test_bundles().size()];
        Section s = random_nonzero_section(b);
        Poly g = random_nonzero_poly(b.base());
        long i = section_degree(b, s).value();
        long k = filtration_degree(b.base(), g).value();
        Section gs;
        for (const auto &comp : s.components) gs.components.push_back(g * comp);
        GrSection lhs_si = homogeneous_approx(b, s, i);
        Section lhs;
        Poly gk = homogeneous_part(b.base(), g, k);
        for (const auto &comp : lhs_si.components) lhs.components.push_back(gk * comp);
        GrSection rhs = homogeneous_approx(b, gs, i + k);
        expect(lhs.components == rhs.components, "g^[k] s^[i] = (g s)^[i+k]");
    }
    // fiber-polynomial composition
    int done = 0;
    while (done < 100) {
        const auto &b = test_bundles()[done % test_bundles().size()];
        int n = done % 3;
        Poly F;
        for (int terms = 0; terms < 3; ++terms) {
            std::vector<std::pair<std::string, int>> factors;
            int left = n;
            for (size_t a = 0; a < b.rank(); ++a) {
                int e = a + 1 == b.rank() ? left : std::min(left, fexp(rng));
                if (e > 0) factors.emplace_back(b.fiber_names()[a], e);
                left -= e;
            }
            if (left > 0) continue;
            for (const auto &c : b.base().coords()) factors.emplace_back(c, bexp(rng));
            F += Poly::monomial(Rational(coeff(rng)), factors);
        }
        if (F.is_zero()) continue;
        Section s = random_nonzero_section(b);
        long i = section_degree(b, s).value();
        long j = fiber_poly_degree(b, F).value();
        Poly Fj;
        for (const auto &[e, c] : F.terms()) {
            Poly mono = Poly::make(F.vars(), {{e, c}});
            if (fiber_poly_degree(b, mono) == j) Fj += mono;
        }
        GrSection si = homogeneous_approx(b, s, i);
        Poly lhs = compose(b, Fj, Section{si.components});
        Poly rhs = homogeneous_part(b.base(), compose(b, F, s), j + n * i);
        expect(lhs == rhs, "F^[j] o s^[i] = (F o s)^[j+n*i]");
        ++done;
    }
}

void differential_recovery() {
    for (const auto &chart : test_charts())
        for_each_monomial(chart.dim(), 6, [&](const Exps &e) {
            std::vector<std::pair<std::string, int>> factors;
            for (size_t i = 0; i < e.size(); ++i) factors.emplace_back(chart.coords()[i], e[i]);
            Poly mono = Poly::monomial(Rational(1), factors);
            long d = chart.monomial_degree(e);
            for (long i = -1; i <= 8; ++i)
                expect(recover_scalar_weighting(chart, mono, i) == (d >= i),
                       "scalar recovery matches the monomial rule");
        });
    WeightedBundle V = test_bundles()[0];
    Poly x = Poly::var("x");
    std::vector<Section> sections = {
        Section{{Poly(1), x}},      Section{{Poly(1), Poly()}}, Section{{Poly(), x * x}},
        Section{{x, x.pow(3)}},     Section{{Poly(), Poly(1)}}, Section{{Poly(), Poly()}},
    };
    for (const auto &s : sections) {
        FiltDegree d = section_degree(V, s);
        for (long i = -4; i <= 4; ++i)
            expect(recover_section_weighting(V, s, i) == (d >= i),
                   "section recovery matches section degree");
    }
}

void operator_linearization() {
    int done = 0;
    while (done < 100) {
        const auto &b = test_bundles()[done % test_bundles().size()];
        DiffOp D = random_nonzero_diffop(b);
        Section s = random_nonzero_section(b);
        Section Ds = D.apply(s);
        Section zero;
        zero.components.assign(b.rank(), Poly());
        if (Ds == zero) continue;
        long q = do_weighted_order(D).value();
        long i = section_degree(b, s).value();
        DiffOp lin = weighted_linearization(D, q);
        GrSection si = homogeneous_approx(b, s, i);
        Section lhs = lin.apply(Section{si.components});
        GrSection rhs = homogeneous_approx(b, Ds, i + q);
        expect(lhs.components == rhs.components, "D^[q] s^[i] = (D s)^[i+q]");
        LaurentDiffOp fam = interpolate_operator(D, q);
        expect(!fam.has_negative_powers(), "family regular at the weighted order");
        expect(fam.slice(Rational(1)) == D, "t=1 slice is D");
        expect(fam.slice(Rational(0)) == lin, "t=0 slice is the linearization");
        std::vector<LaurentParam> st = interpolate_section(b, s, i);
        expect(fam.apply(st) == interpolate_section(b, Ds, i + q), "t-family intertwining");
        ++done;
    }
}

void shift_and_zoom() {
    std::vector<Rational> lambdas = {rat(2), rat(-1), rat(1, 3)};
    for (int trial = 0; trial < 50; ++trial) {
        const auto &b = test_bundles()[trial % test_bundles().size()];
        Section s = random_nonzero_section(b);
        long i = section_degree(b, s).value();
        // the shifted bundle computes the same invariants, displaced by k
        WeightedBundle bs = shift(b, 2);
        expect(section_degree(bs, s) == FiltDegree::of(i - 2), "shift displaces the degree");
        expect(homogeneous_approx(bs, s, i - 2).components ==
                   homogeneous_approx(b, s, i).components,
               "shift preserves the approximation");
        for (const auto &lam : lambdas) {
            expect(zoom_equivariance_check(b, s, i, lam), "zoom diagram commutes");
            expect(zoom_equivariance_check(bs, s, i - 2, lam), "zoom diagram after shift");
        }
        expect(!zoom_equivariance_check(b, s, i, rat(2), 1),
               "perturbed exponent breaks the diagram");
    }
}

// Deformation family of a graded bundle with degrees -3, -2, -1: component a
// of the interpolation at level i is sum c x^alpha t^(alpha.w + v_a - i), and
// scaling (fibers by lambda^-v_a, t by lambda^-1, base by lambda^w) equals
// scalar multiplication by lambda^-i, coefficientwise.
void graded_deformation_scaling() {
    std::vector<WeightedBundle> graded = {
        WeightedBundle(WeightedChart({"m"}, {0}), {"s1", "s2", "s3"}, {-3, -2, -1}),
        WeightedBundle(WeightedChart({"x"}, {1}), {"s1", "s2", "s3"}, {-3, -2, -1}),
    };
    std::vector<Rational> lambdas = {rat(2), rat(-1), rat(1, 3)};
    for (int trial = 0; trial < 60; ++trial) {
        const auto &b = graded[trial % graded.size()];
        const auto &w = b.base().weights();
        Section s = random_nonzero_section(b);
        long i = section_degree(b, s).value();
        std::vector<LaurentParam> fam = interpolate_section(b, s, i);
        for (size_t a = 0; a < b.rank(); ++a) {
            long va = b.vweights()[a];
            for (const auto &[m, p] : fam[a].terms())
                for (const auto &[e, c] : p.terms()) {
                    long aw = 0;
                    for (size_t j = 0; j < e.size(); ++j)
                        aw += e[j] * w[b.base().index_of(p.vars()[j])];
                    expect(m == aw + va - i, "t-exponent is alpha.w + v_a - i");
                    for (const auto &lam : lambdas)
                        expect(rat_pow(lam, -va) * c ==
                                   rat_pow(lam, -i) * rat_pow(lam, aw - m) * c,
                               "zoom scaling matches scalar multiplication");
                }
        }
    }
}

void clifford_getzler() {
    // gr(Cl) is the exterior algebra, exhaustively through dimension 5
    for (int k = 1; k <= 5; ++k)
        for (uint32_t A = 0; A < (1u << k); ++A)
            for (uint32_t B = 0; B < (1u << k); ++B) {
                CliffordElt prod = CliffordElt::blade(k, A) * CliffordElt::blade(k, B);
                ExteriorElt lhs = gr_symbol(prod, std::popcount(A) + std::popcount(B));
                ExteriorElt rhs = ExteriorElt::blade(k, A) * ExteriorElt::blade(k, B);
                expect(lhs == rhs, "top symbol of a blade product is the wedge");
            }
    int k = 3;
    GetzlerOp c1(k);
    c1.add_term(Poly(1), CliffordElt::generator(k, 1), Exps(k, 0));
    expect(getzler_order(c1) == FiltDegree::of(-1), "Clifford multiplication has order -1");
    GetzlerOp D = flat_dirac(k);
    expect(getzler_order(D) == FiltDegree::of(-2), "flat Dirac operator has order -2");
    GetzlerSymbol expected(k);
    for (int a = 1; a <= k; ++a) {
        Exps beta(k, 0);
        beta[a - 1] = 1;
        expected.add_term(Poly(1), 1u << (a - 1), beta);
    }
    expect(getzler_symbol(D, -2) == expected, "Dirac symbol is the exterior-derivative form");
    GetzlerOp D2 = D.compose(D);
    expect(getzler_order(D2) == FiltDegree::of(-2), "cross terms cancel in the square");
    GetzlerSymbol lap(k);
    for (int a = 1; a <= k; ++a) {
        Exps beta(k, 0);
        beta[a - 1] = 2;
        lap.add_term(Poly(-1), 0, beta);
    }
    expect(getzler_symbol(D2, -2) == lap, "symbol of the square is minus the Laplacian");
}

void jet_group_checks() {
    const int trunc = 8;
    for (int k : {3, 4})
        for (int trial = 0; trial < 50; ++trial) {
            Rotor g = random_rotor(k);
            CliffordElt xi = random_bivector(k);
            ClJet xi1 = random_bivector_tail(k, trunc);
            ClJet xi2 = random_bivector_tail(k, trunc);
            ClJet c = random_weighted_jet(k, trunc);
            expect(severa_action_check(g, xi, xi1, xi2, c, trunc),
                   "conjugated family stays weighted");
        }
    // positive and negative weighted-pair paths
    int k = 3;
    ClJet good(6), bad(6), one(6);
    for (int j = 0; j <= 6; ++j) {
        good.set(j, CliffordElt(k));
        bad.set(j, CliffordElt(k));
        one.set(j, CliffordElt(k));
    }
    CliffordElt e12 = CliffordElt::generator(k, 1) * CliffordElt::generator(k, 2);
    good.set(0, CliffordElt(k, Rational(1)));
    good.set(2, e12);
    bad.set(0, CliffordElt(k, Rational(1)));
    bad.set(1, e12);
    one.set(0, CliffordElt(k, Rational(1)));
    expect(pair_path_check(good, one), "order-2 deviation is a weighted path");
    expect(!pair_path_check(bad, one), "order-1 deviation is not");
    // path characterization: ord_t(f o gamma) >= deg f, sharp on the diagonal path
    for (int trial = 0; trial < 200; ++trial) {
        const auto &chart = test_charts()[trial % test_charts().size()];
        Poly f = random_nonzero_poly(chart);
        std::uniform_int_distribution<int> extra(0, 2);
        std::vector<RatJet> gamma, diag;
        for (size_t a = 0; a < chart.dim(); ++a) {
            RatJet j(24);
            int lead = chart.weights()[a] + extra(rng);
            j.set(lead, Rational(1 + (trial % 3)));
            if (lead + 1 <= 24) j.set(lead + 1, Rational(trial % 5));
            gamma.push_back(j);
            RatJet d(24);
            d.set(chart.weights()[a], Rational(1));
            diag.push_back(d);
        }
        expect(is_weighted_path(chart, gamma), "constructed path is weighted");
        FiltDegree d = filtration_degree(chart, f);
        expect(path_order(chart, f, gamma) >= d, "path order bounds the degree");
        expect(path_order(chart, f, diag) == d, "diagonal path is sharp");
    }
}

std::string read_file(const fs::path &p) {
    std::ifstream in(p);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void cli_golden(const fs::path &dir) {
    int scripts = 0;
    for (const auto &entry : fs::directory_iterator(dir)) {
        if (entry.path().extension() != ".gg") continue;
        ++scripts;
        std::string name = entry.path().stem().string();
        dsl::ParseResult p = dsl::parse(read_file(entry.path()));
        expect(p.ok(), name + " parses");
        if (!p.ok()) continue;
        dsl::RunOptions opts;
        opts.json = name.find("json") != std::string::npos;
        std::ostringstream out, err;
        int rc = dsl::run_script(p.script, opts, out, err);
        expect(rc == 0, name + " runs cleanly");
        fs::path golden = entry.path();
        golden.replace_extension(".out");
        expect(out.str() == read_file(golden), name + " matches its golden output");
    }
    expect(scripts >= 27, "a golden script per command");

    // JSON schema: every record carries command/inputs/result, results carry
    // kind/value, rationals are exact num/den strings
    dsl::ParseResult p = dsl::parse(read_file(dir / "json_mixed.gg"));
    std::ostringstream out, err;
    dsl::RunOptions opts;
    opts.json = true;
    expect(dsl::run_script(p.script, opts, out, err) == 0, "json run succeeds");
    nlohmann::json results = nlohmann::json::parse(out.str());
    expect(results.is_array() && results.size() == 7, "one record per command");
    for (const auto &r : results) {
        expect(r.contains("command") && r.contains("inputs") && r.contains("result"),
               "record shape");
        expect(r["result"].contains("kind") && r["result"].contains("value"), "result shape");
    }
    const auto &mono = results[1]["result"]["value"][0]["value"][0];
    expect(mono["coeff"]["num"].is_string() && mono["coeff"]["den"].is_string(),
           "exact rational coefficients");

    // parse-error spans are stable across runs and point at the offending token
    const std::string bad = "chart C { x:1 }\ndeg C (x + );";
    dsl::ParseResult e1 = dsl::parse(bad), e2 = dsl::parse(bad);
    expect(!e1.ok() && !e2.ok(), "malformed input is rejected");
    expect(e1.diagnostics.size() == e2.diagnostics.size(), "deterministic diagnostics");
    for (size_t i = 0; i < e1.diagnostics.size() && i < e2.diagnostics.size(); ++i) {
        const auto &a = e1.diagnostics[i], &b = e2.diagnostics[i];
        expect(a.span.line == b.span.line && a.span.col == b.span.col &&
                   a.message == b.message,
               "stable spans");
    }
    expect(e1.diagnostics.at(0).span.line == 2 && e1.diagnostics.at(0).span.col == 12,
           "span points at the offending token");
}

} // namespace

int main(int argc, char **argv) {
    if (argc < 2) {
        std::cerr << "usage: acceptance <golden-dir>\n";
        return 2;
    }
    fs::path golden_dir = argv[1];
    const std::vector<std::pair<std::string, std::function<void()>>> criteria = {
        {"degree calculus", degree_calculus},
        {"rank-2 frame-change example", rank2_example},
        {"interpolation laws", interpolation_laws},
        {"functoriality of homogeneous approximation", approx_functoriality},
        {"recovery from differential conditions", differential_recovery},
        {"operator linearization and interpolation", operator_linearization},
        {"shift invariance and zoom equivariance", shift_and_zoom},
        {"graded deformation scaling", graded_deformation_scaling},
        {"Clifford symbols and rescaled Dirac orders", clifford_getzler},
        {"jet-group conjugation and weighted paths", jet_group_checks},
        {"CLI golden files, JSON schema, parse spans", [&] { cli_golden(golden_dir); }},
    };
    int failed = 0;
    for (size_t n = 0; n < criteria.size(); ++n) {
        failures_in_criterion = 0;
        try {
            criteria[n].second();
        } catch (const std::exception &e) {
            ++failures_in_criterion;
            std::cerr << "  exception: " << e.what() << "\n";
        }
        bool ok = failures_in_criterion == 0;
        failed += !ok;
        std::cout << "criterion " << (n + 1) << " (" << criteria[n].first
                  << "): " << (ok ? "pass" : "fail") << "\n";
    }
    return failed == 0 ? 0 : 1;
}
