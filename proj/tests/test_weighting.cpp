#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gradedgeom/chart.hpp"
#include "gradedgeom/errors.hpp"

#include <functional>
#include <random>

using namespace gg;

namespace {

std::mt19937 rng(911);

const std::vector<WeightedChart> &test_charts() {
    static const std::vector<WeightedChart> charts = {
        WeightedChart({"x"}, {1}),
        WeightedChart({"x", "y"}, {1, 2}),
        WeightedChart({"x", "y", "z"}, {2, 3, 1}),
    };
    return charts;
}

Poly random_poly(const WeightedChart &chart, int max_terms = 4, int max_exp = 3) {
    std::uniform_int_distribution<int> nterms(1, max_terms);
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

// All monomials (as exponent vectors) of total degree <= maxdeg.
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

Poly monomial_of(const WeightedChart &chart, const Exps &e) {
    std::vector<std::pair<std::string, int>> factors;
    for (size_t i = 0; i < e.size(); ++i) factors.emplace_back(chart.coords()[i], e[i]);
    return Poly::monomial(Rational(1), factors);
}

} // namespace

TEST_CASE("chart validation") {
    CHECK_THROWS(WeightedChart({"x", "y"}, {1}));
    CHECK_THROWS(WeightedChart({"x", "x"}, {1, 1}));
    CHECK_THROWS(WeightedChart({"x"}, {-1}));
    WeightedChart c({"x", "y"}, {0, 2});
    CHECK(c.transverse_coords() == std::set<std::string>{"y"});
}

TEST_CASE("filtration degree examples") {
    WeightedChart c({"x", "y"}, {1, 2});
    Poly x = Poly::var("x"), y = Poly::var("y");
    CHECK(filtration_degree(c, x * y + x.pow(3)) == 3);
    CHECK(filtration_degree(c, x + y) == 1);
    CHECK(filtration_degree(c, Poly(5)) == 0);
    CHECK(filtration_degree(c, Poly()).is_infinite());
    CHECK_THROWS(filtration_degree(c, Poly::var("q")));
}

TEST_CASE("degree multiplicativity on 300 random nonzero pairs") {
    for (const auto &chart : test_charts())
        for (int i = 0; i < 100; ++i) {
            Poly f = random_nonzero_poly(chart), g = random_nonzero_poly(chart);
            CHECK(filtration_degree(chart, f * g) ==
                  filtration_degree(chart, f) + filtration_degree(chart, g));
        }
}

TEST_CASE("deg(f+g) >= min(deg f, deg g), exhaustive on monomials <= degree 6") {
    for (const auto &chart : test_charts()) {
        std::vector<Poly> monos;
        for_each_monomial(chart.dim(), 6, [&](const Exps &e) { monos.push_back(monomial_of(chart, e)); });
        for (const auto &f : monos)
            for (const auto &g : monos) {
                FiltDegree lhs = filtration_degree(chart, f + g);
                FiltDegree rhs = min(filtration_degree(chart, f), filtration_degree(chart, g));
                CHECK(lhs >= rhs);
            }
    }
}

TEST_CASE("homogeneous parts and leading class") {
    WeightedChart c({"x", "y"}, {1, 2});
    Poly x = Poly::var("x"), y = Poly::var("y");
    Poly f = x * y + x.pow(3) + y.pow(2) + x;
    CHECK(homogeneous_part(c, f, 1) == x);
    CHECK(homogeneous_part(c, f, 3) == x * y + x.pow(3));
    CHECK(homogeneous_part(c, f, 4) == y * y);
    CHECK(homogeneous_part(c, f, 2).is_zero());
    GrClass lead = leading_class(c, f);
    CHECK(lead.degree == 1);
    CHECK(lead.rep == x);
    // splitting into homogeneous layers is exact
    Poly sum;
    for (long i = 0; i <= 6; ++i) sum += homogeneous_part(c, f, i);
    CHECK(sum == f);
}

TEST_CASE("gr classes multiply by degree addition") {
    WeightedChart c({"x", "y"}, {1, 2});
    Poly x = Poly::var("x"), y = Poly::var("y");
    GrClass a = gr_class(c, x + y, 1);        // class of x at level 1
    GrClass b = gr_class(c, y + x.pow(3), 2); // class of y at level 2
    CHECK(a.rep == x); // only the level-1 part survives in gr
    GrClass p = gr_mul(gr_class(c, x, 1), gr_class(c, y, 2));
    CHECK(p.degree == 3);
    CHECK(p.rep == x * y);
    CHECK_THROWS_AS(gr_class(c, x, 2), DegreeViolation);
    (void)b;
}

TEST_CASE("gr_mul respects leading-term truncation on random pairs") {
    for (const auto &chart : test_charts())
        for (int i = 0; i < 50; ++i) {
            Poly f = random_nonzero_poly(chart), g = random_nonzero_poly(chart);
            FiltDegree df = filtration_degree(chart, f), dg = filtration_degree(chart, g);
            GrClass p = gr_mul(GrClass{df, homogeneous_part(chart, f, df.value())},
                               GrClass{dg, homogeneous_part(chart, g, dg.value())});
            // the product class is the (df+dg)-homogeneous part of f*g
            CHECK(p.rep == homogeneous_part(chart, f * g, df.value() + dg.value()));
        }
}

TEST_CASE("rees elements") {
    WeightedChart c({"x", "y"}, {1, 2});
    Poly x = Poly::var("x"), y = Poly::var("y");
    ReesElement e = rees_make(c, x * x + x * y, 2);
    CHECK_THROWS_AS(rees_make(c, x, 2), DegreeViolation);
    // evaluation at t=1 recovers the function
    CHECK(rees_eval(e, Rational(1)) == x * x + x * y);
    // the zero fiber is the level-2 class
    std::vector<GrClass> fib = rees_fiber0(c, e);
    REQUIRE(fib.size() == 1);
    CHECK(fib[0].degree == 2);
    CHECK(fib[0].rep == x * x);
    // product of rees elements adds levels
    ReesElement prod = rees_make(c, x, 1) * rees_make(c, y, 2);
    CHECK(prod.components().count(3) == 1);
    CHECK(prod.components().at(3) == x * y);
}

TEST_CASE("zoom rescale example") {
    WeightedChart c({"x"}, {1});
    Poly x = Poly::var("x");
    LaurentParam l = zoom_rescale(c, x.pow(2) + x.pow(3), 2);
    CHECK(l.coeff(0) == x.pow(2));
    CHECK(l.coeff(1) == x.pow(3));
    CHECK(!l.has_negative_powers());
    // below-degree levels produce negative powers
    CHECK(zoom_rescale(c, x, 2).has_negative_powers());
}

TEST_CASE("interpolation laws on 200 random (f, i <= deg f)") {
    int done = 0;
    while (done < 200) {
        const auto &chart = test_charts()[done % test_charts().size()];
        Poly f = random_nonzero_poly(chart);
        FiltDegree d = filtration_degree(chart, f);
        std::uniform_int_distribution<long> level(-2, d.value());
        long i = level(rng);
        LaurentParam fam = zoom_rescale(chart, f, i);
        CHECK(!fam.has_negative_powers());
        CHECK(fam.coeff(0) == homogeneous_part(chart, f, i));
        CHECK(fam.eval_param(Rational(1)) == f);
        ++done;
    }
}

TEST_CASE("weighted morphisms") {
    WeightedChart c({"x", "y"}, {1, 2});
    Poly x = Poly::var("x"), y = Poly::var("y");
    // identity and a triangular change preserve weights
    CHECK(is_weighted_morphism(c, c, {x, y}));
    CHECK(is_weighted_morphism(c, c, {x, y + x * x}));
    // sending the weight-2 coordinate to a weight-1 function does not
    CHECK(!is_weighted_morphism(c, c, {x, x}));
    // constants have degree 0
    CHECK(!is_weighted_morphism(c, c, {x, y + Poly(1)}));
    CHECK_THROWS(is_weighted_morphism(c, c, {x}));
}

TEST_CASE("weighted paths and path order") {
    WeightedChart c({"x", "y"}, {1, 2});
    RatJet t(6), t2(6), one(6);
    t.set(1, 1);
    t2.set(2, 1);
    one.set(0, 1);
    CHECK(is_weighted_path(c, {t, t2}));
    CHECK(!is_weighted_path(c, {t, t}));    // y-component must vanish to order 2
    CHECK(!is_weighted_path(c, {one, t2})); // x-component must vanish to order 1
    // zero jet below the decidable truncation
    RatJet z(0);
    CHECK_THROWS_AS(is_weighted_path(c, {RatJet(6), z}), UndecidableAtTruncation);

    Poly x = Poly::var("x"), y = Poly::var("y");
    CHECK(path_order(c, x * y, {t, t2}) == 3);
    CHECK(path_order(c, Poly(), {t, t2}).is_infinite());
}

TEST_CASE("path order >= degree on weighted paths, with a sharp witness (200 cases)") {
    for (const auto &chart : test_charts())
        for (int trial = 0; trial < 67; ++trial) {
            Poly f = random_nonzero_poly(chart);
            // gamma_a = t^{w_a} (the witness path): sharp for generic f
            std::vector<RatJet> gamma;
            for (size_t a = 0; a < chart.dim(); ++a) {
                RatJet j(20);
                j.set(chart.weights()[a], 1);
                gamma.push_back(j);
            }
            REQUIRE(is_weighted_path(chart, gamma));
            FiltDegree d = filtration_degree(chart, f);
            FiltDegree ord = path_order(chart, f, gamma);
            CHECK(ord >= d);
            // along the diagonal witness path the order is exactly the degree
            // (every monomial of degree d contributes t^d with the same sign
            // pattern as its coefficient), unless leading terms cancel.
            Poly lead = homogeneous_part(chart, f, d.value());
            std::map<std::string, RatJet> a;
            for (size_t i2 = 0; i2 < chart.dim(); ++i2) a.emplace(chart.coords()[i2], gamma[i2]);
            if (!RingTraits<Rational>::is_zero(poly_on_jets(lead, a, 20).coeff(d.value())))
                CHECK(ord == d);
        }
}

TEST_CASE("weighted morphisms preserve weighted paths (200 random checks)") {
    WeightedChart c({"x", "y"}, {1, 2});
    Poly x = Poly::var("x"), y = Poly::var("y");
    std::vector<std::vector<Poly>> morphs = {
        {x, y},
        {x, y + x * x},
        {x + x * y, y + x.pow(4)},
        {Poly(), y},
    };
    std::uniform_int_distribution<int> coeff(-5, 5);
    for (int trial = 0; trial < 200; ++trial) {
        const auto &phi = morphs[static_cast<size_t>(trial) % morphs.size()];
        REQUIRE(is_weighted_morphism(c, c, phi));
        // random weighted path: x-jet vanishing to order 1, y-jet to order 2
        RatJet gx(8), gy(8);
        for (int n = 1; n <= 8; ++n) gx.set(n, coeff(rng));
        for (int n = 2; n <= 8; ++n) gy.set(n, coeff(rng));
        REQUIRE(is_weighted_path(c, {gx, gy}));
        std::map<std::string, RatJet> a{{"x", gx}, {"y", gy}};
        std::vector<RatJet> image = {poly_on_jets(phi[0], a, 8), poly_on_jets(phi[1], a, 8)};
        CHECK(is_weighted_path(c, image));
    }
}
