#pragma once

#include "gradedgeom/bundle.hpp"

#include <map>
#include <tuple>
#include <vector>

namespace gg {

// Term key: target frame slot a, source frame slot b, derivative multi-index
// beta (indexed by base chart coordinates).
struct DOKey {
    size_t a;
    size_t b;
    Exps beta;
    auto operator<=>(const DOKey &) const = default;
};

// Polynomial-coefficient differential operator on sections of a weighted
// bundle. Normal form: equal (a, b, beta) keys are collected, zero
// coefficients dropped. Scalar operators live on WeightedBundle::scalar.
class DiffOp {
public:
    DiffOp() = default;
    explicit DiffOp(WeightedBundle bundle) : bundle_(std::move(bundle)) {}

    const WeightedBundle &bundle() const { return bundle_; }
    const std::map<DOKey, Poly> &terms() const { return terms_; }

    void add_term(size_t a, size_t b, Exps beta, const Poly &coeff);
    // Scalar convenience (a = b = 0).
    void add_term(Exps beta, const Poly &coeff) { add_term(0, 0, std::move(beta), coeff); }

    DiffOp operator+(const DiffOp &o) const;
    DiffOp operator-() const;
    bool operator==(const DiffOp &o) const { return terms_ == o.terms_; }

    Section apply(const Section &s) const;
    Poly apply_scalar(const Poly &f) const;

    // D after E (apply E first). Expanded via the Leibniz rule into normal form.
    DiffOp compose(const DiffOp &o) const;

private:
    WeightedBundle bundle_;
    std::map<DOKey, Poly> terms_;
};

// min over terms and coefficient monomials of deg(coeff) - beta.w + v_a - v_b;
// +inf for the zero operator.
FiltDegree do_weighted_order(const DiffOp &D);

// Keep each term's coefficient part of the degree that makes the term order
// exactly q. Requires weighted order >= q.
DiffOp weighted_linearization(const DiffOp &D, long q);

// Laurent-coefficient operator family in t.
class LaurentDiffOp {
public:
    explicit LaurentDiffOp(WeightedBundle bundle) : bundle_(std::move(bundle)) {}

    const WeightedBundle &bundle() const { return bundle_; }
    const std::map<DOKey, LaurentParam> &terms() const { return terms_; }
    void add_term(size_t a, size_t b, Exps beta, const LaurentParam &coeff);

    bool has_negative_powers() const;
    int min_exp() const;

    DiffOp slice(const Rational &t) const; // t may be 0 when no negative powers
    std::vector<LaurentParam> apply(const std::vector<LaurentParam> &comps) const;

private:
    WeightedBundle bundle_;
    std::map<DOKey, LaurentParam> terms_;
};

// Substitute x -> t^w x, d/dx -> t^-w d/dx, conjugate frame slots by t^v,
// scale by t^-q. No negative powers iff weighted order >= q; negative powers
// are kept and reported by the result.
LaurentDiffOp interpolate_operator(const DiffOp &D, long q);

// True iff for every monomial operator d^beta with beta.w < i, d^beta f
// vanishes on N = {x_a = 0 : w_a > 0}. Agrees with filtration_degree(f) >= i.
bool recover_scalar_weighting(const WeightedChart &chart, const Poly &f, long i);

// True iff for every lifted monomial operator d^beta (|beta| bounded by the
// witness degree plus one), the components of d^beta sigma restricted to N
// vanish in the fiber slots below level i - beta.w. Agrees with
// section_degree(sigma) >= i.
bool recover_section_weighting(const WeightedBundle &b, const Section &s, long i);

} // namespace gg
