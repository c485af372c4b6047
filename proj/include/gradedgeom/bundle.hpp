#pragma once

#include "gradedgeom/chart.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace gg {

// Trivialized linearly weighted bundle over a chart.
//
// Sign conventions (used consistently everywhere): frame element sigma_a has
// section degree v_a; the dual fiber coordinate y_a has fiber-polynomial
// weight -v_a; a monomial x^alpha y^beta has weighted degree
// alpha.w - beta.v; the dual bundle carries weights -v.
class WeightedBundle {
public:
    WeightedBundle() = default;
    WeightedBundle(WeightedChart base, std::vector<std::string> frame_names,
                   std::vector<int> vweights,
                   std::vector<std::string> fiber_names = {});

    static WeightedBundle scalar(const WeightedChart &chart);

    const WeightedChart &base() const { return base_; }
    size_t rank() const { return frames_.size(); }
    const std::vector<std::string> &frame_names() const { return frames_; }
    const std::vector<int> &vweights() const { return vweights_; }
    const std::vector<std::string> &fiber_names() const { return fibers_; }
    size_t frame_index(const std::string &name) const;
    bool same_shape(const WeightedBundle &o) const {
        return base_ == o.base_ && vweights_ == o.vweights_;
    }

private:
    WeightedChart base_;
    std::vector<std::string> frames_;
    std::vector<int> vweights_;
    std::vector<std::string> fibers_;
};

// sigma = sum_a components[a] * sigma_a; polynomial components over the base.
struct Section {
    std::vector<Poly> components;

    bool operator==(const Section &o) const { return components == o.components; }
};

// Homogeneous class of a section at a given degree: component a is weighted
// homogeneous of degree i - v_a.
struct GrSection {
    FiltDegree degree = FiltDegree::infinity();
    std::vector<Poly> components;

    bool is_zero() const {
        for (const auto &c : components)
            if (!c.is_zero()) return false;
        return true;
    }
    bool operator==(const GrSection &o) const {
        if (is_zero() && o.is_zero()) return true;
        return degree == o.degree && components == o.components;
    }
};

// min over monomials x^alpha y^beta of alpha.w - beta.v; the polynomial may
// use base and fiber coordinates.
FiltDegree fiber_poly_degree(const WeightedBundle &b, const Poly &f);

// min_a (deg f_a + v_a); +inf for the zero section.
FiltDegree section_degree(const WeightedBundle &b, const Section &s);

// Induced weightings. Binary constructions require the same base chart.
WeightedBundle dual(const WeightedBundle &b);
WeightedBundle tensor(const WeightedBundle &b, const WeightedBundle &c);
WeightedBundle hom(const WeightedBundle &b, const WeightedBundle &c);
WeightedBundle sym(const WeightedBundle &b, int n);
WeightedBundle wedge(const WeightedBundle &b, int n);
WeightedBundle shift(const WeightedBundle &b, int k);

// Pullback along a weighted morphism src -> base of b. Vertical weights carry
// over on the pulled-back frame. Throws if phi is not weighted.
WeightedBundle pullback(const WeightedChart &src, const std::vector<Poly> &phi,
                        const WeightedBundle &b);

// Section of the pulled-back bundle: substitute the base coordinates of b by
// the morphism components.
Section pullback_section(const WeightedChart &src, const std::vector<Poly> &phi,
                         const WeightedBundle &b, const Section &s);

// i -> k_i = #{a : v_a >= i}, for i from min v to max v + 1.
std::map<int, int> fiber_filtration_ranks(const WeightedBundle &b);

// Kill a subset of base and fiber coordinates; remaining weights inherited.
WeightedBundle restrict_to_subbundle(const WeightedBundle &b,
                                     const std::set<std::string> &base_coords_to_kill,
                                     const std::set<std::string> &fiber_coords_to_kill);

// Component a = homogeneous_part(f_a, i - v_a). Requires section degree >= i.
GrSection homogeneous_approx(const WeightedBundle &b, const Section &s, long i);

// Substitute y_a -> f_a in a fiber polynomial.
Poly compose(const WeightedBundle &b, const Poly &fiber_poly, const Section &s);

// Component a = t^{v_a - i} f_a(t^w x). Throws DegreeViolation (naming the
// most negative power) when section degree < i.
std::vector<LaurentParam> interpolate_section(const WeightedBundle &b, const Section &s, long i);

// Checks the zoom diagram for sigma^[i]: lambda^{-v_a} g_a(x) =
// lambda^{-i+exponent_shift} g_a(lambda^w x) for all frame slots. The shift
// perturbs the right-leg exponent (0 is the true diagram).
bool zoom_equivariance_check(const WeightedBundle &b, const Section &s, long i,
                             const Rational &lambda, long exponent_shift = 0);

} // namespace gg
