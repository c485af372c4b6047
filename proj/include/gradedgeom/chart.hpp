#pragma once

#include "gradedgeom/errors.hpp"
#include "gradedgeom/filt_degree.hpp"
#include "gradedgeom/jet.hpp"
#include "gradedgeom/laurent.hpp"
#include "gradedgeom/poly.hpp"

#include <map>
#include <set>
#include <string>
#include <vector>

namespace gg {

// A coordinate chart with nonnegative base weights. The submanifold N is the
// zero locus of the positive-weight coordinates; weight-0 coordinates are
// tangent to N.
class WeightedChart {
public:
    WeightedChart() = default;
    WeightedChart(std::vector<std::string> coords, std::vector<int> weights);

    size_t dim() const { return coords_.size(); }
    const std::vector<std::string> &coords() const { return coords_; }
    const std::vector<int> &weights() const { return weights_; }
    size_t index_of(const std::string &name) const; // throws on unknown name
    bool has_coord(const std::string &name) const;
    int weight_of(const std::string &name) const { return weights_[index_of(name)]; }

    // Coordinates cut out N (those of positive weight).
    std::set<std::string> transverse_coords() const;

    // Weighted degree of a single exponent vector (indexed by chart coords).
    long monomial_degree(const Exps &e) const;

    bool operator==(const WeightedChart &o) const {
        return coords_ == o.coords_ && weights_ == o.weights_;
    }

    // Validates that the variables of f all belong to this chart.
    void check_vars(const Poly &f) const;

private:
    std::vector<std::string> coords_;
    std::vector<int> weights_;
};

// Largest i with f in C(M)_(i): min over nonzero monomials of the weighted
// degree; +inf for f = 0. Throws on variables not in the chart.
FiltDegree filtration_degree(const WeightedChart &chart, const Poly &f);

// Sum of the monomials of f of weighted degree exactly i.
Poly homogeneous_part(const WeightedChart &chart, const Poly &f, long i);

// Degree-tagged homogeneous class in the associated graded algebra.
struct GrClass {
    FiltDegree degree = FiltDegree::infinity();
    Poly rep;

    bool is_zero() const { return rep.is_zero(); }
    bool operator==(const GrClass &o) const {
        if (is_zero() && o.is_zero()) return true;
        return degree == o.degree && rep == o.rep;
    }
};

// Class of f at its own filtration degree.
GrClass leading_class(const WeightedChart &chart, const Poly &f);

// Class of f at level i (zero when deg f > i; throws DegreeViolation when
// deg f < i, since then f is not in C(M)_(i)).
GrClass gr_class(const WeightedChart &chart, const Poly &f, long i);

GrClass gr_mul(const GrClass &a, const GrClass &b);

// Finite family { i -> f_i } with deg(f_i) >= i, representing sum f_i z^-i.
class ReesElement {
public:
    ReesElement() = default;

    const std::map<int, Poly> &components() const { return comps_; }

    ReesElement operator+(const ReesElement &o) const;
    ReesElement operator*(const ReesElement &o) const;

    friend ReesElement rees_make(const WeightedChart &chart, const Poly &f, long i);

private:
    std::map<int, Poly> comps_;
};

ReesElement rees_make(const WeightedChart &chart, const Poly &f, long i);
Poly rees_eval(const ReesElement &e, const Rational &t);
std::vector<GrClass> rees_fiber0(const WeightedChart &chart, const ReesElement &e);

// t^-i * f(t^w1 x1, ..., t^wm xm), as a Laurent family over the same
// coordinate names. Negative powers are permitted (callers assert).
LaurentParam zoom_rescale(const WeightedChart &chart, const Poly &f, long i);

// phi has one component per dst coordinate, written in src variables; true iff
// deg_src(phi_a) >= w'_a for all a.
bool is_weighted_morphism(const WeightedChart &src, const WeightedChart &dst,
                          const std::vector<Poly> &phi);

// Weighted paths: one jet per coordinate. The a-th component must vanish to
// order >= w_a. Throws UndecidableAtTruncation when the jet is zero up to a
// truncation smaller than w_a - 1.
bool is_weighted_path(const WeightedChart &chart, const std::vector<RatJet> &gamma);

// ord_t of f along gamma; +inf when zero up to the truncation.
FiltDegree path_order(const WeightedChart &chart, const Poly &f, const std::vector<RatJet> &gamma);

} // namespace gg
