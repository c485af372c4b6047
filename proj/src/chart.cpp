#include "gradedgeom/chart.hpp"

#include <algorithm>
#include <sstream>

namespace gg {

WeightedChart::WeightedChart(std::vector<std::string> coords, std::vector<int> weights)
    : coords_(std::move(coords)), weights_(std::move(weights)) {
    if (coords_.size() != weights_.size())
        throw std::invalid_argument("chart coordinate/weight count mismatch");
    for (int w : weights_)
        if (w < 0) throw std::invalid_argument("base weights must be nonnegative");
    std::set<std::string> seen;
    for (const auto &c : coords_)
        if (!seen.insert(c).second)
            throw std::invalid_argument("duplicate coordinate name " + c);
}

size_t WeightedChart::index_of(const std::string &name) const {
    auto it = std::find(coords_.begin(), coords_.end(), name);
    if (it == coords_.end())
        throw std::invalid_argument("unknown coordinate " + name);
    return static_cast<size_t>(it - coords_.begin());
}

bool WeightedChart::has_coord(const std::string &name) const {
    return std::find(coords_.begin(), coords_.end(), name) != coords_.end();
}

std::set<std::string> WeightedChart::transverse_coords() const {
    std::set<std::string> out;
    for (size_t i = 0; i < coords_.size(); ++i)
        if (weights_[i] > 0) out.insert(coords_[i]);
    return out;
}

long WeightedChart::monomial_degree(const Exps &e) const {
    long d = 0;
    for (size_t i = 0; i < e.size(); ++i) d += static_cast<long>(e[i]) * weights_[i];
    return d;
}

void WeightedChart::check_vars(const Poly &f) const {
    for (const auto &v : f.vars())
        if (!has_coord(v)) throw std::invalid_argument("unknown coordinate " + v);
}

namespace {

// Weighted degree of one poly monomial given the poly's own variable list.
long term_degree(const WeightedChart &chart, const std::vector<std::string> &vars, const Exps &e) {
    long d = 0;
    for (size_t i = 0; i < vars.size(); ++i)
        if (e[i] != 0) d += static_cast<long>(e[i]) * chart.weight_of(vars[i]);
    return d;
}

} // namespace

FiltDegree filtration_degree(const WeightedChart &chart, const Poly &f) {
    chart.check_vars(f);
    FiltDegree d = FiltDegree::infinity();
    for (const auto &[e, c] : f.terms())
        d = min(d, FiltDegree::of(term_degree(chart, f.vars(), e)));
    return d;
}

Poly homogeneous_part(const WeightedChart &chart, const Poly &f, long i) {
    chart.check_vars(f);
    std::map<Exps, Rational> out;
    for (const auto &[e, c] : f.terms())
        if (term_degree(chart, f.vars(), e) == i) out[e] = c;
    return Poly::make(f.vars(), std::move(out));
}

GrClass leading_class(const WeightedChart &chart, const Poly &f) {
    FiltDegree d = filtration_degree(chart, f);
    if (d.is_infinite()) return GrClass{};
    return GrClass{d, homogeneous_part(chart, f, d.value())};
}

GrClass gr_class(const WeightedChart &chart, const Poly &f, long i) {
    FiltDegree d = filtration_degree(chart, f);
    if (d < i)
        throw DegreeViolation("gr_class: f has filtration degree " + d.str() +
                              " < " + std::to_string(i));
    return GrClass{FiltDegree::of(i), homogeneous_part(chart, f, i)};
}

GrClass gr_mul(const GrClass &a, const GrClass &b) {
    return GrClass{a.degree + b.degree, a.rep * b.rep};
}

ReesElement ReesElement::operator+(const ReesElement &o) const {
    ReesElement r = *this;
    for (const auto &[i, f] : o.comps_) {
        auto it = r.comps_.find(i);
        if (it == r.comps_.end()) r.comps_[i] = f;
        else {
            it->second += f;
            if (it->second.is_zero()) r.comps_.erase(it);
        }
    }
    return r;
}

ReesElement ReesElement::operator*(const ReesElement &o) const {
    ReesElement r;
    for (const auto &[i, f] : comps_)
        for (const auto &[j, g] : o.comps_) {
            Poly p = f * g;
            if (p.is_zero()) continue;
            auto it = r.comps_.find(i + j);
            if (it == r.comps_.end()) r.comps_[i + j] = p;
            else it->second += p;
        }
    for (auto it = r.comps_.begin(); it != r.comps_.end();)
        it = it->second.is_zero() ? r.comps_.erase(it) : std::next(it);
    return r;
}

ReesElement rees_make(const WeightedChart &chart, const Poly &f, long i) {
    FiltDegree d = filtration_degree(chart, f);
    if (d < i)
        throw DegreeViolation("rees_make: f has filtration degree " + d.str() +
                              " < " + std::to_string(i));
    ReesElement e;
    if (!f.is_zero()) e.comps_[static_cast<int>(i)] = f;
    return e;
}

Poly rees_eval(const ReesElement &e, const Rational &t) {
    if (t == 0) throw std::domain_error("rees_eval at t=0; use rees_fiber0");
    Poly out;
    for (const auto &[i, f] : e.components()) out += f * rat_pow(t, -i);
    return out;
}

std::vector<GrClass> rees_fiber0(const WeightedChart &chart, const ReesElement &e) {
    std::vector<GrClass> out;
    for (const auto &[i, f] : e.components())
        out.push_back(GrClass{FiltDegree::of(i), homogeneous_part(chart, f, i)});
    return out;
}

LaurentParam zoom_rescale(const WeightedChart &chart, const Poly &f, long i) {
    chart.check_vars(f);
    LaurentParam out;
    for (const auto &[e, c] : f.terms()) {
        long d = term_degree(chart, f.vars(), e);
        std::map<Exps, Rational> one{{e, c}};
        out += LaurentParam::term(static_cast<int>(d - i), Poly::make(f.vars(), std::move(one)));
    }
    return out;
}

bool is_weighted_morphism(const WeightedChart &src, const WeightedChart &dst,
                          const std::vector<Poly> &phi) {
    if (phi.size() != dst.dim())
        throw std::invalid_argument("morphism has " + std::to_string(phi.size()) +
                                    " components; destination chart has " +
                                    std::to_string(dst.dim()) + " coordinates");
    for (size_t a = 0; a < phi.size(); ++a)
        if (filtration_degree(src, phi[a]) < static_cast<long>(dst.weights()[a]))
            return false;
    return true;
}

bool is_weighted_path(const WeightedChart &chart, const std::vector<RatJet> &gamma) {
    if (gamma.size() != chart.dim())
        throw std::invalid_argument("path has " + std::to_string(gamma.size()) +
                                    " components; chart has " + std::to_string(chart.dim()));
    for (size_t a = 0; a < gamma.size(); ++a) {
        int w = chart.weights()[a];
        FiltDegree ord = gamma[a].vanishing_order();
        if (ord < static_cast<long>(w)) return false;
        if (ord.is_infinite() && gamma[a].order() < w - 1)
            throw UndecidableAtTruncation(
                "component " + chart.coords()[a] + " is zero up to truncation order " +
                std::to_string(gamma[a].order()) + ", too small to certify vanishing to order " +
                std::to_string(w));
    }
    return true;
}

FiltDegree path_order(const WeightedChart &chart, const Poly &f, const std::vector<RatJet> &gamma) {
    if (gamma.size() != chart.dim())
        throw std::invalid_argument("path has " + std::to_string(gamma.size()) +
                                    " components; chart has " + std::to_string(chart.dim()));
    chart.check_vars(f);
    int order = gamma.empty() ? 0 : gamma.front().order();
    for (const auto &j : gamma) order = std::min(order, j.order());
    std::map<std::string, RatJet> a;
    for (size_t i = 0; i < gamma.size(); ++i) a.emplace(chart.coords()[i], gamma[i]);
    return poly_on_jets(f, a, order).vanishing_order();
}

} // namespace gg
