#include "gradedgeom/bundle.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace gg {

WeightedBundle::WeightedBundle(WeightedChart base, std::vector<std::string> frame_names,
                               std::vector<int> vweights, std::vector<std::string> fiber_names)
    : base_(std::move(base)), frames_(std::move(frame_names)), vweights_(std::move(vweights)),
      fibers_(std::move(fiber_names)) {
    if (frames_.size() != vweights_.size())
        throw std::invalid_argument("frame/vertical-weight count mismatch");
    std::set<std::string> seen;
    for (const auto &f : frames_)
        if (!seen.insert(f).second) throw std::invalid_argument("duplicate frame name " + f);
    if (fibers_.empty()) {
        for (size_t a = 0; a < frames_.size(); ++a) {
            std::string name = "y" + std::to_string(a + 1);
            if (base_.has_coord(name)) name = "y_" + frames_[a];
            fibers_.push_back(name);
        }
    }
    if (fibers_.size() != frames_.size())
        throw std::invalid_argument("fiber-coordinate/frame count mismatch");
    for (const auto &y : fibers_) {
        if (base_.has_coord(y))
            throw std::invalid_argument("fiber coordinate " + y + " shadows a base coordinate");
        if (!seen.insert(y).second)
            throw std::invalid_argument("duplicate fiber coordinate " + y);
    }
}

WeightedBundle WeightedBundle::scalar(const WeightedChart &chart) {
    return WeightedBundle(chart, {"1"}, {0});
}

size_t WeightedBundle::frame_index(const std::string &name) const {
    auto it = std::find(frames_.begin(), frames_.end(), name);
    if (it == frames_.end()) throw std::invalid_argument("unknown frame element " + name);
    return static_cast<size_t>(it - frames_.begin());
}

FiltDegree fiber_poly_degree(const WeightedBundle &b, const Poly &f) {
    FiltDegree d = FiltDegree::infinity();
    const auto &vars = f.vars();
    std::vector<long> w(vars.size());
    for (size_t i = 0; i < vars.size(); ++i) {
        auto it = std::find(b.fiber_names().begin(), b.fiber_names().end(), vars[i]);
        if (it != b.fiber_names().end())
            w[i] = -static_cast<long>(b.vweights()[it - b.fiber_names().begin()]);
        else
            w[i] = b.base().weight_of(vars[i]); // throws on unknown variable
    }
    for (const auto &[e, c] : f.terms()) {
        long deg = 0;
        for (size_t i = 0; i < e.size(); ++i) deg += e[i] * w[i];
        d = min(d, FiltDegree::of(deg));
    }
    return d;
}

FiltDegree section_degree(const WeightedBundle &b, const Section &s) {
    if (s.components.size() != b.rank())
        throw std::invalid_argument("section component count != bundle rank");
    FiltDegree d = FiltDegree::infinity();
    for (size_t a = 0; a < b.rank(); ++a)
        d = min(d, filtration_degree(b.base(), s.components[a]) + b.vweights()[a]);
    return d;
}

WeightedBundle dual(const WeightedBundle &b) {
    std::vector<std::string> names;
    std::vector<int> v;
    for (size_t a = 0; a < b.rank(); ++a) {
        names.push_back(b.frame_names()[a] + "'");
        v.push_back(-b.vweights()[a]);
    }
    return WeightedBundle(b.base(), std::move(names), std::move(v));
}

WeightedBundle tensor(const WeightedBundle &b, const WeightedBundle &c) {
    if (!(b.base() == c.base()))
        throw std::invalid_argument("tensor: bundles have different base charts");
    std::vector<std::string> names;
    std::vector<int> v;
    for (size_t a = 0; a < b.rank(); ++a)
        for (size_t d = 0; d < c.rank(); ++d) {
            names.push_back(b.frame_names()[a] + "." + c.frame_names()[d]);
            v.push_back(b.vweights()[a] + c.vweights()[d]);
        }
    return WeightedBundle(b.base(), std::move(names), std::move(v));
}

WeightedBundle hom(const WeightedBundle &b, const WeightedBundle &c) {
    return tensor(dual(b), c);
}

WeightedBundle sym(const WeightedBundle &b, int n) {
    if (n < 0) throw std::invalid_argument("sym: negative power");
    std::vector<std::string> names;
    std::vector<int> v;
    std::vector<size_t> idx(static_cast<size_t>(n), 0);
    // multisets: nondecreasing index tuples
    std::function<void(size_t, size_t)> rec = [&](size_t pos, size_t start) {
        if (pos == static_cast<size_t>(n)) {
            std::string name;
            int weight = 0;
            for (size_t p = 0; p < idx.size(); ++p) {
                if (p) name += ".";
                name += b.frame_names()[idx[p]];
                weight += b.vweights()[idx[p]];
            }
            names.push_back(name.empty() ? "1" : name);
            v.push_back(weight);
            return;
        }
        for (size_t a = start; a < b.rank(); ++a) {
            idx[pos] = a;
            rec(pos + 1, a);
        }
    };
    rec(0, 0);
    return WeightedBundle(b.base(), std::move(names), std::move(v));
}

WeightedBundle wedge(const WeightedBundle &b, int n) {
    if (n < 0) throw std::invalid_argument("wedge: negative power");
    std::vector<std::string> names;
    std::vector<int> v;
    std::vector<size_t> idx(static_cast<size_t>(n), 0);
    std::function<void(size_t, size_t)> rec = [&](size_t pos, size_t start) {
        if (pos == static_cast<size_t>(n)) {
            std::string name;
            int weight = 0;
            for (size_t p = 0; p < idx.size(); ++p) {
                if (p) name += ".";
                name += b.frame_names()[idx[p]];
                weight += b.vweights()[idx[p]];
            }
            names.push_back(name.empty() ? "1" : name);
            v.push_back(weight);
            return;
        }
        for (size_t a = start; a < b.rank(); ++a) {
            idx[pos] = a;
            rec(pos + 1, a + 1);
        }
    };
    rec(0, 0);
    return WeightedBundle(b.base(), std::move(names), std::move(v));
}

WeightedBundle shift(const WeightedBundle &b, int k) {
    std::vector<int> v = b.vweights();
    for (int &x : v) x -= k;
    return WeightedBundle(b.base(), b.frame_names(), std::move(v), b.fiber_names());
}

WeightedBundle pullback(const WeightedChart &src, const std::vector<Poly> &phi,
                        const WeightedBundle &b) {
    if (!is_weighted_morphism(src, b.base(), phi))
        throw std::invalid_argument("pullback along a non-weighted morphism");
    return WeightedBundle(src, b.frame_names(), b.vweights(), b.fiber_names());
}

Section pullback_section(const WeightedChart &src, const std::vector<Poly> &phi,
                         const WeightedBundle &b, const Section &s) {
    if (!is_weighted_morphism(src, b.base(), phi))
        throw std::invalid_argument("pullback along a non-weighted morphism");
    std::map<std::string, Poly> sub;
    for (size_t j = 0; j < b.base().dim(); ++j) sub[b.base().coords()[j]] = phi[j];
    Section out;
    for (const auto &f : s.components) out.components.push_back(f.substitute_partial(sub));
    return out;
}

std::map<int, int> fiber_filtration_ranks(const WeightedBundle &b) {
    std::map<int, int> out;
    if (b.rank() == 0) return out;
    int lo = *std::min_element(b.vweights().begin(), b.vweights().end());
    int hi = *std::max_element(b.vweights().begin(), b.vweights().end());
    for (int i = lo; i <= hi + 1; ++i) {
        int k = 0;
        for (int v : b.vweights())
            if (v >= i) ++k;
        out[i] = k;
    }
    return out;
}

WeightedBundle restrict_to_subbundle(const WeightedBundle &b,
                                     const std::set<std::string> &base_kill,
                                     const std::set<std::string> &fiber_kill) {
    for (const auto &n : base_kill) b.base().index_of(n); // throws on unknown
    for (const auto &n : fiber_kill)
        if (std::find(b.fiber_names().begin(), b.fiber_names().end(), n) == b.fiber_names().end())
            throw std::invalid_argument("unknown fiber coordinate " + n);
    std::vector<std::string> coords;
    std::vector<int> weights;
    for (size_t j = 0; j < b.base().dim(); ++j)
        if (!base_kill.count(b.base().coords()[j])) {
            coords.push_back(b.base().coords()[j]);
            weights.push_back(b.base().weights()[j]);
        }
    std::vector<std::string> frames, fibers;
    std::vector<int> v;
    for (size_t a = 0; a < b.rank(); ++a)
        if (!fiber_kill.count(b.fiber_names()[a])) {
            frames.push_back(b.frame_names()[a]);
            fibers.push_back(b.fiber_names()[a]);
            v.push_back(b.vweights()[a]);
        }
    return WeightedBundle(WeightedChart(std::move(coords), std::move(weights)),
                          std::move(frames), std::move(v), std::move(fibers));
}

GrSection homogeneous_approx(const WeightedBundle &b, const Section &s, long i) {
    FiltDegree d = section_degree(b, s);
    if (d < i)
        throw DegreeViolation("homogeneous_approx: section degree " + d.str() + " < " +
                              std::to_string(i));
    GrSection out;
    out.degree = FiltDegree::of(i);
    for (size_t a = 0; a < b.rank(); ++a)
        out.components.push_back(homogeneous_part(b.base(), s.components[a], i - b.vweights()[a]));
    return out;
}

Poly compose(const WeightedBundle &b, const Poly &fiber_poly, const Section &s) {
    if (s.components.size() != b.rank())
        throw std::invalid_argument("section component count != bundle rank");
    std::map<std::string, Poly> sub;
    for (size_t a = 0; a < b.rank(); ++a) sub[b.fiber_names()[a]] = s.components[a];
    return fiber_poly.substitute_partial(sub);
}

std::vector<LaurentParam> interpolate_section(const WeightedBundle &b, const Section &s, long i) {
    if (s.components.size() != b.rank())
        throw std::invalid_argument("section component count != bundle rank");
    std::vector<LaurentParam> out;
    int worst = 0;
    for (size_t a = 0; a < b.rank(); ++a) {
        LaurentParam fam = zoom_rescale(b.base(), s.components[a], i - b.vweights()[a]);
        if (!fam.is_zero()) worst = std::min(worst, fam.min_exp());
        out.push_back(std::move(fam));
    }
    if (worst < 0)
        throw DegreeViolation("interpolate_section: negative power t^" + std::to_string(worst) +
                              " (section degree below " + std::to_string(i) + ")");
    return out;
}

bool zoom_equivariance_check(const WeightedBundle &b, const Section &s, long i,
                             const Rational &lambda, long exponent_shift) {
    if (lambda == 0) throw std::invalid_argument("zoom action requires lambda != 0");
    GrSection g = homogeneous_approx(b, s, i);
    std::map<std::string, Poly> scale;
    for (size_t j = 0; j < b.base().dim(); ++j)
        scale[b.base().coords()[j]] =
            Poly(rat_pow(lambda, b.base().weights()[j])) * Poly::var(b.base().coords()[j]);
    Rational right = rat_pow(lambda, -i + exponent_shift);
    for (size_t a = 0; a < b.rank(); ++a) {
        Poly lhs = g.components[a] * rat_pow(lambda, -b.vweights()[a]);
        Poly rhs = g.components[a].substitute_partial(scale) * right;
        if (lhs != rhs) return false;
    }
    return true;
}

} // namespace gg
