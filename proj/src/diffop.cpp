#include "gradedgeom/diffop.hpp"

#include <functional>

namespace gg {

namespace {

Poly derivative_multi(const Poly &f, const WeightedChart &chart, const Exps &beta) {
    Poly out = f;
    for (size_t j = 0; j < beta.size(); ++j)
        if (beta[j] > 0) out = out.derivative(chart.coords()[j], beta[j]);
    return out;
}

Rational multi_binom(const Exps &beta, const Exps &gamma) {
    Rational out(1);
    for (size_t j = 0; j < beta.size(); ++j) {
        // C(beta_j, gamma_j)
        Integer num(1), den(1);
        for (int r = 0; r < gamma[j]; ++r) {
            num *= beta[j] - r;
            den *= r + 1;
        }
        out *= Rational(num, den);
    }
    return out;
}

void enumerate_multi_indices(size_t dims, int max_total,
                             const std::function<void(const Exps &)> &fn) {
    Exps beta(dims, 0);
    std::function<void(size_t, int)> rec = [&](size_t pos, int left) {
        if (pos == dims) {
            fn(beta);
            return;
        }
        for (int e = 0; e <= left; ++e) {
            beta[pos] = e;
            rec(pos + 1, left - e);
        }
        beta[pos] = 0;
    };
    rec(0, max_total);
}

} // namespace

void DiffOp::add_term(size_t a, size_t b, Exps beta, const Poly &coeff) {
    if (a >= bundle_.rank() || b >= bundle_.rank())
        throw std::invalid_argument("frame slot out of range");
    if (beta.size() != bundle_.base().dim())
        throw std::invalid_argument("derivative multi-index length != chart dimension");
    if (coeff.is_zero()) return;
    DOKey key{a, b, std::move(beta)};
    auto it = terms_.find(key);
    if (it == terms_.end()) terms_[key] = coeff;
    else {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

DiffOp DiffOp::operator+(const DiffOp &o) const {
    DiffOp r = *this;
    for (const auto &[k, c] : o.terms_) r.add_term(k.a, k.b, k.beta, c);
    return r;
}

DiffOp DiffOp::operator-() const {
    DiffOp r(bundle_);
    for (const auto &[k, c] : terms_) r.add_term(k.a, k.b, k.beta, -c);
    return r;
}

Section DiffOp::apply(const Section &s) const {
    if (s.components.size() != bundle_.rank())
        throw std::invalid_argument("section component count != bundle rank");
    Section out;
    out.components.assign(bundle_.rank(), Poly());
    for (const auto &[k, c] : terms_)
        out.components[k.a] += c * derivative_multi(s.components[k.b], bundle_.base(), k.beta);
    return out;
}

Poly DiffOp::apply_scalar(const Poly &f) const {
    if (bundle_.rank() != 1)
        throw std::invalid_argument("apply_scalar on a non-scalar operator");
    return apply(Section{{f}}).components[0];
}

DiffOp DiffOp::compose(const DiffOp &o) const {
    DiffOp r(bundle_);
    const WeightedChart &chart = bundle_.base();
    for (const auto &[kd, cd] : terms_)
        for (const auto &[ke, ce] : o.terms_) {
            if (kd.b != ke.a) continue;
            // Leibniz: d^beta (c g) = sum_{gamma <= beta} C(beta,gamma) d^gamma c * d^{beta-gamma} g
            Exps gamma(kd.beta.size(), 0);
            std::function<void(size_t)> rec = [&](size_t pos) {
                if (pos == gamma.size()) {
                    Poly dcoeff = derivative_multi(ce, chart, gamma);
                    if (dcoeff.is_zero()) return;
                    Exps nbeta(kd.beta.size());
                    for (size_t j = 0; j < nbeta.size(); ++j)
                        nbeta[j] = kd.beta[j] - gamma[j] + ke.beta[j];
                    r.add_term(kd.a, ke.b, std::move(nbeta),
                               cd * dcoeff * multi_binom(kd.beta, gamma));
                    return;
                }
                for (int e = 0; e <= kd.beta[pos]; ++e) {
                    gamma[pos] = e;
                    rec(pos + 1);
                }
            };
            rec(0);
        }
    return r;
}

FiltDegree do_weighted_order(const DiffOp &D) {
    FiltDegree q = FiltDegree::infinity();
    const WeightedChart &chart = D.bundle().base();
    for (const auto &[k, c] : D.terms()) {
        long bw = 0;
        for (size_t j = 0; j < k.beta.size(); ++j)
            bw += static_cast<long>(k.beta[j]) * chart.weights()[j];
        FiltDegree cd = filtration_degree(chart, c);
        long shift = D.bundle().vweights()[k.a] - D.bundle().vweights()[k.b];
        q = min(q, cd + (-bw + shift));
    }
    return q;
}

DiffOp weighted_linearization(const DiffOp &D, long q) {
    FiltDegree ord = do_weighted_order(D);
    if (ord < q)
        throw DegreeViolation("weighted_linearization: operator order " + ord.str() + " < " +
                              std::to_string(q));
    const WeightedChart &chart = D.bundle().base();
    DiffOp out(D.bundle());
    for (const auto &[k, c] : D.terms()) {
        long bw = 0;
        for (size_t j = 0; j < k.beta.size(); ++j)
            bw += static_cast<long>(k.beta[j]) * chart.weights()[j];
        long shift = D.bundle().vweights()[k.a] - D.bundle().vweights()[k.b];
        // keep the coefficient part of degree d with d - bw + shift = q
        out.add_term(k.a, k.b, k.beta, homogeneous_part(chart, c, q + bw - shift));
    }
    return out;
}

void LaurentDiffOp::add_term(size_t a, size_t b, Exps beta, const LaurentParam &coeff) {
    if (coeff.is_zero()) return;
    DOKey key{a, b, std::move(beta)};
    auto it = terms_.find(key);
    if (it == terms_.end()) terms_[key] = coeff;
    else it->second += coeff;
}

bool LaurentDiffOp::has_negative_powers() const {
    for (const auto &[k, c] : terms_)
        if (c.has_negative_powers()) return true;
    return false;
}

int LaurentDiffOp::min_exp() const {
    int m = 0;
    for (const auto &[k, c] : terms_)
        if (!c.is_zero()) m = std::min(m, c.min_exp());
    return m;
}

DiffOp LaurentDiffOp::slice(const Rational &t) const {
    DiffOp out(bundle_);
    for (const auto &[k, c] : terms_)
        out.add_term(k.a, k.b, k.beta, t == 0 ? c.coeff(0) : c.eval_param(t));
    return out;
}

std::vector<LaurentParam> LaurentDiffOp::apply(const std::vector<LaurentParam> &comps) const {
    if (comps.size() != bundle_.rank())
        throw std::invalid_argument("component count != bundle rank");
    std::vector<LaurentParam> out(bundle_.rank());
    const WeightedChart &chart = bundle_.base();
    for (const auto &[k, c] : terms_) {
        LaurentParam d = comps[k.b];
        for (size_t j = 0; j < k.beta.size(); ++j)
            for (int r = 0; r < k.beta[j]; ++r) d = d.derivative(chart.coords()[j]);
        out[k.a] += c * d;
    }
    return out;
}

LaurentDiffOp interpolate_operator(const DiffOp &D, long q) {
    const WeightedChart &chart = D.bundle().base();
    LaurentDiffOp out(D.bundle());
    for (const auto &[k, c] : D.terms()) {
        long bw = 0;
        for (size_t j = 0; j < k.beta.size(); ++j)
            bw += static_cast<long>(k.beta[j]) * chart.weights()[j];
        long shift = D.bundle().vweights()[k.a] - D.bundle().vweights()[k.b];
        // per coefficient monomial: t^(alpha.w - beta.w + v_a - v_b - q)
        LaurentParam fam = zoom_rescale(chart, c, q + bw - shift);
        out.add_term(k.a, k.b, k.beta, fam);
    }
    return out;
}

bool recover_scalar_weighting(const WeightedChart &chart, const Poly &f, long i) {
    if (f.is_zero()) return true;
    std::set<std::string> transverse = chart.transverse_coords();
    // d^beta annihilates f once any beta_j exceeds the degree in x_j.
    std::vector<int> caps(chart.dim());
    for (size_t j = 0; j < chart.dim(); ++j) caps[j] = f.degree_in(chart.coords()[j]);
    bool ok = true;
    Exps beta(chart.dim(), 0);
    std::function<void(size_t)> rec = [&](size_t pos) {
        if (!ok) return;
        if (pos == chart.dim()) {
            long bw = chart.monomial_degree(beta);
            if (bw >= i) return;
            if (!derivative_multi(f, chart, beta).kill_vars(transverse).is_zero()) ok = false;
            return;
        }
        for (int e = 0; e <= caps[pos]; ++e) {
            beta[pos] = e;
            rec(pos + 1);
        }
        beta[pos] = 0;
    };
    rec(0);
    return ok;
}

bool recover_section_weighting(const WeightedBundle &b, const Section &s, long i) {
    if (s.components.size() != b.rank())
        throw std::invalid_argument("section component count != bundle rank");
    const WeightedChart &chart = b.base();
    std::set<std::string> transverse = chart.transverse_coords();
    int maxdeg = 0;
    for (const auto &f : s.components) maxdeg = std::max(maxdeg, f.total_degree());
    bool ok = true;
    enumerate_multi_indices(chart.dim(), maxdeg + 1, [&](const Exps &beta) {
        if (!ok) return;
        long q = -chart.monomial_degree(beta);
        for (size_t a = 0; a < b.rank() && ok; ++a) {
            if (b.vweights()[a] >= i + q) continue; // slot survives at this level
            if (!derivative_multi(s.components[a], chart, beta).kill_vars(transverse).is_zero())
                ok = false;
        }
    });
    return ok;
}

} // namespace gg
