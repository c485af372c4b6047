#include "gradedgeom/getzler.hpp"

#include <bit>
#include <functional>

namespace gg {

namespace {

std::vector<std::string> u_coords(int k) {
    std::vector<std::string> out;
    for (int i = 1; i <= k; ++i) out.push_back("u" + std::to_string(i));
    return out;
}

// e_A * e_B in the Clifford algebra, via CliffordElt (single-blade product).
std::pair<Rational, uint32_t> cl_blade_mul(int k, uint32_t a, uint32_t b) {
    CliffordElt prod = CliffordElt::blade(k, a) * CliffordElt::blade(k, b);
    if (prod.is_zero()) return {Rational(0), 0};
    return {prod.terms().begin()->second, prod.terms().begin()->first};
}

std::pair<Rational, uint32_t> wedge_blade_mul(int k, uint32_t a, uint32_t b) {
    ExteriorElt prod = ExteriorElt::blade(k, a) * ExteriorElt::blade(k, b);
    if (prod.is_zero()) return {Rational(0), 0};
    return {prod.terms().begin()->second, prod.terms().begin()->first};
}

Poly derivative_multi(const Poly &f, const std::vector<std::string> &coords, const Exps &beta) {
    Poly out = f;
    for (size_t j = 0; j < beta.size(); ++j)
        if (beta[j] > 0) out = out.derivative(coords[j], beta[j]);
    return out;
}

Rational multi_binom(const Exps &beta, const Exps &gamma) {
    Rational out(1);
    for (size_t j = 0; j < beta.size(); ++j) {
        Integer num(1), den(1);
        for (int r = 0; r < gamma[j]; ++r) {
            num *= beta[j] - r;
            den *= r + 1;
        }
        out *= Rational(num, den);
    }
    return out;
}

} // namespace

void clpoly_normalize(ClPoly &p) {
    for (auto it = p.begin(); it != p.end();)
        it = it->second.is_zero() ? p.erase(it) : std::next(it);
}

ClPoly clpoly_add(const ClPoly &a, const ClPoly &b) {
    ClPoly out = a;
    for (const auto &[bits, f] : b) out[bits] += f;
    clpoly_normalize(out);
    return out;
}

bool clpoly_equal(const ClPoly &a, const ClPoly &b) {
    ClPoly x = a, y = b;
    clpoly_normalize(x);
    clpoly_normalize(y);
    return x == y;
}

GetzlerOp::GetzlerOp(int k) : k_(k), chart_(u_coords(k), std::vector<int>(k, 1)) {
    if (k < 0 || k > 12) throw std::invalid_argument("unsupported Getzler model dimension");
}

void GetzlerOp::add_term(const Poly &coeff, const CliffordElt &cl, Exps beta) {
    if (beta.size() != static_cast<size_t>(k_))
        throw std::invalid_argument("derivative multi-index length != dimension");
    for (const auto &[bits, c] : cl.terms()) {
        Poly full = coeff * c;
        if (full.is_zero()) continue;
        auto key = std::make_pair(bits, beta);
        auto it = terms_.find(key);
        if (it == terms_.end()) terms_[key] = full;
        else {
            it->second += full;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
}

GetzlerOp GetzlerOp::operator+(const GetzlerOp &o) const {
    if (k_ != o.k_) throw std::invalid_argument("dimension mismatch");
    GetzlerOp r = *this;
    for (const auto &[key, c] : o.terms_)
        r.add_term(c, CliffordElt::blade(k_, key.first), key.second);
    return r;
}

ClPoly GetzlerOp::apply(const ClPoly &s) const {
    ClPoly out;
    for (const auto &[key, c] : terms_) {
        const auto &[blade, beta] = key;
        for (const auto &[sbits, f] : s) {
            Poly d = c * derivative_multi(f, chart_.coords(), beta);
            if (d.is_zero()) continue;
            auto [sign, bits] = cl_blade_mul(k_, blade, sbits);
            if (sign == 0) continue;
            out[bits] += d * sign;
        }
    }
    clpoly_normalize(out);
    return out;
}

GetzlerOp GetzlerOp::compose(const GetzlerOp &o) const {
    if (k_ != o.k_) throw std::invalid_argument("dimension mismatch");
    GetzlerOp r(k_);
    for (const auto &[kd, cd] : terms_)
        for (const auto &[ke, ce] : o.terms_) {
            auto [sign, bits] = cl_blade_mul(k_, kd.first, ke.first);
            if (sign == 0) continue;
            Exps gamma(kd.second.size(), 0);
            std::function<void(size_t)> rec = [&](size_t pos) {
                if (pos == gamma.size()) {
                    Poly dcoeff = derivative_multi(ce, chart_.coords(), gamma);
                    if (dcoeff.is_zero()) return;
                    Exps nbeta(kd.second.size());
                    for (size_t j = 0; j < nbeta.size(); ++j)
                        nbeta[j] = kd.second[j] - gamma[j] + ke.second[j];
                    r.add_term(cd * dcoeff * multi_binom(kd.second, gamma) * sign,
                               CliffordElt::blade(k_, bits), std::move(nbeta));
                    return;
                }
                for (int e = 0; e <= kd.second[pos]; ++e) {
                    gamma[pos] = e;
                    rec(pos + 1);
                }
            };
            rec(0);
        }
    return r;
}

FiltDegree getzler_order(const GetzlerOp &D) {
    FiltDegree q = FiltDegree::infinity();
    for (const auto &[key, c] : D.terms()) {
        long fixed = -std::popcount(key.first);
        for (int b : key.second) fixed -= b;
        FiltDegree cd = filtration_degree(D.chart(), c); // total degree (weights all 1)
        q = min(q, cd + fixed);
    }
    return q;
}

void GetzlerSymbol::add_term(const Poly &coeff, uint32_t blade, Exps beta) {
    if (coeff.is_zero()) return;
    auto key = std::make_pair(blade, std::move(beta));
    auto it = terms_.find(key);
    if (it == terms_.end()) terms_[key] = coeff;
    else {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

ClPoly GetzlerSymbol::apply(const ClPoly &s) const {
    std::vector<std::string> coords = u_coords(k_);
    ClPoly out;
    for (const auto &[key, c] : terms_) {
        const auto &[blade, beta] = key;
        for (const auto &[sbits, f] : s) {
            Poly d = c * derivative_multi(f, coords, beta);
            if (d.is_zero()) continue;
            auto [sign, bits] = wedge_blade_mul(k_, blade, sbits);
            if (sign == 0) continue;
            out[bits] += d * sign;
        }
    }
    clpoly_normalize(out);
    return out;
}

GetzlerSymbol getzler_symbol(const GetzlerOp &D, long q) {
    FiltDegree ord = getzler_order(D);
    if (ord < q)
        throw DegreeViolation("getzler_symbol: operator order " + ord.str() + " < " +
                              std::to_string(q));
    GetzlerSymbol out(D.dim());
    for (const auto &[key, c] : D.terms()) {
        long fixed = -std::popcount(key.first);
        for (int b : key.second) fixed -= b;
        out.add_term(homogeneous_part(D.chart(), c, q - fixed), key.first, key.second);
    }
    return out;
}

WeightedBundle getzler_bundle(int k) {
    WeightedChart chart(u_coords(k), std::vector<int>(k, 1));
    std::vector<std::string> frames, fibers;
    std::vector<int> v;
    for (uint32_t bits = 0; bits < (1u << k); ++bits) {
        std::string name = "E";
        for (int i = 0; i < k; ++i)
            if (bits & (1u << i)) name += std::to_string(i + 1);
        frames.push_back(name);
        fibers.push_back("Y" + name.substr(1));
        v.push_back(-std::popcount(bits));
    }
    return WeightedBundle(std::move(chart), std::move(frames), std::move(v), std::move(fibers));
}

DiffOp embed_as_diffop(const GetzlerOp &D) {
    DiffOp out(getzler_bundle(D.dim()));
    for (const auto &[key, c] : D.terms()) {
        const auto &[blade, beta] = key;
        for (uint32_t src = 0; src < (1u << D.dim()); ++src) {
            auto [sign, dst] = cl_blade_mul(D.dim(), blade, src);
            if (sign == 0) continue;
            out.add_term(dst, src, beta, c * sign);
        }
    }
    return out;
}

DiffOp embed_symbol_as_diffop(const GetzlerSymbol &S) {
    DiffOp out(getzler_bundle(S.dim()));
    for (const auto &[key, c] : S.terms()) {
        const auto &[blade, beta] = key;
        for (uint32_t src = 0; src < (1u << S.dim()); ++src) {
            auto [sign, dst] = wedge_blade_mul(S.dim(), blade, src);
            if (sign == 0) continue;
            out.add_term(dst, src, beta, c * sign);
        }
    }
    return out;
}

GetzlerOp flat_dirac(int k) {
    GetzlerOp d(k);
    for (int a = 0; a < k; ++a) {
        Exps beta(k, 0);
        beta[a] = 1;
        d.add_term(Poly(1), CliffordElt::generator(k, a + 1), std::move(beta));
    }
    return d;
}

} // namespace gg
