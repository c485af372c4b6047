#include "gradedgeom/clifford.hpp"

#include "gradedgeom/errors.hpp"

#include <bit>
#include <sstream>
#include <stdexcept>

namespace gg {

namespace {

// Reordering sign for the concatenation e_A e_B into canonical order,
// before cancelling repeated generators.
int reorder_sign(uint32_t a, uint32_t b) {
    int swaps = 0;
    uint32_t rest = a;
    while (b) {
        uint32_t lowest = b & (~b + 1); // lowest set bit of b
        swaps += std::popcount(rest & ~(lowest - 1) & ~lowest);
        b &= b - 1;
    }
    // Count, for each generator i of B, the generators of A strictly above i.
    // (computed incrementally above: rest stays = a)
    return (swaps % 2 == 0) ? 1 : -1;
}

// e_A * e_B = sign * e_{A xor B}, with e_i^2 = -1.
std::pair<int, uint32_t> blade_mul(uint32_t a, uint32_t b) {
    int sign = reorder_sign(a, b);
    uint32_t common = a & b;
    if (std::popcount(common) % 2 == 1) sign = -sign;
    return {sign, a ^ b};
}

std::string blade_str(uint32_t bits) {
    if (bits == 0) return "1";
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < 32; ++i)
        if (bits & (1u << i)) {
            if (!first) os << "*";
            os << "e" << (i + 1);
            first = false;
        }
    return os.str();
}

std::string graded_str(const std::map<uint32_t, Rational> &terms) {
    if (terms.empty()) return "0";
    // sort by word length then bits
    std::map<std::pair<int, uint32_t>, Rational> sorted;
    for (const auto &[bits, c] : terms) sorted[{std::popcount(bits), bits}] = c;
    std::ostringstream os;
    bool first = true;
    for (const auto &[key, c] : sorted) {
        Rational a = c;
        if (first) {
            if (a < 0) { os << "-"; a = -a; }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        if (key.second == 0) os << rat_str(a);
        else if (a == 1) os << blade_str(key.second);
        else os << rat_str(a) << "*" << blade_str(key.second);
    }
    return os.str();
}

int merged_dim(const CliffordElt &x, const CliffordElt &y) {
    if (x.dim() == y.dim()) return x.dim();
    bool x_scalar = x.is_zero() || x.max_word_length() == 0;
    bool y_scalar = y.is_zero() || y.max_word_length() == 0;
    if (!x_scalar && !y_scalar)
        throw std::invalid_argument("Clifford dimension mismatch");
    return std::max(x.dim(), y.dim());
}

} // namespace

void CliffordElt::normalize() {
    for (auto it = terms_.begin(); it != terms_.end();)
        it = (it->second == 0) ? terms_.erase(it) : std::next(it);
}

CliffordElt CliffordElt::generator(int dim, int i) {
    if (i < 1 || i > dim)
        throw std::invalid_argument("generator index out of range: e" + std::to_string(i));
    return blade(dim, 1u << (i - 1));
}

CliffordElt CliffordElt::blade(int dim, uint32_t bits, const Rational &coeff) {
    if (dim < 0 || dim > 30) throw std::invalid_argument("unsupported Clifford dimension");
    if (bits >> dim) throw std::invalid_argument("blade index out of range");
    CliffordElt a(dim);
    if (coeff != 0) a.terms_[bits] = coeff;
    return a;
}

CliffordElt CliffordElt::operator-() const {
    CliffordElt a = *this;
    for (auto &[b, c] : a.terms_) c = -c;
    return a;
}

CliffordElt CliffordElt::operator+(const CliffordElt &o) const {
    CliffordElt a(merged_dim(*this, o));
    a.terms_ = terms_;
    for (const auto &[b, c] : o.terms_) a.terms_[b] += c;
    a.normalize();
    return a;
}

CliffordElt CliffordElt::operator-(const CliffordElt &o) const { return *this + (-o); }

CliffordElt CliffordElt::operator*(const CliffordElt &o) const {
    CliffordElt a(merged_dim(*this, o));
    for (const auto &[ba, ca] : terms_)
        for (const auto &[bb, cb] : o.terms_) {
            auto [sign, bits] = blade_mul(ba, bb);
            a.terms_[bits] += ca * cb * sign;
        }
    a.normalize();
    return a;
}

CliffordElt CliffordElt::operator*(const Rational &c) const {
    CliffordElt a = *this;
    for (auto &[b, co] : a.terms_) co *= c;
    a.normalize();
    return a;
}

CliffordElt CliffordElt::reverse() const {
    CliffordElt a = *this;
    for (auto &[b, c] : a.terms_) {
        int r = std::popcount(b);
        if ((r * (r - 1) / 2) % 2 == 1) c = -c;
    }
    return a;
}

int CliffordElt::max_word_length() const {
    int m = 0;
    for (const auto &[b, c] : terms_) m = std::max(m, std::popcount(b));
    return m;
}

bool CliffordElt::is_even() const {
    for (const auto &[b, c] : terms_)
        if (std::popcount(b) % 2 == 1) return false;
    return true;
}

bool CliffordElt::has_only_word_length(int r) const {
    for (const auto &[b, c] : terms_)
        if (std::popcount(b) != r) return false;
    return true;
}

std::string CliffordElt::str() const { return graded_str(terms_); }

void ExteriorElt::normalize() {
    for (auto it = terms_.begin(); it != terms_.end();)
        it = (it->second == 0) ? terms_.erase(it) : std::next(it);
}

ExteriorElt ExteriorElt::blade(int dim, uint32_t bits, const Rational &coeff) {
    ExteriorElt a(dim);
    if (coeff != 0) a.terms_[bits] = coeff;
    return a;
}

ExteriorElt ExteriorElt::operator+(const ExteriorElt &o) const {
    ExteriorElt a(std::max(dim_, o.dim_));
    a.terms_ = terms_;
    for (const auto &[b, c] : o.terms_) a.terms_[b] += c;
    a.normalize();
    return a;
}

ExteriorElt ExteriorElt::operator*(const ExteriorElt &o) const {
    ExteriorElt a(std::max(dim_, o.dim_));
    for (const auto &[ba, ca] : terms_)
        for (const auto &[bb, cb] : o.terms_) {
            if (ba & bb) continue; // repeated generator wedges to zero
            auto [sign, bits] = blade_mul(ba, bb);
            a.terms_[bits] += ca * cb * sign;
        }
    a.normalize();
    return a;
}

ExteriorElt ExteriorElt::operator*(const Rational &c) const {
    ExteriorElt a = *this;
    for (auto &[b, co] : a.terms_) co *= c;
    a.normalize();
    return a;
}

std::string ExteriorElt::str() const { return graded_str(terms_); }

FiltDegree cl_degree(const CliffordElt &a) {
    if (a.is_zero()) return FiltDegree::infinity();
    return FiltDegree::of(-a.max_word_length());
}

ExteriorElt gr_symbol(const CliffordElt &a, int l) {
    ExteriorElt out(a.dim());
    for (const auto &[b, c] : a.terms())
        if (std::popcount(b) == l) out = out + ExteriorElt::blade(a.dim(), b, c);
    return out;
}

Rotor::Rotor(const CliffordElt &g) : g_(g) {
    if (!g.is_even()) throw std::invalid_argument("rotor must have even word support");
    CliffordElt unit = g * g.reverse();
    if (unit != CliffordElt(g.dim(), Rational(1)))
        throw std::invalid_argument("rotor unit condition g*reverse(g) = 1 fails");
}

Rotor rotor_from_pythagorean(int dim, const Rational &c, const Rational &s, int i, int j) {
    if (c * c + s * s != 1)
        throw std::invalid_argument("rotor pair is not a unit: c^2+s^2 != 1");
    if (i == j) throw std::invalid_argument("rotor plane needs two distinct axes");
    CliffordElt plane = CliffordElt::generator(dim, i) * CliffordElt::generator(dim, j);
    return Rotor(CliffordElt(dim, c) + plane * s);
}

ClJet exp_bivector_jet(const CliffordElt &xi, int trunc) {
    if (!xi.has_only_word_length(2) && !xi.is_zero())
        throw std::invalid_argument("exp_bivector_jet: argument is not a bivector");
    ClJet lin(trunc);
    lin.set(1, xi);
    return jet_exp(lin);
}

bool is_weighted_cl_jet(const ClJet &c, int dim) {
    if (c.order() < dim)
        throw UndecidableAtTruncation("truncation order " + std::to_string(c.order()) +
                                      " below Clifford dimension " + std::to_string(dim));
    for (int j = 0; j <= c.order(); ++j)
        if (c.coeff(j).max_word_length() > j) return false;
    return true;
}

ClJet jet_inverse_rotorlike(const ClJet &g) {
    CliffordElt g0 = g.coeff(0);
    CliffordElt inv0 = g0.reverse();
    if (g0 * inv0 != CliffordElt(g0.dim(), Rational(1)))
        throw std::invalid_argument("jet inverse: constant term is not a unit rotor");
    ClJet n = ClJet::constant(g.order(), inv0) * g - ClJet::one(g.order());
    ClJet acc = ClJet::one(g.order());
    ClJet pw = ClJet::one(g.order());
    for (int k = 1; k <= g.order(); ++k) {
        pw = pw * (-n);
        acc = acc + pw;
    }
    return acc * ClJet::constant(g.order(), inv0);
}

namespace {

void check_bivector_tail(const ClJet &xi, const char *name) {
    if (!xi.coeff(0).is_zero() || (xi.order() >= 1 && !xi.coeff(1).is_zero()))
        throw std::invalid_argument(std::string(name) + " must vanish to order >= 2");
    for (int n = 0; n <= xi.order(); ++n)
        if (!xi.coeff(n).has_only_word_length(2) && !xi.coeff(n).is_zero())
            throw std::invalid_argument(std::string(name) + " must be bivector-valued");
}

} // namespace

bool severa_action_check(const Rotor &g, const CliffordElt &xi, const ClJet &xi1,
                         const ClJet &xi2, const ClJet &c, int trunc) {
    int dim = g.elt().dim();
    if (!xi.has_only_word_length(2) && !xi.is_zero())
        throw std::invalid_argument("xi must be a bivector");
    check_bivector_tail(xi1, "xi1");
    check_bivector_tail(xi2, "xi2");
    if (!is_weighted_cl_jet(c.truncate(trunc), dim))
        throw std::invalid_argument("c is not a weighted Clifford jet");

    ClJet exp_xit = exp_bivector_jet(xi, trunc);
    ClJet left = ClJet::constant(trunc, g.elt()) * exp_xit * jet_exp(xi1.truncate(trunc));
    ClJet right = jet_exp(-xi2.truncate(trunc)) * exp_bivector_jet(-xi, trunc) *
                  ClJet::constant(trunc, g.elt().reverse());
    ClJet a = left * c.truncate(trunc) * right;
    return is_weighted_cl_jet(a, dim);
}

bool severa_left_only_check(const Rotor &g, const CliffordElt &xi, const ClJet &c, int trunc) {
    ClJet left = ClJet::constant(trunc, g.elt()) * exp_bivector_jet(xi, trunc);
    ClJet a = left * c.truncate(trunc);
    return is_weighted_cl_jet(a, g.elt().dim());
}

bool pair_path_check(const ClJet &g1, const ClJet &g2) {
    if (g1.order() < 1 || g2.order() < 1)
        throw UndecidableAtTruncation("pair_path_check needs truncation order >= 1");
    ClJet prod = g1 * jet_inverse_rotorlike(g2);
    return prod.coeff(1).is_zero();
}

} // namespace gg
