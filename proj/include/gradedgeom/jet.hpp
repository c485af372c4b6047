#pragma once

#include "gradedgeom/filt_degree.hpp"
#include "gradedgeom/poly.hpp"
#include "gradedgeom/rational.hpp"

#include <stdexcept>
#include <vector>

namespace gg {

template <class R> struct RingTraits;

template <> struct RingTraits<Rational> {
    static Rational zero() { return Rational(0); }
    static Rational one() { return Rational(1); }
    static bool is_zero(const Rational &r) { return r == 0; }
};

template <> struct RingTraits<Poly> {
    static Poly zero() { return Poly(); }
    static Poly one() { return Poly(1); }
    static bool is_zero(const Poly &p) { return p.is_zero(); }
};

// Truncated power series in t: coefficients 0..order, exact modulo t^{order+1}.
template <class R> class Jet {
public:
    explicit Jet(int order) : order_(order), c_(static_cast<size_t>(order) + 1, RingTraits<R>::zero()) {
        if (order < 0) throw std::invalid_argument("negative jet truncation order");
    }

    static Jet constant(int order, const R &v) {
        Jet j(order);
        j.set(0, v);
        return j;
    }
    static Jet one(int order) { return constant(order, RingTraits<R>::one()); }

    int order() const { return order_; }
    const R &coeff(int n) const { return c_.at(static_cast<size_t>(n)); }
    void set(int n, const R &v) { c_.at(static_cast<size_t>(n)) = v; }

    bool is_zero() const {
        for (const auto &x : c_)
            if (!RingTraits<R>::is_zero(x)) return false;
        return true;
    }

    Jet truncate(int order) const {
        if (order >= order_) return *this;
        Jet j(order);
        for (int n = 0; n <= order; ++n) j.set(n, coeff(n));
        return j;
    }

    Jet operator-() const {
        Jet j = *this;
        for (auto &x : j.c_) x = RingTraits<R>::zero() - x;
        return j;
    }

    Jet operator+(const Jet &o) const {
        Jet j(std::min(order_, o.order_));
        for (int n = 0; n <= j.order_; ++n) j.set(n, coeff(n) + o.coeff(n));
        return j;
    }

    Jet operator-(const Jet &o) const {
        Jet j(std::min(order_, o.order_));
        for (int n = 0; n <= j.order_; ++n) j.set(n, coeff(n) - o.coeff(n));
        return j;
    }

    // Truncation order of the product is the minimum of the operands'.
    Jet operator*(const Jet &o) const {
        Jet j(std::min(order_, o.order_));
        for (int n = 0; n <= j.order_; ++n) {
            R acc = RingTraits<R>::zero();
            for (int p = 0; p <= n; ++p) acc = acc + coeff(p) * o.coeff(n - p);
            j.set(n, acc);
        }
        return j;
    }

    Jet scale(const Rational &r) const {
        Jet j = *this;
        for (auto &x : j.c_) x = x * r;
        return j;
    }

    Jet pow(int e) const {
        if (e < 0) throw std::invalid_argument("negative jet power");
        Jet acc = one(order_);
        for (int i = 0; i < e; ++i) acc = acc * *this;
        return acc;
    }

    bool operator==(const Jet &o) const { return order_ == o.order_ && c_ == o.c_; }
    bool operator!=(const Jet &o) const { return !(*this == o); }

    // Order of vanishing in t; +inf when zero up to the truncation order.
    FiltDegree vanishing_order() const {
        for (int n = 0; n <= order_; ++n)
            if (!RingTraits<R>::is_zero(coeff(n))) return FiltDegree::of(n);
        return FiltDegree::infinity();
    }

private:
    int order_;
    std::vector<R> c_;
};

// exp of a jet with vanishing constant term (the series terminates at the
// truncation order).
template <class R> Jet<R> jet_exp(const Jet<R> &x) {
    if (!RingTraits<R>::is_zero(x.coeff(0)))
        throw std::invalid_argument("jet_exp requires a vanishing constant term");
    Jet<R> acc = Jet<R>::one(x.order());
    Jet<R> pw = Jet<R>::one(x.order());
    Rational fact(1);
    for (int n = 1; n <= x.order(); ++n) {
        pw = pw * x;
        fact *= n;
        acc = acc + pw.scale(Rational(1) / fact);
    }
    return acc;
}

using RatJet = Jet<Rational>;

// Evaluate a polynomial along a jet path: each variable is replaced by the
// corresponding jet. Throws if a used variable is missing from the assignment.
inline RatJet poly_on_jets(const Poly &f, const std::map<std::string, RatJet> &assignment, int order) {
    RatJet out(order);
    for (const auto &[e, c] : f.terms()) {
        RatJet term = RatJet::constant(order, c);
        const auto &vars = f.vars();
        for (size_t i = 0; i < vars.size(); ++i) {
            if (e[i] == 0) continue;
            auto it = assignment.find(vars[i]);
            if (it == assignment.end())
                throw std::invalid_argument("jet assignment is missing variable " + vars[i]);
            term = term * it->second.pow(e[i]);
        }
        out = out + term;
    }
    return out;
}

} // namespace gg
