#pragma once

#include "gradedgeom/filt_degree.hpp"
#include "gradedgeom/jet.hpp"
#include "gradedgeom/rational.hpp"

#include <cstdint>
#include <map>
#include <string>

namespace gg {

// Clifford algebra Cl(R^k) over the rationals with e_i e_j = -e_j e_i (i != j)
// and e_i^2 = -1. Basis blades e_I are indexed by bit sets over {1..k}.
// Filtration degree is -(max word length), 0 for nonzero scalars, +inf for 0.
class CliffordElt {
public:
    CliffordElt() : dim_(0) {}
    explicit CliffordElt(int dim) : dim_(dim) {}
    CliffordElt(int dim, const Rational &scalar) : dim_(dim) {
        if (scalar != 0) terms_[0] = scalar;
    }

    static CliffordElt generator(int dim, int i); // e_i, 1-based
    static CliffordElt blade(int dim, uint32_t bits, const Rational &coeff = Rational(1));

    int dim() const { return dim_; }
    const std::map<uint32_t, Rational> &terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Rational coeff(uint32_t bits) const {
        auto it = terms_.find(bits);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    CliffordElt operator-() const;
    CliffordElt operator+(const CliffordElt &o) const;
    CliffordElt operator-(const CliffordElt &o) const;
    CliffordElt operator*(const CliffordElt &o) const;
    CliffordElt operator*(const Rational &c) const;
    // Scalars (and zero) compare equal across ambient dimensions.
    bool is_scalar() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
    }
    bool operator==(const CliffordElt &o) const {
        return terms_ == o.terms_ && (dim_ == o.dim_ || (is_scalar() && o.is_scalar()));
    }
    bool operator!=(const CliffordElt &o) const { return !(*this == o); }

    // Reversal anti-automorphism: e_I -> (-1)^{r(r-1)/2} e_I, r = |I|.
    CliffordElt reverse() const;

    int max_word_length() const; // 0 for scalars and for 0
    bool is_even() const;
    bool has_only_word_length(int r) const;

    std::string str() const;

private:
    int dim_;
    std::map<uint32_t, Rational> terms_;
    void normalize();
};

inline CliffordElt operator*(const Rational &c, const CliffordElt &a) { return a * c; }

template <> struct RingTraits<CliffordElt> {
    static CliffordElt zero() { return CliffordElt(); }
    static CliffordElt one() { return CliffordElt(0, Rational(1)); }
    static bool is_zero(const CliffordElt &a) { return a.is_zero(); }
};

// Exterior algebra element on the same blade basis, wedge multiplication
// (e_i ^ e_i = 0).
class ExteriorElt {
public:
    ExteriorElt() : dim_(0) {}
    explicit ExteriorElt(int dim) : dim_(dim) {}
    static ExteriorElt blade(int dim, uint32_t bits, const Rational &coeff = Rational(1));

    int dim() const { return dim_; }
    const std::map<uint32_t, Rational> &terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    ExteriorElt operator+(const ExteriorElt &o) const;
    ExteriorElt operator*(const ExteriorElt &o) const; // wedge
    ExteriorElt operator*(const Rational &c) const;
    bool operator==(const ExteriorElt &o) const {
        return terms_ == o.terms_ && (dim_ == o.dim_ || is_zero());
    }

    std::string str() const;

private:
    int dim_;
    std::map<uint32_t, Rational> terms_;
    void normalize();
};

// -(max word length); 0 for nonzero scalars; +inf for 0.
FiltDegree cl_degree(const CliffordElt &a);

// Word-length-l part of a, reinterpreted in the exterior algebra.
ExteriorElt gr_symbol(const CliffordElt &a, int l);

// Unit even element: g * reverse(g) = 1.
class Rotor {
public:
    explicit Rotor(const CliffordElt &g);
    const CliffordElt &elt() const { return g_; }
    CliffordElt inverse() const { return g_.reverse(); }

private:
    CliffordElt g_;
};

// c + s e_i e_j with c^2 + s^2 = 1 (throws otherwise). Plane indices 1-based.
Rotor rotor_from_pythagorean(int dim, const Rational &c, const Rational &s, int i, int j);

using ClJet = Jet<CliffordElt>;

// sum_{n <= Nt} xi^n t^n / n! for a bivector xi (throws on non-bivector).
ClJet exp_bivector_jet(const CliffordElt &xi, int trunc);

// True iff the coefficient of t^j has word length <= j for every j up to the
// truncation. Requires truncation >= the algebra dimension.
bool is_weighted_cl_jet(const ClJet &c, int dim);

// Jet inverse for jets whose constant term is invertible via reversal
// (products of rotors). Throws on a non-unit constant term.
ClJet jet_inverse_rotorlike(const ClJet &g);

// A(t) = (g exp(xi t) exp(xi1)) c(t) (exp(-xi2) exp(-xi t) reverse(g));
// returns is_weighted_cl_jet(A). xi must be a bivector; xi1, xi2 are
// bivector-valued jets vanishing to order >= 2; c must be a weighted jet.
bool severa_action_check(const Rotor &g, const CliffordElt &xi, const ClJet &xi1,
                         const ClJet &xi2, const ClJet &c, int trunc);

// Same conjugation with Ad replaced by left multiplication only; used as a
// falsifiability control, may return false.
bool severa_left_only_check(const Rotor &g, const CliffordElt &xi, const ClJet &c, int trunc);

// True iff g1(t) g2(t)^-1 deviates from its t=0 value only at order >= 2
// (the weighted-path condition for the doubled weighting).
bool pair_path_check(const ClJet &g1, const ClJet &g2);

} // namespace gg
