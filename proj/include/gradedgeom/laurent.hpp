#pragma once

#include "gradedgeom/poly.hpp"

#include <map>
#include <string>

namespace gg {

// Finite Laurent series in a distinguished formal parameter (printed as "t"),
// with polynomial coefficients.
class LaurentParam {
public:
    LaurentParam() = default;
    explicit LaurentParam(const Poly &p) { if (!p.is_zero()) terms_[0] = p; }
    explicit LaurentParam(const Rational &c) : LaurentParam(Poly(c)) {}

    static LaurentParam term(int k, const Poly &p) {
        LaurentParam l;
        if (!p.is_zero()) l.terms_[k] = p;
        return l;
    }

    const std::map<int, Poly> &terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Poly coeff(int k) const {
        auto it = terms_.find(k);
        return it == terms_.end() ? Poly() : it->second;
    }
    int min_exp() const { return terms_.empty() ? 0 : terms_.begin()->first; }
    int max_exp() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }
    bool has_negative_powers() const { return !terms_.empty() && terms_.begin()->first < 0; }

    LaurentParam operator-() const;
    LaurentParam operator+(const LaurentParam &o) const;
    LaurentParam operator-(const LaurentParam &o) const;
    LaurentParam operator*(const LaurentParam &o) const;
    LaurentParam &operator+=(const LaurentParam &o) { return *this = *this + o; }
    LaurentParam operator*(const Rational &c) const;
    bool operator==(const LaurentParam &o) const { return terms_ == o.terms_; }
    bool operator!=(const LaurentParam &o) const { return !(*this == o); }

    LaurentParam derivative(const std::string &var) const;

    // Value of the family at a nonzero (or, if no negative powers, any) time.
    Poly eval_param(const Rational &t) const;

    LaurentParam rename_vars(const std::map<std::string, std::string> &renames) const;

    std::string str(const std::string &param = "t") const;

private:
    std::map<int, Poly> terms_;
    void normalize();
};

// Ring-homomorphic substitution of Laurent families for the variables of f.
// Throws std::invalid_argument naming any variable of f missing from the map.
LaurentParam substitute_laurent(const Poly &f, const std::map<std::string, LaurentParam> &assignment);

} // namespace gg
