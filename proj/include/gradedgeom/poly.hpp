#pragma once

#include "gradedgeom/rational.hpp"

#include <map>
#include <set>
#include <string>
#include <vector>

namespace gg {

using Exps = std::vector<int>;

// Sparse multivariate polynomial over the rationals. Canonical form: no zero
// coefficients, and every listed variable occurs in at least one term, with the
// variable list kept sorted. This makes structural equality semantic equality.
class Poly {
public:
    Poly() = default;
    explicit Poly(const Rational &c) { if (c != 0) terms_[{}] = c; }
    explicit Poly(long c) : Poly(Rational(c)) {}

    static Poly var(const std::string &name, int exp = 1);
    static Poly monomial(const Rational &coeff, const std::vector<std::pair<std::string, int>> &factors);

    const std::vector<std::string> &vars() const { return vars_; }
    const std::map<Exps, Rational> &terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty()); }
    Rational constant_value() const; // throws unless constant

    // Variables actually used (== vars() in canonical form).
    std::set<std::string> used_vars() const { return {vars_.begin(), vars_.end()}; }

    Poly operator-() const;
    Poly operator+(const Poly &o) const;
    Poly operator-(const Poly &o) const;
    Poly operator*(const Poly &o) const;
    Poly &operator+=(const Poly &o) { return *this = *this + o; }
    Poly &operator-=(const Poly &o) { return *this = *this - o; }
    Poly &operator*=(const Poly &o) { return *this = *this * o; }
    Poly operator*(const Rational &c) const;
    bool operator==(const Poly &o) const { return vars_ == o.vars_ && terms_ == o.terms_; }
    bool operator!=(const Poly &o) const { return !(*this == o); }

    Poly pow(int e) const;

    // d/d(name); zero if the variable does not occur.
    Poly derivative(const std::string &name) const;
    Poly derivative(const std::string &name, int times) const;

    // Substitute every variable; throws std::invalid_argument naming any
    // variable of *this missing from the assignment.
    Poly substitute(const std::map<std::string, Poly> &assignment) const;

    // Substitute only the named variables, leaving the rest in place.
    Poly substitute_partial(const std::map<std::string, Poly> &assignment) const;

    Rational eval(const std::map<std::string, Rational> &assignment) const;

    // Set the named variables to zero.
    Poly kill_vars(const std::set<std::string> &names) const;

    Poly rename_vars(const std::map<std::string, std::string> &renames) const;

    // Total degree (max over monomials of sum of exponents); -1 for zero.
    int total_degree() const;
    int degree_in(const std::string &name) const;

    std::string str() const;

    // Build from explicit representation (normalizes).
    static Poly make(std::vector<std::string> vars, std::map<Exps, Rational> terms);

private:
    std::vector<std::string> vars_; // sorted
    std::map<Exps, Rational> terms_;

    void normalize();
    friend struct PolyAccess;
};

inline Poly operator*(const Rational &c, const Poly &p) { return p * c; }

} // namespace gg
