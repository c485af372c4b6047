#include "gradedgeom/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace gg {

namespace {

// Remap a term map onto a (sorted) superset variable list.
std::map<Exps, Rational> remap(const std::vector<std::string> &from,
                               const std::map<Exps, Rational> &terms,
                               const std::vector<std::string> &to) {
    std::vector<size_t> pos(from.size());
    for (size_t i = 0; i < from.size(); ++i) {
        auto it = std::lower_bound(to.begin(), to.end(), from[i]);
        pos[i] = static_cast<size_t>(it - to.begin());
    }
    std::map<Exps, Rational> out;
    for (const auto &[e, c] : terms) {
        Exps ne(to.size(), 0);
        for (size_t i = 0; i < from.size(); ++i) ne[pos[i]] = e[i];
        out[ne] = c;
    }
    return out;
}

std::vector<std::string> merged_vars(const std::vector<std::string> &a,
                                     const std::vector<std::string> &b) {
    std::vector<std::string> out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

} // namespace

void Poly::normalize() {
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (it->second == 0) it = terms_.erase(it);
        else ++it;
    }
    // Drop unused variables.
    std::vector<bool> used(vars_.size(), false);
    for (const auto &[e, c] : terms_)
        for (size_t i = 0; i < e.size(); ++i)
            if (e[i] != 0) used[i] = true;
    if (std::find(used.begin(), used.end(), false) == used.end()) return;
    std::vector<std::string> nv;
    for (size_t i = 0; i < vars_.size(); ++i)
        if (used[i]) nv.push_back(vars_[i]);
    std::map<Exps, Rational> nt;
    for (const auto &[e, c] : terms_) {
        Exps ne;
        for (size_t i = 0; i < e.size(); ++i)
            if (used[i]) ne.push_back(e[i]);
        nt[ne] += c;
    }
    vars_ = std::move(nv);
    terms_ = std::move(nt);
}

Poly Poly::make(std::vector<std::string> vars, std::map<Exps, Rational> terms) {
    Poly p;
    if (!std::is_sorted(vars.begin(), vars.end())) {
        std::vector<std::string> sorted = vars;
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        std::map<Exps, Rational> rt;
        for (auto &[e, c] : terms) {
            Exps ne(sorted.size(), 0);
            for (size_t i = 0; i < vars.size(); ++i) {
                auto it = std::lower_bound(sorted.begin(), sorted.end(), vars[i]);
                ne[static_cast<size_t>(it - sorted.begin())] += e[i];
            }
            rt[ne] += c;
        }
        p.vars_ = std::move(sorted);
        p.terms_ = std::move(rt);
    } else {
        p.vars_ = std::move(vars);
        p.terms_ = std::move(terms);
    }
    p.normalize();
    return p;
}

Poly Poly::var(const std::string &name, int exp) {
    if (exp < 0) throw std::invalid_argument("negative exponent for variable " + name);
    if (exp == 0) return Poly(1);
    Poly p;
    p.vars_ = {name};
    p.terms_[{exp}] = 1;
    return p;
}

Poly Poly::monomial(const Rational &coeff, const std::vector<std::pair<std::string, int>> &factors) {
    Poly p(coeff);
    for (const auto &[name, e] : factors) p = p * Poly::var(name, e);
    return p;
}

Rational Poly::constant_value() const {
    if (terms_.empty()) return Rational(0);
    if (terms_.size() == 1 && terms_.begin()->first.empty()) return terms_.begin()->second;
    throw std::logic_error("polynomial is not constant: " + str());
}

Poly Poly::operator-() const {
    Poly p = *this;
    for (auto &[e, c] : p.terms_) c = -c;
    return p;
}

Poly Poly::operator+(const Poly &o) const {
    std::vector<std::string> mv = merged_vars(vars_, o.vars_);
    auto a = remap(vars_, terms_, mv);
    for (const auto &[e, c] : remap(o.vars_, o.terms_, mv)) a[e] += c;
    return make(std::move(mv), std::move(a));
}

Poly Poly::operator-(const Poly &o) const { return *this + (-o); }

Poly Poly::operator*(const Poly &o) const {
    std::vector<std::string> mv = merged_vars(vars_, o.vars_);
    auto a = remap(vars_, terms_, mv);
    auto b = remap(o.vars_, o.terms_, mv);
    std::map<Exps, Rational> out;
    for (const auto &[ea, ca] : a)
        for (const auto &[eb, cb] : b) {
            Exps e(mv.size());
            for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            out[e] += ca * cb;
        }
    return make(std::move(mv), std::move(out));
}

Poly Poly::operator*(const Rational &c) const {
    Poly p = *this;
    for (auto &[e, co] : p.terms_) co *= c;
    p.normalize();
    return p;
}

Poly Poly::pow(int e) const {
    if (e < 0) throw std::invalid_argument("negative polynomial power");
    Poly acc(1);
    for (int i = 0; i < e; ++i) acc = acc * *this;
    return acc;
}

Poly Poly::derivative(const std::string &name) const {
    auto it = std::lower_bound(vars_.begin(), vars_.end(), name);
    if (it == vars_.end() || *it != name) return Poly();
    size_t idx = static_cast<size_t>(it - vars_.begin());
    std::map<Exps, Rational> out;
    for (const auto &[e, c] : terms_) {
        if (e[idx] == 0) continue;
        Exps ne = e;
        ne[idx] -= 1;
        out[ne] += c * Rational(e[idx]);
    }
    return make(vars_, std::move(out));
}

Poly Poly::derivative(const std::string &name, int times) const {
    Poly p = *this;
    for (int i = 0; i < times; ++i) p = p.derivative(name);
    return p;
}

Poly Poly::substitute(const std::map<std::string, Poly> &assignment) const {
    for (const auto &v : vars_)
        if (!assignment.count(v))
            throw std::invalid_argument("substitution is missing variable " + v);
    return substitute_partial(assignment);
}

Poly Poly::substitute_partial(const std::map<std::string, Poly> &assignment) const {
    Poly out;
    for (const auto &[e, c] : terms_) {
        Poly term(c);
        for (size_t i = 0; i < vars_.size(); ++i) {
            if (e[i] == 0) continue;
            auto it = assignment.find(vars_[i]);
            if (it == assignment.end()) term = term * Poly::var(vars_[i], e[i]);
            else term = term * it->second.pow(e[i]);
        }
        out += term;
    }
    return out;
}

Rational Poly::eval(const std::map<std::string, Rational> &assignment) const {
    Rational out(0);
    for (const auto &[e, c] : terms_) {
        Rational term = c;
        for (size_t i = 0; i < vars_.size(); ++i) {
            if (e[i] == 0) continue;
            auto it = assignment.find(vars_[i]);
            if (it == assignment.end())
                throw std::invalid_argument("evaluation is missing variable " + vars_[i]);
            term *= rat_pow(it->second, e[i]);
        }
        out += term;
    }
    return out;
}

Poly Poly::kill_vars(const std::set<std::string> &names) const {
    std::map<Exps, Rational> out;
    for (const auto &[e, c] : terms_) {
        bool dead = false;
        for (size_t i = 0; i < vars_.size(); ++i)
            if (e[i] != 0 && names.count(vars_[i])) { dead = true; break; }
        if (!dead) out[e] += c;
    }
    return make(vars_, std::move(out));
}

Poly Poly::rename_vars(const std::map<std::string, std::string> &renames) const {
    std::vector<std::string> nv = vars_;
    for (auto &v : nv) {
        auto it = renames.find(v);
        if (it != renames.end()) v = it->second;
    }
    return make(std::move(nv), terms_);
}

int Poly::total_degree() const {
    int d = -1;
    for (const auto &[e, c] : terms_) {
        int t = 0;
        for (int x : e) t += x;
        d = std::max(d, t);
    }
    return d;
}

int Poly::degree_in(const std::string &name) const {
    auto it = std::lower_bound(vars_.begin(), vars_.end(), name);
    if (it == vars_.end() || *it != name) return 0;
    size_t idx = static_cast<size_t>(it - vars_.begin());
    int d = 0;
    for (const auto &[e, c] : terms_) d = std::max(d, e[idx]);
    return d;
}

std::string Poly::str() const {
    if (terms_.empty()) return "0";
    // Print low total degree first; within a degree, earlier variables first.
    std::vector<std::pair<Exps, Rational>> ordered(terms_.begin(), terms_.end());
    auto total = [](const Exps &e) {
        long t = 0;
        for (int x : e) t += x;
        return t;
    };
    std::sort(ordered.begin(), ordered.end(), [&](const auto &a, const auto &b) {
        long ta = total(a.first), tb = total(b.first);
        if (ta != tb) return ta < tb;
        return a.first > b.first;
    });
    std::ostringstream os;
    bool first = true;
    for (const auto &[e, c] : ordered) {
        Rational a = c;
        if (first) {
            if (a < 0) { os << "-"; a = -a; }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        bool any_var = false;
        std::ostringstream mono;
        for (size_t i = 0; i < vars_.size(); ++i) {
            if (e[i] == 0) continue;
            if (any_var) mono << "*";
            mono << vars_[i];
            if (e[i] != 1) mono << "^" << e[i];
            any_var = true;
        }
        if (!any_var) os << rat_str(a);
        else if (a == 1) os << mono.str();
        else os << rat_str(a) << "*" << mono.str();
    }
    return os.str();
}

} // namespace gg
