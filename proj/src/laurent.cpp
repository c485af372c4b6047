#include "gradedgeom/laurent.hpp"

#include <sstream>
#include <stdexcept>

namespace gg {

void LaurentParam::normalize() {
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (it->second.is_zero()) it = terms_.erase(it);
        else ++it;
    }
}

LaurentParam LaurentParam::operator-() const {
    LaurentParam l = *this;
    for (auto &[k, p] : l.terms_) p = -p;
    return l;
}

LaurentParam LaurentParam::operator+(const LaurentParam &o) const {
    LaurentParam l = *this;
    for (const auto &[k, p] : o.terms_) {
        auto it = l.terms_.find(k);
        if (it == l.terms_.end()) l.terms_[k] = p;
        else it->second += p;
    }
    l.normalize();
    return l;
}

LaurentParam LaurentParam::operator-(const LaurentParam &o) const { return *this + (-o); }

LaurentParam LaurentParam::operator*(const LaurentParam &o) const {
    LaurentParam l;
    for (const auto &[ka, pa] : terms_)
        for (const auto &[kb, pb] : o.terms_) {
            auto it = l.terms_.find(ka + kb);
            if (it == l.terms_.end()) l.terms_[ka + kb] = pa * pb;
            else it->second += pa * pb;
        }
    l.normalize();
    return l;
}

LaurentParam LaurentParam::operator*(const Rational &c) const {
    LaurentParam l = *this;
    for (auto &[k, p] : l.terms_) p = p * c;
    l.normalize();
    return l;
}

LaurentParam LaurentParam::derivative(const std::string &var) const {
    LaurentParam l;
    for (const auto &[k, p] : terms_) {
        Poly d = p.derivative(var);
        if (!d.is_zero()) l.terms_[k] = d;
    }
    return l;
}

Poly LaurentParam::eval_param(const Rational &t) const {
    if (t == 0 && has_negative_powers())
        throw std::domain_error("evaluation at t=0 of a family with negative powers");
    Poly out;
    for (const auto &[k, p] : terms_) {
        if (t == 0) {
            if (k == 0) out += p;
            continue;
        }
        out += p * rat_pow(t, k);
    }
    return out;
}

LaurentParam LaurentParam::rename_vars(const std::map<std::string, std::string> &renames) const {
    LaurentParam l;
    for (const auto &[k, p] : terms_) l.terms_[k] = p.rename_vars(renames);
    l.normalize();
    return l;
}

std::string LaurentParam::str(const std::string &param) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto &[k, p] : terms_) {
        if (!first) os << " + ";
        first = false;
        std::string ps = p.str();
        bool wrap = ps.find(" + ") != std::string::npos || ps.find(" - ") != std::string::npos;
        if (k == 0) {
            os << ps;
            continue;
        }
        os << param;
        if (k != 1) os << "^" << k;
        if (ps == "1") continue;
        os << "*" << (wrap ? "(" + ps + ")" : ps);
    }
    return os.str();
}

LaurentParam substitute_laurent(const Poly &f, const std::map<std::string, LaurentParam> &assignment) {
    LaurentParam out;
    const auto &vars = f.vars();
    for (const auto &v : vars)
        if (!assignment.count(v))
            throw std::invalid_argument("substitution is missing variable " + v);
    for (const auto &[e, c] : f.terms()) {
        LaurentParam term{Poly(c)};
        for (size_t i = 0; i < vars.size(); ++i) {
            if (e[i] == 0) continue;
            const LaurentParam &val = assignment.at(vars[i]);
            for (int k = 0; k < e[i]; ++k) term = term * val;
        }
        out += term;
    }
    return out;
}

} // namespace gg
