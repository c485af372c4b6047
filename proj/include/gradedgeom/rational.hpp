#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace gg {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer rat_num(const Rational &r) { return numerator(r); }
inline Integer rat_den(const Rational &r) { return denominator(r); }

inline Rational rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    return Rational(num, den);
}

// "3", "-3", "3/5"
inline Rational rat_parse(const std::string &s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(Integer(s));
    Integer num(s.substr(0, slash));
    Integer den(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("rational with zero denominator: " + s);
    return Rational(num, den);
}

inline std::string rat_str(const Rational &r) {
    std::string out = rat_num(r).str();
    if (rat_den(r) != 1) out += "/" + rat_den(r).str();
    return out;
}

inline Rational rat_pow(const Rational &base, long e) {
    if (e == 0) return Rational(1);
    if (base == 0) {
        if (e < 0) throw std::domain_error("0 raised to a negative power");
        return Rational(0);
    }
    Rational b = e < 0 ? Rational(1) / base : base;
    if (e < 0) e = -e;
    Rational acc(1);
    while (e > 0) {
        if (e & 1) acc *= b;
        b *= b;
        e >>= 1;
    }
    return acc;
}

} // namespace gg
