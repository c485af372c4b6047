#pragma once

#include <compare>
#include <limits>
#include <string>

namespace gg {

// Filtration degree: an integer, or +inf for the zero element.
class FiltDegree {
public:
    constexpr FiltDegree() : finite_(false), v_(0) {}
    static constexpr FiltDegree infinity() { return FiltDegree(); }
    static constexpr FiltDegree of(long v) { return FiltDegree(true, v); }

    constexpr bool is_infinite() const { return !finite_; }
    constexpr bool is_finite() const { return finite_; }

    // Only valid when finite.
    constexpr long value() const { return v_; }

    friend constexpr FiltDegree operator+(FiltDegree a, FiltDegree b) {
        if (a.is_infinite() || b.is_infinite()) return infinity();
        return of(a.v_ + b.v_);
    }
    friend constexpr FiltDegree operator+(FiltDegree a, long b) {
        return a + of(b);
    }

    friend constexpr bool operator==(FiltDegree a, FiltDegree b) {
        return a.finite_ == b.finite_ && (!a.finite_ || a.v_ == b.v_);
    }
    friend constexpr bool operator<(FiltDegree a, FiltDegree b) {
        if (a.finite_ && b.finite_) return a.v_ < b.v_;
        return a.finite_ && !b.finite_; // finite < inf
    }
    friend constexpr bool operator<=(FiltDegree a, FiltDegree b) { return a == b || a < b; }
    friend constexpr bool operator>(FiltDegree a, FiltDegree b) { return b < a; }
    friend constexpr bool operator>=(FiltDegree a, FiltDegree b) { return b <= a; }
    friend constexpr bool operator>=(FiltDegree a, long b) { return a >= of(b); }
    friend constexpr bool operator<(FiltDegree a, long b) { return a < of(b); }
    friend constexpr bool operator==(FiltDegree a, long b) { return a == of(b); }

    friend constexpr FiltDegree min(FiltDegree a, FiltDegree b) { return a < b ? a : b; }

    std::string str() const { return finite_ ? std::to_string(v_) : "inf"; }

private:
    constexpr FiltDegree(bool finite, long v) : finite_(finite), v_(v) {}
    bool finite_;
    long v_;
};

} // namespace gg
