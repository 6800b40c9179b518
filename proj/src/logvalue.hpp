#pragma once

#include <cmath>
#include <limits>

namespace mixmeas {

/// Signed log-domain scalar: (sign, ln|value|). Keeps magnitudes far below the
/// double-precision underflow threshold usable, e.g. e^{-phi(rt)} with
/// phi(rt) of order several hundred. sign 0 encodes an exact zero and carries
/// log_abs = -inf.
struct LogValue {
    int sign = 0;
    double log_abs = -std::numeric_limits<double>::infinity();

    static LogValue zero() { return {}; }

    static LogValue from_double(double v) {
        if (v == 0.0) return {};
        return {v > 0.0 ? 1 : -1, std::log(std::fabs(v))};
    }

    static LogValue from_log(int sign, double log_abs) {
        if (sign == 0) return {};
        return {sign > 0 ? 1 : -1, log_abs};
    }

    bool is_zero() const { return sign == 0; }

    double to_double() const { return sign == 0 ? 0.0 : sign * std::exp(log_abs); }

    LogValue operator-() const { return {-sign, log_abs}; }

    /// Multiply by e^{shift}; exact in the log domain.
    LogValue log_scaled(double shift) const {
        if (sign == 0) return {};
        return {sign, log_abs + shift};
    }

    friend LogValue operator*(const LogValue& a, const LogValue& b) {
        if (a.sign == 0 || b.sign == 0) return {};
        return {a.sign * b.sign, a.log_abs + b.log_abs};
    }

    friend LogValue operator+(const LogValue& a, const LogValue& b) {
        if (a.sign == 0) return b;
        if (b.sign == 0) return a;
        const LogValue& hi = a.log_abs >= b.log_abs ? a : b;
        const LogValue& lo = a.log_abs >= b.log_abs ? b : a;
        const double r = hi.sign + lo.sign * std::exp(lo.log_abs - hi.log_abs);
        if (r == 0.0) return {};
        return {r > 0.0 ? 1 : -1, hi.log_abs + std::log(std::fabs(r))};
    }

    friend LogValue operator-(const LogValue& a, const LogValue& b) { return a + (-b); }

    /// Strict ordering of the represented real values.
    friend bool operator<(const LogValue& a, const LogValue& b) {
        const LogValue d = a - b;
        return d.sign < 0;
    }
};

/// |a - b| / |a|, computed in the log domain. Returns 0 when both are zero and
/// +inf when a is zero but b is not.
inline double relative_difference(const LogValue& a, const LogValue& b) {
    const LogValue d = a - b;
    if (d.is_zero()) return 0.0;
    if (a.is_zero()) return std::numeric_limits<double>::infinity();
    return std::exp(d.log_abs - a.log_abs);
}

}  // namespace mixmeas
