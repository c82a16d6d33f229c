#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <stdexcept>
#include <string>

namespace ipoly {

/// Arbitrary-precision integer. All coordinates are exact; verdicts must
/// never depend on floating point.
using Int = boost::multiprecision::cpp_int;

/// Exact rational, always stored in lowest terms with positive denominator.
using Rat = boost::multiprecision::cpp_rational;

/// Base class for all library errors. The CLI maps these to exit code 2.
struct error : std::runtime_error {
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

/// An enumeration or tuple budget was exceeded.
struct budget_error : error {
    explicit budget_error(const std::string& what) : error(what) {}
};

/// Enumeration limits for box/tuple scans. Functions that enumerate take
/// this by reference; the CLI exposes it as --budget.
struct Budget {
    unsigned long long max_enumeration = 20'000'000ULL;
};

inline const Budget& default_budget() {
    static const Budget b{};
    return b;
}

/// floor((a+b)/2), exact for any sign.
inline Int floor_mid(const Int& a, const Int& b) {
    Int s = a + b;
    if (s % 2 != 0) s -= 1;
    return s / 2;
}

/// ceil((a+b)/2), exact for any sign.
inline Int ceil_mid(const Int& a, const Int& b) {
    Int s = a + b;
    if (s % 2 != 0) s += 1;
    return s / 2;
}

/// Directed discrete midpoint: the rounded average, rounded toward the
/// first argument.
inline Int mu_op(const Int& a, const Int& b) {
    return a >= b ? ceil_mid(a, b) : floor_mid(a, b);
}

/// Middle value of the sorted triple; a majority operation.
inline Int median_op(const Int& a, const Int& b, const Int& c) {
    const Int& lo = std::min(a, std::min(b, c));
    const Int& hi = std::max(a, std::max(b, c));
    return a + b + c - lo - hi;
}

/// Partial majority operation: the repeated value when two arguments
/// coincide, undefined otherwise.
inline std::optional<Int> maj_p_eval(const Int& a, const Int& b, const Int& c) {
    if (a == b || a == c) return a;
    if (b == c) return b;
    return std::nullopt;
}

/// Parse "123", "-4" or "p/q" into an exact rational.
Rat parse_rational(const std::string& text);

/// Render a rational as "p" or "p/q".
std::string rational_to_string(const Rat& r);

}  // namespace ipoly
