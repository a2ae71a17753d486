#pragma once

#include <concepts>
#include <cstdlib>
#include <limits>
#include <string>

#include "convball/errors.hpp"

// The real-number contract the solver templates are written against: field
// operations, comparisons, abs/sqrt/exp/log/pow (found by ADL), an epsilon
// query eps_of, a narrowing to_double, and construction from double.  Native
// double satisfies it via the overloads below; BigFloat via its friends.

namespace convball {

inline double eps_of(double) { return std::numeric_limits<double>::epsilon(); }
inline double to_double(double x) { return x; }

/// Parse a decimal literal at the backend's own precision (BigFloat keeps all
/// digits; double goes through strtod).
template <class Real>
Real real_from_literal(const std::string& text) {
    return Real::from_string(text);
}

template <>
inline double real_from_literal<double>(const std::string& text) {
    char* end = nullptr;
    const double v = std::strtod(text.c_str(), &end);
    if (end == text.c_str()) throw DomainError("not a valid decimal number: '" + text + "'");
    return v;
}

template <class T>
concept RealScalar = requires(T a, T b) {
    { a + b } -> std::convertible_to<T>;
    { a - b } -> std::convertible_to<T>;
    { a * b } -> std::convertible_to<T>;
    { a / b } -> std::convertible_to<T>;
    { -a } -> std::convertible_to<T>;
    { a < b } -> std::convertible_to<bool>;
    { a <= b } -> std::convertible_to<bool>;
    { T(0.0) };
};

}  // namespace convball
