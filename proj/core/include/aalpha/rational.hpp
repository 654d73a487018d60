#ifndef AALPHA_RATIONAL_HPP
#define AALPHA_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace aalpha {

/// Exact rational scalar. Arbitrary precision, always in lowest terms with
/// a positive denominator (the backend canonicalizes on every operation).
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline double to_double(const Rational& r) { return r.template convert_to<double>(); }

/// Canonical "num/den" rendering, e.g. "0/1", "-3/4". Parse with parse_rational.
std::string to_fraction_string(const Rational& r);

/// Accepts "a/b" (b > 0 after normalization) or a decimal literal with at
/// most `max_decimal_places` digits after the point, converted exactly.
/// Returns nullopt on malformed input.
std::optional<Rational> parse_rational(std::string_view text, int max_decimal_places = 6);

/// Thrown by operations that require alpha in [0, 1).
struct AlphaRangeError : std::invalid_argument {
  explicit AlphaRangeError(const std::string& what) : std::invalid_argument(what) {}
};

inline void require_alpha_range(const Rational& alpha) {
  if (alpha < 0 || alpha >= 1)
    throw AlphaRangeError("alpha must lie in [0, 1), got " + to_fraction_string(alpha));
}

}  // namespace aalpha

#endif
