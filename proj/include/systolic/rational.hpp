#ifndef SYSTOLIC_RATIONAL_HPP
#define SYSTOLIC_RATIONAL_HPP

#include <boost/rational.hpp>
#include <cstdint>
#include <string>

#include "systolic/errors.hpp"

namespace systolic {

// All comparisons that decide verdicts are done in exact rational arithmetic.
using Rational = boost::rational<std::int64_t>;

inline std::string format_rational(const Rational& q) {
  if (q.denominator() == 1) return std::to_string(q.numerator());
  return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

// Accepts "p" or "p/q"; q > 0.
inline Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      return Rational(std::stoll(text));
    }
    std::int64_t num = std::stoll(text.substr(0, slash));
    std::int64_t den = std::stoll(text.substr(slash + 1));
    if (den <= 0) throw Error("rational denominator must be positive: " + text);
    return Rational(num, den);
  } catch (const std::invalid_argument&) {
    throw Error("cannot parse rational: " + text);
  } catch (const std::out_of_range&) {
    throw Error("rational out of range: " + text);
  }
}

}  // namespace systolic

#endif
