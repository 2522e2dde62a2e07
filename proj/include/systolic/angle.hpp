#ifndef SYSTOLIC_ANGLE_HPP
#define SYSTOLIC_ANGLE_HPP

#include <string>

#include "systolic/rational.hpp"

namespace systolic {

// A corner weight. Exact mode stores a rational multiple of pi and all
// comparisons are exact; float mode stores radians and is used only for
// piecewise-Euclidean metrics. Mixing modes in arithmetic throws.
class Angle {
 public:
  Angle() : exact_(true), coeff_(0) {}

  static Angle exact(Rational pi_coeff) { return Angle(pi_coeff); }
  static Angle exact(std::int64_t num, std::int64_t den) {
    return Angle(Rational(num, den));
  }
  static Angle radians(double value);

  bool is_exact() const { return exact_; }

  // Coefficient c with value == c*pi. Exact mode only.
  const Rational& pi_coeff() const;
  double to_radians() const;

  Angle operator+(const Angle& other) const;
  Angle operator-(const Angle& other) const;
  Angle& operator+=(const Angle& other) { return *this = *this + other; }

  // Three-way comparison against k*pi: -1, 0, +1. Exact in exact mode.
  int compare_pi(const Rational& k) const;
  int compare(const Angle& other) const;

  bool operator==(const Angle& other) const { return compare(other) == 0; }
  bool operator!=(const Angle& other) const { return compare(other) != 0; }
  bool operator<(const Angle& other) const { return compare(other) < 0; }
  bool operator<=(const Angle& other) const { return compare(other) <= 0; }
  bool operator>(const Angle& other) const { return compare(other) > 0; }
  bool operator>=(const Angle& other) const { return compare(other) >= 0; }

  bool negative() const;

  // "p/q pi" in exact mode, decimal radians otherwise.
  std::string str() const;

 private:
  explicit Angle(Rational coeff) : exact_(true), coeff_(coeff) {}

  bool exact_;
  Rational coeff_;
  double radians_ = 0.0;
};

}  // namespace systolic

#endif
