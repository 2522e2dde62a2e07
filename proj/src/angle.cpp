#include "systolic/angle.hpp"

#include <cmath>
#include <sstream>

#include "systolic/errors.hpp"

namespace systolic {

namespace {
constexpr double kPi = 3.14159265358979323846264338327950288;
}

Angle Angle::radians(double value) {
  if (!std::isfinite(value)) throw Error("angle must be finite");
  Angle a;
  a.exact_ = false;
  a.radians_ = value;
  return a;
}

const Rational& Angle::pi_coeff() const {
  if (!exact_) throw Error("pi_coeff on a float-mode angle");
  return coeff_;
}

double Angle::to_radians() const {
  if (exact_) return boost::rational_cast<double>(coeff_) * kPi;
  return radians_;
}

Angle Angle::operator+(const Angle& other) const {
  if (exact_ != other.exact_) throw Error("mixed-mode angle arithmetic");
  if (exact_) return Angle(coeff_ + other.coeff_);
  return Angle::radians(radians_ + other.radians_);
}

Angle Angle::operator-(const Angle& other) const {
  if (exact_ != other.exact_) throw Error("mixed-mode angle arithmetic");
  if (exact_) return Angle(coeff_ - other.coeff_);
  return Angle::radians(radians_ - other.radians_);
}

int Angle::compare_pi(const Rational& k) const {
  if (exact_) {
    if (coeff_ < k) return -1;
    if (coeff_ > k) return 1;
    return 0;
  }
  double rhs = boost::rational_cast<double>(k) * kPi;
  if (radians_ < rhs) return -1;
  if (radians_ > rhs) return 1;
  return 0;
}

int Angle::compare(const Angle& other) const {
  if (exact_ && other.exact_) {
    if (coeff_ < other.coeff_) return -1;
    if (coeff_ > other.coeff_) return 1;
    return 0;
  }
  double a = to_radians();
  double b = other.to_radians();
  if (a < b) return -1;
  if (a > b) return 1;
  return 0;
}

bool Angle::negative() const {
  if (exact_) return coeff_ < Rational(0);
  return radians_ < 0.0;
}

std::string Angle::str() const {
  if (exact_) return format_rational(coeff_) + " pi";
  std::ostringstream os;
  os.precision(17);
  os << radians_;
  return os.str();
}

}  // namespace systolic
