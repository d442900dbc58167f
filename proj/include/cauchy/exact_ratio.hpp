#pragma once

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>
#include <numbers>
#include <ostream>
#include <string>

#include "cauchy/errors.hpp"

namespace cauchy {

using Rational = boost::multiprecision::cpp_rational;

/// An exact value q * pi^e with q a positive arbitrary-precision rational and
/// e in {-1, 0}. Immutable once built.
class ExactRatio {
 public:
  ExactRatio(Rational q, int pi_exp) : q_(std::move(q)), pi_exp_(pi_exp) {
    if (q_ <= 0) throw domain_error("ExactRatio: rational factor must be positive");
    if (pi_exp_ != 0 && pi_exp_ != -1) throw domain_error("ExactRatio: pi exponent must be 0 or -1");
  }

  const Rational& q() const noexcept { return q_; }
  int pi_exp() const noexcept { return pi_exp_; }

  double to_real() const {
    using Wide = boost::multiprecision::cpp_bin_float_50;
    Wide v = Wide(numerator(q_)) / Wide(denominator(q_));
    if (pi_exp_ == -1) v /= boost::math::constants::pi<Wide>();
    return static_cast<double>(v);
  }

  std::string to_string() const {
    std::string s = q_.str();
    if (pi_exp_ == -1) s = "(" + s + ")/pi";
    return s;
  }

  friend bool operator==(const ExactRatio& a, const ExactRatio& b) {
    return a.pi_exp_ == b.pi_exp_ && a.q_ == b.q_;
  }

  friend std::ostream& operator<<(std::ostream& os, const ExactRatio& r) { return os << r.to_string(); }

 private:
  Rational q_;
  int pi_exp_;
};

}  // namespace cauchy
