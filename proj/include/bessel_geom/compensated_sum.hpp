#pragma once

#include <cmath>
#include <complex>

namespace bessel_geom {

// Neumaier's variant of Kahan summation. The compensation stays correct when
// an addend is larger in magnitude than the running sum.
class CompensatedSum {
 public:
  constexpr CompensatedSum() = default;
  constexpr explicit CompensatedSum(double initial) : sum_(initial) {}

  constexpr CompensatedSum& operator+=(double value) {
    const double t = sum_ + value;
    if (std::abs(sum_) >= std::abs(value)) {
      compensation_ += (sum_ - t) + value;
    } else {
      compensation_ += (value - t) + sum_;
    }
    sum_ = t;
    return *this;
  }

  constexpr double value() const { return sum_ + compensation_; }

 private:
  double sum_ = 0.0;
  double compensation_ = 0.0;
};

class ComplexCompensatedSum {
 public:
  ComplexCompensatedSum() = default;
  explicit ComplexCompensatedSum(std::complex<double> initial)
      : re_(initial.real()), im_(initial.imag()) {}

  ComplexCompensatedSum& operator+=(std::complex<double> value) {
    re_ += value.real();
    im_ += value.imag();
    return *this;
  }

  std::complex<double> value() const { return {re_.value(), im_.value()}; }

 private:
  CompensatedSum re_;
  CompensatedSum im_;
};

}  // namespace bessel_geom
