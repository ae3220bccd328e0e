#pragma once

#include <cmath>

namespace mevac {

/// Neumaier-compensated running sum.
template <typename Scalar>
class CompensatedSum {
 public:
  CompensatedSum& operator+=(Scalar x) {
    using std::abs;
    const Scalar t = sum_ + x;
    if (abs(sum_) >= abs(x)) {
      carry_ += (sum_ - t) + x;
    } else {
      carry_ += (x - t) + sum_;
    }
    sum_ = t;
    return *this;
  }

  Scalar value() const { return sum_ + carry_; }

 private:
  Scalar sum_ = Scalar(0);
  Scalar carry_ = Scalar(0);
};

}  // namespace mevac
