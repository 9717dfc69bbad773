#pragma once

#include <cmath>

#include "vpotts/scalar.hpp"

namespace vpotts::detail {

// Neumaier compensation on each part keeps alternating sums accurate.
class CompensatedSum {
 public:
  void add(Complex z) {
    add_part(sum_re_, comp_re_, z.real());
    add_part(sum_im_, comp_im_, z.imag());
  }
  Complex value() const { return {sum_re_ + comp_re_, sum_im_ + comp_im_}; }

 private:
  static void add_part(double& sum, double& comp, double x) {
    const double t = sum + x;
    if (std::abs(sum) >= std::abs(x))
      comp += (sum - t) + x;
    else
      comp += (x - t) + sum;
    sum = t;
  }
  double sum_re_ = 0, comp_re_ = 0, sum_im_ = 0, comp_im_ = 0;
};

}  // namespace vpotts::detail
