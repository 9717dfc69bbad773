#pragma once

#include <complex>
#include <string>
#include <variant>

#include <gmpxx.h>

namespace vpotts {

using Rational = mpq_class;
using Complex = std::complex<double>;

/// Gaussian rational re + im*i with arbitrary-precision parts.
struct ExactComplex {
  Rational re{0};
  Rational im{0};

  ExactComplex() = default;
  ExactComplex(Rational r) : re(std::move(r)) { re.canonicalize(); }  // NOLINT(google-explicit-constructor)
  ExactComplex(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {
    re.canonicalize();
    im.canonicalize();
  }

  /// Exact image of a binary double pair; every finite double is a dyadic rational.
  static ExactComplex from_double(Complex z);

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  bool is_real() const { return sgn(im) == 0; }
  Complex to_complex() const { return {re.get_d(), im.get_d()}; }

  /// "3/2" for reals, "1/2+3i" / "-1-1/4i" otherwise.
  std::string str() const;

  ExactComplex& operator+=(const ExactComplex& o);
  ExactComplex& operator-=(const ExactComplex& o);
  ExactComplex& operator*=(const ExactComplex& o);

  friend ExactComplex operator+(ExactComplex a, const ExactComplex& b) { return a += b; }
  friend ExactComplex operator-(ExactComplex a, const ExactComplex& b) { return a -= b; }
  friend ExactComplex operator*(ExactComplex a, const ExactComplex& b) { return a *= b; }
  friend bool operator==(const ExactComplex& a, const ExactComplex& b) {
    return a.re == b.re && a.im == b.im;
  }
};

/// Exact when every input was exact, floating otherwise.
using Scalar = std::variant<ExactComplex, Complex>;

Complex to_complex(const Scalar& s);
bool is_exact(const Scalar& s);

/// Reads a finite double as the rational it denotes.
Rational rational_from_double(double d);

}  // namespace vpotts
