#include "vpotts/scalar.hpp"

#include <cmath>

#include "vpotts/error.hpp"

namespace vpotts {

Rational rational_from_double(double d) {
  if (!std::isfinite(d)) throw InputError("non-finite value " + std::to_string(d));
  Rational r(d);
  r.canonicalize();
  return r;
}

ExactComplex ExactComplex::from_double(Complex z) {
  return {rational_from_double(z.real()), rational_from_double(z.imag())};
}

std::string ExactComplex::str() const {
  if (is_real()) return re.get_str();
  std::string out;
  if (sgn(re) != 0) {
    out = re.get_str();
    if (sgn(im) > 0) out += '+';
  }
  return out + im.get_str() + "i";
}

ExactComplex& ExactComplex::operator+=(const ExactComplex& o) {
  re += o.re;
  im += o.im;
  return *this;
}

ExactComplex& ExactComplex::operator-=(const ExactComplex& o) {
  re -= o.re;
  im -= o.im;
  return *this;
}

ExactComplex& ExactComplex::operator*=(const ExactComplex& o) {
  if (is_real() && o.is_real()) {
    re *= o.re;
    return *this;
  }
  Rational r = re * o.re - im * o.im;
  Rational i = re * o.im + im * o.re;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

Complex to_complex(const Scalar& s) {
  if (const auto* e = std::get_if<ExactComplex>(&s)) return e->to_complex();
  return std::get<Complex>(s);
}

bool is_exact(const Scalar& s) { return std::holds_alternative<ExactComplex>(s); }

}  // namespace vpotts
