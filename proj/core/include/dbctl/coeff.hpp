#pragma once

#include <complex>
#include <string>

#include <gmpxx.h>

namespace dbctl {

using Rational = mpq_class;

// Exact scalar of the kernel: a Gaussian rational re + im*i.
// The imaginary unit is a literal, not a Symbol, so canonical equality over
// the coefficient field stays decidable.
struct Coeff {
  Rational re{0};
  Rational im{0};

  Coeff() = default;
  Coeff(long v) : re(v) {}
  Coeff(Rational r) : re(std::move(r)) {}
  Coeff(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  static Coeff zero() { return Coeff(); }
  static Coeff one() { return Coeff(1); }
  static Coeff imaginary() { return Coeff(Rational(0), Rational(1)); }

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_one() const { return re == 1 && im == 0; }
  bool is_real() const { return im == 0; }
  bool is_rational_integer() const { return is_real() && re.get_den() == 1; }

  Coeff operator-() const { return Coeff(-re, -im); }
  Coeff operator+(const Coeff& o) const { return Coeff(re + o.re, im + o.im); }
  Coeff operator-(const Coeff& o) const { return Coeff(re - o.re, im - o.im); }
  Coeff operator*(const Coeff& o) const {
    return Coeff(re * o.re - im * o.im, re * o.im + im * o.re);
  }
  Coeff operator/(const Coeff& o) const;  // throws DomainError on /0
  Coeff& operator+=(const Coeff& o) { re += o.re; im += o.im; return *this; }
  Coeff& operator-=(const Coeff& o) { re -= o.re; im -= o.im; return *this; }
  Coeff& operator*=(const Coeff& o) { *this = *this * o; return *this; }

  bool operator==(const Coeff& o) const { return re == o.re && im == o.im; }
  bool operator!=(const Coeff& o) const { return !(*this == o); }

  // Total order used only for canonical tie-breaking, not arithmetic meaning.
  int cmp(const Coeff& o) const;

  std::complex<double> to_complex() const { return {re.get_d(), im.get_d()}; }
  std::string str() const;
};

}  // namespace dbctl
