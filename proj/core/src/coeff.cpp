#include "dbctl/coeff.hpp"

#include "dbctl/errors.hpp"

namespace dbctl {

Coeff Coeff::operator/(const Coeff& o) const {
  if (o.is_zero()) throw DomainError("division by zero scalar");
  Rational n = o.re * o.re + o.im * o.im;
  return Coeff((re * o.re + im * o.im) / n, (im * o.re - re * o.im) / n);
}

int Coeff::cmp(const Coeff& o) const {
  int c = ::cmp(re, o.re);
  if (c != 0) return c;
  return ::cmp(im, o.im);
}

std::string Coeff::str() const {
  auto rat = [](const Rational& r) { return r.get_str(); };
  if (im == 0) return rat(re);
  std::string imag = (im == 1) ? "i" : (im == -1 ? "-i" : rat(im) + "*i");
  if (re == 0) return imag;
  if (im > 0) return rat(re) + "+" + imag;
  return rat(re) + imag;  // imag already carries the sign
}

}  // namespace dbctl
