#include "semiexp/numeric.hpp"

#include <cmath>
#include <stdexcept>

namespace semiexp {

GaussRational& GaussRational::operator/=(const GaussRational& o) {
  Rational den = o.norm_squared();
  if (sgn(den) == 0) throw std::domain_error("GaussRational: division by zero");
  Rational r = (re * o.re + im * o.im) / den;
  Rational i = (im * o.re - re * o.im) / den;
  re         = std::move(r);
  im         = std::move(i);
  return *this;
}

double GaussRational::modulus() const {
  return std::hypot(re.get_d(), im.get_d());
}

std::ostream& operator<<(std::ostream& os, const GaussRational& z) {
  os << z.re;
  if (!z.is_real()) os << (sgn(z.im) < 0 ? "-" : "+") << abs(z.im) << "i";
  return os;
}

Rational frac(const Rational& a) {
  Integer fl;
  mpz_fdiv_q(fl.get_mpz_t(), a.get_num_mpz_t(), a.get_den_mpz_t());
  Rational r = a - Rational(fl);
  r.canonicalize();
  return r;
}

Rational pow2(unsigned e) {
  Integer p;
  mpz_ui_pow_ui(p.get_mpz_t(), 2, e);
  return Rational(p);
}

Integer lcm(const Integer& a, const Integer& b) {
  Integer r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

std::int64_t to_int64(const Integer& v) {
  if (!v.fits_slong_p()) throw std::overflow_error("integer does not fit in 64 bits");
  return v.get_si();
}

std::string to_string(const Rational& q) { return q.get_str(); }

}  // namespace semiexp
