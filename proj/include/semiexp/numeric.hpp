#pragma once

// Exact scalar types shared by every module.

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <ostream>
#include <string>

namespace semiexp {

using Integer  = mpz_class;
using Rational = mpq_class;
using Complex  = std::complex<double>;

// Element of Q(i). Stands in for complex scalars wherever the data is rational.
struct GaussRational {
  Rational re;
  Rational im;

  GaussRational() = default;
  GaussRational(long v) : re(v), im(0) {}
  GaussRational(Rational r) : re(std::move(r)), im(0) {}
  GaussRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  [[nodiscard]] bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  [[nodiscard]] bool is_real() const { return sgn(im) == 0; }

  GaussRational& operator+=(const GaussRational& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  GaussRational& operator-=(const GaussRational& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  GaussRational& operator*=(const GaussRational& o) {
    Rational r = re * o.re - im * o.im;
    Rational i = re * o.im + im * o.re;
    re         = std::move(r);
    im         = std::move(i);
    return *this;
  }
  GaussRational& operator/=(const GaussRational& o);

  friend GaussRational operator+(GaussRational a, const GaussRational& b) { return a += b; }
  friend GaussRational operator-(GaussRational a, const GaussRational& b) { return a -= b; }
  friend GaussRational operator*(GaussRational a, const GaussRational& b) { return a *= b; }
  friend GaussRational operator/(GaussRational a, const GaussRational& b) { return a /= b; }
  friend GaussRational operator-(const GaussRational& a) { return {-a.re, -a.im}; }
  friend bool operator==(const GaussRational& a, const GaussRational& b) {
    return a.re == b.re && a.im == b.im;
  }

  // |z|^2, exact.
  [[nodiscard]] Rational norm_squared() const { return re * re + im * im; }
  [[nodiscard]] double   modulus() const;
  // |re| + |im| >= |z|, exact.
  [[nodiscard]] Rational modulus_bound() const { return abs(re) + abs(im); }
};

std::ostream& operator<<(std::ostream& os, const GaussRational& z);

// Generic scalar predicates used by templated containers.
inline bool is_zero(const Integer& v) { return sgn(v) == 0; }
inline bool is_zero(const Rational& v) { return sgn(v) == 0; }
inline bool is_zero(const GaussRational& v) { return v.is_zero(); }
inline bool is_zero(const Complex& v) { return v == Complex{}; }

// a mod 1 in [0,1).
Rational frac(const Rational& a);

// 2^e as an exact rational, e >= 0.
Rational pow2(unsigned e);

Integer lcm(const Integer& a, const Integer& b);

// Fits-in-int64 conversions; throw std::overflow_error otherwise.
std::int64_t to_int64(const Integer& v);

std::string to_string(const Rational& q);

}  // namespace semiexp
