#include "radx/numeric.hpp"

#include <cmath>
#include <limits>

namespace radx {

Real::Real(mpfr_prec_t prec, long v) {
  mpfr_init2(x_, prec);
  mpfr_set_si(x_, v, MPFR_RNDN);
}

Real::Real(const Real& other) {
  mpfr_init2(x_, other.prec());
  mpfr_set(x_, other.x_, MPFR_RNDN);
}

Real& Real::operator=(const Real& other) {
  if (this != &other) {
    mpfr_set_prec(x_, other.prec());
    mpfr_set(x_, other.x_, MPFR_RNDN);
  }
  return *this;
}

Real::~Real() { mpfr_clear(x_); }

double Real::log2_abs() const {
  if (mpfr_zero_p(x_)) return -std::numeric_limits<double>::infinity();
  long e = 0;
  double m = mpfr_get_d_2exp(&e, x_, MPFR_RNDN);
  return std::log2(std::fabs(m)) + static_cast<double>(e);
}

Real Real::from_rat(const Rat& r, mpfr_prec_t prec) {
  Real out(prec);
  mpfr_set_q(out.x_, r.get_mpq_t(), MPFR_RNDN);
  return out;
}

Real Real::from_int(const Int& v, mpfr_prec_t prec) {
  Real out(prec);
  mpfr_set_z(out.x_, v.get_mpz_t(), MPFR_RNDN);
  return out;
}

Real operator+(const Real& a, const Real& b) {
  Real out(std::max(a.prec(), b.prec()));
  mpfr_add(out.get(), a.get(), b.get(), MPFR_RNDN);
  return out;
}

Real operator-(const Real& a, const Real& b) {
  Real out(std::max(a.prec(), b.prec()));
  mpfr_sub(out.get(), a.get(), b.get(), MPFR_RNDN);
  return out;
}

Real operator*(const Real& a, const Real& b) {
  Real out(std::max(a.prec(), b.prec()));
  mpfr_mul(out.get(), a.get(), b.get(), MPFR_RNDN);
  return out;
}

Real Complex::abs() const {
  Real out(prec());
  mpfr_hypot(out.get(), re.get(), im.get(), MPFR_RNDN);
  return out;
}

Complex operator+(const Complex& a, const Complex& b) { return {a.re + b.re, a.im + b.im}; }

Complex operator-(const Complex& a, const Complex& b) { return {a.re - b.re, a.im - b.im}; }

Complex operator*(const Complex& a, const Complex& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

Complex scale(const Complex& a, const Rat& r) {
  Real s = Real::from_rat(r, a.prec());
  return {a.re * s, a.im * s};
}

Complex scale(const Complex& a, const Int& r) {
  Real s = Real::from_int(r, a.prec());
  return {a.re * s, a.im * s};
}

Complex root_of_unity_value(const Rat& t, mpfr_prec_t prec) {
  // Work with a few guard bits; the angle is 2 pi t.
  Real angle(prec + 16);
  mpfr_const_pi(angle.get(), MPFR_RNDN);
  Real tt = Real::from_rat(floor_frac(t) * 2, prec + 16);
  angle = angle * tt;
  Complex out(prec);
  mpfr_sin_cos(out.im.get(), out.re.get(), angle.get(), MPFR_RNDN);
  return out;
}

Complex radical_value(const RadicalQ& a, mpfr_prec_t prec) {
  Complex out = root_of_unity_value(a.twist(), prec);
  for (const auto& [p, e] : a.exps()) {
    Real base(prec + 16);
    mpfr_set_ui(base.get(), p, MPFR_RNDN);
    Real ex = Real::from_rat(e, prec + 16);
    Real v(prec + 16);
    mpfr_pow(v.get(), base.get(), ex.get(), MPFR_RNDN);
    out.re = out.re * v;
    out.im = out.im * v;
  }
  return out;
}

}  // namespace radx
