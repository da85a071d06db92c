#pragma once

#include <mpfr.h>

#include "radx/arith.hpp"
#include "radx/radical.hpp"

namespace radx {

// RAII wrapper around an MPFR number with a fixed precision.
class Real {
 public:
  explicit Real(mpfr_prec_t prec, long v = 0);
  Real(const Real& other);
  Real& operator=(const Real& other);
  ~Real();

  mpfr_ptr get() { return x_; }
  mpfr_srcptr get() const { return x_; }
  mpfr_prec_t prec() const { return mpfr_get_prec(x_); }
  double to_double() const { return mpfr_get_d(x_, MPFR_RNDN); }
  // log2 |x|, or a very negative number for 0.
  double log2_abs() const;

  static Real from_rat(const Rat& r, mpfr_prec_t prec);
  static Real from_int(const Int& v, mpfr_prec_t prec);

 private:
  mpfr_t x_;
};

Real operator+(const Real& a, const Real& b);
Real operator-(const Real& a, const Real& b);
Real operator*(const Real& a, const Real& b);

struct Complex {
  Real re, im;
  explicit Complex(mpfr_prec_t prec) : re(prec), im(prec) {}
  Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
  mpfr_prec_t prec() const { return re.prec(); }
  Real abs() const;
};

Complex operator+(const Complex& a, const Complex& b);
Complex operator-(const Complex& a, const Complex& b);
Complex operator*(const Complex& a, const Complex& b);
Complex scale(const Complex& a, const Rat& r);
Complex scale(const Complex& a, const Int& r);

// e^{2 pi i t}.
Complex root_of_unity_value(const Rat& t, mpfr_prec_t prec);
// The principal value of a radical: e^{2 pi i twist} prod p^{e_p} (real positive roots).
Complex radical_value(const RadicalQ& a, mpfr_prec_t prec);

}  // namespace radx
