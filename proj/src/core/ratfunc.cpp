#include "core/ratfunc.hpp"

#include <cassert>

#include "core/errors.hpp"

namespace spectral {

RatFunc RatFunc::from_coprime(MPoly num, MPoly den) {
  if (num.is_zero()) return RatFunc(num.nvars());
  mpq_class cn = num.extract_content();
  mpq_class cd = den.extract_content();
  mpq_class s = cn / cd;
  s.canonicalize();
  num = num.mul_scalar(s.get_num());
  den = den.mul_scalar(s.get_den());
  if (den.grlex_lc_negative()) {
    num = -num;
    den = -den;
  }
  return RatFunc(std::move(num), std::move(den));
}

RatFunc RatFunc::make(MPoly num, MPoly den) {
  assert(num.nvars() == den.nvars());
  if (den.is_zero()) fail(ErrorKind::DivisionByZero, "zero denominator");
  if (num.is_zero()) return RatFunc(num.nvars());
  MPoly g = mpoly_gcd(num, den);
  if (!g.is_constant()) {
    num = *MPoly::divide_exact(num, g);
    den = *MPoly::divide_exact(den, g);
  }
  return from_coprime(std::move(num), std::move(den));
}

RatFunc RatFunc::poly(MPoly p) {
  std::uint32_t n = p.nvars();
  return from_coprime(std::move(p), MPoly::constant(n, 1));
}

RatFunc RatFunc::constant(std::uint32_t nvars, const mpq_class& c) {
  return RatFunc(MPoly::constant(nvars, c.get_num()),
                 MPoly::constant(nvars, c.get_den()));
}

RatFunc RatFunc::variable(std::uint32_t nvars, std::uint32_t v,
                          std::uint32_t exp) {
  return RatFunc(MPoly::variable(nvars, v, exp), MPoly::constant(nvars, 1));
}

bool RatFunc::is_one() const {
  return num_.is_constant() && num_.constant_value() == 1 &&
         den_.is_constant() && den_.constant_value() == 1;
}

bool RatFunc::is_poly() const {
  return den_.is_constant() && den_.constant_value() == 1;
}

bool RatFunc::is_constant() const {
  return num_.is_constant() && den_.is_constant();
}

mpq_class RatFunc::constant_value() const {
  assert(is_constant());
  if (num_.is_zero()) return mpq_class(0);
  mpq_class v = num_.constant_value() / den_.constant_value();
  v.canonicalize();
  return v;
}

RatFunc RatFunc::operator-() const { return RatFunc(-num_, den_); }

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  assert(a.nvars() == b.nvars());
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  // With a and b reduced, only the shared denominator factor can survive
  // into the sum, so one small gcd finishes the reduction.
  MPoly g = mpoly_gcd(a.den_, b.den_);
  if (g.is_constant()) {
    MPoly num = a.num_ * b.den_ + b.num_ * a.den_;
    return RatFunc::from_coprime(std::move(num), a.den_ * b.den_);
  }
  MPoly da = *MPoly::divide_exact(a.den_, g);
  MPoly db = *MPoly::divide_exact(b.den_, g);
  MPoly num = a.num_ * db + b.num_ * da;
  MPoly h = mpoly_gcd(num, g);
  if (!h.is_constant()) {
    num = *MPoly::divide_exact(num, h);
    g = *MPoly::divide_exact(g, h);
  }
  return RatFunc::from_coprime(std::move(num), da * db * g);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  assert(a.nvars() == b.nvars());
  if (a.is_zero() || b.is_zero()) return RatFunc(a.nvars());
  MPoly g1 = mpoly_gcd(a.num_, b.den_);
  MPoly g2 = mpoly_gcd(b.num_, a.den_);
  MPoly n1 = g1.is_constant() ? a.num_ : *MPoly::divide_exact(a.num_, g1);
  MPoly d2 = g1.is_constant() ? b.den_ : *MPoly::divide_exact(b.den_, g1);
  MPoly n2 = g2.is_constant() ? b.num_ : *MPoly::divide_exact(b.num_, g2);
  MPoly d1 = g2.is_constant() ? a.den_ : *MPoly::divide_exact(a.den_, g2);
  return RatFunc::from_coprime(n1 * n2, d1 * d2);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
  return a * b.invert();
}

RatFunc RatFunc::invert() const {
  if (is_zero()) fail(ErrorKind::DivisionByZero, "inverse of zero");
  MPoly num = den_, den = num_;
  if (den.grlex_lc_negative()) {
    num = -num;
    den = -den;
  }
  return RatFunc(std::move(num), std::move(den));
}

RatFunc RatFunc::mul_scalar(const mpq_class& c) const {
  if (c == 0 || is_zero()) return RatFunc(nvars());
  return from_coprime(num_.mul_scalar(c.get_num()),
                      den_.mul_scalar(c.get_den()));
}

RatFunc RatFunc::derive(const std::function<MPoly(const MPoly&)>& d) const {
  if (is_zero()) return *this;
  MPoly dn = d(num_);
  if (is_poly()) return RatFunc::poly(std::move(dn));
  MPoly dd = d(den_);
  return RatFunc::make(dn * den_ - num_ * dd, den_ * den_);
}

RatFunc RatFunc::derivative(std::uint32_t v) const {
  return derive([v](const MPoly& p) { return p.derivative(v); });
}

std::string RatFunc::to_string(const std::vector<std::string>& names) const {
  if (is_poly()) return num_.to_string(names);
  std::string n = num_.to_string(names);
  if (num_.term_count() > 1) n = "(" + n + ")";
  std::string d = den_.to_string(names);
  if (den_.term_count() > 1 || !den_.is_constant()) d = "(" + d + ")";
  return n + "/" + d;
}

}  // namespace spectral
