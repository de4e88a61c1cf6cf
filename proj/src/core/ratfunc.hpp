#pragma once
#include <functional>
#include <string>

#include "core/mpoly.hpp"

namespace spectral {

// Rational function num/den over Q in a fixed variable set, kept in the
// canonical form: num and den are poly-coprime with integer coefficients,
// their integer contents are coprime, and den has positive graded-lex
// leading coefficient.  Equality is therefore structural.
class RatFunc {
 public:
  RatFunc() : num_(0), den_(0) {}
  explicit RatFunc(std::uint32_t nvars)
      : num_(nvars), den_(MPoly::constant(nvars, 1)) {}

  // Normalizing constructor; throws DivisionByZero when den is zero.
  static RatFunc make(MPoly num, MPoly den);
  static RatFunc poly(MPoly p);
  static RatFunc constant(std::uint32_t nvars, const mpq_class& c);
  static RatFunc variable(std::uint32_t nvars, std::uint32_t v,
                          std::uint32_t exp = 1);

  std::uint32_t nvars() const { return num_.nvars(); }
  const MPoly& num() const { return num_; }
  const MPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const;
  bool is_poly() const;      // den == 1
  bool is_constant() const;  // num and den both constant
  mpq_class constant_value() const;
  bool depends_on(std::uint32_t v) const {
    return num_.depends_on(v) || den_.depends_on(v);
  }

  RatFunc operator-() const;
  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  bool operator==(const RatFunc& o) const {
    return num_ == o.num_ && den_ == o.den_;
  }

  RatFunc invert() const;  // throws DivisionByZero on zero
  RatFunc mul_scalar(const mpq_class& c) const;

  // Quotient-rule extension of a polynomial derivation d.
  RatFunc derive(const std::function<MPoly(const MPoly&)>& d) const;

  // Partial derivative with respect to variable v.
  RatFunc derivative(std::uint32_t v) const;

  std::string to_string(const std::vector<std::string>& names) const;

 private:
  RatFunc(MPoly num, MPoly den) : num_(std::move(num)), den_(std::move(den)) {}
  // Restores content/sign canonicality for a pair already known to be
  // poly-coprime.
  static RatFunc from_coprime(MPoly num, MPoly den);

  MPoly num_, den_;
};

}  // namespace spectral
