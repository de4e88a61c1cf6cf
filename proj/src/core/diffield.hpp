#pragma once
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "core/ratfunc.hpp"

namespace spectral {

enum class FieldVariant { Constants, Exponential, Elliptic };

// Descriptor of a computable differential field K with constants
// C = Q(params):
//   Constants:    K = C, trivial derivation.
//   Exponential:  K = C(E), E' = E.
//   Elliptic:     K = C(wp)[wpd] / (wpd^2 - 4 wp^3 - g2 wp - g3),
//                 wp' = wpd, wpd' = 6 wp^2 + g2/2.
// Polynomial variables are laid out as [params..., generator], where the
// generator slot (E or wp) exists for the non-constant variants.  wpd is
// not a polynomial variable; elements carry it as a quadratic-extension
// part.  g2 and g3 are either parameters or rational literals
// (specialization), in which case the discriminant g2^3 + 27 g3^2 must not
// vanish.
class DiffField {
 public:
  using Ptr = std::shared_ptr<const DiffField>;

  static Ptr constants(std::vector<std::string> params);
  static Ptr exponential();
  // Each of g2, g3 is a parameter name or an exact rational value.
  struct EllipticArg {
    std::optional<std::string> name;
    mpq_class value;
  };
  static Ptr elliptic(const EllipticArg& g2, const EllipticArg& g3);

  FieldVariant variant() const { return variant_; }
  const std::vector<std::string>& params() const { return params_; }
  std::uint32_t nparams() const {
    return static_cast<std::uint32_t>(params_.size());
  }
  bool has_generator() const { return variant_ != FieldVariant::Constants; }
  std::uint32_t nvars() const { return nparams() + (has_generator() ? 1 : 0); }
  std::uint32_t gen_var() const { return nparams(); }
  const std::vector<std::string>& var_names() const { return var_names_; }

  // Elliptic data, over this field's variable set.
  const MPoly& g2() const { return g2_; }
  const MPoly& g3() const { return g3_; }
  const RatFunc& wpd_square() const { return wpd_square_; }

  bool same(const DiffField& o) const;

 private:
  DiffField() = default;
  FieldVariant variant_ = FieldVariant::Constants;
  std::vector<std::string> params_;
  std::vector<std::string> var_names_;
  MPoly g2_, g3_;
  RatFunc wpd_square_;  // 4 wp^3 + g2 wp + g3
};

// Element of K in canonical form a + b*wpd with a, b canonical rational
// functions; b is zero outside the elliptic variant.
class FieldElement {
 public:
  FieldElement() = default;  // detached zero; usable only for reassignment

  static FieldElement zero(const DiffField::Ptr& f);
  static FieldElement one(const DiffField::Ptr& f);
  static FieldElement rational(const DiffField::Ptr& f, const mpq_class& c);
  static FieldElement parameter(const DiffField::Ptr& f, std::uint32_t i);
  static FieldElement generator(const DiffField::Ptr& f);  // E or wp
  static FieldElement wpd(const DiffField::Ptr& f);
  static FieldElement from_ratfunc(const DiffField::Ptr& f, RatFunc a);
  static FieldElement make(const DiffField::Ptr& f, RatFunc a, RatFunc b);
  // Canonicalization entry points for raw data.
  static FieldElement from_fraction(const DiffField::Ptr& f, MPoly num,
                                    MPoly den);
  static FieldElement from_wpd_powers(const DiffField::Ptr& f,
                                      std::vector<RatFunc> coeffs);

  const DiffField::Ptr& field() const { return field_; }
  const RatFunc& a() const { return a_; }
  const RatFunc& b() const { return b_; }
  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
  bool is_one() const { return a_.is_one() && b_.is_zero(); }
  // True when the element lies in the constants subfield C.
  bool is_constant() const;
  // The element as an exact rational, when it is one.
  std::optional<mpq_class> as_rational() const;

  FieldElement operator-() const;
  friend FieldElement operator+(const FieldElement& x, const FieldElement& y);
  friend FieldElement operator-(const FieldElement& x, const FieldElement& y);
  friend FieldElement operator*(const FieldElement& x, const FieldElement& y);
  friend FieldElement operator/(const FieldElement& x, const FieldElement& y);
  FieldElement& operator+=(const FieldElement& o) { return *this = *this + o; }
  FieldElement& operator-=(const FieldElement& o) { return *this = *this - o; }
  FieldElement& operator*=(const FieldElement& o) { return *this = *this * o; }
  bool operator==(const FieldElement& o) const;

  FieldElement invert() const;
  FieldElement pow(long k) const;
  FieldElement derive() const;

  struct FactorText {
    bool neg;
    std::string text;
  };
  // Magnitude/sign split suitable for use as a factor in a rendered
  // product; composite sums come back parenthesized.
  FactorText render_factor() const;
  std::string to_string() const;

 private:
  DiffField::Ptr field_;
  RatFunc a_, b_;
};

void require_same_field(const FieldElement& x, const FieldElement& y);

}  // namespace spectral
