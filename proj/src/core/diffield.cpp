#include "core/diffield.hpp"

#include <cassert>

#include "core/errors.hpp"

namespace spectral {

DiffField::Ptr DiffField::constants(std::vector<std::string> params) {
  auto f = std::shared_ptr<DiffField>(new DiffField());
  f->variant_ = FieldVariant::Constants;
  f->params_ = std::move(params);
  f->var_names_ = f->params_;
  return f;
}

DiffField::Ptr DiffField::exponential() {
  auto f = std::shared_ptr<DiffField>(new DiffField());
  f->variant_ = FieldVariant::Exponential;
  f->var_names_ = {"E"};
  return f;
}

DiffField::Ptr DiffField::elliptic(const EllipticArg& g2,
                                   const EllipticArg& g3) {
  auto f = std::shared_ptr<DiffField>(new DiffField());
  f->variant_ = FieldVariant::Elliptic;
  if (g2.name) f->params_.push_back(*g2.name);
  if (g3.name) f->params_.push_back(*g3.name);
  f->var_names_ = f->params_;
  f->var_names_.push_back("wp");
  std::uint32_t nv = f->nvars();
  std::uint32_t next = 0;
  f->g2_ = g2.name ? MPoly::variable(nv, next++)
                   : MPoly::constant(nv, g2.value);
  f->g3_ = g3.name ? MPoly::variable(nv, next++)
                   : MPoly::constant(nv, g3.value);
  if (!g2.name && !g3.name) {
    mpq_class disc = g2.value * g2.value * g2.value + 27 * g3.value * g3.value;
    if (disc == 0) {
      fail(ErrorKind::DiscriminantZero,
           "elliptic specialization has zero discriminant");
    }
  }
  MPoly wp = MPoly::variable(nv, f->gen_var());
  f->wpd_square_ = RatFunc::poly(wp.pow(3).mul_scalar(4) + f->g2_ * wp + f->g3_);
  return f;
}

bool DiffField::same(const DiffField& o) const {
  return variant_ == o.variant_ && params_ == o.params_ && g2_ == o.g2_ &&
         g3_ == o.g3_;
}

void require_same_field(const FieldElement& x, const FieldElement& y) {
  if (!x.field() || !y.field() || !x.field()->same(*y.field())) {
    fail(ErrorKind::FieldMismatch, "elements belong to different fields");
  }
}

FieldElement FieldElement::zero(const DiffField::Ptr& f) {
  FieldElement e;
  e.field_ = f;
  e.a_ = RatFunc(f->nvars());
  e.b_ = RatFunc(f->nvars());
  return e;
}

FieldElement FieldElement::one(const DiffField::Ptr& f) {
  return rational(f, 1);
}

FieldElement FieldElement::rational(const DiffField::Ptr& f,
                                    const mpq_class& c) {
  FieldElement e = zero(f);
  e.a_ = RatFunc::constant(f->nvars(), c);
  return e;
}

FieldElement FieldElement::parameter(const DiffField::Ptr& f,
                                     std::uint32_t i) {
  assert(i < f->nparams());
  FieldElement e = zero(f);
  e.a_ = RatFunc::variable(f->nvars(), i);
  return e;
}

FieldElement FieldElement::generator(const DiffField::Ptr& f) {
  assert(f->has_generator());
  FieldElement e = zero(f);
  e.a_ = RatFunc::variable(f->nvars(), f->gen_var());
  return e;
}

FieldElement FieldElement::wpd(const DiffField::Ptr& f) {
  assert(f->variant() == FieldVariant::Elliptic);
  FieldElement e = zero(f);
  e.b_ = RatFunc::constant(f->nvars(), 1);
  return e;
}

FieldElement FieldElement::from_ratfunc(const DiffField::Ptr& f, RatFunc a) {
  assert(a.nvars() == f->nvars());
  FieldElement e = zero(f);
  e.a_ = std::move(a);
  return e;
}

FieldElement FieldElement::make(const DiffField::Ptr& f, RatFunc a,
                                RatFunc b) {
  assert(b.is_zero() || f->variant() == FieldVariant::Elliptic);
  FieldElement e = zero(f);
  e.a_ = std::move(a);
  e.b_ = std::move(b);
  return e;
}

FieldElement FieldElement::from_fraction(const DiffField::Ptr& f, MPoly num,
                                         MPoly den) {
  return from_ratfunc(f, RatFunc::make(std::move(num), std::move(den)));
}

FieldElement FieldElement::from_wpd_powers(const DiffField::Ptr& f,
                                           std::vector<RatFunc> coeffs) {
  assert(f->variant() == FieldVariant::Elliptic);
  RatFunc a(f->nvars()), b(f->nvars());
  RatFunc spow = RatFunc::constant(f->nvars(), 1);
  const RatFunc& s = f->wpd_square();
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (i >= 2 && i % 2 == 0) spow = spow * s;
    if (i == 0) {
      a += coeffs[i];
    } else if (i % 2 == 0) {
      a += coeffs[i] * spow;
    } else {
      b += coeffs[i] * spow;
    }
  }
  return make(f, std::move(a), std::move(b));
}

bool FieldElement::is_constant() const {
  if (!field_->has_generator()) return true;
  return b_.is_zero() && !a_.depends_on(field_->gen_var());
}

std::optional<mpq_class> FieldElement::as_rational() const {
  if (!b_.is_zero() || !a_.is_constant()) return std::nullopt;
  return a_.constant_value();
}

FieldElement FieldElement::operator-() const {
  return make(field_, -a_, -b_);
}

FieldElement operator+(const FieldElement& x, const FieldElement& y) {
  require_same_field(x, y);
  return FieldElement::make(x.field_, x.a_ + y.a_, x.b_ + y.b_);
}

FieldElement operator-(const FieldElement& x, const FieldElement& y) {
  require_same_field(x, y);
  return FieldElement::make(x.field_, x.a_ - y.a_, x.b_ - y.b_);
}

FieldElement operator*(const FieldElement& x, const FieldElement& y) {
  require_same_field(x, y);
  if (x.b_.is_zero() && y.b_.is_zero()) {
    return FieldElement::make(x.field_, x.a_ * y.a_, RatFunc(x.a_.nvars()));
  }
  const RatFunc& s = x.field_->wpd_square();
  return FieldElement::make(x.field_, x.a_ * y.a_ + x.b_ * y.b_ * s,
                            x.a_ * y.b_ + x.b_ * y.a_);
}

FieldElement operator/(const FieldElement& x, const FieldElement& y) {
  return x * y.invert();
}

bool FieldElement::operator==(const FieldElement& o) const {
  require_same_field(*this, o);
  return a_ == o.a_ && b_ == o.b_;
}

FieldElement FieldElement::invert() const {
  if (is_zero()) fail(ErrorKind::DivisionByZero, "inverse of zero");
  if (b_.is_zero()) {
    return make(field_, a_.invert(), b_);
  }
  // (a + b w)^-1 = (a - b w) / (a^2 - b^2 w^2); the norm cannot vanish for
  // a nonzero element since w^2 has odd wp-degree.
  RatFunc norm = a_ * a_ - b_ * b_ * field_->wpd_square();
  if (norm.is_zero()) fail(ErrorKind::Internal, "vanishing quadratic norm");
  RatFunc inv = norm.invert();
  return make(field_, a_ * inv, -(b_ * inv));
}

FieldElement FieldElement::pow(long k) const {
  if (k < 0) return invert().pow(-k);
  FieldElement r = one(field_);
  FieldElement base = *this;
  while (k > 0) {
    if (k & 1) r = r * base;
    base = base * base;
    k >>= 1;
  }
  return r;
}

FieldElement FieldElement::derive() const {
  switch (field_->variant()) {
    case FieldVariant::Constants:
      return zero(field_);
    case FieldVariant::Exponential: {
      std::uint32_t ev = field_->gen_var();
      auto d = [ev](const MPoly& p) {
        MPoly r(p.nvars());
        for (const auto& [e, c] : p.terms()) {
          if (e[ev] == 0) continue;
          r.add_term(e, c * e[ev]);
        }
        return r;
      };
      return make(field_, a_.derive(d), b_);
    }
    case FieldVariant::Elliptic: {
      std::uint32_t wv = field_->gen_var();
      RatFunc da = a_.derivative(wv);
      RatFunc db = b_.derivative(wv);
      MPoly wp = MPoly::variable(field_->nvars(), wv);
      RatFunc h = RatFunc::make(
          wp * wp.mul_scalar(12) + field_->g2(),
          MPoly::constant(field_->nvars(), 2));
      return make(field_, b_ * h + db * field_->wpd_square(), da);
    }
  }
  fail(ErrorKind::Internal, "unknown field variant");
}

FieldElement::FactorText FieldElement::render_factor() const {
  const auto& names = field_->var_names();
  if (b_.is_zero()) {
    bool neg = a_.num().grlex_lc_negative();
    RatFunc mag = neg ? -a_ : a_;
    std::string text = mag.to_string(names);
    if (mag.is_poly() && mag.num().term_count() > 1) text = "(" + text + ")";
    return {neg, text};
  }
  if (a_.is_zero()) {
    FieldElement bpart = make(field_, b_, RatFunc(field_->nvars()));
    FactorText bf = bpart.render_factor();
    std::string text = (bf.text == "1") ? "wpd" : bf.text + "*wpd";
    return {bf.neg, text};
  }
  return {false, "(" + to_string() + ")"};
}

std::string FieldElement::to_string() const {
  if (is_zero()) return "0";
  const auto& names = field_->var_names();
  if (b_.is_zero()) return a_.to_string(names);
  FieldElement bterm = make(field_, RatFunc(field_->nvars()), b_);
  FactorText bf = bterm.render_factor();
  if (a_.is_zero()) return (bf.neg ? "-" : "") + bf.text;
  bool aneg = a_.num().grlex_lc_negative();
  RatFunc amag = aneg ? -a_ : a_;
  std::string out = (aneg ? "-" : "") + amag.to_string(names);
  out += bf.neg ? " - " : " + ";
  out += bf.text;
  return out;
}

}  // namespace spectral
