#include "core/odo.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>
#include <utility>

#include "core/errors.hpp"

namespace spectral {

long OrderValue::value() const {
  assert(finite_);
  return v_;
}

DiffOperator::DiffOperator(DiffField::Ptr f, std::vector<FieldElement> c)
    : field_(std::move(f)), coeffs_(std::move(c)) {
  assert(field_);
  trim();
}

void DiffOperator::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

DiffOperator DiffOperator::zero(DiffField::Ptr f) {
  return DiffOperator(std::move(f), {});
}

DiffOperator DiffOperator::one(const DiffField::Ptr& f) {
  return DiffOperator(f, {FieldElement::one(f)});
}

DiffOperator DiffOperator::dx(const DiffField::Ptr& f) {
  return DiffOperator(f, {FieldElement::zero(f), FieldElement::one(f)});
}

DiffOperator DiffOperator::scalar(const FieldElement& a) {
  assert(a.field());
  return DiffOperator(a.field(), {a});
}

DiffOperator DiffOperator::from_coeffs(DiffField::Ptr f,
                                       std::vector<FieldElement> coeffs) {
  for (const auto& c : coeffs)
    if (!c.field() || !c.field()->same(*f))
      fail(ErrorKind::FieldMismatch,
           "operator coefficient from a different field");
  return DiffOperator(std::move(f), std::move(coeffs));
}

OrderValue DiffOperator::ord() const {
  return coeffs_.empty()
             ? OrderValue::neg_inf()
             : OrderValue::of(static_cast<long>(coeffs_.size()) - 1);
}

long DiffOperator::order() const {
  assert(!coeffs_.empty());
  return static_cast<long>(coeffs_.size()) - 1;
}

FieldElement DiffOperator::lc() const {
  assert(!coeffs_.empty());
  return coeffs_.back();
}

FieldElement DiffOperator::coeff(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : FieldElement::zero(field_);
}

DiffOperator DiffOperator::operator-() const {
  std::vector<FieldElement> c;
  c.reserve(coeffs_.size());
  for (const auto& a : coeffs_) c.push_back(-a);
  return DiffOperator(field_, std::move(c));
}

DiffOperator operator+(const DiffOperator& p, const DiffOperator& q) {
  if (!p.field_->same(*q.field_))
    fail(ErrorKind::FieldMismatch, "operator sum across different fields");
  std::vector<FieldElement> c;
  const std::size_t m = std::max(p.coeffs_.size(), q.coeffs_.size());
  c.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    FieldElement x =
        i < p.coeffs_.size() ? p.coeffs_[i] : FieldElement::zero(p.field_);
    if (i < q.coeffs_.size()) x += q.coeffs_[i];
    c.push_back(std::move(x));
  }
  return DiffOperator(p.field_, std::move(c));
}

DiffOperator operator-(const DiffOperator& p, const DiffOperator& q) {
  return p + (-q);
}

// Composition: expand P = sum a_i d^i and push d^i through Q one
// application of d.c = c d + c' at a time.
DiffOperator operator*(const DiffOperator& p, const DiffOperator& q) {
  if (!p.field_->same(*q.field_))
    fail(ErrorKind::FieldMismatch, "operator product across different fields");
  if (p.is_zero() || q.is_zero()) return DiffOperator::zero(p.field_);
  const std::size_t np = p.coeffs_.size() - 1;
  const std::size_t nq = q.coeffs_.size() - 1;
  std::vector<FieldElement> acc(np + nq + 1, FieldElement::zero(p.field_));
  std::vector<FieldElement> row = q.coeffs_;  // d^i . Q, ascending
  for (std::size_t i = 0; i <= np; ++i) {
    if (i > 0) {
      std::vector<FieldElement> next(row.size() + 1,
                                     FieldElement::zero(p.field_));
      for (std::size_t j = 0; j < row.size(); ++j) {
        next[j + 1] += row[j];
        next[j] += row[j].derive();
      }
      row = std::move(next);
    }
    const FieldElement& a = p.coeffs_[i];
    if (a.is_zero()) continue;
    for (std::size_t j = 0; j < row.size(); ++j)
      if (!row[j].is_zero()) acc[j] += a * row[j];
  }
  return DiffOperator(p.field_, std::move(acc));
}

DiffOperator DiffOperator::mul_scalar(const FieldElement& c) const {
  if (!c.field() || !c.field()->same(*field_))
    fail(ErrorKind::FieldMismatch, "scalar from a different field");
  if (c.is_zero()) return zero(field_);
  std::vector<FieldElement> out;
  out.reserve(coeffs_.size());
  for (const auto& a : coeffs_) out.push_back(c * a);
  return DiffOperator(field_, std::move(out));
}

DiffOperator DiffOperator::pow(long k) const {
  assert(k >= 0);
  DiffOperator r = one(field_);
  for (long i = 0; i < k; ++i) r *= *this;
  return r;
}

bool operator==(const DiffOperator& p, const DiffOperator& q) {
  if (!p.field_->same(*q.field_)) return false;
  if (p.coeffs_.size() != q.coeffs_.size()) return false;
  for (std::size_t i = 0; i < p.coeffs_.size(); ++i)
    if (!(p.coeffs_[i] == q.coeffs_[i])) return false;
  return true;
}

bool DiffOperator::is_normal_form() const {
  if (coeffs_.size() < 2) return false;  // needs order >= 1
  return coeffs_.back().is_one() && coeffs_[coeffs_.size() - 2].is_zero();
}

std::string DiffOperator::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const FieldElement& c = coeffs_[k];
    if (c.is_zero()) continue;
    FieldElement::FactorText f = c.render_factor();
    std::string term;
    if (k == 0) {
      term = f.text;
    } else {
      std::string d = k == 1 ? "D" : "D^" + std::to_string(k);
      term = f.text == "1" ? d : f.text + "*" + d;
    }
    if (first) {
      out << (f.neg ? "-" : "") << term;
      first = false;
    } else {
      out << (f.neg ? " - " : " + ") << term;
    }
  }
  return out.str();
}

DiffOperator op_commutator(const DiffOperator& p, const DiffOperator& q) {
  return p * q - q * p;
}

GoodearlBasis GoodearlBasis::make(DiffOperator L,
                                  std::vector<DiffOperator> gens) {
  const DiffField::Ptr& F = L.field();
  for (const auto& g : gens)
    if (!g.field()->same(*F))
      fail(ErrorKind::FieldMismatch, "basis element from a different field");
  if (!L.is_normal_form())
    fail(ErrorKind::NotNormalForm,
         "L must be monic with zero coefficient at order n-1");
  if (gens.empty() || gens[0] != DiffOperator::one(F))
    fail(ErrorKind::Internal, "basis must begin with G0 = 1");
  const long n = L.order();
  for (std::size_t i = 0; i < gens.size(); ++i)
    if (gens[i].is_zero())
      fail(ErrorKind::ZeroInput,
           "zero operator in basis at index " + std::to_string(i));
  // Coordinates are intrinsic to the set of generators, so fix a canonical
  // listing: ascending operator order (G0 = 1 stays first).
  std::stable_sort(gens.begin() + 1, gens.end(),
                   [](const DiffOperator& a, const DiffOperator& b) {
                     return a.order() < b.order();
                   });
  std::vector<long> orders;
  orders.reserve(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (!op_commutator(L, gens[i]).is_zero())
      fail(ErrorKind::NotCommuting,
           "G" + std::to_string(i) + " does not commute with L");
    orders.push_back(gens[i].order());
  }
  std::map<long, std::size_t> class_map;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const long r = orders[i] % n;
    auto [it, fresh] = class_map.emplace(r, i);
    if (!fresh)
      fail(ErrorKind::DuplicateOrderClass,
           "orders of G" + std::to_string(it->second) + " and G" +
               std::to_string(i) + " coincide mod " + std::to_string(n));
  }
  std::vector<long> group;
  group.reserve(class_map.size());
  for (const auto& [r, idx] : class_map) group.push_back(r);
  for (long a : group)
    for (long b : group)
      if (!class_map.count((a + b) % n))
        fail(ErrorKind::NotSubgroup,
             "order classes are not closed under addition mod " +
                 std::to_string(n));
  const long t = static_cast<long>(gens.size());
  // A subset of Z_n containing 0 and closed under addition is a subgroup,
  // so t divides n.
  assert(n % t == 0);
  return GoodearlBasis{std::move(L), std::move(gens),  std::move(orders), n, t,
                       n / t,        std::move(group), std::move(class_map)};
}

}  // namespace spectral
