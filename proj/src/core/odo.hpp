#pragma once
#include <map>
#include <vector>

#include "core/diffield.hpp"

namespace spectral {

// Order of an operator; ord(0) = -infinity, below every integer.
class OrderValue {
 public:
  static OrderValue neg_inf() { return OrderValue(); }
  static OrderValue of(long v) {
    OrderValue o;
    o.finite_ = true;
    o.v_ = v;
    return o;
  }

  bool finite() const { return finite_; }
  long value() const;  // requires finite()

  friend bool operator==(const OrderValue& x, const OrderValue& y) {
    return x.finite_ == y.finite_ && (!x.finite_ || x.v_ == y.v_);
  }
  friend bool operator!=(const OrderValue& x, const OrderValue& y) {
    return !(x == y);
  }
  friend bool operator<(const OrderValue& x, const OrderValue& y) {
    if (!x.finite_) return y.finite_;
    return y.finite_ && x.v_ < y.v_;
  }
  friend bool operator<=(const OrderValue& x, const OrderValue& y) {
    return x < y || x == y;
  }
  friend bool operator>(const OrderValue& x, const OrderValue& y) {
    return y < x;
  }
  friend bool operator>=(const OrderValue& x, const OrderValue& y) {
    return y <= x;
  }

 private:
  bool finite_ = false;
  long v_ = 0;
};

// P = sum a_i d^i with a_i in a differential field K; coeffs_ ascending in
// i, last entry nonzero (empty for the zero operator).  Immutable value
// type; multiplication is the noncommutative composition given by the
// Leibniz rule d.a = a d + a'.
class DiffOperator {
 public:
  static DiffOperator zero(DiffField::Ptr f);
  static DiffOperator one(const DiffField::Ptr& f);
  static DiffOperator dx(const DiffField::Ptr& f);
  static DiffOperator scalar(const FieldElement& a);
  static DiffOperator from_coeffs(DiffField::Ptr f,
                                  std::vector<FieldElement> coeffs);

  const DiffField::Ptr& field() const { return field_; }
  bool is_zero() const { return coeffs_.empty(); }
  OrderValue ord() const;
  long order() const;       // requires nonzero
  FieldElement lc() const;  // requires nonzero
  FieldElement coeff(std::size_t i) const;
  const std::vector<FieldElement>& coeffs() const { return coeffs_; }

  DiffOperator operator-() const;
  friend DiffOperator operator+(const DiffOperator& p, const DiffOperator& q);
  friend DiffOperator operator-(const DiffOperator& p, const DiffOperator& q);
  friend DiffOperator operator*(const DiffOperator& p, const DiffOperator& q);
  DiffOperator& operator+=(const DiffOperator& o) { return *this = *this + o; }
  DiffOperator& operator-=(const DiffOperator& o) { return *this = *this - o; }
  DiffOperator& operator*=(const DiffOperator& o) { return *this = *this * o; }
  // Left multiplication by the order-0 operator c.
  DiffOperator mul_scalar(const FieldElement& c) const;
  DiffOperator pow(long k) const;  // k >= 0
  friend bool operator==(const DiffOperator& p, const DiffOperator& q);
  friend bool operator!=(const DiffOperator& p, const DiffOperator& q) {
    return !(p == q);
  }

  // Monic with zero coefficient at order n-1.  Constants (order < 1) are
  // never in normal form; the notion presupposes a genuine operator.
  bool is_normal_form() const;
  std::string to_string() const;

 private:
  DiffOperator(DiffField::Ptr f, std::vector<FieldElement> c);
  void trim();

  DiffField::Ptr field_;
  std::vector<FieldElement> coeffs_;
};

DiffOperator op_commutator(const DiffOperator& p, const DiffOperator& q);

// C[L]-module basis {1, G_1, ..., G_{t-1}} of the centralizer of L.  The
// constructor verifies commutation with L, pairwise distinct order classes
// mod n, and closure of the class set under addition; it does not (and
// cannot, from this data) certify order minimality of the basis.
struct GoodearlBasis {
  DiffOperator L;
  std::vector<DiffOperator> gens;  // gens[0] = 1
  std::vector<long> orders;        // orders[i] = ord(gens[i])
  long n = 0;                      // ord(L)
  long t = 0;                      // |O| = gens.size()
  long rank = 0;                   // n / t
  std::vector<long> order_group;   // sorted residues [ord(G_i)]_n
  std::map<long, std::size_t> class_map;  // residue -> basis index

  static GoodearlBasis make(DiffOperator L, std::vector<DiffOperator> gens);
};

}  // namespace spectral
