#pragma once
#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "core/diffield.hpp"

namespace spectral {

// Monomial l^k mu^alpha in the spectral variables; mu slots are 0-based
// (slot s is the paper's mu_{s+1}).  The defaulted comparison is the
// structural storage order (lex on (lambda, mu)), not the weighted order.
struct SpectralMonomial {
  std::uint32_t lambda = 0;
  std::vector<std::uint32_t> mu;

  auto operator<=>(const SpectralMonomial&) const = default;

  bool is_unit() const;
  long deg_mu() const;
  bool divides(const SpectralMonomial& m) const;
  SpectralMonomial operator*(const SpectralMonomial& o) const;
  SpectralMonomial quotient(const SpectralMonomial& o) const;  // this / o
  static SpectralMonomial lcm(const SpectralMonomial& a,
                              const SpectralMonomial& b);
  static SpectralMonomial unit(std::uint32_t nmu);
  std::string to_string() const;  // "l^2*mu1*mu3^2", "1" for the unit
};

// The product order of Def. 5.1: mu-parts first, by weight w(mu_i) =
// ord(G_i) with a lex tie-break reading mu variables from highest weight
// down (larger exponent wins); equal mu-parts fall back to the lambda
// exponent.  w(lambda) = n participates only in mono_weight.
class WeightedOrder {
 public:
  // weights[s] = w(mu_{s+1}); all positive, pairwise distinct and nonzero
  // mod n (so Lemma 6.2 uniqueness holds).
  static WeightedOrder make(long n, std::vector<long> weights);

  long n() const { return n_; }
  std::uint32_t nmu() const { return static_cast<std::uint32_t>(w_.size()); }
  const std::vector<long>& weights() const { return w_; }
  long weight(std::size_t slot) const { return w_[slot]; }

  long mu_weight(const SpectralMonomial& m) const;

 private:
  long n_ = 0;
  std::vector<long> w_;
  std::vector<std::size_t> desc_;  // mu slots sorted by decreasing weight

  friend std::strong_ordering mono_compare(const SpectralMonomial& a,
                                           const SpectralMonomial& b,
                                           const WeightedOrder& ord);
};

long mono_weight(const SpectralMonomial& m, const WeightedOrder& ord);
std::strong_ordering mono_compare(const SpectralMonomial& a,
                                  const SpectralMonomial& b,
                                  const WeightedOrder& ord);
// The unique mu-linear monomial of weight W, if any: l^(W/n) when n | W,
// else l^a mu_i with w(mu_i) = W mod n and a = (W - w(mu_i))/n >= 0.
std::optional<SpectralMonomial> monomial_of_weight(long W,
                                                   const WeightedOrder& ord);

enum class CoeffRing { ConstantsC, FullK };

// Shared shape of a family of spectral polynomials: the coefficient
// field, the number of mu variables, and whether coefficients are
// restricted to the constants subfield C.
struct SpecContext {
  DiffField::Ptr field;
  std::uint32_t nmu = 0;
  CoeffRing ring = CoeffRing::ConstantsC;

  bool compatible(const SpecContext& o) const;
  SpecContext promoted(const SpecContext& o) const;  // ring join
};

// Sparse polynomial in lambda, mu_1..mu_{t-1} over C or K.  Terms are
// stored under the structural monomial order; weighted-order queries take
// the order as an argument.
class SpectralPolynomial {
 public:
  static SpectralPolynomial zero(SpecContext ctx);
  static SpectralPolynomial constant(SpecContext ctx, FieldElement c);
  static SpectralPolynomial rational(SpecContext ctx, const mpq_class& q);
  static SpectralPolynomial lambda_pow(SpecContext ctx, std::uint32_t k);
  static SpectralPolynomial mu_var(SpecContext ctx, std::uint32_t slot);
  static SpectralPolynomial monomial(SpecContext ctx, SpectralMonomial m,
                                     FieldElement c);

  const SpecContext& ctx() const { return ctx_; }
  const DiffField::Ptr& field() const { return ctx_.field; }
  std::uint32_t nmu() const { return ctx_.nmu; }
  CoeffRing ring() const { return ctx_.ring; }
  const std::map<SpectralMonomial, FieldElement>& terms() const {
    return terms_;
  }
  bool is_zero() const { return terms_.empty(); }
  std::size_t nterms() const { return terms_.size(); }
  FieldElement coeff(const SpectralMonomial& m) const;

  long deg_mu() const;     // max over terms; 0 for the zero polynomial
  long deg_lambda() const;
  bool is_mu_linear() const { return deg_mu() <= 1; }

  SpectralPolynomial operator-() const;
  friend SpectralPolynomial operator+(const SpectralPolynomial& a,
                                      const SpectralPolynomial& b);
  friend SpectralPolynomial operator-(const SpectralPolynomial& a,
                                      const SpectralPolynomial& b);
  friend SpectralPolynomial operator*(const SpectralPolynomial& a,
                                      const SpectralPolynomial& b);
  SpectralPolynomial& operator+=(const SpectralPolynomial& o) {
    return *this = *this + o;
  }
  SpectralPolynomial& operator-=(const SpectralPolynomial& o) {
    return *this = *this - o;
  }
  SpectralPolynomial mul_coeff(const FieldElement& c) const;
  SpectralPolynomial mul_monomial(const SpectralMonomial& m) const;
  friend bool operator==(const SpectralPolynomial& a,
                         const SpectralPolynomial& b);
  friend bool operator!=(const SpectralPolynomial& a,
                         const SpectralPolynomial& b) {
    return !(a == b);
  }

  // Leading term under the weighted order; requires nonzero.
  std::pair<SpectralMonomial, FieldElement> leading(
      const WeightedOrder& ord) const;

  // Coefficient-wise derivation; lambda and the mu_i are constants.
  SpectralPolynomial derive() const;

  // Exact division in K[lambda, mu] under the structural order; nullopt
  // when b does not divide a.
  static std::optional<SpectralPolynomial> divide_exact(
      const SpectralPolynomial& a, const SpectralPolynomial& b);

  // Terms in decreasing weighted order; "l"/"mu1".. variable names.
  std::string to_string(const WeightedOrder& ord) const;

 private:
  explicit SpectralPolynomial(SpecContext ctx) : ctx_(std::move(ctx)) {}
  void add_term(const SpectralMonomial& m, const FieldElement& c);

  SpecContext ctx_;
  std::map<SpectralMonomial, FieldElement> terms_;
};

struct DivisionResult {
  std::vector<SpectralPolynomial> quotients;
  SpectralPolynomial normal_form;
};

// Deterministic multivariate division: repeatedly reduces the largest
// reducible monomial, choosing the first basis element whose leading
// monomial divides it.
DivisionResult poly_divide(const SpectralPolynomial& p,
                           const std::vector<SpectralPolynomial>& basis,
                           const WeightedOrder& ord);

SpectralPolynomial s_polynomial(const SpectralPolynomial& f,
                                const SpectralPolynomial& g,
                                const WeightedOrder& ord);

bool is_groebner(const std::vector<SpectralPolynomial>& basis,
                 const WeightedOrder& ord);

}  // namespace spectral
