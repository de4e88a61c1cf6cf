#pragma once
#include <cstdint>
#include <vector>

#include "core/odo.hpp"
#include "core/specpoly.hpp"

namespace spectral {

// Coordinates of an operator in the C[L]-module basis: P = sum p_i(L) G_i.
// Each entry is a polynomial in lambda alone with constant coefficients,
// stored in the same polynomial context as the relation ideal so it can be
// rendered and combined without conversion.
struct ModuleCoordinates {
  std::vector<SpectralPolynomial> coords;
};

// The evaluation homomorphism lambda -> L, mu_i -> G_i on polynomials with
// constant coefficients.  Powers of L and of the generators are cached, so
// one evaluator should be reused across a batch of calls.
class PhiEvaluator {
public:
  explicit PhiEvaluator(const GoodearlBasis& basis);

  DiffOperator operator()(const SpectralPolynomial& p) const;
  const DiffOperator& lambda_power(std::uint32_t k) const;

private:
  const DiffOperator& gen_power(std::size_t slot, std::uint32_t k) const;

  const GoodearlBasis* basis_;
  mutable std::vector<DiffOperator> lpow_;
  mutable std::vector<std::vector<DiffOperator>> gpow_;
};

DiffOperator phi_L(const SpectralPolynomial& p, const GoodearlBasis& basis);

// Module reduction of P against {G_0, ..., G_{t-1}} over C[L].  Succeeds
// exactly when P lies in the span; the failure diagnostic names the order
// at which reduction got stuck.
ModuleCoordinates reduce_as_module(const DiffOperator& P,
                                   const GoodearlBasis& basis);

struct BCRelation {
  long i;
  long j;
  SpectralPolynomial poly;
};

// Groebner basis of the Burchnall-Chaundy ideal: one relation R_{i,j} per
// pair 1 <= i <= j <= t-1, monic with leading monomial mu_i mu_j, the rest
// linear in the mu variables.
struct BCBasis {
  GoodearlBasis source;
  WeightedOrder order;
  std::vector<BCRelation> relations;

  SpecContext context() const;
  std::vector<SpectralPolynomial> polys() const;
};

// The weighted order attached to a Goodearl basis: one mu slot per
// generator past G_0, weighted by operator order.
WeightedOrder basis_order(const GoodearlBasis& basis);

BCBasis bc_ideal(const GoodearlBasis& basis);

struct MembershipResult {
  bool member;
  SpectralPolynomial normal_form;
};

MembershipResult bc_membership(const SpectralPolynomial& p, const BCBasis& bc);

// Normal form of f1*f2 in the quotient ring; both inputs must already be
// reduced (linear in mu).
SpectralPolynomial quotient_product_normal_form(const SpectralPolynomial& f1,
                                                const SpectralPolynomial& f2,
                                                const BCBasis& bc);

}  // namespace spectral
