#pragma once
#include <vector>

#include "core/specpoly.hpp"

namespace spectral::testing {

// The published Groebner bases of the two worked examples, entered term
// by term.  Tests pin computed output against these.

inline std::vector<SpectralPolynomial> frozen_exponential_relations(
    const SpecContext& ctx) {
  auto L = [&](std::uint32_t k) {
    return SpectralPolynomial::lambda_pow(ctx, k);
  };
  auto M = [&](std::uint32_t s) { return SpectralPolynomial::mu_var(ctx, s); };
  auto Q = [&](long n, long d) {
    return SpectralPolynomial::rational(ctx, mpq_class(n, d));
  };
  SpectralPolynomial R11 = M(0) * M(0) - L(1) * M(1) + Q(8, 3) * L(2);
  SpectralPolynomial R12 =
      M(0) * M(1) + Q(4, 3) * L(1) * M(0) + Q(64, 27) * L(1) - L(3);
  SpectralPolynomial R22 = M(1) * M(1) + (Q(64, 27) - L(2)) * M(0) -
                           Q(4, 3) * L(1) * M(1) - Q(32, 9) * L(2);
  return {R11, R12, R22};
}

inline std::vector<SpectralPolynomial> frozen_elliptic_relations(
    const SpecContext& ctx) {
  auto L = [&](std::uint32_t k) {
    return SpectralPolynomial::lambda_pow(ctx, k);
  };
  auto M = [&](std::uint32_t s) { return SpectralPolynomial::mu_var(ctx, s); };
  auto Q = [&](long n, long d = 1) {
    return SpectralPolynomial::rational(ctx, mpq_class(n, d));
  };
  SpectralPolynomial g2 = SpectralPolynomial::constant(
      ctx, FieldElement::parameter(ctx.field, 0));
  SpectralPolynomial g3 = SpectralPolynomial::constant(
      ctx, FieldElement::parameter(ctx.field, 1));

  SpectralPolynomial R11 = M(0) * M(0) +
                           (Q(3, 4) * g2 + Q(1) - L(1)) * M(1) +
                           Q(27, 4) * g3 * (L(1) - Q(1));
  SpectralPolynomial R12 = M(0) * M(1) + (Q(1) - L(1)) * M(2);
  SpectralPolynomial R13 =
      M(0) * M(2) + Q(27, 4) * g3 * M(1) +
      (Q(1, 4) * (Q(9) * g2 * g2 + Q(15) * g2 + Q(4)) -
       Q(1, 4) * (Q(9) * g2 * g2 + Q(30) * g2 + Q(12)) * L(1) +
       Q(1, 4) * (Q(15) * g2 + Q(12)) * L(2) - L(3));
  SpectralPolynomial R22 = M(1) * M(1) + (Q(1) + Q(3) * g2) -
                           (Q(6) * g2 + Q(3)) * L(1) +
                           (Q(3) * g2 + Q(3)) * L(2) - L(3);
  SpectralPolynomial R23 =
      M(1) * M(2) -
      (L(2) - (Q(3) * g2 + Q(2)) * L(1) + (Q(3) * g2 + Q(1))) * M(0);
  SpectralPolynomial R33 =
      M(2) * M(2) -
      (L(2) - Q(1, 4) * (Q(15) * g2 + Q(8)) * L(1) +
       Q(1, 4) * (Q(9) * g2 * g2 + Q(15) * g2 + Q(4))) *
          M(1) +
      (Q(27, 4) * g3 * L(2) - Q(1, 4) * (Q(81) * g2 + Q(54)) * g3 * L(1) +
       Q(1, 4) * (Q(81) * g2 + Q(27)) * g3);
  return {R11, R12, R13, R22, R23, R33};
}

}  // namespace spectral::testing
