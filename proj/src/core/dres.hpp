#pragma once
#include <vector>

#include "core/odo.hpp"
#include "core/specpoly.hpp"

namespace spectral {

// Operator with polynomial spectral coefficients, sum c_k(lambda, mu) d^k
// with c_k in K[lambda, mu].  This is the ring the resultant matrix lives
// over; it only needs lifting, the d-shift, and spectral-term subtraction.
struct SpectralOperator {
  SpecContext ctx;
  std::vector<SpectralPolynomial> coeffs;  // ascending powers of d, trimmed

  static SpectralOperator lift(const DiffOperator& P, const SpecContext& ctx);

  long ord() const { return static_cast<long>(coeffs.size()) - 1; }
  bool is_zero() const { return coeffs.empty(); }
  const SpectralPolynomial& coeff(std::size_t k) const;

  // Left multiplication by d: shifts every row up one power and adds the
  // coefficient derivatives (lambda and mu are constants).
  SpectralOperator shifted() const;

  void trim();
};

// P - v for a spectral variable term v (typically lambda or mu_i).
SpectralOperator operator-(SpectralOperator P, const SpectralPolynomial& v);

// Fraction-free (Bareiss) determinant; entries consumed by value.  Exposed
// so tests can pit it against cofactor expansion.
SpectralPolynomial fraction_free_determinant(
    std::vector<std::vector<SpectralPolynomial>> m);

// Differential resultant of two spectral-coefficient operators via the
// Sylvester-style matrix whose rows are d^i P (i < ord Q) followed by
// d^j Q (j < ord P).  For commuting pencils the determinant has constant
// coefficients; that is verified and the result returned over C.
SpectralPolynomial diff_resultant(const SpectralOperator& P,
                                  const SpectralOperator& Q);

// Product of the distinct irreducible factors of f over C[lambda, mu],
// up to a nonzero constant of C.
SpectralPolynomial squarefree_part(const SpectralPolynomial& f);

}  // namespace spectral
