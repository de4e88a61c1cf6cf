#include "core/dres.hpp"

#include <cassert>
#include <utility>

#include "core/errors.hpp"

namespace spectral {

SpectralOperator SpectralOperator::lift(const DiffOperator& P,
                                        const SpecContext& ctx) {
  if (ctx.ring != CoeffRing::FullK)
    fail(ErrorKind::Internal, "spectral operators live over K[lambda, mu]");
  if (!P.field()->same(*ctx.field))
    fail(ErrorKind::FieldMismatch,
         "operator and spectral context use different fields");
  SpectralOperator out{ctx, {}};
  out.coeffs.reserve(P.coeffs().size());
  for (const FieldElement& c : P.coeffs())
    out.coeffs.push_back(SpectralPolynomial::constant(ctx, c));
  out.trim();
  return out;
}

const SpectralPolynomial& SpectralOperator::coeff(std::size_t k) const {
  assert(k < coeffs.size());
  return coeffs[k];
}

void SpectralOperator::trim() {
  while (!coeffs.empty() && coeffs.back().is_zero()) coeffs.pop_back();
}

SpectralOperator SpectralOperator::shifted() const {
  SpectralOperator out{ctx, std::vector<SpectralPolynomial>(
                                coeffs.size() + 1,
                                SpectralPolynomial::zero(ctx))};
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    out.coeffs[k + 1] += coeffs[k];
    out.coeffs[k] += coeffs[k].derive();
  }
  out.trim();
  return out;
}

SpectralOperator operator-(SpectralOperator P, const SpectralPolynomial& v) {
  if (P.coeffs.empty())
    P.coeffs.push_back(-v);
  else
    P.coeffs[0] -= v;
  P.trim();
  return P;
}

SpectralPolynomial fraction_free_determinant(
    std::vector<std::vector<SpectralPolynomial>> m) {
  const std::size_t n = m.size();
  if (n == 0) fail(ErrorKind::Internal, "empty determinant");
  const SpecContext ctx = m[0][0].ctx();
  SpectralPolynomial prev = SpectralPolynomial::rational(ctx, 1);
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t r = k + 1;
      while (r < n && m[r][k].is_zero()) ++r;
      if (r == n) return SpectralPolynomial::zero(ctx);
      std::swap(m[k], m[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        SpectralPolynomial num = m[k][k] * m[i][j] - m[i][k] * m[k][j];
        auto q = SpectralPolynomial::divide_exact(num, prev);
        if (!q)
          fail(ErrorKind::Internal, "fraction-free elimination division fault");
        m[i][j] = std::move(*q);
      }
      m[i][k] = SpectralPolynomial::zero(ctx);
    }
    prev = m[k][k];
  }
  SpectralPolynomial det = std::move(m[n - 1][n - 1]);
  return sign < 0 ? -det : det;
}

SpectralPolynomial diff_resultant(const SpectralOperator& P,
                                  const SpectralOperator& Q) {
  if (P.ord() < 1 || Q.ord() < 1)
    fail(ErrorKind::Internal, "diff_resultant needs operators of order >= 1");
  if (!P.ctx.compatible(Q.ctx))
    fail(ErrorKind::FieldMismatch,
         "resultant operands use different spectral contexts");
  const std::size_t np = static_cast<std::size_t>(P.ord());
  const std::size_t nq = static_cast<std::size_t>(Q.ord());
  const std::size_t N = np + nq;
  const SpecContext& ctx = P.ctx;
  const SpectralPolynomial zero = SpectralPolynomial::zero(ctx);

  std::vector<SpectralOperator> sp = {P}, sq = {Q};
  while (sp.size() < nq) sp.push_back(sp.back().shifted());
  while (sq.size() < np) sq.push_back(sq.back().shifted());

  std::vector<std::vector<SpectralPolynomial>> mat;
  mat.reserve(N);
  auto emit_row = [&](const SpectralOperator& op) {
    std::vector<SpectralPolynomial> row;
    row.reserve(N);
    for (std::size_t col = 0; col < N; ++col) {
      const std::size_t power = N - 1 - col;
      row.push_back(power < op.coeffs.size() ? op.coeffs[power] : zero);
    }
    mat.push_back(std::move(row));
  };
  for (std::size_t i = nq; i-- > 0;) emit_row(sp[i]);
  for (std::size_t j = np; j-- > 0;) emit_row(sq[j]);

  SpectralPolynomial det = fraction_free_determinant(std::move(mat));

  SpecContext cctx{ctx.field, ctx.nmu, CoeffRing::ConstantsC};
  SpectralPolynomial out = SpectralPolynomial::zero(cctx);
  for (const auto& [mono, c] : det.terms()) {
    if (!c.is_constant())
      fail(ErrorKind::NonConstantResultant,
           "resultant coefficient is not constant at " + mono.to_string());
    out += SpectralPolynomial::monomial(cctx, mono, c);
  }
  return out;
}

namespace {

// Conversion between C-coefficient spectral polynomials and plain
// polynomials over [params..., lambda, mu...].  Denominators of the
// constants are cleared first; that only changes the result by a unit
// of C, which every caller tolerates.
MPoly to_mpoly(const SpectralPolynomial& f) {
  const DiffField::Ptr& F = f.field();
  const std::uint32_t npar = F->nparams();
  const std::uint32_t fv = F->nvars();
  const std::uint32_t NV = npar + 1 + f.nmu();

  MPoly den = MPoly::constant(fv, 1);
  for (const auto& [m, c] : f.terms()) {
    const MPoly& d = c.a().den();
    MPoly g = mpoly_gcd(den, d);
    auto q = MPoly::divide_exact(d, g);
    assert(q);
    den = den * *q;
  }

  // Identity on the field variables.  The generator slot (if any) lands on
  // the lambda slot, which is harmless: constants never carry generator
  // exponents (asserted below), so it only ever contributes zero.
  std::vector<std::uint32_t> vmap(fv, 0);
  for (std::uint32_t i = 0; i < fv; ++i) vmap[i] = i;

  MPoly out(NV);
  for (const auto& [m, c] : f.terms()) {
    const RatFunc& r = c.a();
    assert(!F->has_generator() || !r.depends_on(F->gen_var()));
    auto scale = MPoly::divide_exact(den, r.den());
    assert(scale);
    MPoly num = (r.num() * *scale).remap(NV, vmap);
    Expvec shift(NV, 0);
    shift[npar] = m.lambda;
    for (std::uint32_t s = 0; s < f.nmu(); ++s) shift[npar + 1 + s] = m.mu[s];
    out += num.mul_term(shift, 1);
  }
  return out;
}

SpectralPolynomial from_mpoly(const MPoly& p, const SpecContext& ctx) {
  const DiffField::Ptr& F = ctx.field;
  const std::uint32_t npar = F->nparams();
  SpectralPolynomial out = SpectralPolynomial::zero(ctx);
  for (const auto& [e, q] : p.terms()) {
    FieldElement c = FieldElement::rational(F, q);
    for (std::uint32_t i = 0; i < npar; ++i)
      if (e[i] > 0) c = c * FieldElement::parameter(F, i).pow(e[i]);
    SpectralMonomial m = SpectralMonomial::unit(ctx.nmu);
    m.lambda = e[npar];
    for (std::uint32_t s = 0; s < ctx.nmu; ++s) m.mu[s] = e[npar + 1 + s];
    out += SpectralPolynomial::monomial(ctx, m, c);
  }
  return out;
}

}  // namespace

SpectralPolynomial squarefree_part(const SpectralPolynomial& f) {
  if (f.is_zero()) fail(ErrorKind::ZeroInput, "squarefree part of zero");
  if (f.ring() != CoeffRing::ConstantsC)
    fail(ErrorKind::Internal,
         "squarefree_part expects constant coefficients");
  const std::uint32_t npar = f.field()->nparams();
  MPoly fm = to_mpoly(f);
  // gcd of f with all spectral partials: each repeated factor survives to
  // multiplicity e-1, parameter-only factors (units of C) to multiplicity e.
  MPoly g = fm;
  for (std::uint32_t v = npar; v < npar + 1 + f.nmu(); ++v) {
    MPoly d = fm.derivative(v);
    if (d.is_zero()) continue;
    g = mpoly_gcd(g, d);
  }
  auto q = MPoly::divide_exact(fm, g);
  if (!q) fail(ErrorKind::Internal, "squarefree division fault");
  return from_mpoly(*q, f.ctx());
}

}  // namespace spectral
