#include "core/bccore.hpp"

#include <doctest.h>

#include <algorithm>
#include <functional>
#include <vector>

#include "core/catalog.hpp"
#include "core/errors.hpp"
#include "frozen_relations.hpp"
#include "test_util.hpp"

using namespace spectral;
using namespace spectral::testing;

namespace {

ErrorKind thrown_kind(const std::function<void()>& f) {
  try {
    f();
  } catch (const SpectralError& e) {
    return e.kind();
  }
  return ErrorKind::Internal;
}

GoodearlBasis example_basis(const char* name) {
  CatalogExample ex = catalog_example(name);
  return GoodearlBasis::make(ex.L, ex.gens);
}

// Polynomial in lambda alone from ascending rational coefficients.
SpectralPolynomial lampoly(const SpecContext& ctx,
                           std::vector<mpq_class> coeffs) {
  SpectralPolynomial p = SpectralPolynomial::zero(ctx);
  for (std::uint32_t k = 0; k < coeffs.size(); ++k) {
    SpectralMonomial m = SpectralMonomial::unit(ctx.nmu);
    m.lambda = k;
    p += SpectralPolynomial::monomial(
        ctx, m, FieldElement::rational(ctx.field, coeffs[k]));
  }
  return p;
}

SpectralPolynomial random_mu_linear(Rng& rng, const SpecContext& ctx,
                                    int max_deg = 3) {
  std::uniform_int_distribution<int> dlam(0, max_deg);
  std::uniform_int_distribution<int> dterms(1, 4);
  std::uniform_int_distribution<std::uint32_t> dslot(0, ctx.nmu);
  SpectralPolynomial p = SpectralPolynomial::zero(ctx);
  const int k = dterms(rng);
  for (int i = 0; i < k; ++i) {
    SpectralMonomial m = SpectralMonomial::unit(ctx.nmu);
    m.lambda = static_cast<std::uint32_t>(dlam(rng));
    std::uint32_t slot = dslot(rng);
    if (slot > 0) m.mu[slot - 1] = 1;
    FieldElement c = ctx.ring == CoeffRing::FullK
                         ? random_element(rng, ctx.field)
                         : FieldElement::rational(ctx.field,
                                                  random_rational(rng));
    p += SpectralPolynomial::monomial(ctx, m, c);
  }
  return p;
}

}  // namespace

TEST_CASE("phi_L basics") {
  GoodearlBasis b = example_basis("exponential");
  SpecContext ctx{b.L.field(), 2, CoeffRing::ConstantsC};
  CHECK(phi_L(SpectralPolynomial::lambda_pow(ctx, 1), b) == b.L);
  CHECK(phi_L(SpectralPolynomial::mu_var(ctx, 0), b) == b.gens[1]);
  CHECK(phi_L(SpectralPolynomial::mu_var(ctx, 0) *
                  SpectralPolynomial::mu_var(ctx, 1),
              b) == b.gens[1] * b.gens[2]);
  CHECK(phi_L(SpectralPolynomial::rational(ctx, mpq_class(7, 2)), b) ==
        DiffOperator::scalar(FieldElement::rational(b.L.field(),
                                                    mpq_class(7, 2))));
  CHECK(phi_L(SpectralPolynomial::zero(ctx), b).is_zero());
}

TEST_CASE("phi_L is a ring homomorphism") {
  GoodearlBasis b = example_basis("exponential");
  SpecContext ctx{b.L.field(), 2, CoeffRing::ConstantsC};
  PhiEvaluator phi(b);
  Rng rng(7100);
  for (int it = 0; it < 8; ++it) {
    SpectralPolynomial p = random_mu_linear(rng, ctx, 2);
    SpectralPolynomial q = random_mu_linear(rng, ctx, 2);
    CHECK(phi(p + q) == phi(p) + phi(q));
    CHECK(phi(p * q) == phi(p) * phi(q));
  }
}

TEST_CASE("frozen relations vanish under phi_L") {
  GoodearlBasis be = example_basis("exponential");
  SpecContext ce{be.L.field(), 2, CoeffRing::ConstantsC};
  PhiEvaluator pe(be);
  for (const auto& r : frozen_exponential_relations(ce))
    CHECK(pe(r).is_zero());

  GoodearlBasis bl = example_basis("elliptic");
  SpecContext cl{bl.L.field(), 3, CoeffRing::ConstantsC};
  PhiEvaluator pl(bl);
  for (const auto& r : frozen_elliptic_relations(cl)) CHECK(pl(r).is_zero());
}

TEST_CASE("reduce_as_module pinned examples") {
  GoodearlBasis b = example_basis("exponential");
  SpecContext ctx{b.L.field(), 2, CoeffRing::ConstantsC};

  ModuleCoordinates mc = reduce_as_module(b.gens[1] * b.gens[2], b);
  REQUIRE(mc.coords.size() == 3);
  CHECK(mc.coords[0] == lampoly(ctx, {0, mpq_class(-64, 27), 0, 1}));
  CHECK(mc.coords[1] == lampoly(ctx, {0, mpq_class(-4, 3)}));
  CHECK(mc.coords[2].is_zero());

  ModuleCoordinates sq = reduce_as_module(b.L * b.L, b);
  CHECK(sq.coords[0] == lampoly(ctx, {0, 0, 1}));
  CHECK(sq.coords[1].is_zero());
  CHECK(sq.coords[2].is_zero());

  auto c = DiffOperator::scalar(
      FieldElement::rational(b.L.field(), mpq_class(-5, 3)));
  ModuleCoordinates cc = reduce_as_module(c, b);
  CHECK(cc.coords[0] == lampoly(ctx, {mpq_class(-5, 3)}));

  ModuleCoordinates z = reduce_as_module(DiffOperator::zero(b.L.field()), b);
  for (const auto& p : z.coords) CHECK(p.is_zero());
}

TEST_CASE("reduce_as_module rejects operators outside the span") {
  GoodearlBasis b = example_basis("exponential");
  auto F = b.L.field();
  // order 1 sits in the class of G1 (order 4): stuck below the generator
  CHECK(thrown_kind([&] { reduce_as_module(DiffOperator::dx(F), b); }) ==
        ErrorKind::NotInCentralizerSpan);
  // nonconstant leading coefficient
  CHECK(thrown_kind([&] {
          reduce_as_module(DiffOperator::scalar(FieldElement::generator(F)),
                           b);
        }) == ErrorKind::NotInCentralizerSpan);

  GoodearlBasis sub = example_basis("elliptic-sub");
  // order 5 lies in class 1, outside the order group {0, 2}
  auto Fe = sub.L.field();
  DiffOperator P = DiffOperator::dx(Fe).pow(5);
  CHECK(thrown_kind([&] { reduce_as_module(P, sub); }) ==
        ErrorKind::NotInCentralizerSpan);
}

TEST_CASE("reduce_as_module inverts phi_L on random span elements") {
  for (const char* name : {"exponential", "elliptic"}) {
    GoodearlBasis b = example_basis(name);
    SpecContext ctx{b.L.field(), static_cast<std::uint32_t>(b.t - 1),
                    CoeffRing::ConstantsC};
    PhiEvaluator phi(b);
    Rng rng(7300);
    for (int it = 0; it < 5; ++it) {
      std::vector<SpectralPolynomial> ps;
      SpectralPolynomial q = SpectralPolynomial::zero(ctx);
      for (long l = 0; l < b.t; ++l) {
        std::vector<mpq_class> cs;
        for (int d = 0; d <= 2; ++d) cs.push_back(random_rational(rng));
        ps.push_back(lampoly(ctx, cs));
        q += l == 0 ? ps.back()
                    : ps.back() * SpectralPolynomial::mu_var(
                                      ctx, static_cast<std::uint32_t>(l - 1));
      }
      ModuleCoordinates mc = reduce_as_module(phi(q), b);
      for (long l = 0; l < b.t; ++l) CHECK(mc.coords[l] == ps[l]);
    }
  }
}

TEST_CASE("bc_ideal reproduces the exponential relations") {
  GoodearlBasis b = example_basis("exponential");
  BCBasis bc = bc_ideal(b);
  auto frozen = frozen_exponential_relations(bc.context());
  REQUIRE(bc.relations.size() == 3);
  CHECK(bc.relations[0].i == 1);
  CHECK(bc.relations[0].j == 1);
  CHECK(bc.relations[1].i == 1);
  CHECK(bc.relations[1].j == 2);
  CHECK(bc.relations[2].i == 2);
  CHECK(bc.relations[2].j == 2);
  for (int k = 0; k < 3; ++k) CHECK(bc.relations[k].poly == frozen[k]);
  CHECK(is_groebner(bc.polys(), bc.order));
}

TEST_CASE("bc_ideal reproduces the elliptic relations") {
  GoodearlBasis b = example_basis("elliptic");
  BCBasis bc = bc_ideal(b);
  auto frozen = frozen_elliptic_relations(bc.context());
  REQUIRE(bc.relations.size() == 6);
  const long expect_ij[6][2] = {{1, 1}, {1, 2}, {1, 3}, {2, 2}, {2, 3}, {3, 3}};
  for (int k = 0; k < 6; ++k) {
    CHECK(bc.relations[k].i == expect_ij[k][0]);
    CHECK(bc.relations[k].j == expect_ij[k][1]);
    CHECK(bc.relations[k].poly == frozen[k]);
  }
}

TEST_CASE("bc_ideal on the elliptic sub-basis") {
  GoodearlBasis sub = example_basis("elliptic-sub");
  CHECK(sub.t == 2);
  CHECK(sub.rank == 2);
  BCBasis bc = bc_ideal(sub);
  REQUIRE(bc.relations.size() == 1);
  CHECK(bc.relations[0].i == 1);
  CHECK(bc.relations[0].j == 1);

  // R_{2,2} of the full basis, rewritten in the single mu slot of the
  // sub-basis: mu^2 + (1+3g2) - (6g2+3)l + (3g2+3)l^2 - l^3.
  SpecContext ctx = bc.context();
  auto F = ctx.field;
  auto g2c = SpectralPolynomial::constant(ctx, FieldElement::parameter(F, 0));
  auto Q = [&](long n, long d) {
    return SpectralPolynomial::rational(ctx, mpq_class(n, d));
  };
  auto L = [&](std::uint32_t k) {
    return SpectralPolynomial::lambda_pow(ctx, k);
  };
  auto mu = SpectralPolynomial::mu_var(ctx, 0);
  SpectralPolynomial expect = mu * mu + (Q(1, 1) + Q(3, 1) * g2c) -
                              (Q(6, 1) * g2c + Q(3, 1)) * L(1) +
                              (Q(3, 1) * g2c + Q(3, 1)) * L(2) - L(3);
  CHECK(bc.relations[0].poly == expect);
}

TEST_CASE("bc_ideal is invariant under permuting the generators") {
  CatalogExample ex = catalog_example("elliptic");
  std::vector<DiffOperator> shuffled = {ex.gens[0], ex.gens[3], ex.gens[1],
                                        ex.gens[2]};
  BCBasis a = bc_ideal(GoodearlBasis::make(ex.L, ex.gens));
  BCBasis b = bc_ideal(GoodearlBasis::make(ex.L, shuffled));
  REQUIRE(a.relations.size() == b.relations.size());
  for (std::size_t k = 0; k < a.relations.size(); ++k)
    CHECK(a.relations[k].poly == b.relations[k].poly);
}

TEST_CASE("bc_membership") {
  GoodearlBasis b = example_basis("exponential");
  BCBasis bc = bc_ideal(b);
  SpecContext ctx = bc.context();

  auto r = bc_membership(bc.relations[0].poly, bc);
  CHECK(r.member);
  CHECK(r.normal_form.is_zero());

  auto lam = SpectralPolynomial::lambda_pow(ctx, 1);
  auto nl = bc_membership(lam, bc);
  CHECK(!nl.member);
  CHECK(nl.normal_form == lam);

  // random combinations of the generators are members
  Rng rng(7500);
  for (int it = 0; it < 10; ++it) {
    SpectralPolynomial p = SpectralPolynomial::zero(ctx);
    for (const auto& rel : bc.relations) {
      SpectralPolynomial h = SpectralPolynomial::zero(ctx);
      std::uniform_int_distribution<int> dlam(0, 2);
      SpectralMonomial m = SpectralMonomial::unit(ctx.nmu);
      m.lambda = static_cast<std::uint32_t>(dlam(rng));
      m.mu[it % 2] = static_cast<std::uint32_t>(it % 2);
      h += SpectralPolynomial::monomial(
          ctx, m, FieldElement::rational(ctx.field, random_rational(rng)));
      p += h * rel.poly;
    }
    CHECK(bc_membership(p, bc).member);
  }

  // nonzero mu-linear polynomials are their own normal form
  for (int it = 0; it < 20; ++it) {
    SpectralPolynomial q = random_mu_linear(rng, ctx);
    auto res = bc_membership(q, bc);
    CHECK(res.member == q.is_zero());
    CHECK(res.normal_form == q);
  }
}

TEST_CASE("quotient products") {
  GoodearlBasis b = example_basis("exponential");
  BCBasis bc = bc_ideal(b);
  SpecContext cctx = bc.context();
  SpecContext kctx = cctx;
  kctx.ring = CoeffRing::FullK;
  auto E = FieldElement::generator(cctx.field);

  auto m1 = SpectralPolynomial::mu_var(cctx, 0);
  auto m2 = SpectralPolynomial::mu_var(cctx, 1);
  auto lam = SpectralPolynomial::lambda_pow(cctx, 1);
  auto Q = [&](long n, long d) {
    return SpectralPolynomial::rational(cctx, mpq_class(n, d));
  };

  // E mu1 * mu2 = -E ((4/3) l mu1 + (64/27) l - l^3)
  SpectralPolynomial f1 = m1.mul_coeff(E);
  SpectralPolynomial got = quotient_product_normal_form(f1, m2, bc);
  SpectralPolynomial expect =
      (Q(4, 3) * lam * m1 + Q(64, 27) * lam -
       SpectralPolynomial::lambda_pow(cctx, 3))
          .mul_coeff(-E);
  CHECK(got == expect);

  // no reduction applies
  CHECK(quotient_product_normal_form(lam, m1, bc) == lam * m1);
  // mu1^2 reduces through R11
  CHECK(quotient_product_normal_form(m1, m1, bc) ==
        lam * m2 - Q(8, 3) * lam * lam);
  // non-reduced input is rejected
  CHECK(thrown_kind([&] {
          quotient_product_normal_form(m1 * m1, m2, bc);
        }) == ErrorKind::InputNotReduced);

  // zero-divisor freeness on random pairs over K
  Rng rng(7700);
  int checked = 0;
  while (checked < 25) {
    SpectralPolynomial p = random_mu_linear(rng, kctx);
    SpectralPolynomial q = random_mu_linear(rng, kctx);
    if (p.is_zero() || q.is_zero()) continue;
    ++checked;
    CHECK(!quotient_product_normal_form(p, q, bc).is_zero());
  }
}

TEST_CASE("derivation closure of the ideal") {
  GoodearlBasis b = example_basis("exponential");
  BCBasis bc = bc_ideal(b);
  SpecContext kctx = bc.context();
  kctx.ring = CoeffRing::FullK;

  for (const auto& rel : bc.relations) CHECK(rel.poly.derive().is_zero());

  Rng rng(7900);
  for (int it = 0; it < 10; ++it) {
    SpectralPolynomial h = SpectralPolynomial::zero(kctx);
    for (const auto& rel : bc.relations)
      h += random_mu_linear(rng, kctx, 2) * rel.poly;
    CHECK(bc_membership(h, bc).member);
    CHECK(bc_membership(h.derive(), bc).member);
  }
}

TEST_CASE("phi_L order of mu-linear polynomials") {
  GoodearlBasis b = example_basis("exponential");
  SpecContext ctx{b.L.field(), 2, CoeffRing::ConstantsC};
  PhiEvaluator phi(b);
  Rng rng(8100);
  for (int it = 0; it < 30; ++it) {
    SpectralPolynomial q = random_mu_linear(rng, ctx);
    if (q.is_zero()) continue;
    long expect = -1;
    for (const auto& [m, c] : q.terms()) {
      long w = 3L * m.lambda;
      for (std::size_t s = 0; s < m.mu.size(); ++s)
        if (m.mu[s]) w += b.orders[s + 1];
      expect = std::max(expect, w);
    }
    DiffOperator P = phi(q);
    REQUIRE(!P.is_zero());
    CHECK(P.order() == expect);
  }
}

TEST_CASE("phi_L arity and field guards") {
  GoodearlBasis b = example_basis("exponential");
  SpecContext wrong{b.L.field(), 3, CoeffRing::ConstantsC};
  CHECK(thrown_kind([&] {
          phi_L(SpectralPolynomial::mu_var(wrong, 2), b);
        }) == ErrorKind::ArityMismatch);
  SpecContext other{DiffField::elliptic({"g2", {}}, {"g3", {}}), 2,
                    CoeffRing::ConstantsC};
  CHECK(thrown_kind([&] {
          phi_L(SpectralPolynomial::lambda_pow(other, 1), b);
        }) == ErrorKind::FieldMismatch);
}
