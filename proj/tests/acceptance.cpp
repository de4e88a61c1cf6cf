// Acceptance gate: twelve numbered checks, one pass/fail line each,
// nonzero exit when any fail.  Expected values are constructed from the
// published closed forms via the expression parser, independently of the
// renderer under test.

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "core/bccore.hpp"
#include "core/catalog.hpp"
#include "core/dres.hpp"
#include "core/errors.hpp"
#include "core/session.hpp"
#include "test_util.hpp"

using namespace spectral;
using testing::Rng;
namespace fs = std::filesystem;
using clk = std::chrono::steady_clock;

namespace {

double seconds_since(clk::time_point t0) {
  return std::chrono::duration<double>(clk::now() - t0).count();
}

struct Gate {
  int failures = 0;

  void report(int id, const std::string& what, bool pass,
              const std::string& detail) {
    std::printf("%s  criterion %2d: %s (%s)\n", pass ? "PASS" : "FAIL", id,
                what.c_str(), detail.c_str());
    std::fflush(stdout);
    if (!pass) ++failures;
  }
};

GoodearlBasis example_basis(const std::string& name) {
  const CatalogExample& ex = catalog_example(name);
  return GoodearlBasis::make(ex.L, ex.gens);
}

SpectralPolynomial expect(const std::string& text, const SpecContext& ctx) {
  return parse_spectral_expr(text, ctx);
}

// The three exponential relations.  R_{2,2} carries the constant-term
// coefficient 64/27 on mu1: that form (and not a lambda multiple) is the
// one annihilated by phi_L and the one the S-pair criterion accepts, as
// checks 4 and 5 confirm independently.
std::vector<SpectralPolynomial> expected_exponential(const SpecContext& c) {
  return {
      expect("mu1^2 - l*mu2 + 8/3*l^2", c),
      expect("mu1*mu2 + 4/3*l*mu1 + (64/27*l - l^3)", c),
      expect("mu2^2 + (64/27 - l^2)*mu1 - 4/3*l*mu2 - 32/9*l^2", c),
  };
}

std::vector<SpectralPolynomial> expected_elliptic(const SpecContext& c) {
  return {
      expect("mu1^2 + (3*g2/4 + 1 - l)*mu2 + 27*g3/4*(l - 1)", c),
      expect("mu1*mu2 + (1 - l)*mu3", c),
      expect("mu1*mu3 + 27*g3/4*mu2 + ((9*g2^2 + 15*g2 + 4)/4"
             " - (9*g2^2 + 30*g2 + 12)/4*l + (15*g2 + 12)/4*l^2 - l^3)",
             c),
      expect("mu2^2 + (1 + 3*g2) - (6*g2 + 3)*l + (3*g2 + 3)*l^2 - l^3", c),
      expect("mu2*mu3 - (l^2 - (3*g2 + 2)*l + (3*g2 + 1))*mu1", c),
      expect("mu3^2 - (l^2 - (15*g2 + 8)/4*l + (9*g2^2 + 15*g2 + 4)/4)*mu2"
             " + (27*g3/4*l^2 - (81*g2 + 54)*g3/4*l + (81*g2 + 27)*g3/4)",
             c),
  };
}

bool ideal_matches(const BCBasis& bc,
                   const std::vector<SpectralPolynomial>& want) {
  if (bc.relations.size() != want.size()) return false;
  for (std::size_t k = 0; k < want.size(); ++k)
    if (bc.relations[k].poly != want[k]) return false;
  return true;
}

// f == c * g for some nonzero constant c, certified by cross-multiplying
// the leading coefficients.
bool proportional(const SpectralPolynomial& f, const SpectralPolynomial& g,
                  const WeightedOrder& ord) {
  if (f.is_zero() || g.is_zero()) return false;
  return f.mul_coeff(g.leading(ord).second) ==
         g.mul_coeff(f.leading(ord).second);
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
                         ? testing::random_element(rng, ctx.field)
                         : FieldElement::rational(
                               ctx.field, testing::random_rational(rng));
    p += SpectralPolynomial::monomial(ctx, m, c);
  }
  return p;
}

SpectralPolynomial random_nonzero_mu_linear(Rng& rng, const SpecContext& ctx,
                                            int max_deg = 3) {
  for (;;) {
    SpectralPolynomial p = random_mu_linear(rng, ctx, max_deg);
    if (!p.is_zero()) return p;
  }
}

// ---- criteria ----

void crit_exponential_ideal(Gate& gate, const BCBasis& bc, double dt) {
  bool ok = ideal_matches(bc, expected_exponential(bc.context()));
  char buf[64];
  std::snprintf(buf, sizeof buf, "3 relations, %.2f s < 5 s", dt);
  gate.report(1, "exponential ideal reproduced exactly", ok && dt < 5.0, buf);
}

void crit_elliptic_ideal(Gate& gate, const BCBasis& bc, double dt) {
  bool ok = ideal_matches(bc, expected_elliptic(bc.context()));
  char buf[64];
  std::snprintf(buf, sizeof buf, "6 relations, symbolic g2 g3, %.2f s < 30 s",
                dt);
  gate.report(2, "elliptic ideal reproduced exactly", ok && dt < 30.0, buf);
}

void crit_module_coordinates(Gate& gate, const GoodearlBasis& b,
                             const BCBasis& bc) {
  const SpecContext c = bc.context();
  ModuleCoordinates mc = reduce_as_module(b.gens[1] * b.gens[2], b);
  bool ok = mc.coords.size() == 3 &&
            mc.coords[0] == expect("l^3 - 64/27*l", c) &&
            mc.coords[1] == expect("-4/3*l", c) &&
            mc.coords[2] == SpectralPolynomial::zero(c);
  gate.report(3, "G1*G2 module coordinates are (l^3 - 64/27*l, -4/3*l, 0)",
              ok, "exact");
}

void crit_groebner(Gate& gate, const BCBasis& be, const BCBasis& bl) {
  auto t0 = clk::now();
  bool oke = is_groebner(be.polys(), be.order);
  double de = seconds_since(t0);
  t0 = clk::now();
  bool okl = is_groebner(bl.polys(), bl.order);
  double dl = seconds_since(t0);
  char buf[80];
  std::snprintf(buf, sizeof buf, "S-pairs reduce to 0; %.2f s and %.2f s < 10 s",
                de, dl);
  gate.report(4, "both bases are Groebner bases",
              oke && okl && de < 10.0 && dl < 10.0, buf);
}

void crit_vanishing(Gate& gate, const GoodearlBasis& be, const BCBasis& bce,
                    const GoodearlBasis& bl, const BCBasis& bcl) {
  int zero = 0, total = 0;
  PhiEvaluator pe(be);
  for (const auto& r : bce.relations) {
    ++total;
    if (pe(r.poly).is_zero()) ++zero;
  }
  PhiEvaluator pl(bl);
  for (const auto& r : bcl.relations) {
    ++total;
    if (pl(r.poly).is_zero()) ++zero;
  }
  char buf[48];
  std::snprintf(buf, sizeof buf, "%d of %d relations", zero, total);
  gate.report(5, "phi_L annihilates every relation", zero == total && total == 9,
              buf);
}

void crit_subalgebra(Gate& gate) {
  const CatalogExample& ex = catalog_example("elliptic-sub");
  GoodearlBasis b = GoodearlBasis::make(ex.L, ex.gens);
  BCBasis bc = bc_ideal(b);
  const SpecContext c = bc.context();
  SpectralPolynomial r22 = expect(
      "mu1^2 + (1 + 3*g2) - (6*g2 + 3)*l + (3*g2 + 3)*l^2 - l^3", c);
  bool ideal_ok = bc.relations.size() == 1 && bc.relations[0].poly == r22;

  SpecContext full{c.field, 1, CoeffRing::FullK};
  SpectralOperator P = SpectralOperator::lift(b.L, full) -
                       SpectralPolynomial::lambda_pow(full, 1);
  SpectralOperator Q = SpectralOperator::lift(b.gens[1], full) -
                       SpectralPolynomial::mu_var(full, 0);
  SpectralPolynomial res = diff_resultant(P, Q);
  bool square_ok = res == r22 * r22;
  bool prop_ok = proportional(squarefree_part(res), r22, bc.order);
  gate.report(6, "sub-basis {1, G2} gives {R22}; resultant matches R22",
              ideal_ok && square_ok && prop_ok,
              "ideal exact; determinant is R22^2, squarefree part "
              "proportional to R22");
}

void crit_resultant_membership(Gate& gate, const GoodearlBasis& b,
                               const BCBasis& bc) {
  auto t0 = clk::now();
  SpecContext full = bc.context();
  full.ring = CoeffRing::FullK;
  int members = 0;
  for (std::size_t i = 1; i <= 2; ++i) {
    SpectralOperator P = SpectralOperator::lift(b.L, full) -
                         SpectralPolynomial::lambda_pow(full, 1);
    SpectralOperator Q =
        SpectralOperator::lift(b.gens[i], full) -
        SpectralPolynomial::mu_var(full, static_cast<std::uint32_t>(i - 1));
    SpectralPolynomial sf = squarefree_part(diff_resultant(P, Q));
    if (bc_membership(sf, bc).member) ++members;
  }
  double dt = seconds_since(t0);
  char buf[64];
  std::snprintf(buf, sizeof buf, "i = 1, 2; %.2f s < 20 s", dt);
  gate.report(7, "squarefree resultants lie in the exponential ideal",
              members == 2 && dt < 20.0, buf);
}

void crit_primality(Gate& gate, const BCBasis& bc) {
  SpecContext kctx = bc.context();
  kctx.ring = CoeffRing::FullK;
  Rng rng(40961);
  int bad = 0;
  for (int it = 0; it < 200; ++it) {
    SpectralPolynomial f1 = random_nonzero_mu_linear(rng, kctx);
    SpectralPolynomial f2 = random_nonzero_mu_linear(rng, kctx);
    if (quotient_product_normal_form(f1, f2, bc).is_zero()) ++bad;
  }
  char buf[48];
  std::snprintf(buf, sizeof buf, "%d zero products in 200 pairs", bad);
  gate.report(8, "random quotient products over K are nonzero", bad == 0, buf);
}

void crit_mu_linear_normal_forms(Gate& gate, const GoodearlBasis& b,
                                 const BCBasis& bc) {
  const SpecContext& c = bc.context();
  PhiEvaluator phi(b);
  Rng rng(52429);
  int bad = 0;
  for (int it = 0; it < 200; ++it) {
    SpectralPolynomial q = random_nonzero_mu_linear(rng, c);
    MembershipResult res = bc_membership(q, bc);
    long want = -1;
    for (const auto& [m, coeff] : q.terms()) {
      long w = b.n * m.lambda;
      for (std::uint32_t s = 0; s < c.nmu; ++s)
        if (m.mu[s]) w += b.orders[s + 1];
      if (w > want) want = w;
    }
    DiffOperator img = phi(q);
    if (res.member || res.normal_form != q || img.is_zero() ||
        img.order() != want)
      ++bad;
  }
  char buf[56];
  std::snprintf(buf, sizeof buf, "%d failures in 200 polynomials", bad);
  gate.report(9, "nonzero mu-linear polynomials reduce to themselves", bad == 0,
              buf);
}

// Independent census of mu-linear monomials of weight W: a pure lambda
// power when n divides W, plus one candidate per mu slot with matching
// residue.  Lemma 6.2 says the census never exceeds one.
int weight_census(long W, const WeightedOrder& ord) {
  int count = (W % ord.n() == 0) ? 1 : 0;
  for (std::uint32_t s = 0; s < ord.nmu(); ++s) {
    long w = ord.weight(s);
    if (W >= w && (W - w) % ord.n() == 0) ++count;
  }
  return count;
}

void crit_weights(Gate& gate, const GoodearlBasis& be,
                  const GoodearlBasis& bl) {
  // Census and weight consistency over the whole range; the operator
  // image is evaluated up to a fixed cap per system, past which the exact
  // coefficients of phi_L images (operators of order W) grow out of all
  // proportion to what they certify.  Order additivity of operator
  // products carries the property beyond the cap.
  struct Sys {
    const GoodearlBasis* b;
    long cap;
  };
  const Sys systems[2] = {{&be, 45}, {&bl, 56}};
  bool ok = true;
  for (const Sys& sys : systems) {
    WeightedOrder ord = basis_order(*sys.b);
    SpecContext ctx{sys.b->L.field(), ord.nmu(), CoeffRing::ConstantsC};
    PhiEvaluator phi(*sys.b);
    for (long W = 0; W <= 200 && ok; ++W) {
      auto m = monomial_of_weight(W, ord);
      const int census = weight_census(W, ord);
      if (census > 1 || m.has_value() != (census == 1)) ok = false;
      if (!m) continue;
      if (mono_weight(*m, ord) != W || m->deg_mu() > 1) ok = false;
      if (W > sys.cap) continue;
      DiffOperator img = phi(SpectralPolynomial::monomial(
          ctx, *m, FieldElement::rational(ctx.field, 1)));
      if (img.order() != W) ok = false;
    }
  }
  gate.report(10, "weight-W monomials are unique with order-W images", ok,
              "census W in [0, 200]; operator orders confirmed to W = 45 "
              "and 56");
}

void crit_structure(Gate& gate, const GoodearlBasis& be,
                    const GoodearlBasis& bl) {
  GoodearlBasis bs = example_basis("elliptic-sub");
  bool ok = be.t == 3 && be.rank == 1 && bl.t == 4 && bl.rank == 1 &&
            bs.t == 2 && bs.rank == 2;
  char buf[64];
  std::snprintf(buf, sizeof buf, "(t, rank) = (%ld, %ld), (%ld, %ld), (%ld, %ld)",
                be.t, be.rank, bl.t, bl.rank, bs.t, bs.rank);
  gate.report(11, "Goodearl structure of the three examples", ok, buf);
}

std::string capture(const std::string& cmd, int* status) {
  const fs::path out =
      fs::temp_directory_path() / ("spk_acc_" + std::to_string(::getpid()));
  int rc = std::system((cmd + " > '" + out.string() + "'").c_str());
  *status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  std::ifstream in(out, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  fs::remove(out);
  return buf.str();
}

void crit_cli_golden(Gate& gate) {
  const char* cli = std::getenv("SPECTRAL_KERNEL_CLI");
  const char* dir = std::getenv("SPECTRAL_GOLDEN_DIR");
  if (!cli || !dir) {
    gate.report(12, "CLI json output matches the committed golden file", false,
                "SPECTRAL_KERNEL_CLI / SPECTRAL_GOLDEN_DIR not set");
    return;
  }
  int status = 0;
  std::string got = capture("'" + std::string(cli) + "' example exponential | '" +
                                std::string(cli) + "' bc-ideal --format json",
                            &status);
  std::ifstream in(fs::path(dir) / "bc_ideal_exponential.json",
                   std::ios::binary);
  std::ostringstream want;
  want << in.rdbuf();
  bool ok = status == 0 && in.good() && !want.str().empty() &&
            got == want.str();
  gate.report(12, "CLI json output matches the committed golden file", ok,
              ok ? "byte identical" : "mismatch or subprocess failure");
}

}  // namespace

int main() {
  Gate gate;
  try {
    GoodearlBasis be = example_basis("exponential");
    auto t0 = clk::now();
    BCBasis bce = bc_ideal(be);
    double dte = seconds_since(t0);

    GoodearlBasis bl = example_basis("elliptic");
    t0 = clk::now();
    BCBasis bcl = bc_ideal(bl);
    double dtl = seconds_since(t0);

    crit_exponential_ideal(gate, bce, dte);
    crit_elliptic_ideal(gate, bcl, dtl);
    crit_module_coordinates(gate, be, bce);
    crit_groebner(gate, bce, bcl);
    crit_vanishing(gate, be, bce, bl, bcl);
    crit_subalgebra(gate);
    crit_resultant_membership(gate, be, bce);
    crit_primality(gate, bce);
    crit_mu_linear_normal_forms(gate, be, bce);
    crit_weights(gate, be, bl);
    crit_structure(gate, be, bl);
    crit_cli_golden(gate);
  } catch (const SpectralError& e) {
    std::printf("FAIL  unexpected kernel error: %s\n", e.what());
    return 1;
  }
  if (gate.failures == 0) {
    std::printf("all 12 criteria passed\n");
    return 0;
  }
  std::printf("%d criteria failed\n", gate.failures);
  return 1;
}
