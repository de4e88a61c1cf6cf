#include <doctest.h>

#include "core/errors.hpp"
#include "core/mpoly.hpp"
#include "core/ratfunc.hpp"
#include "test_util.hpp"

using namespace spectral;
using spectral::testing::Rng;

namespace {
const std::vector<std::string> xy = {"x", "y"};

MPoly var(std::uint32_t v) { return MPoly::variable(2, v); }
MPoly cst(const mpq_class& c) { return MPoly::constant(2, c); }
}  // namespace

TEST_CASE("mpoly basics") {
  MPoly x = var(0), y = var(1);
  MPoly p = x * x - y + cst(3);
  CHECK(p.to_string(xy) == "x^2 - y + 3");
  CHECK(p.degree_in(0) == 2);
  CHECK(p.degree_in(1) == 1);
  CHECK(p.total_degree() == 2);
  CHECK((p - p).is_zero());
  CHECK(p.derivative(0) == x.mul_scalar(2));
  CHECK(p.derivative(1) == cst(-1));
  CHECK((x + y) * (x - y) == x * x - y * y);
  MPoly q = x.mul_scalar(mpq_class(1, 2));
  CHECK(q.to_string(xy) == "1/2*x");
}

TEST_CASE("mpoly string edge cases") {
  MPoly x = var(0), y = var(1);
  CHECK(MPoly(2).to_string(xy) == "0");
  CHECK(cst(1).to_string(xy) == "1");
  CHECK(cst(-1).to_string(xy) == "-1");
  CHECK((-x).to_string(xy) == "-x");
  CHECK((y - x).to_string(xy) == "-x + y");
  CHECK((x * y.mul_scalar(-1) + cst(mpq_class(2, 3))).to_string(xy) ==
        "-x*y + 2/3");
}

TEST_CASE("divide_exact") {
  MPoly x = var(0), y = var(1);
  MPoly a = (x + y) * (x - y);
  auto q = MPoly::divide_exact(a, x + y);
  REQUIRE(q.has_value());
  CHECK(*q == x - y);
  CHECK(!MPoly::divide_exact(a, x + cst(1)).has_value());
  CHECK(!MPoly::divide_exact(x, x * x).has_value());
  auto z = MPoly::divide_exact(MPoly(2), x);
  REQUIRE(z.has_value());
  CHECK(z->is_zero());
}

TEST_CASE("content extraction") {
  MPoly x = var(0);
  MPoly p = x.mul_scalar(mpq_class(4, 3)) - MPoly::constant(2, 2);
  mpq_class c = p.extract_content();
  CHECK(c == mpq_class(2, 3));
  CHECK(p == x.mul_scalar(2) - cst(3));
}

TEST_CASE("gcd of univariate polynomials uses the modular path") {
  MPoly x = var(0);
  MPoly a = (x - cst(1)).pow(3) * (x + cst(2)).pow(2) * (x.pow(2) + cst(1));
  MPoly b = (x - cst(1)) * (x + cst(2)).pow(4) * (x + cst(5));
  MPoly g = mpoly_gcd(a, b);
  CHECK(g == (x - cst(1)) * (x + cst(2)).pow(2));
  CHECK(mpoly_gcd(x + cst(1), x + cst(2)) == cst(1));
  // contents are discarded
  CHECK(mpoly_gcd(x.mul_scalar(6), x.mul_scalar(4)) == x);
}

TEST_CASE("gcd multivariate") {
  MPoly x = var(0), y = var(1);
  MPoly g0 = x * y + cst(1);
  MPoly a = g0 * (x + y);
  MPoly b = g0 * (x - y);
  CHECK(mpoly_gcd(a, b) == g0);
  CHECK(mpoly_gcd(a, MPoly(2)) == a);
  CHECK(mpoly_gcd(MPoly(2), MPoly(2)).is_zero());
  // sign normalization: leading coefficient positive
  CHECK(mpoly_gcd(-a, -b) == g0);
}

TEST_CASE("gcd randomized: divides both and cofactors are coprime") {
  Rng rng(7001);
  for (int iter = 0; iter < 60; ++iter) {
    MPoly a = spectral::testing::random_mpoly(rng, 2, 3, 2);
    MPoly b = spectral::testing::random_mpoly(rng, 2, 3, 2);
    MPoly m = spectral::testing::random_mpoly(rng, 2, 2, 1);
    MPoly am = a * m, bm = b * m;
    MPoly g = mpoly_gcd(am, bm);
    if (am.is_zero() && bm.is_zero()) {
      CHECK(g.is_zero());
      continue;
    }
    auto qa = MPoly::divide_exact(am, g);
    auto qb = MPoly::divide_exact(bm, g);
    REQUIRE(qa.has_value());
    REQUIRE(qb.has_value());
    if (!m.is_zero()) {
      // m divides the gcd
      CHECK(MPoly::divide_exact(g, mpoly_gcd(m, m)).has_value());
    }
    if (!qa->is_zero() && !qb->is_zero()) {
      CHECK(mpoly_gcd(*qa, *qb).is_constant());
    }
  }
}

TEST_CASE("ratfunc canonical form") {
  MPoly x = var(0), y = var(1);
  RatFunc f = RatFunc::make(x * x - y * y, x - y);
  CHECK(f == RatFunc::poly(x + y));
  RatFunc half = RatFunc::make(cst(2), cst(4));
  CHECK(half.num() == cst(1));
  CHECK(half.den() == cst(2));
  // denominator sign is normalized
  RatFunc g = RatFunc::make(x, -y);
  CHECK(g.den() == y);
  CHECK(g.num() == -x);
  CHECK_THROWS_AS(RatFunc::make(x, MPoly(2)), SpectralError);
}

TEST_CASE("ratfunc arithmetic") {
  MPoly x = var(0), y = var(1);
  RatFunc fx = RatFunc::poly(x), fy = RatFunc::poly(y);
  RatFunc r = fx / fy + fy / fx;
  CHECK(r == RatFunc::make(x * x + y * y, x * y));
  CHECK(r - r == RatFunc(2));
  CHECK((fx / fy) * (fy / fx) == RatFunc::poly(cst(1)));
  CHECK(fx.invert() == RatFunc::make(cst(1), x));
  CHECK_THROWS_AS(RatFunc(2).invert(), SpectralError);
  CHECK(r.to_string(xy) == "(x^2 + y^2)/(x*y)");
}

TEST_CASE("ratfunc randomized field laws") {
  Rng rng(7002);
  for (int iter = 0; iter < 120; ++iter) {
    RatFunc a = spectral::testing::random_ratfunc(rng, 2);
    RatFunc b = spectral::testing::random_ratfunc(rng, 2);
    RatFunc c = spectral::testing::random_ratfunc(rng, 2);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK(a - a == RatFunc(2));
    if (!b.is_zero()) CHECK((a / b) * b == a);
  }
}

TEST_CASE("ratfunc derivative quotient rule") {
  Rng rng(7003);
  for (int iter = 0; iter < 60; ++iter) {
    RatFunc a = spectral::testing::random_ratfunc(rng, 2);
    RatFunc b = spectral::testing::random_ratfunc(rng, 2);
    CHECK((a * b).derivative(0) ==
          a.derivative(0) * b + a * b.derivative(0));
    CHECK((a + b).derivative(0) == a.derivative(0) + b.derivative(0));
  }
}
