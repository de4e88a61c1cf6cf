#include "core/catalog.hpp"

#include <map>

#include "core/errors.hpp"

namespace spectral {
namespace {

FieldElement q(const DiffField::Ptr& f, long num, long den = 1) {
  return FieldElement::rational(f, mpq_class(num, den));
}

// L = d^3 + 6 sech(x)^2 d and its centralizer generators of orders 4 and
// 5, written over Q(E) with E = e^x:
//   6 sech(x)^2        = 24 E^2 / (E^2+1)^2
//   sinh(x) sech(x)^3  =  4 E^2 (E^2-1) / (E^2+1)^3
//   sech(x)^4          = 16 E^4 / (E^2+1)^4
CatalogExample make_exponential() {
  DiffField::Ptr f = DiffField::exponential();
  const MPoly E = MPoly::variable(1, 0);
  const MPoly E2 = E * E;
  const MPoly den2 = (E2 + MPoly::constant(1, 1)).pow(2);
  const MPoly den3 = (E2 + MPoly::constant(1, 1)).pow(3);
  const MPoly den4 = (E2 + MPoly::constant(1, 1)).pow(4);
  auto frac = [&](const MPoly& n, const MPoly& d) {
    return FieldElement::from_fraction(f, n, d);
  };
  const FieldElement z = FieldElement::zero(f);
  const FieldElement one = FieldElement::one(f);

  const FieldElement sech2x6 = frac(MPoly::constant(1, 24) * E2, den2);
  DiffOperator L = DiffOperator::from_coeffs(f, {z, sech2x6, z, one});

  const FieldElement g1_2 =
      frac(MPoly::constant(1, 32) * E2, den2) - q(f, 4, 3);
  const FieldElement g1_1 =
      -frac(MPoly::constant(1, 32) * E2 * (E2 - MPoly::constant(1, 1)), den3);
  DiffOperator G1 = DiffOperator::from_coeffs(f, {z, g1_1, g1_2, z, one});

  const FieldElement g2_3 = frac(MPoly::constant(1, 40) * E2, den2);
  const FieldElement g2_2 =
      -frac(MPoly::constant(1, 80) * E2 * (E2 - MPoly::constant(1, 1)), den3);
  const FieldElement g2_1 =
      q(f, 16, 9) + frac(MPoly::constant(1, 320) * E2,
                         MPoly::constant(1, 3) * den2) -
      frac(MPoly::constant(1, 320) * E2 * E2, den4);
  DiffOperator G2 = DiffOperator::from_coeffs(f, {z, g2_1, g2_2, g2_3, z, one});

  return CatalogExample{
      "exponential",
      f,
      L,
      {DiffOperator::one(f), G1, G2},
      "# Rank-1 hyperbolic example: L = D^3 + 6 sech(x)^2 D\n"
      "field exponential\n"
      "L = D^3 + 6*sech(x)^2*D\n"
      "G1 = D^4 + (8*sech(x)^2 - 4/3)*D^2 - 8*sinh(x)*sech(x)^3*D\n"
      "G2 = D^5 + 10*sech(x)^2*D^3 - 20*sinh(x)*sech(x)^3*D^2"
      " + (16/9 + 80/3*sech(x)^2 - 20*sech(x)^4)*D\n"
      "basis L: G1, G2\n"};
}

// L = d^4 - 12 wp d^2 + 1 over Q(g2, g3)(wp)[wpd] and its centralizer
// generators of orders 5, 6, 7.
CatalogExample make_elliptic(bool sub) {
  DiffField::Ptr f = DiffField::elliptic({"g2", {}}, {"g3", {}});
  const FieldElement z = FieldElement::zero(f);
  const FieldElement one = FieldElement::one(f);
  const FieldElement g2 = FieldElement::parameter(f, 0);
  const FieldElement g3 = FieldElement::parameter(f, 1);
  const FieldElement wp = FieldElement::generator(f);
  const FieldElement wpd = FieldElement::wpd(f);

  DiffOperator L =
      DiffOperator::from_coeffs(f, {one, z, q(f, -12) * wp, z, one});
  DiffOperator G1 = DiffOperator::from_coeffs(
      f, {z, q(f, -3) * g2, q(f, -15, 2) * wpd, q(f, -15) * wp, z, one});
  DiffOperator G2 = DiffOperator::from_coeffs(
      f, {z, z, q(f, -36) * wp * wp - q(f, 9) * g2, q(f, -18) * wpd,
          q(f, -18) * wp, z, one});
  DiffOperator G3 = DiffOperator::from_coeffs(
      f, {z, q(f, -27) * g3, q(f, -63) * wp * wpd,
          q(f, -126) * wp * wp - q(f, 21) * g2, q(f, -63, 2) * wpd,
          q(f, -21) * wp, z, one});

  const std::string header =
      "# Rank-1 elliptic example: L = D^4 - 12 wp D^2 + 1\n"
      "field elliptic(g2, g3)\n"
      "L = D^4 - 12*wp*D^2 + 1\n";
  if (sub)
    return CatalogExample{
        "elliptic-sub",
        f,
        L,
        {DiffOperator::one(f), G2},
        "# Rank-2 subalgebra of the elliptic example: basis {1, G2}\n"
        "field elliptic(g2, g3)\n"
        "L = D^4 - 12*wp*D^2 + 1\n"
        "G2 = D^6 - 18*wp*D^4 - 18*wpd*D^3 - (36*wp^2 + 9*g2)*D^2\n"
        "basis L: G2\n"};
  return CatalogExample{
      "elliptic",
      f,
      L,
      {DiffOperator::one(f), G1, G2, G3},
      header +
          "G1 = D^5 - 15*wp*D^3 - 15/2*wpd*D^2 - 3*g2*D\n"
          "G2 = D^6 - 18*wp*D^4 - 18*wpd*D^3 - (36*wp^2 + 9*g2)*D^2\n"
          "G3 = D^7 - 21*wp*D^5 - 63/2*wpd*D^4 - (126*wp^2 + 21*g2)*D^3"
          " - 63*wp*wpd*D^2 - 27*g3*D\n"
          "basis L: G1, G2, G3\n"};
}

const std::map<std::string, CatalogExample>& catalog() {
  static const std::map<std::string, CatalogExample> c = [] {
    std::map<std::string, CatalogExample> m;
    m.emplace("exponential", make_exponential());
    m.emplace("elliptic", make_elliptic(false));
    m.emplace("elliptic-sub", make_elliptic(true));
    return m;
  }();
  return c;
}

}  // namespace

const std::vector<std::string>& catalog_names() {
  static const std::vector<std::string> names = {"exponential", "elliptic",
                                                 "elliptic-sub"};
  return names;
}

const CatalogExample& catalog_example(const std::string& name) {
  const auto& c = catalog();
  auto it = c.find(name);
  if (it == c.end())
    fail(ErrorKind::UnknownSymbol, "no catalog example named '" + name + "'");
  return it->second;
}

}  // namespace spectral
