#pragma once
#include <string>
#include <utility>
#include <vector>

#include "core/odo.hpp"
#include "core/specpoly.hpp"

namespace spectral {

// A parsed operator-definition session: one field declaration, named
// operator bindings, and a designated Goodearl basis.  Parsing validates
// that the basis names resolve and that L is in normal form; the deeper
// structure checks (commutation, order classes) run when a command builds
// the GoodearlBasis.
struct Session {
  DiffField::Ptr field;
  std::vector<std::string> field_args;  // canonical declaration arguments
  std::vector<std::pair<std::string, DiffOperator>> bindings;
  std::string L_name;
  std::vector<std::string> basis_names;  // excludes the implicit G0 = 1

  const DiffOperator* find(const std::string& name) const;
  const DiffOperator& L() const;
  // {1, G_1, ...} ready for GoodearlBasis::make.
  std::vector<DiffOperator> goodearl_gens() const;
};

// Grammar, one statement per line ('#' starts a comment):
//   field exponential
//   field elliptic(g2, g3)        names or exact rationals
//   field constants(c1, ..., ck)
//   NAME = expr                   operators over + - * / ^ ( ), D, the
//                                 field generators, parameters, integers,
//                                 and cosh(x)/sinh(x)/sech(x) sugar in the
//                                 exponential field
//   basis L: G1, G2, ...
// Products involving D compose left-to-right and are noncommutative;
// division and negative powers require scalar operands.
Session parse_session(const std::string& text);

// Canonical desugared rendering; parse(render(s)) reproduces s and render
// is a fixed point on its own output.
std::string render_session(const Session& s);

// An operator expression in the session's environment ("G1*G2 - 3*L").
DiffOperator parse_operator_expr(const std::string& text, const Session& s);

// A polynomial in l, mu1..mu{nmu} with constant coefficients; parameter
// names of the context's field are admitted as coefficients.
SpectralPolynomial parse_spectral_expr(const std::string& text,
                                       const SpecContext& ctx);

}  // namespace spectral
