#include "core/commands.hpp"

#include <json.hpp>
#include <sstream>

#include "core/catalog.hpp"
#include "core/dres.hpp"
#include "core/errors.hpp"

namespace spectral {
namespace {

using ordered_json = nlohmann::ordered_json;

std::vector<std::pair<SpectralMonomial, FieldElement>> sorted_terms(
    const SpectralPolynomial& p, const WeightedOrder& ord) {
  std::vector<std::pair<SpectralMonomial, FieldElement>> terms(
      p.terms().begin(), p.terms().end());
  std::sort(terms.begin(), terms.end(), [&](const auto& x, const auto& y) {
    return mono_compare(y.first, x.first, ord) == std::strong_ordering::less;
  });
  return terms;
}

std::string group_text(const std::vector<long>& group) {
  std::string out = "{";
  for (std::size_t i = 0; i < group.size(); ++i)
    out += (i ? ", " : "") + std::to_string(group[i]);
  return out + "}";
}

// ---------------------------------------------------------------------------
// JSON

ordered_json field_json(const Session& s) {
  ordered_json f;
  switch (s.field->variant()) {
    case FieldVariant::Exponential:
      f["kind"] = "exponential";
      break;
    case FieldVariant::Elliptic:
      f["kind"] = "elliptic";
      break;
    case FieldVariant::Constants:
      f["kind"] = "constants";
      break;
  }
  f["parameters"] = s.field->params();
  if (s.field->variant() == FieldVariant::Elliptic) {
    f["g2"] = s.field_args[0];
    f["g3"] = s.field_args[1];
  }
  return f;
}

ordered_json terms_json(const SpectralPolynomial& p, const WeightedOrder& ord) {
  ordered_json arr = ordered_json::array();
  for (const auto& [m, c] : sorted_terms(p, ord)) {
    ordered_json t;
    t["lambda"] = m.lambda;
    t["mu"] = m.mu;
    t["coeff"] = c.to_string();
    arr.push_back(std::move(t));
  }
  return arr;
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

// ---------------------------------------------------------------------------
// LaTeX

std::string latex_name(const std::string& name) {
  std::size_t split = name.size();
  while (split > 0 && std::isdigit(static_cast<unsigned char>(name[split - 1])))
    --split;
  if (split == 0 || split == name.size()) return name;
  return name.substr(0, split) + "_{" + name.substr(split) + "}";
}

std::vector<std::string> latex_var_names(const DiffField::Ptr& f) {
  std::vector<std::string> names;
  for (const auto& p : f->params()) names.push_back(latex_name(p));
  if (f->has_generator())
    names.push_back(f->variant() == FieldVariant::Exponential ? "e^{x}"
                                                              : "\\wp");
  return names;
}

bool grlex_below(const Expvec& a, const Expvec& b) {
  std::uint32_t ta = 0, tb = 0;
  for (auto e : a) ta += e;
  for (auto e : b) tb += e;
  if (ta != tb) return ta < tb;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return a[i] < b[i];
  return false;
}

std::string latex_mpoly(const MPoly& p, const std::vector<std::string>& names) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  // Same grlex-descending walk as the plain-text renderer.
  std::vector<std::pair<Expvec, mpq_class>> terms(p.terms().begin(),
                                                  p.terms().end());
  std::sort(terms.begin(), terms.end(), [](const auto& x, const auto& y) {
    return grlex_below(y.first, x.first);
  });
  for (const auto& [e, coeff] : terms) {
    mpq_class c = coeff;
    bool neg = c < 0;
    if (neg) c = -c;
    if (first)
      out << (neg ? "-" : "");
    else
      out << (neg ? " - " : " + ");
    first = false;
    std::vector<std::string> factors;
    std::uint32_t total = 0;
    for (std::uint32_t v = 0; v < p.nvars(); ++v) total += e[v];
    if (c != 1 || total == 0) {
      if (c.get_den() == 1)
        factors.push_back(c.get_num().get_str());
      else
        factors.push_back("\\frac{" + c.get_num().get_str() + "}{" +
                          c.get_den().get_str() + "}");
    }
    for (std::uint32_t v = 0; v < p.nvars(); ++v) {
      if (e[v] == 0) continue;
      std::string f = names[v];
      if (e[v] > 1) f += "^{" + std::to_string(e[v]) + "}";
      factors.push_back(f);
    }
    for (std::size_t i = 0; i < factors.size(); ++i)
      out << (i ? " " : "") << factors[i];
  }
  return out.str();
}

// Constant coefficients of bc relations live in C = Q(params); wpd parts
// never occur there.
std::string latex_coeff_magnitude(const FieldElement& c, bool* needs_parens) {
  const auto names = latex_var_names(c.field());
  const RatFunc& a = c.a();
  *needs_parens = false;
  if (a.is_poly()) {
    *needs_parens = a.num().term_count() > 1;
    return latex_mpoly(a.num(), names);
  }
  return "\\frac{" + latex_mpoly(a.num(), names) + "}{" +
         latex_mpoly(a.den(), names) + "}";
}

std::string latex_monomial(const SpectralMonomial& m) {
  if (m.is_unit()) return "";
  std::ostringstream out;
  if (m.lambda > 0) {
    out << "\\lambda";
    if (m.lambda > 1) out << "^{" << m.lambda << "}";
  }
  for (std::size_t s = 0; s < m.mu.size(); ++s) {
    if (m.mu[s] == 0) continue;
    out << "\\mu_{" << s + 1 << "}";
    if (m.mu[s] > 1) out << "^{" << m.mu[s] << "}";
  }
  return out.str();
}

std::string latex_poly(const SpectralPolynomial& p, const WeightedOrder& ord) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : sorted_terms(p, ord)) {
    bool neg = c.a().num().grlex_lc_negative();
    FieldElement mag = neg ? -c : c;
    bool parens = false;
    std::string cm = latex_coeff_magnitude(mag, &parens);
    std::string mono = latex_monomial(m);
    std::string body;
    if (mono.empty())
      body = cm;
    else if (cm == "1")
      body = mono;
    else if (parens)
      body = "\\left(" + cm + "\\right) " + mono;
    else
      body = cm + " " + mono;
    if (first)
      out << (neg ? "-" : "") << body;
    else
      out << (neg ? " - " : " + ") << body;
    first = false;
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// verify report

struct Check {
  std::string name;
  std::string status;  // ok | FAIL | skipped
  std::string detail;
};

std::string render_checks_text(const std::vector<Check>& checks, bool ok) {
  std::ostringstream out;
  for (const auto& c : checks) {
    out << c.name << ": " << c.status;
    if (!c.detail.empty()) out << " (" << c.detail << ")";
    out << "\n";
  }
  out << "RESULT: " << (ok ? "ok" : "FAIL") << "\n";
  return out.str();
}

}  // namespace

std::optional<OutFormat> parse_format(const std::string& name) {
  if (name == "text") return OutFormat::Text;
  if (name == "json") return OutFormat::Json;
  if (name == "latex") return OutFormat::Latex;
  return std::nullopt;
}

const GoodearlBasis& SessionKernel::basis() {
  if (!basis_) basis_ = GoodearlBasis::make(s_.L(), s_.goodearl_gens());
  return *basis_;
}

const BCBasis& SessionKernel::bc() {
  if (!bc_) bc_ = bc_ideal(basis());
  return *bc_;
}

std::string field_decl_text(const Session& s) {
  switch (s.field->variant()) {
    case FieldVariant::Exponential:
      return "exponential";
    case FieldVariant::Elliptic:
      return "elliptic(" + s.field_args[0] + ", " + s.field_args[1] + ")";
    case FieldVariant::Constants: {
      std::string out = "constants(";
      for (std::size_t i = 0; i < s.field_args.size(); ++i)
        out += (i ? ", " : "") + s.field_args[i];
      return out + ")";
    }
  }
  return "";
}

std::string cmd_bc_ideal(SessionKernel& k, OutFormat format) {
  const BCBasis& bc = k.bc();
  const GoodearlBasis& b = bc.source;
  const WeightedOrder& ord = bc.order;

  if (format == OutFormat::Json) {
    ordered_json j;
    j["field"] = field_json(k.session());
    j["n"] = b.n;
    j["t"] = b.t;
    j["rank"] = b.rank;
    j["orderGroup"] = b.order_group;
    ordered_json rels = ordered_json::array();
    for (const BCRelation& r : bc.relations) {
      ordered_json rj;
      rj["i"] = r.i;
      rj["j"] = r.j;
      rj["terms"] = terms_json(r.poly, ord);
      rels.push_back(std::move(rj));
    }
    j["relations"] = std::move(rels);
    return dump(j);
  }

  if (format == OutFormat::Latex) {
    std::ostringstream out;
    out << "% n = " << b.n << ", t = " << b.t << ", rank = " << b.rank << "\n";
    out << "\\begin{aligned}\n";
    for (std::size_t idx = 0; idx < bc.relations.size(); ++idx) {
      const BCRelation& r = bc.relations[idx];
      out << "R_{" << r.i << "," << r.j << "} &= " << latex_poly(r.poly, ord);
      out << (idx + 1 < bc.relations.size() ? " \\\\" : "") << "\n";
    }
    out << "\\end{aligned}\n";
    return out.str();
  }

  std::ostringstream out;
  out << "field: " << field_decl_text(k.session()) << "\n";
  out << "n: " << b.n << "\n";
  out << "t: " << b.t << "\n";
  out << "rank: " << b.rank << "\n";
  out << "order group: " << group_text(b.order_group) << "\n";
  for (const BCRelation& r : bc.relations)
    out << "R[" << r.i << "," << r.j << "] = " << r.poly.to_string(ord)
        << "\n";
  return out.str();
}

std::string cmd_reduce(SessionKernel& k, const std::string& target_expr,
                       OutFormat format) {
  const GoodearlBasis& b = k.basis();
  DiffOperator target = parse_operator_expr(target_expr, k.session());
  ModuleCoordinates mc = reduce_as_module(target, b);
  WeightedOrder ord = basis_order(b);

  if (format == OutFormat::Json) {
    ordered_json j;
    j["target"] = target_expr;
    ordered_json coords = ordered_json::array();
    for (std::size_t i = 0; i < mc.coords.size(); ++i) {
      ordered_json c;
      c["index"] = i;
      c["terms"] = terms_json(mc.coords[i], ord);
      coords.push_back(std::move(c));
    }
    j["coordinates"] = std::move(coords);
    return dump(j);
  }

  if (format == OutFormat::Latex) {
    std::ostringstream out;
    out << "\\begin{aligned}\n";
    for (std::size_t i = 0; i < mc.coords.size(); ++i) {
      out << "p_{" << i << "} &= " << latex_poly(mc.coords[i], ord);
      out << (i + 1 < mc.coords.size() ? " \\\\" : "") << "\n";
    }
    out << "\\end{aligned}\n";
    return out.str();
  }

  std::ostringstream out;
  for (std::size_t i = 0; i < mc.coords.size(); ++i)
    out << (i ? ", " : "") << "p" << i << " = " << mc.coords[i].to_string(ord);
  out << "\n";
  return out.str();
}

std::string cmd_member(SessionKernel& k, const std::string& poly_expr,
                       OutFormat format) {
  const BCBasis& bc = k.bc();
  SpectralPolynomial p = parse_spectral_expr(poly_expr, bc.context());
  MembershipResult r = bc_membership(p, bc);
  const WeightedOrder& ord = bc.order;

  if (format == OutFormat::Json) {
    ordered_json j;
    j["poly"] = poly_expr;
    j["member"] = r.member;
    j["normalForm"] = terms_json(r.normal_form, ord);
    return dump(j);
  }

  if (format == OutFormat::Latex) {
    std::ostringstream out;
    out << (r.member ? "\\text{a member}" : "\\text{not a member}")
        << ";\\quad \\mathrm{NF} = " << latex_poly(r.normal_form, ord)
        << "\n";
    return out.str();
  }

  std::ostringstream out;
  out << (r.member ? "a member" : "NOT a member") << "; normal form: "
      << r.normal_form.to_string(ord) << "\n";
  return out.str();
}

std::string cmd_verify(SessionKernel& k, OutFormat format) {
  if (format == OutFormat::Latex)
    fail(ErrorKind::Internal, "verify supports text and json output");
  std::vector<Check> checks;
  bool ok = true;

  checks.push_back({"normal form",
                    k.session().L().is_normal_form() ? "ok" : "FAIL",
                    ""});
  ok = ok && checks.back().status == "ok";

  bool have_basis = false;
  try {
    const GoodearlBasis& b = k.basis();
    checks.push_back({"basis structure", "ok",
                      "n = " + std::to_string(b.n) +
                          ", t = " + std::to_string(b.t) +
                          ", rank = " + std::to_string(b.rank) +
                          ", order group " + group_text(b.order_group)});
    have_basis = true;
  } catch (const SpectralError& e) {
    checks.push_back({"basis structure", "FAIL", e.what()});
    ok = false;
  }

  if (!have_basis) {
    checks.push_back({"groebner", "skipped", "no basis"});
    checks.push_back({"phi_L vanishing", "skipped", "no basis"});
    checks.push_back({"resultant membership", "skipped", "no basis"});
  } else if (k.basis().t < 2) {
    // C[L] itself: the ideal is zero and there is nothing to check.
    checks.push_back({"groebner", "skipped", "t = 1, trivial ideal"});
    checks.push_back({"phi_L vanishing", "skipped", "t = 1, trivial ideal"});
    checks.push_back(
        {"resultant membership", "skipped", "t = 1, trivial ideal"});
  } else {
    try {
      const BCBasis& bc = k.bc();
      const std::size_t nrel = bc.relations.size();
      checks.push_back({"groebner",
                        is_groebner(bc.polys(), bc.order) ? "ok" : "FAIL",
                        std::to_string(nrel) + " relations"});
      ok = ok && checks.back().status == "ok";

      PhiEvaluator phi(bc.source);
      std::string bad;
      for (const BCRelation& r : bc.relations)
        if (!phi(r.poly).is_zero()) {
          bad = "R[" + std::to_string(r.i) + "," + std::to_string(r.j) +
                "] does not vanish";
          break;
        }
      checks.push_back({"phi_L vanishing", bad.empty() ? "ok" : "FAIL",
                        bad.empty() ? std::to_string(nrel) + " relations"
                                    : bad});
      ok = ok && bad.empty();

      const GoodearlBasis& b = bc.source;
      SpecContext kctx{b.L.field(), static_cast<std::uint32_t>(b.t - 1),
                       CoeffRing::FullK};
      SpectralOperator P = SpectralOperator::lift(b.L, kctx) -
                           SpectralPolynomial::lambda_pow(kctx, 1);
      std::string rbad;
      std::size_t pairs = 0;
      for (std::size_t i = 1; i < b.gens.size() && rbad.empty(); ++i) {
        SpectralOperator Q =
            SpectralOperator::lift(b.gens[i], kctx) -
            SpectralPolynomial::mu_var(kctx,
                                       static_cast<std::uint32_t>(i - 1));
        try {
          SpectralPolynomial res = diff_resultant(P, Q);
          SpectralPolynomial sf = squarefree_part(res);
          if (!bc_membership(sf, bc).member)
            rbad = "squarefree resultant of pair " + std::to_string(i) +
                   " is not a member";
          ++pairs;
        } catch (const SpectralError& e) {
          rbad = std::string("pair ") + std::to_string(i) + ": " + e.what();
        }
      }
      checks.push_back({"resultant membership", rbad.empty() ? "ok" : "FAIL",
                        rbad.empty() ? std::to_string(pairs) + " pairs"
                                     : rbad});
      ok = ok && rbad.empty();
    } catch (const SpectralError& e) {
      checks.push_back({"groebner", "FAIL", e.what()});
      checks.push_back({"phi_L vanishing", "skipped", "no ideal basis"});
      checks.push_back({"resultant membership", "skipped", "no ideal basis"});
      ok = false;
    }
  }

  if (format == OutFormat::Json) {
    ordered_json j;
    ordered_json arr = ordered_json::array();
    for (const auto& c : checks) {
      ordered_json cj;
      cj["name"] = c.name;
      cj["status"] = c.status;
      cj["detail"] = c.detail;
      arr.push_back(std::move(cj));
    }
    j["checks"] = std::move(arr);
    j["result"] = ok ? "ok" : "FAIL";
    return dump(j);
  }
  return render_checks_text(checks, ok);
}

std::string cmd_example(const std::string& name) {
  return catalog_example(name).session_text;
}

}  // namespace spectral
