#include "core/mpoly.hpp"

#include <algorithm>
#include <cassert>
#include <mutex>
#include <sstream>

#include "core/errors.hpp"
#include "core/modgcd.hpp"

namespace spectral {

const char* error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::FieldMismatch: return "FieldMismatch";
    case ErrorKind::NotNormalForm: return "NotNormalForm";
    case ErrorKind::NotCommuting: return "NotCommuting";
    case ErrorKind::DuplicateOrderClass: return "DuplicateOrderClass";
    case ErrorKind::NotSubgroup: return "NotSubgroup";
    case ErrorKind::NotInCentralizerSpan: return "NotInCentralizerSpan";
    case ErrorKind::ArityMismatch: return "ArityMismatch";
    case ErrorKind::NonConstantResultant: return "NonConstantResultant";
    case ErrorKind::ZeroInput: return "ZeroInput";
    case ErrorKind::InputNotReduced: return "InputNotReduced";
    case ErrorKind::DiscriminantZero: return "DiscriminantZero";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::UnknownSymbol: return "UnknownSymbol";
    case ErrorKind::SugarOutsideField: return "SugarOutsideField";
    case ErrorKind::NonIntegerExponent: return "NonIntegerExponent";
    case ErrorKind::Internal: return "Internal";
  }
  return "Unknown";
}

namespace {

std::uint32_t expvec_total(const Expvec& e) {
  std::uint32_t t = 0;
  for (auto x : e) t += x;
  return t;
}

// Graded lex with earlier variables larger on ties.
bool grlex_less(const Expvec& a, const Expvec& b) {
  std::uint32_t ta = expvec_total(a), tb = expvec_total(b);
  if (ta != tb) return ta < tb;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

}  // namespace

MPoly MPoly::constant(std::uint32_t nvars, const mpq_class& c) {
  MPoly p(nvars);
  if (c != 0) p.terms_.emplace(Expvec(nvars, 0), c);
  return p;
}

MPoly MPoly::variable(std::uint32_t nvars, std::uint32_t v, std::uint32_t exp) {
  assert(v < nvars);
  MPoly p(nvars);
  Expvec e(nvars, 0);
  e[v] = exp;
  p.terms_.emplace(std::move(e), mpq_class(1));
  return p;
}

bool MPoly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  return expvec_total(terms_.begin()->first) == 0;
}

mpq_class MPoly::constant_value() const {
  if (terms_.empty()) return mpq_class(0);
  assert(is_constant());
  return terms_.begin()->second;
}

void MPoly::add_term(const Expvec& e, const mpq_class& c) {
  if (c == 0) return;
  auto [it, fresh] = terms_.emplace(e, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MPoly MPoly::operator-() const {
  MPoly r(nvars_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

MPoly& MPoly::operator+=(const MPoly& o) {
  assert(nvars_ == o.nvars_);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
  assert(nvars_ == o.nvars_);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  assert(a.nvars_ == b.nvars_);
  MPoly r(a.nvars_);
  Expvec e(a.nvars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::uint32_t i = 0; i < a.nvars_; ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

MPoly MPoly::mul_scalar(const mpq_class& c) const {
  MPoly r(nvars_);
  if (c == 0) return r;
  for (const auto& [e, k] : terms_) r.terms_.emplace(e, k * c);
  return r;
}

MPoly MPoly::mul_term(const Expvec& e, const mpq_class& c) const {
  MPoly r(nvars_);
  if (c == 0) return r;
  Expvec f(nvars_);
  for (const auto& [ea, ca] : terms_) {
    for (std::uint32_t i = 0; i < nvars_; ++i) f[i] = ea[i] + e[i];
    r.terms_.emplace(f, ca * c);
  }
  return r;
}

MPoly MPoly::pow(std::uint32_t k) const {
  MPoly r = constant(nvars_, 1);
  for (std::uint32_t i = 0; i < k; ++i) r = r * *this;
  return r;
}

std::uint32_t MPoly::degree_in(std::uint32_t v) const {
  std::uint32_t d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[v]);
  return d;
}

std::uint32_t MPoly::total_degree() const {
  std::uint32_t d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, expvec_total(e));
  return d;
}

bool MPoly::depends_on(std::uint32_t v) const {
  for (const auto& [e, c] : terms_) {
    if (e[v] > 0) return true;
  }
  return false;
}

MPoly MPoly::derivative(std::uint32_t v) const {
  MPoly r(nvars_);
  for (const auto& [e, c] : terms_) {
    if (e[v] == 0) continue;
    Expvec f = e;
    f[v] -= 1;
    r.terms_.emplace(std::move(f), c * e[v]);
  }
  return r;
}

MPoly MPoly::remap(std::uint32_t new_nvars,
                   const std::vector<std::uint32_t>& map) const {
  assert(map.size() == nvars_);
  MPoly r(new_nvars);
  for (const auto& [e, c] : terms_) {
    Expvec f(new_nvars, 0);
    // Accumulate so that a non-injective map merges variables instead of
    // silently dropping exponents.
    for (std::uint32_t i = 0; i < nvars_; ++i) f[map[i]] += e[i];
    r.add_term(f, c);
  }
  return r;
}

const std::pair<const Expvec, mpq_class>* MPoly::grlex_leading() const {
  const std::pair<const Expvec, mpq_class>* best = nullptr;
  for (const auto& t : terms_) {
    if (!best || grlex_less(best->first, t.first)) best = &t;
  }
  return best;
}

bool MPoly::grlex_lc_negative() const {
  const auto* lt = grlex_leading();
  return lt && lt->second < 0;
}

const std::pair<const Expvec, mpq_class>* MPoly::lex_leading() const {
  if (terms_.empty()) return nullptr;
  return &*terms_.rbegin();
}

std::optional<MPoly> MPoly::divide_exact(const MPoly& a, const MPoly& b) {
  assert(a.nvars_ == b.nvars_);
  if (b.is_zero()) return std::nullopt;
  MPoly q(a.nvars_);
  MPoly r = a;
  const auto* ltb = b.lex_leading();
  while (!r.is_zero()) {
    const auto* ltr = r.lex_leading();
    Expvec e(a.nvars_);
    for (std::uint32_t i = 0; i < a.nvars_; ++i) {
      if (ltr->first[i] < ltb->first[i]) return std::nullopt;
      e[i] = ltr->first[i] - ltb->first[i];
    }
    mpq_class c = ltr->second / ltb->second;
    q.add_term(e, c);
    r -= b.mul_term(e, c);
  }
  return q;
}

mpq_class MPoly::extract_content() {
  if (terms_.empty()) return mpq_class(0);
  mpz_class num_gcd = 0, den_lcm = 1;
  for (const auto& [e, c] : terms_) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(),
            c.get_num().get_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(),
            c.get_den().get_mpz_t());
  }
  mpq_class content(num_gcd, den_lcm);
  content.canonicalize();
  mpq_class inv = 1 / content;
  for (auto& [e, c] : terms_) {
    c *= inv;
    c.canonicalize();
  }
  return content;
}

std::string MPoly::to_string(const std::vector<std::string>& names) const {
  assert(names.size() >= nvars_);
  if (terms_.empty()) return "0";
  std::vector<const std::pair<const Expvec, mpq_class>*> order;
  order.reserve(terms_.size());
  for (const auto& t : terms_) order.push_back(&t);
  std::sort(order.begin(), order.end(),
            [](auto* x, auto* y) { return grlex_less(y->first, x->first); });
  std::ostringstream out;
  bool first = true;
  for (const auto* t : order) {
    mpq_class c = t->second;
    bool neg = c < 0;
    if (neg) c = -c;
    if (first) {
      if (neg) out << "-";
    } else {
      out << (neg ? " - " : " + ");
    }
    first = false;
    std::vector<std::string> factors;
    if (c != 1 || expvec_total(t->first) == 0) factors.push_back(c.get_str());
    for (std::uint32_t v = 0; v < nvars_; ++v) {
      std::uint32_t e = t->first[v];
      if (e == 0) continue;
      if (e == 1) {
        factors.push_back(names[v]);
      } else {
        factors.push_back(names[v] + "^" + std::to_string(e));
      }
    }
    for (std::size_t i = 0; i < factors.size(); ++i) {
      if (i) out << "*";
      out << factors[i];
    }
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// gcd machinery

namespace {

std::vector<std::uint32_t> active_vars(const MPoly& a, const MPoly& b) {
  std::vector<std::uint32_t> vars;
  for (std::uint32_t v = 0; v < a.nvars(); ++v) {
    if (a.depends_on(v) || b.depends_on(v)) vars.push_back(v);
  }
  return vars;
}

MPoly sign_normalized(MPoly p) {
  if (p.grlex_lc_negative()) return -p;
  return p;
}

// --- dense univariate integer layer -----------------------------------

using ZPoly = std::vector<mpz_class>;  // ascending, trimmed

ZPoly to_dense(const MPoly& p, std::uint32_t v) {
  ZPoly d(p.degree_in(v) + 1, mpz_class(0));
  for (const auto& [e, c] : p.terms()) {
    assert(c.get_den() == 1);
    d[e[v]] = c.get_num();
  }
  while (!d.empty() && d.back() == 0) d.pop_back();
  return d;
}

MPoly from_dense(const ZPoly& d, std::uint32_t nvars, std::uint32_t v) {
  MPoly p(nvars);
  Expvec e(nvars, 0);
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d[i] == 0) continue;
    e[v] = static_cast<std::uint32_t>(i);
    p.add_term(e, mpq_class(d[i]));
  }
  return p;
}

void zpoly_primitive(ZPoly& a) {
  mpz_class g = 0;
  for (const auto& c : a) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  if (g == 0 || g == 1) return;
  for (auto& c : a) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
}

// True iff g divides a exactly over Z; quotient discarded.
bool zpoly_divides(const ZPoly& a, const ZPoly& g) {
  if (g.empty()) return a.empty();
  ZPoly r = a;
  while (r.size() >= g.size()) {
    const mpz_class& lr = r.back();
    if (lr == 0) {
      r.pop_back();
      continue;
    }
    if (!mpz_divisible_p(lr.get_mpz_t(), g.back().get_mpz_t())) return false;
    mpz_class q;
    mpz_divexact(q.get_mpz_t(), lr.get_mpz_t(), g.back().get_mpz_t());
    std::size_t shift = r.size() - g.size();
    for (std::size_t i = 0; i < g.size(); ++i) r[shift + i] -= q * g[i];
    while (!r.empty() && r.back() == 0) r.pop_back();
  }
  return r.empty();
}

// --- arithmetic mod a word-sized prime --------------------------------

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(
      static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t p) {
  return powmod(a, p - 2, p);
}

using UPoly = std::vector<std::uint64_t>;  // ascending, trimmed

void utrim(UPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

UPoly umod(const ZPoly& a, std::uint64_t p) {
  UPoly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::uint64_t m = mpz_fdiv_ui(a[i].get_mpz_t(), p);
    r[i] = m;
  }
  utrim(r);
  return r;
}

// Remainder of a by b in (Z/p)[x]; b nonzero.
UPoly urem(UPoly a, const UPoly& b, std::uint64_t p) {
  std::uint64_t inv_lb = invmod(b.back(), p);
  while (a.size() >= b.size()) {
    std::uint64_t q = mulmod(a.back(), inv_lb, p);
    std::size_t shift = a.size() - b.size();
    if (q != 0) {
      for (std::size_t i = 0; i < b.size(); ++i) {
        std::uint64_t t = mulmod(q, b[i], p);
        std::uint64_t& c = a[shift + i];
        c = (c >= t) ? c - t : c + p - t;
      }
    }
    a.pop_back();
    utrim(a);
    if (a.size() < b.size()) break;
  }
  return a;
}

UPoly ugcd_monic(UPoly a, UPoly b, std::uint64_t p) {
  utrim(a);
  utrim(b);
  while (!b.empty()) {
    UPoly r = urem(std::move(a), b, p);
    a = std::move(b);
    b = std::move(r);
  }
  std::uint64_t inv_la = invmod(a.back(), p);
  for (auto& c : a) c = mulmod(c, inv_la, p);
  return a;
}

const std::vector<std::uint64_t>& modular_primes() {
  static std::vector<std::uint64_t> primes;
  static std::once_flag once;
  std::call_once(once, [] {
    mpz_class p = mpz_class(1) << 62;
    for (int i = 0; i < 64; ++i) {
      mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
      primes.push_back(mpz_get_ui(p.get_mpz_t()));
    }
  });
  return primes;
}

MPoly gcd_rec(const MPoly& a, const MPoly& b);

// Modular gcd of primitive integer univariate polynomials, certified by
// trial division.  Falls back to the pseudo-remainder path if the prime
// budget runs out.
std::optional<ZPoly> zpoly_gcd_modular(const ZPoly& a, const ZPoly& b) {
  mpz_class gamma;
  mpz_gcd(gamma.get_mpz_t(), a.back().get_mpz_t(), b.back().get_mpz_t());
  std::size_t best_deg = SIZE_MAX;
  std::vector<mpz_class> res;
  mpz_class modulus = 1;
  for (std::uint64_t p : modular_primes()) {
    if (mpz_fdiv_ui(a.back().get_mpz_t(), p) == 0) continue;
    if (mpz_fdiv_ui(b.back().get_mpz_t(), p) == 0) continue;
    UPoly g = ugcd_monic(umod(a, p), umod(b, p), p);
    if (g.size() == 1) return ZPoly{mpz_class(1)};
    std::uint64_t gp = mpz_fdiv_ui(gamma.get_mpz_t(), p);
    for (auto& c : g) c = mulmod(c, gp, p);
    if (g.size() < best_deg) {
      best_deg = g.size();
      res.assign(g.size(), mpz_class(0));
      modulus = 1;
    } else if (g.size() > best_deg) {
      continue;
    }
    // CRT-combine g into res.
    std::uint64_t minv = invmod(mpz_fdiv_ui(modulus.get_mpz_t(), p) % p, p);
    if (modulus == 1) {
      for (std::size_t i = 0; i < g.size(); ++i) res[i] = g[i];
    } else {
      for (std::size_t i = 0; i < g.size(); ++i) {
        std::uint64_t ri = mpz_fdiv_ui(res[i].get_mpz_t(), p);
        std::uint64_t diff = (g[i] >= ri) ? g[i] - ri : g[i] + p - ri;
        res[i] += modulus * mpz_class(mulmod(diff, minv, p));
      }
    }
    modulus *= p;
    ZPoly cand(res.size());
    mpz_class half = modulus / 2;
    for (std::size_t i = 0; i < res.size(); ++i) {
      cand[i] = res[i] % modulus;
      if (cand[i] < 0) cand[i] += modulus;
      if (cand[i] > half) cand[i] -= modulus;
    }
    while (!cand.empty() && cand.back() == 0) cand.pop_back();
    if (cand.empty()) continue;
    zpoly_primitive(cand);
    if (zpoly_divides(a, cand) && zpoly_divides(b, cand)) return cand;
  }
  return std::nullopt;
}

// --- multivariate layer ------------------------------------------------

std::map<std::uint32_t, MPoly> split_by_var(const MPoly& p, std::uint32_t v) {
  std::map<std::uint32_t, MPoly> slices;
  for (const auto& [e, c] : p.terms()) {
    auto [it, fresh] = slices.try_emplace(e[v], p.nvars());
    Expvec f = e;
    f[v] = 0;
    it->second.add_term(f, c);
  }
  return slices;
}

// Gcd of the coefficient slices of p with respect to v.  For an
// integer-primitive p the slices' integer contents are globally coprime,
// so the primitive gcd is the true content.
MPoly content_wrt(const MPoly& p, std::uint32_t v) {
  MPoly g(p.nvars());
  for (const auto& [d, slice] : split_by_var(p, v)) {
    g = gcd_rec(g, slice);
    if (g.is_constant()) return MPoly::constant(p.nvars(), 1);
  }
  return g;
}

MPoly lead_coeff_wrt(const MPoly& p, std::uint32_t v, std::uint32_t* deg) {
  std::uint32_t d = p.degree_in(v);
  MPoly lc(p.nvars());
  for (const auto& [e, c] : p.terms()) {
    if (e[v] != d) continue;
    Expvec f = e;
    f[v] = 0;
    lc.add_term(f, c);
  }
  if (deg) *deg = d;
  return lc;
}

// True pseudo-remainder prem(a, b) = lc(b)^(da-db+1) * a mod b wrt v.
MPoly prem(const MPoly& a, const MPoly& b, std::uint32_t v) {
  std::uint32_t db;
  MPoly lb = lead_coeff_wrt(b, v, &db);
  std::uint32_t da = a.degree_in(v);
  assert(da >= db);
  std::uint32_t e = da - db + 1;
  MPoly r = a;
  while (!r.is_zero()) {
    std::uint32_t dr;
    MPoly lr = lead_coeff_wrt(r, v, &dr);
    if (dr < db) break;
    Expvec shift(r.nvars(), 0);
    shift[v] = dr - db;
    r = lb * r - (lr * b).mul_term(shift, 1);
    --e;
  }
  for (; e > 0; --e) r = lb * r;
  return r;
}

MPoly gcd_rec(const MPoly& a, const MPoly& b);

// Gcd when one operand is a single term: the common monomial, scaled to a
// primitive coefficient.  Monomial denominators are everywhere in the
// exponential field, so this path matters.
MPoly monomial_gcd(const MPoly& mono, const MPoly& other) {
  Expvec e = mono.terms().begin()->first;
  for (const auto& [f, c] : other.terms()) {
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::min(e[i], f[i]);
  }
  MPoly g(mono.nvars());
  g.add_term(e, 1);
  return g;
}

// Core gcd on integer-primitive inputs; result is integer-primitive up to
// sign.  Zero inputs: gcd_rec(0, f) = f.
MPoly gcd_rec(const MPoly& a, const MPoly& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.is_constant() || b.is_constant()) return MPoly::constant(a.nvars(), 1);
  if (a == b) return a;
  if (a.term_count() == 1) return monomial_gcd(a, b);
  if (b.term_count() == 1) return monomial_gcd(b, a);
  // Cheap containment checks catch the common reduced-fraction cases.
  if (a.term_count() <= b.term_count()) {
    if (MPoly::divide_exact(b, a)) return a;
    if (MPoly::divide_exact(a, b)) return b;
  } else {
    if (MPoly::divide_exact(a, b)) return b;
    if (MPoly::divide_exact(b, a)) return a;
  }
  std::vector<std::uint32_t> vars = active_vars(a, b);
  if (vars.size() == 1) {
    std::uint32_t v = vars[0];
    ZPoly da = to_dense(a, v), db = to_dense(b, v);
    if (auto g = zpoly_gcd_modular(da, db)) {
      return from_dense(*g, a.nvars(), v);
    }
    // fall through to the subresultant path below
  }
  if (vars.size() >= 2) {
    if (auto g = modular_multivariate_gcd(a, b)) return *g;
  }
  std::uint32_t v = vars.back();
  if (!a.depends_on(v) || !b.depends_on(v)) {
    // One side is free of the main variable, so the gcd divides the other
    // side's content with respect to it.
    const MPoly& free_side = a.depends_on(v) ? b : a;
    const MPoly& dep_side = a.depends_on(v) ? a : b;
    return gcd_rec(free_side, content_wrt(dep_side, v));
  }
  MPoly ca = content_wrt(a, v);
  MPoly cb = content_wrt(b, v);
  MPoly x = *MPoly::divide_exact(a, ca);
  MPoly y = *MPoly::divide_exact(b, cb);
  MPoly c = gcd_rec(ca, cb);
  if (x.degree_in(v) < y.degree_in(v)) std::swap(x, y);
  // Subresultant polynomial remainder sequence: every division below is
  // exact by the subresultant theorem, and no content is stripped until
  // the end.
  const std::uint32_t nv = a.nvars();
  std::uint32_t d = x.degree_in(v) - y.degree_in(v);
  MPoly beta = MPoly::constant(nv, (d % 2 == 0) ? -1 : 1);
  MPoly psi = MPoly::constant(nv, -1);
  MPoly g(nv);
  while (true) {
    MPoly r = prem(x, y, v);
    if (r.is_zero()) {
      g = y;
      break;
    }
    r = *MPoly::divide_exact(r, beta);
    if (r.degree_in(v) == 0) {
      g = MPoly::constant(nv, 1);
      break;
    }
    MPoly ly = lead_coeff_wrt(y, v, nullptr);
    MPoly neg_ly = -ly;
    if (d == 0) {
      // psi unchanged
    } else if (d == 1) {
      psi = neg_ly;
    } else {
      psi = *MPoly::divide_exact(neg_ly.pow(d), psi.pow(d - 1));
    }
    std::uint32_t dn = y.degree_in(v) - r.degree_in(v);
    beta = neg_ly * psi.pow(dn);
    d = dn;
    x = std::move(y);
    y = std::move(r);
  }
  if (g.degree_in(v) == 0) {
    MPoly result = c;
    result.extract_content();
    return result;
  }
  g.extract_content();
  MPoly cg = content_wrt(g, v);
  g = *MPoly::divide_exact(g, cg);
  MPoly result = c * g;
  result.extract_content();
  return result;
}

}  // namespace

MPoly mpoly_gcd(const MPoly& a, const MPoly& b) {
  assert(a.nvars() == b.nvars());
  if (a.is_zero() && b.is_zero()) return MPoly(a.nvars());
  MPoly pa = a, pb = b;
  pa.extract_content();
  pb.extract_content();
  if (pa.is_zero()) return sign_normalized(std::move(pb));
  if (pb.is_zero()) return sign_normalized(std::move(pa));
  return sign_normalized(gcd_rec(pa, pb));
}

}  // namespace spectral
