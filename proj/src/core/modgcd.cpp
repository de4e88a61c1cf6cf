#include "core/modgcd.hpp"

#include <cassert>
#include <cstdint>
#include <mutex>

namespace spectral {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 addmod(u64 a, u64 b, u64 p) {
  u64 s = a + b;
  if (s >= p || s < a) s -= p;
  return s;
}
u64 submod(u64 a, u64 b, u64 p) { return (a >= b) ? a - b : a + p - b; }
u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>(u128(a) * b % p); }
u64 powmod(u64 a, u64 e, u64 p) {
  u64 r = 1;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}
u64 invmod(u64 a, u64 p) { return powmod(a, p - 2, p); }

// Sparse polynomial over F_p; same exponent-vector keying as MPoly.
struct PPoly {
  std::uint32_t nvars = 0;
  std::map<Expvec, u64> terms;

  bool zero() const { return terms.empty(); }
  bool constant() const {
    if (terms.empty()) return true;
    if (terms.size() > 1) return false;
    for (auto e : terms.begin()->first) {
      if (e) return false;
    }
    return true;
  }
  std::uint32_t degree_in(std::uint32_t v) const {
    std::uint32_t d = 0;
    for (const auto& [e, c] : terms) d = std::max(d, e[v]);
    return d;
  }
  bool depends_on(std::uint32_t v) const {
    for (const auto& [e, c] : terms) {
      if (e[v]) return true;
    }
    return false;
  }
  void add(const Expvec& e, u64 c, u64 p) {
    if (c == 0) return;
    auto [it, fresh] = terms.emplace(e, c);
    if (!fresh) {
      it->second = addmod(it->second, c, p);
      if (it->second == 0) terms.erase(it);
    }
  }
  const std::pair<const Expvec, u64>* lex_leading() const {
    if (terms.empty()) return nullptr;
    return &*terms.rbegin();
  }
};

PPoly reduce_mod(const MPoly& a, u64 p) {
  PPoly r;
  r.nvars = a.nvars();
  for (const auto& [e, c] : a.terms()) {
    assert(c.get_den() == 1);
    u64 m = mpz_fdiv_ui(c.get_num().get_mpz_t(), p);
    if (m) r.terms.emplace(e, m);
  }
  return r;
}

PPoly pmul(const PPoly& a, const PPoly& b, u64 p) {
  PPoly r;
  r.nvars = a.nvars;
  Expvec e(a.nvars);
  for (const auto& [ea, ca] : a.terms) {
    for (const auto& [eb, cb] : b.terms) {
      for (std::uint32_t i = 0; i < a.nvars; ++i) e[i] = ea[i] + eb[i];
      r.add(e, mulmod(ca, cb, p), p);
    }
  }
  return r;
}

PPoly pscale(const PPoly& a, u64 c, u64 p) {
  PPoly r;
  r.nvars = a.nvars;
  if (c == 0) return r;
  for (const auto& [e, k] : a.terms) r.terms.emplace(e, mulmod(k, c, p));
  return r;
}

// Exact division; nullopt when it fails.
std::optional<PPoly> pdivexact(const PPoly& a, const PPoly& b, u64 p) {
  if (b.zero()) return std::nullopt;
  PPoly q;
  q.nvars = a.nvars;
  PPoly r = a;
  const auto* ltb = b.lex_leading();
  u64 inv_lb = invmod(ltb->second, p);
  while (!r.zero()) {
    const auto* ltr = r.lex_leading();
    Expvec e(a.nvars);
    for (std::uint32_t i = 0; i < a.nvars; ++i) {
      if (ltr->first[i] < ltb->first[i]) return std::nullopt;
      e[i] = ltr->first[i] - ltb->first[i];
    }
    u64 c = mulmod(ltr->second, inv_lb, p);
    q.add(e, c, p);
    // r -= c * x^e * b
    Expvec f(a.nvars);
    for (const auto& [eb, cb] : b.terms) {
      for (std::uint32_t i = 0; i < a.nvars; ++i) f[i] = eb[i] + e[i];
      r.add(f, p - mulmod(c, cb, p), p);
    }
  }
  return q;
}

PPoly peval(const PPoly& a, std::uint32_t v, u64 t, u64 p) {
  std::vector<u64> powers(a.degree_in(v) + 1);
  powers[0] = 1;
  for (std::size_t i = 1; i < powers.size(); ++i) {
    powers[i] = mulmod(powers[i - 1], t, p);
  }
  PPoly r;
  r.nvars = a.nvars;
  Expvec f;
  for (const auto& [e, c] : a.terms) {
    f = e;
    f[v] = 0;
    r.add(f, mulmod(c, powers[e[v]], p), p);
  }
  return r;
}

PPoly lc_wrt(const PPoly& a, std::uint32_t v) {
  std::uint32_t d = a.degree_in(v);
  PPoly r;
  r.nvars = a.nvars;
  for (const auto& [e, c] : a.terms) {
    if (e[v] != d) continue;
    Expvec f = e;
    f[v] = 0;
    r.terms.emplace(f, c);
  }
  return r;
}

std::vector<std::uint32_t> pactive(const PPoly& a, const PPoly& b) {
  std::vector<std::uint32_t> vars;
  for (std::uint32_t v = 0; v < a.nvars; ++v) {
    if (a.depends_on(v) || b.depends_on(v)) vars.push_back(v);
  }
  return vars;
}

// Monic univariate gcd in variable v via dense Euclid.
PPoly pgcd_univ(const PPoly& a, const PPoly& b, std::uint32_t v, u64 p) {
  auto dense = [&](const PPoly& f) {
    std::vector<u64> d(f.degree_in(v) + 1, 0);
    for (const auto& [e, c] : f.terms) d[e[v]] = c;
    while (!d.empty() && d.back() == 0) d.pop_back();
    return d;
  };
  std::vector<u64> x = dense(a), y = dense(b);
  while (!y.empty()) {
    u64 inv_ly = invmod(y.back(), p);
    while (x.size() >= y.size()) {
      u64 q = mulmod(x.back(), inv_ly, p);
      std::size_t shift = x.size() - y.size();
      if (q) {
        for (std::size_t i = 0; i < y.size(); ++i) {
          x[shift + i] = submod(x[shift + i], mulmod(q, y[i], p), p);
        }
      }
      while (!x.empty() && x.back() == 0) x.pop_back();
      if (x.size() < y.size()) break;
    }
    std::swap(x, y);
  }
  u64 inv_lx = invmod(x.back(), p);
  PPoly g;
  g.nvars = a.nvars;
  Expvec e(a.nvars, 0);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    e[v] = static_cast<std::uint32_t>(i);
    g.terms.emplace(e, mulmod(x[i], inv_lx, p));
  }
  return g;
}

constexpr int kMaxDepth = 48;

std::optional<PPoly> pgcd_top(const PPoly& a, const PPoly& b, u64 p,
                              int depth);

// Brown's leading-coefficient-imposed recursion.  Both inputs depend on
// `main` and are primitive with respect to it; gamma is a multiple of the
// gcd's leading coefficient in `main`.  On success the result W satisfies
// lc_main(W) = gamma and W is the gcd up to a factor free of `main`.
std::optional<PPoly> pgcd_imposed(const PPoly& a, const PPoly& b,
                                  std::uint32_t main, const PPoly& gamma,
                                  u64 p, int depth) {
  if (depth > kMaxDepth) return std::nullopt;
  std::vector<std::uint32_t> others;
  for (std::uint32_t v = 0; v < a.nvars; ++v) {
    if (v == main) continue;
    if (a.depends_on(v) || b.depends_on(v)) others.push_back(v);
  }
  if (others.empty()) {
    if (!gamma.constant()) return std::nullopt;
    PPoly g = pgcd_univ(a, b, main, p);
    return pscale(g, gamma.terms.begin()->second, p);
  }
  std::uint32_t u = others.back();
  PPoly la = lc_wrt(a, main), lb = lc_wrt(b, main);
  std::uint32_t points_needed =
      std::min(a.degree_in(u), b.degree_in(u)) + gamma.degree_in(u) + 1;
  std::vector<std::pair<u64, PPoly>> cohort;
  std::uint32_t best_main_deg = UINT32_MAX;
  u64 cap = 4 * static_cast<u64>(points_needed) + 32;
  for (u64 t = 1, attempts = 0; attempts < cap; ++t, ++attempts) {
    if (t >= p) break;
    if (peval(la, u, t, p).zero()) continue;
    if (peval(lb, u, t, p).zero()) continue;
    PPoly gamma_t = peval(gamma, u, t, p);
    if (gamma_t.zero()) continue;
    auto ht = pgcd_imposed(peval(a, u, t, p), peval(b, u, t, p), main,
                           gamma_t, p, depth + 1);
    if (!ht) return std::nullopt;
    std::uint32_t dmain = ht->degree_in(main);
    if (dmain < best_main_deg) {
      best_main_deg = dmain;
      cohort.clear();
    } else if (dmain > best_main_deg) {
      continue;
    }
    cohort.emplace_back(t, std::move(*ht));
    if (cohort.size() < points_needed) continue;
    // Lagrange interpolation in u, coefficient-wise over the union
    // support of the images.
    std::size_t n = cohort.size();
    std::map<Expvec, std::vector<u64>> samples;
    for (std::size_t j = 0; j < n; ++j) {
      for (const auto& [e, c] : cohort[j].second.terms) {
        auto [it, fresh] = samples.try_emplace(e, std::vector<u64>(n, 0));
        it->second[j] = c;
      }
    }
    PPoly w;
    w.nvars = a.nvars;
    for (const auto& [e, vals] : samples) {
      std::vector<u64> poly(n, 0);  // dense in u
      for (std::size_t j = 0; j < n; ++j) {
        if (vals[j] == 0) continue;
        std::vector<u64> basis = {1};
        u64 denom = 1;
        for (std::size_t k = 0; k < n; ++k) {
          if (k == j) continue;
          u64 tk = cohort[k].first;
          basis.push_back(0);
          for (std::size_t i = basis.size() - 1; i > 0; --i) {
            basis[i] = submod(basis[i - 1], mulmod(basis[i], tk, p), p);
          }
          basis[0] = mulmod(basis[0], p - tk, p);
          denom = mulmod(denom, submod(cohort[j].first, tk, p), p);
        }
        u64 scale = mulmod(vals[j], invmod(denom, p), p);
        for (std::size_t i = 0; i < basis.size(); ++i) {
          poly[i] = addmod(poly[i], mulmod(basis[i], scale, p), p);
        }
      }
      Expvec f = e;
      for (std::size_t i = 0; i < poly.size(); ++i) {
        if (poly[i] == 0) continue;
        f[u] = static_cast<std::uint32_t>(i);
        w.add(f, poly[i], p);
      }
    }
    if (w.zero()) return std::nullopt;
    return w;
  }
  return std::nullopt;
}

// Gcd of the coefficient slices of f with respect to v.
std::optional<PPoly> pcontent_wrt(const PPoly& f, std::uint32_t v, u64 p,
                                  int depth) {
  std::map<std::uint32_t, PPoly> slices;
  for (const auto& [e, c] : f.terms) {
    auto [it, fresh] = slices.try_emplace(e[v]);
    if (fresh) it->second.nvars = f.nvars;
    Expvec g = e;
    g[v] = 0;
    it->second.terms.emplace(g, c);
  }
  PPoly cont;
  bool first = true;
  for (auto& [d, s] : slices) {
    if (first) {
      cont = std::move(s);
      first = false;
    } else {
      auto g = pgcd_top(cont, s, p, depth + 1);
      if (!g) return std::nullopt;
      cont = std::move(*g);
    }
    if (cont.constant()) break;
  }
  return cont;
}

// Certified monic (lex) gcd of nonzero a, b over F_p.
std::optional<PPoly> pgcd_top(const PPoly& a, const PPoly& b, u64 p,
                              int depth) {
  if (depth > kMaxDepth) return std::nullopt;
  auto monic = [&](PPoly f) {
    u64 inv = invmod(f.lex_leading()->second, p);
    return pscale(f, inv, p);
  };
  if (a.constant() || b.constant()) {
    PPoly one;
    one.nvars = a.nvars;
    one.terms.emplace(Expvec(a.nvars, 0), 1);
    return one;
  }
  std::vector<std::uint32_t> vars = pactive(a, b);
  if (vars.size() == 1) {
    if (!a.depends_on(vars[0]) || !b.depends_on(vars[0])) {
      PPoly one;
      one.nvars = a.nvars;
      one.terms.emplace(Expvec(a.nvars, 0), 1);
      return one;
    }
    return pgcd_univ(a, b, vars[0], p);
  }
  // main variable: one on which both sides depend
  std::optional<std::uint32_t> main;
  for (std::uint32_t v : vars) {
    if (a.depends_on(v) && b.depends_on(v)) {
      main = v;
      break;
    }
  }
  if (!main) {
    // No shared variable: reduce one side to its content.
    std::uint32_t v = vars.front();
    const PPoly& dep = a.depends_on(v) ? a : b;
    const PPoly& other = a.depends_on(v) ? b : a;
    auto cont = pcontent_wrt(dep, v, p, depth);
    if (!cont) return std::nullopt;
    if (cont->constant()) {
      PPoly one;
      one.nvars = a.nvars;
      one.terms.emplace(Expvec(a.nvars, 0), 1);
      return one;
    }
    return pgcd_top(other, *cont, p, depth + 1);
  }
  auto ca = pcontent_wrt(a, *main, p, depth);
  if (!ca) return std::nullopt;
  auto cb = pcontent_wrt(b, *main, p, depth);
  if (!cb) return std::nullopt;
  auto ppa = pdivexact(a, *ca, p);
  auto ppb = pdivexact(b, *cb, p);
  if (!ppa || !ppb) return std::nullopt;
  auto cont_gcd = pgcd_top(*ca, *cb, p, depth + 1);
  if (!cont_gcd) return std::nullopt;
  PPoly la = lc_wrt(*ppa, *main), lb = lc_wrt(*ppb, *main);
  std::optional<PPoly> gamma;
  if (la.constant() || lb.constant()) {
    PPoly one;
    one.nvars = a.nvars;
    one.terms.emplace(Expvec(a.nvars, 0), 1);
    gamma = one;
  } else {
    gamma = pgcd_top(la, lb, p, depth + 1);
    if (!gamma) return std::nullopt;
  }
  auto w = pgcd_imposed(*ppa, *ppb, *main, *gamma, p, depth + 1);
  if (!w) return std::nullopt;
  if (!w->depends_on(*main)) {
    // pp parts are coprime; the gcd is the content part alone.
    return monic(std::move(*cont_gcd));
  }
  auto cw = pcontent_wrt(*w, *main, p, depth);
  if (!cw) return std::nullopt;
  PPoly cand = *w;
  if (!cw->constant()) {
    auto q = pdivexact(*w, *cw, p);
    if (!q) return std::nullopt;
    cand = std::move(*q);
  }
  if (!pdivexact(*ppa, cand, p) || !pdivexact(*ppb, cand, p)) {
    return std::nullopt;
  }
  return monic(pmul(cand, *cont_gcd, p));
}

const std::vector<u64>& gcd_primes() {
  static std::vector<u64> primes;
  static std::once_flag once;
  std::call_once(once, [] {
    mpz_class p = mpz_class(1) << 62;
    mpz_class salt = 1234577;
    p += salt;
    for (int i = 0; i < 48; ++i) {
      mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
      primes.push_back(mpz_get_ui(p.get_mpz_t()));
    }
  });
  return primes;
}

mpz_class lex_lc_int(const MPoly& a) {
  const auto* lt = a.lex_leading();
  assert(lt->second.get_den() == 1);
  return lt->second.get_num();
}

}  // namespace

std::optional<MPoly> modular_multivariate_gcd(const MPoly& a,
                                              const MPoly& b) {
  mpz_class gamma;
  mpz_gcd(gamma.get_mpz_t(), lex_lc_int(a).get_mpz_t(),
          lex_lc_int(b).get_mpz_t());
  Expvec best_lead;
  bool have_lead = false;
  std::vector<std::pair<Expvec, mpz_class>> res;  // CRT accumulator
  mpz_class modulus = 1;
  for (u64 p : gcd_primes()) {
    if (mpz_fdiv_ui(gamma.get_mpz_t(), p) == 0) continue;
    PPoly ap = reduce_mod(a, p), bp = reduce_mod(b, p);
    if (ap.zero() || bp.zero()) continue;
    if (ap.lex_leading()->first != a.lex_leading()->first) continue;
    if (bp.lex_leading()->first != b.lex_leading()->first) continue;
    auto g = pgcd_top(ap, bp, p, 0);
    if (!g) continue;
    if (g->constant()) return MPoly::constant(a.nvars(), 1);
    u64 gmod = mpz_fdiv_ui(gamma.get_mpz_t(), p);
    PPoly scaled = pscale(*g, gmod, p);
    const Expvec& lead = scaled.lex_leading()->first;
    if (!have_lead || lead < best_lead) {
      have_lead = true;
      best_lead = lead;
      res.clear();
      modulus = 1;
    } else if (best_lead < lead) {
      continue;
    }
    // CRT combine scaled into res.
    if (modulus == 1) {
      res.clear();
      for (const auto& [e, c] : scaled.terms) res.emplace_back(e, mpz_class(c));
      modulus = p;
    } else {
      u64 minv = invmod(mpz_fdiv_ui(modulus.get_mpz_t(), p), p);
      // union of supports
      std::map<Expvec, std::pair<mpz_class, u64>> merged;
      for (const auto& [e, c] : res) merged[e].first = c;
      for (const auto& [e, c] : scaled.terms) merged[e].second = c;
      res.clear();
      for (auto& [e, pr] : merged) {
        u64 ri = mpz_fdiv_ui(pr.first.get_mpz_t(), p);
        u64 diff = submod(pr.second, ri, p);
        res.emplace_back(e, pr.first + modulus * mpz_class(mulmod(diff, minv, p)));
      }
      modulus *= p;
    }
    // symmetric lift, primitive part, certify
    MPoly cand(a.nvars());
    mpz_class half = modulus / 2;
    for (const auto& [e, c] : res) {
      mpz_class x = c % modulus;
      if (x < 0) x += modulus;
      if (x > half) x -= modulus;
      if (x != 0) cand.add_term(e, mpq_class(x));
    }
    if (cand.is_zero()) continue;
    cand.extract_content();
    if (MPoly::divide_exact(a, cand) && MPoly::divide_exact(b, cand)) {
      return cand;
    }
  }
  return std::nullopt;
}

}  // namespace spectral
