#include "core/specpoly.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <sstream>

#include "core/errors.hpp"

namespace spectral {

bool SpectralMonomial::is_unit() const {
  if (lambda != 0) return false;
  for (auto e : mu)
    if (e != 0) return false;
  return true;
}

long SpectralMonomial::deg_mu() const {
  long d = 0;
  for (auto e : mu) d += e;
  return d;
}

bool SpectralMonomial::divides(const SpectralMonomial& m) const {
  assert(mu.size() == m.mu.size());
  if (lambda > m.lambda) return false;
  for (std::size_t i = 0; i < mu.size(); ++i)
    if (mu[i] > m.mu[i]) return false;
  return true;
}

SpectralMonomial SpectralMonomial::operator*(const SpectralMonomial& o) const {
  assert(mu.size() == o.mu.size());
  SpectralMonomial r;
  r.lambda = lambda + o.lambda;
  r.mu.resize(mu.size());
  for (std::size_t i = 0; i < mu.size(); ++i) r.mu[i] = mu[i] + o.mu[i];
  return r;
}

SpectralMonomial SpectralMonomial::quotient(const SpectralMonomial& o) const {
  assert(o.divides(*this));
  SpectralMonomial r;
  r.lambda = lambda - o.lambda;
  r.mu.resize(mu.size());
  for (std::size_t i = 0; i < mu.size(); ++i) r.mu[i] = mu[i] - o.mu[i];
  return r;
}

SpectralMonomial SpectralMonomial::lcm(const SpectralMonomial& a,
                                       const SpectralMonomial& b) {
  assert(a.mu.size() == b.mu.size());
  SpectralMonomial r;
  r.lambda = std::max(a.lambda, b.lambda);
  r.mu.resize(a.mu.size());
  for (std::size_t i = 0; i < a.mu.size(); ++i)
    r.mu[i] = std::max(a.mu[i], b.mu[i]);
  return r;
}

SpectralMonomial SpectralMonomial::unit(std::uint32_t nmu) {
  SpectralMonomial m;
  m.mu.assign(nmu, 0);
  return m;
}

std::string SpectralMonomial::to_string() const {
  std::ostringstream out;
  bool any = false;
  auto emit = [&](const std::string& v, std::uint32_t e) {
    if (e == 0) return;
    if (any) out << "*";
    out << v;
    if (e > 1) out << "^" << e;
    any = true;
  };
  emit("l", lambda);
  for (std::size_t i = 0; i < mu.size(); ++i)
    emit("mu" + std::to_string(i + 1), mu[i]);
  return any ? out.str() : "1";
}

WeightedOrder WeightedOrder::make(long n, std::vector<long> weights) {
  if (n < 1) fail(ErrorKind::Internal, "weighted order needs n >= 1");
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (weights[i] <= 0)
      fail(ErrorKind::Internal, "mu weights must be positive");
    if (weights[i] % n == 0)
      fail(ErrorKind::Internal, "mu weight divisible by n");
    for (std::size_t j = 0; j < i; ++j)
      if ((weights[i] - weights[j]) % n == 0)
        fail(ErrorKind::Internal, "mu weights collide mod n");
  }
  WeightedOrder o;
  o.n_ = n;
  o.w_ = std::move(weights);
  o.desc_.resize(o.w_.size());
  std::iota(o.desc_.begin(), o.desc_.end(), std::size_t{0});
  std::sort(o.desc_.begin(), o.desc_.end(),
            [&](std::size_t a, std::size_t b) { return o.w_[a] > o.w_[b]; });
  return o;
}

long WeightedOrder::mu_weight(const SpectralMonomial& m) const {
  assert(m.mu.size() == w_.size());
  long w = 0;
  for (std::size_t i = 0; i < w_.size(); ++i) w += m.mu[i] * w_[i];
  return w;
}

long mono_weight(const SpectralMonomial& m, const WeightedOrder& ord) {
  return m.lambda * ord.n() + ord.mu_weight(m);
}

std::strong_ordering mono_compare(const SpectralMonomial& a,
                                  const SpectralMonomial& b,
                                  const WeightedOrder& ord) {
  const long wa = ord.mu_weight(a), wb = ord.mu_weight(b);
  if (wa != wb) return wa <=> wb;
  // Equal mu-weight: lex from the highest-weight mu down, larger
  // exponent wins.
  for (std::size_t s : ord.desc_) {
    if (a.mu[s] != b.mu[s]) return a.mu[s] <=> b.mu[s];
  }
  return a.lambda <=> b.lambda;
}

std::optional<SpectralMonomial> monomial_of_weight(long W,
                                                   const WeightedOrder& ord) {
  assert(W >= 0);
  const long n = ord.n();
  SpectralMonomial m = SpectralMonomial::unit(ord.nmu());
  if (W % n == 0) {
    m.lambda = static_cast<std::uint32_t>(W / n);
    return m;
  }
  for (std::size_t s = 0; s < ord.nmu(); ++s) {
    if ((W - ord.weight(s)) % n == 0) {
      const long a = (W - ord.weight(s)) / n;
      if (a < 0) return std::nullopt;
      m.lambda = static_cast<std::uint32_t>(a);
      m.mu[s] = 1;
      return m;
    }
  }
  return std::nullopt;
}

bool SpecContext::compatible(const SpecContext& o) const {
  return field && o.field && field->same(*o.field) && nmu == o.nmu;
}

SpecContext SpecContext::promoted(const SpecContext& o) const {
  SpecContext r = *this;
  if (o.ring == CoeffRing::FullK) r.ring = CoeffRing::FullK;
  return r;
}

SpectralPolynomial SpectralPolynomial::zero(SpecContext ctx) {
  return SpectralPolynomial(std::move(ctx));
}

SpectralPolynomial SpectralPolynomial::constant(SpecContext ctx,
                                                FieldElement c) {
  SpectralPolynomial p(std::move(ctx));
  p.add_term(SpectralMonomial::unit(p.ctx_.nmu), c);
  return p;
}

SpectralPolynomial SpectralPolynomial::rational(SpecContext ctx,
                                                const mpq_class& q) {
  FieldElement c = FieldElement::rational(ctx.field, q);
  return constant(std::move(ctx), c);
}

SpectralPolynomial SpectralPolynomial::lambda_pow(SpecContext ctx,
                                                  std::uint32_t k) {
  SpectralPolynomial p(std::move(ctx));
  SpectralMonomial m = SpectralMonomial::unit(p.ctx_.nmu);
  m.lambda = k;
  p.add_term(m, FieldElement::one(p.ctx_.field));
  return p;
}

SpectralPolynomial SpectralPolynomial::mu_var(SpecContext ctx,
                                              std::uint32_t slot) {
  assert(slot < ctx.nmu);
  SpectralPolynomial p(std::move(ctx));
  SpectralMonomial m = SpectralMonomial::unit(p.ctx_.nmu);
  m.mu[slot] = 1;
  p.add_term(m, FieldElement::one(p.ctx_.field));
  return p;
}

SpectralPolynomial SpectralPolynomial::monomial(SpecContext ctx,
                                                SpectralMonomial m,
                                                FieldElement c) {
  assert(m.mu.size() == ctx.nmu);
  SpectralPolynomial p(std::move(ctx));
  p.add_term(m, c);
  return p;
}

FieldElement SpectralPolynomial::coeff(const SpectralMonomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? FieldElement::zero(ctx_.field) : it->second;
}

long SpectralPolynomial::deg_mu() const {
  long d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.deg_mu());
  return d;
}

long SpectralPolynomial::deg_lambda() const {
  long d = 0;
  for (const auto& [m, c] : terms_)
    d = std::max(d, static_cast<long>(m.lambda));
  return d;
}

void SpectralPolynomial::add_term(const SpectralMonomial& m,
                                  const FieldElement& c) {
  if (c.is_zero()) return;
  assert(ctx_.ring == CoeffRing::FullK || c.is_constant());
  auto [it, fresh] = terms_.emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

SpectralPolynomial SpectralPolynomial::operator-() const {
  SpectralPolynomial r(ctx_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

SpectralPolynomial operator+(const SpectralPolynomial& a,
                             const SpectralPolynomial& b) {
  assert(a.ctx_.compatible(b.ctx_));
  SpectralPolynomial r(a.ctx_.promoted(b.ctx_));
  r.terms_ = a.terms_;
  for (const auto& [m, c] : b.terms_) {
    auto [it, fresh] = r.terms_.emplace(m, c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) r.terms_.erase(it);
    }
  }
  return r;
}

SpectralPolynomial operator-(const SpectralPolynomial& a,
                             const SpectralPolynomial& b) {
  return a + (-b);
}

SpectralPolynomial operator*(const SpectralPolynomial& a,
                             const SpectralPolynomial& b) {
  assert(a.ctx_.compatible(b.ctx_));
  SpectralPolynomial r(a.ctx_.promoted(b.ctx_));
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
  return r;
}

SpectralPolynomial SpectralPolynomial::mul_coeff(const FieldElement& c) const {
  SpectralPolynomial r(ctx_);
  if (!c.is_constant()) r.ctx_.ring = CoeffRing::FullK;
  if (c.is_zero()) return r;
  for (const auto& [m, x] : terms_) r.add_term(m, c * x);
  return r;
}

SpectralPolynomial SpectralPolynomial::mul_monomial(
    const SpectralMonomial& m) const {
  SpectralPolynomial r(ctx_);
  for (const auto& [mm, c] : terms_) r.terms_.emplace(mm * m, c);
  return r;
}

bool operator==(const SpectralPolynomial& a, const SpectralPolynomial& b) {
  if (!a.ctx_.compatible(b.ctx_)) return false;
  if (a.terms_.size() != b.terms_.size()) return false;
  auto ia = a.terms_.begin();
  auto ib = b.terms_.begin();
  for (; ia != a.terms_.end(); ++ia, ++ib)
    if (ia->first != ib->first || !(ia->second == ib->second)) return false;
  return true;
}

std::pair<SpectralMonomial, FieldElement> SpectralPolynomial::leading(
    const WeightedOrder& ord) const {
  assert(!terms_.empty());
  auto best = terms_.begin();
  for (auto it = std::next(best); it != terms_.end(); ++it)
    if (mono_compare(it->first, best->first, ord) > 0) best = it;
  return {best->first, best->second};
}

SpectralPolynomial SpectralPolynomial::derive() const {
  SpectralPolynomial r(ctx_);
  for (const auto& [m, c] : terms_) r.add_term(m, c.derive());
  return r;
}

std::optional<SpectralPolynomial> SpectralPolynomial::divide_exact(
    const SpectralPolynomial& a, const SpectralPolynomial& b) {
  assert(a.ctx_.compatible(b.ctx_));
  if (b.is_zero()) return std::nullopt;
  SpectralPolynomial q(a.ctx_.promoted(b.ctx_));
  SpectralPolynomial r = a;
  const auto& [mb, cb] = *b.terms_.rbegin();
  while (!r.is_zero()) {
    const auto& [mr, cr] = *r.terms_.rbegin();
    if (!mb.divides(mr)) return std::nullopt;
    SpectralPolynomial piece =
        monomial(q.ctx_, mr.quotient(mb), cr / cb);
    q += piece;
    r -= piece * b;
  }
  return q;
}

std::string SpectralPolynomial::to_string(const WeightedOrder& ord) const {
  if (terms_.empty()) return "0";
  std::vector<const std::pair<const SpectralMonomial, FieldElement>*> ts;
  ts.reserve(terms_.size());
  for (const auto& t : terms_) ts.push_back(&t);
  std::sort(ts.begin(), ts.end(), [&](auto* x, auto* y) {
    return mono_compare(x->first, y->first, ord) > 0;
  });
  std::ostringstream out;
  bool first = true;
  for (auto* t : ts) {
    FieldElement::FactorText f = t->second.render_factor();
    std::string mono = t->first.to_string();
    std::string body;
    if (mono == "1")
      body = f.text;
    else if (f.text == "1")
      body = mono;
    else
      body = f.text + "*" + mono;
    if (first) {
      out << (f.neg ? "-" : "") << body;
      first = false;
    } else {
      out << (f.neg ? " - " : " + ") << body;
    }
  }
  return out.str();
}

DivisionResult poly_divide(const SpectralPolynomial& p,
                           const std::vector<SpectralPolynomial>& basis,
                           const WeightedOrder& ord) {
  SpecContext ctx = p.ctx();
  std::vector<std::pair<SpectralMonomial, FieldElement>> leads;
  leads.reserve(basis.size());
  for (const auto& b : basis) {
    assert(!b.is_zero());
    ctx = ctx.promoted(b.ctx());
    leads.push_back(b.leading(ord));
  }
  DivisionResult res{std::vector<SpectralPolynomial>(
                         basis.size(), SpectralPolynomial::zero(ctx)),
                     SpectralPolynomial::zero(ctx) + p};
  SpectralPolynomial& r = res.normal_form;
  for (;;) {
    // Largest reducible monomial of r, then the first basis element whose
    // leading monomial divides it.
    const SpectralMonomial* target = nullptr;
    std::size_t who = 0;
    for (const auto& [m, c] : r.terms()) {
      std::size_t d = leads.size();
      for (std::size_t i = 0; i < leads.size(); ++i)
        if (leads[i].first.divides(m)) {
          d = i;
          break;
        }
      if (d == leads.size()) continue;
      if (!target || mono_compare(m, *target, ord) > 0) {
        target = &m;
        who = d;
      }
    }
    if (!target) break;
    const FieldElement c = r.coeff(*target);
    SpectralPolynomial piece = SpectralPolynomial::monomial(
        ctx, target->quotient(leads[who].first), c / leads[who].second);
    res.quotients[who] += piece;
    r -= piece * basis[who];
  }
  return res;
}

SpectralPolynomial s_polynomial(const SpectralPolynomial& f,
                                const SpectralPolynomial& g,
                                const WeightedOrder& ord) {
  assert(!f.is_zero() && !g.is_zero());
  const auto [mf, cf] = f.leading(ord);
  const auto [mg, cg] = g.leading(ord);
  const SpectralMonomial l = SpectralMonomial::lcm(mf, mg);
  return f.mul_monomial(l.quotient(mf)).mul_coeff(cg) -
         g.mul_monomial(l.quotient(mg)).mul_coeff(cf);
}

bool is_groebner(const std::vector<SpectralPolynomial>& basis,
                 const WeightedOrder& ord) {
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      SpectralPolynomial s = s_polynomial(basis[i], basis[j], ord);
      if (s.is_zero()) continue;
      if (!poly_divide(s, basis, ord).normal_form.is_zero()) return false;
    }
  return true;
}

}  // namespace spectral
