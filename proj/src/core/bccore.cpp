#include "core/bccore.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>
#include <cstdlib>
#include <exception>
#include <string>
#include <thread>
#include <utility>

#include "core/errors.hpp"

namespace spectral {

PhiEvaluator::PhiEvaluator(const GoodearlBasis& basis) : basis_(&basis) {
  const DiffField::Ptr& F = basis.L.field();
  lpow_.push_back(DiffOperator::one(F));
  gpow_.resize(basis.gens.size() - 1);
  for (auto& v : gpow_) v.push_back(DiffOperator::one(F));
}

const DiffOperator& PhiEvaluator::lambda_power(std::uint32_t k) const {
  while (lpow_.size() <= k) lpow_.push_back(lpow_.back() * basis_->L);
  return lpow_[k];
}

const DiffOperator& PhiEvaluator::gen_power(std::size_t slot,
                                            std::uint32_t k) const {
  auto& v = gpow_[slot];
  while (v.size() <= k) v.push_back(v.back() * basis_->gens[slot + 1]);
  return v[k];
}

DiffOperator PhiEvaluator::operator()(const SpectralPolynomial& p) const {
  const DiffField::Ptr& F = basis_->L.field();
  if (p.nmu() + 1 != static_cast<std::uint32_t>(basis_->t))
    fail(ErrorKind::ArityMismatch,
         "polynomial has " + std::to_string(p.nmu()) +
             " mu variables, basis provides " + std::to_string(basis_->t - 1));
  if (!p.field()->same(*F))
    fail(ErrorKind::FieldMismatch,
         "polynomial and basis live over different fields");
  DiffOperator acc = DiffOperator::zero(F);
  for (const auto& [m, c] : p.terms()) {
    if (!c.is_constant())
      fail(ErrorKind::Internal, "phi_L requires constant coefficients");
    DiffOperator term = DiffOperator::scalar(c) * lambda_power(m.lambda);
    for (std::size_t s = 0; s < m.mu.size(); ++s)
      if (m.mu[s] > 0) term = term * gen_power(s, m.mu[s]);
    acc += term;
  }
  return acc;
}

DiffOperator phi_L(const SpectralPolynomial& p, const GoodearlBasis& basis) {
  return PhiEvaluator(basis)(p);
}

ModuleCoordinates reduce_as_module(const DiffOperator& P,
                                   const GoodearlBasis& basis) {
  const DiffField::Ptr& F = basis.L.field();
  if (!P.field()->same(*F))
    fail(ErrorKind::FieldMismatch,
         "operator and basis live over different fields");
  const long n = basis.n;
  SpecContext ctx{F, static_cast<std::uint32_t>(basis.t - 1),
                  CoeffRing::ConstantsC};
  std::vector<SpectralPolynomial> coords(basis.gens.size(),
                                         SpectralPolynomial::zero(ctx));
  PhiEvaluator phi(basis);
  DiffOperator R = P;
  while (!R.is_zero()) {
    const long o = R.order();
    auto it = basis.class_map.find(o % n);
    if (it == basis.class_map.end())
      fail(ErrorKind::NotInCentralizerSpan,
           "order " + std::to_string(o) + " lies in class " +
               std::to_string(o % n) + ", outside the order group");
    const std::size_t idx = it->second;
    if (o < basis.orders[idx])
      fail(ErrorKind::NotInCentralizerSpan,
           "order " + std::to_string(o) + " is below G" + std::to_string(idx) +
               " of order " + std::to_string(basis.orders[idx]));
    FieldElement c = R.lc();
    if (!c.is_constant())
      fail(ErrorKind::NotInCentralizerSpan,
           "leading coefficient at order " + std::to_string(o) +
               " is not constant");
    const std::uint32_t k =
        static_cast<std::uint32_t>((o - basis.orders[idx]) / n);
    SpectralMonomial lk = SpectralMonomial::unit(ctx.nmu);
    lk.lambda = k;
    coords[idx] += SpectralPolynomial::monomial(ctx, lk, c);
    R -= DiffOperator::scalar(c) * phi.lambda_power(k) * basis.gens[idx];
  }
#ifndef NDEBUG
  {
    // Re-expand through phi_L; the coordinates must reproduce P exactly.
    SpectralPolynomial q = coords[0];
    for (std::size_t l = 1; l < coords.size(); ++l)
      q += coords[l] *
           SpectralPolynomial::mu_var(ctx, static_cast<std::uint32_t>(l - 1));
    assert(phi(q) == P);
  }
#endif
  return ModuleCoordinates{std::move(coords)};
}

WeightedOrder basis_order(const GoodearlBasis& basis) {
  std::vector<long> weights(basis.orders.begin() + 1, basis.orders.end());
  return WeightedOrder::make(basis.n, weights);
}

SpecContext BCBasis::context() const {
  return SpecContext{source.L.field(),
                     static_cast<std::uint32_t>(source.t - 1),
                     CoeffRing::ConstantsC};
}

std::vector<SpectralPolynomial> BCBasis::polys() const {
  std::vector<SpectralPolynomial> out;
  out.reserve(relations.size());
  for (const auto& r : relations) out.push_back(r.poly);
  return out;
}

namespace {

std::size_t worker_count(std::size_t tasks) {
  if (const char* s = std::getenv("SPECTRAL_KERNEL_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(s, &end, 10);
    if (end != s && v >= 1)
      return std::min<std::size_t>(static_cast<std::size_t>(v), tasks);
  }
  unsigned hw = std::thread::hardware_concurrency();
  return std::min<std::size_t>(hw ? hw : 1, tasks);
}

}  // namespace

BCBasis bc_ideal(const GoodearlBasis& basis) {
  if (basis.t < 2)
    fail(ErrorKind::Internal, "bc_ideal needs at least two basis elements");
  WeightedOrder ord = basis_order(basis);
  SpecContext ctx{basis.L.field(), static_cast<std::uint32_t>(basis.t - 1),
                  CoeffRing::ConstantsC};
  const FieldElement one = FieldElement::one(basis.L.field());

  struct Task {
    long i, j;
  };
  std::vector<Task> tasks;
  for (long i = 1; i < basis.t; ++i)
    for (long j = i; j < basis.t; ++j) tasks.push_back({i, j});

  std::vector<SpectralPolynomial> result(tasks.size(),
                                         SpectralPolynomial::zero(ctx));
  std::vector<std::exception_ptr> errors(tasks.size());

  auto run_one = [&](std::size_t idx) {
    const auto [i, j] = tasks[idx];
    ModuleCoordinates mc =
        reduce_as_module(basis.gens[i] * basis.gens[j], basis);
    SpectralMonomial mij = SpectralMonomial::unit(ctx.nmu);
    ++mij.mu[i - 1];
    ++mij.mu[j - 1];
    SpectralPolynomial R = SpectralPolynomial::monomial(ctx, mij, one);
    R -= mc.coords[0];
    for (long l = 1; l < basis.t; ++l)
      R -= mc.coords[l] *
           SpectralPolynomial::mu_var(ctx, static_cast<std::uint32_t>(l - 1));
    auto [lead, lc] = R.leading(ord);
    if (!(lead == mij) || !lc.is_one())
      fail(ErrorKind::Internal,
           "relation R_{" + std::to_string(i) + "," + std::to_string(j) +
               "} is not monic in mu_i mu_j");
    result[idx] = std::move(R);
  };

  const std::size_t nthreads = worker_count(tasks.size());
  if (nthreads <= 1) {
    for (std::size_t idx = 0; idx < tasks.size(); ++idx) run_one(idx);
  } else {
    std::atomic<std::size_t> next{0};
    auto loop = [&] {
      for (;;) {
        std::size_t idx = next.fetch_add(1);
        if (idx >= tasks.size()) return;
        try {
          run_one(idx);
        } catch (...) {
          errors[idx] = std::current_exception();
        }
      }
    };
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < nthreads; ++w) pool.emplace_back(loop);
    for (auto& th : pool) th.join();
    for (const auto& e : errors)
      if (e) std::rethrow_exception(e);
  }

  BCBasis out{basis, std::move(ord), {}};
  out.relations.reserve(tasks.size());
  for (std::size_t idx = 0; idx < tasks.size(); ++idx)
    out.relations.push_back(
        BCRelation{tasks[idx].i, tasks[idx].j, std::move(result[idx])});
  return out;
}

MembershipResult bc_membership(const SpectralPolynomial& p, const BCBasis& bc) {
  if (p.nmu() != bc.context().nmu)
    fail(ErrorKind::ArityMismatch,
         "polynomial has " + std::to_string(p.nmu()) +
             " mu variables, ideal has " + std::to_string(bc.context().nmu));
  if (!p.field()->same(*bc.context().field))
    fail(ErrorKind::FieldMismatch,
         "polynomial and ideal live over different fields");
  DivisionResult d = poly_divide(p, bc.polys(), bc.order);
  bool member = d.normal_form.is_zero();
  return MembershipResult{member, std::move(d.normal_form)};
}

SpectralPolynomial quotient_product_normal_form(const SpectralPolynomial& f1,
                                                const SpectralPolynomial& f2,
                                                const BCBasis& bc) {
  if (!f1.is_mu_linear() || !f2.is_mu_linear())
    fail(ErrorKind::InputNotReduced,
         "quotient arithmetic expects inputs already reduced (linear in mu)");
  return poly_divide(f1 * f2, bc.polys(), bc.order).normal_form;
}

}  // namespace spectral
