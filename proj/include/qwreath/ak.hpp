#pragma once

/// The modified Ariki-Koike family: B = K[t]/prod_i (t - u_i) with
/// S = (v - v^{-1}) 1(x)1, R = 1(x)1, sigma = flip, and rho determined on the
/// generator by Lagrange interpolation,
///   rho(t(x)1) = -(S/Delta^2) sum_{i<j} (u_j - u_i) F_i(t(x)1) F_j(1(x)t),
/// then extended to the power basis by the twisted Leibniz rule
/// rho(xy) = sigma(x)rho(y) + rho(x)y.  Construction verifies the full
/// presentation-condition suite and throws ConditionsFailed otherwise.

#include "qwreath/ground.hpp"
#include "qwreath/partition.hpp"

namespace qwreath {

class AKFamily {
 public:
  explicit AKFamily(std::vector<RatFunc> u) : cq_(cyclic_quotient_algebra(u)) {
    build_rho();
    ConditionReport rep = verify_pbw_conditions(params(3));
    if (!rep.all_pass()) {
      std::string what = "Ariki-Koike parameters violate the presentation conditions:\n" + rep.str();
      throw ConditionsFailed(what);
    }
  }

  int m() const { return static_cast<int>(cq_.u.size()); }
  const CyclicQuotient& cyclic() const { return cq_; }
  const AlgebraPtr& base() const { return cq_.alg; }
  const Matrix& rho() const { return rho_; }

  QWPParams params(int d) const {
    const RatFunc vv = RatFunc::v() - RatFunc::v(-1);
    return QWPParams{base(), d, sv_scale(vv, sv_unit(0)), sv_unit(0), flip_sigma(base()), rho_};
  }

  const std::shared_ptr<const QWP>& ambient(int d) const {
    auto it = ambients_.find(d);
    if (it != ambients_.end()) return it->second;
    return ambients_.emplace(d, std::make_shared<const QWP>(params(d))).first->second;
  }

  const AlgebraPtr& wreath_algebra(int d) const {
    auto it = walgs_.find(d);
    if (it != walgs_.end()) return it->second;
    return walgs_.emplace(d, qwp_algebra(*ambient(d))).first->second;
  }

  /// The one-dimensional base module K_a on which t acts by u_a (1-based).
  ModuleRep simple_base(int a) const {
    std::map<int, Matrix> action;
    for (int g : base()->generators())
      action[g] = Matrix::scalar(1, g == 1 ? cq_.u[static_cast<size_t>(a - 1)] : RatFunc(1));
    return ModuleRep(base(), 1, std::move(action));
  }

  /// Ground-module data for K_a with sigma^M = s, rho^M = r (scalars).
  GroundModuleData ground(int d, int a, const RatFunc& s, const RatFunc& r) const {
    return GroundModuleData(ambient(d), simple_base(a), Matrix::scalar(1, s), Matrix::scalar(1, r),
                            RatFunc::v() - RatFunc::v(-1), RatFunc(1));
  }

  const IBPoset& poset() const {
    if (!poset_) poset_ = std::make_unique<IBPoset>(IBPoset::total_order(m()));
    return *poset_;
  }

 private:
  void build_rho() {
    const int n = base()->dim();
    const FiniteAlgebra& B = *base();
    const RatFunc vv = RatFunc::v() - RatFunc::v(-1);
    auto mul = [&](const SparseVec& x, const SparseVec& y) { return pw_mult(B, 2, x, y); };
    // flip of the power-basis monomial t^a (x) t^b
    auto flip_basis = [&](int idx) { return sv_unit((idx % n) * n + idx / n); };
    auto F_left = [&](int i) {  // F_i(t (x) 1)
      SparseVec out;
      for (int k = 0; k < n; ++k) {
        const RatFunc& c = cq_.F[static_cast<size_t>(i)][static_cast<size_t>(k)];
        if (!c.is_zero()) out[k * n] = c;
      }
      return out;
    };
    auto F_right = [&](int j) {  // F_j(1 (x) t)
      SparseVec out;
      for (int k = 0; k < n; ++k) {
        const RatFunc& c = cq_.F[static_cast<size_t>(j)][static_cast<size_t>(k)];
        if (!c.is_zero()) out[k] = c;
      }
      return out;
    };
    SparseVec rho_t1;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        sv_add_scaled(rho_t1, (cq_.u[static_cast<size_t>(j)] - cq_.u[static_cast<size_t>(i)]),
                      mul(F_left(i), F_right(j)));
    rho_t1 = sv_scale(-vv / (cq_.Delta * cq_.Delta), rho_t1);
    // rho(1 (x) t) is forced by the quadratic-compatibility condition:
    // rho(sigma(x)) + sigma(rho(x)) = (v - v^{-1})(sigma(x) - x).
    SparseVec rho_t2;
    sv_add_scaled(rho_t2, vv, sv_unit(1));       // 1 (x) t
    sv_add_scaled(rho_t2, -vv, sv_unit(n));      // t (x) 1
    for (const auto& [idx, c] : rho_t1) sv_add_scaled(rho_t2, -c, flip_basis(idx));
    // Extend over the power basis t^a (x) t^b, peeling one generator at a time.
    std::vector<SparseVec> images(static_cast<size_t>(n * n));
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        if (a == 0 && b == 0) continue;
        int idx = a * n + b;
        int prev = b > 0 ? a * n + (b - 1) : (a - 1) * n;
        const SparseVec& rho_g = b > 0 ? rho_t2 : rho_t1;
        SparseVec g = sv_unit(b > 0 ? 1 : n);
        SparseVec out = mul(flip_basis(prev), rho_g);
        sv_add_scaled(out, RatFunc(1), mul(images[static_cast<size_t>(prev)], g));
        images[static_cast<size_t>(idx)] = std::move(out);
      }
    rho_ = Matrix(n * n, n * n);
    for (int idx = 0; idx < n * n; ++idx)
      for (const auto& [i, c] : images[static_cast<size_t>(idx)]) rho_.at(i, idx) = c;
  }

  CyclicQuotient cq_;
  Matrix rho_;
  mutable std::map<int, std::shared_ptr<const QWP>> ambients_;
  mutable std::map<int, AlgebraPtr> walgs_;
  mutable std::unique_ptr<IBPoset> poset_;
};

/// The simple module L(lam) at generic parameters: the parabolic induction of
/// the outer tensor of K_{a_i} wr S^{nu^(i)} blocks, with the ground twist
/// sigma^M = 1, rho^M = 0.
inline ModuleRep ak_simple(const AKFamily& fam, int d, const Multipartition& lam) {
  if (lam.degree() != d) throw std::invalid_argument("multipartition degree mismatch");
  auto [mu, labels] = multipartition_shape(lam, fam.poset());
  const QWP& A = *fam.ambient(d);
  const RatFunc vv = RatFunc::v() - RatFunc::v(-1);
  std::vector<ModuleRep> blocks;
  for (size_t i = 0; i < mu.size(); ++i) {
    int a = labels[i] + 1;
    Partition nu_i = lam.value(labels[i]);
    if (mu[i] == 1) {
      blocks.push_back(fam.simple_base(a));
    } else {
      GroundModuleData gm = fam.ground(mu[i], a, RatFunc(1), RatFunc(0));
      HeckeLike tH = twisted_hecke(mu[i], vv, RatFunc(1));
      blocks.push_back(wreath_module(gm, fam.wreath_algebra(mu[i]), tH, twisted_specht(tH, nu_i).module));
    }
  }
  AlgebraPtr par = parabolic_algebra(A, mu);
  ModuleRep V = parabolic_outer_tensor(A, mu, par, blocks);
  return parabolic_induce(A, mu, par, V, fam.wreath_algebra(d));
}

/// Generic Ariki-Koike parameters u_i = v^{4i} (pairwise distinct, Laurent).
inline std::vector<RatFunc> ak_generic_u(int m) {
  std::vector<RatFunc> u;
  for (int i = 1; i <= m; ++i) u.push_back(RatFunc::v(4 * i));
  return u;
}

}  // namespace qwreath
