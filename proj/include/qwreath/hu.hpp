#pragma once

/// The Hu family: B = H_q(Sigma_m) with S = 0, R = Z_m, sigma = flip,
/// rho = 0.  Z_m is computed as iota(H_1^2) inside H_q(Sigma_{2m}) and
/// re-expressed in the B (x) B basis; f_{lam,lam'} is the scalar by which
/// Z_m acts on S^lam (x) S^lam'.  Specht modules over the wreath product are
/// parabolic inductions of wreath modules S^lam wr S^nu.

#include "qwreath/ground.hpp"
#include "qwreath/partition.hpp"

namespace qwreath {

class NonScalarAction : public std::runtime_error {
 public:
  explicit NonScalarAction(const std::string& what) : std::runtime_error(what) {}
};

/// The doubled generator H_1 = v^{m(2m-1)} sum_{eps in {+,-}^m}
/// I^{eps_1}_{m -> 2m-1} ... I^{eps_m}_{1 -> m} C_eps inside H_q(Sigma_{2m}),
/// where I^+ chains multiply the generators upward, I^- uses inverses
/// (T^{-1} = T - (v - v^{-1})), and C_eps is the palindromic correction
/// factor for each minus sign.
inline SparseVec hu_H1(const HeckeLike& H2m, int m) {
  const AlgebraPtr& A = H2m.alg;
  if (H2m.d != 2 * m) throw std::invalid_argument("ambient algebra must be H_q(Sigma_{2m})");
  const RatFunc vv = RatFunc::v() - RatFunc::v(-1);
  auto gen = [&](int i, bool inverse) {
    SparseVec g = H2m.h_gen(i);
    if (inverse) sv_add_scaled(g, -vv, A->one());
    return g;
  };
  SparseVec total;
  for (int mask = 0; mask < (1 << m); ++mask) {
    SparseVec term = A->one();
    for (int i = 1; i <= m; ++i) {
      bool plus = ((mask >> (i - 1)) & 1) == 0;
      // I^{eps_i}_{(m+1-i) -> (2m-i)}
      for (int k = m + 1 - i; k <= 2 * m - i; ++k) term = A->mult(term, gen(k, !plus));
    }
    for (int i = 1; i <= m; ++i) {
      bool plus = ((mask >> (i - 1)) & 1) == 0;
      if (plus) continue;
      for (int k = 2 * m - i; k >= m + 1; --k) term = A->mult(term, gen(k, false));
      for (int k = m + 1; k <= 2 * m - i; ++k) term = A->mult(term, gen(k, false));
    }
    sv_add_scaled(total, RatFunc(1), term);
  }
  return sv_scale(RatFunc::v(m * (2 * m - 1)), total);
}

/// Re-express an element of H_q(Sigma_{2m}) supported on Sigma_m x Sigma_m
/// in the B (x) B basis via the block identification.
inline SparseVec hu_iota_inverse(const HeckeLike& H2m, const HeckeLike& B, int m, const SparseVec& z) {
  SparseVec out;
  for (const auto& [idx, c] : z) {
    const Perm& w = H2m.perm(idx);
    std::vector<int> left(static_cast<size_t>(m)), right(static_cast<size_t>(m));
    for (int k = 1; k <= m; ++k) {
      if (w(k) > m || w(m + k) <= m)
        throw std::logic_error("element is not supported on the block subgroup");
      left[static_cast<size_t>(k - 1)] = w(k);
      right[static_cast<size_t>(k - 1)] = w(m + k) - m;
    }
    int t = B.idx(Perm(left)) * B.alg->dim() + B.idx(Perm(right));
    sv_add_scaled(out, c, sv_unit(t));
  }
  return out;
}

struct HuCentralReport {
  SparseVec Zm;          // in the B (x) B basis
  bool central = false;  // commutes with every basis element of B (x) B
  std::string witness;
};

class HuFamily {
 public:
  explicit HuFamily(int m) : m_(m), B_(hecke_algebra(m)) {
    if (m < 1 || m > 3) throw SizeLimitExceeded("Hu central elements computed for m <= 3 only");
    HeckeLike H2m = hecke_algebra(2 * m);
    SparseVec h1 = hu_H1(H2m, m);
    Zm_ = hu_iota_inverse(H2m, B_, m, H2m.alg->mult(h1, h1));
  }

  int m() const { return m_; }
  const HeckeLike& B() const { return B_; }
  const AlgebraPtr& base() const { return B_.alg; }
  const SparseVec& Zm() const { return Zm_; }

  HuCentralReport central_report() const {
    HuCentralReport rep;
    rep.Zm = Zm_;
    rep.central = true;
    const int nn = base()->dim() * base()->dim();
    for (int t = 0; t < nn; ++t) {
      SparseVec e = sv_unit(t);
      if (pw_mult(*base(), 2, Zm_, e) != pw_mult(*base(), 2, e, Zm_)) {
        rep.central = false;
        rep.witness = pw_label(*base(), 2, t);
        break;
      }
    }
    return rep;
  }

  QWPParams params(int d) const {
    const int nn = base()->dim() * base()->dim();
    return QWPParams{base(), d, SparseVec{}, Zm_, flip_sigma(base()), Matrix(nn, nn)};
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

  const SpechtData& specht(const Partition& lam) const {
    auto it = spechts_.find(lam);
    if (it != spechts_.end()) return it->second;
    return spechts_.emplace(lam, twisted_specht(B_, lam)).first->second;
  }

  /// The scalar by which Z_m acts on S^lam (x) S^lam'.
  RatFunc f(const Partition& lam, const Partition& lam2) const {
    auto key = std::make_pair(lam, lam2);
    auto it = fcache_.find(key);
    if (it != fcache_.end()) return it->second;
    const ModuleRep& M1 = specht(lam).module;
    const ModuleRep& M2 = specht(lam2).module;
    const int n = base()->dim();
    Matrix act(M1.dim() * M2.dim(), M1.dim() * M2.dim());
    for (const auto& [t, c] : Zm_) act = act + c * kron(M1.act_basis(t / n), M2.act_basis(t % n));
    RatFunc scalar = act.rows() > 0 ? act.at(0, 0) : RatFunc(0);
    if (act != Matrix::scalar(act.rows(), scalar))
      throw NonScalarAction("Z_m does not act by a scalar on S^" + lam.str() + " (x) S^" + lam2.str());
    return fcache_.emplace(key, scalar).first->second;
  }

  /// The Laurent-polynomial square root of f_{lam,lam}.
  RatFunc sqrt_f(const Partition& lam) const { return split_quadratic(RatFunc(0), f(lam, lam)).first; }

  /// Ground-module data for M = S^lam: sigma^M = flip, rho^M = 0,
  /// chi = (0, f_lam).
  GroundModuleData ground(int d, const Partition& lam) const {
    const ModuleRep& M = specht(lam).module;
    const int mm = M.dim() * M.dim();
    return GroundModuleData(ambient(d), M, tensor_flip(M.dim()), Matrix(mm, mm), RatFunc(0), f(lam, lam));
  }

  const IBPoset& poset() const {
    if (!poset_) poset_ = std::make_unique<IBPoset>(IBPoset::partition_dominance(m_));
    return *poset_;
  }

  Partition label_partition(int label) const { return all_partitions(m_)[static_cast<size_t>(label)]; }

  int label_of(const Partition& lam) const {
    auto ps = all_partitions(m_);
    for (size_t i = 0; i < ps.size(); ++i)
      if (ps[i] == lam) return static_cast<int>(i);
    throw std::invalid_argument("not a partition of m");
  }

 private:
  int m_;
  HeckeLike B_;
  SparseVec Zm_;
  mutable std::map<int, std::shared_ptr<const QWP>> ambients_;
  mutable std::map<int, AlgebraPtr> walgs_;
  mutable std::map<Partition, SpechtData> spechts_;
  mutable std::map<std::pair<Partition, Partition>, RatFunc> fcache_;
  mutable std::unique_ptr<IBPoset> poset_;
};

/// The Specht module S^lam over the wreath product at degree d: the
/// parabolic induction of the outer tensor of S^{lam_i} wr S^{nu_i} blocks.
inline ModuleRep hu_specht(const HuFamily& fam, int d, const Multipartition& lam) {
  if (lam.degree() != d) throw std::invalid_argument("multipartition degree mismatch");
  auto [mu, labels] = multipartition_shape(lam, fam.poset());
  const QWP& A = *fam.ambient(d);
  std::vector<ModuleRep> blocks;
  for (size_t i = 0; i < mu.size(); ++i) {
    Partition lam_i = fam.label_partition(labels[i]);
    Partition nu_i = lam.value(labels[i]);
    if (mu[i] == 1) {
      blocks.push_back(fam.specht(lam_i).module);
    } else {
      GroundModuleData gm = fam.ground(mu[i], lam_i);
      HeckeLike tH = twisted_hecke(mu[i], RatFunc(0), fam.f(lam_i, lam_i));
      blocks.push_back(wreath_module(gm, fam.wreath_algebra(mu[i]), tH, twisted_specht(tH, nu_i).module));
    }
  }
  AlgebraPtr par = parabolic_algebra(A, mu);
  ModuleRep V = parabolic_outer_tensor(A, mu, par, blocks);
  return parabolic_induce(A, mu, par, V, fam.wreath_algebra(d));
}

/// Convert a verified wreath-product (anti)automorphism to an AlgebraMap on
/// the materialized algebra (basis order must match parabolic_algebra).
inline AlgebraMap wreath_map_to_algebra_map(const QWP& A, const AlgebraPtr& walg, const WreathMap& phi) {
  auto group = all_perms(A.d());
  std::sort(group.begin(), group.end(), [](const Perm& a, const Perm& b) {
    return a.length() != b.length() ? a.length() < b.length() : a < b;
  });
  std::map<Perm, int> pidx;
  for (size_t k = 0; k < group.size(); ++k) pidx[group[k]] = static_cast<int>(k);
  const int nd = A.tensor_dim();
  AlgebraMap out{walg, {}, phi.anti};
  out.images.resize(static_cast<size_t>(walg->dim()));
  for (const Perm& w : group)
    for (int t = 0; t < nd; ++t) {
      SparseVec img;
      for (const auto& [z, b] : phi.apply(A, A.monomial(sv_unit(t), w)))
        for (const auto& [tt, c] : b) img[pidx.at(z) * nd + tt] = c;
      out.images[static_cast<size_t>(pidx.at(w) * nd + t)] = std::move(img);
    }
  return out;
}

/// The duality automorphism of the Hu wreath algebra.  The K-linear rule
/// H_i -> -H_i + S_i fails sigma(R) = R^# here because Z_m is rescaled by a
/// power of q under the base automorphism composed with bar; the genuine
/// automorphism is semilinear: v -> v^{-1}, b componentwise I_w -> (-1)^l
/// I_{w^{-1}}^{-1}, and H_i -> -v^{-2m(2m-1)} H_i.  Verified multiplicative
/// and bijective before returning.
inline AlgebraMap hu_sharp_map(const HuFamily& fam, int d) {
  const AlgebraPtr& walg = fam.wreath_algebra(d);
  const HeckeLike& B = fam.B();
  const int n = B.alg->dim(), nd = power_dim(n, d);
  // Semilinear base component: bar composed with #.  On H_q(Sigma_2) this is
  // simply I -> -I with v -> v^{-1}.
  AlgebraMap base = hecke_bar(B).compose(hecke_sharp(B));
  const RatFunc alpha = -RatFunc::v(-2 * fam.m() * (2 * fam.m() - 1));
  auto group = all_perms(d);
  std::sort(group.begin(), group.end(), [](const Perm& a, const Perm& b) {
    return a.length() != b.length() ? a.length() < b.length() : a < b;
  });
  AlgebraMap out{walg, {}, false, true};
  out.images.resize(static_cast<size_t>(walg->dim()));
  for (size_t k = 0; k < group.size(); ++k) {
    RatFunc apow(1);
    for (int l = 0; l < group[k].length(); ++l) apow = apow * alpha;
    for (int t = 0; t < nd; ++t) {
      auto tup = tensor_tuple(t, n, d);
      std::vector<std::pair<int, RatFunc>> cur{{0, apow}};
      for (int p = 0; p < d; ++p) {
        std::vector<std::pair<int, RatFunc>> next;
        for (const auto& [idx, cc] : cur)
          for (const auto& [j, cj] : base.images[static_cast<size_t>(tup[static_cast<size_t>(p)])])
            next.push_back({idx * n + j, cc * cj});
        cur = std::move(next);
      }
      SparseVec img;
      for (const auto& [idx, cc] : cur) sv_add_scaled(img, cc, sv_unit(static_cast<int>(k) * nd + idx));
      out.images[static_cast<size_t>(k) * static_cast<size_t>(nd) + static_cast<size_t>(t)] = std::move(img);
    }
  }
  std::string witness;
  if (!out.verify(&witness)) throw std::logic_error("Hu duality map is not multiplicative at " + witness);
  if (!out.is_bijective()) throw std::logic_error("Hu duality map is not bijective");
  return out;
}

/// (S^lam)^# vs the dual Specht module of the transposed multipartition.
inline IsoResult hu_dual_specht_check(const HuFamily& fam, int d, const Multipartition& lam,
                                      const AlgebraMap& sharp, const AlgebraMap& star, unsigned seed = 0) {
  ModuleRep lhs = twist_by_auto(hu_specht(fam, d, lam), sharp);
  ModuleRep rhs = dual_twist(hu_specht(fam, d, transpose_multipartition(lam, fam.poset())), star);
  return is_isomorphic(lhs, rhs, seed);
}

}  // namespace qwreath
