#pragma once

/// Hecke-like algebras with basis {h_w : w in Sigma_d} and quadratic relation
/// h_i^2 = chi(S) h_i + chi(R): the classical Iwahori-Hecke algebra
/// (chi(S) = v - v^{-1}, chi(R) = 1) and its chi-twisted relatives, together
/// with the quadratic splitting, Specht modules, and the # / * twists.

#include "qwreath/algebra.hpp"
#include "qwreath/partition.hpp"

namespace qwreath {

struct NotSplit : std::runtime_error {
  explicit NotSplit(const std::string& what) : std::runtime_error(what) {}
};

/// A Hecke-like algebra together with its permutation-indexed basis.
struct HeckeLike {
  int d = 0;
  RatFunc chiS, chiR;
  AlgebraPtr alg;
  std::vector<Perm> perms;          // basis order
  std::map<Perm, int> perm_index;

  int idx(const Perm& w) const { return perm_index.at(w); }
  const Perm& perm(int i) const { return perms[static_cast<size_t>(i)]; }
  SparseVec h(const Perm& w) const { return sv_unit(idx(w)); }

  /// h_i as a sparse vector.
  SparseVec h_gen(int i) const { return h(Perm::s(i, d)); }
};

/// Build the twisted Hecke algebra with the given quadratic parameters.
inline HeckeLike hecke_like(int d, const RatFunc& chiS, const RatFunc& chiR,
                            const std::string& gen_symbol = "h") {
  HeckeLike out;
  out.d = d;
  out.chiS = chiS;
  out.chiR = chiR;
  out.perms = all_perms(d);
  std::sort(out.perms.begin(), out.perms.end(), [](const Perm& a, const Perm& b) {
    int la = a.length(), lb = b.length();
    return la != lb ? la < lb : a < b;
  });
  const int n = static_cast<int>(out.perms.size());
  for (int i = 0; i < n; ++i) out.perm_index[out.perms[static_cast<size_t>(i)]] = i;

  std::vector<std::vector<SparseVec>> table(static_cast<size_t>(n), std::vector<SparseVec>(static_cast<size_t>(n)));
  // Left multiplication by a generator on a basis element:
  //   h_s h_w = h_{sw}                         if l(sw) > l(w)
  //           = chiS h_w + chiR h_{sw}         otherwise.
  auto left_mul_gen = [&](int i, const SparseVec& x) {
    SparseVec out_vec;
    Perm si = Perm::s(i, d);
    for (const auto& [j, c] : x) {
      const Perm& w = out.perms[static_cast<size_t>(j)];
      Perm sw = si * w;
      if (sw.length() > w.length()) {
        sv_add_scaled(out_vec, c, sv_unit(out.perm_index[sw]));
      } else {
        sv_add_scaled(out_vec, c * chiS, sv_unit(j));
        sv_add_scaled(out_vec, c * chiR, sv_unit(out.perm_index[sw]));
      }
    }
    return out_vec;
  };
  // Fill rows by increasing length of the left factor.
  for (int i = 0; i < n; ++i) {
    const Perm& u = out.perms[static_cast<size_t>(i)];
    if (u.is_identity()) {
      for (int j = 0; j < n; ++j) table[static_cast<size_t>(i)][static_cast<size_t>(j)] = sv_unit(j);
      continue;
    }
    auto word = reduced_word(u);
    int rest = out.perm_index[perm_from_word(std::vector<int>(word.begin() + 1, word.end()), d)];
    for (int j = 0; j < n; ++j)
      table[static_cast<size_t>(i)][static_cast<size_t>(j)] =
          left_mul_gen(word[0], table[static_cast<size_t>(rest)][static_cast<size_t>(j)]);
  }

  std::vector<std::string> labels(static_cast<size_t>(n));
  std::vector<LinComb> words(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    const Perm& w = out.perms[static_cast<size_t>(i)];
    auto rw = reduced_word(w);
    std::string s = gen_symbol + "[";
    for (size_t k = 0; k < rw.size(); ++k) {
      if (k) s += ".";
      s += std::to_string(rw[k]);
    }
    labels[static_cast<size_t>(i)] = s + "]";
    GenWord gw;
    for (int g : rw) gw.push_back(g - 1);  // generator slot i-1 is s_i
    words[static_cast<size_t>(i)] = LinComb::word(std::move(gw));
  }
  std::vector<int> gens;
  for (int i = 1; i < d; ++i) gens.push_back(out.perm_index[Perm::s(i, d)]);
  std::vector<FiniteAlgebra::Relation> rels;
  for (int i = 1; i < d; ++i) {
    LinComb quad;
    quad.add(RatFunc(1), {i - 1, i - 1});
    quad.add(-chiS, {i - 1});
    quad.add(-chiR, {});
    rels.push_back({std::move(quad), "quadratic relation at " + std::to_string(i)});
    for (int j = i + 1; j < d; ++j) {
      LinComb rel;
      if (j == i + 1) {
        rel.add(RatFunc(1), {i - 1, j - 1, i - 1});
        rel.add(RatFunc(-1), {j - 1, i - 1, j - 1});
        rels.push_back({std::move(rel), "braid relation (" + std::to_string(i) + "," + std::to_string(j) + ")"});
      } else {
        rel.add(RatFunc(1), {i - 1, j - 1});
        rel.add(RatFunc(-1), {j - 1, i - 1});
        rels.push_back({std::move(rel), "commutation (" + std::to_string(i) + "," + std::to_string(j) + ")"});
      }
    }
  }
  out.alg = std::make_shared<FiniteAlgebra>(std::move(labels), out.perm_index[Perm::identity(d)],
                                            std::move(gens), std::move(table), std::move(words), std::move(rels));
  return out;
}

/// The Iwahori-Hecke algebra H_q(Sigma_m) in the normalized presentation
/// (I_i - v)(I_i + v^{-1}) = 0.
inline HeckeLike hecke_algebra(int m) {
  return hecke_like(m, RatFunc::v() - RatFunc::v(-1), RatFunc(1), "T");
}

inline HeckeLike twisted_hecke(int d, const RatFunc& chiS, const RatFunc& chiR) {
  return hecke_like(d, chiS, chiR, "h");
}

/// Split the quadratic (h - r1)(h - r2) = h^2 - chiS h - chiR: returns
/// (r1, r2) with r1 + r2 = chiS, r1 r2 = -chiR, and r1 = (chiS + s)/2 where s
/// is the positive-leading-coefficient square root of the discriminant.
inline std::pair<RatFunc, RatFunc> split_quadratic(const RatFunc& chiS, const RatFunc& chiR) {
  RatFunc disc = chiS * chiS + RatFunc(4) * chiR;
  // sqrt(n/d) = sqrt(n*d)/d when n*d is a perfect square in Z[v, v^{-1}].
  Laurent nd = disc.num() * disc.den();
  Laurent root;
  try {
    root = laurent_sqrt(nd);
  } catch (const NotAPerfectSquare&) {
    throw NotSplit("discriminant is not a perfect square: " + disc.str());
  }
  RatFunc s = RatFunc(root) / RatFunc(disc.den());
  RatFunc half = RatFunc(Laurent(1), Laurent(2));
  RatFunc r1 = (chiS + s) * half, r2 = (chiS - s) * half;
  return {r1, r2};
}

inline std::pair<RatFunc, RatFunc> split_quadratic(const HeckeLike& h) {
  return split_quadratic(h.chiS, h.chiR);
}

/// The chi-symmetrizer over the Young subgroup Sigma_mu: sum over w in
/// Sigma_mu of r^{-l(w)} h_w.  With r = -r2 this is a right r1-eigenvector for
/// every h_i in the subgroup; with r = -r1, a right r2-eigenvector.
inline SparseVec young_symmetrizer(const HeckeLike& H, const std::vector<int>& mu, const RatFunc& r) {
  SparseVec x;
  RatFunc rinv = r.inverse();
  for (const Perm& w : young_subgroup(mu, H.d)) {
    RatFunc c(1);
    for (int k = 0; k < w.length(); ++k) c *= rinv;
    sv_add_scaled(x, c, H.h(w));
  }
  return x;
}

/// Spin a set of vectors to a basis of the right ideal they generate; returns
/// the basis (echelonized) as sparse vectors.
inline std::vector<SparseVec> spin_right_ideal(const HeckeLike& H, const SparseVec& seed) {
  const int n = H.alg->dim();
  // Echelon rows: pivot index -> reduced vector with pivot coefficient 1.
  std::map<int, SparseVec> rows;
  auto reduce_insert = [&](SparseVec vec) {
    while (!vec.empty()) {
      int p = vec.begin()->first;
      auto it = rows.find(p);
      if (it == rows.end()) {
        RatFunc inv = vec.begin()->second.inverse();
        SparseVec norm = sv_scale(inv, vec);
        rows[p] = std::move(norm);
        return true;
      }
      sv_add_scaled(vec, -vec.begin()->second, it->second);
    }
    return false;
  };
  std::vector<SparseVec> frontier{seed};
  reduce_insert(seed);
  while (!frontier.empty()) {
    std::vector<SparseVec> next;
    for (const auto& vec : frontier)
      for (int i = 1; i < H.d; ++i) {
        SparseVec img = H.alg->mult(vec, H.h_gen(i));
        if (reduce_insert(img)) next.push_back(std::move(img));
      }
    frontier = std::move(next);
  }
  std::vector<SparseVec> basis;
  for (auto& [p, vec] : rows) basis.push_back(vec);
  (void)n;
  return basis;
}

/// Express target in the span of basis vectors; throws if not in the span.
inline std::vector<RatFunc> coordinates_in_span(const std::vector<SparseVec>& basis, const SparseVec& target,
                                                int ambient_dim) {
  const int k = static_cast<int>(basis.size());
  Matrix sys(ambient_dim, k + 1);
  for (int j = 0; j < k; ++j)
    for (const auto& [i, c] : basis[static_cast<size_t>(j)]) sys.at(i, j) = c;
  for (const auto& [i, c] : target) sys.at(i, k) = c;
  auto ns = sys.nullspace();
  for (const auto& x : ns)
    if (!x[static_cast<size_t>(k)].is_zero()) {
      RatFunc scale = -x[static_cast<size_t>(k)].inverse();
      std::vector<RatFunc> coords(static_cast<size_t>(k));
      for (int j = 0; j < k; ++j) coords[static_cast<size_t>(j)] = scale * x[static_cast<size_t>(j)];
      return coords;
    }
  throw std::logic_error("vector is not in the span");
}

struct SpechtData {
  Partition shape;
  ModuleRep module;                    // left module via the * conversion
  std::vector<SparseVec> ideal_basis;  // basis of the right ideal inside the algebra
};

/// The Specht module of shape nu: the right ideal generated by
/// x_nu h_{w_nu} y_{nu^t}, spun to a basis, then viewed as a left module via
/// the anti-automorphism * (which fixes every generator h_i).
inline SpechtData twisted_specht(const HeckeLike& H, const Partition& nu) {
  if (nu.size() != H.d) throw std::invalid_argument("partition size must equal d");
  auto [r1, r2] = split_quadratic(H);
  SparseVec x = young_symmetrizer(H, nu.parts(), -r2);
  SparseVec y = young_symmetrizer(H, nu.transpose().parts(), -r1);
  // The tableau-defined permutation is read in the opposite composition
  // convention from ours, so the basis element in the middle is indexed by
  // its inverse (which is what makes the product nonzero: the Young subgroup
  // of nu meets the conjugated Young subgroup of nu^t trivially).
  SparseVec z = H.alg->mult(H.alg->mult(x, H.h(w_mu(nu).inverse())), y);
  auto basis = spin_right_ideal(H, z);
  const int k = static_cast<int>(basis.size());
  std::map<int, Matrix> action;
  for (int i = 1; i < H.d; ++i) {
    Matrix a(k, k);
    for (int j = 0; j < k; ++j) {
      auto coords = coordinates_in_span(basis, H.alg->mult(basis[static_cast<size_t>(j)], H.h_gen(i)), H.alg->dim());
      for (int r = 0; r < k; ++r) a.at(r, j) = coords[static_cast<size_t>(r)];
    }
    action[H.idx(Perm::s(i, H.d))] = std::move(a);
  }
  return SpechtData{nu, ModuleRep(H.alg, k, std::move(action)), std::move(basis)};
}

inline SpechtData hecke_specht(int m, const Partition& lam) {
  return twisted_specht(hecke_algebra(m), lam);
}

/// The automorphism # of the classical Hecke algebra: T_w -> (-1)^{l(w)}
/// T_{w^{-1}}^{-1}, i.e. T_i -> -T_i^{-1} = -T_i + (v - v^{-1}) on generators.
inline AlgebraMap hecke_sharp(const HeckeLike& H) {
  AlgebraMap phi{H.alg, {}, false};
  // Generator inverses: h_i^{-1} = (h_i - chiS)/chiR.
  phi.images.resize(static_cast<size_t>(H.alg->dim()));
  for (int j = 0; j < H.alg->dim(); ++j) {
    const Perm& w = H.perm(j);
    auto word = reduced_word(w.inverse());
    // (-1)^l * (h_{i_1} ... h_{i_N})^{-1} = (-1)^l h_{i_N}^{-1} ... h_{i_1}^{-1}.
    SparseVec img = H.alg->one();
    RatFunc cr_inv = H.chiR.inverse();
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
      SparseVec gi = H.h_gen(*it);
      sv_add_scaled(gi, -H.chiS, H.alg->one());
      img = H.alg->mult(img, sv_scale(cr_inv, gi));
    }
    phi.images[static_cast<size_t>(j)] = sv_scale(RatFunc(w.length() % 2 ? -1 : 1), img);
  }
  return phi;
}

/// The automorphism # of a chi(S) = 0 twisted Hecke algebra:
/// h_w -> (-1)^{l(w)} h_w.
inline AlgebraMap twisted_sharp(const HeckeLike& H) {
  if (!H.chiS.is_zero()) throw std::invalid_argument("twisted # requires chi(S) = 0");
  AlgebraMap phi{H.alg, {}, false};
  for (int j = 0; j < H.alg->dim(); ++j)
    phi.images.push_back(sv_scale(RatFunc(H.perm(j).length() % 2 ? -1 : 1), sv_unit(j)));
  return phi;
}

/// The semilinear bar involution: v -> v^{-1}, h_w -> (h_{w^{-1}})^{-1}.
inline AlgebraMap hecke_bar(const HeckeLike& H) {
  AlgebraMap phi{H.alg, {}, false, true};
  phi.images.resize(static_cast<size_t>(H.alg->dim()));
  RatFunc cr_inv = H.chiR.inverse();
  for (int j = 0; j < H.alg->dim(); ++j) {
    // (h_{i_1} ... h_{i_N})^{-1} for a reduced word of w^{-1} is the product
    // of generator inverses along a reduced word of w.
    SparseVec img = H.alg->one();
    for (int i : reduced_word(H.perm(j))) {
      SparseVec gi = H.h_gen(i);
      sv_add_scaled(gi, -H.chiS, H.alg->one());
      img = H.alg->mult(img, sv_scale(cr_inv, gi));
    }
    phi.images[static_cast<size_t>(j)] = std::move(img);
  }
  return phi;
}

/// The anti-automorphism *: h_w -> h_{w^{-1}}.
inline AlgebraMap hecke_star(const HeckeLike& H) {
  AlgebraMap phi{H.alg, {}, true};
  for (int j = 0; j < H.alg->dim(); ++j) phi.images.push_back(sv_unit(H.idx(H.perm(j).inverse())));
  return phi;
}

/// (S^nu)^# vs (S^{nu^t})^*: builds both twists and decides isomorphism.
inline IsoResult twisted_dual_check(const HeckeLike& H, const Partition& nu, const AlgebraMap& sharp,
                                    const AlgebraMap& star, unsigned seed = 0) {
  ModuleRep lhs = twist_by_auto(twisted_specht(H, nu).module, sharp);
  ModuleRep rhs = dual_twist(twisted_specht(H, nu.transpose()).module, star);
  return is_isomorphic(lhs, rhs, seed);
}

}  // namespace qwreath
