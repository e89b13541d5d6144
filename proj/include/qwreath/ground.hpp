#pragma once

/// Ground modules over the base algebra B, the structure map tau^M, wreath
/// modules M wr N with full module-axiom verification, parabolic induction,
/// and the induced-module isomorphism check.
///
/// A ground module is a B-module M with maps sigma^M, rho^M on M (x) M and
/// scalars chi(S), chi(R) (the scalars by which S and R act on M (x) M).
/// These data let H_w thread through M^{otimes d} via the recursive structure
/// map tau^M, which is what assembles a B wr H(d)-action on M^{otimes d} (x) N
/// for any module N over the twisted Hecke algebra with parameters chi.

#include "qwreath/qwp.hpp"

namespace qwreath {

/// tau^M(w (x) -) as blocks: w -> (x -> matrix on M^{otimes d}), meaning
/// tau^M(w (x) m) = sum_x block[w][x](m) (x) h_x.
using StructureMapTable = std::map<Perm, std::map<Perm, Matrix>>;

class GroundModuleData {
 public:
  GroundModuleData(std::shared_ptr<const QWP> ambient, ModuleRep m, Matrix sigmaM, Matrix rhoM,
                   RatFunc chiS, RatFunc chiR)
      : A_(std::move(ambient)),
        M_(std::move(m)),
        sigmaM_(std::move(sigmaM)),
        rhoM_(std::move(rhoM)),
        chiS_(std::move(chiS)),
        chiR_(std::move(chiR)) {
    if (M_.algebra() != A_->params().base) throw std::invalid_argument("module must be over the base algebra");
    dimM_ = M_.dim();
    md_ = power_dim(dimM_, A_->d());
    const int mm = dimM_ * dimM_;
    if (sigmaM_.rows() != mm || sigmaM_.cols() != mm || rhoM_.rows() != mm || rhoM_.cols() != mm)
      throw std::invalid_argument("sigma^M / rho^M must act on M (x) M");
    sig_pair_ = endo_from_matrix(sigmaM_);
    rho_pair_ = endo_from_matrix(rhoM_);
  }

  const QWP& ambient() const { return *A_; }
  const std::shared_ptr<const QWP>& ambient_ptr() const { return A_; }
  const ModuleRep& M() const { return M_; }
  int d() const { return A_->d(); }
  int dimM() const { return dimM_; }
  int dimMd() const { return md_; }
  const RatFunc& chiS() const { return chiS_; }
  const RatFunc& chiR() const { return chiR_; }
  const Matrix& sigmaM() const { return sigmaM_; }
  const Matrix& rhoM() const { return rhoM_; }

  /// sigma^M_i / rho^M_i on M^{otimes d}.
  const Matrix& sigmaM_i(int i) const { return slot_cached(sig_slot_, sig_pair_, i); }
  const Matrix& rhoM_i(int i) const { return slot_cached(rho_slot_, rho_pair_, i); }

  /// Action of a basis element of B^{otimes d} on M^{otimes d}.
  const Matrix& act_tensor_basis(int t) const {
    auto it = act_cache_.find(t);
    if (it != act_cache_.end()) return it->second;
    auto tup = tensor_tuple(t, A_->base_dim(), d());
    Matrix m = Matrix::identity(1);
    for (int p = 0; p < d(); ++p) m = kron(m, M_.act_basis(tup[static_cast<size_t>(p)]));
    return act_cache_.emplace(t, std::move(m)).first->second;
  }

  Matrix act(const SparseVec& b) const {
    Matrix m(md_, md_);
    for (const auto& [t, c] : b) m = m + c * act_tensor_basis(t);
    return m;
  }

  /// sigma^M_w along a reduced word (well-defined when (M5) holds).
  Matrix sigmaM_w(const Perm& w) const {
    Matrix m = Matrix::identity(md_);
    for (int i : reduced_word(w)) m = m * sigmaM_i(i);
    return m;
  }

 private:
  const Matrix& slot_cached(std::map<int, Matrix>& cache, const Endo& pair, int i) const {
    auto it = cache.find(i);
    if (it != cache.end()) return it->second;
    return cache.emplace(i, endo_to_matrix(slot_endo(pair, dimM_, d(), i))).first->second;
  }

  std::shared_ptr<const QWP> A_;
  ModuleRep M_;
  Matrix sigmaM_, rhoM_;
  RatFunc chiS_, chiR_;
  int dimM_ = 0, md_ = 0;
  Endo sig_pair_, rho_pair_;
  mutable std::map<int, Matrix> sig_slot_, rho_slot_;
  mutable std::map<int, Matrix> act_cache_;
};

// ---------------------------------------------------------------------------
// Ground-module conditions
// ---------------------------------------------------------------------------

/// (chi), (M2), (M4), and (M5)-(M7) for d >= 3, all as exact matrix
/// identities on M^{otimes d}, with b ranging over the full basis of
/// B^{otimes d} when small (<= 64) and over the generator lifts otherwise.
inline ConditionReport verify_ground(const GroundModuleData& gm) {
  ConditionReport rep;
  const QWP& A = gm.ambient();
  const int d = gm.d();

  // S and R act on M (x) M by the scalars chi(S), chi(R).
  {
    const int mm = gm.dimM() * gm.dimM();
    Matrix actS(mm, mm), actR(mm, mm);
    for (const auto& [p, c] : A.params().S) {
      int n = A.base_dim();
      actS = actS + c * kron(gm.M().act_basis(p / n), gm.M().act_basis(p % n));
    }
    for (const auto& [p, c] : A.params().R) {
      int n = A.base_dim();
      actR = actR + c * kron(gm.M().act_basis(p / n), gm.M().act_basis(p % n));
    }
    rep.add("chi.S", actS == Matrix::scalar(mm, gm.chiS()));
    rep.add("chi.R", actR == Matrix::scalar(mm, gm.chiR()));
  }

  std::vector<int> base_inputs;
  if (A.tensor_dim() <= 64) {
    for (int t = 0; t < A.tensor_dim(); ++t) base_inputs.push_back(t);
  } else {
    for (int p = 0; p < d; ++p)
      for (int g : A.params().base->generators()) {
        std::vector<int> t(static_cast<size_t>(d), A.params().base->unit());
        t[static_cast<size_t>(p)] = g;
        base_inputs.push_back(tensor_index(t, A.base_dim()));
      }
  }

  for (int i = 1; i < d; ++i) {
    const Matrix& sg = gm.sigmaM_i(i);
    const Matrix& rh = gm.rhoM_i(i);
    std::string si = std::to_string(i);
    bool m2s = true, m2r = true;
    std::string w2s, w2r;
    for (int t : base_inputs) {
      const Matrix& act = gm.act_tensor_basis(t);
      Matrix sact = gm.act(A.apply_sigma_i(i, sv_unit(t)));
      Matrix ract = gm.act(A.apply_rho_i(i, sv_unit(t)));
      if (m2s && sg * act != sact * sg) {
        m2s = false;
        w2s = "b = " + pw_label(*A.params().base, d, t);
      }
      if (m2r && rh * act != sact * rh + ract) {
        m2r = false;
        w2r = "b = " + pw_label(*A.params().base, d, t);
      }
    }
    rep.add("M2.sigma i=" + si, m2s, w2s);
    rep.add("M2.rho i=" + si, m2r, w2r);

    Matrix lS = gm.act(A.S_i(i)), lR = gm.act(A.R_i(i));
    rep.add("M4.first i=" + si, gm.chiS() * (sg * sg) + rh * sg + sg * rh == lS * sg);
    rep.add("M4.second i=" + si, gm.chiR() * (sg * sg) + rh * rh == lS * rh + lR);
  }

  for (int i = 1; i < d; ++i)
    for (int j : {i - 1, i + 1}) {
      if (j < 1 || j >= d) continue;
      std::string tag = " (i,j)=(" + std::to_string(i) + "," + std::to_string(j) + ")";
      const Matrix &si = gm.sigmaM_i(i), &sj = gm.sigmaM_i(j);
      const Matrix &ri = gm.rhoM_i(i), &rj = gm.rhoM_i(j);
      if (i < j) rep.add("M5.braid" + tag, si * sj * si == sj * si * sj);
      rep.add("M5.mixed" + tag, ri * sj * si == sj * si * rj);
      rep.add("M6" + tag, ri * sj * ri == gm.chiS() * (sj * ri * sj) + rj * ri * sj + sj * ri * rj);
      if (i < j)
        rep.add("M7" + tag, ri * rj * ri + gm.chiR() * (si * rj * si) == rj * ri * rj + gm.chiR() * (sj * ri * sj));
    }
  return rep;
}

// ---------------------------------------------------------------------------
// The structure map tau^M
// ---------------------------------------------------------------------------

/// Build tau^M(w (x) -) for every w by the recursion along the given choice
/// rule: tau(1 (x) m) = m (x) 1; tau(s_i (x) m) = sigma^M_i(m) (x) h_i +
/// rho^M_i(m) (x) 1; and for w = s_i x with the length going up, thread s_i
/// through tau(x (x) -) and multiply in the twisted Hecke algebra.
inline StructureMapTable build_tau(const GroundModuleData& gm, ChoiceRule rule = ChoiceRule::SmallestLeftDescent) {
  const int d = gm.d(), md = gm.dimMd();
  std::vector<Perm> perms = all_perms(d);
  std::sort(perms.begin(), perms.end(), [](const Perm& a, const Perm& b) {
    return a.length() != b.length() ? a.length() < b.length() : a < b;
  });
  StructureMapTable tab;
  for (const Perm& w : perms) {
    std::map<Perm, Matrix> blocks;
    if (w.is_identity()) {
      blocks.emplace(w, Matrix::identity(md));
    } else {
      int i = reduced_word(w, rule)[0];
      Perm x = Perm::s(i, d) * w;  // shorter
      const auto& prev = tab.at(x);
      auto add_block = [&](const Perm& u, const Matrix& m) {
        auto it = blocks.find(u);
        if (it == blocks.end())
          blocks.emplace(u, m);
        else
          it->second = it->second + m;
      };
      for (const auto& [u, Au] : prev) {
        Matrix sA = gm.sigmaM_i(i) * Au;
        Perm su = Perm::s(i, d) * u;
        if (su.length() > u.length()) {
          add_block(su, sA);
        } else {
          add_block(u, gm.chiS() * sA);
          add_block(su, gm.chiR() * sA);
        }
        add_block(u, gm.rhoM_i(i) * Au);
      }
      for (auto it = blocks.begin(); it != blocks.end();)
        it = it->second.is_zero() ? blocks.erase(it) : std::next(it);
    }
    tab.emplace(w, std::move(blocks));
  }
  return tab;
}

/// The two deterministic choice rules produce the same structure map.
inline bool check_tau_independence(const GroundModuleData& gm) {
  return build_tau(gm, ChoiceRule::SmallestLeftDescent) == build_tau(gm, ChoiceRule::LargestLeftDescent);
}

// ---------------------------------------------------------------------------
// Diagram checks (WB) and (WW)
// ---------------------------------------------------------------------------

/// (WB): acting by b in B^{otimes d} first and then applying tau^M agrees
/// with threading H_w through b in the wreath product and then applying
/// tau^M blockwise.  (WW): applying tau^M twice and multiplying in the
/// twisted Hecke algebra agrees with multiplying H_w H_x in the wreath
/// product first.  (WW) pairs are restricted to lengths <= 2 unless
/// exhaustive is set.
inline ConditionReport check_diagrams(const GroundModuleData& gm, bool exhaustive_ww = false) {
  ConditionReport rep;
  const QWP& A = gm.ambient();
  const int d = gm.d();
  StructureMapTable tau = build_tau(gm);
  HeckeLike tH = twisted_hecke(d, gm.chiS(), gm.chiR());

  std::vector<int> base_inputs;
  if (A.tensor_dim() <= 64)
    for (int t = 0; t < A.tensor_dim(); ++t) base_inputs.push_back(t);
  else
    for (int p = 0; p < d; ++p)
      for (int g : A.params().base->generators()) {
        std::vector<int> t(static_cast<size_t>(d), A.params().base->unit());
        t[static_cast<size_t>(p)] = g;
        base_inputs.push_back(tensor_index(t, A.base_dim()));
      }

  bool wb = true;
  std::string wbw;
  for (const auto& [w, blocks] : tau) {
    for (int t : base_inputs) {
      // Right path: H_w b = sum_z c_z H_z, then tau blockwise.
      QWPElement hwb = A.left_mul_word(reduced_word(w), A.from_base(sv_unit(t)));
      std::map<Perm, Matrix> rhs;
      for (const auto& [z, cz] : hwb) {
        Matrix actc = gm.act(cz);
        for (const auto& [x, Ax] : tau.at(z)) {
          auto it = rhs.find(x);
          Matrix add = actc * Ax;
          if (it == rhs.end())
            rhs.emplace(x, std::move(add));
          else
            it->second = it->second + add;
        }
      }
      // Left path: tau(w (x) b.m).
      const Matrix& actb = gm.act_tensor_basis(t);
      bool ok = true;
      for (const auto& [x, Ax] : blocks)
        if ((rhs.count(x) ? rhs.at(x) : Matrix(gm.dimMd(), gm.dimMd())) != Ax * actb) ok = false;
      for (const auto& [x, m] : rhs)
        if (!blocks.count(x) && !m.is_zero()) ok = false;
      if (!ok) {
        wb = false;
        wbw = "w = " + w.str() + ", b = " + pw_label(*A.params().base, d, t);
        break;
      }
    }
    if (!wb) break;
  }
  rep.add("WB", wb, wbw);

  bool ww = true;
  std::string www;
  for (const auto& [w, wb_] : tau) {
    for (const auto& [x, xb_] : tau) {
      if (!exhaustive_ww && (w.length() > 2 || x.length() > 2)) continue;
      // Left path: tau(x), thread w through, multiply h's.
      std::map<int, Matrix> lhs;  // twisted Hecke basis index -> matrix
      for (const auto& [u, Au] : tau.at(x))
        for (const auto& [y, Ay] : tau.at(w)) {
          Matrix m = Ay * Au;
          for (const auto& [v, c] : tH.alg->mult_basis(tH.idx(y), tH.idx(u))) {
            auto it = lhs.find(v);
            Matrix add = c * m;
            if (it == lhs.end())
              lhs.emplace(v, std::move(add));
            else
              it->second = it->second + add;
          }
        }
      // Right path: H_w H_x = sum_z c_z H_z in the wreath product.
      QWPElement prod = A.multiply(A.monomial(A.tensor_unit(), w), A.monomial(A.tensor_unit(), x));
      std::map<int, Matrix> rhs;
      for (const auto& [z, cz] : prod) {
        Matrix actc = gm.act(cz);
        for (const auto& [y, Ay] : tau.at(z)) {
          auto it = rhs.find(tH.idx(y));
          Matrix add = actc * Ay;
          if (it == rhs.end())
            rhs.emplace(tH.idx(y), std::move(add));
          else
            it->second = it->second + add;
        }
      }
      bool ok = true;
      for (const auto& [v, m] : lhs)
        if ((rhs.count(v) ? rhs.at(v) : Matrix(gm.dimMd(), gm.dimMd())) != m) ok = false;
      for (const auto& [v, m] : rhs)
        if (!lhs.count(v) && !m.is_zero()) ok = false;
      if (!ok) {
        ww = false;
        www = "(w,x) = (" + w.str() + ", " + x.str() + ")";
        break;
      }
    }
    if (!ww) break;
  }
  rep.add(exhaustive_ww ? "WW(exhaustive)" : "WW", ww, www);
  return rep;
}

// ---------------------------------------------------------------------------
// The wreath product as a finite-dimensional algebra
// ---------------------------------------------------------------------------

namespace detail {

/// Express an element of B^{otimes d} as a linear combination of generator
/// words of the wreath-product algebra (slot-major base generator slots).
inline LinComb lift_tensor_elem(const FiniteAlgebra& base, int d, const SparseVec& x) {
  const int gper = static_cast<int>(base.generators().size());
  LinComb out;
  for (const auto& [t, c] : x) {
    auto tup = tensor_tuple(t, base.dim(), d);
    LinComb acc = LinComb::unit(c);
    for (int p = 0; p < d; ++p) {
      LinComb lifted;
      for (const auto& [cc, wd] : base.basis_words()[static_cast<size_t>(tup[static_cast<size_t>(p)])].terms) {
        GenWord wl;
        for (int slot : wd) wl.push_back(p * gper + slot);
        lifted.add(cc, std::move(wl));
      }
      acc = acc * lifted;
    }
    for (auto& term : acc.terms) out.terms.push_back(std::move(term));
  }
  return out;
}

}  // namespace detail

/// Materialize the parabolic subalgebra spanned by {b H_w : w in Sigma_mu}
/// as a FiniteAlgebra (mu = (d) gives the whole wreath product).  Generators
/// are the slot-major base-generator lifts followed by the H_i for i in the
/// parabolic; relations are the lifted base relations, cross-slot
/// commutation, and the quadratic / wreath / braid relations.
inline AlgebraPtr parabolic_algebra(const QWP& A, const std::vector<int>& mu) {
  const FiniteAlgebra& B = *A.params().base;
  const int d = A.d(), n = A.base_dim(), nd = A.tensor_dim();
  auto group = young_subgroup(mu, d);
  std::sort(group.begin(), group.end(), [](const Perm& a, const Perm& b) {
    return a.length() != b.length() ? a.length() < b.length() : a < b;
  });
  std::map<Perm, int> pidx;
  for (size_t k = 0; k < group.size(); ++k) pidx[group[k]] = static_cast<int>(k);
  const int dim = nd * static_cast<int>(group.size());
  auto flat = [&](const Perm& w, int t) { return pidx.at(w) * nd + t; };

  auto flatten = [&](const QWPElement& x) {
    SparseVec out;
    for (const auto& [w, b] : x) {
      auto it = pidx.find(w);
      if (it == pidx.end()) throw std::logic_error("product leaves the parabolic span");
      for (const auto& [t, c] : b) out[it->second * nd + t] = c;
    }
    return out;
  };

  std::vector<std::string> labels(static_cast<size_t>(dim));
  std::vector<LinComb> words(static_cast<size_t>(dim));
  const int gper = static_cast<int>(B.generators().size());
  auto pgens = parabolic_generators(mu);
  auto hpos = [&](int i) {
    for (size_t k = 0; k < pgens.size(); ++k)
      if (pgens[k] == i) return d * gper + static_cast<int>(k);
    throw std::logic_error("generator outside the parabolic");
  };
  for (const Perm& w : group)
    for (int t = 0; t < nd; ++t) {
      int idx = flat(w, t);
      labels[static_cast<size_t>(idx)] = pw_label(B, d, t) + ".H(" + w.str() + ")";
      LinComb lc = detail::lift_tensor_elem(B, d, sv_unit(t));
      GenWord hw;
      for (int i : reduced_word(w)) hw.push_back(hpos(i));
      words[static_cast<size_t>(idx)] = lc * LinComb::word(std::move(hw));
    }

  std::vector<int> gens;
  std::vector<int> unit_tuple(static_cast<size_t>(d), B.unit());
  for (int p = 0; p < d; ++p)
    for (int g : B.generators()) {
      auto t = unit_tuple;
      t[static_cast<size_t>(p)] = g;
      gens.push_back(flat(Perm::identity(d), tensor_index(t, n)));
    }
  for (int i : pgens) gens.push_back(flat(Perm::s(i, d), tensor_index(unit_tuple, n)));

  std::vector<std::vector<SparseVec>> table(static_cast<size_t>(dim), std::vector<SparseVec>(static_cast<size_t>(dim)));
  for (const Perm& w : group)
    for (int t = 0; t < nd; ++t) {
      QWPElement left = A.monomial(sv_unit(t), w);
      for (const Perm& w2 : group)
        for (int t2 = 0; t2 < nd; ++t2)
          table[static_cast<size_t>(flat(w, t))][static_cast<size_t>(flat(w2, t2))] =
              flatten(A.multiply(left, A.monomial(sv_unit(t2), w2)));
    }

  std::vector<FiniteAlgebra::Relation> rels;
  for (int p = 0; p < d; ++p)
    for (const auto& rel : B.relations()) {
      LinComb lifted;
      for (const auto& [c, wd] : rel.lhs.terms) {
        GenWord wl;
        for (int slot : wd) wl.push_back(p * gper + slot);
        lifted.add(c, std::move(wl));
      }
      rels.push_back({std::move(lifted), "slot " + std::to_string(p + 1) + ": " + rel.name});
    }
  for (int p = 0; p < d; ++p)
    for (int q2 = p + 1; q2 < d; ++q2)
      for (int a = 0; a < gper; ++a)
        for (int c = 0; c < gper; ++c) {
          LinComb comm;
          comm.add(RatFunc(1), {p * gper + a, q2 * gper + c});
          comm.add(RatFunc(-1), {q2 * gper + c, p * gper + a});
          rels.push_back({std::move(comm), "cross-slot commutation"});
        }
  for (int i : pgens) {
    LinComb quad = LinComb::word({hpos(i), hpos(i)});
    LinComb sterm = detail::lift_tensor_elem(B, d, A.S_i(i)) * LinComb::word({hpos(i)}, RatFunc(-1));
    for (auto& term : sterm.terms) quad.terms.push_back(std::move(term));
    LinComb rterm = detail::lift_tensor_elem(B, d, sv_scale(RatFunc(-1), A.R_i(i)));
    for (auto& term : rterm.terms) quad.terms.push_back(std::move(term));
    rels.push_back({std::move(quad), "quadratic relation at H_" + std::to_string(i)});
  }
  for (int i : pgens)
    for (int p = 0; p < d; ++p)
      for (size_t gk = 0; gk < B.generators().size(); ++gk) {
        auto t = unit_tuple;
        t[static_cast<size_t>(p)] = B.generators()[gk];
        SparseVec bg = sv_unit(tensor_index(t, n));
        LinComb rel = LinComb::word({hpos(i), p * gper + static_cast<int>(gk)});
        LinComb sterm =
            detail::lift_tensor_elem(B, d, sv_scale(RatFunc(-1), A.apply_sigma_i(i, bg))) * LinComb::word({hpos(i)});
        for (auto& term : sterm.terms) rel.terms.push_back(std::move(term));
        LinComb rterm = detail::lift_tensor_elem(B, d, sv_scale(RatFunc(-1), A.apply_rho_i(i, bg)));
        for (auto& term : rterm.terms) rel.terms.push_back(std::move(term));
        rels.push_back({std::move(rel), "wreath relation H_" + std::to_string(i) + ", slot " + std::to_string(p + 1)});
      }
  for (size_t a = 0; a < pgens.size(); ++a)
    for (size_t b = a + 1; b < pgens.size(); ++b) {
      int i = pgens[a], j = pgens[b];
      LinComb rel;
      if (j == i + 1) {
        rel.add(RatFunc(1), {hpos(i), hpos(j), hpos(i)});
        rel.add(RatFunc(-1), {hpos(j), hpos(i), hpos(j)});
        rels.push_back({std::move(rel), "braid relation (" + std::to_string(i) + "," + std::to_string(j) + ")"});
      } else {
        rel.add(RatFunc(1), {hpos(i), hpos(j)});
        rel.add(RatFunc(-1), {hpos(j), hpos(i)});
        rels.push_back({std::move(rel), "commutation (" + std::to_string(i) + "," + std::to_string(j) + ")"});
      }
    }

  return std::make_shared<FiniteAlgebra>(std::move(labels), flat(Perm::identity(d), tensor_index(unit_tuple, n)),
                                         std::move(gens), std::move(table), std::move(words), std::move(rels));
}

inline AlgebraPtr qwp_algebra(const QWP& A) {
  return parabolic_algebra(A, {A.d()});
}

// ---------------------------------------------------------------------------
// Wreath modules
// ---------------------------------------------------------------------------

/// M wr N on M^{otimes d} (x) N (m-major index): base generators act on the
/// tensor factor, H_i acts by sigma^M_i (x) h_i + rho^M_i (x) 1.  The
/// ModuleRep constructor verifies every defining relation.
inline ModuleRep wreath_module(const GroundModuleData& gm, const AlgebraPtr& walg, const HeckeLike& tH,
                               const ModuleRep& N) {
  if (N.algebra() != tH.alg) throw std::invalid_argument("N must be a twisted Hecke module");
  if (tH.d != gm.d() || tH.chiS != gm.chiS() || tH.chiR != gm.chiR())
    throw std::invalid_argument("twisted Hecke parameters do not match the ground module");
  const QWP& A = gm.ambient();
  const int d = gm.d();
  std::map<int, Matrix> action;
  size_t pos = 0;
  const auto& gens = walg->generators();
  Matrix idN = Matrix::identity(N.dim());
  for (int p = 0; p < d; ++p)
    for (size_t gk = 0; gk < A.params().base->generators().size(); ++gk) {
      std::vector<int> t(static_cast<size_t>(d), A.params().base->unit());
      t[static_cast<size_t>(p)] = A.params().base->generators()[gk];
      action[gens[pos++]] = kron(gm.act_tensor_basis(tensor_index(t, A.base_dim())), idN);
    }
  for (int i = 1; i < d; ++i) {
    Matrix hi = N.dim() > 0 ? N.act_gen(tH.idx(Perm::s(i, d))) : Matrix(0, 0);
    action[gens[pos++]] = kron(gm.sigmaM_i(i), hi) + kron(gm.rhoM_i(i), idN);
  }
  return ModuleRep(walg, gm.dimMd() * N.dim(), std::move(action));
}

// ---------------------------------------------------------------------------
// Parabolic induction
// ---------------------------------------------------------------------------

/// Outer tensor product of block modules as a module over the parabolic:
/// each block of size 1 contributes a B-module, each block of size >= 2 a
/// module over the standalone wreath product of that size.
inline ModuleRep parabolic_outer_tensor(const QWP& A, const std::vector<int>& mu, const AlgebraPtr& par_alg,
                                        const std::vector<ModuleRep>& blocks) {
  if (blocks.size() != mu.size()) throw std::invalid_argument("one module per block");
  const int d = A.d();
  const int gper = static_cast<int>(A.params().base->generators().size());
  int dim = 1;
  for (const auto& b : blocks) dim *= b.dim();
  auto pgens = parabolic_generators(mu);

  // kron over blocks with one factor replaced.
  auto assemble = [&](size_t which, const Matrix& m) {
    Matrix out = Matrix::identity(1);
    for (size_t k = 0; k < blocks.size(); ++k)
      out = kron(out, k == which ? m : Matrix::identity(blocks[k].dim()));
    return out;
  };

  std::map<int, Matrix> action;
  const auto& gens = par_alg->generators();
  size_t pos = 0;
  std::vector<int> block_of(static_cast<size_t>(d)), local_of(static_cast<size_t>(d));
  {
    int p = 0;
    for (size_t k = 0; k < mu.size(); ++k)
      for (int l = 0; l < mu[k]; ++l, ++p) {
        block_of[static_cast<size_t>(p)] = static_cast<int>(k);
        local_of[static_cast<size_t>(p)] = l;
      }
  }
  for (int p = 0; p < d; ++p)
    for (int gk = 0; gk < gper; ++gk) {
      size_t k = static_cast<size_t>(block_of[static_cast<size_t>(p)]);
      int l = local_of[static_cast<size_t>(p)];
      const ModuleRep& blk = blocks[k];
      Matrix m = mu[k] == 1 ? blk.act_gen(A.params().base->generators()[static_cast<size_t>(gk)])
                            : blk.act_gen(blk.algebra()->generators()[static_cast<size_t>(l * gper + gk)]);
      action[gens[pos++]] = assemble(k, m);
    }
  for (int i : pgens) {
    size_t k = static_cast<size_t>(block_of[static_cast<size_t>(i - 1)]);
    int l = local_of[static_cast<size_t>(i - 1)];  // H_{l+1} within the block
    const ModuleRep& blk = blocks[k];
    Matrix m = blk.act_gen(blk.algebra()->generators()[static_cast<size_t>(mu[k] * gper + l)]);
    action[gens[pos++]] = assemble(k, m);
  }
  return ModuleRep(par_alg, dim, std::move(action));
}

/// Induce a module over the parabolic up to the whole wreath product:
/// basis {H_w (x) v} over minimal coset representatives w; the action is
/// computed by right-PBW rewriting and coset factorization.
inline ModuleRep parabolic_induce(const QWP& A, const std::vector<int>& mu, const AlgebraPtr& par_alg,
                                  const ModuleRep& V, const AlgebraPtr& walg) {
  const int d = A.d(), nd = A.tensor_dim();
  auto reps = min_coset_reps(mu, d);
  std::map<Perm, int> ridx;
  for (size_t k = 0; k < reps.size(); ++k) ridx[reps[k]] = static_cast<int>(k);
  auto group = young_subgroup(mu, d);
  std::sort(group.begin(), group.end(), [](const Perm& a, const Perm& b) {
    return a.length() != b.length() ? a.length() < b.length() : a < b;
  });
  std::map<Perm, int> pidx;
  for (size_t k = 0; k < group.size(); ++k) pidx[group[k]] = static_cast<int>(k);
  const int dim = static_cast<int>(reps.size()) * V.dim();

  // Action of a parabolic element given in engine left form on V.
  auto act_parabolic = [&](const QWPElement& x) {
    SparseVec flatv;
    for (const auto& [u, b] : x)
      for (const auto& [t, c] : b) flatv[pidx.at(u) * nd + t] = c;
    return V.act_elem(flatv);
  };

  auto act_of = [&](const QWPElement& g_elem) {
    Matrix m(dim, dim);
    for (size_t k = 0; k < reps.size(); ++k) {
      QWPElement x = A.multiply(g_elem, A.monomial(A.tensor_unit(), reps[k]));
      QWPElement right = A.right_pbw(x);
      for (const auto& [z, cz] : right) {
        auto [wprime, u] = coset_factorize(z, mu);
        Matrix blockm = act_parabolic(A.left_mul_word(reduced_word(u), A.from_base(cz)));
        int row0 = ridx.at(wprime) * V.dim(), col0 = static_cast<int>(k) * V.dim();
        for (int r = 0; r < V.dim(); ++r)
          for (int c = 0; c < V.dim(); ++c)
            if (!blockm.at(r, c).is_zero()) m.at(row0 + r, col0 + c) += blockm.at(r, c);
      }
    }
    return m;
  };

  std::map<int, Matrix> action;
  const auto& gens = walg->generators();
  size_t pos = 0;
  const int gper = static_cast<int>(A.params().base->generators().size());
  for (int p = 0; p < d; ++p)
    for (int gk = 0; gk < gper; ++gk) {
      std::vector<int> t(static_cast<size_t>(d), A.params().base->unit());
      t[static_cast<size_t>(p)] = A.params().base->generators()[static_cast<size_t>(gk)];
      action[gens[pos++]] = act_of(A.from_base(sv_unit(tensor_index(t, A.base_dim()))));
    }
  for (int i = 1; i < d; ++i) action[gens[pos++]] = act_of(A.gen(i));
  return ModuleRep(walg, dim, std::move(action));
}

// ---------------------------------------------------------------------------
// The induced-module isomorphism ind_{1^d}^d(M^{otimes d}) = M wr (twisted Hecke)
// ---------------------------------------------------------------------------

struct InducedIsoResult {
  bool ok = false;
  Matrix witness{0, 0};  // the intertwiner on success
};

/// Realize tau^M as the candidate map H_w (x) m -> sum_x block[w][x](m) (x)
/// h_x, verify the intertwiner property on all generators and invertibility.
/// Throws NotInvertible if some sigma^M_i is singular.
inline InducedIsoResult induced_iso_check(const GroundModuleData& gm, const AlgebraPtr& walg) {
  const QWP& A = gm.ambient();
  const int d = gm.d();
  for (int i = 1; i < d; ++i)
    if (!gm.sigmaM_i(i).is_invertible()) throw NotInvertible("sigma^M_" + std::to_string(i) + " is singular");

  HeckeLike tH = twisted_hecke(d, gm.chiS(), gm.chiR());
  // N = regular module of the twisted Hecke algebra.
  std::map<int, Matrix> reg;
  for (int i = 1; i < d; ++i) {
    Matrix m(tH.alg->dim(), tH.alg->dim());
    for (int j = 0; j < tH.alg->dim(); ++j)
      for (const auto& [r, c] : tH.alg->mult_basis(tH.idx(Perm::s(i, d)), j)) m.at(r, j) = c;
    reg[tH.idx(Perm::s(i, d))] = std::move(m);
  }
  ModuleRep N(tH.alg, tH.alg->dim(), std::move(reg));
  ModuleRep rhs = wreath_module(gm, walg, tH, N);

  // lhs: induce M^{otimes d} from the trivial parabolic.
  std::vector<int> ones(static_cast<size_t>(d), 1);
  AlgebraPtr par = parabolic_algebra(A, ones);
  std::vector<ModuleRep> blocks(static_cast<size_t>(d), gm.M());
  ModuleRep V = parabolic_outer_tensor(A, ones, par, blocks);
  ModuleRep lhs = parabolic_induce(A, ones, par, V, walg);

  // Candidate intertwiner from tau^M.
  StructureMapTable tau = build_tau(gm);
  auto reps = min_coset_reps(ones, d);  // all of Sigma_d, sorted
  Matrix T(rhs.dim(), lhs.dim());
  for (size_t k = 0; k < reps.size(); ++k)
    for (int mcol = 0; mcol < gm.dimMd(); ++mcol) {
      int col = static_cast<int>(k) * gm.dimMd() + mcol;
      for (const auto& [x, Ax] : tau.at(reps[k]))
        for (int r = 0; r < gm.dimMd(); ++r)
          if (!Ax.at(r, mcol).is_zero()) T.at(r * tH.alg->dim() + tH.idx(x), col) += Ax.at(r, mcol);
    }
  InducedIsoResult out;
  for (int g : walg->generators())
    if (T * lhs.act_gen(g) != rhs.act_gen(g) * T) return out;
  if (!T.is_invertible()) return out;
  out.ok = true;
  out.witness = std::move(T);
  return out;
}

// ---------------------------------------------------------------------------
// Hom spaces between wreath modules; the wreath functor
// ---------------------------------------------------------------------------

struct WreathHomReport {
  int hom_wreath = 0;   // dim Hom over the wreath product
  int hom_formula = 0;  // dim Hom_B(M1,M2)^d * dim Hom_H(N1,N2)
  bool equal = false;
};

inline WreathHomReport wreath_hom_check(const AlgebraPtr& walg, const HeckeLike& tH, const GroundModuleData& gm1,
                                        const ModuleRep& N1, const GroundModuleData& gm2, const ModuleRep& N2) {
  WreathHomReport rep;
  ModuleRep w1 = wreath_module(gm1, walg, tH, N1);
  ModuleRep w2 = wreath_module(gm2, walg, tH, N2);
  rep.hom_wreath = static_cast<int>(hom_space(w1, w2).size());
  int hb = static_cast<int>(hom_space(gm1.M(), gm2.M()).size());
  int hn = static_cast<int>(hom_space(N1, N2).size());
  int hbd = 1;
  for (int p = 0; p < gm1.d(); ++p) hbd *= hb;
  rep.hom_formula = hbd * hn;
  rep.equal = rep.hom_wreath == rep.hom_formula;
  return rep;
}

struct WreathFunctorReport {
  bool end_is_k = false;        // End_B(M) = K
  bool identity_ok = false;     // M wr id = id
  bool composition_ok = false;  // M wr (f o g) = (M wr f) o (M wr g)
  bool fully_faithful = false;  // Hom dims match on all supplied pairs
  bool all() const { return end_is_k && identity_ok && composition_ok && fully_faithful; }
};

inline WreathFunctorReport wreath_functor_check(const GroundModuleData& gm, const AlgebraPtr& walg,
                                                const HeckeLike& tH, const std::vector<ModuleRep>& Ns) {
  WreathFunctorReport rep;
  rep.end_is_k = hom_space(gm.M(), gm.M()).size() == 1;
  const int md = gm.dimMd();
  auto wreath_of = [&](const Matrix& f) { return kron(Matrix::identity(md), f); };

  rep.identity_ok = true;
  rep.composition_ok = true;
  rep.fully_faithful = true;
  std::vector<ModuleRep> wreaths;
  for (const auto& N : Ns) wreaths.push_back(wreath_module(gm, walg, tH, N));
  for (size_t a = 0; a < Ns.size(); ++a) {
    if (wreath_of(Matrix::identity(Ns[a].dim())) != Matrix::identity(wreaths[a].dim())) rep.identity_ok = false;
    for (size_t b = 0; b < Ns.size(); ++b) {
      auto homs = hom_space(Ns[a], Ns[b]);
      auto whoms = hom_space(wreaths[a], wreaths[b]);
      if (homs.size() != whoms.size()) rep.fully_faithful = false;
      // Each M wr f must be an intertwiner of the wreath modules.
      for (const auto& f : homs) {
        Matrix wf = wreath_of(f);
        for (int g : walg->generators())
          if (wf * wreaths[a].act_gen(g) != wreaths[b].act_gen(g) * wf) rep.fully_faithful = false;
      }
      for (size_t c = 0; c < Ns.size(); ++c)
        for (const auto& f : hom_space(Ns[b], Ns[c]))
          for (const auto& g : homs)
            if (wreath_of(f * g) != wreath_of(f) * wreath_of(g)) rep.composition_ok = false;
    }
  }
  return rep;
}

}  // namespace qwreath
