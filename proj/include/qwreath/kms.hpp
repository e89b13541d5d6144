#pragma once

/// The affine Hecke algebra of GL_d as a quantum wreath product over the
/// Laurent base B = K[x^{±1}], and the Kashiwara-Miwa-Stern tensor space.
///
/// Parameters: S = (q-1) 1(x)1, R = q 1(x)1, sigma = flip, and rho the
/// twisted Demazure operator
///   rho(a(x)b) = -(q-1) (a(x)b - b(x)a) / (x(x)1 - 1(x)x) * (1(x)x),
/// with q = v^2.  The base is never materialized as a finite algebra: sigma
/// and rho act exactly on Laurent monomials, and all condition checks are
/// windowed — the window bounds only the set of INPUT monomials exercised;
/// every evaluation itself is exact.
///
/// The tensor space T_n = (+)_{i in Z} K v_i carries x^{±1} . v_i = v_{i±n}.
/// Its simple K[x^{±1}]-submodules are V_j = (+)_i K v_{j+ni}, j = 1..n, and
/// V_j^{(x)d} = V_j wr K_q is a cyclic wreath module: every element is
/// P . v_j^{(x)d}, with H_i acting by q sigma_i(P) + rho_i(P).

#include "qwreath/partition.hpp"
#include "qwreath/qwp.hpp"

namespace qwreath {

// ---------------------------------------------------------------------------
// Symbolic Laurent monomials in d slots
// ---------------------------------------------------------------------------

using MExp = std::vector<int>;
using MPoly = std::map<MExp, RatFunc>;

inline void mp_add(MPoly& dst, const MExp& e, const RatFunc& c) {
  if (c.is_zero()) return;
  auto it = dst.find(e);
  if (it == dst.end()) {
    dst.emplace(e, c);
  } else if ((it->second += c).is_zero()) {
    dst.erase(it);
  }
}

inline MPoly mp_monomial(MExp e, RatFunc c = RatFunc(1)) {
  MPoly p;
  mp_add(p, std::move(e), std::move(c));
  return p;
}

inline MPoly mp_scale(const RatFunc& c, const MPoly& p) {
  MPoly out;
  for (const auto& [e, x] : p) mp_add(out, e, c * x);
  return out;
}

inline MPoly mp_add(const MPoly& a, const MPoly& b) {
  MPoly out = a;
  for (const auto& [e, x] : b) mp_add(out, e, x);
  return out;
}

inline MPoly mp_mult(const MPoly& a, const MPoly& b) {
  MPoly out;
  for (const auto& [e1, c1] : a)
    for (const auto& [e2, c2] : b) {
      MExp e = e1;
      for (size_t k = 0; k < e.size(); ++k) e[k] += e2[k];
      mp_add(out, std::move(e), c1 * c2);
    }
  return out;
}

/// sigma_i: swap the exponents in slots i and i+1 (1-based).
inline MPoly kms_sigma_i(const MPoly& p, int i) {
  MPoly out;
  for (const auto& [e, c] : p) {
    MExp f = e;
    std::swap(f[static_cast<size_t>(i - 1)], f[static_cast<size_t>(i)]);
    mp_add(out, std::move(f), c);
  }
  return out;
}

/// rho_i: the twisted Demazure operator on slots i, i+1.  On a monomial with
/// exponents (a, b) in those slots the divided difference is computed as an
/// exact geometric sum:
///   a < b:  rho = +(q-1) sum_{k=0}^{b-a-1} x_i^{a+k} x_{i+1}^{b-k}
///   a > b:  rho = -(q-1) sum_{k=0}^{a-b-1} x_i^{b+k} x_{i+1}^{a-k}
///   a = b:  rho = 0.
inline MPoly kms_rho_i(const MPoly& p, int i) {
  const RatFunc qm1 = q_param() - RatFunc(1);
  MPoly out;
  for (const auto& [e, c] : p) {
    int a = e[static_cast<size_t>(i - 1)], b = e[static_cast<size_t>(i)];
    if (a == b) continue;
    int lo = std::min(a, b), hi = std::max(a, b);
    RatFunc coef = (a < b ? qm1 : -qm1) * c;
    for (int k = 0; k < hi - lo; ++k) {
      MExp f = e;
      f[static_cast<size_t>(i - 1)] = lo + k;
      f[static_cast<size_t>(i)] = hi - k;
      mp_add(out, std::move(f), coef);
    }
  }
  return out;
}

/// All exponent vectors in [-window, window]^d.
inline std::vector<MExp> kms_window_exps(int d, int window) {
  std::vector<MExp> out;
  MExp cur(static_cast<size_t>(d), -window);
  for (;;) {
    out.push_back(cur);
    int k = 0;
    while (k < d && cur[static_cast<size_t>(k)] == window) cur[static_cast<size_t>(k++)] = -window;
    if (k == d) break;
    ++cur[static_cast<size_t>(k)];
  }
  return out;
}

// ---------------------------------------------------------------------------
// Windowed presentation conditions
// ---------------------------------------------------------------------------

namespace detail {

inline std::string mexp_str(const MExp& e) {
  std::string s = "x^(";
  for (size_t k = 0; k < e.size(); ++k) {
    if (k) s += ",";
    s += std::to_string(e[k]);
  }
  return s + ")";
}

/// Compare two MPoly-valued operators on every windowed monomial.
template <typename F, typename G>
bool kms_op_eq(int d, int window, F&& lhs, G&& rhs, std::string* witness) {
  for (const MExp& e : kms_window_exps(d, window)) {
    MPoly m = mp_monomial(e);
    if (lhs(m) != rhs(m)) {
      if (witness) *witness = mexp_str(e);
      return false;
    }
  }
  if (witness) witness->clear();
  return true;
}

}  // namespace detail

/// (P1)-(P4) on two slots and (P5)-(P9) on three slots, each evaluated
/// exactly on the monomials with exponents in [-window, window].  Labels are
/// suffixed with the window so reports are explicit about coverage.
inline ConditionReport kms_verify_pbw(int window) {
  ConditionReport rep;
  const RatFunc q = q_param(), S = q - RatFunc(1), R = q;
  const std::string wtag = " [window " + std::to_string(window) + "]";
  std::string w;
  auto sg2 = [](const MPoly& p) { return kms_sigma_i(p, 1); };
  auto rh2 = [](const MPoly& p) { return kms_rho_i(p, 1); };

  MPoly unit2 = mp_monomial(MExp{0, 0});
  rep.add("P1.sigma" + wtag, sg2(unit2) == unit2);
  rep.add("P1.rho" + wtag, rh2(unit2).empty());

  {
    bool s_ok = true, r_ok = true;
    std::string sw, rw;
    auto exps = kms_window_exps(2, window);
    for (const MExp& ea : exps) {
      for (const MExp& eb : exps) {
        MPoly a = mp_monomial(ea), b = mp_monomial(eb), ab = mp_mult(a, b);
        std::string pair = "(" + detail::mexp_str(ea) + ", " + detail::mexp_str(eb) + ")";
        if (s_ok && sg2(ab) != mp_mult(sg2(a), sg2(b))) {
          s_ok = false;
          sw = pair;
        }
        if (r_ok && rh2(ab) != mp_add(mp_mult(sg2(a), rh2(b)), mp_mult(rh2(a), b))) {
          r_ok = false;
          rw = pair;
        }
        if (!s_ok && !r_ok) break;
      }
      if (!s_ok && !r_ok) break;
    }
    rep.add("P2.sigma" + wtag, s_ok, sw);
    rep.add("P2.rho" + wtag, r_ok, rw);
  }

  {
    // S and R are scalar multiples of 1(x)1.
    MPoly Se = mp_scale(S, unit2), Re = mp_scale(R, unit2);
    MPoly lhs1 = mp_add(mp_add(mp_mult(sg2(Se), Se), rh2(Se)), sg2(Re));
    rep.add("P3.quadratic" + wtag, lhs1 == mp_add(mp_mult(Se, Se), Re));
    rep.add("P3.mixed" + wtag, mp_add(rh2(Re), mp_mult(sg2(Se), Re)) == mp_mult(Se, Re));
  }

  rep.add("P4.first" + wtag,
          detail::kms_op_eq(
              2, window,
              [&](const MPoly& m) {
                return mp_add(mp_scale(S, sg2(sg2(m))), mp_add(rh2(sg2(m)), sg2(rh2(m))));
              },
              [&](const MPoly& m) { return mp_scale(S, sg2(m)); }, &w),
          w);
  rep.add("P4.second" + wtag,
          detail::kms_op_eq(
              2, window,
              [&](const MPoly& m) { return mp_add(mp_scale(R, sg2(sg2(m))), rh2(rh2(m))); },
              [&](const MPoly& m) { return mp_add(mp_scale(S, rh2(m)), mp_scale(R, m)); }, &w),
          w);

  for (auto [i, j] : std::vector<std::pair<int, int>>{{1, 2}, {2, 1}}) {
    std::string tag = " (i,j)=(" + std::to_string(i) + "," + std::to_string(j) + ")" + wtag;
    auto sgi = [i = i](const MPoly& p) { return kms_sigma_i(p, i); };
    auto sgj = [j = j](const MPoly& p) { return kms_sigma_i(p, j); };
    auto rhi = [i = i](const MPoly& p) { return kms_rho_i(p, i); };
    auto rhj = [j = j](const MPoly& p) { return kms_rho_i(p, j); };
    rep.add("P5.braid" + tag,
            detail::kms_op_eq(
                3, window, [&](const MPoly& m) { return sgi(sgj(sgi(m))); },
                [&](const MPoly& m) { return sgj(sgi(sgj(m))); }, &w),
            w);
    rep.add("P5.mixed" + tag,
            detail::kms_op_eq(
                3, window, [&](const MPoly& m) { return rhi(sgj(sgi(m))); },
                [&](const MPoly& m) { return sgj(sgi(rhj(m))); }, &w),
            w);
    rep.add("P6" + tag,
            detail::kms_op_eq(
                3, window, [&](const MPoly& m) { return rhi(sgj(rhi(m))); },
                [&](const MPoly& m) {
                  return mp_add(mp_scale(S, sgj(rhi(sgj(m)))),
                                mp_add(rhj(rhi(sgj(m))), sgj(rhi(rhj(m)))));
                },
                &w),
            w);
    rep.add("P7" + tag,
            detail::kms_op_eq(
                3, window,
                [&](const MPoly& m) { return mp_add(rhi(rhj(rhi(m))), mp_scale(R, sgi(rhj(sgi(m))))); },
                [&](const MPoly& m) { return mp_add(rhj(rhi(rhj(m))), mp_scale(R, sgj(rhi(sgj(m))))); }, &w),
            w);
    // (P8)/(P9): S and R are scalar multiples of the unit, so the identities
    // reduce to sigma/rho of the unit monomial; evaluated rather than assumed.
    MPoly unit3 = mp_monomial(MExp{0, 0, 0});
    MPoly Sj = mp_scale(S, unit3), Rj = mp_scale(R, unit3);
    rep.add("P8.S" + tag, sgj(sgi(Sj)) == Sj);
    rep.add("P8.R" + tag, sgj(sgi(Rj)) == Rj);
    rep.add("P8.rhoS" + tag, rhj(sgi(Sj)).empty());
    rep.add("P8.rhoR" + tag, rhj(sgi(Rj)).empty());
    MPoly riS = rhi(Sj), riR = rhi(Rj);
    rep.add("P9.first" + tag, mp_add(mp_mult(sgj(riS), Sj), mp_add(rhj(riS), sgj(riR))).empty());
    rep.add("P9.second" + tag, mp_add(rhj(riR), mp_mult(sgj(riS), Rj)).empty());
  }
  return rep;
}

/// Ground conditions for M = V_j, where sigma^M_i and rho^M_i act on
/// P . v_j^{(x)d} by sigma_i(P) and rho_i(P), and chi = (q-1, q): (M2) with b
/// ranging over the slot generators x_p^{±1}, (M4), and (M5)-(M7) when d = 3.
inline ConditionReport kms_verify_ground(int d, int window) {
  ConditionReport rep;
  const RatFunc q = q_param(), chiS = q - RatFunc(1), chiR = q;
  const std::string wtag = " [window " + std::to_string(window) + "]";
  std::string w;

  std::vector<MExp> gens;
  for (int p = 0; p < d; ++p)
    for (int sgn : {1, -1}) {
      MExp e(static_cast<size_t>(d), 0);
      e[static_cast<size_t>(p)] = sgn;
      gens.push_back(std::move(e));
    }

  for (int i = 1; i < d; ++i) {
    auto sg = [i](const MPoly& p) { return kms_sigma_i(p, i); };
    auto rh = [i](const MPoly& p) { return kms_rho_i(p, i); };
    std::string si = std::to_string(i);
    bool m2s = true, m2r = true;
    std::string sw, rw;
    for (const MExp& ge : gens) {
      MPoly b = mp_monomial(ge);
      for (const MExp& pe : kms_window_exps(d, window)) {
        MPoly m = mp_monomial(pe), bm = mp_mult(b, m);
        std::string pair = "(b,m) = (" + detail::mexp_str(ge) + ", " + detail::mexp_str(pe) + ")";
        if (m2s && sg(bm) != mp_mult(sg(b), sg(m))) {
          m2s = false;
          sw = pair;
        }
        if (m2r && rh(bm) != mp_add(mp_mult(sg(b), rh(m)), mp_mult(rh(b), m))) {
          m2r = false;
          rw = pair;
        }
        if (!m2s && !m2r) break;
      }
      if (!m2s && !m2r) break;
    }
    rep.add("M2.sigma i=" + si + wtag, m2s, sw);
    rep.add("M2.rho i=" + si + wtag, m2r, rw);

    rep.add("M4.first i=" + si + wtag,
            detail::kms_op_eq(
                d, window,
                [&](const MPoly& m) { return mp_add(mp_scale(chiS, sg(sg(m))), mp_add(rh(sg(m)), sg(rh(m)))); },
                [&](const MPoly& m) { return mp_scale(chiS, sg(m)); }, &w),
            w);
    rep.add("M4.second i=" + si + wtag,
            detail::kms_op_eq(
                d, window,
                [&](const MPoly& m) { return mp_add(mp_scale(chiR, sg(sg(m))), rh(rh(m))); },
                [&](const MPoly& m) { return mp_add(mp_scale(chiS, rh(m)), mp_scale(chiR, m)); }, &w),
            w);
  }

  for (int i = 1; i < d; ++i)
    for (int j : {i - 1, i + 1}) {
      if (j < 1 || j >= d) continue;
      std::string tag = " (i,j)=(" + std::to_string(i) + "," + std::to_string(j) + ")" + wtag;
      auto sgi = [i](const MPoly& p) { return kms_sigma_i(p, i); };
      auto sgj = [j](const MPoly& p) { return kms_sigma_i(p, j); };
      auto rhi = [i](const MPoly& p) { return kms_rho_i(p, i); };
      auto rhj = [j](const MPoly& p) { return kms_rho_i(p, j); };
      if (i < j)
        rep.add("M5.braid" + tag,
                detail::kms_op_eq(
                    d, window, [&](const MPoly& m) { return sgi(sgj(sgi(m))); },
                    [&](const MPoly& m) { return sgj(sgi(sgj(m))); }, &w),
                w);
      rep.add("M5.mixed" + tag,
              detail::kms_op_eq(
                  d, window, [&](const MPoly& m) { return rhi(sgj(sgi(m))); },
                  [&](const MPoly& m) { return sgj(sgi(rhj(m))); }, &w),
              w);
      rep.add("M6" + tag,
              detail::kms_op_eq(
                  d, window, [&](const MPoly& m) { return rhi(sgj(rhi(m))); },
                  [&](const MPoly& m) {
                    return mp_add(mp_scale(chiS, sgj(rhi(sgj(m)))),
                                  mp_add(rhj(rhi(sgj(m))), sgj(rhi(rhj(m)))));
                  },
                  &w),
              w);
      if (i < j)
        rep.add("M7" + tag,
                detail::kms_op_eq(
                    d, window,
                    [&](const MPoly& m) { return mp_add(rhi(rhj(rhi(m))), mp_scale(chiR, sgi(rhj(sgi(m))))); },
                    [&](const MPoly& m) { return mp_add(rhj(rhi(rhj(m))), mp_scale(chiR, sgj(rhi(sgj(m))))); },
                    &w),
                w);
    }
  return rep;
}

// ---------------------------------------------------------------------------
// The structure map for V_j, symbolically
// ---------------------------------------------------------------------------

/// tau^M(w (x) P.v_j^{(x)d}) as blocks x -> Q_x meaning sum Q_x . v (x) h_x,
/// built by the same recursion as the finite-dimensional build_tau.
inline std::map<Perm, MPoly> kms_tau_blocks(const Perm& w, const MPoly& m,
                                            ChoiceRule rule = ChoiceRule::SmallestLeftDescent) {
  const int d = w.degree();
  if (w.is_identity()) return {{w, m}};
  const RatFunc q = q_param(), chiS = q - RatFunc(1), chiR = q;
  int i = reduced_word(w, rule)[0];
  auto prev = kms_tau_blocks(Perm::s(i, d) * w, m, rule);
  std::map<Perm, MPoly> blocks;
  auto add_block = [&](const Perm& u, const MPoly& p) {
    MPoly& dst = blocks[u];
    dst = mp_add(dst, p);
  };
  for (const auto& [u, A] : prev) {
    MPoly sA = kms_sigma_i(A, i);
    Perm su = Perm::s(i, d) * u;
    if (su.length() > u.length()) {
      add_block(su, sA);
    } else {
      add_block(u, mp_scale(chiS, sA));
      add_block(su, mp_scale(chiR, sA));
    }
    add_block(u, kms_rho_i(A, i));
  }
  for (auto it = blocks.begin(); it != blocks.end();)
    it = it->second.empty() ? blocks.erase(it) : std::next(it);
  return blocks;
}

/// The two deterministic choice rules produce the same structure map on every
/// windowed monomial.
inline bool kms_check_tau_independence(int d, int window) {
  for (const MExp& e : kms_window_exps(d, window)) {
    MPoly m = mp_monomial(e);
    for (const Perm& w : all_perms(d))
      if (kms_tau_blocks(w, m, ChoiceRule::SmallestLeftDescent) !=
          kms_tau_blocks(w, m, ChoiceRule::LargestLeftDescent))
        return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// The tensor space T_n^{(x)d}
// ---------------------------------------------------------------------------

/// A finitely-supported combination of basis tensors v_{i_1} (x)...(x) v_{i_d}.
using KTensor = std::map<std::vector<int>, RatFunc>;

inline void kt_add(KTensor& dst, const std::vector<int>& idx, const RatFunc& c) {
  if (c.is_zero()) return;
  auto it = dst.find(idx);
  if (it == dst.end()) {
    dst.emplace(idx, c);
  } else if ((it->second += c).is_zero()) {
    dst.erase(it);
  }
}

/// Residue class of the index a in {1..n}: the label of the V_j containing v_a.
inline int kms_class(int a, int n) {
  int r = (a - 1) % n;
  if (r < 0) r += n;
  return r + 1;
}

/// H_i on a basis tensor, in closed form on the indices (a, b) of slots
/// i, i+1.  Write a = a0 + n e1, b = b0 + n e2 with residues a0, b0 in {1..n};
/// then H . (v_a (x) v_b) = sigma(P) . (H . (v_{a0} (x) v_{b0})) + rho(P) .
/// (v_{a0} (x) v_{b0}) with P = x^{e1} (x) x^{e2}, which expands to the seed
///   a0 = b0 : q . (v_{a0} (x) v_{b0})
///   a0 < b0 : v_{b0} (x) v_{a0}
///   a0 > b0 : q . (v_{b0} (x) v_{a0}) + (q-1) . (v_{a0} (x) v_{b0})
/// shifted by (n e2, n e1), plus the geometric-sum terms of rho(P).  The
/// seeds on the residue representatives are forced by the requirement that
/// each residue component of T_n^{(x)d} be the parabolic induction of
/// V_{k_1} wr S^{(mu_1)} (x) ... with blocks in increasing class order.
inline KTensor kms_direct_Hi(const std::vector<int>& idx, int i, int n) {
  const RatFunc q = q_param(), qm1 = q - RatFunc(1);
  const int a = idx[static_cast<size_t>(i - 1)], b = idx[static_cast<size_t>(i)];
  const int a0 = kms_class(a, n), b0 = kms_class(b, n);
  const int e1 = (a - a0) / n, e2 = (b - b0) / n;
  // pairs (left index, right index) with coefficients
  std::vector<std::pair<std::pair<int, int>, RatFunc>> pairs;
  // seed, shifted by sigma(P) = x^{e2} (x) x^{e1}
  if (a0 == b0) {
    pairs.push_back({{a0 + n * e2, b0 + n * e1}, q});
  } else if (a0 < b0) {
    pairs.push_back({{b0 + n * e2, a0 + n * e1}, RatFunc(1)});
  } else {
    pairs.push_back({{b0 + n * e2, a0 + n * e1}, q});
    pairs.push_back({{a0 + n * e2, b0 + n * e1}, qm1});
  }
  // rho(P) applied to v_{a0} (x) v_{b0}
  if (e1 < e2) {
    for (int k = 0; k < e2 - e1; ++k) pairs.push_back({{a0 + n * (e1 + k), b0 + n * (e2 - k)}, qm1});
  } else if (e1 > e2) {
    for (int k = 0; k < e1 - e2; ++k) pairs.push_back({{a0 + n * (e2 + k), b0 + n * (e1 - k)}, -qm1});
  }
  KTensor out;
  for (const auto& [pr, c] : pairs) {
    std::vector<int> f = idx;
    f[static_cast<size_t>(i - 1)] = pr.first;
    f[static_cast<size_t>(i)] = pr.second;
    kt_add(out, f, c);
  }
  return out;
}

inline KTensor kms_direct_Hi(const KTensor& t, int i, int n) {
  KTensor out;
  for (const auto& [idx, c] : t)
    for (const auto& [f, x] : kms_direct_Hi(idx, i, n)) kt_add(out, f, c * x);
  return out;
}

/// x_p^{±1} on a tensor: shift the index in slot p by ±n.
inline KTensor kms_x(const KTensor& t, int p, int sign, int n) {
  KTensor out;
  for (const auto& [idx, c] : t) {
    std::vector<int> f = idx;
    f[static_cast<size_t>(p - 1)] += sign * n;
    kt_add(out, f, c);
  }
  return out;
}

/// H_i on a V_j-pure tensor via the wreath-module formula of the cyclic
/// module V_j^{(x)d} = V_j wr K_q: write the tensor as P . v_j^{(x)d} and
/// return (q sigma_i(P) + rho_i(P)) . v_j^{(x)d}, computed symbolically.
inline KTensor kms_wreath_Hi_pure(const std::vector<int>& idx, int i, int n) {
  const int d = static_cast<int>(idx.size());
  const int j = kms_class(idx[0], n);
  MExp e(static_cast<size_t>(d));
  for (int p = 0; p < d; ++p) {
    if (kms_class(idx[static_cast<size_t>(p)], n) != j)
      throw std::invalid_argument("tensor is not V_j-pure");
    e[static_cast<size_t>(p)] = (idx[static_cast<size_t>(p)] - j) / n;
  }
  MPoly P = mp_monomial(e);
  MPoly out = mp_add(mp_scale(q_param(), kms_sigma_i(P, i)), kms_rho_i(P, i));
  KTensor res;
  for (const auto& [f, c] : out) {
    std::vector<int> v(static_cast<size_t>(d));
    for (int p = 0; p < d; ++p) v[static_cast<size_t>(p)] = j + n * f[static_cast<size_t>(p)];
    kt_add(res, v, c);
  }
  return res;
}

struct KMSTensorReport {
  int n = 0, d = 0, window = 0;
  bool pure_agree = true;       // direct vs wreath-assembled on V_j-pure tensors
  std::string pure_witness;
  bool relations_ok = true;     // quadratic, braid, and wreath relations for the direct action
  std::string relations_witness;
  bool summands_closed = true;  // each T_lam (fixed class multiset) is preserved
  std::string closure_witness;
  std::vector<std::string> boundary;  // outputs leaving the window (window-edge inputs only)
  bool interior_clean = true;   // no boundary output from an interior input
  bool partition_ok = true;     // windowed basis counts match the Omega' bookkeeping
  std::map<std::string, long long> summand_mult;  // lam -> number of minimal coset reps
  bool ok() const { return pure_agree && relations_ok && summands_closed && interior_clean && partition_ok; }
};

namespace detail {

inline long long multinomial(int d, const std::vector<int>& mu) {
  long long out = 1;
  int rem = d;
  for (int part : mu) {
    for (int k = 1; k <= part; ++k) out = out * rem-- / k;
  }
  return out;
}

inline std::string kt_idx_str(const std::vector<int>& idx) {
  std::string s = "v(";
  for (size_t k = 0; k < idx.size(); ++k) {
    if (k) s += ",";
    s += std::to_string(idx[k]);
  }
  return s + ")";
}

}  // namespace detail

/// Exercise the KMS tensor space on all basis tensors with indices in
/// [-window, window]: (i) on V_j-pure tensors the closed-form direct action
/// agrees with the wreath-module formula; (ii) the direct action satisfies
/// the quadratic, braid, and wreath relations exactly; (iii) each summand
/// T_lam (lam in Omega', one-row values; the span of the tensors whose slot
/// classes realize lam) is closed under every H_i, with any output leaving
/// the window collected into the boundary report; (iv) the windowed basis is
/// partitioned by Omega' with each lam of shape mu contributing
/// multinomial(d; mu) minimal coset representatives.
inline KMSTensorReport kms_tensor(int n, int d, int window) {
  KMSTensorReport rep;
  rep.n = n;
  rep.d = d;
  rep.window = window;
  const RatFunc q = q_param(), qm1 = q - RatFunc(1);
  IBPoset poset = IBPoset::total_order(n);

  // All windowed basis tensors.
  std::vector<std::vector<int>> tensors;
  {
    std::vector<int> cur(static_cast<size_t>(d), -window);
    for (;;) {
      tensors.push_back(cur);
      int k = 0;
      while (k < d && cur[static_cast<size_t>(k)] == window) cur[static_cast<size_t>(k++)] = -window;
      if (k == d) break;
      ++cur[static_cast<size_t>(k)];
    }
  }

  auto classes_of = [&](const std::vector<int>& idx) {
    std::map<int, int> mult;  // class -> count
    for (int a : idx) ++mult[kms_class(a, n)];
    return mult;
  };

  // (i) pure tensors: direct vs wreath formula.
  for (const auto& idx : tensors) {
    if (!rep.pure_agree) break;
    auto mult = classes_of(idx);
    if (mult.size() != 1) continue;
    for (int i = 1; i < d; ++i)
      if (kms_direct_Hi(idx, i, n) != kms_wreath_Hi_pure(idx, i, n)) {
        rep.pure_agree = false;
        rep.pure_witness = detail::kt_idx_str(idx) + ", i = " + std::to_string(i);
        break;
      }
  }

  // (ii) defining relations for the direct action.
  for (const auto& idx : tensors) {
    if (!rep.relations_ok) break;
    KTensor t{{idx, RatFunc(1)}};
    for (int i = 1; i < d && rep.relations_ok; ++i) {
      KTensor hi = kms_direct_Hi(t, i, n);
      // quadratic: H_i^2 = (q-1) H_i + q
      KTensor lhs = kms_direct_Hi(hi, i, n);
      KTensor rhs;
      for (const auto& [f, c] : hi) kt_add(rhs, f, qm1 * c);
      kt_add(rhs, idx, q);
      if (lhs != rhs) {
        rep.relations_ok = false;
        rep.relations_witness = "quadratic at " + detail::kt_idx_str(idx) + ", i = " + std::to_string(i);
        break;
      }
      // wreath: H_i x_p^{±1} = sigma_i(x_p^{±1}) H_i + rho_i(x_p^{±1})
      for (int p = 1; p <= d && rep.relations_ok; ++p)
        for (int sign : {1, -1}) {
          KTensor l = kms_direct_Hi(kms_x(t, p, sign, n), i, n);
          int sp = p == i ? i + 1 : (p == i + 1 ? i : p);
          KTensor r = kms_x(hi, sp, sign, n);
          if (p == i || p == i + 1) {
            // rho_i(x_i) = -(q-1) x_{i+1}; rho_i(x_{i+1}) = (q-1) x_{i+1};
            // rho_i(x_i^{-1}) = (q-1) x_i^{-1}; rho_i(x_{i+1}^{-1}) = -(q-1) x_i^{-1}.
            RatFunc c = qm1;
            if ((p == i) == (sign == 1)) c = -c;
            int slot = sign == 1 ? i + 1 : i;
            for (const auto& [f, x] : kms_x(t, slot, sign, n)) kt_add(r, f, c * x);
          }
          if (l != r) {
            rep.relations_ok = false;
            rep.relations_witness = "wreath at " + detail::kt_idx_str(idx) + ", i = " + std::to_string(i) +
                                    ", p = " + std::to_string(sign * p);
            break;
          }
        }
    }
    // braid
    for (int i = 1; i + 1 < d && rep.relations_ok; ++i) {
      int j = i + 1;
      KTensor l = kms_direct_Hi(kms_direct_Hi(kms_direct_Hi(t, i, n), j, n), i, n);
      KTensor r = kms_direct_Hi(kms_direct_Hi(kms_direct_Hi(t, j, n), i, n), j, n);
      if (l != r) {
        rep.relations_ok = false;
        rep.relations_witness = "braid at " + detail::kt_idx_str(idx) + ", i = " + std::to_string(i);
      }
    }
  }

  // (iii) closure of each T_lam and boundary reporting.  Mixed-residue
  // geometric-sum terms live on the residue representatives and can step up
  // to n-1 past the input index range, so inputs within n of the window edge
  // may emit out-of-window terms; these are reported.  Inputs in the interior
  // (all indices at distance >= n from the edge) must emit none.
  for (const auto& idx : tensors) {
    auto mult = classes_of(idx);
    bool interior = true;
    for (int a : idx)
      if (std::abs(a) > window - n) interior = false;
    for (int i = 1; i < d; ++i)
      for (const auto& [f, c] : kms_direct_Hi(idx, i, n)) {
        if (classes_of(f) != mult && rep.summands_closed) {
          rep.summands_closed = false;
          rep.closure_witness = detail::kt_idx_str(idx) + " -> " + detail::kt_idx_str(f);
        }
        for (int a : f)
          if (a < -window || a > window) {
            rep.boundary.push_back(detail::kt_idx_str(idx) + " -> " + detail::kt_idx_str(f));
            if (interior) rep.interior_clean = false;
            break;
          }
      }
  }

  // (iv) Omega' bookkeeping: one-row multipartitions index the class
  // multisets; counts and coset multiplicities must match.
  std::map<std::map<int, int>, long long> observed;  // class multiset -> # windowed tensors
  for (const auto& idx : tensors) ++observed[classes_of(idx)];
  long long total = 0;
  for (const Multipartition& lam : enumerate_omega(poset, d)) {
    bool one_row = true;
    for (const auto& [label, nu] : lam.support())
      if (nu.rows() != 1) one_row = false;
    if (!one_row) continue;
    std::map<int, int> mult;   // class multiset of lam
    std::vector<int> mu;       // shape, blocks in increasing class order
    long long pure = 1;        // windowed tensors per block arrangement
    for (const auto& [label, nu] : lam.support()) {
      int k = label + 1, parts = nu.size();
      mult[k] = parts;
      mu.push_back(parts);
      long long per_slot = 0;
      for (int a = -window; a <= window; ++a)
        if (kms_class(a, n) == k) ++per_slot;
      for (int s = 0; s < parts; ++s) pure *= per_slot;
    }
    long long cosets = static_cast<long long>(min_coset_reps(mu, d).size());
    rep.summand_mult[lam.str(poset)] = cosets;
    if (cosets != detail::multinomial(d, mu)) rep.partition_ok = false;
    auto it = observed.find(mult);
    if (it == observed.end() || it->second != cosets * pure) rep.partition_ok = false;
    total += cosets * pure;
  }
  if (total != static_cast<long long>(tensors.size())) rep.partition_ok = false;
  return rep;
}

}  // namespace qwreath
