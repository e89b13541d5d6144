// Acceptance suite: one self-contained check per advertised guarantee, each
// printed as a single pass/fail line.  Exit status is 0 iff all pass.

#include <chrono>
#include <functional>
#include <iostream>
#include <set>

#include "qwreath/ak.hpp"
#include "qwreath/hu.hpp"
#include "qwreath/kms.hpp"

using namespace qwreath;

namespace {

struct Check {
  std::string name;
  std::function<bool(std::string&)> run;
  long long budget_ms = -1;  // enforced wall-clock budget, if nonnegative
};

RatFunc vpow(int k) { return RatFunc::v(k); }
Partition P(std::initializer_list<int> parts) { return Partition(std::vector<int>(parts)); }

const RatFunc kVV = vpow(1) - vpow(-1);

HuFamily& hu(int m) {
  static std::map<int, std::unique_ptr<HuFamily>> cache;
  auto& p = cache[m];
  if (!p) p = std::make_unique<HuFamily>(m);
  return *p;
}

AKFamily& ak(int m) {
  static std::map<int, std::unique_ptr<AKFamily>> cache;
  auto& p = cache[m];
  if (!p) p = std::make_unique<AKFamily>(ak_generic_u(m));
  return *p;
}

// The twisted Hecke algebra presented as a wreath product over the
// one-dimensional base K = K[t]/(t - u).
QWPParams scalar_base_params(int d, const RatFunc& chiS, const RatFunc& chiR) {
  AlgebraPtr base = cyclic_quotient_algebra({vpow(2)}).alg;
  return QWPParams{base, d, sv_scale(chiS, sv_unit(0)), sv_scale(chiR, sv_unit(0)),
                   flip_sigma(base), Matrix(1, 1)};
}

bool expected_Z2(const HuFamily& fam) {
  RatFunc f = vpow(4) + RatFunc(2) * vpow(2) - RatFunc(2) + RatFunc(2) * vpow(-2) + vpow(-4);
  RatFunc g = f + RatFunc(2) * (vpow(2) + vpow(-2));
  RatFunc pre = vpow(12);
  SparseVec expect{{0, pre * RatFunc(2) * g},
                   {1, pre * kVV * g},
                   {2, pre * kVV * g},
                   {3, pre * kVV * kVV * f}};
  return fam.Zm() == expect;
}

std::vector<Multipartition> ak_chain() {
  return {Multipartition::e(0, P({1, 1})), Multipartition::e(0, P({2})),
          Multipartition::e(0, P({1})) + Multipartition::e(1, P({1})),
          Multipartition::e(1, P({1, 1})), Multipartition::e(1, P({2}))};
}

std::vector<Multipartition> hu_chain(const HuFamily& fam) {
  int two = fam.label_of(P({2})), oneone = fam.label_of(P({1, 1}));
  return {Multipartition::e(oneone, P({1, 1})), Multipartition::e(oneone, P({2})),
          Multipartition::e(two, P({1})) + Multipartition::e(oneone, P({1})),
          Multipartition::e(two, P({1, 1})), Multipartition::e(two, P({2}))};
}

bool is_chain_and_poset(const std::vector<Multipartition>& chain, const IBPoset& poset, int d,
                        std::string& why) {
  for (size_t i = 0; i < chain.size(); ++i)
    for (size_t j = 0; j < chain.size(); ++j)
      if (dominance_leq(chain[i], chain[j], poset) != (i <= j)) {
        why = "chain order mismatch at (" + std::to_string(i) + "," + std::to_string(j) + ")";
        return false;
      }
  auto omega = enumerate_omega(poset, d);
  for (size_t i = 0; i < omega.size(); ++i) {
    if (!dominance_leq(omega[i], omega[i], poset)) {
      why = "not reflexive at " + omega[i].str(poset);
      return false;
    }
    for (size_t j = 0; j < omega.size(); ++j) {
      bool ij = dominance_leq(omega[i], omega[j], poset);
      if (i != j && ij && dominance_leq(omega[j], omega[i], poset)) {
        why = "not antisymmetric at " + omega[i].str(poset) + ", " + omega[j].str(poset);
        return false;
      }
      for (size_t k = 0; k < omega.size() && ij; ++k)
        if (dominance_leq(omega[j], omega[k], poset) && !dominance_leq(omega[i], omega[k], poset)) {
          why = "not transitive at " + omega[i].str(poset);
          return false;
        }
    }
  }
  return true;
}

std::vector<ModuleRep> all_wreath_modules_m2_d2() {
  std::vector<ModuleRep> out;
  HuFamily& fh = hu(2);
  for (const Partition& lam : all_partitions(2)) {
    GroundModuleData gm = fh.ground(2, lam);
    HeckeLike tH = twisted_hecke(2, RatFunc(0), fh.f(lam, lam));
    for (const Partition& nu : all_partitions(2))
      out.push_back(wreath_module(gm, fh.wreath_algebra(2), tH, twisted_specht(tH, nu).module));
  }
  AKFamily& fa = ak(2);
  GroundModuleData gm = fa.ground(2, 1, RatFunc(1), RatFunc(0));
  HeckeLike tH = twisted_hecke(2, kVV, RatFunc(1));
  for (const Partition& nu : all_partitions(2))
    out.push_back(wreath_module(gm, fa.wreath_algebra(2), tH, twisted_specht(tH, nu).module));
  return out;
}

}  // namespace

int main() {
  std::vector<Check> checks;

  checks.push_back({"1. m=1 central element equals (q+1)^2 exactly",
                    [](std::string&) {
                      RatFunc q = q_param();
                      SparseVec expect{{0, (q + RatFunc(1)) * (q + RatFunc(1))}};
                      return hu(1).Zm() == expect && hu(1).central_report().central;
                    },
                    1000});

  checks.push_back({"2. m=2 central element: coefficient-exact closed form, commutes with all 16 basis elements",
                    [](std::string&) { return expected_Z2(hu(2)) && hu(2).central_report().central; },
                    60000});

  checks.push_back({"3. presentation conditions pass for all four base families; corrupted input fails with witness",
                    [](std::string& why) {
                      for (int m : {1, 2})
                        if (!verify_pbw_conditions(hu(m).params(3)).all_pass())
                          return why = "hu m=" + std::to_string(m), false;
                      for (int m : {2, 3})
                        if (!verify_pbw_conditions(ak(m).params(3)).all_pass())
                          return why = "ariki-koike m=" + std::to_string(m), false;
                      if (!verify_pbw_conditions(scalar_base_params(3, kVV, RatFunc(1))).all_pass())
                        return why = "scalar base, generic quadratic", false;
                      if (!verify_pbw_conditions(scalar_base_params(3, RatFunc(0), vpow(4))).all_pass())
                        return why = "scalar base, square quadratic", false;
                      if (!kms_verify_pbw(3).all_pass()) return why = "windowed Laurent base", false;
                      QWPParams bad = ak(2).params(3);
                      bad.rho = Matrix(bad.rho.rows(), bad.rho.cols());
                      ConditionReport rep = verify_pbw_conditions(bad);
                      if (rep.all_pass()) return why = "corrupted parameters accepted", false;
                      for (const auto& c : rep.results)
                        if (!c.pass && !c.witness.empty()) return true;
                      return why = "corrupted parameters failed without witness", false;
                    }});

  checks.push_back({"4. ground-module conditions: all three families pass; r = 1 fails (M4) with witness",
                    [](std::string& why) {
                      for (const Partition& lam : all_partitions(2))
                        if (!verify_ground(hu(2).ground(2, lam)).all_pass())
                          return why = "hu lambda=" + lam.str(), false;
                      if (!kms_verify_ground(2, 4).all_pass()) return why = "windowed Laurent", false;
                      for (const RatFunc& r : {vpow(1), -vpow(-1)})
                        if (!verify_ground(ak(2).ground(2, 1, RatFunc(0), r)).all_pass())
                          return why = "ariki-koike r=" + r.str(), false;
                      ConditionReport rep = verify_ground(ak(2).ground(2, 1, RatFunc(0), RatFunc(1)));
                      const ConditionResult* m4 = rep.find("M4.second i=1");
                      if (rep.all_pass() || m4 == nullptr || m4->pass || m4->witness.empty())
                        return why = "r = 1 not rejected at M4 with witness", false;
                      return true;
                    }});

  checks.push_back({"5. structure map at d = 3 is independent of the reduced-word choice rule",
                    [](std::string& why) {
                      for (const Partition& lam : all_partitions(2))
                        if (!check_tau_independence(hu(2).ground(3, lam)))
                          return why = "hu lambda=" + lam.str(), false;
                      if (!kms_check_tau_independence(3, 2)) return why = "windowed Laurent", false;
                      return true;
                    }});

  checks.push_back({"6. composite-map diagrams commute: d = 2 exhaustive and d = 3 generator mode",
                    [](std::string& why) {
                      for (int m : {1, 2})
                        for (const Partition& lam : all_partitions(m)) {
                          if (!check_diagrams(hu(m).ground(2, lam), true).all_pass())
                            return why = "hu d=2 lambda=" + lam.str(), false;
                          if (!check_diagrams(hu(m).ground(3, lam), false).all_pass())
                            return why = "hu d=3 lambda=" + lam.str(), false;
                        }
                      GroundModuleData g2 = ak(2).ground(2, 1, RatFunc(1), RatFunc(0));
                      GroundModuleData g3 = ak(2).ground(3, 1, RatFunc(1), RatFunc(0));
                      if (!check_diagrams(g2, true).all_pass()) return why = "ariki-koike d=2", false;
                      if (!check_diagrams(g3, false).all_pass()) return why = "ariki-koike d=3", false;
                      return true;
                    }});

  checks.push_back({"7. every defining relation holds exactly on all constructed wreath modules (m=2, d=2)",
                    [](std::string& why) {
                      for (const ModuleRep& mod : all_wreath_modules_m2_d2()) {
                        std::string w;
                        if (!mod.verify_relations(&w)) return why = "relation " + w, false;
                        if (!mod.verify_structure_consistency(&w)) return why = "structure at " + w, false;
                      }
                      return true;
                    },
                    120000});

  checks.push_back({"8. five Specht modules at m=2, d=2 with dims (1,1,1,1,2), Hom matrix = identity, sum dim^2 = 8",
                    [](std::string& why) {
                      HuFamily& fam = hu(2);
                      auto omega = enumerate_omega(fam.poset(), 2);
                      if (omega.size() != 5) return why = "wrong module count", false;
                      std::vector<ModuleRep> mods;
                      std::multiset<int> dims;
                      int sumsq = 0;
                      for (const auto& lam : omega) {
                        mods.push_back(hu_specht(fam, 2, lam));
                        dims.insert(mods.back().dim());
                        sumsq += mods.back().dim() * mods.back().dim();
                      }
                      if (dims != std::multiset<int>{1, 1, 1, 1, 2}) return why = "wrong dims", false;
                      if (sumsq != fam.wreath_algebra(2)->dim()) return why = "sum dim^2 != 8", false;
                      for (size_t i = 0; i < mods.size(); ++i)
                        for (size_t j = 0; j < mods.size(); ++j)
                          if (hom_space(mods[i], mods[j]).size() != (i == j ? 1u : 0u))
                            return why = "Hom matrix not the identity", false;
                      return true;
                    }});

  checks.push_back({"9. twisted Hecke Specht dimensions equal standard-tableau counts for d <= 5",
                    [](std::string& why) {
                      for (int d = 1; d <= 5; ++d) {
                        HeckeLike tH = twisted_hecke(d, kVV, RatFunc(1));
                        long sumsq = 0, fact = 1;
                        for (int k = 2; k <= d; ++k) fact *= k;
                        for (const Partition& nu : all_partitions(d)) {
                          long dim = twisted_specht(tH, nu).module.dim();
                          if (dim != syt_count(nu))
                            return why = "d=" + std::to_string(d) + " nu=" + nu.str(), false;
                          sumsq += dim * dim;
                        }
                        if (sumsq != fact) return why = "sum dim^2 != d! at d=" + std::to_string(d), false;
                      }
                      return true;
                    }});

  checks.push_back({"10. dual Spechts: transpose duality for twisted Hecke d <= 4 and all five m=2, d=2 modules",
                    [](std::string& why) {
                      for (int d = 1; d <= 4; ++d) {
                        HeckeLike tH = twisted_hecke(d, RatFunc(0), q_param());
                        AlgebraMap sharp = twisted_sharp(tH);
                        AlgebraMap star = hecke_star(tH);
                        for (const Partition& nu : all_partitions(d))
                          if (!twisted_dual_check(tH, nu, sharp, star).yes())
                            return why = "twisted d=" + std::to_string(d) + " nu=" + nu.str(), false;
                      }
                      HuFamily& fam = hu(2);
                      AlgebraMap sharp = hu_sharp_map(fam, 2);
                      WreathMapResult st = build_star(*fam.ambient(2), hecke_star(fam.B()));
                      if (!st.ok()) return why = "star construction failed", false;
                      AlgebraMap star = wreath_map_to_algebra_map(*fam.ambient(2), fam.wreath_algebra(2), *st.map);
                      for (const auto& lam : enumerate_omega(fam.poset(), 2))
                        if (!hu_dual_specht_check(fam, 2, lam, sharp, star).yes())
                          return why = "hu lambda=" + lam.str(fam.poset()), false;
                      return true;
                    }});

  checks.push_back({"11. induced modules: explicit invertible intertwiner for both m=2 base Spechts; singular case rejected",
                    [](std::string& why) {
                      for (const Partition& lam : all_partitions(2)) {
                        InducedIsoResult r = induced_iso_check(hu(2).ground(2, lam), hu(2).wreath_algebra(2));
                        if (!r.ok || !r.witness.is_invertible())
                          return why = "hu lambda=" + lam.str(), false;
                      }
                      try {
                        induced_iso_check(ak(2).ground(2, 1, RatFunc(0), vpow(1)), ak(2).wreath_algebra(2));
                        return why = "singular sigma^M not rejected", false;
                      } catch (const NotInvertible&) {
                        return true;
                      }
                    }});

  checks.push_back({"12. Laurent square roots of the central scalars exist and square back for m <= 2",
                    [](std::string& why) {
                      for (int m : {1, 2})
                        for (const Partition& lam : all_partitions(m)) {
                          RatFunc r = hu(m).sqrt_f(lam);
                          if (r * r != hu(m).f(lam, lam))
                            return why = "m=" + std::to_string(m) + " lambda=" + lam.str(), false;
                        }
                      return true;
                    }});

  checks.push_back({"13. five pairwise non-isomorphic simples at m=2, d=2 with End = K and sum dim^2 = 8",
                    [](std::string& why) {
                      AKFamily& fam = ak(2);
                      auto omega = enumerate_omega(fam.poset(), 2);
                      if (omega.size() != 5) return why = "wrong module count", false;
                      std::vector<ModuleRep> mods;
                      int sumsq = 0;
                      for (const auto& lam : omega) {
                        mods.push_back(ak_simple(fam, 2, lam));
                        sumsq += mods.back().dim() * mods.back().dim();
                      }
                      if (sumsq != fam.wreath_algebra(2)->dim()) return why = "sum dim^2 != 8", false;
                      for (size_t i = 0; i < mods.size(); ++i)
                        for (size_t j = 0; j < mods.size(); ++j) {
                          if (hom_space(mods[i], mods[j]).size() != (i == j ? 1u : 0u))
                            return why = "End/Hom dimensions wrong", false;
                          if (i != j && is_isomorphic(mods[i], mods[j]).yes())
                            return why = "unexpected isomorphism", false;
                        }
                      return true;
                    }});

  checks.push_back({"14. tensor space at n=2, d=2, window 4: direct action matches; summands closed; interior boundary-free",
                    [](std::string& why) {
                      KMSTensorReport rep = kms_tensor(2, 2, 4);
                      if (!rep.pure_agree) return why = rep.pure_witness, false;
                      if (!rep.relations_ok) return why = rep.relations_witness, false;
                      if (!rep.summands_closed) return why = rep.closure_witness, false;
                      if (!rep.interior_clean) return why = "boundary term from an interior input", false;
                      if (rep.boundary.empty()) return why = "window-edge boundary set not reported", false;
                      if (!rep.partition_ok) return why = "summand bookkeeping mismatch", false;
                      return true;
                    }});

  checks.push_back({"15. dominance order: both explicit 5-chains reproduced; partial-order axioms hold on all of Omega",
                    [](std::string& why) {
                      if (!is_chain_and_poset(ak_chain(), ak(2).poset(), 2, why)) return false;
                      return is_chain_and_poset(hu_chain(hu(2)), hu(2).poset(), 2, why);
                    }});

  int failures = 0;
  for (const Check& c : checks) {
    auto start = std::chrono::steady_clock::now();
    bool ok = false;
    std::string why;
    try {
      ok = c.run(why);
    } catch (const std::exception& e) {
      why = std::string("exception: ") + e.what();
    }
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start)
                  .count();
    if (ok && c.budget_ms >= 0 && ms > c.budget_ms) {
      ok = false;
      why = "exceeded time budget of " + std::to_string(c.budget_ms) + " ms";
    }
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << c.name << " (" << ms << " ms)";
    if (!ok && !why.empty()) std::cout << " -- " << why;
    std::cout << "\n";
    if (!ok) ++failures;
  }
  std::cout << (failures == 0 ? "acceptance: all " : "acceptance: FAILURES ") << checks.size() - failures
            << "/" << checks.size() << " criteria passed\n";
  return failures == 0 ? 0 : 1;
}
