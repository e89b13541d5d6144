#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qwreath/ak.hpp"
#include "qwreath/hu.hpp"
#include "qwreath/kms.hpp"

using namespace qwreath;

namespace {

RatFunc vpow(int k) { return RatFunc::v(k); }

Partition P(std::initializer_list<int> parts) { return Partition(std::vector<int>(parts)); }

}  // namespace

TEST_CASE("hu central element matches the closed forms for m = 1, 2") {
  SUBCASE("m = 1: Z_1 = (q + 1)^2") {
    HuFamily fam(1);
    RatFunc q = q_param();
    SparseVec expect{{0, (q + RatFunc(1)) * (q + RatFunc(1))}};
    CHECK(fam.Zm() == expect);
    CHECK(fam.central_report().central);
  }
  SUBCASE("m = 2: coefficient-exact closed form") {
    HuFamily fam(2);
    RatFunc vv = vpow(1) - vpow(-1);
    RatFunc f = vpow(4) + RatFunc(2) * vpow(2) - RatFunc(2) + RatFunc(2) * vpow(-2) + vpow(-4);
    RatFunc g = f + RatFunc(2) * (vpow(2) + vpow(-2));
    RatFunc pre = vpow(12);
    // basis of B (x) B for B = H_q(Sigma_2): 0 = 1(x)1, 1 = 1(x)T, 2 = T(x)1, 3 = T(x)T.
    // The identity coefficient is 2(f + 2(v^2 + v^-2)); with plain 2f the
    // eigenvalues on the diagonal Specht pairs would not be Laurent squares.
    SparseVec expect{{0, pre * RatFunc(2) * g},
                     {1, pre * vv * g},
                     {2, pre * vv * g},
                     {3, pre * vv * vv * f}};
    CHECK(fam.Zm() == expect);
    CHECK(fam.central_report().central);
  }
}

TEST_CASE("hu parameters satisfy the presentation and ground conditions") {
  HuFamily fam(2);
  CHECK(verify_pbw_conditions(fam.params(3)).all_pass());
  for (const Partition& lam : {P({2}), P({1, 1})}) {
    GroundModuleData gm = fam.ground(2, lam);
    CHECK(verify_ground(gm).all_pass());
    RatFunc r = fam.sqrt_f(lam);
    CHECK(r * r == fam.f(lam, lam));
  }
}

TEST_CASE("hu specht modules at m = 2, d = 2: dimensions and homs") {
  HuFamily fam(2);
  auto omega = enumerate_omega(fam.poset(), 2);
  REQUIRE(omega.size() == 5);
  std::vector<ModuleRep> mods;
  int sumsq = 0;
  for (const auto& lam : omega) {
    mods.push_back(hu_specht(fam, 2, lam));
    sumsq += mods.back().dim() * mods.back().dim();
  }
  CHECK(sumsq == fam.wreath_algebra(2)->dim());  // = 8: split semisimple
  for (size_t i = 0; i < mods.size(); ++i)
    for (size_t j = 0; j < mods.size(); ++j)
      CHECK(hom_space(mods[i], mods[j]).size() == (i == j ? 1u : 0u));
}

TEST_CASE("hu m = 2: linear sharp conditions fail on R, star passes") {
  HuFamily fam(2);
  const QWP& A = *fam.ambient(2);
  WreathMapResult sr = build_sharp(A, hecke_sharp(fam.B()));
  CHECK(!sr.ok());
  const ConditionResult* r = sr.report.find("sharpB.R");
  REQUIRE(r != nullptr);
  CHECK(!r->pass);  // Z_2 is rescaled by the base automorphism, see hu_sharp_map
  WreathMapResult st = build_star(A, hecke_star(fam.B()));
  CHECK(st.ok());
}

TEST_CASE("hu m = 1: linear sharp and star both pass") {
  HuFamily fam(1);
  const QWP& A = *fam.ambient(2);
  CHECK(build_sharp(A, hecke_sharp(fam.B())).ok());
  CHECK(build_star(A, hecke_star(fam.B())).ok());
}

TEST_CASE("hu duality: twisted spechts match transposed dual spechts") {
  HuFamily fam(2);
  const QWP& A = *fam.ambient(2);
  const AlgebraPtr& walg = fam.wreath_algebra(2);
  AlgebraMap sharp = hu_sharp_map(fam, 2);
  WreathMapResult st = build_star(A, hecke_star(fam.B()));
  REQUIRE(st.ok());
  AlgebraMap star = wreath_map_to_algebra_map(A, walg, *st.map);
  for (const auto& lam : enumerate_omega(fam.poset(), 2)) {
    IsoResult iso = hu_dual_specht_check(fam, 2, lam, sharp, star);
    CHECK(iso.yes());
  }
}

TEST_CASE("ariki-koike parameters satisfy the presentation conditions for m = 2, 3") {
  // The constructor runs the full condition suite at d = 3 and throws on failure.
  CHECK_NOTHROW(AKFamily(ak_generic_u(2)));
  CHECK_NOTHROW(AKFamily(ak_generic_u(3)));
  // A corrupted rho (zero matrix) must be rejected with a witness.
  AKFamily fam(ak_generic_u(2));
  QWPParams bad = fam.params(3);
  bad.rho = Matrix(bad.rho.rows(), bad.rho.cols());
  ConditionReport rep = verify_pbw_conditions(bad);
  CHECK(!rep.all_pass());
}

TEST_CASE("ariki-koike ground modules: valid twists pass, r = 1 fails") {
  AKFamily fam(ak_generic_u(2));
  for (const RatFunc& r : {vpow(1), -vpow(-1)}) {
    GroundModuleData gm = fam.ground(2, 1, RatFunc(0), r);
    CHECK(verify_ground(gm).all_pass());
  }
  GroundModuleData ok = fam.ground(2, 1, RatFunc(1), RatFunc(0));
  CHECK(verify_ground(ok).all_pass());
  GroundModuleData bad = fam.ground(2, 1, RatFunc(0), RatFunc(1));
  ConditionReport rep = verify_ground(bad);
  CHECK(!rep.all_pass());
  const ConditionResult* m4 = rep.find("M4.second i=1");
  REQUIRE(m4 != nullptr);
  CHECK(!m4->pass);
}

TEST_CASE("ariki-koike diagrams and the induced-module isomorphism") {
  AKFamily fam(ak_generic_u(2));
  GroundModuleData gm = fam.ground(2, 1, RatFunc(1), RatFunc(0));
  ConditionReport rep = check_diagrams(gm, /*exhaustive_ww=*/true);
  CHECK(rep.all_pass());
  CHECK(induced_iso_check(gm, fam.wreath_algebra(2)).ok);
  // sigma^M = 0 satisfies the ground conditions but is not invertible.
  GroundModuleData sing = fam.ground(2, 1, RatFunc(0), vpow(1));
  CHECK_THROWS_AS(induced_iso_check(sing, fam.wreath_algebra(2)), NotInvertible);
}

TEST_CASE("ariki-koike simple modules at m = 2, d = 2") {
  AKFamily fam(ak_generic_u(2));
  auto omega = enumerate_omega(fam.poset(), 2);
  REQUIRE(omega.size() == 5);
  std::vector<ModuleRep> mods;
  int sumsq = 0;
  for (const auto& lam : omega) {
    mods.push_back(ak_simple(fam, 2, lam));
    sumsq += mods.back().dim() * mods.back().dim();
  }
  CHECK(sumsq == fam.wreath_algebra(2)->dim());  // = 8: split semisimple
  for (size_t i = 0; i < mods.size(); ++i)
    for (size_t j = 0; j < mods.size(); ++j) {
      CHECK(hom_space(mods[i], mods[j]).size() == (i == j ? 1u : 0u));
      if (i != j) CHECK(!is_isomorphic(mods[i], mods[j]).yes());
    }
}

TEST_CASE("ariki-koike order at m = 2, d = 2 is the expected 5-chain") {
  AKFamily fam(ak_generic_u(2));
  const IBPoset& poset = fam.poset();
  // labels: 0 <-> u_1, 1 <-> u_2, with 0 below 1 in the total order
  std::vector<Multipartition> chain{
      Multipartition::e(0, P({1, 1})),
      Multipartition::e(0, P({2})),
      Multipartition::e(0, P({1})) + Multipartition::e(1, P({1})),
      Multipartition::e(1, P({1, 1})),
      Multipartition::e(1, P({2})),
  };
  auto omega = enumerate_omega(poset, 2);
  REQUIRE(omega.size() == chain.size());
  for (size_t i = 0; i < chain.size(); ++i)
    for (size_t j = 0; j < chain.size(); ++j)
      CHECK(dominance_leq(chain[i], chain[j], poset) == (i <= j));
}

TEST_CASE("hu dominance order at m = 2, d = 2 is the expected 5-chain") {
  HuFamily fam(2);
  const IBPoset& poset = fam.poset();
  int two = fam.label_of(P({2})), oneone = fam.label_of(P({1, 1}));
  std::vector<Multipartition> chain{
      Multipartition::e(oneone, P({1, 1})),
      Multipartition::e(oneone, P({2})),
      Multipartition::e(two, P({1})) + Multipartition::e(oneone, P({1})),
      Multipartition::e(two, P({1, 1})),
      Multipartition::e(two, P({2})),
  };
  auto omega = enumerate_omega(poset, 2);
  REQUIRE(omega.size() == chain.size());
  for (size_t i = 0; i < chain.size(); ++i)
    for (size_t j = 0; j < chain.size(); ++j)
      CHECK(dominance_leq(chain[i], chain[j], poset) == (i <= j));
}

TEST_CASE("laurent base: windowed presentation and ground conditions") {
  CHECK(kms_verify_pbw(3).all_pass());
  CHECK(kms_verify_ground(2, 4).all_pass());
  CHECK(kms_verify_ground(3, 2).all_pass());
}

TEST_CASE("laurent base: two-term structure map, independent of the choice rule") {
  // tau(s_1 (x) P) = sigma_1(P) (x) h_1 + rho_1(P) (x) 1 on a sample monomial
  MPoly P = mp_monomial(MExp{2, 0});
  auto blocks = kms_tau_blocks(Perm::s(1, 2), P);
  REQUIRE(blocks.size() == 2);
  CHECK(blocks.at(Perm::s(1, 2)) == kms_sigma_i(P, 1));
  CHECK(blocks.at(Perm::identity(2)) == kms_rho_i(P, 1));
  CHECK(kms_check_tau_independence(3, 1));
  CHECK(kms_check_tau_independence(3, 2));
}

TEST_CASE("kms tensor space at n = 2: direct action, relations, summands") {
  KMSTensorReport rep = kms_tensor(2, 2, 4);
  CHECK(rep.pure_agree);
  CHECK(rep.relations_ok);
  CHECK(rep.summands_closed);
  CHECK(rep.interior_clean);  // boundary terms occur only within n of the window edge
  CHECK(rep.partition_ok);
  // Omega' at n = d = 2 has three one-row multipartitions; the mixed one is
  // induced from the (1,1) parabolic and so occurs with coset multiplicity 2.
  REQUIRE(rep.summand_mult.size() == 3);
  long long mixed = 0, pure = 0;
  for (const auto& [lam, mult] : rep.summand_mult) (mult == 2 ? mixed : pure) += 1;
  CHECK(mixed == 1);
  CHECK(pure == 2);

  KMSTensorReport rep3 = kms_tensor(2, 3, 2);  // exercises the braid relation
  CHECK(rep3.ok());

  KMSTensorReport rep1 = kms_tensor(1, 2, 3);  // n = 1: a single summand
  CHECK(rep1.ok());
  CHECK(rep1.summand_mult.size() == 1);
}
