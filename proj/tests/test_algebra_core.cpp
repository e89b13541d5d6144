#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qwreath/algebra.hpp"
#include "qwreath/hecke.hpp"

using namespace qwreath;

namespace {
const RatFunc kV = RatFunc::v();
const RatFunc kVinv = RatFunc::v(-1);
}  // namespace

TEST_CASE("hecke algebra basics") {
  HeckeLike H = hecke_algebra(3);
  CHECK(H.alg->dim() == 6);
  // T_1 * T_1 = (v - v^-1) T_1 + 1.
  SparseVec sq = H.alg->mult(H.h_gen(1), H.h_gen(1));
  SparseVec expect;
  sv_add_scaled(expect, kV - kVinv, H.h_gen(1));
  sv_add_scaled(expect, RatFunc(1), H.alg->one());
  CHECK(sq == expect);
  // T_1 T_2 T_1 = T_2 T_1 T_2 = T_{w_0}.
  SparseVec lhs = H.alg->mult(H.alg->mult(H.h_gen(1), H.h_gen(2)), H.h_gen(1));
  SparseVec rhs = H.alg->mult(H.alg->mult(H.h_gen(2), H.h_gen(1)), H.h_gen(2));
  CHECK(lhs == rhs);
  CHECK(lhs == H.h(longest_element(3)));
  CHECK(H.alg->verify_unit());
  CHECK(H.alg->verify_associativity(6));
}

TEST_CASE("hecke algebra associativity at d = 4") {
  HeckeLike H = hecke_algebra(4);
  CHECK(H.alg->dim() == 24);
  CHECK(H.alg->verify_associativity(24));
}

TEST_CASE("cyclic quotient algebra") {
  std::vector<RatFunc> u = {RatFunc(0), RatFunc(1), kV};
  CyclicQuotient cq = cyclic_quotient_algebra(u);
  CHECK(cq.alg->dim() == 3);
  // t * t^2 = t^3 reduces via the minimal polynomial.
  SparseVec t = sv_unit(1), t2 = sv_unit(2);
  SparseVec t3 = cq.alg->mult(t, t2);
  // P(t) = t(t-1)(t-v): t^3 = (1 + v) t^2 - v t.
  SparseVec expect;
  sv_add_scaled(expect, RatFunc(1) + kV, t2);
  sv_add_scaled(expect, -kV, t);
  CHECK(t3 == expect);
  // Lagrange data: F_i(u_j) = delta_ij * Delta.
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      CHECK(cq.eval_F(i, u[static_cast<size_t>(j)]) == (i == j ? cq.Delta : RatFunc(0)));
  CHECK(cq.Delta == (u[1] - u[0]) * (u[2] - u[0]) * (u[2] - u[1]));
  CHECK_THROWS_AS(cyclic_quotient_algebra({RatFunc(1), RatFunc(1)}), RepeatedParameters);
}

TEST_CASE("tensor power") {
  CyclicQuotient cq = cyclic_quotient_algebra({kV, -kVinv});
  AlgebraPtr b2 = tensor_power(cq.alg, 2);
  CHECK(b2->dim() == 4);
  CHECK(b2->label(0) == "1(x)1");
  // (t (x) 1)(1 (x) t) = t (x) t and commutes.
  int t1 = tensor_index({1, 0}, 2), t2 = tensor_index({0, 1}, 2), tt = tensor_index({1, 1}, 2);
  CHECK(b2->mult_basis(t1, t2) == sv_unit(tt));
  CHECK(b2->mult_basis(t2, t1) == sv_unit(tt));
  CHECK(b2->unit() == tensor_index({0, 0}, 2));
  CHECK(b2->verify_associativity(4));
  // Cube of the Hecke algebra at d=3 would overflow the cap at d large.
  CHECK_THROWS_AS(tensor_power(hecke_algebra(4).alg, 3), SizeLimitExceeded);
}

TEST_CASE("module representations and relation verification") {
  HeckeLike H = hecke_algebra(2);
  // 1-dimensional modules: T_1 acts by v or by -v^-1.
  for (const RatFunc& c : {kV, -kVinv}) {
    std::map<int, Matrix> act;
    act[H.idx(Perm::s(1, 2))] = Matrix::scalar(1, c);
    ModuleRep m(H.alg, 1, std::move(act));
    CHECK(m.verify_relations());
    CHECK(m.verify_structure_consistency());
  }
  // A non-root scalar violates the quadratic relation.
  std::map<int, Matrix> bad;
  bad[H.idx(Perm::s(1, 2))] = Matrix::scalar(1, RatFunc(2));
  CHECK_THROWS_AS(ModuleRep(H.alg, 1, std::move(bad)), std::logic_error);
}

TEST_CASE("hom spaces and isomorphism search") {
  HeckeLike H = hecke_algebra(2);
  std::map<int, Matrix> a1, a2, a3;
  a1[H.idx(Perm::s(1, 2))] = Matrix::scalar(1, kV);
  a2[H.idx(Perm::s(1, 2))] = Matrix::scalar(1, -kVinv);
  ModuleRep triv(H.alg, 1, a1), sgn(H.alg, 1, a2);
  CHECK(hom_space(triv, sgn).empty());
  CHECK(hom_space(triv, triv).size() == 1);
  CHECK(is_isomorphic(triv, sgn).verdict == IsoResult::Verdict::No);
  CHECK(is_isomorphic(triv, triv).yes());
  // The regular module of H_q(Sigma_2) vs itself after base change.
  std::map<int, Matrix> reg;
  Matrix t(2, 2);
  // Left multiplication by T_1 on {1, T_1}: T_1*1 = T_1, T_1*T_1 = 1 + (v-v^-1)T_1.
  t.at(1, 0) = RatFunc(1);
  t.at(0, 1) = RatFunc(1);
  t.at(1, 1) = kV - kVinv;
  reg[H.idx(Perm::s(1, 2))] = t;
  ModuleRep m(H.alg, 2, reg);
  Matrix p(2, 2);
  p.at(0, 0) = RatFunc(1);
  p.at(0, 1) = kV;
  p.at(1, 0) = RatFunc(1);
  p.at(1, 1) = RatFunc(1) + kV;
  ModuleRep mc = conjugate_module(m, p);
  auto iso = is_isomorphic(m, mc, 5);
  REQUIRE(iso.yes());
  const Matrix& x = *iso.witness;
  for (int g : H.alg->generators()) CHECK(x * m.act_gen(g) == mc.act_gen(g) * x);
  // Regular module decomposes: hom with each 1-dim module is 1-dimensional.
  CHECK(hom_space(m, triv).size() == 1);
  CHECK(hom_space(m, sgn).size() == 1);
  CHECK(is_isomorphic(m, triv).verdict == IsoResult::Verdict::No);
}

TEST_CASE("specht modules of the hecke algebra") {
  // lambda = (m): 1-dimensional, T_i acts by v; (1^m): T_i acts by -v^-1.
  for (int m = 2; m <= 4; ++m) {
    HeckeLike H = hecke_algebra(m);
    SpechtData top = twisted_specht(H, Partition::row(m));
    REQUIRE(top.module.dim() == 1);
    SpechtData bot = twisted_specht(H, Partition::column(m));
    REQUIRE(bot.module.dim() == 1);
    for (int i = 1; i < m; ++i) {
      CHECK(top.module.act_gen(H.idx(Perm::s(i, m))) == Matrix::scalar(1, kV));
      CHECK(bot.module.act_gen(H.idx(Perm::s(i, m))) == Matrix::scalar(1, -kVinv));
    }
  }
  // Dimensions match standard-tableau counts; sum of squares is m!.
  for (int m = 2; m <= 5; ++m) {
    HeckeLike H = hecke_algebra(m);
    long sum = 0, fact = 1;
    for (int k = 2; k <= m; ++k) fact *= k;
    for (const Partition& lam : all_partitions(m)) {
      SpechtData s = twisted_specht(H, lam);
      CHECK(s.module.dim() == syt_count(lam));
      sum += static_cast<long>(s.module.dim()) * s.module.dim();
    }
    CHECK(sum == fact);
  }
}

TEST_CASE("specht modules are pairwise non-isomorphic at m = 3") {
  HeckeLike H = hecke_algebra(3);
  auto parts = all_partitions(3);
  std::vector<SpechtData> mods;
  for (const auto& p : parts) mods.push_back(twisted_specht(H, p));
  for (size_t i = 0; i < mods.size(); ++i)
    for (size_t j = 0; j < mods.size(); ++j) {
      auto r = is_isomorphic(mods[i].module, mods[j].module);
      CHECK((i == j) == r.yes());
    }
}

TEST_CASE("sharp and star on the hecke algebra") {
  for (int m : {2, 3}) {
    HeckeLike H = hecke_algebra(m);
    AlgebraMap sharp = hecke_sharp(H);
    CHECK_FALSE(sharp.anti);
    CHECK(sharp.verify());
    CHECK(sharp.is_bijective());
    // # is an involution.
    AlgebraMap sharp2 = sharp.compose(sharp);
    for (int j = 0; j < H.alg->dim(); ++j) CHECK(sharp2.images[static_cast<size_t>(j)] == sv_unit(j));
    // On a generator: T_i -> -T_i + (v - v^-1).
    int g = H.idx(Perm::s(1, m));
    SparseVec img;
    sv_add_scaled(img, RatFunc(-1), H.h_gen(1));
    sv_add_scaled(img, kV - kVinv, H.alg->one());
    CHECK(sharp.images[static_cast<size_t>(g)] == img);

    AlgebraMap star = hecke_star(H);
    CHECK(star.anti);
    CHECK(star.verify());
    CHECK(star.is_bijective());
    for (int j = 0; j < H.alg->dim(); ++j)
      CHECK(star.images[static_cast<size_t>(j)] == sv_unit(H.idx(H.perm(j).inverse())));
  }
}

TEST_CASE("dual specht modules via sharp and star") {
  // (S^lambda)^# is isomorphic to (S^{lambda^t})^* for all lambda of size <= 4.
  for (int m = 2; m <= 4; ++m) {
    HeckeLike H = hecke_algebra(m);
    AlgebraMap sharp = hecke_sharp(H);
    AlgebraMap star = hecke_star(H);
    for (const Partition& lam : all_partitions(m)) {
      auto res = twisted_dual_check(H, lam, sharp, star, 17);
      CHECK(res.yes());
    }
  }
}

TEST_CASE("twist and dual constructions preserve relations") {
  HeckeLike H = hecke_algebra(3);
  AlgebraMap sharp = hecke_sharp(H);
  AlgebraMap star = hecke_star(H);
  SpechtData s = twisted_specht(H, Partition({2, 1}));
  ModuleRep tw = twist_by_auto(s.module, sharp);
  CHECK(tw.verify_relations());
  ModuleRep du = dual_twist(s.module, star);
  CHECK(du.verify_relations());
  CHECK_THROWS_AS(twist_by_auto(s.module, star), std::invalid_argument);
  CHECK_THROWS_AS(dual_twist(s.module, sharp), std::invalid_argument);
}
