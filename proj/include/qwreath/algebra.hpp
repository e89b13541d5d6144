#pragma once

/// Finite-dimensional associative algebras with a distinguished basis and
/// structure constants, modules given by generator action matrices, algebra
/// (anti)morphisms, Hom-space solving, and isomorphism search.

#include "qwreath/matrix.hpp"
#include "qwreath/perm.hpp"

#include <functional>
#include <memory>
#include <optional>
#include <random>

namespace qwreath {

struct SizeLimitExceeded : std::runtime_error {
  explicit SizeLimitExceeded(const std::string& what) : std::runtime_error(what) {}
};

struct RepeatedParameters : std::runtime_error {
  explicit RepeatedParameters(const std::string& what) : std::runtime_error(what) {}
};

/// Sparse vector in the distinguished basis: index -> nonzero coefficient.
using SparseVec = std::map<int, RatFunc>;

inline void sv_add_scaled(SparseVec& dst, const RatFunc& c, const SparseVec& src) {
  if (c.is_zero()) return;
  for (const auto& [i, x] : src) {
    auto it = dst.find(i);
    if (it == dst.end()) {
      RatFunc y = c * x;
      if (!y.is_zero()) dst.emplace(i, std::move(y));
    } else if ((it->second += c * x).is_zero()) {
      dst.erase(it);
    }
  }
}

inline SparseVec sv_scale(const RatFunc& c, const SparseVec& src) {
  SparseVec out;
  sv_add_scaled(out, c, src);
  return out;
}

inline SparseVec sv_unit(int i) { return SparseVec{{i, RatFunc(1)}}; }

inline bool sv_is_zero(const SparseVec& x) { return x.empty(); }

inline std::string sv_str(const SparseVec& x, const std::vector<std::string>& labels) {
  if (x.empty()) return "0";
  std::string out;
  for (const auto& [i, c] : x) {
    if (!out.empty()) out += " + ";
    out += "(" + c.str() + ")*" + labels[static_cast<size_t>(i)];
  }
  return out;
}

/// A word in generator slots (indices into the algebra's generator list).
using GenWord = std::vector<int>;

/// Formal linear combination of generator words; the empty word is the unit.
struct LinComb {
  std::vector<std::pair<RatFunc, GenWord>> terms;

  static LinComb word(GenWord w, RatFunc c = RatFunc(1)) { return LinComb{{{std::move(c), std::move(w)}}}; }
  static LinComb unit(RatFunc c = RatFunc(1)) { return word({}, std::move(c)); }

  LinComb& add(RatFunc c, GenWord w) {
    terms.push_back({std::move(c), std::move(w)});
    return *this;
  }

  /// Concatenation product of two combinations.
  friend LinComb operator*(const LinComb& a, const LinComb& b) {
    LinComb p;
    for (const auto& [ca, wa] : a.terms)
      for (const auto& [cb, wb] : b.terms) {
        GenWord w = wa;
        w.insert(w.end(), wb.begin(), wb.end());
        p.terms.push_back({ca * cb, std::move(w)});
      }
    return p;
  }
};

class FiniteAlgebra {
 public:
  struct Relation {
    LinComb lhs;  // must evaluate to zero in every representation
    std::string name;
  };

  FiniteAlgebra(std::vector<std::string> basis_labels, int unit_index, std::vector<int> generators,
                std::vector<std::vector<SparseVec>> table, std::vector<LinComb> basis_words,
                std::vector<Relation> relations)
      : labels_(std::move(basis_labels)),
        unit_(unit_index),
        gens_(std::move(generators)),
        table_(std::move(table)),
        words_(std::move(basis_words)),
        relations_(std::move(relations)) {
    const int n = dim();
    if (static_cast<int>(table_.size()) != n) throw std::invalid_argument("structure-constant table shape");
    for (const auto& row : table_)
      if (static_cast<int>(row.size()) != n) throw std::invalid_argument("structure-constant table shape");
    std::string witness;
    if (!verify_unit(&witness)) throw std::logic_error("unit is not a two-sided identity: " + witness);
    // Full cubic associativity verification for small algebras; for larger
    // ones check (generator, basis, basis) triples, which generate the rest
    // for inductively-built tables.
    if (n <= 24) {
      if (!verify_associativity(n, &witness)) throw std::logic_error("associativity fails: " + witness);
    } else {
      for (int g : gens_)
        for (int j = 0; j < n; ++j)
          for (int k = 0; k < n; ++k)
            if (!assoc_triple(g, j, k)) {
              throw std::logic_error("associativity fails on generator triple (" + labels_[static_cast<size_t>(g)] +
                                     ", " + labels_[static_cast<size_t>(j)] + ", " + labels_[static_cast<size_t>(k)] + ")");
            }
    }
  }

  int dim() const { return static_cast<int>(labels_.size()); }
  const std::string& label(int i) const { return labels_[static_cast<size_t>(i)]; }
  const std::vector<std::string>& labels() const { return labels_; }
  int unit() const { return unit_; }
  const std::vector<int>& generators() const { return gens_; }
  const std::vector<LinComb>& basis_words() const { return words_; }
  const std::vector<Relation>& relations() const { return relations_; }

  const SparseVec& mult_basis(int i, int j) const {
    return table_[static_cast<size_t>(i)][static_cast<size_t>(j)];
  }

  SparseVec mult(const SparseVec& x, const SparseVec& y) const {
    SparseVec out;
    for (const auto& [i, cx] : x)
      for (const auto& [j, cy] : y) sv_add_scaled(out, cx * cy, mult_basis(i, j));
    return out;
  }

  SparseVec one() const { return sv_unit(unit_); }

  bool verify_unit(std::string* witness = nullptr) const {
    for (int i = 0; i < dim(); ++i) {
      if (mult_basis(unit_, i) != sv_unit(i) || mult_basis(i, unit_) != sv_unit(i)) {
        if (witness) *witness = labels_[static_cast<size_t>(i)];
        return false;
      }
    }
    return true;
  }

  /// Full associativity check on basis triples up to the given dimension cap.
  bool verify_associativity(int dim_cap, std::string* witness = nullptr) const {
    if (dim() > dim_cap) return true;
    for (int i = 0; i < dim(); ++i)
      for (int j = 0; j < dim(); ++j)
        for (int k = 0; k < dim(); ++k)
          if (!assoc_triple(i, j, k)) {
            if (witness)
              *witness = "(" + labels_[static_cast<size_t>(i)] + ", " + labels_[static_cast<size_t>(j)] + ", " +
                         labels_[static_cast<size_t>(k)] + ")";
            return false;
          }
    return true;
  }

 private:
  bool assoc_triple(int i, int j, int k) const {
    SparseVec left, right;
    for (const auto& [p, c] : mult_basis(i, j)) sv_add_scaled(left, c, mult_basis(p, k));
    for (const auto& [p, c] : mult_basis(j, k)) sv_add_scaled(right, c, mult_basis(i, p));
    return left == right;
  }

  std::vector<std::string> labels_;
  int unit_;
  std::vector<int> gens_;
  std::vector<std::vector<SparseVec>> table_;
  std::vector<LinComb> words_;
  std::vector<Relation> relations_;
};

using AlgebraPtr = std::shared_ptr<const FiniteAlgebra>;

/// An algebra morphism or anti-morphism, given by the images of all basis
/// elements.  A semilinear map conjugates scalars by the bar involution
/// v -> v^{-1} before applying the images.
struct AlgebraMap {
  AlgebraPtr alg;
  std::vector<SparseVec> images;  // basis index -> image
  bool anti = false;
  bool semilinear = false;

  SparseVec apply(const SparseVec& x) const {
    SparseVec out;
    for (const auto& [i, c] : x) sv_add_scaled(out, semilinear ? c.bar() : c, images[static_cast<size_t>(i)]);
    return out;
  }

  /// Unit preservation and (anti)multiplicativity on all basis pairs.
  bool verify(std::string* witness = nullptr) const {
    if (images[static_cast<size_t>(alg->unit())] != alg->one()) {
      if (witness) *witness = "unit";
      return false;
    }
    for (int i = 0; i < alg->dim(); ++i)
      for (int j = 0; j < alg->dim(); ++j) {
        SparseVec lhs = apply(alg->mult_basis(i, j));
        SparseVec rhs = anti ? alg->mult(images[static_cast<size_t>(j)], images[static_cast<size_t>(i)])
                             : alg->mult(images[static_cast<size_t>(i)], images[static_cast<size_t>(j)]);
        if (lhs != rhs) {
          if (witness) *witness = "(" + alg->label(i) + ", " + alg->label(j) + ")";
          return false;
        }
      }
    return true;
  }

  bool is_bijective() const {
    Matrix m(alg->dim(), alg->dim());
    for (int j = 0; j < alg->dim(); ++j)
      for (const auto& [i, c] : images[static_cast<size_t>(j)]) m.at(i, j) = c;
    return m.is_invertible();
  }

  AlgebraMap compose(const AlgebraMap& inner) const {
    AlgebraMap out{alg, {}, anti != inner.anti, semilinear != inner.semilinear};
    for (const auto& img : inner.images) out.images.push_back(apply(img));
    return out;
  }
};

class ModuleRep {
 public:
  ModuleRep(AlgebraPtr alg, int dim, std::map<int, Matrix> gen_action, bool verify = true)
      : alg_(std::move(alg)), dim_(dim), gen_action_(std::move(gen_action)) {
    for (int g : alg_->generators())
      if (!gen_action_.count(g)) throw std::invalid_argument("missing action for generator " + alg_->label(g));
    if (verify) {
      std::string witness;
      if (!verify_relations(&witness)) throw std::logic_error("module violates relation: " + witness);
    }
  }

  const AlgebraPtr& algebra() const { return alg_; }
  int dim() const { return dim_; }

  const Matrix& act_gen(int gen_basis_index) const { return gen_action_.at(gen_basis_index); }

  Matrix act_word(const GenWord& w) const {
    Matrix m = Matrix::identity(dim_);
    for (int slot : w) m = m * gen_action_.at(alg_->generators()[static_cast<size_t>(slot)]);
    return m;
  }

  Matrix act_lincomb(const LinComb& c) const {
    Matrix m(dim_, dim_);
    for (const auto& [coef, w] : c.terms) m = m + coef * act_word(w);
    return m;
  }

  /// Action of a basis element, via its generator-word expression.
  const Matrix& act_basis(int i) const {
    auto it = basis_cache_.find(i);
    if (it == basis_cache_.end())
      it = basis_cache_.emplace(i, act_lincomb(alg_->basis_words()[static_cast<size_t>(i)])).first;
    return it->second;
  }

  Matrix act_elem(const SparseVec& x) const {
    Matrix m(dim_, dim_);
    for (const auto& [i, c] : x) m = m + c * act_basis(i);
    return m;
  }

  bool verify_relations(std::string* witness = nullptr) const {
    for (const auto& rel : alg_->relations()) {
      if (!act_lincomb(rel.lhs).is_zero()) {
        if (witness) *witness = rel.name;
        return false;
      }
    }
    return true;
  }

  /// Consistency of the action table with the basis words: act(e_i)act(e_j)
  /// equals the action of the structure-constant expansion of e_i e_j.
  bool verify_structure_consistency(std::string* witness = nullptr) const {
    for (int i = 0; i < alg_->dim(); ++i)
      for (int j = 0; j < alg_->dim(); ++j) {
        if (act_basis(i) * act_basis(j) != act_elem(alg_->mult_basis(i, j))) {
          if (witness) *witness = "(" + alg_->label(i) + ", " + alg_->label(j) + ")";
          return false;
        }
      }
    return true;
  }

 private:
  AlgebraPtr alg_;
  int dim_;
  std::map<int, Matrix> gen_action_;
  mutable std::map<int, Matrix> basis_cache_;
};

/// Basis of Hom_A(M1, M2) = {X : X A1(g) = A2(g) X for all generators g}.
inline std::vector<Matrix> hom_space(const ModuleRep& m1, const ModuleRep& m2) {
  const int d1 = m1.dim(), d2 = m2.dim();
  const auto& gens = m1.algebra()->generators();
  const int vars = d1 * d2;  // X is d2 x d1, variable index i*d1 + j
  Matrix sys(static_cast<int>(gens.size()) * vars, vars);
  int row = 0;
  for (int g : gens) {
    const Matrix& a1 = m1.act_gen(g);
    const Matrix& a2 = m2.act_gen(g);
    // Equation (i, k): sum_j X[i][j] a1[j][k] - sum_j a2[i][j] X[j][k] = 0.
    for (int i = 0; i < d2; ++i)
      for (int k = 0; k < d1; ++k) {
        for (int j = 0; j < d1; ++j) sys.at(row, i * d1 + j) += a1.at(j, k);
        for (int j = 0; j < d2; ++j) sys.at(row, j * d1 + k) -= a2.at(i, j);
        ++row;
      }
  }
  std::vector<Matrix> basis;
  for (const auto& x : sys.nullspace()) {
    Matrix h(d2, d1);
    for (int i = 0; i < d2; ++i)
      for (int j = 0; j < d1; ++j) h.at(i, j) = x[static_cast<size_t>(i * d1 + j)];
    basis.push_back(std::move(h));
  }
  return basis;
}

struct IsoResult {
  enum class Verdict { Yes, No, Inconclusive };
  Verdict verdict;
  std::optional<Matrix> witness;

  bool yes() const { return verdict == Verdict::Yes; }
};

/// Decide isomorphism by searching small integer combinations of a Hom-space
/// basis for an invertible element; budgeted and deterministic per seed.
inline IsoResult is_isomorphic(const ModuleRep& m1, const ModuleRep& m2, unsigned seed = 0,
                               int budget = 200) {
  if (m1.dim() != m2.dim()) return {IsoResult::Verdict::No, std::nullopt};
  auto homs = hom_space(m1, m2);
  if (homs.empty()) {
    if (m1.dim() == 0) return {IsoResult::Verdict::Yes, Matrix(0, 0)};
    return {IsoResult::Verdict::No, std::nullopt};
  }
  for (const auto& h : homs)
    if (h.is_invertible()) return {IsoResult::Verdict::Yes, h};
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> coef(-3, 3);
  for (int tries = 0; tries < budget; ++tries) {
    Matrix x(m2.dim(), m1.dim());
    for (const auto& h : homs) x = x + RatFunc(coef(rng)) * h;
    if (x.is_invertible()) return {IsoResult::Verdict::Yes, x};
  }
  return {IsoResult::Verdict::Inconclusive, std::nullopt};
}

/// Twist a module by a verified automorphism: same space, b acts as phi(b).
/// For a semilinear phi the underlying space is the bar-conjugate of m, so
/// the action matrices pick up an entrywise bar.
inline ModuleRep twist_by_auto(const ModuleRep& m, const AlgebraMap& phi) {
  if (phi.anti) throw std::invalid_argument("twist_by_auto needs an automorphism; use dual_twist for *");
  std::map<int, Matrix> action;
  for (int g : m.algebra()->generators()) {
    Matrix a = m.act_elem(phi.images[static_cast<size_t>(g)]);
    action[g] = phi.semilinear ? a.bar() : a;
  }
  return ModuleRep(m.algebra(), m.dim(), std::move(action));
}

/// Dual module along an anti-automorphism: (b . f)(x) = f(phi(b) . x).
inline ModuleRep dual_twist(const ModuleRep& m, const AlgebraMap& phi) {
  if (!phi.anti) throw std::invalid_argument("dual_twist needs an anti-automorphism");
  std::map<int, Matrix> action;
  for (int g : m.algebra()->generators()) {
    Matrix a = m.act_elem(phi.images[static_cast<size_t>(g)]).transpose();
    action[g] = phi.semilinear ? a.bar() : a;
  }
  return ModuleRep(m.algebra(), m.dim(), std::move(action));
}

/// Base change: action matrices conjugated by an invertible P.
inline ModuleRep conjugate_module(const ModuleRep& m, const Matrix& p) {
  Matrix pinv = p.inverse();
  std::map<int, Matrix> action;
  for (int g : m.algebra()->generators()) action[g] = p * m.act_gen(g) * pinv;
  return ModuleRep(m.algebra(), m.dim(), std::move(action));
}

// ---------------------------------------------------------------------------
// Builders
// ---------------------------------------------------------------------------

/// K[t] / prod_i (t - u_i) with the power basis {1, t, ..., t^{m-1}}, plus the
/// Lagrange interpolation data F_i (F_i(u_j) = delta_ij * Delta) and Delta.
struct CyclicQuotient {
  AlgebraPtr alg;
  std::vector<RatFunc> u;
  std::vector<std::vector<RatFunc>> F;  // F[i] = coefficients of F_i in the power basis
  RatFunc Delta;

  RatFunc eval_F(int i, const RatFunc& x) const {
    RatFunc y(0), p(1);
    for (const auto& c : F[static_cast<size_t>(i)]) {
      y += c * p;
      p *= x;
    }
    return y;
  }
};

inline CyclicQuotient cyclic_quotient_algebra(const std::vector<RatFunc>& u) {
  const int m = static_cast<int>(u.size());
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if (u[static_cast<size_t>(i)] == u[static_cast<size_t>(j)])
        throw RepeatedParameters("repeated evaluation parameter u_" + std::to_string(i + 1));
  // Coefficients of P(t) = prod (t - u_i), ascending.
  std::vector<RatFunc> P{RatFunc(1)};
  for (const auto& ui : u) {
    std::vector<RatFunc> next(P.size() + 1);
    for (size_t k = 0; k < P.size(); ++k) {
      next[k + 1] += P[k];
      next[k] -= ui * P[k];
    }
    P = std::move(next);
  }
  // Reduction of t^k for k up to 2m-2: t^m = -sum_{k<m} P_k t^k.
  std::vector<std::vector<RatFunc>> power(static_cast<size_t>(std::max(1, 2 * m - 1)));
  for (int k = 0; k <= 2 * m - 2; ++k) {
    std::vector<RatFunc> vec(static_cast<size_t>(m));
    if (k < m) {
      vec[static_cast<size_t>(k)] = RatFunc(1);
    } else {
      const auto& prev = power[static_cast<size_t>(k - 1)];
      // Multiply by t: shift, then reduce the overflow via t^m.
      RatFunc top = prev[static_cast<size_t>(m - 1)];
      for (int i = m - 1; i >= 1; --i) vec[static_cast<size_t>(i)] = prev[static_cast<size_t>(i - 1)];
      vec[0] = RatFunc(0);
      for (int i = 0; i < m; ++i) vec[static_cast<size_t>(i)] -= top * P[static_cast<size_t>(i)];
    }
    power[static_cast<size_t>(k)] = std::move(vec);
  }
  std::vector<std::vector<SparseVec>> table(static_cast<size_t>(m), std::vector<SparseVec>(static_cast<size_t>(m)));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      SparseVec prod;
      const auto& vec = power[static_cast<size_t>(a + b)];
      for (int i = 0; i < m; ++i)
        if (!vec[static_cast<size_t>(i)].is_zero()) prod[i] = vec[static_cast<size_t>(i)];
      table[static_cast<size_t>(a)][static_cast<size_t>(b)] = std::move(prod);
    }
  std::vector<std::string> labels;
  std::vector<LinComb> words;
  for (int k = 0; k < m; ++k) {
    labels.push_back(k == 0 ? "1" : (k == 1 ? "t" : "t^" + std::to_string(k)));
    words.push_back(LinComb::word(GenWord(static_cast<size_t>(k), 0)));
  }
  std::vector<int> gens;
  std::vector<FiniteAlgebra::Relation> rels;
  if (m >= 2) {
    gens.push_back(1);
    LinComb rel;
    for (size_t k = 0; k < P.size(); ++k) rel.add(P[k], GenWord(k, 0));
    rels.push_back({std::move(rel), "minimal polynomial of t"});
  }
  CyclicQuotient out;
  out.alg = std::make_shared<FiniteAlgebra>(std::move(labels), 0, std::move(gens), std::move(table),
                                            std::move(words), std::move(rels));
  out.u = u;
  // Lagrange basis: F_i(t) = prod_{j != i} (t - u_j) * (Delta / prod_{j != i}(u_i - u_j))
  // normalized so that F_i(u_j) = delta_ij * Delta with Delta = prod_{i > j}(u_i - u_j).
  out.Delta = RatFunc(1);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < i; ++j) out.Delta *= u[static_cast<size_t>(i)] - u[static_cast<size_t>(j)];
  for (int i = 0; i < m; ++i) {
    std::vector<RatFunc> f{RatFunc(1)};
    RatFunc denom(1);
    for (int j = 0; j < m; ++j) {
      if (j == i) continue;
      std::vector<RatFunc> next(f.size() + 1);
      for (size_t k = 0; k < f.size(); ++k) {
        next[k + 1] += f[k];
        next[k] -= u[static_cast<size_t>(j)] * f[k];
      }
      f = std::move(next);
      denom *= u[static_cast<size_t>(i)] - u[static_cast<size_t>(j)];
    }
    RatFunc scale = out.Delta / denom;
    f.resize(static_cast<size_t>(m));
    for (auto& c : f) c *= scale;
    out.F.push_back(std::move(f));
  }
  return out;
}

/// Flat index of a basis tuple in B^{tensor d}, row-major.
inline int tensor_index(const std::vector<int>& tuple, int n) {
  int idx = 0;
  for (int t : tuple) idx = idx * n + t;
  return idx;
}

inline std::vector<int> tensor_tuple(int idx, int n, int d) {
  std::vector<int> t(static_cast<size_t>(d));
  for (int p = d - 1; p >= 0; --p) {
    t[static_cast<size_t>(p)] = idx % n;
    idx /= n;
  }
  return t;
}

/// The d-fold tensor power of B: basis labelled by tuples, componentwise
/// structure constants, generators lifted per slot, factor relations lifted
/// per slot plus cross-slot commutation of generators.
inline AlgebraPtr tensor_power(const AlgebraPtr& b, int d) {
  const int n = b->dim();
  double size = 1;
  for (int p = 0; p < d; ++p) size *= n;
  if (size > 1e4) throw SizeLimitExceeded("tensor power dimension exceeds 10^4");
  const int nd = static_cast<int>(size);
  std::vector<std::string> labels(static_cast<size_t>(nd));
  for (int i = 0; i < nd; ++i) {
    auto t = tensor_tuple(i, n, d);
    std::string s;
    for (int p = 0; p < d; ++p) {
      if (p) s += "(x)";
      s += b->label(t[static_cast<size_t>(p)]);
    }
    labels[static_cast<size_t>(i)] = s;
  }
  // Generators: slot p gets a copy of each generator of B.
  const auto& bgens = b->generators();
  const int gper = static_cast<int>(bgens.size());
  std::vector<int> gens;
  std::vector<int> unit_tuple(static_cast<size_t>(d), b->unit());
  for (int p = 0; p < d; ++p)
    for (int g : bgens) {
      auto t = unit_tuple;
      t[static_cast<size_t>(p)] = g;
      gens.push_back(tensor_index(t, n));
    }
  // Structure constants, componentwise.
  std::vector<std::vector<SparseVec>> table(static_cast<size_t>(nd), std::vector<SparseVec>(static_cast<size_t>(nd)));
  for (int i = 0; i < nd; ++i) {
    auto ti = tensor_tuple(i, n, d);
    for (int j = 0; j < nd; ++j) {
      auto tj = tensor_tuple(j, n, d);
      SparseVec prod = sv_unit(0);  // accumulate componentwise into flat indices
      // Build the product iteratively: prod holds indices into B^{tensor p}.
      std::vector<std::pair<int, RatFunc>> cur{{0, RatFunc(1)}};
      for (int p = 0; p < d; ++p) {
        const SparseVec& factor = b->mult_basis(ti[static_cast<size_t>(p)], tj[static_cast<size_t>(p)]);
        std::vector<std::pair<int, RatFunc>> next;
        for (const auto& [idx, c] : cur)
          for (const auto& [k, ck] : factor) next.push_back({idx * n + k, c * ck});
        cur = std::move(next);
      }
      SparseVec out;
      for (const auto& [idx, c] : cur) {
        auto it = out.find(idx);
        if (it == out.end())
          out[idx] = c;
        else if ((it->second += c).is_zero())
          out.erase(it);
      }
      table[static_cast<size_t>(i)][static_cast<size_t>(j)] = std::move(out);
    }
  }
  // Basis words: product over slots of the factor words, generator slots
  // remapped to (slot p, generator g) -> p * gper + g.
  std::vector<LinComb> words(static_cast<size_t>(nd));
  for (int i = 0; i < nd; ++i) {
    auto t = tensor_tuple(i, n, d);
    LinComb acc = LinComb::unit();
    for (int p = 0; p < d; ++p) {
      LinComb lifted;
      for (const auto& [c, w] : b->basis_words()[static_cast<size_t>(t[static_cast<size_t>(p)])].terms) {
        GenWord wl;
        for (int slot : w) wl.push_back(p * gper + slot);
        lifted.add(c, std::move(wl));
      }
      acc = acc * lifted;
    }
    words[static_cast<size_t>(i)] = std::move(acc);
  }
  std::vector<FiniteAlgebra::Relation> rels;
  for (int p = 0; p < d; ++p)
    for (const auto& rel : b->relations()) {
      LinComb lifted;
      for (const auto& [c, w] : rel.lhs.terms) {
        GenWord wl;
        for (int slot : w) wl.push_back(p * gper + slot);
        lifted.add(c, std::move(wl));
      }
      rels.push_back({std::move(lifted), "slot " + std::to_string(p + 1) + ": " + rel.name});
    }
  for (int p = 0; p < d; ++p)
    for (int q = p + 1; q < d; ++q)
      for (int a = 0; a < gper; ++a)
        for (int c = 0; c < gper; ++c) {
          LinComb comm;
          comm.add(RatFunc(1), {p * gper + a, q * gper + c});
          comm.add(RatFunc(-1), {q * gper + c, p * gper + a});
          rels.push_back({std::move(comm), "cross-slot commutation"});
        }
  return std::make_shared<FiniteAlgebra>(std::move(labels), tensor_index(unit_tuple, n), std::move(gens),
                                         std::move(table), std::move(words), std::move(rels));
}

}  // namespace qwreath
