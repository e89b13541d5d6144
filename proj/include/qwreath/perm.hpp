#pragma once

/// Permutations of {1..d} in one-line notation, reduced words via descent
/// choice maps, and minimal coset representatives for Young subgroups.
///
/// Convention: permutations compose as functions, (u*w)(x) = u(w(x)); a word
/// [i1, i2, ..., iN] denotes the product s_{i1} * s_{i2} * ... * s_{iN}.

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace qwreath {

enum class ChoiceRule { SmallestLeftDescent, LargestLeftDescent };

class Perm {
 public:
  Perm() = default;

  explicit Perm(std::vector<int> one_line) : img_(std::move(one_line)) {
    std::vector<bool> seen(img_.size() + 1, false);
    for (int x : img_) {
      if (x < 1 || x > static_cast<int>(img_.size()) || seen[static_cast<size_t>(x)])
        throw std::invalid_argument("not a permutation");
      seen[static_cast<size_t>(x)] = true;
    }
  }

  static Perm identity(int d) {
    std::vector<int> v(static_cast<size_t>(d));
    std::iota(v.begin(), v.end(), 1);
    return Perm(std::move(v));
  }

  /// Simple transposition s_i = (i, i+1) in Sigma_d, 1 <= i <= d-1.
  static Perm s(int i, int d) {
    Perm w = identity(d);
    if (i < 1 || i >= d) throw std::invalid_argument("simple transposition out of range");
    std::swap(w.img_[static_cast<size_t>(i - 1)], w.img_[static_cast<size_t>(i)]);
    return w;
  }

  int degree() const { return static_cast<int>(img_.size()); }

  int operator()(int x) const { return img_[static_cast<size_t>(x - 1)]; }

  const std::vector<int>& one_line() const { return img_; }

  friend Perm operator*(const Perm& u, const Perm& w) {
    if (u.degree() != w.degree()) throw std::invalid_argument("degree mismatch");
    std::vector<int> v(u.img_.size());
    for (size_t i = 0; i < v.size(); ++i) v[i] = u.img_[static_cast<size_t>(w.img_[i] - 1)];
    Perm p;
    p.img_ = std::move(v);
    return p;
  }

  Perm inverse() const {
    std::vector<int> v(img_.size());
    for (size_t i = 0; i < img_.size(); ++i) v[static_cast<size_t>(img_[i] - 1)] = static_cast<int>(i) + 1;
    Perm p;
    p.img_ = std::move(v);
    return p;
  }

  bool is_identity() const {
    for (size_t i = 0; i < img_.size(); ++i)
      if (img_[i] != static_cast<int>(i) + 1) return false;
    return true;
  }

  /// Coxeter length = inversion count.
  int length() const {
    int n = 0;
    for (size_t i = 0; i < img_.size(); ++i)
      for (size_t j = i + 1; j < img_.size(); ++j)
        if (img_[i] > img_[j]) ++n;
    return n;
  }

  /// s_i is a left descent iff l(s_i w) < l(w) iff w^{-1}(i) > w^{-1}(i+1).
  bool has_left_descent(int i) const {
    int a = 0, b = 0;
    for (size_t k = 0; k < img_.size(); ++k) {
      if (img_[k] == i) a = static_cast<int>(k) + 1;
      if (img_[k] == i + 1) b = static_cast<int>(k) + 1;
    }
    return a > b;
  }

  /// s_i is a right descent iff w(i) > w(i+1).
  bool has_right_descent(int i) const {
    return img_[static_cast<size_t>(i - 1)] > img_[static_cast<size_t>(i)];
  }

  friend bool operator==(const Perm& a, const Perm& b) { return a.img_ == b.img_; }
  friend bool operator!=(const Perm& a, const Perm& b) { return !(a == b); }
  friend bool operator<(const Perm& a, const Perm& b) { return a.img_ < b.img_; }

  std::string str() const {
    std::string s = "[";
    for (size_t i = 0; i < img_.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(img_[i]);
    }
    return s + "]";
  }

 private:
  std::vector<int> img_;
};

/// Reduced word along the recursive choice map r(w) = s_i r(s_i w), where i is
/// the smallest (or largest) left descent of w.  The word multiplies back to w
/// left-to-right and has length equal to the inversion count.
inline std::vector<int> reduced_word(Perm w, ChoiceRule rule = ChoiceRule::SmallestLeftDescent) {
  std::vector<int> word;
  const int d = w.degree();
  while (!w.is_identity()) {
    int pick = -1;
    if (rule == ChoiceRule::SmallestLeftDescent) {
      for (int i = 1; i < d; ++i)
        if (w.has_left_descent(i)) { pick = i; break; }
    } else {
      for (int i = d - 1; i >= 1; --i)
        if (w.has_left_descent(i)) { pick = i; break; }
    }
    word.push_back(pick);
    w = Perm::s(pick, d) * w;
  }
  return word;
}

inline Perm perm_from_word(const std::vector<int>& word, int d) {
  Perm w = Perm::identity(d);
  for (int i : word) w = w * Perm::s(i, d);
  return w;
}

inline std::vector<Perm> all_perms(int d) {
  std::vector<int> v(static_cast<size_t>(d));
  std::iota(v.begin(), v.end(), 1);
  std::vector<Perm> out;
  do {
    out.emplace_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

inline Perm longest_element(int d) {
  std::vector<int> v(static_cast<size_t>(d));
  for (int i = 0; i < d; ++i) v[static_cast<size_t>(i)] = d - i;
  return Perm(std::move(v));
}

/// Generator indices i such that s_i lies in the Young subgroup Sigma_mu.
inline std::vector<int> parabolic_generators(const std::vector<int>& mu) {
  std::vector<int> gens;
  int pos = 0;
  for (int part : mu) {
    for (int i = 1; i < part; ++i) gens.push_back(pos + i);
    pos += part;
  }
  return gens;
}

/// All elements of the Young subgroup Sigma_mu inside Sigma_d.
inline std::vector<Perm> young_subgroup(const std::vector<int>& mu, int d) {
  std::vector<Perm> out;
  auto gens = parabolic_generators(mu);
  std::vector<bool> in_block(static_cast<size_t>(d + 1), false);
  for (const Perm& w : all_perms(d)) {
    bool ok = true;
    int pos = 0;
    for (int part : mu) {
      for (int j = pos + 1; j <= pos + part && ok; ++j)
        if (w(j) <= pos || w(j) > pos + part) ok = false;
      pos += part;
      if (!ok) break;
    }
    if (ok) out.push_back(w);
  }
  return out;
}

/// Minimal-length representatives of the left cosets w * Sigma_mu in Sigma_d:
/// the permutations with no right descent inside Sigma_mu.
inline std::vector<Perm> min_coset_reps(const std::vector<int>& mu, int d) {
  int total = 0;
  for (int part : mu) {
    if (part <= 0) throw std::invalid_argument("composition parts must be positive");
    total += part;
  }
  if (total != d) throw std::invalid_argument("composition does not sum to d");
  auto gens = parabolic_generators(mu);
  std::vector<Perm> reps;
  for (const Perm& w : all_perms(d)) {
    bool minimal = true;
    for (int i : gens)
      if (w.has_right_descent(i)) { minimal = false; break; }
    if (minimal) reps.push_back(w);
  }
  std::sort(reps.begin(), reps.end(), [](const Perm& a, const Perm& b) {
    int la = a.length(), lb = b.length();
    return la != lb ? la < lb : a < b;
  });
  return reps;
}

/// Factor z = w * u with w the minimal representative of z * Sigma_mu and
/// u in Sigma_mu; lengths add: l(z) = l(w) + l(u).
inline std::pair<Perm, Perm> coset_factorize(const Perm& z, const std::vector<int>& mu) {
  const int d = z.degree();
  // Within each block, u^{-1} lists block positions in increasing order of
  // their z-values, making w = z * u^{-1}... i.e. w(j) increasing per block.
  std::vector<int> uinv(static_cast<size_t>(d));
  int pos = 0;
  for (int part : mu) {
    std::vector<int> idx(static_cast<size_t>(part));
    std::iota(idx.begin(), idx.end(), pos + 1);
    std::sort(idx.begin(), idx.end(), [&](int a, int b) { return z(a) < z(b); });
    for (int k = 0; k < part; ++k) uinv[static_cast<size_t>(pos + k)] = idx[static_cast<size_t>(k)];
    pos += part;
  }
  Perm u_inverse(uinv);
  Perm w = z * u_inverse;
  Perm u = u_inverse.inverse();
  if (w.length() + u.length() != z.length())
    throw std::logic_error("coset factorization lengths do not add");
  return {w, u};
}

}  // namespace qwreath
