#pragma once

/// Partitions, compositions, standard-tableau counting, the w_mu permutation,
/// labelled index posets I_B, multipartitions, and the dominance order on the
/// set Omega of I_B-partitions of d.

#include "qwreath/perm.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace qwreath {

struct IncompatibleIndexSets : std::runtime_error {
  explicit IncompatibleIndexSets(const std::string& what) : std::runtime_error(what) {}
};

class Partition {
 public:
  Partition() = default;

  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
      if (i && parts_[i] > parts_[i - 1]) throw std::invalid_argument("parts must weakly decrease");
    }
  }

  static Partition row(int n) { return n == 0 ? Partition() : Partition(std::vector<int>{n}); }
  static Partition column(int n) { return Partition(std::vector<int>(static_cast<size_t>(n), 1)); }

  const std::vector<int>& parts() const { return parts_; }
  bool empty() const { return parts_.empty(); }
  int rows() const { return static_cast<int>(parts_.size()); }
  int part(int i) const {  // 1-based, 0 beyond the last row
    return (i >= 1 && i <= rows()) ? parts_[static_cast<size_t>(i - 1)] : 0;
  }

  int size() const {
    int n = 0;
    for (int p : parts_) n += p;
    return n;
  }

  Partition transpose() const {
    std::vector<int> t;
    if (!parts_.empty()) {
      t.assign(static_cast<size_t>(parts_[0]), 0);
      for (int p : parts_)
        for (int j = 0; j < p; ++j) ++t[static_cast<size_t>(j)];
    }
    return Partition(std::move(t));
  }

  /// Partial sum of the first k parts.
  int partial_sum(int k) const {
    int s = 0;
    for (int i = 1; i <= k; ++i) s += part(i);
    return s;
  }

  friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
  friend bool operator!=(const Partition& a, const Partition& b) { return !(a == b); }
  friend bool operator<(const Partition& a, const Partition& b) { return a.parts_ < b.parts_; }

  std::string str() const {
    if (parts_.empty()) return "()";
    std::string s = "(";
    for (size_t i = 0; i < parts_.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(parts_[i]);
    }
    return s + ")";
  }

 private:
  std::vector<int> parts_;
};

inline std::vector<Partition> all_partitions(int n) {
  std::vector<Partition> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int rem, int maxpart) -> void {
    if (rem == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(rem, maxpart); p >= 1; --p) {
      cur.push_back(p);
      self(self, rem - p, p);
      cur.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

/// Dominance on partitions of equal size: a <= b iff all partial sums of a are
/// bounded by those of b.
inline bool partition_dominance_leq(const Partition& a, const Partition& b) {
  if (a.size() != b.size()) return false;
  int rows = std::max(a.rows(), b.rows());
  for (int k = 1; k <= rows; ++k)
    if (a.partial_sum(k) > b.partial_sum(k)) return false;
  return true;
}

/// Number of standard Young tableaux of shape nu, by exhaustive growth.
inline long syt_count(const Partition& nu) {
  const int n = nu.size();
  if (n == 0) return 1;
  std::vector<int> filled(static_cast<size_t>(nu.rows()), 0);  // cells used per row
  auto rec = [&](auto&& self, int next) -> long {
    if (next > n) return 1;
    long total = 0;
    for (int r = 0; r < nu.rows(); ++r) {
      size_t ri = static_cast<size_t>(r);
      if (filled[ri] >= nu.part(r + 1)) continue;
      if (r > 0 && filled[static_cast<size_t>(r - 1)] <= filled[ri]) continue;
      ++filled[ri];
      total += self(self, next + 1);
      --filled[ri];
    }
    return total;
  };
  return rec(rec, 1);
}

/// Row-reading standard filling of shape mu: entries 1..n along rows.
/// Returned as rows of entries.
inline std::vector<std::vector<int>> row_reading_tableau(const Partition& mu) {
  std::vector<std::vector<int>> t;
  int next = 1;
  for (int r = 1; r <= mu.rows(); ++r) {
    std::vector<int> row;
    for (int c = 0; c < mu.part(r); ++c) row.push_back(next++);
    t.push_back(std::move(row));
  }
  return t;
}

/// The shortest permutation taking the row-reading tableau of shape mu to the
/// transpose of the row-reading tableau of shape mu^t (a filling of shape mu).
/// Computed by brute-force minimum over all permutations realizing the
/// entrywise mapping.
inline Perm w_mu(const Partition& mu) {
  const int n = mu.size();
  if (n == 0) return Perm::identity(0);
  auto source = row_reading_tableau(mu);
  auto tmu_t = row_reading_tableau(mu.transpose());
  // Transpose tmu_t into a filling of shape mu.
  std::vector<std::vector<int>> target(static_cast<size_t>(mu.rows()));
  for (int r = 1; r <= mu.rows(); ++r)
    for (int c = 1; c <= mu.part(r); ++c)
      target[static_cast<size_t>(r - 1)].push_back(tmu_t[static_cast<size_t>(c - 1)][static_cast<size_t>(r - 1)]);
  std::optional<Perm> best;
  for (const Perm& w : all_perms(n)) {
    bool realizes = true;
    for (size_t r = 0; r < source.size() && realizes; ++r)
      for (size_t c = 0; c < source[r].size() && realizes; ++c)
        if (w(source[r][c]) != target[r][c]) realizes = false;
    if (realizes && (!best || w.length() < best->length())) best = w;
  }
  return *best;  // the entrywise mapping always has a (unique) realization
}

/// A finite labelled poset I_B: labels, a strict order (transitively closed at
/// construction), and an optional order-reversing transpose involution.
class IBPoset {
 public:
  IBPoset(std::vector<std::string> labels, std::vector<std::pair<int, int>> strict_less,
          std::optional<std::vector<int>> transpose = std::nullopt)
      : labels_(std::move(labels)), transpose_(std::move(transpose)) {
    for (auto [a, b] : strict_less) less_.insert({a, b});
    // Transitive closure.
    bool changed = true;
    const int n = size();
    while (changed) {
      changed = false;
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          if (less_.count({a, b}))
            for (int c = 0; c < n; ++c)
              if (less_.count({b, c}) && !less_.count({a, c})) {
                less_.insert({a, c});
                changed = true;
              }
    }
    for (int a = 0; a < n; ++a)
      if (less_.count({a, a})) throw std::invalid_argument("order relation is not irreflexive");
  }

  int size() const { return static_cast<int>(labels_.size()); }
  const std::string& label(int i) const { return labels_[static_cast<size_t>(i)]; }

  int index_of(const std::string& label) const {
    for (int i = 0; i < size(); ++i)
      if (labels_[static_cast<size_t>(i)] == label) return i;
    throw std::invalid_argument("unknown label: " + label);
  }

  bool lt(int a, int b) const { return less_.count({a, b}) > 0; }
  bool leq(int a, int b) const { return a == b || lt(a, b); }

  bool has_transpose() const { return transpose_.has_value(); }
  int transpose(int i) const {
    if (!transpose_) throw std::logic_error("poset has no transpose involution");
    return (*transpose_)[static_cast<size_t>(i)];
  }

  /// Enumeration compatible with the order: topological sort, smaller elements
  /// first, lexicographic tie-break on labels.
  std::vector<int> enumeration() const {
    std::vector<int> order;
    std::vector<bool> placed(static_cast<size_t>(size()), false);
    while (static_cast<int>(order.size()) < size()) {
      int pick = -1;
      for (int i = 0; i < size(); ++i) {
        if (placed[static_cast<size_t>(i)]) continue;
        bool ready = true;
        for (int j = 0; j < size(); ++j)
          if (!placed[static_cast<size_t>(j)] && lt(j, i)) { ready = false; break; }
        if (!ready) continue;
        if (pick < 0 || label(i) < label(pick)) pick = i;
      }
      placed[static_cast<size_t>(pick)] = true;
      order.push_back(pick);
    }
    return order;
  }

  /// Total order on labels "1" < "2" < ... < "m" with the order-reversing
  /// involution i <-> m+1-i (the Ariki-Koike index poset).
  static IBPoset total_order(int m) {
    std::vector<std::string> labels;
    std::vector<std::pair<int, int>> less;
    std::vector<int> t;
    for (int i = 0; i < m; ++i) {
      labels.push_back(std::to_string(i + 1));
      t.push_back(m - 1 - i);
      for (int j = i + 1; j < m; ++j) less.push_back({i, j});
    }
    return IBPoset(std::move(labels), std::move(less), std::move(t));
  }

  /// Partitions of m under dominance, with the transpose involution (the Hu
  /// index poset).
  static IBPoset partition_dominance(int m) {
    auto parts = all_partitions(m);
    std::vector<std::string> labels;
    for (const auto& p : parts) labels.push_back(p.str());
    std::vector<std::pair<int, int>> less;
    std::vector<int> t(parts.size());
    for (size_t i = 0; i < parts.size(); ++i) {
      for (size_t j = 0; j < parts.size(); ++j)
        if (i != j && partition_dominance_leq(parts[i], parts[j])) less.push_back({static_cast<int>(i), static_cast<int>(j)});
      Partition pt = parts[i].transpose();
      for (size_t j = 0; j < parts.size(); ++j)
        if (parts[j] == pt) t[i] = static_cast<int>(j);
    }
    return IBPoset(std::move(labels), std::move(less), std::move(t));
  }

 private:
  std::vector<std::string> labels_;
  std::set<std::pair<int, int>> less_;
  std::optional<std::vector<int>> transpose_;
};

/// A finitely-supported map I_B -> partitions with total size = degree.
class Multipartition {
 public:
  Multipartition(int degree, std::map<int, Partition> support)
      : degree_(degree), support_(std::move(support)) {
    int total = 0;
    for (auto it = support_.begin(); it != support_.end();) {
      if (it->second.empty()) {
        it = support_.erase(it);
      } else {
        total += it->second.size();
        ++it;
      }
    }
    if (total != degree_) throw std::invalid_argument("multipartition sizes do not sum to degree");
  }

  /// Characteristic function e_label^nu.
  static Multipartition e(int label, const Partition& nu) {
    return Multipartition(nu.size(), {{label, nu}});
  }

  int degree() const { return degree_; }
  const std::map<int, Partition>& support() const { return support_; }

  Partition value(int label) const {
    auto it = support_.find(label);
    return it == support_.end() ? Partition() : it->second;
  }

  /// Sum of characteristic functions with disjoint supports.
  friend Multipartition operator+(const Multipartition& a, const Multipartition& b) {
    std::map<int, Partition> s = a.support_;
    for (const auto& [label, nu] : b.support_) {
      if (s.count(label)) throw std::invalid_argument("overlapping supports in multipartition sum");
      s[label] = nu;
    }
    return Multipartition(a.degree_ + b.degree_, std::move(s));
  }

  friend bool operator==(const Multipartition& a, const Multipartition& b) {
    return a.degree_ == b.degree_ && a.support_ == b.support_;
  }
  friend bool operator!=(const Multipartition& a, const Multipartition& b) { return !(a == b); }
  friend bool operator<(const Multipartition& a, const Multipartition& b) {
    if (a.degree_ != b.degree_) return a.degree_ < b.degree_;
    return a.support_ < b.support_;
  }

  std::string str(const IBPoset& poset) const {
    std::string out = "{";
    bool first = true;
    for (const auto& [label, nu] : support_) {
      if (!first) out += ", ";
      first = false;
      out += poset.label(label) + " -> " + nu.str();
    }
    return out + "}";
  }

 private:
  int degree_;
  std::map<int, Partition> support_;  // label index -> nonempty partition
};

/// The dominance order of Omega: lam <= rhs iff for every nu in I_B and every
/// k >= 1,
///   partial_k(lam(nu)) + sum_{gamma > nu} |lam(gamma)|
///     <= partial_k(rhs(nu)) + sum_{gamma > nu} |rhs(gamma)|.
/// (The sum runs over labels strictly above nu; this orientation reproduces
/// the worked chains for both the total-order and dominance index posets.)
inline bool dominance_leq(const Multipartition& lhs, const Multipartition& rhs, const IBPoset& poset) {
  if (lhs.degree() != rhs.degree()) throw IncompatibleIndexSets("ambient degrees differ");
  for (const auto& mp : {lhs, rhs})
    for (const auto& [label, nu] : mp.support())
      if (label < 0 || label >= poset.size()) throw IncompatibleIndexSets("label outside I_B");
  auto above = [&](const Multipartition& mp, int nu_idx) {
    int s = 0;
    for (const auto& [label, val] : mp.support())
      if (poset.lt(nu_idx, label)) s += val.size();
    return s;
  };
  for (int nu_idx = 0; nu_idx < poset.size(); ++nu_idx) {
    Partition l = lhs.value(nu_idx), r = rhs.value(nu_idx);
    int la = above(lhs, nu_idx), ra = above(rhs, nu_idx);
    int rows = std::max(l.rows(), r.rows()) + 1;
    for (int k = 1; k <= rows; ++k)
      if (l.partial_sum(k) + la > r.partial_sum(k) + ra) return false;
  }
  return true;
}

/// Transpose of a multipartition: lam^t(nu) = lam(nu^t)^t.
inline Multipartition transpose_multipartition(const Multipartition& x, const IBPoset& poset) {
  std::map<int, Partition> s;
  for (const auto& [label, nu] : x.support()) s[poset.transpose(label)] = nu.transpose();
  return Multipartition(x.degree(), std::move(s));
}

/// All I_B-partitions of d.
inline std::vector<Multipartition> enumerate_omega(const IBPoset& poset, int d) {
  std::vector<Multipartition> out;
  std::map<int, Partition> cur;
  auto rec = [&](auto&& self, int label, int rem) -> void {
    if (label == poset.size()) {
      if (rem == 0) out.push_back(Multipartition(d, cur));
      return;
    }
    self(self, label + 1, rem);  // empty at this label
    for (int n = 1; n <= rem; ++n)
      for (const Partition& nu : all_partitions(n)) {
        cur[label] = nu;
        self(self, label + 1, rem - n);
        cur.erase(label);
      }
  };
  rec(rec, 0, d);
  std::sort(out.begin(), out.end());
  return out;
}

/// The composition |lam|: the sizes of the values, listed along the fixed
/// order-compatible enumeration of I_B.  Also returns the labels in order.
inline std::pair<std::vector<int>, std::vector<int>> multipartition_shape(const Multipartition& x,
                                                                          const IBPoset& poset) {
  std::vector<int> mu, labels;
  for (int idx : poset.enumeration()) {
    auto it = x.support().find(idx);
    if (it != x.support().end()) {
      mu.push_back(it->second.size());
      labels.push_back(idx);
    }
  }
  return {mu, labels};
}

}  // namespace qwreath
