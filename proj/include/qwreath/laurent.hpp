#pragma once

/// Laurent polynomials in one variable v with arbitrary-precision integer
/// coefficients: the ring Z[v, v^{-1}].  All arithmetic is exact.

#include <boost/multiprecision/cpp_int.hpp>

#include <initializer_list>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qwreath {

using Int = boost::multiprecision::cpp_int;

struct NotAPerfectSquare : std::runtime_error {
  explicit NotAPerfectSquare(const std::string& what) : std::runtime_error(what) {}
};

struct DivisionByZero : std::runtime_error {
  explicit DivisionByZero(const std::string& what) : std::runtime_error(what) {}
};

/// Sparse Laurent polynomial: map from exponent of v to a nonzero coefficient.
class Laurent {
 public:
  Laurent() = default;

  Laurent(int constant) {  // NOLINT: implicit by design, mirrors ring embedding
    if (constant != 0) coeff_[0] = constant;
  }

  explicit Laurent(const Int& constant) {
    if (constant != 0) coeff_[0] = constant;
  }

  /// Monomial c * v^e.
  static Laurent term(Int c, int e) {
    Laurent f;
    if (c != 0) f.coeff_[e] = std::move(c);
    return f;
  }

  static Laurent v(int e = 1) { return term(1, e); }

  static Laurent from_pairs(std::initializer_list<std::pair<int, Int>> pairs) {
    Laurent f;
    for (const auto& [e, c] : pairs) {
      if (c != 0) {
        auto it = f.coeff_.find(e);
        if (it == f.coeff_.end())
          f.coeff_[e] = c;
        else if ((it->second += c) == 0)
          f.coeff_.erase(it);
      }
    }
    return f;
  }

  bool is_zero() const { return coeff_.empty(); }
  bool is_one() const { return coeff_.size() == 1 && coeff_.begin()->first == 0 && coeff_.begin()->second == 1; }
  bool is_constant() const { return coeff_.empty() || (coeff_.size() == 1 && coeff_.begin()->first == 0); }

  /// Lowest/highest exponent with nonzero coefficient; requires nonzero.
  int min_exp() const { require_nonzero(); return coeff_.begin()->first; }
  int max_exp() const { require_nonzero(); return coeff_.rbegin()->first; }

  Int coeff(int e) const {
    auto it = coeff_.find(e);
    return it == coeff_.end() ? Int(0) : it->second;
  }

  Int leading_coeff() const { require_nonzero(); return coeff_.rbegin()->second; }

  const std::map<int, Int>& terms() const { return coeff_; }

  Laurent operator-() const {
    Laurent f(*this);
    for (auto& [e, c] : f.coeff_) c = -c;
    return f;
  }

  Laurent& operator+=(const Laurent& o) {
    for (const auto& [e, c] : o.coeff_) {
      auto it = coeff_.find(e);
      if (it == coeff_.end())
        coeff_[e] = c;
      else if ((it->second += c) == 0)
        coeff_.erase(it);
    }
    return *this;
  }

  Laurent& operator-=(const Laurent& o) { return *this += -o; }

  friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
  friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }

  friend Laurent operator*(const Laurent& a, const Laurent& b) {
    Laurent p;
    for (const auto& [ea, ca] : a.coeff_)
      for (const auto& [eb, cb] : b.coeff_) {
        int e = ea + eb;
        auto it = p.coeff_.find(e);
        if (it == p.coeff_.end()) {
          Int c = ca * cb;
          if (c != 0) p.coeff_[e] = std::move(c);
        } else if ((it->second += ca * cb) == 0) {
          p.coeff_.erase(it);
        }
      }
    return p;
  }

  Laurent& operator*=(const Laurent& o) { return *this = *this * o; }

  friend bool operator==(const Laurent& a, const Laurent& b) { return a.coeff_ == b.coeff_; }
  friend bool operator!=(const Laurent& a, const Laurent& b) { return !(a == b); }
  friend bool operator<(const Laurent& a, const Laurent& b) { return a.coeff_ < b.coeff_; }

  /// The bar involution v -> v^{-1}.
  Laurent bar() const {
    Laurent f;
    for (const auto& [e, c] : coeff_) f.coeff_[-e] = c;
    return f;
  }

  /// Multiply by v^e.
  Laurent shifted(int e) const {
    Laurent f;
    for (const auto& [e0, c] : coeff_) f.coeff_[e0 + e] = c;
    return f;
  }

  Laurent pow(unsigned n) const {
    Laurent r = 1, b = *this;
    while (n) {
      if (n & 1u) r *= b;
      b *= b;
      n >>= 1u;
    }
    return r;
  }

  /// gcd of the integer coefficients, positive; 0 for the zero polynomial.
  Int content() const {
    Int g = 0;
    for (const auto& [e, c] : coeff_) g = boost::multiprecision::gcd(g, c);
    return g < 0 ? Int(-g) : g;
  }

  /// Exponents-descending rendering, e.g. "v^4 + 2*v^2 - 2 + 2*v^-2 + v^-4".
  std::string str() const {
    if (coeff_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto it = coeff_.rbegin(); it != coeff_.rend(); ++it) {
      Int c = it->second;
      if (first) {
        if (c < 0) { out << "-"; c = -c; }
        first = false;
      } else {
        out << (c < 0 ? " - " : " + ");
        if (c < 0) c = -c;
      }
      int e = it->first;
      if (e == 0) {
        out << c;
      } else {
        if (c != 1) out << c << "*";
        out << "v";
        if (e != 1) out << "^" << e;
      }
    }
    return out.str();
  }

 private:
  void require_nonzero() const {
    if (coeff_.empty()) throw std::logic_error("zero Laurent polynomial has no support");
  }

  std::map<int, Int> coeff_;
};

namespace detail {

/// Dense polynomial (ascending exponents, no trailing zero) helpers for gcd.
using Dense = std::vector<Int>;

inline Dense to_dense(const Laurent& f) {
  Dense p;
  if (f.is_zero()) return p;
  int lo = f.min_exp();
  p.assign(static_cast<size_t>(f.max_exp() - lo + 1), Int(0));
  for (const auto& [e, c] : f.terms()) p[static_cast<size_t>(e - lo)] = c;
  return p;
}

inline void trim(Dense& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline Int dense_content(const Dense& p) {
  Int g = 0;
  for (const auto& c : p) g = boost::multiprecision::gcd(g, c);
  return g < 0 ? Int(-g) : g;
}

inline Dense primitive_part(Dense p) {
  Int g = dense_content(p);
  if (g > 1)
    for (auto& c : p) c /= g;
  return p;
}

/// Pseudo-remainder of a by b (b nonzero): lc(b)^(deg a - deg b + 1) * a mod b.
inline Dense pseudo_rem(Dense a, const Dense& b) {
  const Int lcb = b.back();
  const size_t db = b.size() - 1;
  while (a.size() >= b.size()) {
    trim(a);
    if (a.size() < b.size()) break;
    Int q = a.back();
    size_t shift = a.size() - b.size();
    for (auto& c : a) c *= lcb;
    for (size_t i = 0; i <= db; ++i) a[shift + i] -= q * b[i];
    trim(a);
  }
  trim(a);
  return a;
}

inline Dense dense_gcd(Dense a, Dense b) {
  trim(a);
  trim(b);
  if (a.empty()) return primitive_part(b);
  if (b.empty()) return primitive_part(a);
  Int ca = dense_content(a), cb = dense_content(b);
  a = primitive_part(std::move(a));
  b = primitive_part(std::move(b));
  while (!b.empty()) {
    Dense r = pseudo_rem(a, b);
    a = std::move(b);
    b = primitive_part(std::move(r));
  }
  Int cg = boost::multiprecision::gcd(ca, cb);
  for (auto& c : a) c *= cg;
  if (a.back() < 0)
    for (auto& c : a) c = -c;
  return a;
}

inline Laurent from_dense(const Dense& p, int lo) {
  Laurent f;
  for (size_t i = 0; i < p.size(); ++i)
    if (p[i] != 0) f += Laurent::term(p[i], lo + static_cast<int>(i));
  return f;
}

}  // namespace detail

/// gcd in Z[v, v^{-1}], normalized to a polynomial with nonzero constant term
/// and positive leading coefficient.  gcd(0, 0) = 0.
inline Laurent laurent_gcd(const Laurent& a, const Laurent& b) {
  if (a.is_zero() && b.is_zero()) return Laurent();
  auto g = detail::dense_gcd(detail::to_dense(a), detail::to_dense(b));
  // dense_gcd drops the unit v^k factors by construction (both inputs were
  // shifted to constant-term-nonzero polynomials); re-anchor at exponent 0.
  size_t lo = 0;
  while (lo < g.size() && g[lo] == 0) ++lo;
  return detail::from_dense(detail::Dense(g.begin() + static_cast<long>(lo), g.end()), 0);
}

/// Exact division: returns a/b if b divides a in Z[v, v^{-1}], throws otherwise.
inline Laurent laurent_exact_div(const Laurent& a, const Laurent& b) {
  if (b.is_zero()) throw DivisionByZero("laurent_exact_div by zero");
  if (a.is_zero()) return Laurent();
  Laurent rem = a;
  Laurent quot;
  const Int lcb = b.leading_coeff();
  const int eb = b.max_exp();
  while (!rem.is_zero()) {
    Int lcr = rem.leading_coeff();
    if (lcr % lcb != 0) throw std::invalid_argument("laurent_exact_div: inexact division");
    Laurent t = Laurent::term(lcr / lcb, rem.max_exp() - eb);
    quot += t;
    rem -= t * b;
    if (!rem.is_zero() && rem.max_exp() >= a.max_exp() + 1)
      throw std::invalid_argument("laurent_exact_div: inexact division");
  }
  return quot;
}

/// Exact square root in Z[v, v^{-1}]: g with g^2 = f and positive leading
/// coefficient.  Shift f to a polynomial with nonzero constant term, take the
/// integer square root of the leading coefficient, solve the remaining
/// coefficients top-down, and verify by squaring.
inline Laurent laurent_sqrt(const Laurent& f) {
  if (f.is_zero()) return Laurent();
  const int lo = f.min_exp(), hi = f.max_exp();
  if (((hi - lo) & 1) != 0 || (lo & 1) != 0)
    throw NotAPerfectSquare("odd support bounds: " + f.str());
  const auto p = detail::to_dense(f);  // degree hi - lo, constant term nonzero
  const size_t dg = static_cast<size_t>(hi - lo) / 2;
  Int lead = p.back();
  if (lead < 0) throw NotAPerfectSquare("negative leading coefficient: " + f.str());
  Int glead = boost::multiprecision::sqrt(lead);
  if (glead * glead != lead)
    throw NotAPerfectSquare("leading coefficient is not a perfect square: " + f.str());
  std::vector<Int> g(dg + 1, Int(0));
  g[dg] = glead;
  for (size_t k = dg; k-- > 0;) {
    // Coefficient of v^(k + dg) in g^2 is 2*g[dg]*g[k] + cross terms with
    // indices strictly between k and dg.
    Int target = (k + dg < p.size()) ? p[k + dg] : Int(0);
    for (size_t i = k + 1; i + dg >= k + dg + 1 && i < dg; ++i) {
      size_t j = k + dg - i;
      if (j > i && j <= dg) target -= 2 * g[i] * g[j];
      if (j == i) target -= g[i] * g[i];
    }
    Int denom = 2 * glead;
    if (target % denom != 0) throw NotAPerfectSquare("coefficient recursion failed: " + f.str());
    g[k] = target / denom;
  }
  Laurent root = detail::from_dense(g, lo / 2);
  if (root * root != f) throw NotAPerfectSquare("verification by squaring failed: " + f.str());
  if (root.leading_coeff() < 0) root = -root;
  return root;
}

}  // namespace qwreath
