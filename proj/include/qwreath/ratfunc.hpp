#pragma once

/// The fraction field Q(v), represented as reduced fractions of Laurent
/// polynomials.  Normal form: the denominator is a polynomial in v with
/// nonzero constant term and positive leading coefficient, the numerator and
/// denominator share no polynomial factor, and their integer contents are
/// coprime.  Equality is then coefficient-wise comparison.

#include "qwreath/laurent.hpp"

namespace qwreath {

class RatFunc {
 public:
  RatFunc() : num_(), den_(1) {}
  RatFunc(int constant) : num_(constant), den_(1) {}  // NOLINT: implicit embedding
  RatFunc(Laurent num) : num_(std::move(num)), den_(1) {}  // NOLINT: implicit embedding
  RatFunc(Laurent num, Laurent den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DivisionByZero("zero denominator");
    normalize();
  }

  static RatFunc v(int e = 1) { return RatFunc(Laurent::v(e)); }

  const Laurent& num() const { return num_; }
  const Laurent& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_laurent() const { return den_.is_one(); }

  /// The underlying Laurent polynomial; requires den == 1.
  const Laurent& as_laurent() const {
    if (!den_.is_one()) throw std::logic_error("not a Laurent polynomial: " + str());
    return num_;
  }

  RatFunc operator-() const {
    RatFunc r(*this);
    r.num_ = -r.num_;
    return r;
  }

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) throw DivisionByZero("division by zero in Q(v)");
    return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
  }

  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

  RatFunc inverse() const { return RatFunc(1) / *this; }

  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }
  friend bool operator<(const RatFunc& a, const RatFunc& b) {
    return a.num_ != b.num_ ? a.num_ < b.num_ : a.den_ < b.den_;
  }

  /// The bar involution v -> v^{-1}, extended to Q(v).
  RatFunc bar() const { return RatFunc(num_.bar(), den_.bar()); }

  /// Number of stored terms (used by pivot-selection heuristics).
  size_t term_count() const { return num_.terms().size() + den_.terms().size(); }

  std::string str() const {
    if (den_.is_one()) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
  }

 private:
  void normalize() {
    if (num_.is_zero()) {
      den_ = Laurent(1);
      return;
    }
    // Make the denominator a polynomial with nonzero constant term (shift the
    // unit power of v into the numerator).
    int s = den_.min_exp();
    if (s != 0) {
      den_ = den_.shifted(-s);
      num_ = num_.shifted(-s);
    }
    if (!den_.is_one()) {
      Laurent g = laurent_gcd(num_, den_);
      if (!g.is_one() && !g.is_constant()) {
        // laurent_gcd returned the gcd anchored at v^0; exact in Z[v, v^{-1}].
        num_ = laurent_exact_div(num_, g);
        den_ = laurent_exact_div(den_, g);
        int s2 = den_.min_exp();
        if (s2 != 0) {
          den_ = den_.shifted(-s2);
          num_ = num_.shifted(-s2);
        }
      }
    }
    Int g = boost::multiprecision::gcd(num_.content(), den_.content());
    if (g > 1) {
      num_ = laurent_exact_div(num_, Laurent(g));
      den_ = laurent_exact_div(den_, Laurent(g));
    }
    if (den_.leading_coeff() < 0) {
      num_ = -num_;
      den_ = -den_;
    }
  }

  Laurent num_;
  Laurent den_;
};

/// The quantum parameter q = v^2.
inline RatFunc q_param() { return RatFunc::v(2); }

inline RatFunc bar_involution(const RatFunc& f) { return f.bar(); }

}  // namespace qwreath
