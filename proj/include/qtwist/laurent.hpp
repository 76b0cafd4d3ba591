#pragma once

#include "qtwist/rational.hpp"
#include "qtwist/vartable.hpp"

#include <map>
#include <vector>

namespace qtwist {

/// Exponent vector, one signed entry per variable of the ambient table.
using ExpVec = std::vector<int>;

/// Multivariate Laurent polynomial over Q: a map from exponent vectors to
/// nonzero rational coefficients. The empty map is the zero polynomial.
/// Term order is lexicographic in the fixed variable order (std::vector's
/// own ordering), which also fixes the leading term used for canonical
/// normalization.
class LaurentPoly {
 public:
  LaurentPoly() : nvars_(0) {}
  explicit LaurentPoly(int nvars) : nvars_(nvars) {}

  static LaurentPoly constant(int nvars, const BigRat& c) {
    LaurentPoly p(nvars);
    if (!c.is_zero()) p.terms_[ExpVec(nvars, 0)] = c;
    return p;
  }
  static LaurentPoly monomial(int nvars, const ExpVec& e, const BigRat& c) {
    LaurentPoly p(nvars);
    if (!c.is_zero()) p.terms_[e] = c;
    return p;
  }
  static LaurentPoly variable(int nvars, int var, int exp = 1) {
    ExpVec e(nvars, 0);
    e.at(var) = exp;
    return monomial(nvars, e, BigRat(1));
  }

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() ||
           (terms_.size() == 1 && terms_.begin()->first == ExpVec(nvars_, 0));
  }
  bool is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == ExpVec(nvars_, 0) &&
           terms_.begin()->second == 1;
  }
  bool is_monomial() const { return terms_.size() == 1; }
  size_t term_count() const { return terms_.size(); }

  const std::map<ExpVec, BigRat>& terms() const { return terms_; }

  /// Leading term under the monomial order (largest exponent vector).
  std::pair<ExpVec, BigRat> leading_term() const {
    if (is_zero()) throw Error("leading term of zero polynomial");
    return *terms_.rbegin();
  }

  void add_term(const ExpVec& e, const BigRat& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_[e] = c;
    } else {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  LaurentPoly operator+(const LaurentPoly& o) const {
    check_compatible(o);
    LaurentPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
  }
  LaurentPoly operator-(const LaurentPoly& o) const {
    check_compatible(o);
    LaurentPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
  }
  LaurentPoly operator-() const {
    LaurentPoly r(nvars_);
    for (const auto& [e, c] : terms_) r.terms_[e] = -c;
    return r;
  }
  LaurentPoly operator*(const LaurentPoly& o) const {
    check_compatible(o);
    LaurentPoly r(nvars_);
    for (const auto& [ea, ca] : terms_) {
      for (const auto& [eb, cb] : o.terms_) {
        ExpVec e(nvars_);
        for (int v = 0; v < nvars_; ++v) e[v] = ea[v] + eb[v];
        r.add_term(e, ca * cb);
      }
    }
    return r;
  }
  LaurentPoly operator*(const BigRat& c) const {
    LaurentPoly r(nvars_);
    if (c.is_zero()) return r;
    for (const auto& [e, tc] : terms_) r.terms_[e] = tc * c;
    return r;
  }
  LaurentPoly shifted(const ExpVec& by) const {
    LaurentPoly r(nvars_);
    for (const auto& [e, c] : terms_) {
      ExpVec ne(nvars_);
      for (int v = 0; v < nvars_; ++v) ne[v] = e[v] + by[v];
      r.terms_[ne] = c;
    }
    return r;
  }
  LaurentPoly pow(unsigned k) const {
    LaurentPoly r = constant(nvars_, BigRat(1));
    LaurentPoly base = *this;
    while (k) {
      if (k & 1u) r = r * base;
      base = base * base;
      k >>= 1u;
    }
    return r;
  }

  bool operator==(const LaurentPoly& o) const {
    return nvars_ == o.nvars_ && terms_ == o.terms_;
  }
  bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

  /// Componentwise minimum exponent over all terms (zero for the zero poly).
  ExpVec min_exponents() const {
    ExpVec m(nvars_, 0);
    bool first = true;
    for (const auto& [e, c] : terms_) {
      (void)c;
      if (first) {
        m = e;
        first = false;
      } else {
        for (int v = 0; v < nvars_; ++v)
          if (e[v] < m[v]) m[v] = e[v];
      }
    }
    return m;
  }

  /// Degree in one variable; -1 for the zero polynomial.
  int degree_in(int var) const {
    int d = -1;
    for (const auto& [e, c] : terms_) {
      (void)c;
      if (e[var] > d) d = e[var];
    }
    return d;
  }

  /// Coefficient of var^k, as a polynomial with zero exponent in var.
  LaurentPoly coeff_of(int var, int k) const {
    LaurentPoly r(nvars_);
    for (const auto& [e, c] : terms_) {
      if (e[var] == k) {
        ExpVec ne = e;
        ne[var] = 0;
        r.terms_[ne] = c;
      }
    }
    return r;
  }

  void collect_vars(std::vector<bool>& used) const {
    for (const auto& [e, c] : terms_) {
      (void)c;
      for (int v = 0; v < nvars_; ++v)
        if (e[v] != 0) used[v] = true;
    }
  }

  /// Exact evaluation at a rational point. Negative exponents invert the
  /// value; a zero value with a negative exponent is an error.
  BigRat eval(const std::vector<BigRat>& values, const VarTable& vars) const {
    BigRat acc(0);
    for (const auto& [e, c] : terms_) {
      BigRat t = c;
      for (int v = 0; v < nvars_; ++v) {
        if (e[v] == 0) continue;
        if (values[v].is_zero() && e[v] < 0)
          throw Error("assignment " + vars.name(v) +
                      "=0 hits a negative exponent");
        t *= rat_pow(values[v], e[v]);
      }
      acc += t;
    }
    return acc;
  }

  std::string to_string(const VarTable& vars) const;

 private:
  void check_compatible(const LaurentPoly& o) const {
    if (nvars_ != o.nvars_)
      throw Error("polynomials over different variable tables");
  }

  int nvars_;
  std::map<ExpVec, BigRat> terms_;
};

/// Exact division of ordinary polynomials; throws if b does not divide a.
LaurentPoly divide_exact(const LaurentPoly& a, const LaurentPoly& b);

/// GCD of ordinary polynomials (no negative exponents), normalized so the
/// leading coefficient is 1. gcd(0, b) = monic b.
LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b);

}  // namespace qtwist
