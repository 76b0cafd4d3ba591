#pragma once

#include "qtwist/laurent.hpp"

#include <map>
#include <set>
#include <string>

namespace qtwist {

/// Exact rational function over Q in the ambient variables, kept in a
/// canonical form at all times:
///   - numerator and denominator are ordinary polynomials (exponents >= 0),
///   - gcd(numerator, denominator) = 1,
///   - the denominator is monic under the lexicographic monomial order.
/// With this normalization equal elements have identical representations and
/// to_string is injective.
class FieldElem {
 public:
  FieldElem() : FieldElem(0) {}
  explicit FieldElem(int nvars)
      : num_(nvars), den_(LaurentPoly::constant(nvars, BigRat(1))) {}

  static FieldElem zero(int nvars) { return FieldElem(nvars); }
  static FieldElem one(int nvars) {
    return from_rational(nvars, BigRat(1));
  }
  static FieldElem from_rational(int nvars, const BigRat& c) {
    FieldElem x(nvars);
    x.num_ = LaurentPoly::constant(nvars, c);
    return x;
  }
  static FieldElem from_poly(LaurentPoly p) {
    FieldElem x(p.nvars());
    x.num_ = std::move(p);
    x.canonicalize();
    return x;
  }
  static FieldElem fraction(LaurentPoly num, LaurentPoly den) {
    FieldElem x(num.nvars());
    x.num_ = std::move(num);
    x.den_ = std::move(den);
    x.canonicalize();
    return x;
  }
  static FieldElem var_pow(int nvars, int var, long exp) {
    if (exp == 0) return one(nvars);
    FieldElem x(nvars);
    x.num_ = LaurentPoly::variable(nvars, var, static_cast<int>(exp));
    x.canonicalize();
    return x;
  }

  int nvars() const { return num_.nvars(); }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }

  FieldElem operator+(const FieldElem& o) const;
  FieldElem operator-(const FieldElem& o) const;
  FieldElem operator*(const FieldElem& o) const;
  FieldElem operator/(const FieldElem& o) const;
  FieldElem operator-() const;
  FieldElem inverse() const;
  FieldElem pow(long k) const;

  bool operator==(const FieldElem& o) const {
    return num_ == o.num_ && den_ == o.den_;
  }
  bool operator!=(const FieldElem& o) const { return !(*this == o); }

  /// True if the element is c * (product of variable powers).
  bool is_monomial() const { return num_.is_monomial() && den_.is_monomial(); }

  void collect_vars(std::vector<bool>& used) const {
    num_.collect_vars(used);
    den_.collect_vars(used);
  }

  /// Exact evaluation; throws when the denominator vanishes, naming the
  /// assignment.
  BigRat substitute(const std::vector<BigRat>& values,
                    const VarTable& vars) const;

  /// Replace whole variables by field elements (exponent-wise powering).
  FieldElem substitute_vars(const std::map<int, FieldElem>& repl) const;

  std::string to_string(const VarTable& vars) const {
    if (den_.is_one()) return num_.to_string(vars);
    return "(" + num_.to_string(vars) + ")/(" + den_.to_string(vars) + ")";
  }

 private:
  void canonicalize();

  LaurentPoly num_, den_;
};

/// q-integer [n; base] = (base^n - 1)/(base - 1). base = 1 is rejected.
FieldElem q_int(int n, const FieldElem& base);

/// q-factorial [n; base]! = prod_{k=1..n} [k; base], with [0]! = 1.
FieldElem q_factorial(int n, const FieldElem& base);

}  // namespace qtwist
