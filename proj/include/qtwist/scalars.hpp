#pragma once

#include "qtwist/field.hpp"

#include <vector>

namespace qtwist {

/// A monomial with rational coefficient, c * prod var^exp, used wherever a
/// structural object carries a symbolic coefficient (mu-parameters and the
/// like). Evaluated through a scalar context.
struct Monomial {
  BigRat coeff{1};
  std::vector<std::pair<int, long>> vars;  // (variable index, exponent)

  static Monomial one() { return Monomial{}; }
  static Monomial variable(int v) { return Monomial{BigRat(1), {{v, 1}}}; }
  Monomial operator*(const Monomial& o) const;
  bool operator==(const Monomial& o) const {
    return coeff == o.coeff && vars == o.vars;
  }
};

inline Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r;
  r.coeff = coeff * o.coeff;
  std::map<int, long> acc;
  for (auto& [v, e] : vars) acc[v] += e;
  for (auto& [v, e] : o.vars) acc[v] += e;
  for (auto& [v, e] : acc)
    if (e != 0) r.vars.push_back({v, e});
  return r;
}

/// Scalar context for fully symbolic computation over the rational-function
/// field. All constructions are written against this interface so the same
/// code runs exactly in either mode.
struct SymbolicCtx {
  using Scalar = FieldElem;

  const VarTable* vars;

  explicit SymbolicCtx(const VarTable& table) : vars(&table) {}

  int nvars() const { return vars->size(); }
  Scalar zero() const { return FieldElem::zero(nvars()); }
  Scalar one() const { return FieldElem::one(nvars()); }
  Scalar rational(const BigRat& c) const {
    return FieldElem::from_rational(nvars(), c);
  }
  Scalar s_pow(long e) const { return FieldElem::var_pow(nvars(), 0, e); }
  Scalar var_pow(int v, long e) const {
    return FieldElem::var_pow(nvars(), v, e);
  }
  Scalar monomial(const Monomial& m) const {
    Scalar r = rational(m.coeff);
    for (auto& [v, e] : m.vars) r = r * var_pow(v, e);
    return r;
  }
  static bool is_zero(const Scalar& x) { return x.is_zero(); }
  static bool is_one(const Scalar& x) { return x.is_one(); }
  std::string display(const Scalar& x) const { return x.to_string(*vars); }
};

/// Scalar context for exact numeric-rational computation at a fixed
/// assignment of every variable.
struct NumericCtx {
  using Scalar = BigRat;

  const VarTable* vars;
  std::vector<BigRat> values;

  NumericCtx(const VarTable& table, std::vector<BigRat> vals)
      : vars(&table), values(std::move(vals)) {
    if (static_cast<int>(values.size()) != table.size())
      throw Error("assignment does not cover all variables");
  }

  int nvars() const { return vars->size(); }
  Scalar zero() const { return BigRat(0); }
  Scalar one() const { return BigRat(1); }
  Scalar rational(const BigRat& c) const { return c; }
  Scalar s_pow(long e) const { return rat_pow(values[0], e); }
  Scalar var_pow(int v, long e) const { return rat_pow(values.at(v), e); }
  Scalar monomial(const Monomial& m) const {
    Scalar r = m.coeff;
    for (auto& [v, e] : m.vars) r *= var_pow(v, e);
    return r;
  }
  static bool is_zero(const Scalar& x) { return x.is_zero(); }
  static bool is_one(const Scalar& x) { return x == 1; }
  std::string display(const Scalar& x) const { return rat_to_string(x); }
};

/// Exact scalar division with a zero check (BigRat would not throw).
template <class Ctx>
typename Ctx::Scalar scalar_div(const Ctx& ctx, const typename Ctx::Scalar& a,
                                const typename Ctx::Scalar& b) {
  if (Ctx::is_zero(b)) throw Error("division by zero");
  (void)ctx;
  return a / b;
}

/// q-integer [n; base] over an arbitrary scalar context.
template <class Ctx>
typename Ctx::Scalar q_int_scalar(const Ctx& ctx, int n,
                                  const typename Ctx::Scalar& base) {
  if (Ctx::is_one(base)) throw Error("degenerate q-number: base = 1");
  typename Ctx::Scalar num = ctx.one(), acc = ctx.zero();
  // 1 + base + ... + base^{n-1}, avoids dividing by base-1.
  for (int k = 0; k < n; ++k) {
    acc = acc + num;
    num = num * base;
  }
  return acc;
}

template <class Ctx>
typename Ctx::Scalar q_factorial_scalar(const Ctx& ctx, int n,
                                        const typename Ctx::Scalar& base) {
  typename Ctx::Scalar r = ctx.one();
  for (int k = 1; k <= n; ++k) r = r * q_int_scalar(ctx, k, base);
  return r;
}

}  // namespace qtwist
