#pragma once

#include "qtwist/rep.hpp"

#include <variant>
#include <vector>

namespace qtwist {

/// One bilinear term of a Cartan exponential: param^{coeff * (D x D')}
/// where D, D' are integer diagonals (eigenvalue vectors on the module) and
/// param is s (variable 0) or one of the diagonal twist parameters. For the
/// s-param the coefficient is stored in s-exponent units, so q^{c D x D'}
/// becomes coeff = 2c; everything stays integral by construction.
struct CartanTerm {
  int param = 0;
  long long coeff = 0;
  std::vector<long long> diag1, diag2;

  bool operator==(const CartanTerm& o) const {
    return param == o.param && coeff == o.coeff && diag1 == o.diag1 &&
           diag2 == o.diag2;
  }
};

/// Formal exponential of a sum of Cartan bilinears; its image on any tensor
/// power is diagonal with monomial entries.
struct CartanExp {
  std::vector<CartanTerm> terms;
  bool operator==(const CartanExp& o) const { return terms == o.terms; }
};

/// exp_base(coeff * X x Y) with X, Y generator words, base in {q^2, q^-2}
/// (stored as the q-exponent, +2 or -2) and a monomial coefficient.
struct QExpFactor {
  int base_qexp = 2;
  Monomial coeff;
  Word x, y;

  bool operator==(const QExpFactor& o) const {
    return base_qexp == o.base_qexp && coeff == o.coeff && x == o.x &&
           y == o.y;
  }
};

using TwistFactor = std::variant<CartanExp, QExpFactor>;

/// Ordered product of twist factors (left-to-right multiplication order).
struct TwistElement {
  int N = 1;
  std::vector<TwistFactor> factors;

  /// Factor-wise inverse: reverse the list, negate Cartan exponents, and
  /// use exp_{q^2}(x)^{-1} = exp_{q^-2}(-x).
  TwistElement inverse() const {
    TwistElement r;
    r.N = N;
    for (auto it = factors.rbegin(); it != factors.rend(); ++it) {
      if (std::holds_alternative<CartanExp>(*it)) {
        CartanExp ce = std::get<CartanExp>(*it);
        for (auto& t : ce.terms) t.coeff = -t.coeff;
        r.factors.push_back(ce);
      } else {
        QExpFactor qe = std::get<QExpFactor>(*it);
        qe.base_qexp = -qe.base_qexp;
        qe.coeff.coeff = -qe.coeff.coeff;
        r.factors.push_back(qe);
      }
    }
    return r;
  }

  TwistElement composed_with(const TwistElement& right) const {
    TwistElement r = *this;
    for (const auto& f : right.factors) r.factors.push_back(f);
    return r;
  }

  bool operator==(const TwistElement& o) const {
    return N == o.N && factors == o.factors;
  }
};

/// Leg assignment for evaluating one twist factor on V^{otimes total}: the
/// two tensor slots of the factor act on the listed legs. A slot with more
/// than one leg means the coproduct has been pushed into that slot (legs
/// must then be consecutive in the intended coproduct order); an empty slot
/// applies the counit.
struct LegSpec {
  std::vector<int> slot1, slot2;
  int total = 2;
};

template <class Ctx>
SparseMat<typename Ctx::Scalar> eval_factor(const Ctx& ctx, long n,
                                            const TwistFactor& factor,
                                            const LegSpec& legs) {
  using S = typename Ctx::Scalar;
  long dim = int_pow(n, legs.total);

  if (std::holds_alternative<CartanExp>(factor)) {
    const CartanExp& ce = std::get<CartanExp>(factor);
    SparseMat<S> m(dim);
    for (long idx = 1; idx <= dim; ++idx) {
      auto digits = tensor_digits(idx, legs.total, n);
      // Exponent per parameter, accumulated over terms.
      std::map<int, long long> exps;
      for (const CartanTerm& t : ce.terms) {
        long long w1 = 0, w2 = 0;
        for (int l : legs.slot1) w1 += t.diag1.at(digits[l - 1] - 1);
        for (int l : legs.slot2) w2 += t.diag2.at(digits[l - 1] - 1);
        exps[t.param] += t.coeff * w1 * w2;
      }
      S entry = ctx.one();
      for (auto& [param, e] : exps) {
        if (e == 0) continue;
        entry = entry * ctx.var_pow(param, e);
      }
      m.set(idx, idx, entry);
    }
    return m;
  }

  const QExpFactor& qe = std::get<QExpFactor>(factor);
  SparseMat<S> xi = word_delta_image(ctx, n, qe.x,
                                     static_cast<int>(legs.slot1.size()));
  SparseMat<S> yi = word_delta_image(ctx, n, qe.y,
                                     static_cast<int>(legs.slot2.size()));
  SparseMat<S> arg = embed_legs(xi, legs.slot1, legs.total, n) *
                     embed_legs(yi, legs.slot2, legs.total, n);
  S base = ctx.s_pow(2L * qe.base_qexp);
  return qexp_nilpotent(ctx, ctx.monomial(qe.coeff), arg, base);
}

/// Image of the whole twist element with both slots on single legs.
template <class Ctx>
SparseMat<typename Ctx::Scalar> eval_element(const Ctx& ctx, long n,
                                             const TwistElement& el,
                                             const LegSpec& legs) {
  using S = typename Ctx::Scalar;
  SparseMat<S> r =
      SparseMat<S>::identity(int_pow(n, legs.total), ctx.one());
  for (const auto& f : el.factors) r = r * eval_factor(ctx, n, f, legs);
  return r;
}

/// F_{ij} on V^{otimes total}.
template <class Ctx>
SparseMat<typename Ctx::Scalar> eval_legs(const Ctx& ctx, long n,
                                          const TwistElement& el, int i,
                                          int j, int total) {
  return eval_element(ctx, n, el, LegSpec{{i}, {j}, total});
}

}  // namespace qtwist
