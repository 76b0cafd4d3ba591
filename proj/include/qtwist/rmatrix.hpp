#pragma once

#include "qtwist/twist.hpp"

#include <map>
#include <string>

namespace qtwist {

/// Standard R-matrix on V x V for gl(n):
/// q sum_i e_ii x e_ii + sum_{i!=j} e_ii x e_jj + w sum_{i<j} e_ij x e_ji,
/// with w = q - q^{-1}. Exactly n + n(n-1) + n(n-1)/2 entries.
template <class Ctx>
SparseMat<typename Ctx::Scalar> r_standard_direct(const Ctx& ctx, long n) {
  using S = typename Ctx::Scalar;
  if (n < 2) throw Error("r_standard_direct requires n >= 2");
  S q = ctx.s_pow(2);
  S omega = ctx.s_pow(2) - ctx.s_pow(-2);
  SparseMat<S> r(n * n);
  for (long i = 1; i <= n; ++i) {
    for (long j = 1; j <= n; ++j) {
      long d = tensor_index({i, j}, n);
      r.set(d, d, i == j ? q : ctx.one());
    }
  }
  for (long i = 1; i <= n; ++i)
    for (long j = i + 1; j <= n; ++j)
      r.set(tensor_index({i, j}, n), tensor_index({j, i}, n), omega);
  return r;
}

/// Factorized form: gl-normalized Cartan factor q^{sum_i e_ii x e_ii} times
/// the ordered product over positive roots (">" order) of
/// exp_{q^-2}(w e_alpha x f_alpha). Must reproduce r_standard_direct.
template <class Ctx>
SparseMat<typename Ctx::Scalar> r_standard_factorized(const Ctx& ctx, int k) {
  using S = typename Ctx::Scalar;
  if (k < 2) throw Error("r_standard_factorized requires k >= 2");
  long n = k;
  S omega = ctx.s_pow(2) - ctx.s_pow(-2);
  S base = ctx.s_pow(-4);  // q^{-2}

  SparseMat<S> cartan(n * n);
  for (long i = 1; i <= n; ++i)
    for (long j = 1; j <= n; ++j) {
      long d = tensor_index({i, j}, n);
      cartan.set(d, d, i == j ? ctx.s_pow(2) : ctx.one());
    }

  SparseMat<S> r = cartan;
  for (auto [i, j] : RootDatum::positive_roots(k, /*descending=*/true)) {
    SparseMat<S> e = word_rep_image(ctx, n, wordgen::e_root(i, j));
    SparseMat<S> f = word_rep_image(ctx, n, wordgen::f_root(i, j));
    r = r * qexp_nilpotent(ctx, omega, kron(e, f), base);
  }
  return r;
}

/// F1, the separating diagonal twist: q^{(H_{N+1} wedge Z_{N+1})/2} with
/// H_{N+1} = sum_{i<=N+1} e_ii and Z_{N+1} = sum_{k>=N+1} e_kk.
inline TwistElement build_f1(int N) {
  int n = 2 * N + 1;
  std::vector<long long> H(n, 0), Z(n, 0);
  for (int i = 1; i <= N + 1; ++i) H[i - 1] = 1;
  for (int i = N + 1; i <= n; ++i) Z[i - 1] = 1;
  CartanExp ce;
  ce.terms.push_back({0, +1, H, Z});
  ce.terms.push_back({0, -1, Z, H});
  return TwistElement{N, {ce}};
}

/// gl(3) form of F1 written as the explicit wedge sum
/// q^{(e11^e22 + e11^e33 + e22^e33)/2}; equal to build_f1(1).
inline TwistElement build_f1_gl3() {
  int n = 3;
  CartanExp ce;
  auto indicator = [&](int i) {
    std::vector<long long> d(n, 0);
    d[i - 1] = 1;
    return d;
  };
  for (auto [i, k] : {std::pair{1, 2}, std::pair{1, 3}, std::pair{2, 3}}) {
    ce.terms.push_back({0, +1, indicator(i), indicator(k)});
    ce.terms.push_back({0, -1, indicator(k), indicator(i)});
  }
  return TwistElement{1, {ce}};
}

/// F2, the canonical-element twist: the "<"-ordered product over positive
/// roots of sl(N+1) of exp_{q^2}(mu_alpha e_alpha x g_alpha') followed by
/// q^{t0 + H_N x Z_N}, t0 = sum_{i<=N} e_ii x e_i'i'. Root vectors use the
/// F1-dressed generators and composite mu's multiply out.
inline TwistElement build_f2(int N, const VarTable& vars) {
  int n = 2 * N + 1;
  TwistElement el;
  el.N = N;
  for (auto [i, j] : RootDatum::positive_roots(N + 1, /*descending=*/false)) {
    QExpFactor qe;
    qe.base_qexp = 2;
    qe.coeff = Monomial::one();
    for (int l = i; l <= j - 1; ++l)
      qe.coeff = qe.coeff * Monomial::variable(vars.index_of(VarTable::mu_name(l)));
    qe.x = wordgen::e_root_twisted(N, i, j);
    qe.y = wordgen::g_prime(N, i, j);
    el.factors.push_back(qe);
  }
  RootDatum datum(N);
  CartanExp ce;
  for (int i = 1; i <= N; ++i) {
    std::vector<long long> d1(n, 0), d2(n, 0);
    d1[i - 1] = 1;
    d2[datum.prime_index(i) - 1] = 1;
    ce.terms.push_back({0, 2, d1, d2});
  }
  std::vector<long long> Hn(n, 0), Zn(n, 0);
  for (int i = 1; i <= N; ++i) Hn[i - 1] = 1;
  for (int i = N + 2; i <= n; ++i) Zn[i - 1] = 1;
  ce.terms.push_back({0, 2, Hn, Zn});
  el.factors.push_back(ce);
  return el;
}

/// F3, the residual diagonal twist on the invariant Cartan directions
/// {e_ii - e_i'i', C}: multiplicative parameters a_ik and b_i carry the
/// wedge exponents.
inline TwistElement build_f3(int N, const VarTable& vars) {
  int n = 2 * N + 1;
  RootDatum datum(N);
  auto d_vec = [&](int i) {
    std::vector<long long> d(n, 0);
    d[i - 1] = 1;
    d[datum.prime_index(i) - 1] = -1;
    return d;
  };
  std::vector<long long> ones(n, 1);
  CartanExp ce;
  for (int i = 1; i <= N; ++i) {
    for (int k = i + 1; k <= N; ++k) {
      int var = vars.index_of(VarTable::a_name(i, k));
      ce.terms.push_back({var, +1, d_vec(i), d_vec(k)});
      ce.terms.push_back({var, -1, d_vec(k), d_vec(i)});
    }
  }
  for (int i = 1; i <= N; ++i) {
    int var = vars.index_of(VarTable::b_name(i));
    ce.terms.push_back({var, +1, d_vec(i), ones});
    ce.terms.push_back({var, -1, ones, d_vec(i)});
  }
  return TwistElement{N, {ce}};
}

/// The full twisting element F = F3 F2 F1.
inline TwistElement build_full_twist(int N, const VarTable& vars) {
  return build_f3(N, vars).composed_with(build_f2(N, vars)).composed_with(
      build_f1(N));
}

/// Twisted R-matrix F_21 R F^{-1} on V x V.
template <class Ctx>
SparseMat<typename Ctx::Scalar> twist_r(
    const Ctx& ctx, long n, const TwistElement& el,
    const SparseMat<typename Ctx::Scalar>& r) {
  auto f21 = eval_element(ctx, n, el, LegSpec{{2}, {1}, 2});
  auto finv = eval_legs(ctx, n, el.inverse(), 1, 2, 2);
  return f21 * r * finv;
}

/// The esoteric R-matrix for rank parameter N, fully parametric.
template <class Ctx>
SparseMat<typename Ctx::Scalar> r_esoteric(const Ctx& ctx, int N,
                                           const VarTable& vars) {
  long n = 2 * N + 1;
  return twist_r(ctx, n, build_full_twist(N, vars),
                 r_standard_direct(ctx, n));
}

/// F Delta(w) F^{-1} at representation level.
template <class Ctx>
SparseMat<typename Ctx::Scalar> twisted_coproduct(const Ctx& ctx, long n,
                                                  const TwistElement& el,
                                                  const Word& w) {
  auto fm = eval_legs(ctx, n, el, 1, 2, 2);
  auto finv = eval_legs(ctx, n, el.inverse(), 1, 2, 2);
  return fm * word_delta_image(ctx, n, w, 2) * finv;
}

template <class S>
struct LMatrices {
  SparseMat<S> plus_standard, minus_standard, plus_twisted, minus_twisted;
};

/// FRT L-matrices at representation level: L+ is R with the first leg read
/// as the matrix index, L- is sigma(R^{-1}); twisted versions by
/// L_t = F_21 L F_12^{-1}.
template <class Ctx>
LMatrices<typename Ctx::Scalar> l_matrices(
    const Ctx& ctx, long n, const SparseMat<typename Ctx::Scalar>& r_std,
    const TwistElement& el) {
  LMatrices<typename Ctx::Scalar> out;
  out.plus_standard = r_std;
  out.minus_standard = flip_conjugate(inverse_gauss(ctx, r_std), n);
  auto f21 = eval_element(ctx, n, el, LegSpec{{2}, {1}, 2});
  auto finv = eval_legs(ctx, n, el.inverse(), 1, 2, 2);
  out.plus_twisted = f21 * out.plus_standard * finv;
  out.minus_twisted = f21 * out.minus_standard * finv;
  return out;
}

/// The explicit 9x9 Cremmer-Gervais matrix over variables q (= s^2), p, nu,
/// as the standard matrix plus the listed corrections.
template <class Ctx>
SparseMat<typename Ctx::Scalar> cg3_reference(const Ctx& ctx, int p_var,
                                              int nu_var) {
  using S = typename Ctx::Scalar;
  long n = 3;
  SparseMat<S> r = r_standard_direct(ctx, n);
  S one = ctx.one();
  S q = ctx.s_pow(2);
  S p = ctx.var_pow(p_var, 1);
  S pinv = ctx.var_pow(p_var, -1);
  S nu = ctx.var_pow(nu_var, 1);
  auto diag_add = [&](int i, int j, const S& delta) {
    long d = tensor_index({i, j}, n);
    r.add_to(d, d, delta);
  };
  diag_add(1, 2, p - one);
  diag_add(2, 3, p - one);
  diag_add(2, 1, pinv - one);
  diag_add(3, 2, pinv - one);
  diag_add(1, 3, p * p * ctx.s_pow(-2) - one);
  diag_add(3, 1, q * pinv * pinv - one);
  // q nu e_32 x e_12 - nu p^2/q e_12 x e_32.
  r.add_to(tensor_index({3, 1}, n), tensor_index({2, 2}, n), q * nu);
  auto m = ctx.zero() - nu * p * p * ctx.s_pow(-2);
  r.add_to(tensor_index({1, 3}, n), tensor_index({2, 2}, n), m);
  return r;
}

/// Monomial expressions for the reference parameters in terms of the twist
/// parameters, found by solving the entrywise monomial system between the
/// twisted matrix and the reference.
struct ParamMatch {
  FieldElem p_expr, nu_expr;
};

ParamMatch match_parameters(const VarTable& vars,
                            const SparseMat<FieldElem>& r_twisted,
                            const SparseMat<FieldElem>& reference, int p_var,
                            int nu_var);

}  // namespace qtwist
