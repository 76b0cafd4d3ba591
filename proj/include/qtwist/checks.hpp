#pragma once

#include "qtwist/rmatrix.hpp"

#include <chrono>
#include <optional>
#include <string>
#include <vector>

namespace qtwist {

struct Witness {
  long row = 0, col = 0;
  std::string lhs, rhs;
};

/// Result of one identity check. pass == true iff witness is absent.
struct CheckReport {
  std::string check;
  int N = 1;
  std::string mode;
  bool pass = false;
  std::optional<Witness> witness;
  long long millis = 0;
  std::string note;  // free-form extras (derived substitutions etc.)
};

namespace detail {

template <class Ctx>
CheckReport compare(const Ctx& ctx, const std::string& name, int N,
                    const std::string& mode,
                    const SparseMat<typename Ctx::Scalar>& lhs,
                    const SparseMat<typename Ctx::Scalar>& rhs) {
  CheckReport rep;
  rep.check = name;
  rep.N = N;
  rep.mode = mode;
  auto diff = lhs.first_difference(rhs);
  rep.pass = !diff.has_value();
  if (diff) {
    Witness w;
    w.row = diff->first;
    w.col = diff->second;
    w.lhs = ctx.display(lhs.get(w.row, w.col, ctx.zero()));
    w.rhs = ctx.display(rhs.get(w.row, w.col, ctx.zero()));
    rep.witness = w;
  }
  return rep;
}

/// Merge sub-identity reports: first failure wins, names keep the parent's.
inline CheckReport merge(const std::string& name,
                         const std::vector<CheckReport>& parts) {
  CheckReport rep = parts.at(0);
  rep.check = name;
  for (const auto& p : parts) {
    if (!p.pass) {
      rep = p;
      rep.check = name;
      break;
    }
  }
  return rep;
}

}  // namespace detail

/// R12 R13 R23 = R23 R13 R12 on V^{otimes 3}.
template <class Ctx>
CheckReport check_ybe(const Ctx& ctx, long n, int N, const std::string& mode,
                      const std::string& name,
                      const SparseMat<typename Ctx::Scalar>& r) {
  auto r12 = leg_embed(r, 1, 2, 3, n);
  auto r13 = leg_embed(r, 1, 3, 3, n);
  auto r23 = leg_embed(r, 2, 3, 3, n);
  return detail::compare(ctx, name, N, mode, r12 * r13 * r23,
                         r23 * r13 * r12);
}

/// Flip operator P on V x V.
template <class Ctx>
SparseMat<typename Ctx::Scalar> flip_operator(const Ctx& ctx, long n) {
  SparseMat<typename Ctx::Scalar> p(n * n);
  for (long i = 1; i <= n; ++i)
    for (long j = 1; j <= n; ++j)
      p.set(tensor_index({i, j}, n), tensor_index({j, i}, n), ctx.one());
  return p;
}

/// Hecke condition (PR - q)(PR + q^{-1}) = 0.
template <class Ctx>
CheckReport check_hecke(const Ctx& ctx, long n, int N,
                        const std::string& mode, const std::string& name,
                        const SparseMat<typename Ctx::Scalar>& r) {
  using S = typename Ctx::Scalar;
  auto pr = flip_operator(ctx, n) * r;
  auto id = SparseMat<S>::identity(n * n, ctx.one());
  auto lhs = (pr - id.scaled(ctx.s_pow(2))) * (pr + id.scaled(ctx.s_pow(-2)));
  return detail::compare(ctx, name, N, mode, lhs, SparseMat<S>(n * n));
}

/// Cocycle identity F12 (Delta x id)(F) = F23 (id x Delta)(F) on V^{x3},
/// with the coproduct pushed through every factor.
template <class Ctx>
CheckReport check_cocycle(const Ctx& ctx, long n, int N,
                          const std::string& mode, const std::string& name,
                          const TwistElement& el) {
  auto f12 = eval_element(ctx, n, el, LegSpec{{1}, {2}, 3});
  auto push_l = eval_element(ctx, n, el, LegSpec{{1, 2}, {3}, 3});
  auto f23 = eval_element(ctx, n, el, LegSpec{{2}, {3}, 3});
  auto push_r = eval_element(ctx, n, el, LegSpec{{1}, {2, 3}, 3});
  return detail::compare(ctx, name, N, mode, f12 * push_l, f23 * push_r);
}

/// Factorization properties of the canonical element:
/// (Delta_t x id)(F2) = F2_23 F2_13 and (id x Delta_t)(F2) = F2_12 F2_13,
/// where Delta_t is the F1-twisted coproduct.
template <class Ctx>
CheckReport check_factorization(const Ctx& ctx, long n, int N,
                                const std::string& mode,
                                const TwistElement& f2,
                                const TwistElement& f1) {
  auto f1_mat = eval_legs(ctx, n, f1, 1, 2, 2);
  auto f1_inv = eval_legs(ctx, n, f1.inverse(), 1, 2, 2);

  auto conj_on = [&](const std::vector<int>& legs,
                     const SparseMat<typename Ctx::Scalar>& m) {
    auto e = embed_legs(f1_mat, legs, 3, n);
    auto einv = embed_legs(f1_inv, legs, 3, n);
    return e * m * einv;
  };

  auto lhs1 = conj_on({1, 2}, eval_element(ctx, n, f2, LegSpec{{1, 2}, {3}, 3}));
  auto rhs1 = eval_element(ctx, n, f2, LegSpec{{2}, {3}, 3}) *
              eval_element(ctx, n, f2, LegSpec{{1}, {3}, 3});
  auto rep1 = detail::compare(ctx, "factorization", N, mode, lhs1, rhs1);

  auto lhs2 = conj_on({2, 3}, eval_element(ctx, n, f2, LegSpec{{1}, {2, 3}, 3}));
  auto rhs2 = eval_element(ctx, n, f2, LegSpec{{1}, {2}, 3}) *
              eval_element(ctx, n, f2, LegSpec{{1}, {3}, 3});
  auto rep2 = detail::compare(ctx, "factorization", N, mode, lhs2, rhs2);

  return detail::merge("factorization", {rep1, rep2});
}

/// R Delta(x) = Delta^op(x) R for every Chevalley generator and Cartan
/// group-like; with a twist supplied, Delta is replaced by the twisted
/// coproduct throughout.
template <class Ctx>
CheckReport check_intertwiner(const Ctx& ctx, long n, int N,
                              const std::string& mode,
                              const std::string& name,
                              const SparseMat<typename Ctx::Scalar>& r,
                              const TwistElement* twist) {
  using S = typename Ctx::Scalar;
  std::optional<SparseMat<S>> fm, finv;
  if (twist) {
    fm = eval_legs(ctx, n, *twist, 1, 2, 2);
    finv = eval_legs(ctx, n, twist->inverse(), 1, 2, 2);
  }
  std::vector<Word> gens;
  int rank = static_cast<int>(n) - 1;
  for (int i = 1; i <= rank; ++i) {
    gens.push_back(wordgen::chevalley_e(i));
    gens.push_back(wordgen::chevalley_f(i));
    gens.push_back(wordgen::q_h(static_cast<int>(n), i, BigRat(1)));
  }
  std::vector<CheckReport> parts;
  for (const Word& w : gens) {
    SparseMat<S> d = word_delta_image(ctx, n, w, 2);
    if (twist) d = *fm * d * *finv;
    SparseMat<S> d_op = flip_conjugate(d, n);
    parts.push_back(detail::compare(ctx, name, N, mode, r * d, d_op * r));
  }
  return detail::merge(name, parts);
}

/// L-matrix block identities and RLL relations for both families, standard
/// and twisted: L_t^{pm} = F21 L^{pm} F12^{-1} (checked against the direct
/// construction from the twisted R-matrix) and R12 L13 L23 = L23 L13 R12.
template <class Ctx>
CheckReport check_rll(const Ctx& ctx, long n, int N, const std::string& mode,
                      const SparseMat<typename Ctx::Scalar>& r_std,
                      const SparseMat<typename Ctx::Scalar>& r_tw,
                      const TwistElement& el) {
  auto ls = l_matrices(ctx, n, r_std, el);
  std::vector<CheckReport> parts;

  // Conjugation identities: plus family is the twisted R itself, minus
  // family must match sigma(R_t^{-1}).
  parts.push_back(
      detail::compare(ctx, "rll", N, mode, ls.plus_twisted, r_tw));
  parts.push_back(detail::compare(
      ctx, "rll", N, mode, ls.minus_twisted,
      flip_conjugate(inverse_gauss(ctx, r_tw), n)));

  auto rll = [&](const SparseMat<typename Ctx::Scalar>& r,
                 const SparseMat<typename Ctx::Scalar>& l) {
    auto r12 = leg_embed(r, 1, 2, 3, n);
    auto l13 = leg_embed(l, 1, 3, 3, n);
    auto l23 = leg_embed(l, 2, 3, 3, n);
    return detail::compare(ctx, "rll", N, mode, r12 * l13 * l23,
                           l23 * l13 * r12);
  };
  parts.push_back(rll(r_std, ls.plus_standard));
  parts.push_back(rll(r_std, ls.minus_standard));
  parts.push_back(rll(r_tw, ls.plus_twisted));
  parts.push_back(rll(r_tw, ls.minus_twisted));
  return detail::merge("rll", parts);
}

/// Counit normalization of a twist factor: evaluating either slot with the
/// counit must give the identity on the other leg.
template <class Ctx>
bool counit_normalized(const Ctx& ctx, long n, const TwistFactor& f) {
  using S = typename Ctx::Scalar;
  auto id = SparseMat<S>::identity(n, ctx.one());
  auto left = eval_factor(ctx, n, f, LegSpec{{}, {1}, 1});
  auto right = eval_factor(ctx, n, f, LegSpec{{1}, {}, 1});
  return left == id && right == id;
}

/// Census of the variables that actually occur in the symbolic esoteric
/// R-matrix; must equal (N+1)(N+2)/2.
CheckReport check_param_count(int N);

/// The gl(3) coincidence: derive the parameter correspondence and match all
/// 81 entries of the reference matrix exactly. Symbolic, N = 1.
CheckReport check_compare_cg();

/// Numeric-rational assignments: the k-th default tuple of small distinct
/// primes (s first), k = 0, 1, 2, ...
std::vector<BigRat> default_assignment(const VarTable& vars, int tuple);

struct CheckOptions {
  int N = 1;
  enum class Mode { Auto, Symbolic, Numeric } mode = Mode::Auto;
  // Explicit assignment (by variable name); empty means use default tuples.
  std::map<std::string, BigRat> assignment;
  int tuple = 0;  // default-assignment tuple index
};

/// Run one named check ("ybe", "cocycle", "factorization", "hecke",
/// "intertwine", "compare-cg", "param-count", "rll", or "all").
/// Symbolic for N = 1, numeric-rational otherwise, unless forced.
std::vector<CheckReport> run_named_check(const std::string& name,
                                         const CheckOptions& opts);

}  // namespace qtwist
