#include "qtwist/rmatrix.hpp"

namespace qtwist {

namespace {

long exponent_of(const FieldElem& x, int var) {
  // x must be a monomial; exponent of var in numerator minus denominator.
  long e = 0;
  e += x.num().terms().begin()->first.at(var);
  e -= x.den().terms().begin()->first.at(var);
  return e;
}

FieldElem strip_vars(const FieldElem& x, int nvars, int v1, long e1, int v2,
                     long e2) {
  FieldElem r = x;
  if (e1 != 0) r = r * FieldElem::var_pow(nvars, v1, -e1);
  if (e2 != 0) r = r * FieldElem::var_pow(nvars, v2, -e2);
  return r;
}

struct Equation {
  long a, b;  // exponents of p and nu on the reference side
  FieldElem rhs;
  long row, col;
};

}  // namespace

ParamMatch match_parameters(const VarTable& vars,
                            const SparseMat<FieldElem>& r_twisted,
                            const SparseMat<FieldElem>& reference, int p_var,
                            int nu_var) {
  int nv = vars.size();
  FieldElem zero = FieldElem::zero(nv);

  std::vector<Equation> eqs;
  std::map<std::pair<long, long>, bool> seen;
  for (const auto& [rc, v] : reference.entries()) seen[rc] = true;
  for (const auto& [rc, v] : r_twisted.entries()) seen[rc] = true;

  for (const auto& [rc, dummy] : seen) {
    (void)dummy;
    FieldElem ref = reference.get(rc.first, rc.second, zero);
    FieldElem tw = r_twisted.get(rc.first, rc.second, zero);
    if (ref.is_zero() != tw.is_zero())
      throw Error("parameter match: zero pattern differs at (" +
                  std::to_string(rc.first) + "," + std::to_string(rc.second) +
                  ")");
    if (ref.is_zero()) continue;
    if (!ref.is_monomial()) {
      // Parameter-free entries (the omega slots) must agree as they stand.
      std::vector<bool> used(nv, false);
      ref.collect_vars(used);
      if (used[p_var] || used[nu_var] || ref != tw)
        throw Error("parameter match: non-monomial conflict at (" +
                    std::to_string(rc.first) + "," +
                    std::to_string(rc.second) + ")");
      continue;
    }
    long a = exponent_of(ref, p_var);
    long b = exponent_of(ref, nu_var);
    if (a == 0 && b == 0) {
      if (ref != tw)
        throw Error("parameter match: constant entry conflict at (" +
                    std::to_string(rc.first) + "," +
                    std::to_string(rc.second) + ")");
      continue;
    }
    if (!tw.is_monomial())
      throw Error("parameter match: twisted entry not monomial at (" +
                  std::to_string(rc.first) + "," + std::to_string(rc.second) +
                  ")");
    FieldElem base = strip_vars(ref, nv, p_var, a, nu_var, b);
    eqs.push_back({a, b, tw / base, rc.first, rc.second});
  }
  if (eqs.empty()) throw Error("parameter match: no parametric entries");

  auto find_unit = [&](bool want_p) -> std::optional<FieldElem> {
    for (const auto& e : eqs) {
      long main = want_p ? e.a : e.b;
      long other = want_p ? e.b : e.a;
      if (other == 0 && (main == 1 || main == -1))
        return e.rhs.pow(main);
    }
    return std::nullopt;
  };

  std::optional<FieldElem> p_expr = find_unit(true);
  std::optional<FieldElem> nu_expr = find_unit(false);
  if (p_expr && !nu_expr) {
    for (const auto& e : eqs) {
      if (e.b == 1 || e.b == -1) {
        FieldElem rest = e.rhs / p_expr->pow(e.a);
        nu_expr = rest.pow(e.b);
        break;
      }
    }
  }
  if (nu_expr && !p_expr) {
    for (const auto& e : eqs) {
      if (e.a == 1 || e.a == -1) {
        FieldElem rest = e.rhs / nu_expr->pow(e.b);
        p_expr = rest.pow(e.a);
        break;
      }
    }
  }
  if (!p_expr || !nu_expr)
    throw Error("parameter match: system not solvable by unit-exponent "
                "elimination");

  for (const auto& e : eqs) {
    FieldElem lhs = p_expr->pow(e.a) * nu_expr->pow(e.b);
    if (lhs != e.rhs)
      throw Error("parameter match: inconsistent system, first conflict at (" +
                  std::to_string(e.row) + "," + std::to_string(e.col) + ")");
  }
  return ParamMatch{*p_expr, *nu_expr};
}

}  // namespace qtwist
