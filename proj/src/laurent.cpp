#include "qtwist/laurent.hpp"

#include <algorithm>
#include <sstream>

namespace qtwist {

namespace {

std::string term_to_string(const ExpVec& e, const BigRat& coeff_abs,
                           const VarTable& vars) {
  std::ostringstream mono;
  bool any = false;
  for (int v = 0; v < static_cast<int>(e.size()); ++v) {
    if (e[v] == 0) continue;
    if (any) mono << "*";
    mono << vars.name(v);
    if (e[v] != 1) mono << "^" << e[v];
    any = true;
  }
  if (!any) return rat_to_string(coeff_abs);
  if (coeff_abs == 1) return mono.str();
  return rat_to_string(coeff_abs) + "*" + mono.str();
}

}  // namespace

std::string LaurentPoly::to_string(const VarTable& vars) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  // Leading (largest) term first.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const BigRat& c = it->second;
    bool neg = c < 0;
    if (first) {
      if (neg) out << "-";
      first = false;
    } else {
      out << (neg ? "-" : "+");
    }
    out << term_to_string(it->first, neg ? BigRat(-c) : c, vars);
  }
  return out.str();
}

LaurentPoly divide_exact(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw Error("exact division by zero polynomial");
  int nv = a.nvars();
  LaurentPoly rem = a;
  LaurentPoly quot(nv);
  auto [eb, cb] = b.leading_term();
  while (!rem.is_zero()) {
    auto [er, cr] = rem.leading_term();
    ExpVec eq(nv);
    for (int v = 0; v < nv; ++v) {
      eq[v] = er[v] - eb[v];
      if (eq[v] < 0) throw Error("inexact polynomial division");
    }
    BigRat cq = cr / cb;
    LaurentPoly t = LaurentPoly::monomial(nv, eq, cq);
    quot = quot + t;
    rem = rem - t * b;
    if (!rem.is_zero() && rem.leading_term().first >= er)
      throw Error("inexact polynomial division");
  }
  return quot;
}

namespace {

// Divisibility probe used to keep gcd fast on the common cases.
bool try_divide(const LaurentPoly& a, const LaurentPoly& b, LaurentPoly* q) {
  try {
    LaurentPoly r = divide_exact(a, b);
    if (q) *q = r;
    return true;
  } catch (const Error&) {
    return false;
  }
}

LaurentPoly monic(const LaurentPoly& p) {
  if (p.is_zero()) return p;
  BigRat lc = p.leading_term().second;
  return p * (BigRat(1) / lc);
}

// GCD of the coefficients of p viewed as a polynomial in `var`.
LaurentPoly content_in(const LaurentPoly& p, int var) {
  LaurentPoly g(p.nvars());
  int d = p.degree_in(var);
  for (int k = 0; k <= d; ++k) {
    LaurentPoly c = p.coeff_of(var, k);
    if (c.is_zero()) continue;
    g = poly_gcd(g, c);
    if (g.is_one()) break;
  }
  return g;
}

// One pseudo-division step sequence: returns the pseudo-remainder of a by b
// with respect to `var` (deg_var a >= deg_var b >= 0, b nonzero in var).
LaurentPoly pseudo_rem(LaurentPoly a, const LaurentPoly& b, int var) {
  int db = b.degree_in(var);
  LaurentPoly lb = b.coeff_of(var, db);
  while (!a.is_zero() && a.degree_in(var) >= db) {
    int da = a.degree_in(var);
    LaurentPoly la = a.coeff_of(var, da);
    ExpVec shift(a.nvars(), 0);
    shift[var] = da - db;
    a = a * lb - (la * b).shifted(shift);
  }
  return a;
}

}  // namespace

LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b) {
  int nv = a.nvars();
  if (a.is_zero()) return monic(b);
  if (b.is_zero()) return monic(a);

  // Peel off the common monomial part first.
  ExpVec ma = a.min_exponents(), mb = b.min_exponents();
  ExpVec mg(nv);
  bool shifted_any = false;
  for (int v = 0; v < nv; ++v) {
    mg[v] = std::min(ma[v], mb[v]);
    if (ma[v] != 0 || mb[v] != 0) shifted_any = true;
  }
  if (shifted_any) {
    ExpVec nma(nv), nmb(nv);
    for (int v = 0; v < nv; ++v) {
      nma[v] = -ma[v];
      nmb[v] = -mb[v];
    }
    LaurentPoly core = poly_gcd(a.shifted(nma), b.shifted(nmb));
    return monic(core.shifted(mg));
  }

  if (a.is_constant() || b.is_constant())
    return LaurentPoly::constant(nv, BigRat(1));
  if (a.is_monomial() || b.is_monomial())
    return LaurentPoly::constant(nv, BigRat(1));  // monomial content was 1

  // Cheap exits cover most calls from matrix arithmetic.
  if (try_divide(a, b, nullptr)) return monic(b);
  if (try_divide(b, a, nullptr)) return monic(a);

  // Primitive PRS in the lowest variable occurring in either operand.
  std::vector<bool> used(nv, false);
  a.collect_vars(used);
  b.collect_vars(used);
  int var = 0;
  while (var < nv && !used[var]) ++var;
  if (var == nv) return LaurentPoly::constant(nv, BigRat(1));

  LaurentPoly ca = content_in(a, var);
  LaurentPoly cb = content_in(b, var);
  LaurentPoly gc = poly_gcd(ca, cb);
  LaurentPoly pa = divide_exact(a, ca);
  LaurentPoly pb = divide_exact(b, cb);
  if (pa.degree_in(var) < pb.degree_in(var)) std::swap(pa, pb);

  while (true) {
    if (pb.degree_in(var) <= 0) {
      // pb is free of var; it is primitive there, so the PRS ends in 1.
      if (!pb.is_zero()) return monic(gc);
      return monic(gc * pa);
    }
    LaurentPoly r = pseudo_rem(pa, pb, var);
    if (r.is_zero()) return monic(gc * divide_exact(pb, content_in(pb, var)));
    pa = pb;
    pb = divide_exact(r, content_in(r, var));
  }
}

}  // namespace qtwist
