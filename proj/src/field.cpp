#include "qtwist/field.hpp"

#include <algorithm>

namespace qtwist {

void FieldElem::canonicalize() {
  int nv = num_.nvars();
  if (den_.is_zero()) throw Error("division by zero");
  if (num_.is_zero()) {
    den_ = LaurentPoly::constant(nv, BigRat(1));
    return;
  }
  // Clear negative exponents: shift both parts by the joint minimum.
  ExpVec mn = num_.min_exponents(), md = den_.min_exponents();
  ExpVec shift(nv, 0);
  bool need = false;
  for (int v = 0; v < nv; ++v) {
    int m = std::min(mn[v], md[v]);
    if (m < 0) {
      shift[v] = -m;
      need = true;
    }
  }
  if (need) {
    num_ = num_.shifted(shift);
    den_ = den_.shifted(shift);
  }
  if (!den_.is_one() && !den_.is_constant()) {
    LaurentPoly g = poly_gcd(num_, den_);
    if (!g.is_one()) {
      num_ = divide_exact(num_, g);
      den_ = divide_exact(den_, g);
    }
  } else if (!den_.is_one()) {
    // Monomial or constant denominator: cancel exponents directly.
    ExpVec ed = den_.min_exponents();
    ExpVec en = num_.min_exponents();
    ExpVec cancel(nv, 0);
    bool any = false;
    for (int v = 0; v < nv; ++v) {
      cancel[v] = -std::min(ed[v], en[v]);
      if (cancel[v] != 0) any = true;
    }
    if (any) {
      num_ = num_.shifted(cancel);
      den_ = den_.shifted(cancel);
    }
  }
  // Monic denominator.
  BigRat lc = den_.leading_term().second;
  if (lc != 1) {
    BigRat inv_lc = BigRat(1) / lc;
    num_ = num_ * inv_lc;
    den_ = den_ * inv_lc;
  }
}

FieldElem FieldElem::operator+(const FieldElem& o) const {
  FieldElem r(nvars());
  if (den_ == o.den_) {
    r.num_ = num_ + o.num_;
    r.den_ = den_;
  } else {
    r.num_ = num_ * o.den_ + o.num_ * den_;
    r.den_ = den_ * o.den_;
  }
  r.canonicalize();
  return r;
}

FieldElem FieldElem::operator-(const FieldElem& o) const {
  FieldElem r(nvars());
  if (den_ == o.den_) {
    r.num_ = num_ - o.num_;
    r.den_ = den_;
  } else {
    r.num_ = num_ * o.den_ - o.num_ * den_;
    r.den_ = den_ * o.den_;
  }
  r.canonicalize();
  return r;
}

FieldElem FieldElem::operator*(const FieldElem& o) const {
  FieldElem r(nvars());
  r.num_ = num_ * o.num_;
  if (den_.is_one()) {
    r.den_ = o.den_;
  } else if (o.den_.is_one()) {
    r.den_ = den_;
  } else {
    r.den_ = den_ * o.den_;
  }
  r.canonicalize();
  return r;
}

FieldElem FieldElem::operator/(const FieldElem& o) const {
  if (o.is_zero()) throw Error("division by zero");
  FieldElem r(nvars());
  r.num_ = num_ * o.den_;
  r.den_ = den_ * o.num_;
  r.canonicalize();
  return r;
}

FieldElem FieldElem::operator-() const {
  FieldElem r = *this;
  r.num_ = -r.num_;
  return r;
}

FieldElem FieldElem::inverse() const {
  if (is_zero()) throw Error("inverse of zero");
  FieldElem r(nvars());
  r.num_ = den_;
  r.den_ = num_;
  r.canonicalize();
  return r;
}

FieldElem FieldElem::pow(long k) const {
  if (k == 0) return one(nvars());
  FieldElem base = k < 0 ? inverse() : *this;
  unsigned long e = static_cast<unsigned long>(k < 0 ? -k : k);
  FieldElem r = one(nvars());
  while (e) {
    if (e & 1ul) r = r * base;
    base = base * base;
    e >>= 1ul;
  }
  return r;
}

BigRat FieldElem::substitute(const std::vector<BigRat>& values,
                             const VarTable& vars) const {
  BigRat d = den_.eval(values, vars);
  if (d.is_zero()) {
    std::string where;
    std::vector<bool> used(nvars(), false);
    den_.collect_vars(used);
    for (int v = 0; v < nvars(); ++v)
      if (used[v])
        where += (where.empty() ? "" : ", ") + vars.name(v) + "=" +
                 rat_to_string(values[v]);
    throw Error("denominator vanishes at assignment {" + where + "}");
  }
  return num_.eval(values, vars) / d;
}

FieldElem FieldElem::substitute_vars(
    const std::map<int, FieldElem>& repl) const {
  int nv = nvars();
  auto eval_part = [&](const LaurentPoly& p) {
    FieldElem acc = FieldElem::zero(nv);
    for (const auto& [e, c] : p.terms()) {
      FieldElem t = FieldElem::from_rational(nv, c);
      for (int v = 0; v < nv; ++v) {
        if (e[v] == 0) continue;
        auto it = repl.find(v);
        if (it == repl.end()) {
          t = t * FieldElem::var_pow(nv, v, e[v]);
        } else {
          t = t * it->second.pow(e[v]);
        }
      }
      acc = acc + t;
    }
    return acc;
  };
  return eval_part(num_) / eval_part(den_);
}

FieldElem q_int(int n, const FieldElem& base) {
  if (n < 0) throw Error("q_int requires n >= 0");
  if (base.is_one()) throw Error("degenerate q-number: base = 1");
  int nv = base.nvars();
  if (n == 0) return FieldElem::zero(nv);
  FieldElem one = FieldElem::one(nv);
  return (base.pow(n) - one) / (base - one);
}

FieldElem q_factorial(int n, const FieldElem& base) {
  if (n < 0) throw Error("q_factorial requires n >= 0");
  FieldElem r = FieldElem::one(base.nvars());
  for (int k = 1; k <= n; ++k) r = r * q_int(k, base);
  return r;
}

}  // namespace qtwist
