#pragma once

#include "qtwist/scalars.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace qtwist {

/// Sparse square matrix over an exact scalar ring. Indices are 1-based and
/// no explicit zeros are stored. On tensor powers V^{otimes k} with
/// dim V = n, the basis vector v_{i1} x ... x v_{ik} has index
/// 1 + sum_j (i_j - 1) n^{k-j} (row-major).
template <class S>
class SparseMat {
 public:
  SparseMat() : dim_(0) {}
  explicit SparseMat(long dim) : dim_(dim) {}

  static SparseMat identity(long dim, const S& one) {
    SparseMat m(dim);
    for (long i = 1; i <= dim; ++i) m.entries_[{i, i}] = one;
    return m;
  }
  static SparseMat unit(long dim, long r, long c, const S& value) {
    SparseMat m(dim);
    m.set(r, c, value);
    return m;
  }

  long dim() const { return dim_; }
  size_t nnz() const { return entries_.size(); }
  bool is_zero() const { return entries_.empty(); }
  const std::map<std::pair<long, long>, S>& entries() const {
    return entries_;
  }

  void set(long r, long c, const S& value) {
    check_index(r, c);
    if (scalar_is_zero(value)) {
      entries_.erase({r, c});
    } else {
      entries_[{r, c}] = value;
    }
  }
  void add_to(long r, long c, const S& value) {
    check_index(r, c);
    auto it = entries_.find({r, c});
    if (it == entries_.end()) {
      if (!scalar_is_zero(value)) entries_[{r, c}] = value;
    } else {
      it->second = it->second + value;
      if (scalar_is_zero(it->second)) entries_.erase(it);
    }
  }
  S get(long r, long c, const S& zero) const {
    auto it = entries_.find({r, c});
    return it == entries_.end() ? zero : it->second;
  }
  bool has(long r, long c) const { return entries_.count({r, c}) > 0; }

  SparseMat operator+(const SparseMat& o) const {
    check_dim(o);
    SparseMat r = *this;
    for (const auto& [rc, v] : o.entries_) r.add_to(rc.first, rc.second, v);
    return r;
  }
  SparseMat operator-(const SparseMat& o) const {
    check_dim(o);
    SparseMat r = *this;
    for (const auto& [rc, v] : o.entries_) r.add_to(rc.first, rc.second, -v);
    return r;
  }
  SparseMat operator*(const SparseMat& o) const {
    check_dim(o);
    SparseMat r(dim_);
    for (const auto& [rc, va] : entries_) {
      auto [i, k] = rc;
      // Row k of o.
      auto it = o.entries_.lower_bound({k, 1});
      auto end = o.entries_.upper_bound({k, dim_});
      for (; it != end; ++it) {
        r.add_to(i, it->first.second, va * it->second);
      }
    }
    return r;
  }
  SparseMat scaled(const S& c) const {
    SparseMat r(dim_);
    if (scalar_is_zero(c)) return r;
    for (const auto& [rc, v] : entries_) {
      S nv = v * c;
      if (!scalar_is_zero(nv)) r.entries_[rc] = nv;
    }
    return r;
  }

  bool operator==(const SparseMat& o) const {
    return dim_ == o.dim_ && entries_ == o.entries_;
  }
  bool operator!=(const SparseMat& o) const { return !(*this == o); }

  /// First entry where the two matrices differ, as (row, col); nullopt when
  /// equal. Scans positions in (row, col) order.
  std::optional<std::pair<long, long>> first_difference(
      const SparseMat& o) const {
    if (dim_ != o.dim_) return std::make_pair(0L, 0L);
    auto a = entries_.begin();
    auto b = o.entries_.begin();
    while (a != entries_.end() || b != o.entries_.end()) {
      if (a == entries_.end()) return b->first;
      if (b == o.entries_.end()) return a->first;
      if (a->first < b->first) return a->first;
      if (b->first < a->first) return b->first;
      if (!(a->second == b->second)) return a->first;
      ++a;
      ++b;
    }
    return std::nullopt;
  }

 private:
  static bool scalar_is_zero(const S& v) { return v.is_zero(); }
  void check_index(long r, long c) const {
    if (r < 1 || r > dim_ || c < 1 || c > dim_)
      throw Error("matrix index out of range");
  }
  void check_dim(const SparseMat& o) const {
    if (dim_ != o.dim_) throw Error("dimension mismatch");
  }

  long dim_;
  std::map<std::pair<long, long>, S> entries_;
};

/// Kronecker product under the row-major tensor basis convention.
template <class S>
SparseMat<S> kron(const SparseMat<S>& a, const SparseMat<S>& b) {
  SparseMat<S> r(a.dim() * b.dim());
  for (const auto& [rca, va] : a.entries()) {
    for (const auto& [rcb, vb] : b.entries()) {
      long row = (rca.first - 1) * b.dim() + rcb.first;
      long col = (rca.second - 1) * b.dim() + rcb.second;
      r.set(row, col, va * vb);
    }
  }
  return r;
}

/// Decode a 1-based index on V^{otimes k} into k leg indices (1-based).
inline std::vector<long> tensor_digits(long index, int k, long n) {
  std::vector<long> d(k);
  long x = index - 1;
  for (int j = k - 1; j >= 0; --j) {
    d[j] = x % n + 1;
    x /= n;
  }
  return d;
}

inline long tensor_index(const std::vector<long>& digits, long n) {
  long x = 0;
  for (long d : digits) x = x * n + (d - 1);
  return x + 1;
}

inline long int_pow(long b, int e) {
  long r = 1;
  while (e-- > 0) r *= b;
  return r;
}

/// Embed an operator given on the listed legs (in that order) into
/// V^{otimes total}, acting as the identity elsewhere. legs are distinct,
/// 1-based, and may appear in any order, so this also realizes flips.
template <class S>
SparseMat<S> embed_legs(const SparseMat<S>& m, const std::vector<int>& legs,
                        int total, long n) {
  int k = static_cast<int>(legs.size());
  if (m.dim() != int_pow(n, k)) throw Error("operator dim does not match legs");
  for (int l : legs)
    if (l < 1 || l > total) throw Error("leg index out of range");
  long dim = int_pow(n, total);
  std::vector<bool> is_free(total + 1, true);
  for (int l : legs) {
    if (!is_free[l]) throw Error("repeated leg index");
    is_free[l] = false;
  }
  std::vector<int> free;
  for (int l = 1; l <= total; ++l)
    if (is_free[l]) free.push_back(l);

  SparseMat<S> r(dim);
  long free_count = int_pow(n, static_cast<int>(free.size()));
  for (const auto& [rc, v] : m.entries()) {
    auto rd = tensor_digits(rc.first, k, n);
    auto cd = tensor_digits(rc.second, k, n);
    for (long fidx = 0; fidx < free_count; ++fidx) {
      std::vector<long> row(total), col(total);
      for (int j = 0; j < k; ++j) {
        row[legs[j] - 1] = rd[j];
        col[legs[j] - 1] = cd[j];
      }
      long x = fidx;
      for (int j = static_cast<int>(free.size()) - 1; j >= 0; --j) {
        long digit = x % n + 1;
        x /= n;
        row[free[j] - 1] = digit;
        col[free[j] - 1] = digit;
      }
      r.set(tensor_index(row, n), tensor_index(col, n), v);
    }
  }
  return r;
}

/// M acting on legs (i, j) of V^{otimes k}; i < j is not required.
template <class S>
SparseMat<S> leg_embed(const SparseMat<S>& m, int i, int j, int k, long n) {
  return embed_legs(m, {i, j}, k, n);
}

/// Conjugation by the flip P(v_i x v_j) = v_j x v_i: returns P M P.
template <class S>
SparseMat<S> flip_conjugate(const SparseMat<S>& m, long n) {
  if (m.dim() != n * n) throw Error("flip_conjugate requires an operator on V x V");
  SparseMat<S> r(m.dim());
  for (const auto& [rc, v] : m.entries()) {
    auto rd = tensor_digits(rc.first, 2, n);
    auto cd = tensor_digits(rc.second, 2, n);
    r.set(tensor_index({rd[1], rd[0]}, n), tensor_index({cd[1], cd[0]}, n), v);
  }
  return r;
}

/// Exact inverse by Gauss-Jordan elimination over the scalar field.
/// Throws on singular input.
template <class Ctx>
SparseMat<typename Ctx::Scalar> inverse_gauss(
    const Ctx& ctx, const SparseMat<typename Ctx::Scalar>& m) {
  using S = typename Ctx::Scalar;
  long dim = m.dim();
  std::vector<std::vector<S>> a(dim, std::vector<S>(2 * dim, ctx.zero()));
  for (const auto& [rc, v] : m.entries()) a[rc.first - 1][rc.second - 1] = v;
  for (long i = 0; i < dim; ++i) a[i][dim + i] = ctx.one();

  for (long col = 0; col < dim; ++col) {
    long pivot = -1;
    for (long r = col; r < dim; ++r) {
      if (!Ctx::is_zero(a[r][col])) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) throw Error("singular matrix");
    std::swap(a[col], a[pivot]);
    S inv_p = scalar_div(ctx, ctx.one(), a[col][col]);
    for (long c = col; c < 2 * dim; ++c) a[col][c] = a[col][c] * inv_p;
    for (long r = 0; r < dim; ++r) {
      if (r == col || Ctx::is_zero(a[r][col])) continue;
      S f = a[r][col];
      for (long c = col; c < 2 * dim; ++c)
        a[r][c] = a[r][c] - f * a[col][c];
    }
  }
  SparseMat<S> inv(dim);
  for (long r = 0; r < dim; ++r)
    for (long c = 0; c < dim; ++c)
      if (!Ctx::is_zero(a[r][dim + c])) inv.set(r + 1, c + 1, a[r][dim + c]);
  return inv;
}

/// Truncated q-exponential exp_base(c M) = sum_k (cM)^k / [k; base]! of a
/// nilpotent argument. Powers are computed until they vanish exactly; if
/// (cM)^{dim+1} is still nonzero the argument was not nilpotent.
template <class Ctx>
SparseMat<typename Ctx::Scalar> qexp_nilpotent(
    const Ctx& ctx, const typename Ctx::Scalar& coeff,
    const SparseMat<typename Ctx::Scalar>& m,
    const typename Ctx::Scalar& base) {
  using S = typename Ctx::Scalar;
  long dim = m.dim();
  SparseMat<S> arg = m.scaled(coeff);
  SparseMat<S> sum = SparseMat<S>::identity(dim, ctx.one());
  SparseMat<S> power = arg;
  S factorial = ctx.one();
  for (long k = 1; !power.is_zero(); ++k) {
    if (k > dim + 1) throw Error("argument not nilpotent");
    factorial = factorial * q_int_scalar(ctx, static_cast<int>(k), base);
    sum = sum + power.scaled(scalar_div(ctx, ctx.one(), factorial));
    power = power * arg;
  }
  return sum;
}

}  // namespace qtwist
