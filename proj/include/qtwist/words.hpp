#pragma once

#include "qtwist/root_datum.hpp"
#include "qtwist/sparse.hpp"

#include <memory>
#include <vector>

namespace qtwist {

struct Word;

/// One factor of a formal generator word. Besides the plain Chevalley
/// generators and diagonal group-likes q^{sum c_k e_kk}, an atom may be a
/// q-commutator of two sub-words, which is how composite root vectors are
/// represented: value = left*right - q^{qpow} * right*left.
struct Atom {
  enum class Kind { GenE, GenF, DiagQ, QComm };

  Kind kind;
  int index = 0;               // generator index for GenE/GenF
  std::vector<BigRat> qdiag;   // q-exponents per basis index for DiagQ
  std::shared_ptr<Word> left, right;  // sub-words for QComm
  int qpow = 0;                       // +1 or -1 for QComm

  static Atom e(int i) { return Atom{Kind::GenE, i, {}, nullptr, nullptr, 0}; }
  static Atom f(int i) { return Atom{Kind::GenF, i, {}, nullptr, nullptr, 0}; }
  static Atom diag_q(std::vector<BigRat> exps) {
    return Atom{Kind::DiagQ, 0, std::move(exps), nullptr, nullptr, 0};
  }
  static Atom qcomm(Word left, Word right, int qpow);

  bool operator==(const Atom& o) const;
};

/// Formal product of atoms. The empty word is the identity.
struct Word {
  std::vector<Atom> atoms;

  static Word single(Atom a) { return Word{{std::move(a)}}; }
  Word operator*(const Word& o) const {
    Word r = *this;
    r.atoms.insert(r.atoms.end(), o.atoms.begin(), o.atoms.end());
    return r;
  }
  bool operator==(const Word& o) const { return atoms == o.atoms; }
};

inline Atom Atom::qcomm(Word left, Word right, int qpow) {
  Atom a;
  a.kind = Kind::QComm;
  a.left = std::make_shared<Word>(std::move(left));
  a.right = std::make_shared<Word>(std::move(right));
  a.qpow = qpow;
  return a;
}

inline bool Atom::operator==(const Atom& o) const {
  if (kind != o.kind || index != o.index || qdiag != o.qdiag ||
      qpow != o.qpow)
    return false;
  if (kind == Kind::QComm) {
    return *left == *o.left && *right == *o.right;
  }
  return true;
}

/// Images of the elementary generators on the fundamental module.
template <class Ctx>
SparseMat<typename Ctx::Scalar> gen_e_mat(const Ctx& ctx, long n, int i) {
  return SparseMat<typename Ctx::Scalar>::unit(n, i, i + 1, ctx.one());
}
template <class Ctx>
SparseMat<typename Ctx::Scalar> gen_f_mat(const Ctx& ctx, long n, int i) {
  return SparseMat<typename Ctx::Scalar>::unit(n, i + 1, i, ctx.one());
}

/// Diagonal group-like q^{sum c_k e_kk}; entries are s^{2 c_k}, so every
/// 2 c_k must be an integer.
template <class Ctx>
SparseMat<typename Ctx::Scalar> qdiag_mat(const Ctx& ctx,
                                          const std::vector<BigRat>& c) {
  SparseMat<typename Ctx::Scalar> m(static_cast<long>(c.size()));
  for (size_t k = 0; k < c.size(); ++k) {
    BigRat se = 2 * c[k];
    if (denominator(se) != 1)
      throw Error("fractional s-exponent in diagonal group-like");
    m.set(static_cast<long>(k + 1), static_cast<long>(k + 1),
          ctx.s_pow(static_cast<long>(numerator(se))));
  }
  return m;
}

/// Image of the k-fold coproduct of a word on V^{otimes k}. k = 1 is the
/// plain representation image and k = 0 the counit (a 1x1 matrix). The
/// coproduct acts atom-wise since it is an algebra morphism:
///   Delta(e_i) = e_i x q^{h_i} + 1 x e_i,
///   Delta(f_i) = f_i x 1 + q^{-h_i} x f_i,
///   Delta(q^D) = q^D x q^D.
template <class Ctx>
SparseMat<typename Ctx::Scalar> atom_delta_image(const Ctx& ctx, long n,
                                                 const Atom& atom, int k);

template <class Ctx>
SparseMat<typename Ctx::Scalar> word_delta_image(const Ctx& ctx, long n,
                                                 const Word& w, int k) {
  using S = typename Ctx::Scalar;
  long dim = int_pow(n, k);
  SparseMat<S> r = SparseMat<S>::identity(dim, ctx.one());
  for (const Atom& a : w.atoms) r = r * atom_delta_image(ctx, n, a, k);
  return r;
}

template <class Ctx>
SparseMat<typename Ctx::Scalar> word_rep_image(const Ctx& ctx, long n,
                                               const Word& w) {
  return word_delta_image(ctx, n, w, 1);
}

template <class Ctx>
SparseMat<typename Ctx::Scalar> atom_delta_image(const Ctx& ctx, long n,
                                                 const Atom& atom, int k) {
  using S = typename Ctx::Scalar;
  long dim = int_pow(n, k);
  std::vector<BigRat> h(n, BigRat(0));
  switch (atom.kind) {
    case Atom::Kind::GenE: {
      SparseMat<S> sum(dim);
      h[atom.index - 1] = 1;
      h[atom.index] = -1;
      SparseMat<S> qh = qdiag_mat(ctx, h);
      SparseMat<S> e = gen_e_mat(ctx, n, atom.index);
      for (int pos = 1; pos <= k; ++pos) {
        SparseMat<S> term = SparseMat<S>::identity(1, ctx.one());
        for (int leg = 1; leg <= k; ++leg) {
          if (leg < pos)
            term = kron(term, SparseMat<S>::identity(n, ctx.one()));
          else if (leg == pos)
            term = kron(term, e);
          else
            term = kron(term, qh);
        }
        sum = sum + term;
      }
      if (k == 0) return SparseMat<S>(1);  // counit of e_i is 0
      return sum;
    }
    case Atom::Kind::GenF: {
      SparseMat<S> sum(dim);
      h[atom.index - 1] = -1;
      h[atom.index] = 1;
      SparseMat<S> qhinv = qdiag_mat(ctx, h);
      SparseMat<S> f = gen_f_mat(ctx, n, atom.index);
      for (int pos = 1; pos <= k; ++pos) {
        SparseMat<S> term = SparseMat<S>::identity(1, ctx.one());
        for (int leg = 1; leg <= k; ++leg) {
          if (leg < pos)
            term = kron(term, qhinv);
          else if (leg == pos)
            term = kron(term, f);
          else
            term = kron(term, SparseMat<S>::identity(n, ctx.one()));
        }
        sum = sum + term;
      }
      if (k == 0) return SparseMat<S>(1);
      return sum;
    }
    case Atom::Kind::DiagQ: {
      if (static_cast<long>(atom.qdiag.size()) != n)
        throw Error("diagonal length does not match module dimension");
      SparseMat<S> d = qdiag_mat(ctx, atom.qdiag);
      SparseMat<S> r = SparseMat<S>::identity(1, ctx.one());
      for (int leg = 0; leg < k; ++leg) r = kron(r, d);
      return r;
    }
    case Atom::Kind::QComm: {
      SparseMat<S> l = word_delta_image(ctx, n, *atom.left, k);
      SparseMat<S> r = word_delta_image(ctx, n, *atom.right, k);
      return l * r - (r * l).scaled(ctx.s_pow(2L * atom.qpow));
    }
  }
  throw Error("unreachable");
}

/// Counit of a word: generators map to 0, group-likes to 1.
template <class Ctx>
typename Ctx::Scalar word_counit(const Ctx& ctx, long n, const Word& w) {
  SparseMat<typename Ctx::Scalar> m = word_delta_image(ctx, n, w, 0);
  return m.get(1, 1, ctx.zero());
}

}  // namespace qtwist
