#pragma once

#include "qtwist/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace qtwist {

/// Ordered table of symbolic variable names. Index 0 is always "s", the
/// square root of the deformation parameter (q = s^2). The order is fixed
/// for the lifetime of a computation and induces the monomial order.
class VarTable {
 public:
  VarTable() { add("s"); }

  int add(const std::string& name) {
    if (index_.count(name)) throw Error("duplicate variable name: " + name);
    index_[name] = static_cast<int>(names_.size());
    names_.push_back(name);
    return index_[name];
  }

  int size() const { return static_cast<int>(names_.size()); }
  const std::string& name(int i) const { return names_.at(i); }

  int index_of(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) throw Error("unknown variable: " + name);
    return it->second;
  }
  bool has(const std::string& name) const { return index_.count(name) > 0; }

  /// Standard table for rank parameter N: s, mu1..muN, a_ik (i<k<=N), b1..bN.
  static VarTable for_rank(int N) {
    VarTable t;
    for (int i = 1; i <= N; ++i) t.add(mu_name(i));
    for (int i = 1; i <= N; ++i)
      for (int k = i + 1; k <= N; ++k) t.add(a_name(i, k));
    for (int i = 1; i <= N; ++i) t.add(b_name(i));
    return t;
  }

  static std::string mu_name(int i) { return "mu" + std::to_string(i); }
  static std::string b_name(int i) { return "b" + std::to_string(i); }
  static std::string a_name(int i, int k) {
    if (i > 9 || k > 9)
      return "a" + std::to_string(i) + "_" + std::to_string(k);
    return "a" + std::to_string(i) + std::to_string(k);
  }

  bool operator==(const VarTable& o) const { return names_ == o.names_; }

 private:
  std::vector<std::string> names_;
  std::map<std::string, int> index_;
};

}  // namespace qtwist
