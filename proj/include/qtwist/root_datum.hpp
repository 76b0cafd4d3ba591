#pragma once

#include "qtwist/rational.hpp"

#include <utility>
#include <vector>

namespace qtwist {

/// Root combinatorics of A_{2N}: Cartan matrix, positive roots as index
/// pairs, and the Dynkin-diagram reflection ("priming") i' = 2N+2-i.
/// A positive root alpha_{ij} (1 <= i < j) spans the simple roots
/// alpha_i .. alpha_{j-1}.
struct RootDatum {
  int N;
  int n;  // 2N+1

  explicit RootDatum(int rank_param) : N(rank_param), n(2 * rank_param + 1) {
    if (N < 1) throw Error("N must be >= 1");
  }

  int cartan(int i, int j) const {
    if (i == j) return 2;
    if (i == j + 1 || j == i + 1) return -1;
    return 0;
  }

  /// Index reflection i' = 2N+2-i on 1..2N+1.
  int prime_index(int i) const { return 2 * N + 2 - i; }

  /// Simple-root reflection alpha'_j = alpha_{2N+1-j}.
  int prime_simple(int j) const { return 2 * N + 1 - j; }

  /// The primed partner of a root segment: (i,j) -> (j', i').
  std::pair<int, int> prime_root(std::pair<int, int> root) const {
    return {prime_index(root.second), prime_index(root.first)};
  }

  /// Positive roots of sl(k) as pairs (i, j), 1 <= i < j <= k.
  /// `descending` selects the ">" (reverse-lexicographic) enumeration used
  /// in the ordered R-matrix product; the default is the "<" order.
  static std::vector<std::pair<int, int>> positive_roots(int k,
                                                         bool descending) {
    std::vector<std::pair<int, int>> roots;
    for (int i = 1; i < k; ++i)
      for (int j = i + 1; j <= k; ++j) roots.push_back({i, j});
    if (descending) std::reverse(roots.begin(), roots.end());
    return roots;
  }
};

}  // namespace qtwist
