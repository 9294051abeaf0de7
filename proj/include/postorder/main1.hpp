#pragma once

#include "postorder/classical.hpp"
#include "postorder/induced.hpp"
#include "postorder/poset.hpp"
#include "postorder/postproc.hpp"

#include <vector>

namespace postorder {

/// EVMs on the bit space realizing the standard example S_n under the
/// post-processing order. With s_j = 3^(j - n):
///   A(j) = (1/n) A_{s_j, s_j^2} (+) ((n-1)/n) U
///   B(j) = (1/n) U (+) (+)_{k != j} (1/n) A_{s_k, s_k^2}
/// where (+) is the direct mixture and U = ((1,1)).
struct StandardEmbedding {
  int n;
  std::vector<Rational> s;
  /// A(0..n-1) followed by B(0..n-1), matching the element order of
  /// standard_example(n).
  std::vector<Evm> evms;
  FinitePoset expected;
};

/// Requires n >= 3.
StandardEmbedding main1_embedding(int n);

struct PairComparison {
  int i;
  int j;
  CompareVerdict verdict;
};

struct Main1Result {
  StandardEmbedding embedding;
  std::vector<PairComparison> comparisons;
  InducedPoset induced;
  bool isomorphic;
  DimensionResult dimension;
};

/// Builds the embedding, compares every pair exactly, induces the poset and
/// computes its dimension. Fails with a domain error naming the first pair
/// whose relation disagrees with S_n.
Main1Result run_main1(int n, int threads = 1);

}  // namespace postorder
