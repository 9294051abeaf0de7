#pragma once

#include "postorder/rational.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace postorder {

/// Finite partial order on at most 64 labelled elements, stored as one
/// up-set bitmask per element (bit j of up(i) set iff i <= j).
class FinitePoset {
public:
  static constexpr int kMaxElements = 64;

  /// Validates reflexivity, antisymmetry and transitivity of `leq`; no
  /// closure is taken. Violations are reported with a witnessing pair or
  /// triple.
  FinitePoset(std::vector<std::string> labels, std::vector<std::vector<bool>> leq);

  int size() const { return static_cast<int>(labels_.size()); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int i) const { return labels_[static_cast<std::size_t>(i)]; }
  int index_of(const std::string& label) const;

  bool leq(int i, int j) const { return (up_[static_cast<std::size_t>(i)] >> j) & 1U; }
  bool less(int i, int j) const { return i != j && leq(i, j); }
  bool comparable(int i, int j) const { return leq(i, j) || leq(j, i); }
  std::uint64_t up_set(int i) const { return up_[static_cast<std::size_t>(i)]; }
  std::vector<std::vector<bool>> relation() const;

  bool is_total() const;

  /// Strict pairs (i, j), i < j, in row-major order.
  std::vector<std::pair<int, int>> strict_pairs() const;

  /// Covering pairs of the Hasse diagram, row-major.
  std::vector<std::pair<int, int>> cover_pairs() const;

  friend bool operator==(const FinitePoset&, const FinitePoset&) = default;

private:
  std::vector<std::string> labels_;
  std::vector<std::uint64_t> up_;
};

/// Builds a poset from strict pairs (a, b) meaning a < b; reflexive pairs
/// are implied. Input must already be transitive and antisymmetric.
FinitePoset make_poset(std::vector<std::string> labels, const std::vector<std::pair<std::string, std::string>>& pairs);

/// Elements a_0..a_{n-1}, b_0..b_{n-1} with a_j < b_k iff j != k.
FinitePoset standard_example(int n);

FinitePoset chain(int n);
FinitePoset antichain(int n);

/// A total order listed from bottom to top: order[r] is the element at rank r.
struct LinearExtension {
  std::vector<int> order;

  std::vector<int> ranks() const;
};

bool is_linear_extension(const FinitePoset& p, const LinearExtension& l);

struct Realizer {
  std::vector<LinearExtension> extensions;
};

/// True iff every extension is a linear extension of p and their
/// intersection is exactly the order of p.
bool realizes(const FinitePoset& p, const Realizer& r);

/// A family of rational-valued functions on the elements.
struct MonotoneFamily {
  std::vector<RationalVector> functions;
};

bool is_monotone(const FinitePoset& p, const RationalVector& f);

/// x <= y iff f(x) <= f(y) for every f in the family.
bool characterizes(const FinitePoset& p, const MonotoneFamily& family);

/// M_a(x) = 1 iff a <= x, else 0.
RationalVector indicator_monotone(const FinitePoset& p, int a);
MonotoneFamily indicator_family(const FinitePoset& p);

/// f_i(x) = rank of x in the i-th extension.
MonotoneFamily realizer_to_monotones(const Realizer& r);

/// Pairs (x, y) of incomparable elements such that everything below x is
/// below y and everything above y is above x. A family of linear extensions
/// realizes p iff each such pair is placed with y below x somewhere.
std::vector<std::pair<int, int>> critical_pairs(const FinitePoset& p);

struct DimensionResult {
  int dimension;
  Realizer realizer;
};

/// Minimal realizer size, found by iterative deepening from 1 (chains) or 2.
/// Each critical pair (x, y) is assigned to one of k slots; a slot is
/// consistent iff the strict order plus its reversals y < x is acyclic.
/// Throws BoundExceeded when no realizer of size <= max_k exists.
DimensionResult order_dimension(const FinitePoset& p, int max_k);

struct MonotoneDimensionResult {
  int dimension;
  MonotoneFamily family;
};

/// Smallest characterizing family of real monotones. For finite posets this
/// equals the order dimension; the family is built from rank functions.
MonotoneDimensionResult order_monotone_dimension(const FinitePoset& p, int max_k);

/// Induced suborder on the given element indices, in the given order.
FinitePoset restrict(const FinitePoset& p, const std::vector<int>& subset);

/// Total order on S induced by an injection g: S -> T and a total order on T.
/// `mapping[x]` is g(x).
LinearExtension pullback_extension(const std::vector<int>& mapping, const LinearExtension& l);

/// Hasse diagram in DOT, nodes in label order.
std::string to_dot(const FinitePoset& p, const std::string& name = "poset");

/// Whether `mapping` (element of p -> element of q) is an isomorphism.
bool is_isomorphism(const FinitePoset& p, const FinitePoset& q, const std::vector<int>& mapping);

}  // namespace postorder
