#pragma once

#include "postorder/error.hpp"
#include "postorder/parallel.hpp"
#include "postorder/poset.hpp"
#include "postorder/relation.hpp"

#include <functional>
#include <span>
#include <string>
#include <vector>

namespace postorder {

struct InducedPoset {
  FinitePoset poset;
  /// class_of[i] is the element of `poset` that item i belongs to.
  std::vector<int> class_of;
  /// relations[i][j] as reported by the comparator (diagonal: Equivalent).
  std::vector<std::vector<Relation>> relations;
};

/// Relation matrix from one comparator call per unordered pair.
template <class Item, class Comparator>
std::vector<std::vector<Relation>> pairwise_relations(std::span<const Item> items, Comparator&& cmp, int threads = 1) {
  const std::size_t n = items.size();
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  }
  std::vector<Relation> result(pairs.size(), Relation::Incomparable);
  parallel_for(pairs.size(), threads, [&](std::size_t p) {
    result[p] = cmp(items[pairs[p].first], items[pairs[p].second]);
  });
  std::vector<std::vector<Relation>> rel(n, std::vector<Relation>(n, Relation::Equivalent));
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    auto [i, j] = pairs[p];
    rel[i][j] = result[p];
    rel[j][i] = reversed(result[p]);
  }
  return rel;
}

/// Quotients a preorder given as a relation matrix and returns the partial
/// order on its classes. Classes are labelled by `label(first member)` and
/// ordered by first member. Throws ValidationError when the relation is not
/// a preorder.
InducedPoset poset_from_relations(std::vector<std::vector<Relation>> relations,
                                  const std::function<std::string(int)>& label);

/// Builds the partial order induced by a preorder comparator on `items`,
/// calling the comparator once per unordered pair.
template <class Item, class Comparator>
InducedPoset induced_poset(std::span<const Item> items, Comparator&& cmp,
                           const std::function<std::string(int)>& label, int threads = 1) {
  return poset_from_relations(pairwise_relations(items, std::forward<Comparator>(cmp), threads), label);
}

/// x <= y in p iff cmp(image(x), image(y)) reports Less or Equivalent, for
/// every ordered pair of elements.
template <class Item, class Comparator>
bool check_embedding(const FinitePoset& p, std::span<const Item> images, Comparator&& cmp) {
  if (static_cast<int>(images.size()) != p.size()) throw DimensionError("embedding must map every element");
  for (int x = 0; x < p.size(); ++x) {
    for (int y = x + 1; y < p.size(); ++y) {
      Relation r = cmp(images[static_cast<std::size_t>(x)], images[static_cast<std::size_t>(y)]);
      if (is_le(r) != p.leq(x, y) || is_ge(r) != p.leq(y, x)) return false;
    }
  }
  return true;
}

}  // namespace postorder
