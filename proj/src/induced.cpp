#include "postorder/induced.hpp"

namespace postorder {

InducedPoset poset_from_relations(std::vector<std::vector<Relation>> relations,
                                  const std::function<std::string(int)>& label) {
  const int n = static_cast<int>(relations.size());
  auto le = [&](int i, int j) { return is_le(relations[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]); };
  // A preorder needs transitivity; a single violating triple means the
  // comparator is inconsistent.
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j || !le(i, j)) continue;
      for (int k = 0; k < n; ++k) {
        if (le(j, k) && !le(i, k)) {
          throw ValidationError("comparator is not transitive on items (" + std::to_string(i) + ", " +
                                std::to_string(j) + ", " + std::to_string(k) + ")");
        }
      }
    }
  }

  std::vector<int> class_of(static_cast<std::size_t>(n), -1);
  std::vector<int> reps;
  for (int i = 0; i < n; ++i) {
    if (class_of[static_cast<std::size_t>(i)] >= 0) continue;
    class_of[static_cast<std::size_t>(i)] = static_cast<int>(reps.size());
    for (int j = i + 1; j < n; ++j) {
      if (le(i, j) && le(j, i)) class_of[static_cast<std::size_t>(j)] = static_cast<int>(reps.size());
    }
    reps.push_back(i);
  }

  const std::size_t c = reps.size();
  std::vector<std::string> labels;
  std::vector<std::vector<bool>> leq(c, std::vector<bool>(c));
  for (std::size_t a = 0; a < c; ++a) {
    labels.push_back(label(reps[a]));
    for (std::size_t b = 0; b < c; ++b) leq[a][b] = le(reps[a], reps[b]);
  }
  return {FinitePoset(std::move(labels), std::move(leq)), std::move(class_of), std::move(relations)};
}

}  // namespace postorder
