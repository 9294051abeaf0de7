#include "postorder/main1.hpp"

#include "postorder/error.hpp"
#include "postorder/parallel.hpp"

#include <optional>

namespace postorder {

StandardEmbedding main1_embedding(int n) {
  if (n < 3) throw ValidationError("the standard-example embedding needs n >= 3, got " + std::to_string(n));
  StandardEmbedding out{n, {}, {}, standard_example(n)};
  const Rational third(1, 3);
  for (int j = 0; j < n; ++j) {
    Rational s(1);
    for (int e = j; e < n; ++e) s *= third;
    out.s.push_back(s);
  }
  const Rational w(1, n);
  const Evm u = trivial_evm(ClassicalSpace(2));
  auto parabola = [&](int j) { return a_family(out.s[static_cast<std::size_t>(j)], out.s[static_cast<std::size_t>(j)] * out.s[static_cast<std::size_t>(j)]); };
  for (int j = 0; j < n; ++j) {
    out.evms.push_back(direct_mixture({{w, parabola(j)}, {Rational(n - 1, n), u}}));
  }
  for (int j = 0; j < n; ++j) {
    std::vector<std::pair<Rational, Evm>> parts{{w, u}};
    for (int k = 0; k < n; ++k) {
      if (k != j) parts.emplace_back(w, parabola(k));
    }
    out.evms.push_back(direct_mixture(parts));
  }
  return out;
}

Main1Result run_main1(int n, int threads) {
  StandardEmbedding emb = main1_embedding(n);
  const std::size_t count = emb.evms.size();

  std::vector<std::pair<int, int>> pairs;
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = i + 1; j < count; ++j) pairs.emplace_back(static_cast<int>(i), static_cast<int>(j));
  }
  std::vector<std::optional<CompareVerdict>> verdicts(pairs.size());
  parallel_for(pairs.size(), threads, [&](std::size_t p) {
    verdicts[p] = compare(emb.evms[static_cast<std::size_t>(pairs[p].first)],
                          emb.evms[static_cast<std::size_t>(pairs[p].second)]);
  });
  std::vector<PairComparison> comparisons;
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    comparisons.push_back({pairs[p].first, pairs[p].second, std::move(*verdicts[p])});
  }

  std::vector<std::vector<Relation>> rel(count, std::vector<Relation>(count, Relation::Equivalent));
  for (const auto& c : comparisons) {
    const auto i = static_cast<std::size_t>(c.i);
    const auto j = static_cast<std::size_t>(c.j);
    rel[i][j] = c.verdict.relation;
    rel[j][i] = reversed(c.verdict.relation);
    const bool want_le = emb.expected.leq(c.i, c.j);
    const bool want_ge = emb.expected.leq(c.j, c.i);
    if (is_le(c.verdict.relation) != want_le || is_ge(c.verdict.relation) != want_ge) {
      throw Error("pair (" + emb.expected.label(c.i) + ", " + emb.expected.label(c.j) + ") compares as " +
                  std::string(to_string(c.verdict.relation)) + ", which disagrees with the standard example");
    }
  }

  const auto& labels = emb.expected.labels();
  InducedPoset induced = poset_from_relations(std::move(rel), [&](int i) { return labels[static_cast<std::size_t>(i)]; });
  std::vector<int> identity(count);
  for (std::size_t i = 0; i < count; ++i) identity[i] = static_cast<int>(i);
  const bool iso = induced.poset.size() == static_cast<int>(count) && is_isomorphism(induced.poset, emb.expected, identity);
  if (!iso) throw Error("induced poset is not isomorphic to the standard example");

  DimensionResult dim = order_dimension(induced.poset, n);
  return {std::move(emb), std::move(comparisons), std::move(induced), iso, std::move(dim)};
}

}  // namespace postorder
