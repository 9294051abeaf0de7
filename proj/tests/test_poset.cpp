#include "postorder/error.hpp"
#include "postorder/induced.hpp"
#include "postorder/poset.hpp"

#include "support.hpp"

#include <gtest/gtest.h>

#include <bit>

using namespace postorder;
using namespace postorder::testing;

namespace {

std::vector<std::pair<std::string, std::string>> pairs_of(const FinitePoset& p) {
  std::vector<std::pair<std::string, std::string>> out;
  for (auto [a, b] : p.strict_pairs()) out.emplace_back(p.label(a), p.label(b));
  return out;
}

LinearExtension by_labels(const FinitePoset& p, std::initializer_list<const char*> names) {
  LinearExtension l;
  for (const char* n : names) l.order.push_back(p.index_of(n));
  return l;
}

}  // namespace

TEST(MakePoset, Validation) {
  EXPECT_NO_THROW(make_poset({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"a", "c"}}));
  EXPECT_THROW(make_poset({"a", "b"}, {{"a", "b"}, {"b", "a"}}), ValidationError);
  try {
    make_poset({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
    FAIL() << "missing transitivity error";
  } catch (const ValidationError& e) {
    EXPECT_NE(std::string(e.what()).find("(a, b, c)"), std::string::npos) << e.what();
  }
  EXPECT_THROW(make_poset({"a", "a"}, {}), ValidationError);
  EXPECT_THROW(make_poset({"a"}, {{"a", "z"}}), ValidationError);
  EXPECT_THROW(FinitePoset({"a", "b"}, {{true, false}, {false, false}}), ValidationError);
}

TEST(StandardExample, Relations) {
  FinitePoset s2 = standard_example(2);
  EXPECT_EQ(pairs_of(s2), (std::vector<std::pair<std::string, std::string>>{{"a0", "b1"}, {"a1", "b0"}}));
  FinitePoset s3 = standard_example(3);
  for (int j = 0; j < 3; ++j) EXPECT_EQ(std::popcount(s3.up_set(j)), 3);
  EXPECT_THROW(standard_example(1), ValidationError);
}

TEST(LinearExtensions, Examples) {
  FinitePoset c = chain(4);
  Realizer own{{LinearExtension{{0, 1, 2, 3}}}};
  EXPECT_TRUE(realizes(c, own));
  FinitePoset s2 = standard_example(2);
  LinearExtension l = by_labels(s2, {"a0", "a1", "b0", "b1"});
  EXPECT_TRUE(is_linear_extension(s2, l));
  EXPECT_FALSE(realizes(s2, Realizer{{l}}));
  EXPECT_FALSE(is_linear_extension(s2, by_labels(s2, {"b1", "a0", "a1", "b0"})));
  EXPECT_FALSE(is_linear_extension(s2, LinearExtension{{0, 0, 1, 2}}));
  EXPECT_THROW(is_linear_extension(s2, LinearExtension{{0, 1}}), DimensionError);
}

TEST(Dimension, Examples) {
  EXPECT_EQ(order_dimension(chain(4), 4).dimension, 1);
  EXPECT_EQ(order_dimension(chain(5), 4).dimension, 1);
  EXPECT_EQ(order_dimension(antichain(3), 4).dimension, 2);
  EXPECT_EQ(order_dimension(standard_example(2), 4).dimension, 2);
  EXPECT_EQ(order_dimension(standard_example(3), 4).dimension, 3);
  EXPECT_EQ(order_dimension(standard_example(4), 4).dimension, 4);
  EXPECT_EQ(order_dimension(chain(1), 1).dimension, 1);
}

TEST(Dimension, BoundExceeded) {
  try {
    order_dimension(standard_example(4), 3);
    FAIL();
  } catch (const BoundExceeded& e) {
    EXPECT_EQ(e.bound(), 3);
  }
}

TEST(Dimension, RealizerIsVerifiedAndCanonical) {
  auto r = order_dimension(standard_example(3), 3);
  EXPECT_TRUE(realizes(standard_example(3), r.realizer));
  EXPECT_EQ(r.realizer.extensions.size(), 3U);
  auto again = order_dimension(standard_example(3), 3);
  for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(again.realizer.extensions[i].order, r.realizer.extensions[i].order);
}

TEST(Dimension, AgreesWithNaiveOracleOnAllSmallPosets) {
  for (int n = 1; n <= 4; ++n) {
    for (const auto& p : all_posets(n)) {
      auto r = order_dimension(p, n);
      EXPECT_EQ(r.dimension, naive_dimension(p));
      EXPECT_TRUE(realizes(p, r.realizer));
    }
  }
}

TEST(Dimension, AgreesWithNaiveOracleOnSampledFiveElementPosets) {
  Rng rng(41);
  for (int t = 0; t < 60; ++t) {
    FinitePoset p = random_poset(rng, 5, 0.4);
    EXPECT_EQ(order_dimension(p, 5).dimension, naive_dimension(p));
  }
}

TEST(Dimension, NaiveOracleOnKnownPosets) {
  EXPECT_EQ(naive_dimension(chain(4)), 1);
  EXPECT_EQ(naive_dimension(antichain(3)), 2);
  EXPECT_EQ(naive_dimension(standard_example(2)), 2);
  EXPECT_EQ(naive_dimension(standard_example(3)), 3);
}

TEST(Monotones, Examples) {
  FinitePoset c = make_poset({"a", "b"}, {{"a", "b"}});
  EXPECT_EQ(indicator_monotone(c, 1), vec({q(0), q(1)}));
  EXPECT_EQ(indicator_monotone(c, 0), vec({q(1), q(1)}));

  auto chain_dim = order_dimension(chain(3), 3);
  auto fam = realizer_to_monotones(chain_dim.realizer);
  ASSERT_EQ(fam.functions.size(), 1U);
  EXPECT_EQ(fam.functions[0], vec({q(0), q(1), q(2)}));
  EXPECT_TRUE(characterizes(chain(3), fam));

  FinitePoset s2 = standard_example(2);
  auto s2_fam = realizer_to_monotones(order_dimension(s2, 2).realizer);
  EXPECT_EQ(s2_fam.functions.size(), 2U);
  EXPECT_TRUE(characterizes(s2, s2_fam));

  RationalVector constant = RationalVector::Constant(4, q(1));
  EXPECT_TRUE(is_monotone(s2, constant));
  EXPECT_FALSE(characterizes(s2, MonotoneFamily{{constant}}));
  EXPECT_EQ(order_monotone_dimension(standard_example(3), 3).dimension, 3);
}

TEST(Monotones, IndicatorFamilyCharacterizesRandomPosets) {
  Rng rng(43);
  for (int t = 0; t < 100; ++t) {
    FinitePoset p = random_poset(rng, uniform_int(rng, 1, 8), 0.35);
    EXPECT_TRUE(characterizes(p, indicator_family(p)));
    auto d = order_dimension(p, 8);
    auto m = order_monotone_dimension(p, 8);
    EXPECT_EQ(d.dimension, m.dimension);
    EXPECT_TRUE(characterizes(p, realizer_to_monotones(d.realizer)));
  }
}

TEST(Restrict, Examples) {
  FinitePoset s3 = standard_example(3);
  FinitePoset two = restrict(s3, {s3.index_of("a0"), s3.index_of("a1")});
  EXPECT_EQ(two.strict_pairs().size(), 0U);
  EXPECT_EQ(restrict(s3, {0, 1, 2, 3, 4, 5}), s3);
  FinitePoset ends = restrict(chain(4), {0, 3});
  EXPECT_EQ(ends.strict_pairs(), (std::vector<std::pair<int, int>>{{0, 1}}));
  EXPECT_THROW(restrict(s3, {7}), ValidationError);
  EXPECT_THROW(restrict(s3, {1, 1}), ValidationError);
}

TEST(Restrict, DimensionNeverGrows) {
  Rng rng(47);
  for (int t = 0; t < 60; ++t) {
    FinitePoset p = random_poset(rng, uniform_int(rng, 1, 8), 0.3);
    std::vector<int> subset;
    for (int i = 0; i < p.size(); ++i) {
      if (uniform_int(rng, 0, 1)) subset.push_back(i);
    }
    if (subset.empty()) continue;
    EXPECT_LE(order_dimension(restrict(p, subset), 8).dimension, order_dimension(p, 8).dimension);
  }
}

TEST(Pullback, Examples) {
  LinearExtension l{{2, 0, 1}};
  EXPECT_EQ(pullback_extension({0, 1, 2}, l).order, l.order);

  FinitePoset s2 = standard_example(2);
  LinearExtension ext = by_labels(s2, {"a1", "b0", "a0", "b1"});
  LinearExtension pulled = pullback_extension({s2.index_of("a0"), s2.index_of("a1")}, ext);
  EXPECT_EQ(pulled.order, (std::vector<int>{1, 0}));
  EXPECT_THROW(pullback_extension({0, 0}, ext), ValidationError);
}

TEST(Pullback, RealizersPullBackAlongEmbeddings) {
  Rng rng(53);
  for (int t = 0; t < 40; ++t) {
    FinitePoset p = random_poset(rng, uniform_int(rng, 2, 7), 0.35);
    std::vector<int> subset;
    for (int i = 0; i < p.size(); ++i) {
      if (uniform_int(rng, 0, 2) > 0) subset.push_back(i);
    }
    if (subset.empty()) continue;
    FinitePoset sub = restrict(p, subset);
    Realizer r = order_dimension(p, 7).realizer;
    Realizer pulled;
    for (const auto& l : r.extensions) pulled.extensions.push_back(pullback_extension(subset, l));
    EXPECT_TRUE(realizes(sub, pulled));
  }
}

TEST(Dot, HasseDiagram) {
  const std::string dot = to_dot(chain(3), "c3");
  EXPECT_EQ(dot,
            "digraph \"c3\" {\n  rankdir=BT;\n  node [shape=circle];\n  \"c0\";\n  \"c1\";\n  \"c2\";\n"
            "  \"c0\" -> \"c1\";\n  \"c1\" -> \"c2\";\n}\n");
  const std::string s2 = to_dot(standard_example(2));
  EXPECT_NE(s2.find("\"a0\" -> \"b1\""), std::string::npos);
  EXPECT_EQ(s2.find("\"a0\" -> \"b0\""), std::string::npos);
}

TEST(Induced, Examples) {
  std::vector<int> items{0, 0, 1};
  auto by_value = [](int a, int b) { return relation_from(a <= b, b <= a); };
  auto ip = induced_poset(std::span<const int>(items), by_value, [](int i) { return "v" + std::to_string(i); });
  EXPECT_EQ(ip.poset.size(), 2);
  EXPECT_EQ(ip.class_of, (std::vector<int>{0, 0, 1}));
  EXPECT_TRUE(ip.poset.leq(0, 1));

  std::vector<int> single{5};
  EXPECT_EQ(induced_poset(std::span<const int>(single), by_value, [](int) { return std::string("x"); }).poset.size(), 1);
}

TEST(Induced, DetectsIntransitiveComparator) {
  // Rock-paper-scissors: 0 < 1 < 2 < 0.
  std::vector<int> items{0, 1, 2};
  auto cyclic = [](int a, int b) { return (b - a + 3) % 3 == 1 ? Relation::Less : Relation::Greater; };
  EXPECT_THROW(induced_poset(std::span<const int>(items), cyclic, [](int i) { return std::to_string(i); }),
               ValidationError);
}

TEST(Induced, CheckEmbedding) {
  FinitePoset s3 = standard_example(3);
  std::vector<int> identity{0, 1, 2, 3, 4, 5};
  auto by_poset = [&](int a, int b) { return relation_from(s3.leq(a, b), s3.leq(b, a)); };
  EXPECT_TRUE(check_embedding(s3, std::span<const int>(identity), by_poset));
  std::vector<int> swapped{0, 1, 2, 4, 3, 5};
  EXPECT_FALSE(check_embedding(s3, std::span<const int>(swapped), by_poset));
}

TEST(Isomorphism, Checks) {
  FinitePoset s2 = standard_example(2);
  EXPECT_TRUE(is_isomorphism(s2, s2, {0, 1, 2, 3}));
  EXPECT_TRUE(is_isomorphism(s2, s2, {1, 0, 3, 2}));
  EXPECT_FALSE(is_isomorphism(s2, s2, {1, 0, 2, 3}));
}
