#include <algorithm>
#include <numeric>
#include <vector>

#include <gtest/gtest.h>

#include "dhook/catalog.hpp"
#include "dhook/poset.hpp"

using namespace dhook;

namespace {

Poset chain(std::size_t n) {
  std::vector<CoverPair> rel;
  for (Element i = 0; i + 1 < n; ++i) rel.emplace_back(i, i + 1);
  return Poset::from_cover_relations(n, rel);
}

// Brute-force isomorphism over all relabellings.
bool isomorphic(const Poset& a, const Poset& b) {
  if (a.size() != b.size()) return false;
  std::vector<Element> perm(a.size());
  std::iota(perm.begin(), perm.end(), Element{0});
  do {
    bool ok = true;
    for (Element x = 0; x < a.size() && ok; ++x)
      for (Element y = 0; y < a.size() && ok; ++y) ok = a.leq(x, y) == b.leq(perm[x], perm[y]);
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace

TEST(Poset, Singleton) {
  auto p = Poset::from_cover_relations(1, std::vector<CoverPair>{});
  EXPECT_EQ(p.size(), 1u);
  EXPECT_TRUE(p.leq(0, 0));
}

TEST(Poset, ChainClosure) {
  auto p = chain(2);
  int pairs = 0;
  for (Element a = 0; a < 2; ++a)
    for (Element b = 0; b < 2; ++b) pairs += p.leq(a, b);
  EXPECT_EQ(pairs, 3);
}

TEST(Poset, RedundantCoversAreReduced) {
  std::vector<CoverPair> rel{{0, 1}, {1, 2}, {0, 2}};
  auto p = Poset::from_cover_relations(3, rel);
  EXPECT_EQ(p.cover_pairs().size(), 2u);
  EXPECT_TRUE(p.lt(0, 2));
  EXPECT_FALSE(p.covers(2, 0));
}

TEST(Poset, CycleIsRejectedWithWitness) {
  std::vector<CoverPair> rel{{0, 1}, {1, 2}, {2, 0}};
  try {
    Poset::from_cover_relations(3, rel);
    FAIL() << "cycle accepted";
  } catch (const StructuralError& e) {
    EXPECT_NE(std::string(e.what()).find("cycle"), std::string::npos);
  }
}

TEST(Poset, BadIdsRejected) {
  std::vector<CoverPair> rel{{0, 5}};
  EXPECT_THROW(Poset::from_cover_relations(2, rel), DomainError);
}

TEST(Poset, TenElementExampleHasTwelveCovers) {
  auto p = paper_example("ten-element");
  EXPECT_EQ(p.size(), 10u);
  EXPECT_EQ(p.cover_pairs().size(), 12u);
}

TEST(Poset, Intervals) {
  auto c = chain(3);
  EXPECT_EQ(c.interval(0, 2).members(), (std::vector<Element>{0, 1, 2}));
  EXPECT_EQ(c.interval(1, 1).members(), (std::vector<Element>{1}));
  EXPECT_THROW(c.interval(2, 0), DomainError);
  // d_4(1) with ids 0..5 standing for the labels 1..6 bottom to top.
  auto d4 = d_k_one(4);
  EXPECT_EQ(d4.interval(1, 4).members(), (std::vector<Element>{1, 2, 3, 4}));
}

TEST(Poset, Convexity) {
  auto c = chain(3);
  EXPECT_TRUE(c.is_convex(c.interval(0, 2)));
  EXPECT_FALSE(c.is_convex(ElementSet(3, std::vector<Element>{0, 2})));
  auto ex = paper_example("d4-interval");  // p c a b d q
  auto id = [&](const char* s) { return *ex.find_by_name(s); };
  std::vector<Element> lower{id("p"), id("c"), id("a"), id("b"), id("d")};
  EXPECT_TRUE(ex.is_convex(ElementSet(6, lower)));
  EXPECT_EQ(ex.interval(id("p"), id("d")), ElementSet(6, lower));
  // Dropping c leaves a gap between p and the sides.
  std::vector<Element> gap{id("p"), id("a"), id("b"), id("d")};
  EXPECT_FALSE(ex.is_convex(ElementSet(6, gap)));
}

TEST(Poset, UpperSetsAndExtremes) {
  auto d4 = d_k_one(4);
  EXPECT_EQ(d4.minimal_elements(), (std::vector<Element>{0}));
  EXPECT_EQ(d4.maximal_elements(), (std::vector<Element>{5}));
  EXPECT_TRUE(d4.is_upper_set(ElementSet(6, std::vector<Element>{2, 4, 5})));
  EXPECT_FALSE(d4.is_upper_set(ElementSet(6, std::vector<Element>{2, 5})));
  EXPECT_EQ(d4.down_set(2).members(), (std::vector<Element>{0, 1, 2}));
}

TEST(Poset, InducedSubposet) {
  auto d4 = d_k_one(4);
  auto sub = d4.induced(ElementSet(6, std::vector<Element>{1, 2, 3, 4}));
  EXPECT_EQ(sub.size(), 4u);
  EXPECT_EQ(sub.cover_pairs().size(), 4u);
  EXPECT_TRUE(isomorphic(sub, d_k_one(3)));
}

TEST(LinearExtensions, SmallCounts) {
  auto anti = Poset::from_cover_relations(2, std::vector<CoverPair>{});
  EXPECT_EQ(enumerate_linear_extensions(anti).size(), 2u);
  EXPECT_EQ(count_linear_extensions(chain(7)), 1);
  EXPECT_EQ(enumerate_linear_extensions(d_k_one(4)).size(), 2u);
  EXPECT_EQ(count_linear_extensions(d_k_one(4)), 2);
}

TEST(LinearExtensions, DescendingAndLexicographic) {
  auto exts = enumerate_linear_extensions(d_k_one(4));
  ASSERT_EQ(exts.size(), 2u);
  EXPECT_EQ(exts[0], (LinearExtension{5, 4, 2, 3, 1, 0}));
  EXPECT_EQ(exts[1], (LinearExtension{5, 4, 3, 2, 1, 0}));
  for (const auto& t : exts) EXPECT_TRUE(is_linear_extension(d_k_one(4), t));
  EXPECT_FALSE(is_linear_extension(d_k_one(4), LinearExtension{0, 1, 2, 3, 4, 5}));
}

TEST(LinearExtensions, FrozenCounts) {
  // Values from an independent ideal-lattice count.
  EXPECT_EQ(count_linear_extensions(paper_example("ten-element")), 168);
  EXPECT_EQ(enumerate_linear_extensions(paper_example("ten-element")).size(), 168u);
  auto shifted = shifted_young({5, 4, 2});
  EXPECT_EQ(shifted.size(), 11u);
  EXPECT_EQ(count_linear_extensions(shifted), 110);
  EXPECT_EQ(enumerate_linear_extensions(shifted).size(), 110u);
}

TEST(LinearExtensions, CapIsEnforced) {
  auto anti = Poset::from_cover_relations(8, std::vector<CoverPair>{});
  EXPECT_THROW(enumerate_linear_extensions(anti, 100), DomainError);
  EXPECT_EQ(count_linear_extensions(anti), 40320);
}

TEST(LinearExtensions, CountMatchesEnumerationOnCatalog) {
  for (const auto& e : catalog()) {
    std::uint64_t seen = 0;
    bool all_valid = true;
    for_each_linear_extension(e.poset, [&](const LinearExtension& t) {
      ++seen;
      all_valid = all_valid && is_linear_extension(e.poset, t);
      return true;
    });
    EXPECT_EQ(count_linear_extensions(e.poset), BigInt(std::to_string(seen))) << e.name;
    EXPECT_TRUE(all_valid) << e.name;
  }
}

TEST(Generators, Shapes) {
  auto d3 = d_k_one(3);
  EXPECT_EQ(d3.size(), 4u);
  EXPECT_EQ(d3.cover_pairs().size(), 4u);
  EXPECT_EQ(d_k_one(4).size(), 6u);
  EXPECT_TRUE(isomorphic(d_k_one(4), paper_example("d4-interval")));
  EXPECT_TRUE(isomorphic(young({2, 2}), d3));
  EXPECT_THROW(d_k_one(2), DomainError);
  EXPECT_THROW(young({1, 2}), DomainError);
  EXPECT_THROW(shifted_young({2, 2}), DomainError);
  EXPECT_THROW(tree({-1, -1}), DomainError);
  EXPECT_THROW(paper_example("nope"), DomainError);
}

TEST(Generators, YoungMaximumIsTopLeft) {
  auto y = young({3, 2});
  EXPECT_EQ(y.maximal_elements(), (std::vector<Element>{0}));
  EXPECT_EQ(y.name(0), "(1,1)");
}

TEST(Generators, TreeRootIsMaximum) {
  auto t = tree({-1, 0, 0, 1});
  EXPECT_EQ(t.maximal_elements(), (std::vector<Element>{0}));
  EXPECT_TRUE(t.covers(1, 3));
}

TEST(Generators, ClosureIsAPartialOrder) {
  for (const auto& e : catalog()) {
    const auto& p = e.poset;
    for (Element a = 0; a < p.size(); ++a)
      for (Element b = 0; b < p.size(); ++b) {
        if (a != b && p.leq(a, b)) {
          EXPECT_FALSE(p.leq(b, a)) << e.name;
        }
        for (Element c = 0; c < p.size(); ++c)
          if (p.leq(a, b) && p.leq(b, c)) {
            EXPECT_TRUE(p.leq(a, c)) << e.name;
          }
      }
  }
}

TEST(Catalog, Contents) {
  auto cat = catalog();
  EXPECT_EQ(cat.size(), 296u);
  std::size_t trees = 0;
  for (const auto& e : cat) trees += e.name.rfind("tree", 0) == 0;
  EXPECT_EQ(trees, 200u);
  // 1, 1, 2, 4, 9, 20, 48, 115 unlabeled rooted trees
  std::vector<std::size_t> expect{1, 1, 2, 4, 9, 20, 48, 115};
  for (int n = 1; n <= 8; ++n) EXPECT_EQ(rooted_trees(n).size(), expect[n - 1]);
  EXPECT_EQ(partitions_of(8).size(), 22u);
  EXPECT_EQ(partitions_of(8, true).size(), 6u);
  EXPECT_TRUE(catalog_poset("d4").has_value());
  EXPECT_FALSE(catalog_poset("d9").has_value());
}
