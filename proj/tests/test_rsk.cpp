#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "dhook/catalog.hpp"
#include "dhook/classical.hpp"
#include "dhook/rsk.hpp"

using namespace dhook;

namespace {

Filling ints(std::initializer_list<long> v) {
  Filling f;
  for (long x : v) f.emplace_back(x);
  return f;
}

Poset chain(std::size_t n) {
  std::vector<CoverPair> rel;
  for (Element i = 0; i + 1 < n; ++i) rel.emplace_back(i, i + 1);
  return Poset::from_cover_relations(n, rel);
}

// d_4(1) with ids 0,1 tail (bottom up), 2,3 sides, 4,5 neck.
const LinearExtension kWorkedOrder{5, 4, 2, 3, 1, 0};
const Filling kWorkedInput = ints({2, 2, 3, 4, 2, 1});
const Filling kWorkedOutput = ints({11, 9, 6, 7, 4, 3});

}  // namespace

TEST(Toggle, DefinitionExample) {
  // p = 0 covered by 1, 2 (labels 3, 4) and covering 3, 4 (labels 6, 7).
  std::vector<CoverPair> rel{{0, 1}, {0, 2}, {3, 0}, {4, 0}};
  auto p = Poset::from_cover_relations(5, rel);
  Filling s = ints({5, 3, 4, 6, 7});
  std::vector<char> active(5, 1);
  ToggleStep step;
  EXPECT_EQ(toggled_value(p, s, 0, active, &step), 5);
  EXPECT_EQ(step.x, Element{2});
  EXPECT_EQ(step.y, Element{3});
  EXPECT_TRUE(step.strict);
}

TEST(Toggle, IsolatedAndInvolution) {
  auto single = Poset::from_cover_relations(1, std::vector<CoverPair>{});
  EXPECT_EQ(toggle(single, ints({7}), 0), ints({-7}));
  auto d4 = d_k_one(4);
  Filling s = ints({9, 8, 5, 6, 2, 1});
  for (Element e = 0; e < 6; ++e) EXPECT_EQ(toggle(d4, toggle(d4, s, e), e), s);
}

TEST(Toggle, TiesAreReported) {
  auto d3 = d_k_one(3);
  std::vector<char> active(4, 1);
  ToggleStep step;
  toggled_value(d3, ints({5, 3, 3, 1}), 0, active, &step);
  EXPECT_FALSE(step.strict);
  EXPECT_EQ(step.x, Element{1});
}

TEST(Rsk, Singleton) {
  auto dp = DPoset::analyze(Poset::from_cover_relations(1, std::vector<CoverPair>{}));
  EXPECT_EQ(rsk(dp, ints({4})), ints({4}));
  EXPECT_EQ(inverse_rsk(dp, ints({4})), ints({4}));
}

TEST(Rsk, WorkedExample) {
  auto dp = DPoset::analyze(d_k_one(4));
  std::vector<ToggleStep> trace;
  Filling s = rsk(dp, kWorkedInput, kWorkedOrder, &trace);
  EXPECT_EQ(s, kWorkedOutput);
  EXPECT_EQ(inverse_rsk(dp, s, kWorkedOrder), kWorkedInput);
  EXPECT_EQ(rsk(dp, kWorkedInput), kWorkedOutput);  // default stable order
  EXPECT_EQ(diagonal_sums(dp.diagonals(), s), (std::vector<Rational>{14, 13, 6, 7}));
  // Sum over x_D s = sum over H_p t at x = 1.
  Rational lhs = 0, rhs = 0;
  for (Element e = 0; e < 6; ++e) {
    lhs += s[e];
    rhs += Rational(static_cast<long>(dp.hook_length(e))) * kWorkedInput[e];
  }
  EXPECT_EQ(lhs, 40);
  EXPECT_EQ(rhs, 40);
}

TEST(Rsk, ZeroFilling) {
  auto dp = DPoset::analyze(paper_example("ten-element"));
  Filling z(10, Rational(0));
  EXPECT_EQ(rsk(dp, z), z);
  EXPECT_EQ(diagonal_sums(dp.diagonals(), z), std::vector<Rational>(6, Rational(0)));
}

TEST(Rsk, Errors) {
  auto dp = DPoset::analyze(d_k_one(4));
  EXPECT_THROW(rsk(dp, ints({1, 1, 1, 1, 1, -1})), DomainError);
  EXPECT_THROW(rsk(dp, ints({1, 1, 1})), DomainError);
  EXPECT_THROW(rsk(dp, kWorkedInput, LinearExtension{0, 1, 2, 3, 4, 5}), DomainError);
  EXPECT_THROW(inverse_rsk(dp, ints({1, 2, 3, 4, 5, 6})), DomainError);
}

TEST(Rsk, RoundTripAndOrderIndependence) {
  std::mt19937_64 rng(11);
  for (const char* name : {"d5", "ten-element", "young(3,2,1)", "shifted(4,2,1)", "tree7-30"}) {
    auto dp = DPoset::analyze(*catalog_poset(name));
    for (int trial = 0; trial < 1000; ++trial) {
      Filling t = random_filling(dp.size(), rng);
      auto order = random_linear_extension(dp.poset(), rng);
      Filling s = rsk(dp, t, order);
      ASSERT_TRUE(is_order_reversing(dp.poset(), s)) << name;
      ASSERT_EQ(inverse_rsk(dp, s, order), t) << name;
      ASSERT_EQ(rsk(dp, t), s) << name;
      Rational total_s = 0, total_sums = 0;
      for (const auto& v : s) total_s += v;
      for (const auto& v : diagonal_sums(dp.diagonals(), s)) total_sums += v;
      ASSERT_EQ(total_s, total_sums);
    }
  }
}

TEST(Rsk, MatchesClassicalToggleOnYoungDiagrams) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> entry(0, 5);
  for (const Partition& lambda : {Partition{2, 2}, Partition{3, 3, 3}, Partition{4, 2, 1}, Partition{3, 3, 2}}) {
    auto dp = DPoset::analyze(young(lambda));
    for (int trial = 0; trial < 50; ++trial) {
      classical::MatrixFilling m;
      Filling t;
      for (int len : lambda) {
        m.rows.emplace_back();
        for (int j = 0; j < len; ++j) {
          m.rows.back().push_back(entry(rng));
          t.emplace_back(static_cast<long>(m.rows.back().back()));
        }
      }
      auto rpp = classical::toggle_rpp(m);
      Filling expect;
      for (const auto& row : rpp.rows)
        for (auto v : row) expect.emplace_back(static_cast<long>(v));
      ASSERT_EQ(rsk(dp, t), expect);
    }
  }
}

TEST(StableOrder, Chain) {
  auto dp = DPoset::analyze(chain(4));
  EXPECT_EQ(stable_insertion_order(dp), (LinearExtension{3, 2, 1, 0}));
  EXPECT_TRUE(is_stable(dp, LinearExtension{3, 2, 1, 0}));
}

TEST(StableOrder, TenElementExampleOrder) {
  auto p = paper_example("ten-element");
  auto dp = DPoset::analyze(p);
  LinearExtension order;
  for (const char* s : {"A", "B", "C", "E", "G", "J", "F", "H", "I", "K"}) order.push_back(*p.find_by_name(s));
  EXPECT_TRUE(is_stable(dp, order));
}

TEST(StableOrder, UnstableOrderOnTenElementPoset) {
  auto p = paper_example("ten-element");
  auto dp = DPoset::analyze(p);
  // Starting the tail [I, C] before finishing the tail of [J, A].
  LinearExtension order;
  for (const char* s : {"A", "B", "C", "E", "F", "G", "I", "H", "J", "K"}) order.push_back(*p.find_by_name(s));
  ASSERT_TRUE(is_linear_extension(p, order));
  EXPECT_FALSE(is_stable(dp, order));
}

TEST(StableOrder, EveryExtensionOfD5IsStable) {
  auto dp = DPoset::analyze(d_k_one(5));
  for (const auto& t : enumerate_linear_extensions(dp.poset())) EXPECT_TRUE(is_stable(dp, t));
}

TEST(StableOrder, CatalogOrdersAreStable) {
  for (const auto& e : catalog()) {
    auto dp = DPoset::analyze(e.poset);
    auto order = stable_insertion_order(dp);
    EXPECT_TRUE(is_linear_extension(dp.poset(), order)) << e.name;
    EXPECT_TRUE(is_stable(dp, order)) << e.name;
  }
}

TEST(Jacobian, UnitDeterminantWithToggleSign) {
  std::mt19937_64 rng(3);
  for (const char* name : {"d4", "d6", "ten-element", "young(2,2)", "shifted(3,1)", "tree5-3"}) {
    auto dp = DPoset::analyze(*catalog_poset(name));
    int done = 0;
    for (int attempt = 0; attempt < 200 && done < 10; ++attempt) {
      Filling t = random_filling(dp.size(), rng);
      auto order = random_linear_extension(dp.poset(), rng);
      auto jac = rsk_jacobian(dp, t, order);
      if (!jac) continue;
      ++done;
      int sign = (dp.size() + jac->toggles) % 2 == 0 ? 1 : -1;
      EXPECT_EQ(jac->determinant, sign) << name;
    }
    EXPECT_EQ(done, 10) << name;
  }
}

TEST(Jacobian, TiedPointIsRejected) {
  auto dp = DPoset::analyze(d_k_one(3));
  EXPECT_FALSE(rsk_jacobian(dp, ints({1, 1, 1, 1}), LinearExtension{3, 1, 2, 0}));
}

TEST(Determinant, Small) {
  std::vector<Rational> m{2, 1, 1, 3};
  EXPECT_EQ(determinant(m, 2), 5);
  std::vector<Rational> swap{0, 1, 1, 0};
  EXPECT_EQ(determinant(swap, 2), -1);
}

TEST(RskOracles, CatalogSample) {
  auto cat = catalog();
  for (std::size_t i = 0; i < cat.size(); i += 7) {
    auto dp = DPoset::analyze(cat[i].poset);
    auto r = rsk_oracles(dp, 10, i);
    EXPECT_TRUE(r.ok()) << cat[i].name << ": " << (r.ok() ? "" : r.failures.front());
  }
  auto dp = DPoset::analyze(paper_example("ten-element"));
  auto r = rsk_oracles(dp, 100, 99);
  EXPECT_TRUE(r.ok()) << (r.ok() ? "" : r.failures.front());
}
