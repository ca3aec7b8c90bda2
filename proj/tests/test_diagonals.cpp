#include <vector>

#include <gtest/gtest.h>

#include "dhook/catalog.hpp"
#include "dhook/diagonals.hpp"

using namespace dhook;

TEST(Diagonals, TreeHasSingletonDiagonals) {
  auto t = tree({-1, 0, 0, 1, 1, 2});
  auto part = compute_diagonals(t);
  EXPECT_EQ(part.count(), t.size());
}

TEST(Diagonals, D4) {
  auto part = compute_diagonals(d_k_one(4));
  ASSERT_EQ(part.count(), 4u);
  EXPECT_EQ(part.classes[0], (std::vector<Element>{0, 5}));
  EXPECT_EQ(part.classes[1], (std::vector<Element>{1, 4}));
  EXPECT_EQ(part.classes[2], (std::vector<Element>{2}));
  EXPECT_EQ(part.classes[3], (std::vector<Element>{3}));
}

TEST(Diagonals, TenElementExample) {
  auto p = paper_example("ten-element");
  auto part = compute_diagonals(p);
  auto id = [&](const char* s) { return *p.find_by_name(s); };
  auto same = [&](const char* a, const char* b) { return part.diagonal_of[id(a)] == part.diagonal_of[id(b)]; };
  ASSERT_EQ(part.count(), 6u);
  EXPECT_TRUE(same("A", "J"));
  EXPECT_TRUE(same("B", "G"));
  EXPECT_TRUE(same("C", "I"));
  EXPECT_TRUE(same("E", "K"));
  // Name the diagonals D1..D6 by their top elements A, B, C, E, F, H.
  std::vector<DiagonalId> d;
  for (const char* top : {"A", "B", "C", "E", "F", "H"}) d.push_back(part.diagonal_of[id(top)]);
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = i + 1; j < 6; ++j) EXPECT_NE(d[i], d[j]);
  std::vector<std::pair<int, int>> expect{{0, 1}, {1, 2}, {1, 3}, {2, 4}, {3, 5}};
  std::size_t adjacent = 0;
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = i + 1; j < 6; ++j) {
      bool want = std::find(expect.begin(), expect.end(), std::pair<int, int>(i, j)) != expect.end();
      EXPECT_EQ(part.adjacent(d[i], d[j]), want) << i << "," << j;
      adjacent += part.adjacent(d[i], d[j]);
    }
  EXPECT_EQ(adjacent, 5u);
  EXPECT_EQ(part.adjacent_pairs().size(), 5u);
}

TEST(Diagonals, ShiftedLeftColumnAlternates) {
  auto p = shifted_young({5, 4, 2});
  auto part = compute_diagonals(p);
  auto cell = [&](const char* s) { return part.diagonal_of[*p.find_by_name(s)]; };
  EXPECT_EQ(cell("(1,1)"), cell("(3,3)"));
  EXPECT_NE(cell("(1,1)"), cell("(2,2)"));
}

TEST(Diagonals, YoungDiagonalsAreContentClasses) {
  auto p = young({4, 3, 3, 1});
  auto part = compute_diagonals(p);
  auto content = [&](Element e) {
    int i = 0, j = 0;
    std::sscanf(p.name(e).c_str(), "(%d,%d)", &i, &j);
    return j - i;
  };
  for (Element a = 0; a < p.size(); ++a)
    for (Element b = 0; b < p.size(); ++b)
      EXPECT_EQ(part.diagonal_of[a] == part.diagonal_of[b], content(a) == content(b));
}

TEST(DiagonalOracles, Singleton) {
  auto p = Poset::from_cover_relations(1, std::vector<CoverPair>{});
  EXPECT_TRUE(diagonal_oracles(p, compute_diagonals(p)).ok());
}

TEST(DiagonalOracles, CatalogPasses) {
  for (const auto& e : catalog()) {
    auto r = diagonal_oracles(e.poset, compute_diagonals(e.poset));
    EXPECT_TRUE(r.ok()) << e.name << ": " << (r.ok() ? "" : r.failures.front());
  }
}

TEST(DiagonalOracles, DetectsAMergedPartition) {
  auto p = d_k_one(4);
  auto part = compute_diagonals(p);
  // Force the two side elements into one diagonal.
  part.diagonal_of[3] = part.diagonal_of[2];
  part.classes[2] = {2, 3};
  part.classes.pop_back();
  part.adjacency.assign(9, 0);
  EXPECT_FALSE(diagonal_oracles(p, part).ok());
}
