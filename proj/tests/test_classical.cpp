#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "dhook/classical.hpp"

using namespace dhook::classical;

namespace {

using Rows = std::vector<std::vector<Entry>>;
using Tab = std::vector<std::vector<int>>;

const MatrixFilling kAppendix{{{1, 0, 2}, {0, 2, 0}, {1, 1, 0}}};

MatrixFilling random_matrix(std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> entry(0, 4);
  MatrixFilling m;
  m.rows.assign(n, std::vector<Entry>(n));
  for (auto& row : m.rows)
    for (auto& v : row) v = entry(rng);
  return m;
}

Entry total(const MatrixFilling& m) {
  Entry s = 0;
  for (const auto& r : m.rows)
    for (auto v : r) s += v;
  return s;
}

}  // namespace

TEST(InsertionRsk, ZeroMatrix) {
  auto [p, q] = classical_insert_rsk(MatrixFilling{Rows(3, std::vector<Entry>(3, 0))});
  EXPECT_TRUE(p.rows.empty());
  EXPECT_TRUE(q.rows.empty());
}

TEST(InsertionRsk, AppendixExample) {
  auto [p, q] = classical_insert_rsk(kAppendix);
  EXPECT_EQ(p.rows, (Tab{{1, 1, 2, 2}, {2, 3}, {3}}));
  EXPECT_EQ(q.rows, (Tab{{1, 1, 1, 3}, {2, 2}, {3}}));
}

TEST(InsertionRsk, RandomShapesAgree) {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 100; ++i) {
    auto m = random_matrix(3, rng);
    auto [p, q] = classical_insert_rsk(m);
    EXPECT_EQ(p.shape(), q.shape());
    EXPECT_EQ(static_cast<Entry>(p.size()), total(m));
    EXPECT_EQ(static_cast<Entry>(q.size()), total(m));
    EXPECT_TRUE(p.is_semistandard());
    EXPECT_TRUE(q.is_semistandard());
  }
}

TEST(ToggleRpp, OneByOne) {
  EXPECT_EQ(toggle_rpp(MatrixFilling{{{7}}}).rows, (Rows{{7}}));
}

TEST(ToggleRpp, AppendixExample) {
  auto r = toggle_rpp(kAppendix);
  EXPECT_EQ(r.rows, (Rows{{1, 2, 3}, {1, 2, 3}, {2, 4, 4}}));
  EXPECT_TRUE(is_rpp(r));
}

TEST(ToggleRpp, OrderIndependence) {
  std::mt19937_64 rng(2);
  for (int i = 0; i < 100; ++i) {
    auto m = random_matrix(4, rng);
    std::vector<Square> column_major;
    for (std::size_t j = 0; j < 4; ++j)
      for (std::size_t k = 0; k < 4; ++k) column_major.emplace_back(k, j);
    auto a = toggle_rpp(m), b = toggle_rpp(m, column_major);
    EXPECT_EQ(a, b);
    EXPECT_TRUE(is_rpp(a));
  }
}

TEST(ToggleRpp, RaggedShape) {
  MatrixFilling m{{{1, 2, 0}, {3, 1}, {2}}};
  auto r = toggle_rpp(m);
  EXPECT_TRUE(is_rpp(r));
  EXPECT_EQ(r.rows.size(), 3u);
  EXPECT_EQ(r.rows[1].size(), 2u);
}

TEST(ToggleRpp, InvalidOrders) {
  std::vector<Square> bad{{1, 0}, {0, 0}, {0, 1}, {1, 1}};
  MatrixFilling m{{{1, 1}, {1, 1}}};
  EXPECT_THROW(toggle_rpp(m, bad), dhook::DomainError);
  EXPECT_THROW(toggle_rpp(m, std::vector<Square>{{0, 0}, {0, 1}, {1, 0}}), dhook::DomainError);
  EXPECT_THROW(toggle_rpp(m, std::vector<Square>{{0, 0}, {0, 0}, {0, 1}, {1, 0}}), dhook::DomainError);
  EXPECT_THROW(toggle_rpp(MatrixFilling{{{1, -1}}}), dhook::DomainError);
}

TEST(GelfandTsetlin, AppendixPatterns) {
  auto [lower, upper] = gt_from_rpp(toggle_rpp(kAppendix));
  EXPECT_EQ(lower.rows, (Rows{{4, 2, 1}, {4, 1}, {2}}));
  EXPECT_EQ(upper.rows, (Rows{{4, 2, 1}, {3, 2}, {3}}));
  auto [p, q] = classical_insert_rsk(kAppendix);
  EXPECT_EQ(ssyt_from_gt(lower), p);
  EXPECT_EQ(ssyt_from_gt(upper), q);
}

TEST(GelfandTsetlin, ConstantRpp) {
  MatrixFilling c{Rows(3, std::vector<Entry>(3, 2))};
  auto [lower, upper] = gt_from_rpp(c);
  for (const auto& row : lower.rows)
    for (auto v : row) EXPECT_EQ(v, 2);
  EXPECT_EQ(lower, upper);
  EXPECT_EQ(ssyt_from_gt(lower).rows, (Tab{{1, 1}, {2, 2}, {3, 3}}));
}

TEST(GelfandTsetlin, Errors) {
  EXPECT_THROW(gt_from_rpp(MatrixFilling{{{1, 2}}}), dhook::DomainError);
  GTPattern bad{{{1, 2}, {3}}};
  EXPECT_THROW(ssyt_from_gt(bad), dhook::DomainError);
  EXPECT_THROW(gt_from_rpp(MatrixFilling{{{2, 1}, {1, 1}}}), dhook::DomainError);
}

TEST(GelfandTsetlin, RandomEquivalence) {
  std::mt19937_64 rng(9);
  for (std::size_t n : {2, 3, 4, 5})
    for (int i = 0; i < 200; ++i) {
      auto m = random_matrix(n, rng);
      auto [p, q] = classical_insert_rsk(m);
      auto [lower, upper] = gt_from_rpp(toggle_rpp(m));
      ASSERT_EQ(ssyt_from_gt(lower), p);
      ASSERT_EQ(ssyt_from_gt(upper), q);
    }
}
