#include <doctest.h>

#include <functional>
#include <map>
#include <random>

#include "affcrystal/verify.hpp"
#include "affcrystal/young_walls.hpp"

using namespace affcrystal;

namespace {

WallTuple example_p1() { return {PatternKind::P1, 2, {0, 0, 1}, {{2, 1, 1}, {3, 1, 1}, {3, 3, 1, 1}}}; }
WallTuple example_pn() { return {PatternKind::Pn, 2, {0, 0, 1}, {{3, 1, 1}, {3, 1}, {3, 2, 1, 1, 1}}}; }

// Nonincreasing sequences with sum <= budget.
void columns(int budget, int cap, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  out.push_back(cur);
  for (int h = 1; h <= std::min(budget, cap); ++h) {
    cur.push_back(h);
    columns(budget - h, h, cur, out);
    cur.pop_back();
  }
}

// Every valid tuple with at most `budget` blocks, counted by content.
std::map<RootVector, int> count_tuples(const WeightVec& lam, PatternKind kind, int budget) {
  std::vector<std::vector<int>> shapes;
  std::vector<int> cur;
  columns(budget, budget, cur, shapes);
  const WallTuple base = empty_walls(lam, kind);
  std::map<RootVector, int> out;
  WallTuple w = base;
  std::function<void(std::size_t, int)> rec = [&](std::size_t wall, int left) {
    if (wall == base.charges.size()) {
      WallTuple t = w;
      trim(t);
      if (validate(t).ok) ++out[wall_content(t)];
      return;
    }
    for (const auto& s : shapes) {
      int sum = 0;
      for (int h : s) sum += h;
      if (sum > left) continue;
      w.heights[wall] = s;
      rec(wall + 1, left - sum);
    }
  };
  rec(0, budget);
  return out;
}

// Elements of B(lam) at depth <= budget, counted by Lambda - wt.
std::map<RootVector, int> count_crystal(const WeightVec& lam, int budget) {
  PathModel m(lam, PathKind::B1);
  GraphBudget b;
  b.max_depth = budget;
  b.follow_e = false;
  const auto g = generate_graph(m, m.ground(), b);
  std::map<RootVector, int> out;
  for (const auto& p : g.elements) {
    // content from any word reaching p
    const RootVector a = word_content(m.to_word(p), lam.rank());
    if (a.height() <= budget) ++out[a];
  }
  return out;
}

}  // namespace

TEST_CASE("colors") {
  CHECK(color_of(PatternKind::P1, 0, 1, 1, 2) == 2);
  CHECK(color_of(PatternKind::Pn, 1, 1, 4, 2) == 2);
  for (int k = 0; k <= 3; ++k) {
    CHECK(color_of(PatternKind::P1, k, 1, 0, 3) == k);
    CHECK(color_of(PatternKind::Pn, k, 1, 0, 3) == k);
  }
}

TEST_CASE("validate") {
  CHECK(validate(example_p1()).ok);
  CHECK(validate(example_pn()).ok);
  WallTuple swapped = example_p1();
  std::swap(swapped.heights[0], swapped.heights[1]);
  const auto r = validate(swapped);
  CHECK_FALSE(r.ok);
  CHECK(r.rule.find("interlac") != std::string::npos);
  const WallTuple bad{PatternKind::P1, 2, {0}, {{1, 2}}};
  CHECK_FALSE(validate(bad).ok);
  CHECK(validate(empty_walls(WeightVec{2, 1, 0}, PatternKind::P1)).ok);
}

TEST_CASE("column contents") {
  CHECK(column_content(example_p1(), 0) == RootVector{3, 3, 2});
  CHECK(column_content(example_p1(), 3) == RootVector{0, 1, 0});
  CHECK(wall_content(example_p1()) == RootVector{4, 7, 6});
  CHECK(wall_content(example_pn()) == RootVector{4, 7, 6});
  CHECK(column_content(empty_walls(WeightVec{2, 1, 0}, PatternKind::P1), 2) == RootVector{0, 0, 0});
  CHECK(lambda_of(example_p1()) == WeightVec{2, 1, 0});
}

TEST_CASE("F maps on the example") {
  const WeightVec lam{2, 1, 0};
  const Word w = parse_word("1^4 2^5 1^2 0^4 2 1");
  CHECK(F1(example_p1()) == from_word(lam, PathKind::B1, w));
  CHECK(Fn(example_pn()) == from_word(lam, PathKind::Bn, w));
  CHECK(F1(empty_walls(lam, PatternKind::P1)) == ground_path(lam, PathKind::B1));
  CHECK(Fn(empty_walls(lam, PatternKind::Pn)) == ground_path(lam, PathKind::Bn));
  CHECK(F1_invert(from_word(lam, PathKind::B1, w), RootVector{4, 7, 6}) == example_p1());
  CHECK(Fn_invert(from_word(lam, PathKind::Bn, w), RootVector{4, 7, 6}) == example_pn());
  CHECK(F1_invert(ground_path(lam, PathKind::B1), RootVector{0, 0, 0}) == empty_walls(lam, PatternKind::P1));
  CHECK_THROWS_AS(F1_invert(ground_path(lam, PathKind::B1), RootVector{1, 1, 1}), std::runtime_error);
}

TEST_CASE("strip_column0") {
  const auto [rest, beta] = strip_column0(example_p1());
  CHECK(rest.charges == std::vector<int>{0, 2, 2});
  CHECK(beta == RootVector{3, 3, 2});
  CHECK(lambda_of(rest) == WeightVec{1, 0, 2});
  CHECK(validate(rest).ok);
  const auto [rest_n, gamma] = strip_column0(example_pn());
  CHECK(lambda_of(rest_n) == WeightVec{0, 2, 1});
  CHECK(gamma == RootVector{3, 3, 3});
  const auto [e, z] = strip_column0(empty_walls(WeightVec{2, 1, 0}, PatternKind::P1));
  CHECK(z == RootVector{0, 0, 0});
  CHECK(e.total_blocks() == 0);
}

TEST_CASE("wall tuples are counted like B(Lambda)") {
  for (const WeightVec& lam : {WeightVec{1, 0}, WeightVec{1, 1}, WeightVec{2, 0}, WeightVec{1, 0, 0}, WeightVec{0, 1, 1}}) {
    const int budget = lam.rank() == 1 ? 6 : 5;
    const auto crystal = count_crystal(lam, budget);
    CHECK(count_tuples(lam, PatternKind::P1, budget) == crystal);
    CHECK(count_tuples(lam, PatternKind::Pn, budget) == crystal);
  }
}

TEST_CASE("inversion round trips on random words") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 3);
    const WeightVec lam = random_dominant(n, 1 + static_cast<int>(rng() % 3), rng);
    const Word w = random_word(lam, 12, rng);
    const RootVector a = word_content(w, n);
    const auto p1 = from_word(lam, PathKind::B1, w);
    const auto y = F1_invert(p1, a);
    CHECK(validate(y).ok);
    CHECK(wall_content(y) == a);
    CHECK(F1(y) == p1);
    const auto pn = from_word(lam, PathKind::Bn, w);
    const auto yb = Fn_invert(pn, a);
    CHECK(validate(yb).ok);
    CHECK(Fn(yb) == pn);
  }
}
