#include <doctest.h>

#include <random>

#include "affcrystal/linalg_exact.hpp"

using namespace affcrystal;

namespace {

MatQ random_int_matrix(int r, int c, int range, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> d(-range, range);
  MatQ m(r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) m(i, j) = d(rng);
  return m;
}

// Integer determinant by cofactor expansion.
long long det(const std::vector<std::vector<long long>>& a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  long long s = 0;
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<std::vector<long long>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<long long> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(a[r][k]);
      minor.push_back(row);
    }
    s += (c % 2 ? -1 : 1) * a[0][c] * det(minor);
  }
  return s;
}

// Rank as the largest nonzero minor, brute force.
int minor_rank(const MatQ& m) {
  const int r = m.rows(), c = m.cols();
  int best = 0;
  for (unsigned rows = 0; rows < (1u << r); ++rows)
    for (unsigned cols = 0; cols < (1u << c); ++cols) {
      const int k = __builtin_popcount(rows);
      if (k != __builtin_popcount(cols) || k <= best) continue;
      std::vector<std::vector<long long>> sub;
      for (int i = 0; i < r; ++i) {
        if (!(rows >> i & 1)) continue;
        std::vector<long long> row;
        for (int j = 0; j < c; ++j)
          if (cols >> j & 1) row.push_back(m(i, j).get_num().get_si());
        sub.push_back(row);
      }
      if (det(sub) != 0) best = k;
    }
  return best;
}

}  // namespace

TEST_CASE("Fp arithmetic") {
  CHECK(Fp(-1).v == Fp::P - 1);
  CHECK(Fp(static_cast<long long>(Fp::P)).v == 0);
  CHECK((Fp(5) * Fp(7)).v == 35);
  CHECK((Fp(3) - Fp(5)) == Fp(-2));
  CHECK(Fp(2).pow(31) == Fp(1));
  std::mt19937_64 rng(9);
  for (int t = 0; t < 200; ++t) {
    const Fp a = Fp::raw(rng()), b = Fp::raw(rng()), c = Fp::raw(rng());
    CHECK((a + b) * c == a * c + b * c);
    if (!is_zero(a)) CHECK(a * a.inverse() == Fp(1));
    CHECK(a.pow(Fp::P - 1) == (is_zero(a) ? Fp(0) : Fp(1)));
  }
  CHECK_THROWS(Fp(0).inverse());
  CHECK_THROWS(inverse(mpq_class(0)));
}

TEST_CASE("rank over F_p and Q agrees with minors") {
  std::mt19937_64 rng(4);
  for (int t = 0; t < 150; ++t) {
    const int r = 1 + static_cast<int>(rng() % 5), c = 1 + static_cast<int>(rng() % 5);
    MatQ m = random_int_matrix(r, c, 2, rng);
    // force some dependencies
    if (r > 2 && t % 2)
      for (int j = 0; j < c; ++j) m(r - 1, j) = m(0, j) - 2 * m(1, j);
    const int expect = minor_rank(m);
    CHECK(rank(m) == expect);
    CHECK(rank(reduce_mod_p(m)) == expect);
    CHECK(nullity(m) == c - expect);
  }
}

TEST_CASE("rank over Q with fractions") {
  MatQ m(2, 2);
  m(0, 0) = mpq_class(1, 3);
  m(0, 1) = mpq_class(1, 2);
  m(1, 0) = mpq_class(2, 3);
  m(1, 1) = 1;
  CHECK(rank(m) == 1);
  m(1, 1) = mpq_class(5, 7);
  CHECK(rank(m) == 2);
  CHECK(rank(MatQ(0, 3)) == 0);
}

TEST_CASE("nullspace vectors are killed") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 60; ++t) {
    MatQ m = random_int_matrix(3, 6, 3, rng);
    const auto basis = nullspace_basis(m);
    CHECK(static_cast<int>(basis.size()) == 6 - rank(m));
    for (const auto& v : basis)
      for (int i = 0; i < 3; ++i) {
        mpq_class s = 0;
        for (int j = 0; j < 6; ++j) s += m(i, j) * v[j];
        CHECK(s == 0);
      }
    const MatFp mp = reduce_mod_p(m);
    for (const auto& v : nullspace_basis(mp))
      for (int i = 0; i < 3; ++i) {
        Fp s = 0;
        for (int j = 0; j < 6; ++j) s += mp(i, j) * v[j];
        CHECK(is_zero(s));
      }
  }
}

TEST_CASE("mod p reduction") {
  MatQ m(1, 2);
  m(0, 0) = mpq_class(1, 2);
  m(0, 1) = -3;
  const MatFp r = reduce_mod_p(m);
  CHECK(r(0, 0) * Fp(2) == Fp(1));
  CHECK(r(0, 1) == Fp(-3));
  CHECK(to_rational(r)(0, 1) == mpq_class(static_cast<long>(Fp::P - 3)));
  m(0, 0) = mpq_class(1, static_cast<long>(Fp::P));
  CHECK_THROWS(reduce_mod_p(m));
}

TEST_CASE("graded maps") {
  const RootVector alpha{2, 1, 1};
  // cyclic shift of degree +1: V_0 -> V_1 -> V_2 -> V_0
  auto x = GradedMap<Fp>::zero(alpha, 1);
  CHECK(x.blocks[1].rows() == 1);
  CHECK(x.blocks[1].cols() == 2);
  CHECK(x.blocks[0].rows() == 2);
  CHECK(x.blocks[0].cols() == 1);
  x.blocks[1](0, 0) = 1;  // v0_0 -> v1
  x.blocks[2](0, 0) = 1;  // v1 -> v2
  x.blocks[0](1, 0) = 1;  // v2 -> v0_1
  CHECK(kernel_dims(x) == RootVector{1, 0, 0});
  const auto x2 = power(x, 2);
  CHECK(x2.dense() == x.dense() * x.dense());
  CHECK(kernel_dims(x2) == RootVector{1, 0, 1});
  CHECK(power(x, 4).is_zero_map());
  CHECK_FALSE(power(x, 3).is_zero_map());
  CHECK(power(x, 0) == GradedMap<Fp>::identity(alpha));
  CHECK(compose(x, GradedMap<Fp>::identity(alpha)) == x);

  auto y = GradedMap<Fp>::zero(alpha, -1);
  y.blocks[0](0, 0) = 1;  // v1 -> v0_0
  const auto c = commutator(x, y);
  CHECK(c.dense() == x.dense() * y.dense() - y.dense() * x.dense());
  CHECK(c.degree == 0);
  CHECK_THROWS(compose(x, GradedMap<Fp>::zero(RootVector{1, 1, 1}, 1)));
}

TEST_CASE("rref pivots") {
  MatFp m(2, 3);
  m(0, 1) = 2;
  m(1, 1) = 4;
  m(1, 2) = 1;
  const auto piv = rref(m);
  CHECK(piv == std::vector<int>{1, 2});
  CHECK(m(0, 1) == Fp(1));
  CHECK(is_zero(m(1, 1)));
}
