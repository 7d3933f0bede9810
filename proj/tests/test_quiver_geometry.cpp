#include <doctest.h>

#include "affcrystal/crystal_iso.hpp"
#include "affcrystal/verify.hpp"

using namespace affcrystal;

namespace {

std::vector<std::string> unit_strings(const WallMatrix& w) {
  std::vector<std::string> out;
  for (const auto& u : w.units) out.push_back(unit_string(u));
  return out;
}

// dim {y of degree -d : xy = yx} from the dense operator y -> xy - yx.
int commutant_dim_dense(const GradedMap<Fp>& x) {
  const auto proto = GradedMap<Fp>::zero(x.dims, -x.degree);
  const auto off = proto.offsets();
  const int dim = off.back();
  const MatFp X = x.dense();
  std::vector<std::pair<int, int>> slots;  // allowed (row, col) of y
  for (int i = 0; i <= proto.n; ++i) {
    const int s = proto.source(i);
    for (int r = 0; r < proto.dims[i]; ++r)
      for (int c = 0; c < proto.dims[s]; ++c) slots.emplace_back(off[i] + r, off[s] + c);
  }
  MatFp op(dim * dim, static_cast<int>(slots.size()));
  for (std::size_t k = 0; k < slots.size(); ++k) {
    MatFp y(dim, dim);
    y(slots[k].first, slots[k].second) = 1;
    const MatFp c = X * y - y * X;
    for (int a = 0; a < dim; ++a)
      for (int b = 0; b < dim; ++b) op(a * dim + b, static_cast<int>(k)) = c(a, b);
  }
  return static_cast<int>(slots.size()) - rank(op);
}

const Geometry& example() {
  static const Geometry g = compute_geometry(example_lambda(), example_word(), 0);
  return g;
}

}  // namespace

TEST_CASE("matrix units of the worked example") {
  const auto& g = example();
  CHECK(g.alpha == RootVector{4, 7, 6});
  CHECK(unit_strings(g.x_units) == std::vector<std::string>{"E^0_{0,0}", "E^0_{1,1}", "E^0_{3,2}", "E^0_{5,3}",
                                                             "E^1_{2,4}", "E^2_{0,0}", "E^2_{2,1}", "E^2_{5,3}",
                                                             "E^2_{6,4}"});
  CHECK(unit_strings(g.xbar_units) ==
        std::vector<std::string>{"Ebar^0_{2,3}", "Ebar^1_{0,0}", "Ebar^1_{2,1}", "Ebar^1_{5,2}", "Ebar^1_{6,3}",
                                 "Ebar^2_{0,0}", "Ebar^2_{3,4}", "Ebar^2_{4,5}"});
  CHECK(g.x_units.degree == 1);
  CHECK(g.xbar_units.degree == -1);
}

TEST_CASE("units send blocks to their left neighbours") {
  const auto& g = example();
  // one unit per block outside column 0
  const int blocks = g.y.total_blocks();
  int col0 = 0;
  for (int c : column_content(g.y, 0).k) col0 += c;
  CHECK(static_cast<int>(g.x_units.units.size()) == blocks - col0);
  for (const auto& u : g.x_units.units) {
    CHECK(u.from < g.alpha[wrap_index(u.s - 1, 3)]);
    CHECK(u.to < g.alpha[u.s]);
  }
}

TEST_CASE("commutant dimension") {
  const auto& g = example();
  CHECK(g.commutant.size() == 29);
  CHECK(commutant_dim_dense(g.x) == 29);
  CHECK(commutant_basis(to_graded<mpq_class>(g.x_units)).size() == 29);
  for (const auto& y : g.commutant) CHECK(check_moment(g.x, y));
}

TEST_CASE("the wall pair itself") {
  const auto& g = example();
  const auto x = to_graded<Fp>(g.x_units);
  const auto xbar = to_graded<Fp>(g.xbar_units);
  CHECK(is_nilpotent(x));
  CHECK(is_nilpotent(xbar));
  // x(Y) and xbar(Ybar) do not commute; only the generic xbar does
  CHECK_FALSE(check_moment(x, xbar));
  CHECK_FALSE(check_moment(to_graded<mpq_class>(g.x_units), to_graded<mpq_class>(g.xbar_units)));
  CHECK(kernel_dims(x) == column_prefix(g.y, 1));
  CHECK(kernel_dims(xbar) == column_prefix(g.ybar, 1));
}

TEST_CASE("generic kernel table of the worked example") {
  using V = std::vector<RootVector>;
  for (std::uint64_t seed : {0ULL, 1ULL, 2ULL, 977ULL}) {
    const auto t = kernel_table(example().x, example().commutant, seed);
    CHECK(t.ker_x == V{{0, 0, 0}, {3, 3, 2}, {4, 4, 5}, {4, 6, 6}, {4, 7, 6}});
    CHECK(t.ker_xbar == V{{0, 0, 0}, {3, 3, 3}, {3, 6, 4}, {4, 6, 5}, {4, 7, 5}, {4, 7, 6}});
    CHECK(t.ker_xxbar == V{{0, 0, 0}, {4, 6, 5}, {4, 7, 6}});
    CHECK(t.ker_xbar_xxbar == V{{3, 3, 3}, {4, 7, 5}, {4, 7, 6}});
    CHECK(t.ker_xbarx == t.ker_xxbar);
    CHECK(t.anomalies.empty());
    CHECK(t.seeds.size() >= 3);
    CHECK(KernelTable::value(t.ker_x, 100) == RootVector{4, 7, 6});
    CHECK(KernelTable::value(t.ker_x, 1) == RootVector{3, 3, 2});
  }
}

TEST_CASE("kernel tables need commuting maps") {
  const auto& g = example();
  auto bad = GradedMap<Fp>::zero(g.alpha, -1);
  bad.blocks[0](0, 0) = 1;
  if (!check_moment(g.x, bad)) CHECK_THROWS_AS(kernel_table_at(g.x, bad), std::invalid_argument);
}

TEST_CASE("sampling is deterministic") {
  CHECK(sample_seed(5, 0) == sample_seed(5, 0));
  CHECK(sample_seed(5, 0) != sample_seed(5, 1));
  CHECK(sample_seed(5, 0) != sample_seed(6, 0));
  const auto& g = example();
  const auto a = sample_generic(g.commutant, 11, g.alpha, -1);
  const auto b = sample_generic(g.commutant, 11, g.alpha, -1);
  CHECK(a == b);
  CHECK(check_moment(g.x, a));
  const auto z = sample_generic({}, 11, g.alpha, -1);
  CHECK(z.is_zero_map());
}

TEST_CASE("stability") {
  const auto& g = example();
  const auto xbar = sample_generic(g.commutant, 3, g.alpha, -1);
  CHECK(is_stable(g.x, xbar, sample_t(example_lambda(), g.alpha, 3)));
  // with t = 0 the common kernel of x and xbar is nonzero
  std::vector<MatFp> zero_t;
  for (int i = 0; i <= 2; ++i) zero_t.emplace_back(example_lambda()[i], g.alpha[i]);
  CHECK_FALSE(is_stable(g.x, xbar, zero_t));
  const auto t = sample_t(example_lambda(), g.alpha, 3);
  CHECK(t[0].rows() == 2);
  CHECK(t[1].rows() == 1);
  CHECK(t[2].rows() == 0);
}

TEST_CASE("empty wall gives the zero quiver") {
  const WallTuple y = empty_walls(WeightVec{1, 1}, PatternKind::P1);
  const auto w = build_x(y);
  CHECK(w.units.empty());
  CHECK(w.alpha == RootVector{0, 0});
  const auto x = to_graded<Fp>(w);
  const auto t = kernel_table(x, commutant_basis(x), 0);
  CHECK(KernelTable::value(t.ker_x, 3) == RootVector{0, 0});
}
