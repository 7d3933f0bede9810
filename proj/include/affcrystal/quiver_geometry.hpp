#pragma once

// Quiver data attached to wall tuples: the nilpotent maps x(Y), xbar(Ybar),
// the commutant [x, xbar] = 0, generic samples, kernel filtrations and the
// stability test.

#include <cstdint>
#include <string>
#include <vector>

#include "affcrystal/cartan.hpp"
#include "affcrystal/linalg_exact.hpp"
#include "affcrystal/young_walls.hpp"

namespace affcrystal {

/// dir x: E^s sends v^{s-1}_from to v^s_to. dir xbar: Ebar^s sends v^s_from
/// to v^{s-1}_to.
struct MatrixUnit {
  enum class Dir { x, xbar };
  Dir dir = Dir::x;
  int s = 0;
  int from = 0;
  int to = 0;
  friend bool operator==(const MatrixUnit&, const MatrixUnit&) = default;
  friend auto operator<=>(const MatrixUnit&, const MatrixUnit&) = default;
};

std::string unit_string(const MatrixUnit& u);

struct WallMatrix {
  RootVector alpha;
  int degree = +1;                // +1 for x, -1 for xbar
  std::vector<MatrixUnit> units;  // sorted
};

/// Each block gets index o = number of earlier blocks of its color in the
/// order (wall, row, column). Emits one unit per block in a column j > 0,
/// pointing at its neighbour in column j-1.
WallMatrix build_x(const WallTuple& y);
WallMatrix build_xbar(const WallTuple& ybar);

template <class F>
GradedMap<F> to_graded(const WallMatrix& w) {
  auto g = GradedMap<F>::zero(w.alpha, w.degree);
  const int size = static_cast<int>(w.alpha.size());
  for (const auto& u : w.units) {
    const int block = u.dir == MatrixUnit::Dir::x ? u.s : wrap_index(u.s - 1, size);
    g.blocks[block](u.to, u.from) = F(1);
  }
  return g;
}

/// Basis of {y of degree -deg(m) : [m, y] = 0}, solved as one linear
/// system in the entries of y.
template <class F>
std::vector<GradedMap<F>> commutant_basis(const GradedMap<F>& m) {
  const int size = m.n + 1;
  const int dy = -m.degree;
  const auto proto = GradedMap<F>::zero(m.dims, dy);
  // unknown offsets per block of y
  std::vector<int> uoff{0};
  for (int b = 0; b < size; ++b) uoff.push_back(uoff.back() + proto.blocks[b].rows() * proto.blocks[b].cols());
  const int unknowns = uoff.back();
  auto uidx = [&](int b, int r, int c) { return uoff[b] + r * proto.blocks[b].cols() + c; };
  int equations = 0;
  for (int i = 0; i < size; ++i) equations += m.dims[i] * m.dims[i];
  Matrix<F> sys(equations, unknowns);
  int row = 0;
  for (int i = 0; i < size; ++i) {
    // (m o y)_i = m_i y_{i - dm},  (y o m)_i = y_i m_{i - dy}
    const int bm = wrap_index(i - m.degree, size);
    const auto& mi = m.blocks[i];
    const auto& mlow = m.blocks[wrap_index(i - dy, size)];
    for (int r = 0; r < m.dims[i]; ++r)
      for (int c = 0; c < m.dims[i]; ++c, ++row) {
        for (int t = 0; t < mi.cols(); ++t)
          if (!is_zero(mi(r, t))) sys(row, uidx(bm, t, c)) += mi(r, t);
        for (int t = 0; t < mlow.rows(); ++t)
          if (!is_zero(mlow(t, c))) sys(row, uidx(i, r, t)) -= mlow(t, c);
      }
  }
  std::vector<GradedMap<F>> out;
  for (const auto& v : nullspace_basis(sys)) {
    auto y = proto;
    for (int b = 0; b < size; ++b)
      for (int r = 0; r < y.blocks[b].rows(); ++r)
        for (int c = 0; c < y.blocks[b].cols(); ++c) y.blocks[b](r, c) = v[uidx(b, r, c)];
    out.push_back(std::move(y));
  }
  return out;
}

/// Random F_p combination of the basis; deterministic in the seed. An
/// empty basis gives the zero map with the given shape.
GradedMap<Fp> sample_generic(const std::vector<GradedMap<Fp>>& basis, std::uint64_t seed,
                             const RootVector& alpha, int degree);

template <class F>
bool check_moment(const GradedMap<F>& x, const GradedMap<F>& xbar) {
  return commutator(x, xbar).is_zero_map();
}

template <class F>
bool is_nilpotent(const GradedMap<F>& m) {
  return power(m, std::max(1, m.dims.height())).is_zero_map();
}

/// Graded kernel dimensions along the four filtrations, k = 0, 1, ...
/// Each sequence stops at its first repeated value; value() clamps.
struct KernelTable {
  RootVector alpha;
  std::vector<RootVector> ker_x;
  std::vector<RootVector> ker_xbar;
  std::vector<RootVector> ker_xxbar;        // (x xbar)^k
  std::vector<RootVector> ker_xbar_xxbar;   // xbar (x xbar)^k
  std::vector<RootVector> ker_xbarx;        // (xbar x)^k, kept for the check ker (x xbar)^k = ker (xbar x)^k
  std::vector<std::uint64_t> seeds;         // samples drawn for this table
  std::vector<std::string> anomalies;       // e.g. a non-nilpotent generic sample

  static const RootVector& value(const std::vector<RootVector>& seq, int k);
  friend bool operator==(const KernelTable& a, const KernelTable& b) {
    return a.alpha == b.alpha && a.ker_x == b.ker_x && a.ker_xbar == b.ker_xbar && a.ker_xxbar == b.ker_xxbar &&
           a.ker_xbar_xxbar == b.ker_xbar_xxbar && a.ker_xbarx == b.ker_xbarx;
  }
};

/// Table at one point. Throws std::invalid_argument if [x, xbar] != 0.
KernelTable kernel_table_at(const GradedMap<Fp>& x, const GradedMap<Fp>& xbar);

struct SamplingPolicy {
  int min_samples = 3;
  int max_resamples = 10;
};

/// Generic table for the component through x: componentwise minimum over
/// samples of xbar from the commutant; the two smallest samples must agree.
/// Throws std::runtime_error when they keep disagreeing.
KernelTable kernel_table(const GradedMap<Fp>& x, const std::vector<GradedMap<Fp>>& basis, std::uint64_t seed,
                         const SamplingPolicy& policy = {});

/// t_i : V_i -> W_i with dim W_i = Lambda(h_i); entries uniform in F_p.
std::vector<MatFp> sample_t(const WeightVec& lambda, const RootVector& alpha, std::uint64_t seed);
/// ker x cap ker xbar cap ker t = 0.
bool is_stable(const GradedMap<Fp>& x, const GradedMap<Fp>& xbar, const std::vector<MatFp>& t);

/// Derived seed for sample k of a run with base seed s.
std::uint64_t sample_seed(std::uint64_t base, int k);

}  // namespace affcrystal
