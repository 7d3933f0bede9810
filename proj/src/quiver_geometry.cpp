#include "affcrystal/quiver_geometry.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace affcrystal {

std::string unit_string(const MatrixUnit& u) {
  std::ostringstream os;
  os << (u.dir == MatrixUnit::Dir::x ? "E" : "Ebar") << "^" << u.s << "_{" << u.from << "," << u.to << "}";
  return os.str();
}

namespace {

struct BlockIndex {
  std::map<std::tuple<std::size_t, int, int>, int> o;  // (wall, row, column) -> o
  RootVector count;
};

BlockIndex index_blocks(const WallTuple& y) {
  BlockIndex idx;
  idx.count = RootVector::zero(y.n);
  for (std::size_t w = 0; w < y.heights.size(); ++w) {
    const auto& h = y.heights[w];
    const int rows = h.empty() ? 0 : *std::max_element(h.begin(), h.end());
    for (int i = 1; i <= rows; ++i)
      for (int j = 0; j < static_cast<int>(h.size()); ++j) {
        if (h[j] < i) continue;
        const int c = color_of(y.kind, y.charges[w], i, j, y.n);
        idx.o[{w, i, j}] = idx.count.k[c]++;
      }
  }
  return idx;
}

WallMatrix build_units(const WallTuple& y, MatrixUnit::Dir dir) {
  if (auto rep = validate(y); !rep.ok) throw std::invalid_argument("wall tuple invalid: " + rep.rule + ": " + rep.witness);
  const auto idx = index_blocks(y);
  WallMatrix out;
  out.alpha = idx.count;
  out.degree = dir == MatrixUnit::Dir::x ? +1 : -1;
  for (const auto& [key, o] : idx.o) {
    const auto [w, i, j] = key;
    if (j == 0) continue;
    MatrixUnit u;
    u.dir = dir;
    u.s = color_of(y.kind, y.charges[w], i, dir == MatrixUnit::Dir::x ? j - 1 : j, y.n);
    u.from = o;
    u.to = idx.o.at({w, i, j - 1});
    out.units.push_back(u);
  }
  std::sort(out.units.begin(), out.units.end());
  return out;
}

}  // namespace

WallMatrix build_x(const WallTuple& y) {
  if (y.kind != PatternKind::P1) throw std::invalid_argument("build_x needs a P1 tuple");
  return build_units(y, MatrixUnit::Dir::x);
}

WallMatrix build_xbar(const WallTuple& ybar) {
  if (ybar.kind != PatternKind::Pn) throw std::invalid_argument("build_xbar needs a Pn tuple");
  return build_units(ybar, MatrixUnit::Dir::xbar);
}

std::uint64_t sample_seed(std::uint64_t base, int k) {
  std::seed_seq seq{static_cast<std::uint32_t>(base), static_cast<std::uint32_t>(base >> 32),
                    static_cast<std::uint32_t>(k)};
  std::uint32_t words[2];
  seq.generate(words, words + 2);
  return (static_cast<std::uint64_t>(words[0]) << 32) | words[1];
}

GradedMap<Fp> sample_generic(const std::vector<GradedMap<Fp>>& basis, std::uint64_t seed, const RootVector& alpha,
                             int degree) {
  auto out = GradedMap<Fp>::zero(alpha, degree);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> dist(0, Fp::P - 1);
  for (const auto& b : basis) {
    const Fp c = Fp::raw(dist(rng));
    for (std::size_t k = 0; k < out.blocks.size(); ++k)
      for (int r = 0; r < out.blocks[k].rows(); ++r)
        for (int col = 0; col < out.blocks[k].cols(); ++col) out.blocks[k](r, col) += c * b.blocks[k](r, col);
  }
  return out;
}

const RootVector& KernelTable::value(const std::vector<RootVector>& seq, int k) {
  if (seq.empty()) throw std::out_of_range("KernelTable: empty sequence");
  return seq[std::min<std::size_t>(static_cast<std::size_t>(std::max(k, 0)), seq.size() - 1)];
}

namespace {

using Seq = std::vector<RootVector>;

// Fixed-length sequences so that samples can be compared entrywise.
struct RawTable {
  Seq x, xbar, xxbar, xbar_xxbar, xbarx;
  friend bool operator==(const RawTable&, const RawTable&) = default;
};

Seq kernels_of_powers(const GradedMap<Fp>& pre, const GradedMap<Fp>& m, int len) {
  Seq out;
  GradedMap<Fp> acc = pre;
  for (int k = 0; k < len; ++k) {
    out.push_back(kernel_dims(acc));
    acc = compose(acc, m);
  }
  return out;
}

RawTable raw_table(const GradedMap<Fp>& x, const GradedMap<Fp>& xbar, int len) {
  const auto id = GradedMap<Fp>::identity(x.dims);
  const auto xxb = compose(x, xbar);
  const auto xbx = compose(xbar, x);
  RawTable t;
  t.x = kernels_of_powers(id, x, len);
  t.xbar = kernels_of_powers(id, xbar, len);
  t.xxbar = kernels_of_powers(id, xxb, len);
  t.xbar_xxbar = kernels_of_powers(xbar, xxb, len);
  t.xbarx = kernels_of_powers(id, xbx, len);
  return t;
}

Seq until_stable(const Seq& s) {
  Seq out;
  for (const auto& v : s) {
    if (!out.empty() && out.back() == v) break;
    out.push_back(v);
  }
  return out;
}

KernelTable finish(const RawTable& t, const RootVector& alpha) {
  KernelTable kt;
  kt.alpha = alpha;
  kt.ker_x = until_stable(t.x);
  kt.ker_xbar = until_stable(t.xbar);
  kt.ker_xxbar = until_stable(t.xxbar);
  kt.ker_xbar_xxbar = until_stable(t.xbar_xxbar);
  kt.ker_xbarx = until_stable(t.xbarx);
  if (kt.ker_x.back() != alpha) kt.anomalies.push_back("x is not nilpotent");
  if (kt.ker_xbar.back() != alpha) kt.anomalies.push_back("sampled xbar is not nilpotent");
  if (kt.ker_xxbar != kt.ker_xbarx) kt.anomalies.push_back("ker (x xbar)^k differs from ker (xbar x)^k");
  return kt;
}

Seq seq_min(const Seq& a, const Seq& b) {
  Seq out = a;
  for (std::size_t k = 0; k < out.size(); ++k)
    for (std::size_t i = 0; i < out[k].size(); ++i) out[k].k[i] = std::min(a[k].k[i], b[k].k[i]);
  return out;
}

RawTable raw_min(const RawTable& a, const RawTable& b) {
  return {seq_min(a.x, b.x), seq_min(a.xbar, b.xbar), seq_min(a.xxbar, b.xxbar), seq_min(a.xbar_xxbar, b.xbar_xxbar),
          seq_min(a.xbarx, b.xbarx)};
}

int table_len(const RootVector& alpha) { return alpha.height() + 2; }

}  // namespace

KernelTable kernel_table_at(const GradedMap<Fp>& x, const GradedMap<Fp>& xbar) {
  if (!check_moment(x, xbar)) throw std::invalid_argument("kernel_table: [x, xbar] != 0");
  return finish(raw_table(x, xbar, table_len(x.dims)), x.dims);
}

KernelTable kernel_table(const GradedMap<Fp>& x, const std::vector<GradedMap<Fp>>& basis, std::uint64_t seed,
                         const SamplingPolicy& policy) {
  const int len = table_len(x.dims);
  std::vector<RawTable> samples;
  std::vector<std::uint64_t> seeds;
  const int max_draws = std::max(policy.min_samples, 2) + policy.max_resamples;
  for (int k = 0; k < max_draws; ++k) {
    const std::uint64_t s = sample_seed(seed, k);
    const auto xbar = sample_generic(basis, s, x.dims, -x.degree);
    if (!check_moment(x, xbar)) throw std::logic_error("kernel_table: commutant sample does not commute with x");
    samples.push_back(raw_table(x, xbar, len));
    seeds.push_back(s);
    if (static_cast<int>(samples.size()) < policy.min_samples) continue;
    RawTable lo = samples.front();
    for (const auto& t : samples) lo = raw_min(lo, t);
    const auto hits = std::count(samples.begin(), samples.end(), lo);
    if (hits >= 2) {
      KernelTable kt = finish(lo, x.dims);
      kt.seeds = seeds;
      return kt;
    }
  }
  throw std::runtime_error("kernel_table: generic samples disagree after resampling");
}

std::vector<MatFp> sample_t(const WeightVec& lambda, const RootVector& alpha, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> dist(0, Fp::P - 1);
  std::vector<MatFp> t;
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    MatFp m(lambda.a.at(i), alpha[i]);
    for (int r = 0; r < m.rows(); ++r)
      for (int c = 0; c < m.cols(); ++c) m(r, c) = Fp::raw(dist(rng));
    t.push_back(std::move(m));
  }
  return t;
}

bool is_stable(const GradedMap<Fp>& x, const GradedMap<Fp>& xbar, const std::vector<MatFp>& t) {
  const auto off = x.offsets();
  const int dim = off.back();
  if (dim == 0) return true;
  int wdim = 0;
  for (const auto& ti : t) wdim += ti.rows();
  MatFp stacked(2 * dim + wdim, dim);
  const auto dx = x.dense();
  const auto dxb = xbar.dense();
  for (int r = 0; r < dim; ++r)
    for (int c = 0; c < dim; ++c) {
      stacked(r, c) = dx(r, c);
      stacked(dim + r, c) = dxb(r, c);
    }
  int row = 2 * dim;
  for (std::size_t i = 0; i < t.size(); ++i) {
    for (int r = 0; r < t[i].rows(); ++r, ++row)
      for (int c = 0; c < t[i].cols(); ++c) stacked(row, off[i] + c) = t[i](r, c);
  }
  return rank(stacked) == dim;
}

}  // namespace affcrystal
