#include "affcrystal/young_walls.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace affcrystal {

std::string pattern_name(PatternKind k) { return k == PatternKind::P1 ? "P1" : "Pn"; }

PatternKind parse_pattern(const std::string& s) {
  std::string t;
  for (char c : s) t += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (t == "p1") return PatternKind::P1;
  if (t == "pn") return PatternKind::Pn;
  throw std::invalid_argument("unknown pattern kind '" + s + "'");
}

int color_of(PatternKind kind, int charge, int i, int j, int n) {
  const int v = kind == PatternKind::P1 ? charge - j + i - 1 : charge + j - i + 1;
  return wrap_index(v, n + 1);
}

int WallTuple::num_columns() const {
  std::size_t m = 0;
  for (const auto& h : heights) m = std::max(m, h.size());
  return static_cast<int>(m);
}

int WallTuple::height(std::size_t wall, int j) const {
  const auto& h = heights.at(wall);
  return j < static_cast<int>(h.size()) ? h[j] : 0;
}

int WallTuple::total_blocks() const {
  int s = 0;
  for (const auto& h : heights)
    for (int v : h) s += v;
  return s;
}

WallTuple empty_walls(const WeightVec& lambda, PatternKind kind) {
  WallTuple w;
  w.kind = kind;
  w.n = lambda.rank();
  w.charges = decompose(lambda);
  w.heights.assign(w.charges.size(), {});
  return w;
}

WeightVec lambda_of(const WallTuple& w) { return compose_weight(w.n, w.charges); }

void trim(WallTuple& w) {
  for (auto& h : w.heights)
    while (!h.empty() && h.back() == 0) h.pop_back();
}

namespace {

std::string wall_pos(std::size_t wall, int j) {
  std::ostringstream os;
  os << "wall " << wall << " column " << j;
  return os.str();
}

// Interlacing between consecutive walls (cyclically) in one column.
bool interlace_ok(PatternKind kind, const std::vector<int>& c, const std::vector<int>& h, int n, std::size_t* bad) {
  const std::size_t L = c.size();
  for (std::size_t k = 1; k < L; ++k) {
    const bool ok = kind == PatternKind::P1 ? h[k - 1] <= h[k] + c[k] - c[k - 1] : h[k - 1] >= h[k] + c[k - 1] - c[k];
    if (!ok) {
      if (bad) *bad = k;
      return false;
    }
  }
  if (L > 0) {
    const bool ok = kind == PatternKind::P1 ? h[L - 1] <= h[0] + c[0] - c[L - 1] + n + 1
                                            : h[L - 1] >= h[0] + c[L - 1] - c[0] - n - 1;
    if (!ok) {
      if (bad) *bad = 0;
      return false;
    }
  }
  return true;
}

// Color set of left ends of rows of each length; returns a length t whose
// set is all of I, or 0.
int first_full_row_length(const WallTuple& w) {
  std::map<int, std::set<int>> ends;
  for (std::size_t k = 0; k < w.heights.size(); ++k) {
    const auto& h = w.heights[k];
    const int rows = h.empty() ? 0 : *std::max_element(h.begin(), h.end());
    for (int i = 1; i <= rows; ++i) {
      int t = 0;
      for (int v : h)
        if (v >= i) ++t;
      ends[t].insert(color_of(w.kind, w.charges[k], i, t - 1, w.n));
    }
  }
  for (const auto& [t, s] : ends)
    if (static_cast<int>(s.size()) == w.n + 1) return t;
  return 0;
}

}  // namespace

WallReport validate(const WallTuple& w) {
  auto fail = [](std::string rule, std::string wit) { return WallReport{false, std::move(rule), std::move(wit)}; };
  if (w.n < 1) return fail("shape", "n must be >= 1");
  if (w.heights.size() != w.charges.size()) return fail("shape", "one height list per charge required");
  for (std::size_t k = 0; k < w.charges.size(); ++k) {
    if (w.charges[k] < 0 || w.charges[k] > w.n) return fail("shape", "charge out of range at wall " + std::to_string(k));
    if (k && w.charges[k] < w.charges[k - 1]) return fail("shape", "charges must be ascending");
  }
  for (std::size_t k = 0; k < w.heights.size(); ++k) {
    const auto& h = w.heights[k];
    for (std::size_t j = 0; j < h.size(); ++j) {
      if (h[j] < 0) return fail("stacking", wall_pos(k, static_cast<int>(j)) + " has negative height");
      if (j + 1 < h.size() && h[j] < h[j + 1])
        return fail("stacking", wall_pos(k, static_cast<int>(j + 1)) + " is taller than the column to its right");
    }
  }
  const int cols = w.num_columns();
  std::vector<int> col(w.charges.size());
  for (int j = 0; j < cols; ++j) {
    for (std::size_t k = 0; k < col.size(); ++k) col[k] = w.height(k, j);
    std::size_t bad = 0;
    if (!interlace_ok(w.kind, w.charges, col, w.n, &bad)) {
      std::ostringstream os;
      os << "column " << j << " between walls " << (bad == 0 ? col.size() - 1 : bad - 1) << " and " << bad;
      return fail("interlacing", os.str());
    }
  }
  if (int t = first_full_row_length(w)) return fail("reduced", "rows of length " + std::to_string(t) + " end in every color");
  return {};
}

RootVector column_content(const WallTuple& w, int j) {
  RootVector r = RootVector::zero(w.n);
  for (std::size_t k = 0; k < w.heights.size(); ++k) {
    const int h = w.height(k, j);
    for (int i = 1; i <= h; ++i) ++r.k[color_of(w.kind, w.charges[k], i, j, w.n)];
  }
  return r;
}

RootVector wall_content(const WallTuple& w) {
  RootVector r = RootVector::zero(w.n);
  for (int j = 0; j < w.num_columns(); ++j) r += column_content(w, j);
  return r;
}

namespace {

PathElem walls_to_path(const WallTuple& w, PathKind kind) {
  const WeightVec lambda = lambda_of(w);
  PathModel model(lambda, kind);
  const int ell = lambda.level();
  PathElem p = model.ground();
  for (int j = 0; j < w.num_columns(); ++j) {
    const WeightVec target = model.factor_weight(model.ground_factor(j)) - cl_root(column_content(w, j));
    if (kind == PathKind::B1)
      p.deviations.emplace_back(psi1(target, ell));
    else
      p.deviations.emplace_back(psiN(target, ell));
  }
  return model.normalize(std::move(p));
}

}  // namespace

PathElem F1(const WallTuple& w) {
  if (w.kind != PatternKind::P1) throw std::invalid_argument("F1 needs a P1 tuple");
  return walls_to_path(w, PathKind::B1);
}

PathElem Fn(const WallTuple& w) {
  if (w.kind != PatternKind::Pn) throw std::invalid_argument("Fn needs a Pn tuple");
  return walls_to_path(w, PathKind::Bn);
}

PathElem wall_to_path(const WallTuple& w) { return w.kind == PatternKind::P1 ? F1(w) : Fn(w); }

namespace {

// Depth-first search over columns from the last deviation down to 0. The
// heights chosen for column j bound every column to its right from below,
// which gives the lower bound used for pruning against alpha.
class InverseSearch {
 public:
  InverseSearch(const PathElem& p, const RootVector& alpha)
      : kind_(p.kind == PathKind::B1 ? PatternKind::P1 : PatternKind::Pn),
        model_(p.lambda, p.kind),
        alpha_(alpha),
        n_(p.lambda.rank()) {
    charges_ = decompose(p.lambda);
    L_ = charges_.size();
    cols_ = static_cast<int>(p.deviations.size());
    for (int j = 0; j < cols_; ++j)
      targets_.push_back(model_.factor_weight(model_.ground_factor(j)) -
                         model_.factor_weight(model_.factor(p, j)));
  }

  std::vector<WallTuple> run() {
    if (static_cast<int>(alpha_.size()) != n_ + 1 || !alpha_.is_nonnegative())
      throw std::invalid_argument("F_invert: bad alpha");
    columns_.assign(cols_, std::vector<int>(L_, 0));
    column(cols_ - 1, RootVector::zero(n_));
    return solutions_;
  }

 private:
  int color(std::size_t w, int i, int j) const { return color_of(kind_, charges_[w], i, j, n_); }

  void column(int j, const RootVector& used) {
    if (solutions_.size() > 1) return;
    if (j < 0) {
      if (used == alpha_) finish();
      return;
    }
    std::vector<int> h(L_, 0);
    RootVector lb = used;
    assign(j, 0, h, lb, used);
  }

  // Chooses the height of wall w in column j. `lb` holds used plus the
  // blocks implied for columns 0..j by the walls chosen so far.
  void assign(int j, std::size_t w, std::vector<int>& h, RootVector& lb, const RootVector& used) {
    if (solutions_.size() > 1) return;
    if (w == L_) {
      if (!interlace_ok(kind_, charges_, h, n_, nullptr)) return;
      RootVector content = RootVector::zero(n_);
      for (std::size_t k = 0; k < L_; ++k)
        for (int i = 1; i <= h[k]; ++i) ++content.k[color(k, i, j)];
      if (cl_root(content) != targets_[j]) return;
      columns_[j] = h;
      column(j - 1, used + content);
      return;
    }
    int lo = j + 1 < cols_ ? columns_[j + 1][w] : 0;
    int hi = std::numeric_limits<int>::max();
    if (w > 0) {
      const int d = charges_[w] - charges_[w - 1];
      if (kind_ == PatternKind::P1)
        lo = std::max(lo, h[w - 1] - d);
      else
        hi = h[w - 1] + d;
    }
    RootVector extra = RootVector::zero(n_);
    // rows 1..lo of wall w across columns 0..j
    for (int i = 1; i <= lo; ++i)
      for (int jj = 0; jj <= j; ++jj) ++extra.k[color(w, i, jj)];
    for (int height = lo; height <= hi; ++height) {
      if (height > lo)
        for (int jj = 0; jj <= j; ++jj) ++extra.k[color(w, height, jj)];
      const RootVector bound = lb + extra;
      if (!bound.le(alpha_)) break;
      h[w] = height;
      RootVector next = bound;
      assign(j, w + 1, h, next, used);
    }
    h[w] = 0;
  }

  void finish() {
    WallTuple t;
    t.kind = kind_;
    t.n = n_;
    t.charges = charges_;
    t.heights.assign(L_, {});
    for (std::size_t w = 0; w < L_; ++w)
      for (int j = 0; j < cols_; ++j) t.heights[w].push_back(columns_[j][w]);
    trim(t);
    if (first_full_row_length(t) != 0) return;
    solutions_.push_back(std::move(t));
  }

  PatternKind kind_;
  PathModel model_;
  RootVector alpha_;
  int n_;
  std::vector<int> charges_;
  std::size_t L_ = 0;
  int cols_ = 0;
  std::vector<WeightVec> targets_;
  std::vector<std::vector<int>> columns_;
  std::vector<WallTuple> solutions_;
};

}  // namespace

WallTuple invert_path(const PathElem& p, const RootVector& alpha) {
  if (p.kind == PathKind::Ad) throw std::invalid_argument("F_invert: adjoint paths have no wall model");
  auto sols = InverseSearch(p, alpha).run();
  if (sols.size() != 1)
    throw std::runtime_error("F_invert: expected exactly one wall tuple, found " +
                             std::string(sols.empty() ? "none" : "several"));
  return sols.front();
}

WallTuple F1_invert(const PathElem& p, const RootVector& alpha) {
  if (p.kind != PathKind::B1) throw std::invalid_argument("F1_invert needs a B1 path");
  return invert_path(p, alpha);
}

WallTuple Fn_invert(const PathElem& p, const RootVector& alpha) {
  if (p.kind != PathKind::Bn) throw std::invalid_argument("Fn_invert needs a Bn path");
  return invert_path(p, alpha);
}

std::pair<WallTuple, RootVector> strip_column0(const WallTuple& w) {
  RootVector beta = column_content(w, 0);
  const int size = w.n + 1;
  std::vector<std::pair<int, std::vector<int>>> walls;
  for (std::size_t k = 0; k < w.charges.size(); ++k) {
    std::vector<int> h = w.heights[k];
    if (!h.empty()) h.erase(h.begin());
    const int c = wrap_index(w.charges[k] + (w.kind == PatternKind::P1 ? -1 : 1), size);
    walls.emplace_back(c, std::move(h));
  }
  // Walls that wrapped around move to the other end; stable otherwise.
  std::stable_sort(walls.begin(), walls.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  WallTuple out;
  out.kind = w.kind;
  out.n = w.n;
  for (auto& [c, h] : walls) {
    out.charges.push_back(c);
    out.heights.push_back(std::move(h));
  }
  trim(out);
  if (auto rep = validate(out); !rep.ok)
    throw std::logic_error("strip_column0: result invalid (" + rep.rule + ": " + rep.witness + ")");
  return {out, beta};
}

}  // namespace affcrystal
