#include "affcrystal/crystal_iso.hpp"

#include <algorithm>
#include <stdexcept>

namespace affcrystal {

namespace {

using Seq = std::vector<RootVector>;

const RootVector& at(const Seq& s, int k) { return KernelTable::value(s, k); }

WeightVec b1_wt(const WeightVec& lambda, int k) {
  return B1Crystal(lambda.rank(), lambda.level()).weight(ground_b1(lambda, k));
}

WeightVec bn_wt(const WeightVec& lambda, int k) {
  return BnCrystal(lambda.rank(), lambda.level()).weight(ground_bn(lambda, k));
}

}  // namespace

int upsilon_positions(const KernelTable& kt, int n) {
  const std::size_t longest = std::max({kt.ker_x.size(), kt.ker_xbar.size(), kt.ker_xxbar.size(),
                                        kt.ker_xbar_xxbar.size()});
  return static_cast<int>(longest) + n + 2;
}

PathElem upsilon1(const KernelTable& kt, const WeightVec& lambda) {
  PathModel model(lambda, PathKind::B1);
  PathElem p = model.ground();
  const int ell = lambda.level();
  for (int i = 0; i < upsilon_positions(kt, lambda.rank()); ++i) {
    const WeightVec r = b1_wt(lambda, i) - cl_root(at(kt.ker_x, i + 1) - at(kt.ker_x, i));
    p.deviations.emplace_back(psi1(r, ell));
  }
  return model.normalize(std::move(p));
}

PathElem upsilonN(const KernelTable& kt, const WeightVec& lambda) {
  PathModel model(lambda, PathKind::Bn);
  PathElem p = model.ground();
  const int ell = lambda.level();
  for (int i = 0; i < upsilon_positions(kt, lambda.rank()); ++i) {
    const WeightVec s = bn_wt(lambda, i) - cl_root(at(kt.ker_xbar, i + 1) - at(kt.ker_xbar, i));
    p.deviations.emplace_back(psiN(s, ell));
  }
  return model.normalize(std::move(p));
}

std::pair<WeightVec, WeightVec> upsilonAd_weights(const KernelTable& kt, const WeightVec& lambda, int i) {
  const WeightVec r = b1_wt(rotate(lambda, -1), 0) - cl_root(at(kt.ker_xxbar, i + 1) - at(kt.ker_xbar_xxbar, i));
  const WeightVec s = bn_wt(lambda, 0) - cl_root(at(kt.ker_xbar_xxbar, i) - at(kt.ker_xxbar, i));
  return {r, s};
}

PathElem upsilonAd(const KernelTable& kt, const WeightVec& lambda) {
  PathModel model(lambda, PathKind::Ad);
  PathElem p = model.ground();
  for (int i = 0; i < upsilon_positions(kt, lambda.rank()); ++i) {
    const auto [r, s] = upsilonAd_weights(kt, lambda, i);
    p.deviations.emplace_back(psiAd(r, s, lambda.level()));
  }
  return model.normalize(std::move(p));
}

std::pair<WallTuple, B1Elem> phi1_step(const WallTuple& y) {
  if (y.kind != PatternKind::P1) throw std::invalid_argument("phi1_step needs a P1 tuple");
  const WeightVec lambda = lambda_of(y);
  auto [rest, beta] = strip_column0(y);
  return {rest, psi1(b1_wt(lambda, 0) - cl_root(beta), lambda.level())};
}

std::pair<WallTuple, BnElem> phiN_step(const WallTuple& ybar) {
  if (ybar.kind != PatternKind::Pn) throw std::invalid_argument("phiN_step needs a Pn tuple");
  const WeightVec lambda = lambda_of(ybar);
  auto [rest, gamma] = strip_column0(ybar);
  return {rest, psiN(bn_wt(lambda, 0) - cl_root(gamma), lambda.level())};
}

std::pair<WallTuple, AdjElem> phiAd_step(const WallTuple& y, const KernelTable& kt, const WeightVec& lambda) {
  if (y.kind != PatternKind::P1) throw std::invalid_argument("phiAd_step needs a P1 tuple");
  const auto [r, s] = upsilonAd_weights(kt, lambda, 0);
  const AdjElem factor = psiAd(r, s, lambda.level());
  // Drop position 0 of the adjoint path, then carry the shifted element
  // back to walls through its f-word.
  PathElem shifted = upsilonAd(kt, lambda);
  if (!shifted.deviations.empty()) shifted.deviations.erase(shifted.deviations.begin());
  PathModel ad(lambda, PathKind::Ad);
  shifted = ad.normalize(std::move(shifted));
  const Word w = ad.to_word(shifted);
  const PathElem p1 = PathModel(lambda, PathKind::B1).from_word(w);
  return {F1_invert(p1, word_content(w, lambda.rank())), factor};
}

Geometry compute_geometry(const WeightVec& lambda, const Word& word, std::uint64_t seed) {
  Geometry g;
  const int n = lambda.rank();
  g.alpha = word_content(word, n);
  g.p1 = from_word(lambda, PathKind::B1, word);
  g.pn = from_word(lambda, PathKind::Bn, word);
  g.pad = from_word(lambda, PathKind::Ad, word);
  g.y = F1_invert(g.p1, g.alpha);
  g.ybar = Fn_invert(g.pn, g.alpha);
  g.x_units = build_x(g.y);
  g.xbar_units = build_xbar(g.ybar);
  g.x = to_graded<Fp>(g.x_units);
  g.commutant = commutant_basis(g.x);
  g.table = kernel_table(g.x, g.commutant, seed);
  return g;
}

RootVector column_prefix(const WallTuple& y, int t) {
  RootVector r = RootVector::zero(y.n);
  for (int j = 0; j < t; ++j) r += column_content(y, j);
  return r;
}

int first_difference(const PathElem& a, const PathElem& b, int count) {
  PathModel ma(a.lambda, a.kind);
  PathModel mb(b.lambda, b.kind);
  for (int k = 0; k < count; ++k)
    if (!(ma.factor(a, k) == mb.factor(b, k))) return k;
  return -1;
}

IsoReport pipeline(const WeightVec& lambda, const Word& word, std::uint64_t seed) {
  IsoReport rep;
  rep.lambda = lambda;
  rep.word = word;
  rep.seed = seed;
  const Geometry g = compute_geometry(lambda, word, seed);
  rep.alpha = g.alpha;
  rep.direct[0] = g.p1;
  rep.direct[1] = g.pn;
  rep.direct[2] = g.pad;
  rep.y = g.y;
  rep.ybar = g.ybar;
  rep.x_units = g.x_units;
  rep.xbar_units = g.xbar_units;
  rep.commutant_dim = static_cast<int>(g.commutant.size());
  rep.table = g.table;
  for (const auto& a : g.table.anomalies) rep.messages.push_back("anomaly: " + a);

  rep.geometric[0] = upsilon1(g.table, lambda);
  rep.geometric[1] = upsilonN(g.table, lambda);
  rep.geometric[2] = upsilonAd(g.table, lambda);
  const int count = upsilon_positions(g.table, lambda.rank()) + static_cast<int>(g.p1.deviations.size()) +
                    static_cast<int>(g.pn.deviations.size()) + static_cast<int>(g.pad.deviations.size());
  const char* names[3] = {"B1", "Bn", "Ad"};
  bool paths_ok = true;
  for (int k = 0; k < 3; ++k) {
    rep.first_mismatch[k] = first_difference(rep.direct[k], rep.geometric[k], count);
    if (rep.first_mismatch[k] >= 0) {
      paths_ok = false;
      rep.messages.push_back(std::string(names[k]) + " paths differ at position " +
                             std::to_string(rep.first_mismatch[k]));
    }
  }

  rep.walls_roundtrip = F1(g.y) == g.p1 && Fn(g.ybar) == g.pn;
  if (!rep.walls_roundtrip) rep.messages.push_back("wall tuples do not map back to the paths");

  rep.bridge = true;
  const int cols = std::max(g.y.num_columns(), g.ybar.num_columns()) + 1;
  for (int t = 0; t <= cols; ++t) {
    if (at(g.table.ker_x, t) != column_prefix(g.y, t) || at(g.table.ker_xbar, t) != column_prefix(g.ybar, t)) {
      rep.bridge = false;
      rep.messages.push_back("kernel filtration differs from wall columns at t = " + std::to_string(t));
      break;
    }
  }

  const auto xbar = sample_generic(g.commutant, sample_seed(seed, 1000), g.alpha, -1);
  rep.stable = is_stable(g.x, xbar, sample_t(lambda, g.alpha, sample_seed(seed, 2000)));
  if (!rep.stable) rep.messages.push_back("sampled point is not stable");

  rep.ok = paths_ok && rep.walls_roundtrip && rep.bridge && rep.stable && g.table.anomalies.empty();
  return rep;
}

}  // namespace affcrystal
