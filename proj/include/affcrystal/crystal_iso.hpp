#pragma once

// Paths read off kernel tables, the column-stripping steps of the
// fundamental isomorphisms, and the end-to-end comparison of the three
// realizations.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "affcrystal/path_model.hpp"
#include "affcrystal/quiver_geometry.hpp"
#include "affcrystal/young_walls.hpp"

namespace affcrystal {

/// Number of path positions read from a table: one past the longest
/// sequence plus n + 2 more, so that the ground tail is visible.
int upsilon_positions(const KernelTable& kt, int n);

PathElem upsilon1(const KernelTable& kt, const WeightVec& lambda);
PathElem upsilonN(const KernelTable& kt, const WeightVec& lambda);
PathElem upsilonAd(const KernelTable& kt, const WeightVec& lambda);

/// The weights r_i, s_i feeding factor i of upsilonAd.
std::pair<WeightVec, WeightVec> upsilonAd_weights(const KernelTable& kt, const WeightVec& lambda, int i);

std::pair<WallTuple, B1Elem> phi1_step(const WallTuple& y);
std::pair<WallTuple, BnElem> phiN_step(const WallTuple& ybar);
/// kt must come from (build_x(y), generic xbar). The returned tuple is the
/// P1 tuple of the element whose adjoint path is the input's shifted by one.
std::pair<WallTuple, AdjElem> phiAd_step(const WallTuple& y, const KernelTable& kt, const WeightVec& lambda);

/// Geometric data of one crystal element, starting from its f-word.
struct Geometry {
  RootVector alpha;
  PathElem p1, pn, pad;
  WallTuple y, ybar;
  WallMatrix x_units, xbar_units;
  GradedMap<Fp> x;
  std::vector<GradedMap<Fp>> commutant;
  KernelTable table;
};

Geometry compute_geometry(const WeightVec& lambda, const Word& word, std::uint64_t seed);

struct IsoReport {
  WeightVec lambda;
  Word word;
  std::uint64_t seed = 0;
  RootVector alpha;
  PathElem direct[3];     // B1, Bn, Ad
  PathElem geometric[3];  // upsilon1, upsilonN, upsilonAd
  int first_mismatch[3] = {-1, -1, -1};
  WallTuple y, ybar;
  WallMatrix x_units, xbar_units;
  int commutant_dim = 0;
  KernelTable table;
  bool walls_roundtrip = false;  // F(invert(p)) == p for both wall models
  bool bridge = false;           // ker x^t and ker xbar^t are column-content prefix sums
  bool stable = false;           // generic t gives a stable point
  bool ok = false;
  std::vector<std::string> messages;
};

/// Positions compared: 0 .. upsilon_positions - 1.
IsoReport pipeline(const WeightVec& lambda, const Word& word, std::uint64_t seed);

/// Sum of column contents over columns 0..t-1.
RootVector column_prefix(const WallTuple& y, int t);

/// First position < count where the two paths differ, or -1.
int first_difference(const PathElem& a, const PathElem& b, int count);

}  // namespace affcrystal
