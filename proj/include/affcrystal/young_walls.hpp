#pragma once

// l-tuples of Young walls on the patterns P^1_k and P^n_k, stored as
// column heights, and the maps F^1 / F^n to paths.

#include <string>
#include <utility>
#include <vector>

#include "affcrystal/cartan.hpp"
#include "affcrystal/path_model.hpp"

namespace affcrystal {

enum class PatternKind { P1, Pn };

std::string pattern_name(PatternKind k);
PatternKind parse_pattern(const std::string& s);

/// Color of the block in row i >= 1 (from the bottom) and column j >= 0
/// (from the right) of a wall with the given charge.
int color_of(PatternKind kind, int charge, int i, int j, int n);

/// heights[w][j] = height of column j of wall w; walls in ascending charge
/// order, trailing zero columns trimmed.
struct WallTuple {
  PatternKind kind = PatternKind::P1;
  int n = 1;
  std::vector<int> charges;
  std::vector<std::vector<int>> heights;

  int num_columns() const;
  int height(std::size_t wall, int j) const;
  int total_blocks() const;
  friend bool operator==(const WallTuple&, const WallTuple&) = default;
};

/// Empty walls with charges from decompose(lambda).
WallTuple empty_walls(const WeightVec& lambda, PatternKind kind);
WeightVec lambda_of(const WallTuple& w);
void trim(WallTuple& w);

struct WallReport {
  bool ok = true;
  std::string rule;
  std::string witness;
};

/// Stacking, cyclic interlacing and reducedness.
WallReport validate(const WallTuple& w);

RootVector column_content(const WallTuple& w, int j);
/// Sum of all column contents.
RootVector wall_content(const WallTuple& w);

PathElem F1(const WallTuple& w);
PathElem Fn(const WallTuple& w);
/// F1 or Fn according to w.kind.
PathElem wall_to_path(const WallTuple& w);

/// The unique valid tuple with wall_to_path(result) == p and total content
/// alpha. Throws std::runtime_error when there is no solution or more than
/// one. B1 paths give P1 tuples, Bn paths give Pn tuples.
WallTuple invert_path(const PathElem& p, const RootVector& alpha);
WallTuple F1_invert(const PathElem& p, const RootVector& alpha);
WallTuple Fn_invert(const PathElem& p, const RootVector& alpha);

/// Removes column 0. Charges move by -1 (P1) or +1 (Pn) and walls are
/// rotated back into ascending order. Returns the content of column 0.
std::pair<WallTuple, RootVector> strip_column0(const WallTuple& w);

}  // namespace affcrystal
