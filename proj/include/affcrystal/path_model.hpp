#pragma once

// Lambda-paths in B^{1,l}, B^{n,l} and B^{ad,l}: finite deviations from the
// ground-state path, with the crystal structure induced by the tensor rule.

#include <compare>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "affcrystal/cartan.hpp"
#include "affcrystal/crystal_core.hpp"
#include "affcrystal/perfect_crystals.hpp"

namespace affcrystal {

enum class PathKind { B1, Bn, Ad };

std::string kind_name(PathKind k);
/// Accepts "B1", "Bn", "Ad" in any letter case.
PathKind parse_kind(const std::string& s);

using Factor = std::variant<B1Elem, BnElem, AdjElem>;

/// Deviations p_0, ..., p_{N-1}, index 0 rightmost. Positions k >= N hold
/// the ground-state factor. Normalized: p_{N-1} is not the ground factor.
struct PathElem {
  WeightVec lambda;
  PathKind kind = PathKind::B1;
  std::vector<Factor> deviations;

  std::size_t tail_start() const { return deviations.size(); }
  friend bool operator==(const PathElem&, const PathElem&) = default;
  friend bool operator<(const PathElem& a, const PathElem& b);
};

/// (i, multiplicity) in written order; the rightmost pair acts first.
using Word = std::vector<std::pair<int, int>>;

/// Whitespace-separated tokens "i" or "i^m".
Word parse_word(const std::string& text);
std::string word_to_string(const Word& w);
/// Total multiplicity per color.
RootVector word_content(const Word& w, int n);

class PathModel {
 public:
  using element_type = PathElem;

  PathModel(WeightVec lambda, PathKind kind);

  int rank() const { return n_; }
  int level() const { return ell_; }
  PathKind kind() const { return kind_; }
  const WeightVec& lambda() const { return lambda_; }

  PathElem ground() const;
  /// Ground-state factor at position k.
  Factor ground_factor(int k) const;
  /// Factor at position k of p (deviation or ground).
  Factor factor(const PathElem& p, int k) const;

  std::optional<PathElem> apply(Op op, int i, const PathElem& p) const;
  /// apply with `extra` additional ground positions in the window and no
  /// retry; used to check that the result does not depend on the window.
  std::optional<PathElem> apply_window(Op op, int i, const PathElem& p, int extra) const;
  int epsilon(int i, const PathElem& p) const;
  int phi(int i, const PathElem& p) const;
  WeightVec weight(const PathElem& p) const;
  std::string label(const PathElem& p) const;

  /// Throws std::runtime_error if a step gives 0.
  PathElem from_word(const Word& w) const;
  /// A word w with from_word(w) == p, found by raising with e_i.
  Word to_word(const PathElem& p) const;

  // Factor-level operations for the model's kind.
  int factor_eps(int i, const Factor& b) const;
  int factor_phi(int i, const Factor& b) const;
  WeightVec factor_weight(const Factor& b) const;
  std::optional<Factor> factor_apply(Op op, int i, const Factor& b) const;
  std::string factor_label(const Factor& b) const;

  PathElem normalize(PathElem p) const;

 private:
  struct Outcome {
    bool hit_virtual = false;
    std::optional<PathElem> result;
  };
  Outcome apply_in_window(Op op, int i, const PathElem& p, int width) const;
  std::pair<int, int> eps_phi(int i, const PathElem& p) const;
  int default_width(const PathElem& p) const;
  void check(const PathElem& p) const;

  WeightVec lambda_;
  PathKind kind_;
  int n_;
  int ell_;
  B1Crystal b1_;
  BnCrystal bn_;
  AdjCrystal ad_;
};

PathElem ground_path(const WeightVec& lambda, PathKind kind);
PathElem from_word(const WeightVec& lambda, PathKind kind, const Word& w);
WeightVec path_wt(const PathElem& p);

}  // namespace affcrystal
