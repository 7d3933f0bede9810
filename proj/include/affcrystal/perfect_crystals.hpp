#pragma once

// The perfect crystals B^{1,l}, B^{n,l} and the adjoint crystal B^{ad,l}
// of type A_n^(1), stored as multiplicity vectors.

#include <compare>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "affcrystal/cartan.hpp"
#include "affcrystal/crystal_core.hpp"

namespace affcrystal {

/// nu[i-1] = number of boxes i in the one-row tableau, i = 1..n+1.
struct B1Elem {
  std::vector<int> nu;
  friend bool operator==(const B1Elem&, const B1Elem&) = default;
  friend auto operator<=>(const B1Elem&, const B1Elem&) = default;
};

/// nubar[i-1] = number of barred boxes i~.
struct BnElem {
  std::vector<int> nubar;
  friend bool operator==(const BnElem&, const BnElem&) = default;
  friend auto operator<=>(const BnElem&, const BnElem&) = default;
};

/// Element of B(k theta): mbar[i-1] barred columns i~ and m[i-1] boxes i,
/// with sum(mbar) = sum(m) = k and mbar[0] * m[0] = 0.
struct AdjElem {
  std::vector<int> mbar;
  std::vector<int> m;
  int k() const;
  friend bool operator==(const AdjElem&, const AdjElem&) = default;
  friend auto operator<=>(const AdjElem&, const AdjElem&) = default;
};

/// All compositions of `total` into `parts` nonnegative entries, in
/// lexicographic order.
std::vector<std::vector<int>> compositions(int total, int parts);

class B1Crystal {
 public:
  using element_type = B1Elem;
  B1Crystal(int n, int ell);

  int rank() const { return n_; }
  int level() const { return ell_; }
  std::optional<B1Elem> apply(Op op, int i, const B1Elem& b) const;
  int epsilon(int i, const B1Elem& b) const;
  int phi(int i, const B1Elem& b) const;
  WeightVec weight(const B1Elem& b) const;
  std::string label(const B1Elem& b) const;
  std::vector<B1Elem> elements() const;
  bool valid(const B1Elem& b) const;

 private:
  int n_;
  int ell_;
};

class BnCrystal {
 public:
  using element_type = BnElem;
  BnCrystal(int n, int ell);

  int rank() const { return n_; }
  int level() const { return ell_; }
  std::optional<BnElem> apply(Op op, int i, const BnElem& b) const;
  int epsilon(int i, const BnElem& b) const;
  int phi(int i, const BnElem& b) const;
  WeightVec weight(const BnElem& b) const;
  std::string label(const BnElem& b) const;
  std::vector<BnElem> elements() const;
  bool valid(const BnElem& b) const;

 private:
  int n_;
  int ell_;
};

class AdjCrystal {
 public:
  using element_type = AdjElem;
  AdjCrystal(int n, int ell);

  int rank() const { return n_; }
  int level() const { return ell_; }
  std::optional<AdjElem> apply(Op op, int i, const AdjElem& b) const;
  /// Computed by iterating the operators.
  int epsilon(int i, const AdjElem& b) const;
  int phi(int i, const AdjElem& b) const;
  WeightVec weight(const AdjElem& b) const;
  std::string label(const AdjElem& b) const;
  std::vector<AdjElem> elements() const;
  bool valid(const AdjElem& b) const;

 private:
  int n_;
  int ell_;
};

/// e_0 / f_0 on B^{ad,l}.
std::optional<AdjElem> adj_apply0(Op op, const AdjElem& b, int ell);

/// e_i / f_i, 1 <= i <= n, via the pair (m as a B^1 element) (x) (mbar as
/// a B^n element), both of level k.
std::optional<AdjElem> adj_apply_classical(Op op, int i, const AdjElem& b);

std::string render_b1(const B1Elem& b);
std::string render_bn(const BnElem& b);
/// Two-row (n-row) tableau: barred columns by descending index, then the
/// boxes appended to the top row. Example: "rows: [1,2,2,2,2,3],[3,3,3]".
std::string render_adj(const AdjElem& b, int n);

/// Inverse of wt on B^{1,l}. Throws std::domain_error outside the image.
B1Elem psi1(const WeightVec& w, int ell);
/// Inverse of wt on B^{n,l}.
BnElem psiN(const WeightVec& w, int ell);

B1Elem ground_b1(const WeightVec& lambda, int k);
BnElem ground_bn(const WeightVec& lambda, int k);
AdjElem ground_adj(const WeightVec& lambda);

AdjElem xi(const B1Elem& b, const BnElem& bbar);
std::pair<B1Elem, BnElem> xi_inv(const AdjElem& a, int ell);
AdjElem psiAd(const WeightVec& r, const WeightVec& s, int ell);

/// (eps_0..eps_n) as a weight.
template <CrystalModel C>
WeightVec eps_weight(const C& c, const typename C::element_type& b) {
  WeightVec w = WeightVec::zero(c.rank());
  for (int i = 0; i <= c.rank(); ++i) w.a[i] = c.epsilon(i, b);
  return w;
}

template <CrystalModel C>
WeightVec phi_weight(const C& c, const typename C::element_type& b) {
  WeightVec w = WeightVec::zero(c.rank());
  for (int i = 0; i <= c.rank(); ++i) w.a[i] = c.phi(i, b);
  return w;
}

/// Same element set with the 0-arrows removed.
template <CrystalModel C>
class ClassicalOnly {
 public:
  using element_type = typename C::element_type;
  explicit ClassicalOnly(const C& base) : base_(base) {}
  int rank() const { return base_.rank(); }
  std::optional<element_type> apply(Op op, int i, const element_type& b) const {
    if (i == 0) return std::nullopt;
    return base_.apply(op, i, b);
  }
  int epsilon(int i, const element_type& b) const { return i == 0 ? 0 : base_.epsilon(i, b); }
  int phi(int i, const element_type& b) const {
    return i == 0 ? pairing(0, base_.weight(b)) : base_.phi(i, b);
  }
  WeightVec weight(const element_type& b) const { return base_.weight(b); }
  std::string label(const element_type& b) const { return base_.label(b); }

 private:
  const C& base_;
};

struct PerfectReport {
  bool ok = true;
  std::string condition;
  std::string witness;
};

/// All level-l classical dominant weights of rank n.
std::vector<WeightVec> dominant_weights(int n, int ell);

/// Checks, over the full element list: B (x) B connected, <c, eps(b)> >= l,
/// and for each level-l dominant weight exactly one b with eps(b) equal to
/// it and exactly one with phi(b) equal to it.
template <CrystalModel C>
PerfectReport verify_perfect(const C& c, const std::vector<typename C::element_type>& elements, int ell) {
  using Elem = typename C::element_type;
  PerfectReport rep;
  auto fail = [&](std::string cond, std::string wit) {
    rep.ok = false;
    rep.condition = std::move(cond);
    rep.witness = std::move(wit);
    return rep;
  };
  TensorSquare<C> sq(c);
  std::vector<std::pair<Elem, Elem>> pairs;
  pairs.reserve(elements.size() * elements.size());
  for (const auto& a : elements)
    for (const auto& b : elements) pairs.emplace_back(a, b);
  const auto g = full_graph(sq, pairs);
  if (!g.graph.complete) return fail("B (x) B closed", "an edge leaves the element list");
  if (!is_connected(g.graph)) return fail("B (x) B connected", "graph has more than one component");
  for (const auto& b : elements)
    if (eps_weight(c, b).level() < ell) return fail("<c, eps(b)> >= l", c.label(b));
  for (const auto& lam : dominant_weights(c.rank(), ell)) {
    int n_eps = 0, n_phi = 0;
    for (const auto& b : elements) {
      if (eps_weight(c, b) == lam) ++n_eps;
      if (phi_weight(c, b) == lam) ++n_phi;
    }
    if (n_eps != 1) return fail("unique b with eps(b) = Lambda", lam.to_string() + " count " + std::to_string(n_eps));
    if (n_phi != 1) return fail("unique b with phi(b) = Lambda", lam.to_string() + " count " + std::to_string(n_phi));
  }
  return rep;
}

}  // namespace affcrystal
