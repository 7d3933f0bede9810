#pragma once

// Crystal contract, tensor product signature rule, crystal graph generation
// and axiom checking.

#include <concepts>
#include <cstddef>
#include <deque>
#include <map>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "affcrystal/cartan.hpp"

namespace affcrystal {

enum class Op { e, f };

inline char op_char(Op op) { return op == Op::e ? 'e' : 'f'; }

/// A finite or infinite U'_q crystal of type A_n^(1). Elements must be
/// totally ordered so graphs can deduplicate them.
template <class C>
concept CrystalModel = requires(const C& c, const typename C::element_type& b, Op op, int i) {
  typename C::element_type;
  { c.rank() } -> std::convertible_to<int>;
  { c.apply(op, i, b) } -> std::same_as<std::optional<typename C::element_type>>;
  { c.epsilon(i, b) } -> std::convertible_to<int>;
  { c.phi(i, b) } -> std::convertible_to<int>;
  { c.weight(b) } -> std::same_as<WeightVec>;
  { c.label(b) } -> std::convertible_to<std::string>;
  { b < b } -> std::convertible_to<bool>;
};

/// (epsilon_i, phi_i) of one tensor factor.
struct SignatureEntry {
  int eps = 0;
  int phi = 0;
};

/// Reduced signature: for each factor, how many of its minuses and pluses
/// survive cancellation of adjacent "+-" pairs.
struct ReducedSignature {
  std::vector<int> minus_left;
  std::vector<int> plus_left;
  int eps = 0;  // total surviving minuses
  int phi = 0;  // total surviving pluses
};

/// Factors are ordered left to right; factor k contributes -^{eps} +^{phi}.
ReducedSignature reduce_signature(std::span<const SignatureEntry> factors);

/// Factor on which e_i (rightmost surviving minus) or f_i (leftmost
/// surviving plus) acts; nullopt when no symbol survives.
std::optional<std::size_t> signature_select(Op op, std::span<const SignatureEntry> factors);

/// (eps_i, phi_i) of the whole tensor product.
std::pair<int, int> eps_phi_tensor(std::span<const SignatureEntry> factors);

template <CrystalModel C>
std::vector<SignatureEntry> signature_of(const C& c, int i, std::span<const typename C::element_type> factors) {
  std::vector<SignatureEntry> sig;
  sig.reserve(factors.size());
  for (const auto& b : factors) sig.push_back({c.epsilon(i, b), c.phi(i, b)});
  return sig;
}

/// Applies e_i/f_i to factors[0] (x) ... (x) factors[m-1]. Returns the
/// index of the factor acted on and its new value, or nullopt for 0.
template <CrystalModel C>
std::optional<std::pair<std::size_t, typename C::element_type>> tensor_apply(
    const C& c, Op op, int i, std::span<const typename C::element_type> factors) {
  const auto sig = signature_of(c, i, factors);
  const auto which = signature_select(op, sig);
  if (!which) return std::nullopt;
  auto next = c.apply(op, i, factors[*which]);
  if (!next) return std::nullopt;
  return std::make_pair(*which, std::move(*next));
}

/// Two-fold tensor product B (x) B of a finite crystal, used for the
/// connectivity condition of perfectness.
template <CrystalModel C>
class TensorSquare {
 public:
  using element_type = std::pair<typename C::element_type, typename C::element_type>;

  explicit TensorSquare(const C& base) : base_(base) {}

  int rank() const { return base_.rank(); }

  std::optional<element_type> apply(Op op, int i, const element_type& b) const {
    const typename C::element_type parts[2] = {b.first, b.second};
    auto r = tensor_apply(base_, op, i, std::span<const typename C::element_type>(parts, 2));
    if (!r) return std::nullopt;
    element_type out = b;
    (r->first == 0 ? out.first : out.second) = std::move(r->second);
    return out;
  }
  int epsilon(int i, const element_type& b) const { return eps_phi(i, b).first; }
  int phi(int i, const element_type& b) const { return eps_phi(i, b).second; }
  WeightVec weight(const element_type& b) const { return base_.weight(b.first) + base_.weight(b.second); }
  std::string label(const element_type& b) const { return base_.label(b.first) + " (x) " + base_.label(b.second); }

 private:
  std::pair<int, int> eps_phi(int i, const element_type& b) const {
    const SignatureEntry sig[2] = {{base_.epsilon(i, b.first), base_.phi(i, b.first)},
                                   {base_.epsilon(i, b.second), base_.phi(i, b.second)}};
    return eps_phi_tensor(sig);
  }

  const C& base_;
};

/// Colored directed graph; every node carries wt, eps and phi so that the
/// axioms can be checked without the generating model.
struct CrystalGraph {
  struct Node {
    std::string label;
    WeightVec weight;
    std::vector<int> eps;
    std::vector<int> phi;
    int depth = 0;
  };
  struct Edge {
    std::size_t from;
    std::size_t to;
    int color;
    friend bool operator==(const Edge&, const Edge&) = default;
  };

  int n = 0;
  std::vector<Node> nodes;
  std::vector<Edge> f_edges;  // from --f_i--> to
  std::vector<Edge> e_edges;  // from --e_i--> to
  bool complete = true;       // false when the budget stopped the closure

  std::size_t size() const { return nodes.size(); }
};

struct GraphBudget {
  std::size_t max_elements = 100000;
  int max_depth = -1;  // negative: unbounded
  bool follow_e = true;
};

template <class Elem>
struct GeneratedGraph {
  CrystalGraph graph;
  std::vector<Elem> elements;
};

/// Breadth-first closure of `seed` under all f_i (and e_i when
/// budget.follow_e). Edges to elements outside the budget are dropped and
/// the graph is flagged incomplete.
template <CrystalModel C>
GeneratedGraph<typename C::element_type> generate_graph(const C& c, const typename C::element_type& seed,
                                                        const GraphBudget& budget = {}) {
  using Elem = typename C::element_type;
  GeneratedGraph<Elem> out;
  out.graph.n = c.rank();
  const int size = c.rank() + 1;
  std::map<Elem, std::size_t> index;
  std::deque<std::size_t> queue;

  auto add_node = [&](const Elem& b, int depth) -> std::optional<std::size_t> {
    if (auto it = index.find(b); it != index.end()) return it->second;
    if (out.elements.size() >= budget.max_elements) {
      out.graph.complete = false;
      return std::nullopt;
    }
    CrystalGraph::Node node;
    node.label = c.label(b);
    node.weight = c.weight(b);
    node.depth = depth;
    for (int i = 0; i < size; ++i) {
      node.eps.push_back(c.epsilon(i, b));
      node.phi.push_back(c.phi(i, b));
    }
    const std::size_t id = out.elements.size();
    out.elements.push_back(b);
    out.graph.nodes.push_back(std::move(node));
    index.emplace(b, id);
    queue.push_back(id);
    return id;
  };

  add_node(seed, 0);
  while (!queue.empty()) {
    const std::size_t id = queue.front();
    queue.pop_front();
    const int depth = out.graph.nodes[id].depth;
    const bool frontier = budget.max_depth >= 0 && depth >= budget.max_depth;
    for (int i = 0; i < size; ++i) {
      for (Op op : {Op::f, Op::e}) {
        if (op == Op::e && !budget.follow_e) continue;
        const Elem current = out.elements[id];
        auto next = c.apply(op, i, current);
        if (!next) continue;
        std::optional<std::size_t> to;
        if (frontier) {
          if (auto it = index.find(*next); it != index.end())
            to = it->second;
          else
            out.graph.complete = false;
        } else {
          to = add_node(*next, depth + 1);
        }
        if (!to) continue;
        (op == Op::f ? out.graph.f_edges : out.graph.e_edges).push_back({id, *to, i});
      }
    }
  }
  return out;
}

/// All elements of a finite crystal listed by `elements`, with every edge.
template <CrystalModel C>
GeneratedGraph<typename C::element_type> full_graph(const C& c, const std::vector<typename C::element_type>& elements) {
  using Elem = typename C::element_type;
  GeneratedGraph<Elem> out;
  out.graph.n = c.rank();
  const int size = c.rank() + 1;
  std::map<Elem, std::size_t> index;
  for (const auto& b : elements) {
    index.emplace(b, out.elements.size());
    out.elements.push_back(b);
    CrystalGraph::Node node;
    node.label = c.label(b);
    node.weight = c.weight(b);
    for (int i = 0; i < size; ++i) {
      node.eps.push_back(c.epsilon(i, b));
      node.phi.push_back(c.phi(i, b));
    }
    out.graph.nodes.push_back(std::move(node));
  }
  for (std::size_t id = 0; id < out.elements.size(); ++id) {
    for (int i = 0; i < size; ++i) {
      for (Op op : {Op::f, Op::e}) {
        auto next = c.apply(op, i, out.elements[id]);
        if (!next) continue;
        auto it = index.find(*next);
        if (it == index.end()) {
          out.graph.complete = false;
          continue;
        }
        (op == Op::f ? out.graph.f_edges : out.graph.e_edges).push_back({id, it->second, i});
      }
    }
  }
  return out;
}

struct AxiomReport {
  bool ok = true;
  std::string axiom;    // which condition failed
  std::string witness;  // offending node/edge
};

/// Checks phi = eps + <h_i, wt>, the weight and eps/phi shifts along edges,
/// and that f_i b = b' exactly when e_i b' = b. Empty graphs pass.
AxiomReport check_axioms(const CrystalGraph& g);

/// Weak connectivity over all edges.
bool is_connected(const CrystalGraph& g);

/// Graphviz export with edges labelled by color.
void write_dot(const CrystalGraph& g, std::ostream& os, const std::string& name = "crystal");

}  // namespace affcrystal
