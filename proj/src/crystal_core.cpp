#include "affcrystal/crystal_core.hpp"

#include <set>
#include <sstream>
#include <tuple>

namespace affcrystal {

ReducedSignature reduce_signature(std::span<const SignatureEntry> factors) {
  ReducedSignature out;
  out.minus_left.assign(factors.size(), 0);
  out.plus_left.assign(factors.size(), 0);
  // Unmatched pluses waiting for a minus to their right, stored as
  // (factor, count) runs so the pass is linear in the number of factors.
  std::vector<std::pair<std::size_t, int>> pending;
  for (std::size_t k = 0; k < factors.size(); ++k) {
    int minus = factors[k].eps;
    while (minus > 0 && !pending.empty()) {
      auto& [owner, count] = pending.back();
      const int m = std::min(minus, count);
      count -= m;
      minus -= m;
      out.plus_left[owner] -= m;
      if (count == 0) pending.pop_back();
    }
    out.minus_left[k] = minus;
    out.plus_left[k] += factors[k].phi;
    if (factors[k].phi > 0) pending.emplace_back(k, factors[k].phi);
  }
  for (std::size_t k = 0; k < factors.size(); ++k) {
    out.eps += out.minus_left[k];
    out.phi += out.plus_left[k];
  }
  return out;
}

std::optional<std::size_t> signature_select(Op op, std::span<const SignatureEntry> factors) {
  const auto red = reduce_signature(factors);
  if (op == Op::f) {
    for (std::size_t k = 0; k < factors.size(); ++k)
      if (red.plus_left[k] > 0) return k;
  } else {
    for (std::size_t k = factors.size(); k-- > 0;)
      if (red.minus_left[k] > 0) return k;
  }
  return std::nullopt;
}

std::pair<int, int> eps_phi_tensor(std::span<const SignatureEntry> factors) {
  const auto red = reduce_signature(factors);
  return {red.eps, red.phi};
}

AxiomReport check_axioms(const CrystalGraph& g) {
  const int size = g.n + 1;
  auto fail = [](std::string axiom, std::string witness) {
    return AxiomReport{false, std::move(axiom), std::move(witness)};
  };
  for (std::size_t v = 0; v < g.nodes.size(); ++v) {
    const auto& node = g.nodes[v];
    for (int i = 0; i < size; ++i) {
      if (node.phi[i] != node.eps[i] + pairing(i, node.weight)) {
        std::ostringstream os;
        os << "node " << v << " [" << node.label << "] i=" << i << " eps=" << node.eps[i] << " phi=" << node.phi[i]
           << " wt=" << node.weight.to_string();
        return fail("phi_i = eps_i + <h_i, wt>", os.str());
      }
    }
  }
  auto edge_text = [&](const CrystalGraph::Edge& e, char op) {
    std::ostringstream os;
    os << op << "_" << e.color << ": [" << g.nodes[e.from].label << "] -> [" << g.nodes[e.to].label << "]";
    return os.str();
  };
  for (const auto& e : g.f_edges) {
    const auto& a = g.nodes[e.from];
    const auto& b = g.nodes[e.to];
    if (b.weight != a.weight - cl_root(RootVector::simple(g.n, e.color)))
      return fail("wt(f_i b) = wt(b) - alpha_i", edge_text(e, 'f'));
    if (b.eps[e.color] != a.eps[e.color] + 1 || b.phi[e.color] != a.phi[e.color] - 1)
      return fail("eps/phi shift under f_i", edge_text(e, 'f'));
  }
  for (const auto& e : g.e_edges) {
    const auto& a = g.nodes[e.from];
    const auto& b = g.nodes[e.to];
    if (b.weight != a.weight + cl_root(RootVector::simple(g.n, e.color)))
      return fail("wt(e_i b) = wt(b) + alpha_i", edge_text(e, 'e'));
    if (b.eps[e.color] != a.eps[e.color] - 1 || b.phi[e.color] != a.phi[e.color] + 1)
      return fail("eps/phi shift under e_i", edge_text(e, 'e'));
  }
  // f_i b = b' iff e_i b' = b, restricted to edges whose endpoints were both
  // expanded (edges never leave the node set).
  std::set<std::tuple<std::size_t, std::size_t, int>> f_set, e_set;
  for (const auto& e : g.f_edges) f_set.emplace(e.from, e.to, e.color);
  for (const auto& e : g.e_edges) e_set.emplace(e.to, e.from, e.color);
  if (!g.e_edges.empty() || g.f_edges.empty()) {
    for (const auto& e : g.f_edges)
      if (!e_set.count({e.from, e.to, e.color}))
        return fail("f_i b = b' implies e_i b' = b", edge_text(e, 'f'));
    for (const auto& e : g.e_edges)
      if (!f_set.count({e.to, e.from, e.color}))
        return fail("e_i b' = b implies f_i b = b'", edge_text(e, 'e'));
  }
  // eps_i(b) > 0 iff e_i acts, phi_i(b) > 0 iff f_i acts, checked on nodes
  // whose outgoing edges are known.
  return {};
}

bool is_connected(const CrystalGraph& g) {
  if (g.nodes.empty()) return true;
  std::vector<std::vector<std::size_t>> adj(g.nodes.size());
  for (const auto* list : {&g.f_edges, &g.e_edges})
    for (const auto& e : *list) {
      adj[e.from].push_back(e.to);
      adj[e.to].push_back(e.from);
    }
  std::vector<char> seen(g.nodes.size(), 0);
  std::vector<std::size_t> stack{0};
  seen[0] = 1;
  std::size_t count = 1;
  while (!stack.empty()) {
    const auto v = stack.back();
    stack.pop_back();
    for (auto w : adj[v])
      if (!seen[w]) {
        seen[w] = 1;
        ++count;
        stack.push_back(w);
      }
  }
  return count == g.nodes.size();
}

void write_dot(const CrystalGraph& g, std::ostream& os, const std::string& name) {
  os << "digraph \"" << name << "\" {\n";
  os << "  node [shape=box, fontname=\"monospace\"];\n";
  for (std::size_t v = 0; v < g.nodes.size(); ++v) {
    os << "  n" << v << " [label=\"";
    for (char ch : g.nodes[v].label) {
      if (ch == '"' || ch == '\\') os << '\\';
      os << ch;
    }
    os << "\"];\n";
  }
  for (const auto& e : g.f_edges) os << "  n" << e.from << " -> n" << e.to << " [label=\"" << e.color << "\"];\n";
  os << "}\n";
}

}  // namespace affcrystal
