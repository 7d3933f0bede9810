#include <doctest.h>

#include <random>
#include <sstream>

#include "affcrystal/crystal_core.hpp"
#include "affcrystal/perfect_crystals.hpp"
#include "affcrystal/verify.hpp"

using namespace affcrystal;

namespace {

// Brute-force bracketing: write the word, cancel "+-" pairs until none
// remain, then read off the answer.
std::pair<int, int> naive_eps_phi(const std::vector<SignatureEntry>& f) {
  std::string w;
  for (const auto& e : f) w += std::string(e.eps, '-') + std::string(e.phi, '+');
  for (std::size_t pos; (pos = w.find("+-")) != std::string::npos;) w.erase(pos, 2);
  int minus = 0, plus = 0;
  for (char c : w) (c == '-' ? minus : plus)++;
  return {minus, plus};
}

std::optional<std::size_t> naive_select(Op op, const std::vector<SignatureEntry>& f) {
  std::string w;
  std::vector<std::size_t> owner;
  for (std::size_t k = 0; k < f.size(); ++k) {
    for (int t = 0; t < f[k].eps; ++t) w += '-', owner.push_back(k);
    for (int t = 0; t < f[k].phi; ++t) w += '+', owner.push_back(k);
  }
  std::vector<bool> gone(w.size(), false);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t a = 0; a < w.size(); ++a) {
      if (gone[a] || w[a] != '+') continue;
      std::size_t b = a + 1;
      while (b < w.size() && gone[b]) ++b;
      if (b < w.size() && w[b] == '-') {
        gone[a] = gone[b] = true;
        changed = true;
      }
    }
  }
  if (op == Op::f) {
    for (std::size_t a = 0; a < w.size(); ++a)
      if (!gone[a] && w[a] == '+') return owner[a];
  } else {
    for (std::size_t a = w.size(); a-- > 0;)
      if (!gone[a] && w[a] == '-') return owner[a];
  }
  return std::nullopt;
}

// B^{1,l} (x) B^{n,l} as one crystal, for the 100-node example.
struct MixedPair {
  using element_type = std::pair<B1Elem, BnElem>;
  int n, ell;
  int rank() const { return n; }
  std::optional<element_type> apply(Op op, int i, const element_type& b) const {
    return pair_apply(n, ell, op, i, b.first, b.second);
  }
  int epsilon(int i, const element_type& b) const { return sig(i, b).first; }
  int phi(int i, const element_type& b) const { return sig(i, b).second; }
  WeightVec weight(const element_type& b) const {
    return B1Crystal(n, ell).weight(b.first) + BnCrystal(n, ell).weight(b.second);
  }
  std::string label(const element_type& b) const { return render_b1(b.first) + " " + render_bn(b.second); }
  std::pair<int, int> sig(int i, const element_type& b) const {
    B1Crystal c1(n, ell);
    BnCrystal cn(n, ell);
    const SignatureEntry s[2] = {{c1.epsilon(i, b.first), c1.phi(i, b.first)},
                                 {cn.epsilon(i, b.second), cn.phi(i, b.second)}};
    return eps_phi_tensor(s);
  }
};

}  // namespace

TEST_CASE("signature reduction hand cases") {
  const std::vector<SignatureEntry> one{{1, 1}, {2, 0}};
  CHECK(eps_phi_tensor(one) == std::pair{2, 0});
  const std::vector<SignatureEntry> cancel{{0, 2}, {2, 0}};
  CHECK(eps_phi_tensor(cancel) == std::pair{0, 0});
  CHECK_FALSE(signature_select(Op::e, cancel));
  CHECK_FALSE(signature_select(Op::f, cancel));
  const std::vector<SignatureEntry> single{{3, 4}};
  CHECK(eps_phi_tensor(single) == std::pair{3, 4});
  const std::vector<SignatureEntry> nothing{{0, 0}};
  CHECK_FALSE(signature_select(Op::e, nothing));
}

TEST_CASE("signature reduction matches brute-force bracketing") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 3000; ++trial) {
    std::vector<SignatureEntry> f(1 + rng() % 6);
    for (auto& e : f) e = {static_cast<int>(rng() % 4), static_cast<int>(rng() % 4)};
    CHECK(eps_phi_tensor(f) == naive_eps_phi(f));
    CHECK(signature_select(Op::e, f) == naive_select(Op::e, f));
    CHECK(signature_select(Op::f, f) == naive_select(Op::f, f));
    const auto red = reduce_signature(f);
    CHECK(red.eps == naive_eps_phi(f).first);
  }
}

TEST_CASE("two-factor closed form") {
  // f acts on the left factor iff phi(left) > eps(right); e acts on the
  // left factor iff phi(left) >= eps(right).
  for (int a = 0; a < 5; ++a)
    for (int b = 0; b < 5; ++b)
      for (int c = 0; c < 5; ++c)
        for (int d = 0; d < 5; ++d) {
          const std::vector<SignatureEntry> f{{a, b}, {c, d}};
          const auto [e, p] = eps_phi_tensor(f);
          CHECK(e == a + std::max(0, c - b));
          CHECK(p == d + std::max(0, b - c));
          if (p > 0) {
            auto s = signature_select(Op::f, f);
            REQUIRE(s);
            CHECK(*s == (b > c ? 0u : 1u));
          }
          if (e > 0) {
            auto s = signature_select(Op::e, f);
            REQUIRE(s);
            CHECK(*s == (b >= c ? 0u : 1u));
          }
        }
}

TEST_CASE("tensor_apply on B^{1,3} (x) B^{1,3}") {
  B1Crystal c(2, 3);
  const B1Elem parts[2] = {B1Elem{{0, 2, 1}}, B1Elem{{1, 1, 1}}};
  const auto r = tensor_apply(c, Op::f, 2, std::span<const B1Elem>(parts, 2));
  REQUIRE(r);
  CHECK(r->first == 0);
  CHECK(r->second == B1Elem{{0, 1, 2}});
  const B1Elem lone[1] = {B1Elem{{3, 0, 0}}};
  CHECK(c.epsilon(1, lone[0]) == 0);
  CHECK_FALSE(tensor_apply(c, Op::e, 1, std::span<const B1Elem>(lone, 1)));
  // ground pair of 3 Lambda_0: f_1 is null, f_0 hits position 0
  const B1Elem ground[2] = {ground_b1(WeightVec{3, 0, 0}, 1), ground_b1(WeightVec{3, 0, 0}, 0)};
  CHECK_FALSE(tensor_apply(c, Op::f, 1, std::span<const B1Elem>(ground, 2)));
  const auto g0 = tensor_apply(c, Op::f, 0, std::span<const B1Elem>(ground, 2));
  REQUIRE(g0);
  CHECK(g0->first == 1);
}

TEST_CASE("generate_graph") {
  B1Crystal b11(2, 1);
  const auto g = generate_graph(b11, B1Elem{{1, 0, 0}});
  CHECK(g.graph.size() == 3);
  CHECK(g.graph.f_edges.size() == 3);
  CHECK(g.graph.complete);
  CHECK(is_connected(g.graph));
  // the f-edges form one directed 3-cycle
  for (const auto& e : g.graph.f_edges) {
    int outs = 0;
    for (const auto& o : g.graph.f_edges) outs += o.from == e.from;
    CHECK(outs == 1);
  }
  GraphBudget zero;
  zero.max_depth = 0;
  const auto single = generate_graph(b11, B1Elem{{1, 0, 0}}, zero);
  CHECK(single.graph.size() == 1);

  MixedPair mp{2, 3};
  const auto big = generate_graph(mp, {B1Elem{{3, 0, 0}}, BnElem{{3, 0, 0}}});
  CHECK(big.graph.size() == 100);
  CHECK(big.graph.complete);
  CHECK(check_axioms(big.graph).ok);
}

TEST_CASE("check_axioms") {
  CHECK(check_axioms(CrystalGraph{}).ok);
  AdjCrystal ad(2, 2);
  auto g = full_graph(ad, ad.elements());
  CHECK(check_axioms(g.graph).ok);
  SUBCASE("corrupted edge color") {
    g.graph.f_edges.front().color = wrap_index(g.graph.f_edges.front().color + 1, 3);
    const auto r = check_axioms(g.graph);
    CHECK_FALSE(r.ok);
    CHECK_FALSE(r.witness.empty());
  }
  SUBCASE("corrupted phi") {
    g.graph.nodes[3].phi[1] += 1;
    CHECK_FALSE(check_axioms(g.graph).ok);
  }
}

TEST_CASE("write_dot escapes labels") {
  CrystalGraph g;
  g.n = 1;
  g.nodes.push_back({"a\"b", WeightVec{0, 0}, {0, 0}, {0, 0}, 0});
  g.nodes.push_back({"c", WeightVec{0, 0}, {0, 0}, {0, 0}, 1});
  g.f_edges.push_back({0, 1, 1});
  std::ostringstream os;
  write_dot(g, os);
  CHECK(os.str().find("a\\\"b") != std::string::npos);
  CHECK(os.str().find("n0 -> n1 [label=\"1\"]") != std::string::npos);
}
