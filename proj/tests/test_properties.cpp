// Randomized identities across modules.

#include <doctest.h>

#include <random>

#include "affcrystal/crystal_iso.hpp"
#include "affcrystal/verify.hpp"

using namespace affcrystal;

namespace {

std::vector<int> eps_vec(const PathModel& m, const PathElem& p) {
  std::vector<int> v;
  for (int i = 0; i <= m.rank(); ++i) v.push_back(m.epsilon(i, p));
  return v;
}

std::vector<int> phi_vec(const PathModel& m, const PathElem& p) {
  std::vector<int> v;
  for (int i = 0; i <= m.rank(); ++i) v.push_back(m.phi(i, p));
  return v;
}

}  // namespace

TEST_CASE("ground factors") {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 100; ++t) {
    const int n = 1 + static_cast<int>(rng() % 4);
    const WeightVec lam = random_dominant(n, 1 + static_cast<int>(rng() % 4), rng);
    const int ell = lam.level();
    const B1Crystal b1(n, ell);
    const BnCrystal bn(n, ell);
    const AdjCrystal ad(n, ell);
    const auto g1 = ground_b1(lam, 0);
    const auto gn = ground_bn(lam, 0);
    const auto ga = ground_adj(lam);
    for (int i = 0; i <= n; ++i) {
      CHECK(b1.phi(i, g1) == lam[i]);
      CHECK(b1.epsilon(i, g1) == lam[wrap_index(i + 1, n + 1)]);
      CHECK(bn.phi(i, gn) == lam[i]);
      CHECK(bn.epsilon(i, gn) == lam[wrap_index(i - 1, n + 1)]);
      CHECK(ad.phi(i, ga) == lam[i]);
      CHECK(ad.epsilon(i, ga) == lam[i]);
    }
  }
}

TEST_CASE("highest weight paths") {
  std::mt19937_64 rng(18);
  for (int t = 0; t < 40; ++t) {
    const int n = 1 + static_cast<int>(rng() % 3);
    const WeightVec lam = random_dominant(n, 1 + static_cast<int>(rng() % 3), rng);
    for (PathKind k : {PathKind::B1, PathKind::Bn, PathKind::Ad}) {
      PathModel m(lam, k);
      const auto u = m.ground();
      CHECK(eps_vec(m, u) == std::vector<int>(n + 1, 0));
      CHECK(phi_vec(m, u) == lam.a);
      CHECK(m.weight(u) == lam);
    }
  }
}

TEST_CASE("weights, strings and inverses along random words") {
  std::mt19937_64 rng(19);
  for (int t = 0; t < 60; ++t) {
    const int n = 1 + static_cast<int>(rng() % 3);
    const WeightVec lam = random_dominant(n, 1 + static_cast<int>(rng() % 3), rng);
    const Word w = random_word(lam, 12, rng);
    const RootVector a = word_content(w, n);
    for (PathKind k : {PathKind::B1, PathKind::Bn, PathKind::Ad}) {
      PathModel m(lam, k);
      const auto p = m.from_word(w);
      CHECK(m.weight(p) == lam - cl_root(a));
      for (int i = 0; i <= n; ++i) {
        CHECK(m.phi(i, p) - m.epsilon(i, p) == pairing(i, m.weight(p)));
        if (auto q = m.apply(Op::f, i, p)) {
          CHECK(m.apply(Op::e, i, *q) == p);
          CHECK(m.phi(i, *q) == m.phi(i, p) - 1);
        } else {
          CHECK(m.phi(i, p) == 0);
        }
        if (auto q = m.apply(Op::e, i, p)) CHECK(m.apply(Op::f, i, *q) == p);
      }
      CHECK(m.from_word(m.to_word(p)) == p);
    }
  }
}

TEST_CASE("the three models have the same graph") {
  // epsilon and phi agree, so the f-words of one path work on the others
  std::mt19937_64 rng(20);
  for (int t = 0; t < 40; ++t) {
    const int n = 1 + static_cast<int>(rng() % 3);
    const WeightVec lam = random_dominant(n, 1 + static_cast<int>(rng() % 2), rng);
    const Word w = random_word(lam, 10, rng);
    PathModel m1(lam, PathKind::B1), mn(lam, PathKind::Bn), ma(lam, PathKind::Ad);
    const auto p1 = m1.from_word(w), pn = mn.from_word(w), pa = ma.from_word(w);
    CHECK(eps_vec(m1, p1) == eps_vec(mn, pn));
    CHECK(eps_vec(m1, p1) == eps_vec(ma, pa));
    CHECK(phi_vec(m1, p1) == phi_vec(ma, pa));
    CHECK(mn.from_word(m1.to_word(p1)) == pn);
    CHECK(ma.from_word(mn.to_word(pn)) == pa);
  }
}

TEST_CASE("stripping column 0 shifts the path") {
  std::mt19937_64 rng(22);
  for (int t = 0; t < 40; ++t) {
    const int n = 1 + static_cast<int>(rng() % 3);
    const WeightVec lam = random_dominant(n, 1 + static_cast<int>(rng() % 3), rng);
    const Word w = random_word(lam, 12, rng);
    const RootVector a = word_content(w, n);
    PathModel m1(lam, PathKind::B1), mn(lam, PathKind::Bn);
    const auto p1 = m1.from_word(w);
    const auto pn = mn.from_word(w);
    const auto [rest, b] = phi1_step(F1_invert(p1, a));
    const auto q1 = F1(rest);
    PathModel r1(q1.lambda, PathKind::B1);
    CHECK(Factor(b) == m1.factor(p1, 0));
    for (int k = 0; k < static_cast<int>(p1.deviations.size()) + n + 2; ++k)
      CHECK(r1.factor(q1, k) == m1.factor(p1, k + 1));
    const auto [restn, bb] = phiN_step(Fn_invert(pn, a));
    const auto qn = Fn(restn);
    PathModel rn(qn.lambda, PathKind::Bn);
    CHECK(Factor(bb) == mn.factor(pn, 0));
    for (int k = 0; k < static_cast<int>(pn.deviations.size()) + n + 2; ++k)
      CHECK(rn.factor(qn, k) == mn.factor(pn, k + 1));
  }
}

TEST_CASE("kernel filtrations are monotone") {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 15; ++t) {
    const int n = 1 + static_cast<int>(rng() % 3);
    const WeightVec lam = random_dominant(n, 1 + static_cast<int>(rng() % 2), rng);
    const Word w = random_word(lam, 10, rng);
    const Geometry g = compute_geometry(lam, w, t);
    for (const auto* seq : {&g.table.ker_x, &g.table.ker_xbar, &g.table.ker_xxbar, &g.table.ker_xbar_xxbar}) {
      for (std::size_t k = 1; k < seq->size(); ++k) CHECK((*seq)[k - 1].le((*seq)[k]));
      CHECK(seq->back() == g.alpha);
    }
    for (int k = 0; k < 6; ++k) {
      // ker (x xbar)^k sits between ker xbar (x xbar)^{k-1} and ker xbar (x xbar)^k
      CHECK(KernelTable::value(g.table.ker_xxbar, k).le(KernelTable::value(g.table.ker_xbar_xxbar, k)));
      if (k > 0)
        CHECK(KernelTable::value(g.table.ker_xbar_xxbar, k - 1).le(KernelTable::value(g.table.ker_xxbar, k)));
    }
  }
}
