#include "affcrystal/perfect_crystals.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace affcrystal {

namespace {

int sum_of(const std::vector<int>& v) { return std::accumulate(v.begin(), v.end(), 0); }

bool nonnegative(const std::vector<int>& v) {
  return std::all_of(v.begin(), v.end(), [](int x) { return x >= 0; });
}

void compositions_rec(int total, int parts, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == parts - 1) {
    cur.push_back(total);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (int v = total; v >= 0; --v) {
    cur.push_back(v);
    compositions_rec(total - v, parts, cur, out);
    cur.pop_back();
  }
}

// B^1 rules on a raw multiplicity vector of any level.
std::optional<std::vector<int>> b1_move(Op op, int i, std::vector<int> v) {
  const int n = static_cast<int>(v.size()) - 1;
  // f_i moves one box from slot `from` to slot `to`; e_i reverses.
  int from = i == 0 ? n : i - 1;
  int to = i == 0 ? 0 : i;
  if (op == Op::e) std::swap(from, to);
  if (v[from] == 0) return std::nullopt;
  --v[from];
  ++v[to];
  return v;
}

std::optional<std::vector<int>> bn_move(Op op, int i, std::vector<int> v) {
  const int n = static_cast<int>(v.size()) - 1;
  int from = i == 0 ? 0 : i;
  int to = i == 0 ? n : i - 1;
  if (op == Op::e) std::swap(from, to);
  if (v[from] == 0) return std::nullopt;
  --v[from];
  ++v[to];
  return v;
}

int b1_eps(int i, const std::vector<int>& v) { return i == 0 ? v[0] : v[i]; }
int b1_phi(int i, const std::vector<int>& v) { return i == 0 ? v.back() : v[i - 1]; }
int bn_eps(int i, const std::vector<int>& v) { return i == 0 ? v.back() : v[i - 1]; }
int bn_phi(int i, const std::vector<int>& v) { return i == 0 ? v[0] : v[i]; }

WeightVec weight_from(int n, auto eps, auto phi, const std::vector<int>& v) {
  WeightVec w = WeightVec::zero(n);
  for (int i = 0; i <= n; ++i) w.a[i] = phi(i, v) - eps(i, v);
  return w;
}

std::string join_tokens(const std::vector<std::string>& toks) {
  std::string s;
  for (std::size_t i = 0; i < toks.size(); ++i) s += (i ? "," : "") + toks[i];
  return "[" + s + "]";
}

void check_rank(std::size_t size, int n, const char* what) {
  if (static_cast<int>(size) != n + 1) throw std::invalid_argument(std::string(what) + ": wrong vector length");
}

}  // namespace

int AdjElem::k() const { return sum_of(m); }

std::vector<std::vector<int>> compositions(int total, int parts) {
  std::vector<std::vector<int>> out;
  if (parts <= 0) return out;
  std::vector<int> cur;
  compositions_rec(total, parts, cur, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<WeightVec> dominant_weights(int n, int ell) {
  std::vector<WeightVec> out;
  for (auto& c : compositions(ell, n + 1)) out.emplace_back(std::move(c));
  return out;
}

// ---- B^{1,l} ----

B1Crystal::B1Crystal(int n, int ell) : n_(n), ell_(ell) {
  if (n < 1 || ell < 0) throw std::invalid_argument("B1Crystal: need n >= 1, l >= 0");
}

std::optional<B1Elem> B1Crystal::apply(Op op, int i, const B1Elem& b) const {
  auto v = b1_move(op, wrap_index(i, n_ + 1), b.nu);
  if (!v) return std::nullopt;
  return B1Elem{std::move(*v)};
}
int B1Crystal::epsilon(int i, const B1Elem& b) const { return b1_eps(wrap_index(i, n_ + 1), b.nu); }
int B1Crystal::phi(int i, const B1Elem& b) const { return b1_phi(wrap_index(i, n_ + 1), b.nu); }
WeightVec B1Crystal::weight(const B1Elem& b) const { return weight_from(n_, b1_eps, b1_phi, b.nu); }
std::string B1Crystal::label(const B1Elem& b) const { return render_b1(b); }
bool B1Crystal::valid(const B1Elem& b) const {
  return static_cast<int>(b.nu.size()) == n_ + 1 && nonnegative(b.nu) && sum_of(b.nu) == ell_;
}
std::vector<B1Elem> B1Crystal::elements() const {
  std::vector<B1Elem> out;
  for (auto& c : compositions(ell_, n_ + 1)) out.push_back({std::move(c)});
  return out;
}

// ---- B^{n,l} ----

BnCrystal::BnCrystal(int n, int ell) : n_(n), ell_(ell) {
  if (n < 1 || ell < 0) throw std::invalid_argument("BnCrystal: need n >= 1, l >= 0");
}

std::optional<BnElem> BnCrystal::apply(Op op, int i, const BnElem& b) const {
  auto v = bn_move(op, wrap_index(i, n_ + 1), b.nubar);
  if (!v) return std::nullopt;
  return BnElem{std::move(*v)};
}
int BnCrystal::epsilon(int i, const BnElem& b) const { return bn_eps(wrap_index(i, n_ + 1), b.nubar); }
int BnCrystal::phi(int i, const BnElem& b) const { return bn_phi(wrap_index(i, n_ + 1), b.nubar); }
WeightVec BnCrystal::weight(const BnElem& b) const { return weight_from(n_, bn_eps, bn_phi, b.nubar); }
std::string BnCrystal::label(const BnElem& b) const { return render_bn(b); }
bool BnCrystal::valid(const BnElem& b) const {
  return static_cast<int>(b.nubar.size()) == n_ + 1 && nonnegative(b.nubar) && sum_of(b.nubar) == ell_;
}
std::vector<BnElem> BnCrystal::elements() const {
  std::vector<BnElem> out;
  for (auto& c : compositions(ell_, n_ + 1)) out.push_back({std::move(c)});
  return out;
}

// ---- B^{ad,l} ----

std::optional<AdjElem> adj_apply0(Op op, const AdjElem& b, int ell) {
  AdjElem a = b;
  auto& mb = a.mbar;
  auto& m = a.m;
  const int n = static_cast<int>(m.size()) - 1;
  const int k = a.k();
  const int phi1 = m[n], eps1 = m[0], eps2 = mb[n], phi2 = mb[0];
  if (op == Op::f) {
    if (phi1 > eps2 && phi2 > 0) {
      --mb[0];
      --m[n];
    } else if (phi1 > eps2 && phi2 == 0) {
      ++m[0];
      --m[n];
    } else if (phi1 <= eps2 && phi2 > 0) {
      --mb[0];
      ++mb[n];
    } else if (phi1 <= eps2 && phi2 == 0 && k < ell) {
      ++mb[n];
      ++m[0];
    } else {
      return std::nullopt;
    }
  } else {
    if (phi1 >= eps2 && eps1 > 0) {
      --m[0];
      ++m[n];
    } else if (phi1 >= eps2 && eps1 == 0 && k < ell) {
      ++mb[0];
      ++m[n];
    } else if (phi1 < eps2 && eps1 > 0) {
      --mb[n];
      --m[0];
    } else if (phi1 < eps2 && eps1 == 0) {
      ++mb[0];
      --mb[n];
    } else {
      return std::nullopt;
    }
  }
  assert(sum_of(a.mbar) == sum_of(a.m) && a.mbar[0] * a.m[0] == 0);
  return a;
}

std::optional<AdjElem> adj_apply_classical(Op op, int i, const AdjElem& b) {
  if (b.k() == 0) return std::nullopt;
  // Right tableau half (boxes, B^1) on the left of the signature word.
  const SignatureEntry sig[2] = {{b1_eps(i, b.m), b1_phi(i, b.m)}, {bn_eps(i, b.mbar), bn_phi(i, b.mbar)}};
  const auto which = signature_select(op, sig);
  if (!which) return std::nullopt;
  AdjElem a = b;
  if (*which == 0) {
    auto v = b1_move(op, i, a.m);
    if (!v) return std::nullopt;
    a.m = std::move(*v);
  } else {
    auto v = bn_move(op, i, a.mbar);
    if (!v) return std::nullopt;
    a.mbar = std::move(*v);
  }
  if (a.mbar[0] * a.m[0] != 0) throw std::logic_error("adj_apply_classical: semistandardness lost");
  return a;
}

AdjCrystal::AdjCrystal(int n, int ell) : n_(n), ell_(ell) {
  if (n < 1 || ell < 0) throw std::invalid_argument("AdjCrystal: need n >= 1, l >= 0");
}

std::optional<AdjElem> AdjCrystal::apply(Op op, int i, const AdjElem& b) const {
  i = wrap_index(i, n_ + 1);
  return i == 0 ? adj_apply0(op, b, ell_) : adj_apply_classical(op, i, b);
}

int AdjCrystal::epsilon(int i, const AdjElem& b) const {
  int count = 0;
  for (auto cur = apply(Op::e, i, b); cur; cur = apply(Op::e, i, *cur)) ++count;
  return count;
}

int AdjCrystal::phi(int i, const AdjElem& b) const {
  int count = 0;
  for (auto cur = apply(Op::f, i, b); cur; cur = apply(Op::f, i, *cur)) ++count;
  return count;
}

WeightVec AdjCrystal::weight(const AdjElem& b) const {
  return weight_from(n_, b1_eps, b1_phi, b.m) + weight_from(n_, bn_eps, bn_phi, b.mbar);
}

std::string AdjCrystal::label(const AdjElem& b) const { return render_adj(b, n_); }

bool AdjCrystal::valid(const AdjElem& b) const {
  if (static_cast<int>(b.m.size()) != n_ + 1 || b.mbar.size() != b.m.size()) return false;
  if (!nonnegative(b.m) || !nonnegative(b.mbar)) return false;
  return sum_of(b.m) == sum_of(b.mbar) && b.k() <= ell_ && b.mbar[0] * b.m[0] == 0;
}

std::vector<AdjElem> AdjCrystal::elements() const {
  std::vector<AdjElem> out;
  for (int k = 0; k <= ell_; ++k) {
    const auto comps = compositions(k, n_ + 1);
    for (const auto& mb : comps)
      for (const auto& m : comps)
        if (mb[0] * m[0] == 0) out.push_back({mb, m});
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---- rendering ----

std::string render_b1(const B1Elem& b) {
  std::vector<std::string> toks;
  for (std::size_t i = 0; i < b.nu.size(); ++i)
    for (int c = 0; c < b.nu[i]; ++c) toks.push_back(std::to_string(i + 1));
  return "rows: " + join_tokens(toks);
}

std::string render_bn(const BnElem& b) {
  std::vector<std::string> toks;
  for (std::size_t i = b.nubar.size(); i-- > 0;)
    for (int c = 0; c < b.nubar[i]; ++c) toks.push_back(std::to_string(i + 1) + "~");
  return "rows: " + join_tokens(toks);
}

std::string render_adj(const AdjElem& b, int n) {
  if (b.k() == 0) return "rows: []";
  std::vector<std::vector<std::string>> rows(n);
  for (int i = n + 1; i >= 1; --i) {
    for (int c = 0; c < b.mbar[i - 1]; ++c) {
      int r = 0;
      for (int v = 1; v <= n + 1; ++v)
        if (v != i) rows[r++].push_back(std::to_string(v));
    }
  }
  for (int i = 1; i <= n + 1; ++i)
    for (int c = 0; c < b.m[i - 1]; ++c) rows[0].push_back(std::to_string(i));
  std::string s = "rows: ";
  for (int r = 0; r < n; ++r) s += (r ? "," : "") + join_tokens(rows[r]);
  return s;
}

// ---- weights <-> elements ----

namespace {

std::vector<int> psi_common(const WeightVec& w, int ell, int sign, const char* who) {
  const int n = w.rank();
  long long s = ell;
  for (int k = 1; k <= n; ++k) s += sign * static_cast<long long>(k) * w.a[k];
  if (s % (n + 1) != 0)
    throw std::domain_error(std::string(who) + ": weight " + w.to_string() + " not in the image of wt");
  const long long base = s / (n + 1);
  std::vector<int> v(n + 1);
  long long tail = 0;
  for (int i = n + 1; i >= 1; --i) {
    if (i <= n) tail += w.a[i];
    const long long val = base + (sign > 0 ? -tail : tail);
    if (val < 0) throw std::domain_error(std::string(who) + ": weight " + w.to_string() + " not in the image of wt");
    v[i - 1] = static_cast<int>(val);
  }
  if (sum_of(v) != ell || w.level() != 0)
    throw std::domain_error(std::string(who) + ": weight " + w.to_string() + " not in the image of wt");
  return v;
}

}  // namespace

B1Elem psi1(const WeightVec& w, int ell) { return {psi_common(w, ell, -1, "psi1")}; }
BnElem psiN(const WeightVec& w, int ell) { return {psi_common(w, ell, +1, "psiN")}; }

B1Elem ground_b1(const WeightVec& lambda, int k) {
  const int size = static_cast<int>(lambda.size());
  B1Elem b{std::vector<int>(size)};
  for (int j = 1; j <= size; ++j) b.nu[j - 1] = lambda.a[wrap_index(j + k, size)];
  return b;
}

BnElem ground_bn(const WeightVec& lambda, int k) {
  const int size = static_cast<int>(lambda.size());
  BnElem b{std::vector<int>(size)};
  for (int j = 1; j <= size; ++j) b.nubar[j - 1] = lambda.a[wrap_index(j - k - 1, size)];
  return b;
}

AdjElem ground_adj(const WeightVec& lambda) {
  AdjElem a{std::vector<int>(lambda.size(), 0), std::vector<int>(lambda.size(), 0)};
  for (std::size_t i = 1; i < lambda.size(); ++i) a.m[i] = a.mbar[i] = lambda.a[i];
  return a;
}

AdjElem xi(const B1Elem& b, const BnElem& bbar) {
  check_rank(b.nu.size(), static_cast<int>(bbar.nubar.size()) - 1, "xi");
  if (sum_of(b.nu) != sum_of(bbar.nubar)) throw std::invalid_argument("xi: levels differ");
  const int c = std::min(b.nu[0], bbar.nubar[0]);
  AdjElem a{bbar.nubar, b.nu};
  a.mbar[0] -= c;
  a.m[0] -= c;
  return a;
}

std::pair<B1Elem, BnElem> xi_inv(const AdjElem& a, int ell) {
  const int c = ell - a.k();
  if (c < 0) throw std::invalid_argument("xi_inv: element exceeds level");
  B1Elem b{a.m};
  BnElem bb{a.mbar};
  b.nu[0] += c;
  bb.nubar[0] += c;
  return {b, bb};
}

AdjElem psiAd(const WeightVec& r, const WeightVec& s, int ell) { return xi(psi1(r, ell), psiN(s, ell)); }

}  // namespace affcrystal
