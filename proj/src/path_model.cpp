#include "affcrystal/path_model.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace affcrystal {

std::string kind_name(PathKind k) {
  switch (k) {
    case PathKind::B1: return "B1";
    case PathKind::Bn: return "Bn";
    case PathKind::Ad: return "Ad";
  }
  return "?";
}

PathKind parse_kind(const std::string& s) {
  std::string t;
  for (char c : s) t += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (t == "b1") return PathKind::B1;
  if (t == "bn") return PathKind::Bn;
  if (t == "ad") return PathKind::Ad;
  throw std::invalid_argument("unknown path kind '" + s + "' (expected b1, bn or ad)");
}

bool operator<(const PathElem& a, const PathElem& b) {
  return std::tie(a.lambda, a.kind, a.deviations) < std::tie(b.lambda, b.kind, b.deviations);
}

Word parse_word(const std::string& text) {
  Word w;
  std::istringstream is(text);
  std::string tok;
  while (is >> tok) {
    const auto caret = tok.find('^');
    const std::string head = tok.substr(0, caret);
    const std::string tail = caret == std::string::npos ? "1" : tok.substr(caret + 1);
    auto to_int = [&](const std::string& s) {
      if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
        throw std::invalid_argument("bad word token '" + tok + "'");
      return std::stoi(s);
    };
    const int i = to_int(head);
    const int m = to_int(tail);
    if (m > 0) w.emplace_back(i, m);
  }
  return w;
}

std::string word_to_string(const Word& w) {
  std::string s;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (k) s += ' ';
    s += std::to_string(w[k].first);
    if (w[k].second != 1) s += "^" + std::to_string(w[k].second);
  }
  return s;
}

RootVector word_content(const Word& w, int n) {
  RootVector r = RootVector::zero(n);
  for (auto [i, m] : w) r.k.at(i) += m;
  return r;
}

PathModel::PathModel(WeightVec lambda, PathKind kind)
    : lambda_(std::move(lambda)),
      kind_(kind),
      n_(lambda_.rank()),
      ell_(lambda_.level()),
      b1_(lambda_.rank(), lambda_.level()),
      bn_(lambda_.rank(), lambda_.level()),
      ad_(lambda_.rank(), lambda_.level()) {
  if (!lambda_.is_dominant()) throw std::invalid_argument("PathModel: Lambda must be dominant");
  if (ell_ < 1) throw std::invalid_argument("PathModel: Lambda must have positive level");
}

PathElem PathModel::ground() const { return PathElem{lambda_, kind_, {}}; }

Factor PathModel::ground_factor(int k) const {
  switch (kind_) {
    case PathKind::B1: return ground_b1(lambda_, k);
    case PathKind::Bn: return ground_bn(lambda_, k);
    case PathKind::Ad: return ground_adj(lambda_);
  }
  throw std::logic_error("bad kind");
}

Factor PathModel::factor(const PathElem& p, int k) const {
  if (k < static_cast<int>(p.deviations.size())) return p.deviations[k];
  return ground_factor(k);
}

int PathModel::factor_eps(int i, const Factor& b) const {
  switch (kind_) {
    case PathKind::B1: return b1_.epsilon(i, std::get<B1Elem>(b));
    case PathKind::Bn: return bn_.epsilon(i, std::get<BnElem>(b));
    case PathKind::Ad: return ad_.epsilon(i, std::get<AdjElem>(b));
  }
  return 0;
}

int PathModel::factor_phi(int i, const Factor& b) const {
  switch (kind_) {
    case PathKind::B1: return b1_.phi(i, std::get<B1Elem>(b));
    case PathKind::Bn: return bn_.phi(i, std::get<BnElem>(b));
    case PathKind::Ad: return ad_.phi(i, std::get<AdjElem>(b));
  }
  return 0;
}

WeightVec PathModel::factor_weight(const Factor& b) const {
  switch (kind_) {
    case PathKind::B1: return b1_.weight(std::get<B1Elem>(b));
    case PathKind::Bn: return bn_.weight(std::get<BnElem>(b));
    case PathKind::Ad: return ad_.weight(std::get<AdjElem>(b));
  }
  return {};
}

std::optional<Factor> PathModel::factor_apply(Op op, int i, const Factor& b) const {
  switch (kind_) {
    case PathKind::B1:
      if (auto r = b1_.apply(op, i, std::get<B1Elem>(b))) return Factor{*r};
      break;
    case PathKind::Bn:
      if (auto r = bn_.apply(op, i, std::get<BnElem>(b))) return Factor{*r};
      break;
    case PathKind::Ad:
      if (auto r = ad_.apply(op, i, std::get<AdjElem>(b))) return Factor{*r};
      break;
  }
  return std::nullopt;
}

std::string PathModel::factor_label(const Factor& b) const {
  switch (kind_) {
    case PathKind::B1: return render_b1(std::get<B1Elem>(b));
    case PathKind::Bn: return render_bn(std::get<BnElem>(b));
    case PathKind::Ad: return render_adj(std::get<AdjElem>(b), n_);
  }
  return {};
}

PathElem PathModel::normalize(PathElem p) const {
  while (!p.deviations.empty() && p.deviations.back() == ground_factor(static_cast<int>(p.deviations.size()) - 1))
    p.deviations.pop_back();
  return p;
}

void PathModel::check(const PathElem& p) const {
  if (p.kind != kind_ || p.lambda != lambda_) throw std::invalid_argument("path does not belong to this model");
}

int PathModel::default_width(const PathElem& p) const { return static_cast<int>(p.deviations.size()) + n_ + 2; }

// Factors at positions width-1 .. 0, preceded on the left by a virtual
// highest weight factor standing for everything beyond the window: eps = 0,
// phi = eps(ground factor at width-1).
PathModel::Outcome PathModel::apply_in_window(Op op, int i, const PathElem& p, int width) const {
  std::vector<Factor> facs;
  facs.reserve(width);
  for (int k = 0; k < width; ++k) facs.push_back(factor(p, k));
  std::vector<SignatureEntry> sig;
  sig.reserve(width + 1);
  sig.push_back({0, factor_eps(i, facs[width - 1])});
  for (int k = width - 1; k >= 0; --k) sig.push_back({factor_eps(i, facs[k]), factor_phi(i, facs[k])});
  Outcome out;
  const auto which = signature_select(op, sig);
  if (!which) return out;
  if (*which == 0) {
    out.hit_virtual = true;
    return out;
  }
  const int pos = width - static_cast<int>(*which);
  auto next = factor_apply(op, i, facs[pos]);
  if (!next) return out;
  PathElem q = p;
  if (static_cast<int>(q.deviations.size()) <= pos)
    for (int k = static_cast<int>(q.deviations.size()); k <= pos; ++k) q.deviations.push_back(ground_factor(k));
  q.deviations[pos] = std::move(*next);
  out.result = normalize(std::move(q));
  return out;
}

std::optional<PathElem> PathModel::apply(Op op, int i, const PathElem& p) const {
  check(p);
  i = wrap_index(i, n_ + 1);
  int width = default_width(p);
  for (int attempt = 0; attempt < 8; ++attempt, width *= 2) {
    auto out = apply_in_window(op, i, p, width);
    if (!out.hit_virtual) return out.result;
  }
  throw std::logic_error("path_apply: window did not stabilize");
}

std::optional<PathElem> PathModel::apply_window(Op op, int i, const PathElem& p, int extra) const {
  check(p);
  auto out = apply_in_window(op, wrap_index(i, n_ + 1), p, default_width(p) + extra);
  if (out.hit_virtual) throw std::logic_error("path_apply: operator reached the window boundary");
  return out.result;
}

std::pair<int, int> PathModel::eps_phi(int i, const PathElem& p) const {
  check(p);
  i = wrap_index(i, n_ + 1);
  const int width = default_width(p);
  std::vector<SignatureEntry> sig;
  sig.push_back({0, factor_eps(i, factor(p, width - 1))});
  for (int k = width - 1; k >= 0; --k) {
    const auto f = factor(p, k);
    sig.push_back({factor_eps(i, f), factor_phi(i, f)});
  }
  return eps_phi_tensor(sig);
}

int PathModel::epsilon(int i, const PathElem& p) const { return eps_phi(i, p).first; }
int PathModel::phi(int i, const PathElem& p) const { return eps_phi(i, p).second; }

WeightVec PathModel::weight(const PathElem& p) const {
  check(p);
  WeightVec w = lambda_;
  for (int k = 0; k < static_cast<int>(p.deviations.size()); ++k)
    w += factor_weight(p.deviations[k]) - factor_weight(ground_factor(k));
  return w;
}

std::string PathModel::label(const PathElem& p) const {
  std::string s;
  for (int k = static_cast<int>(p.deviations.size()); k-- > 0;) {
    s += factor_label(p.deviations[k]);
    if (k) s += " (x) ";
  }
  return s.empty() ? "ground" : s;
}

PathElem PathModel::from_word(const Word& w) const {
  PathElem p = ground();
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    for (int r = 0; r < it->second; ++r) {
      auto next = apply(Op::f, it->first, p);
      if (!next)
        throw std::runtime_error("word kills highest weight vector: f_" + std::to_string(it->first) +
                                 " gives 0 in '" + word_to_string(w) + "'");
      p = std::move(*next);
    }
  }
  return p;
}

Word PathModel::to_word(const PathElem& p) const {
  Word w;
  PathElem cur = p;
  while (!(cur == ground())) {
    bool moved = false;
    for (int i = 0; i <= n_ && !moved; ++i) {
      if (auto up = apply(Op::e, i, cur)) {
        if (!w.empty() && w.back().first == i)
          ++w.back().second;
        else
          w.emplace_back(i, 1);
        cur = std::move(*up);
        moved = true;
      }
    }
    if (!moved) throw std::logic_error("to_word: element is not connected to the ground path");
  }
  return w;
}

PathElem ground_path(const WeightVec& lambda, PathKind kind) { return PathModel(lambda, kind).ground(); }

PathElem from_word(const WeightVec& lambda, PathKind kind, const Word& w) {
  return PathModel(lambda, kind).from_word(w);
}

WeightVec path_wt(const PathElem& p) { return PathModel(p.lambda, p.kind).weight(p); }

}  // namespace affcrystal
