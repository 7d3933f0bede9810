#include "affcrystal/verify.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace affcrystal {

namespace {

void record(SuiteReport& rep, bool pass, const std::string& what) {
  rep.lines.push_back(std::string(pass ? "PASS " : "FAIL ") + what);
  if (!pass) rep.ok = false;
}

std::string join(const std::vector<std::string>& v, const char* sep) {
  std::string out;
  for (std::size_t k = 0; k < v.size(); ++k) out += (k ? sep : "") + v[k];
  return out;
}

const std::pair<int, int> kGrid[] = {{1, 1}, {1, 2}, {2, 1}, {2, 2}, {2, 3}, {3, 2}};

long binomial(int a, int b) {
  long r = 1;
  for (int k = 1; k <= b; ++k) r = r * (a - b + k) / k;
  return r;
}

// Displays of the worked example, rightmost factor first.
const std::vector<Factor>& example_factors(PathKind kind) {
  static const std::vector<Factor> b1 = {B1Elem{{1, 1, 1}}, B1Elem{{0, 0, 3}}, B1Elem{{0, 2, 1}},
                                         B1Elem{{0, 1, 2}}, B1Elem{{0, 2, 1}}};
  static const std::vector<Factor> bn = {BnElem{{2, 1, 0}}, BnElem{{3, 0, 0}}, BnElem{{0, 1, 2}},
                                         BnElem{{3, 0, 0}}, BnElem{{0, 3, 0}}, BnElem{{1, 0, 2}}};
  static const std::vector<Factor> ad = {AdjElem{{2, 1, 0}, {0, 2, 1}}, AdjElem{{1, 0, 0}, {0, 0, 1}},
                                         AdjElem{{0, 1, 0}, {0, 1, 0}}, AdjElem{{0, 1, 0}, {0, 1, 0}}};
  switch (kind) {
    case PathKind::B1: return b1;
    case PathKind::Bn: return bn;
    case PathKind::Ad: return ad;
  }
  return b1;
}

bool matches_display(const PathElem& p, PathKind kind) {
  PathModel model(p.lambda, p.kind);
  const auto& want = example_factors(kind);
  for (std::size_t k = 0; k < want.size(); ++k)
    if (!(model.factor(p, static_cast<int>(k)) == want[k])) return false;
  return true;
}

std::vector<std::string> unit_strings(const WallMatrix& m) {
  std::vector<std::string> out;
  for (const auto& u : m.units) out.push_back(unit_string(u));
  return out;
}

void suite_example(SuiteReport& rep, const VerifyOptions& opt) {
  const auto r = pipeline(example_lambda(), example_word(), opt.seed);
  record(rep, matches_display(r.direct[0], PathKind::B1), "example: p1 display");
  record(rep, matches_display(r.direct[1], PathKind::Bn), "example: pn display");
  record(rep, matches_display(r.direct[2], PathKind::Ad), "example: pad display");
  record(rep, r.alpha == RootVector{4, 7, 6}, "example: alpha = 4a0 + 7a1 + 6a2");

  const std::vector<std::string> x_want = {"E^0_{0,0}", "E^0_{1,1}", "E^0_{3,2}", "E^0_{5,3}", "E^1_{2,4}",
                                           "E^2_{0,0}", "E^2_{2,1}", "E^2_{5,3}", "E^2_{6,4}"};
  const std::vector<std::string> xb_want = {"Ebar^0_{2,3}", "Ebar^1_{0,0}", "Ebar^1_{2,1}", "Ebar^1_{5,2}",
                                            "Ebar^1_{6,3}", "Ebar^2_{0,0}", "Ebar^2_{3,4}", "Ebar^2_{4,5}"};
  record(rep, unit_strings(r.x_units) == x_want, "example: x(Y) units " + join(unit_strings(r.x_units), " "));
  record(rep, unit_strings(r.xbar_units) == xb_want,
         "example: xbar(Ybar) units " + join(unit_strings(r.xbar_units), " "));
  record(rep, r.commutant_dim == 29, "example: commutant dimension " + std::to_string(r.commutant_dim));

  using Seq = std::vector<RootVector>;
  const Seq kx = {{0, 0, 0}, {3, 3, 2}, {4, 4, 5}, {4, 6, 6}, {4, 7, 6}};
  const Seq kxb = {{0, 0, 0}, {3, 3, 3}, {3, 6, 4}, {4, 6, 5}, {4, 7, 5}, {4, 7, 6}};
  const Seq kxxb = {{0, 0, 0}, {4, 6, 5}, {4, 7, 6}};
  const Seq kxbxxb = {{3, 3, 3}, {4, 7, 5}, {4, 7, 6}};
  const auto& t = r.table;
  record(rep, t.ker_x == kx && t.ker_xbar == kxb && t.ker_xxbar == kxxb && t.ker_xbar_xxbar == kxbxxb,
         "example: kernel tables");
  record(rep, r.ok, "example: pipeline report" + (r.messages.empty() ? "" : " (" + join(r.messages, "; ") + ")"));

  if (!opt.fixture.empty()) {
    Json golden;
    std::ifstream in(opt.fixture);
    if (!in) {
      record(rep, false, "example: cannot read fixture " + opt.fixture);
      return;
    }
    try {
      golden = Json::parse(in);
    } catch (const std::exception& e) {
      record(rep, false, std::string("example: fixture is not JSON: ") + e.what());
      return;
    }
    const Json diff = json_diff(golden, example_json(opt.seed));
    record(rep, diff.empty(), "example: fixture " + opt.fixture + (diff.empty() ? "" : " differs: " + diff.dump()));
  }
}

void suite_xi(SuiteReport& rep) {
  for (const auto& [n, ell] : kGrid) {
    B1Crystal b1(n, ell);
    BnCrystal bn(n, ell);
    AdjCrystal ad(n, ell);
    const auto e1 = b1.elements();
    const auto en = bn.elements();
    const auto ea = ad.elements();
    std::set<AdjElem> image;
    bool roundtrip = true, valid = true, intertwines = true;
    std::string witness;
    for (const auto& b : e1)
      for (const auto& bb : en) {
        const AdjElem a = xi(b, bb);
        image.insert(a);
        valid = valid && ad.valid(a);
        if (xi_inv(a, ell) != std::make_pair(b, bb)) roundtrip = false;
        for (int i = 0; i <= n && intertwines; ++i)
          for (Op op : {Op::e, Op::f}) {
            const auto lhs = pair_apply(n, ell, op, i, b, bb);
            const auto rhs = ad.apply(op, i, a);
            const bool same = lhs ? (rhs && *rhs == xi(lhs->first, lhs->second)) : !rhs;
            if (!same) {
              intertwines = false;
              witness = std::string(1, op_char(op)) + std::to_string(i) + " on " + b1.label(b) + " (x) " + bn.label(bb);
              break;
            }
          }
      }
    const long want = binomial(ell + n, n) * binomial(ell + n, n);
    const std::string tag = "xi n=" + std::to_string(n) + " l=" + std::to_string(ell);
    record(rep, static_cast<long>(ea.size()) == want && static_cast<long>(image.size()) == want && valid,
           tag + ": bijection onto " + std::to_string(want) + " elements");
    record(rep, roundtrip, tag + ": xi_inv after xi is the identity");
    record(rep, intertwines, tag + ": intertwines e_i, f_i" + (witness.empty() ? "" : " (" + witness + ")"));
  }
}

template <CrystalModel C>
void perfect_case(SuiteReport& rep, const C& c, const std::string& tag) {
  const auto r = verify_perfect(c, c.elements(), c.level());
  record(rep, r.ok, tag + (r.ok ? "" : ": " + r.condition + " fails at " + r.witness));
}

void suite_perfect(SuiteReport& rep) {
  for (const auto& [n, ell] : kGrid) {
    const std::string suffix = " n=" + std::to_string(n) + " l=" + std::to_string(ell);
    perfect_case(rep, B1Crystal(n, ell), "perfect B1" + suffix);
    perfect_case(rep, BnCrystal(n, ell), "perfect Bn" + suffix);
    perfect_case(rep, AdjCrystal(n, ell), "perfect Ad" + suffix);
  }
}

void suite_bridge(SuiteReport& rep, const VerifyOptions& opt) {
  std::mt19937_64 rng(opt.seed);
  int passed = 0;
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 3);
    const int ell = 1 + static_cast<int>(rng() % 3);
    const WeightVec lambda = random_dominant(n, ell, rng);
    const Word word = random_word(lambda, 12, rng);
    const auto r = pipeline(lambda, word, sample_seed(opt.seed, trial));
    if (r.ok) {
      ++passed;
      continue;
    }
    record(rep, false, "bridge lambda=" + lambda.to_string() + " word=\"" + word_to_string(word) +
                           "\": " + join(r.messages, "; "));
  }
  record(rep, passed == 50, "bridge: " + std::to_string(passed) + "/50 random components");
}

void suite_axioms(SuiteReport& rep, const VerifyOptions& opt) {
  std::mt19937_64 rng(opt.seed ^ 0x5eedULL);
  GraphBudget budget;
  budget.max_elements = 500;
  for (int trial = 0; trial < 5; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 3);
    const int ell = 1 + static_cast<int>(rng() % 3);
    const WeightVec lambda = random_dominant(n, ell, rng);
    for (PathKind kind : {PathKind::B1, PathKind::Bn, PathKind::Ad}) {
      PathModel model(lambda, kind);
      const auto g = generate_graph(model, model.ground(), budget);
      const auto r = check_axioms(g.graph);
      record(rep, r.ok && g.graph.size() == 500,
             "axioms " + kind_name(kind) + " lambda=" + lambda.to_string() + " (" + std::to_string(g.graph.size()) +
                 " nodes)" + (r.ok ? "" : ": " + r.axiom + " at " + r.witness));
    }
  }
}

}  // namespace

std::vector<std::string> suite_names() { return {"example", "xi", "perfect", "bridge", "axioms", "all"}; }

SuiteReport run_suite(const std::string& name, const VerifyOptions& opt) {
  SuiteReport rep;
  rep.suite = name;
  const std::map<std::string, std::function<void(SuiteReport&)>> suites = {
      {"example", [&](SuiteReport& r) { suite_example(r, opt); }},
      {"xi", [](SuiteReport& r) { suite_xi(r); }},
      {"perfect", [](SuiteReport& r) { suite_perfect(r); }},
      {"bridge", [&](SuiteReport& r) { suite_bridge(r, opt); }},
      {"axioms", [&](SuiteReport& r) { suite_axioms(r, opt); }},
  };
  if (name == "all") {
    for (const auto& s : {"example", "xi", "perfect", "bridge", "axioms"}) suites.at(s)(rep);
    return rep;
  }
  auto it = suites.find(name);
  if (it == suites.end()) throw std::invalid_argument("unknown suite '" + name + "'");
  it->second(rep);
  return rep;
}

WeightVec example_lambda() { return WeightVec{2, 1, 0}; }
Word example_word() { return parse_word("1^4 2^5 1^2 0^4 2 1"); }

Json example_json(std::uint64_t seed) {
  const auto r = pipeline(example_lambda(), example_word(), seed);
  Json j;
  j["schema"] = kSchema;
  j["type"] = "example_golden";
  j["lambda"] = to_json(r.lambda);
  j["word"] = word_to_string(r.word);
  Json paths;
  paths["B1"] = to_json(r.direct[0]);
  paths["Bn"] = to_json(r.direct[1]);
  paths["Ad"] = to_json(r.direct[2]);
  j["paths"] = paths;
  // Rendered factors for the positions shown in the displays, tail included.
  Json displays;
  for (int k = 0; k < 3; ++k) {
    const PathElem& p = r.direct[k];
    PathModel model(p.lambda, p.kind);
    Json row = Json::array();
    for (std::size_t pos = 0; pos < example_factors(p.kind).size(); ++pos)
      row.push_back(model.factor_label(model.factor(p, static_cast<int>(pos))));
    displays[kind_name(p.kind)] = row;
  }
  j["displays"] = displays;
  Json q = quiver_json(r);
  q.erase("seed");
  q["kernelTable"].erase("seeds");
  j["quiver"] = q;
  return j;
}

Json json_diff(const Json& expected, const Json& actual) { return Json::diff(expected, actual); }

WeightVec random_dominant(int n, int ell, std::mt19937_64& rng) {
  WeightVec w = WeightVec::zero(n);
  std::uniform_int_distribution<int> pick(0, n);
  for (int k = 0; k < ell; ++k) ++w.a[pick(rng)];
  return w;
}

Word random_word(const WeightVec& lambda, int max_len, std::mt19937_64& rng) {
  PathModel model(lambda, PathKind::B1);
  PathElem p = model.ground();
  const int len = std::uniform_int_distribution<int>(0, max_len)(rng);
  std::vector<int> steps;
  for (int s = 0; s < len; ++s) {
    std::vector<int> open;
    for (int i = 0; i <= lambda.rank(); ++i)
      if (model.phi(i, p) > 0) open.push_back(i);
    const int i = open[std::uniform_int_distribution<std::size_t>(0, open.size() - 1)(rng)];
    p = *model.apply(Op::f, i, p);
    steps.push_back(i);
  }
  Word w;
  for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
    if (!w.empty() && w.back().first == *it) ++w.back().second;
    else w.emplace_back(*it, 1);
  }
  return w;
}

std::optional<std::pair<B1Elem, BnElem>> pair_apply(int n, int ell, Op op, int i, const B1Elem& b,
                                                    const BnElem& bbar) {
  B1Crystal b1(n, ell);
  BnCrystal bn(n, ell);
  const SignatureEntry sig[2] = {{b1.epsilon(i, b), b1.phi(i, b)}, {bn.epsilon(i, bbar), bn.phi(i, bbar)}};
  const auto which = signature_select(op, sig);
  if (!which) return std::nullopt;
  std::pair<B1Elem, BnElem> out{b, bbar};
  if (*which == 0) {
    auto v = b1.apply(op, i, b);
    if (!v) return std::nullopt;
    out.first = *v;
  } else {
    auto v = bn.apply(op, i, bbar);
    if (!v) return std::nullopt;
    out.second = *v;
  }
  return out;
}

}  // namespace affcrystal
