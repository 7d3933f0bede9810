#include "affcrystal.h"

#include <cstdlib>
#include <cstring>
#include <sstream>
#include <stdexcept>
#include <string>

#include "affcrystal/crystal_iso.hpp"
#include "affcrystal/serialize.hpp"
#include "affcrystal/verify.hpp"

using namespace affcrystal;

struct afc_path {
  PathElem elem;
};

namespace {

thread_local std::string g_error;

// A word step that kills the element.
struct NullStep : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

template <class Fn>
afc_status guarded(Fn&& fn) {
  g_error.clear();
  try {
    return fn();
  } catch (const NullStep& e) {
    g_error = e.what();
    return AFC_ERR_NULL_STEP;
  } catch (const BudgetExceeded& e) {
    g_error = e.what();
    return AFC_ERR_BUDGET;
  } catch (const std::invalid_argument& e) {
    g_error = e.what();
    return AFC_ERR_ARGUMENT;
  } catch (const nlohmann::json::exception& e) {
    g_error = e.what();
    return AFC_ERR_ARGUMENT;
  } catch (const std::domain_error& e) {
    g_error = e.what();
    return AFC_ERR_DOMAIN;
  } catch (const std::runtime_error& e) {
    g_error = e.what();
    return AFC_ERR_DOMAIN;
  } catch (const std::exception& e) {
    g_error = e.what();
    return AFC_ERR_INTERNAL;
  } catch (...) {
    g_error = "unknown error";
    return AFC_ERR_INTERNAL;
  }
}

char* copy_out(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

void need(const void* p, const char* what) {
  if (!p) throw std::invalid_argument(std::string(what) + " is NULL");
}

PathElem path_for(const char* lambda, const char* kind, const char* word) {
  need(lambda, "lambda");
  need(kind, "kind");
  const WeightVec lam = parse_lambda(lambda);
  const PathKind k = parse_kind(kind);
  const Word w = parse_word(word ? word : "");
  try {
    return PathModel(lam, k).from_word(w);
  } catch (const std::runtime_error& e) {
    throw NullStep(e.what());
  }
}

Word word_for(const WeightVec& lam, const char* word) {
  const Word w = parse_word(word ? word : "");
  try {
    (void)PathModel(lam, PathKind::B1).from_word(w);
  } catch (const std::runtime_error& e) {
    throw NullStep(e.what());
  }
  return w;
}

template <CrystalModel C>
std::string dot_of(const C& c, const typename C::element_type& seed, int depth, std::size_t max_nodes) {
  GraphBudget budget;
  budget.max_depth = depth;
  budget.max_elements = max_nodes;
  const auto g = generate_graph(c, seed, budget);
  if (!g.graph.complete && g.graph.size() >= max_nodes)
    throw BudgetExceeded("graph budget of " + std::to_string(max_nodes) + " nodes exceeded");
  std::ostringstream os;
  write_dot(g.graph, os);
  return os.str();
}

}  // namespace

extern "C" {

const char* afc_last_error(void) { return g_error.c_str(); }

const char* afc_version(void) { return "1.0.0"; }

void afc_string_free(char* s) { std::free(s); }

afc_status afc_path_from_word(const char* lambda, const char* kind, const char* word, afc_path** out) {
  return guarded([&] {
    need(out, "out");
    *out = new afc_path{path_for(lambda, kind, word)};
    return AFC_OK;
  });
}

afc_status afc_path_from_json(const char* json, afc_path** out) {
  return guarded([&] {
    need(json, "json");
    need(out, "out");
    *out = new afc_path{path_from_json(Json::parse(json))};
    return AFC_OK;
  });
}

void afc_path_free(afc_path* p) { delete p; }

afc_status afc_path_to_json(const afc_path* p, char** out) {
  return guarded([&] {
    need(p, "path");
    need(out, "out");
    *out = copy_out(dump(to_json(p->elem)));
    return AFC_OK;
  });
}

afc_status afc_path_apply(const afc_path* p, char op, int i, afc_path** out) {
  return guarded([&] {
    need(p, "path");
    need(out, "out");
    if (op != 'e' && op != 'f') throw std::invalid_argument("op must be 'e' or 'f'");
    PathModel model(p->elem.lambda, p->elem.kind);
    if (i < 0 || i > model.rank()) throw std::invalid_argument("color out of range");
    auto r = model.apply(op == 'e' ? Op::e : Op::f, i, p->elem);
    *out = r ? new afc_path{std::move(*r)} : nullptr;
    return AFC_OK;
  });
}

afc_status afc_path_eps_phi(const afc_path* p, int i, int* eps, int* phi) {
  return guarded([&] {
    need(p, "path");
    PathModel model(p->elem.lambda, p->elem.kind);
    if (i < 0 || i > model.rank()) throw std::invalid_argument("color out of range");
    if (eps) *eps = model.epsilon(i, p->elem);
    if (phi) *phi = model.phi(i, p->elem);
    return AFC_OK;
  });
}

afc_status afc_path_weight(const afc_path* p, int* coeffs, size_t cap, size_t* len) {
  return guarded([&] {
    need(p, "path");
    const WeightVec w = path_wt(p->elem);
    if (len) *len = w.size();
    if (coeffs && cap >= w.size())
      for (std::size_t k = 0; k < w.size(); ++k) coeffs[k] = w.a[k];
    return AFC_OK;
  });
}

int afc_path_equal(const afc_path* a, const afc_path* b) {
  if (!a || !b) return a == b;
  return a->elem == b->elem ? 1 : 0;
}

afc_status afc_quiver_run(const char* lambda, const char* word, uint64_t seed, const char* field,
                          char** json_out) {
  return guarded([&] {
    need(lambda, "lambda");
    need(json_out, "json_out");
    const std::string f = field ? field : "fp";
    if (f != "fp" && f != "q") throw std::invalid_argument("field must be fp or q");
    const WeightVec lam = parse_lambda(lambda);
    const IsoReport r = pipeline(lam, word_for(lam, word), seed);
    Json j = quiver_json(r);
    j["field"] = f;
    if (f == "q") j["commutantDim"] = commutant_basis(to_graded<mpq_class>(r.x_units)).size();
    *json_out = copy_out(dump(j));
    return AFC_OK;
  });
}

afc_status afc_pipeline_run(const char* lambda, const char* word, uint64_t seed, char** json_out, int* ok) {
  return guarded([&] {
    need(lambda, "lambda");
    need(json_out, "json_out");
    const WeightVec lam = parse_lambda(lambda);
    const IsoReport r = pipeline(lam, word_for(lam, word), seed);
    *json_out = copy_out(dump(to_json(r)));
    if (ok) *ok = r.ok ? 1 : 0;
    return AFC_OK;
  });
}

afc_status afc_graph_dot_path(const char* lambda, const char* kind, int depth, size_t max_nodes, char** dot_out) {
  return guarded([&] {
    need(lambda, "lambda");
    need(kind, "kind");
    need(dot_out, "dot_out");
    PathModel model(parse_lambda(lambda), parse_kind(kind));
    *dot_out = copy_out(dot_of(model, model.ground(), depth, max_nodes));
    return AFC_OK;
  });
}

afc_status afc_graph_dot_perfect(const char* kind, int n, int ell, int depth, char** dot_out) {
  return guarded([&] {
    need(kind, "kind");
    need(dot_out, "dot_out");
    if (n < 1 || ell < 0) throw std::invalid_argument("need n >= 1 and l >= 0");
    std::string out;
    switch (parse_kind(kind)) {
      case PathKind::B1: {
        B1Crystal c(n, ell);
        const auto all = c.elements();
        out = dot_of(c, all.front(), depth, all.size() + 1);
        break;
      }
      case PathKind::Bn: {
        BnCrystal c(n, ell);
        const auto all = c.elements();
        out = dot_of(c, all.front(), depth, all.size() + 1);
        break;
      }
      case PathKind::Ad: {
        AdjCrystal c(n, ell);
        const auto all = c.elements();
        out = dot_of(c, all.front(), depth, all.size() + 1);
        break;
      }
    }
    *dot_out = copy_out(out);
    return AFC_OK;
  });
}

afc_status afc_verify(const char* suite, uint64_t seed, const char* fixture, char** report_out) {
  return guarded([&] {
    need(suite, "suite");
    need(report_out, "report_out");
    VerifyOptions opt;
    opt.seed = seed;
    if (fixture) opt.fixture = fixture;
    const SuiteReport r = run_suite(suite, opt);
    std::string text;
    for (const auto& line : r.lines) text += line + "\n";
    text += "suite " + r.suite + (r.ok ? ": PASS\n" : ": FAIL\n");
    *report_out = copy_out(text);
    if (!r.ok) g_error = "suite " + r.suite + " failed";
    return r.ok ? AFC_OK : AFC_ERR_VERIFY;
  });
}

}  // extern "C"
