#include "affcrystal/serialize.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace affcrystal {

namespace {

Json tagged(const char* type) {
  Json j;
  j["schema"] = kSchema;
  j["type"] = type;
  return j;
}

void expect_type(const Json& j, const char* type) {
  if (!j.is_object()) throw std::invalid_argument(std::string("expected a ") + type + " object");
  if (j.value("schema", std::string()) != kSchema)
    throw std::invalid_argument(std::string(type) + ": missing or unknown schema tag");
  if (j.value("type", std::string()) != type)
    throw std::invalid_argument(std::string("expected type ") + type);
}

std::vector<int> int_list(const Json& j, const char* what) {
  if (!j.is_array()) throw std::invalid_argument(std::string(what) + ": expected an array");
  std::vector<int> out;
  for (const auto& v : j) {
    if (!v.is_number_integer()) throw std::invalid_argument(std::string(what) + ": expected integers");
    out.push_back(v.get<int>());
  }
  return out;
}

const Json& field(const Json& j, const char* key) {
  if (!j.contains(key)) throw std::invalid_argument(std::string("missing field ") + key);
  return j.at(key);
}

std::string factor_render(const Factor& f, int n) {
  return std::visit(
      [n](const auto& b) -> std::string {
        using T = std::decay_t<decltype(b)>;
        if constexpr (std::is_same_v<T, B1Elem>) return render_b1(b);
        else if constexpr (std::is_same_v<T, BnElem>) return render_bn(b);
        else return render_adj(b, n);
      },
      f);
}

Json seq_json(const std::vector<RootVector>& s) {
  Json a = Json::array();
  for (const auto& r : s) a.push_back(to_json(r));
  return a;
}

std::vector<RootVector> seq_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("kernel sequence: expected an array");
  std::vector<RootVector> out;
  for (const auto& r : j) out.push_back(root_from_json(r));
  return out;
}

}  // namespace

Json to_json(const WeightVec& w) { return Json(w.a); }
Json to_json(const RootVector& r) { return Json(r.k); }

Json factor_to_json(const Factor& f) {
  Json j;
  std::visit(
      [&j](const auto& b) {
        using T = std::decay_t<decltype(b)>;
        if constexpr (std::is_same_v<T, B1Elem>) {
          j["nu"] = b.nu;
        } else if constexpr (std::is_same_v<T, BnElem>) {
          j["nubar"] = b.nubar;
        } else {
          j["mbar"] = b.mbar;
          j["m"] = b.m;
        }
      },
      f);
  return j;
}

Json to_json(const PathElem& p) {
  Json j = tagged("path");
  j["kind"] = kind_name(p.kind);
  j["lambda"] = to_json(p.lambda);
  Json devs = Json::array();
  Json rendered = Json::array();
  for (const auto& f : p.deviations) {
    devs.push_back(factor_to_json(f));
    rendered.push_back(factor_render(f, p.lambda.rank()));
  }
  j["deviations"] = devs;
  j["rendered"] = rendered;
  return j;
}

Json to_json(const WallTuple& w) {
  Json j = tagged("walls");
  j["kind"] = pattern_name(w.kind);
  j["n"] = w.n;
  j["charges"] = w.charges;
  j["heights"] = w.heights;
  return j;
}

Json to_json(const MatrixUnit& u) {
  Json j;
  j["dir"] = u.dir == MatrixUnit::Dir::x ? "x" : "xbar";
  j["s"] = u.s;
  j["from"] = u.from;
  j["to"] = u.to;
  j["text"] = unit_string(u);
  return j;
}

Json to_json(const WallMatrix& m) {
  Json j = tagged("units");
  j["alpha"] = to_json(m.alpha);
  j["degree"] = m.degree;
  Json units = Json::array();
  for (const auto& u : m.units) units.push_back(to_json(u));
  j["units"] = units;
  return j;
}

Json to_json(const KernelTable& kt) {
  Json j = tagged("kernel_table");
  j["alpha"] = to_json(kt.alpha);
  j["ker_x"] = seq_json(kt.ker_x);
  j["ker_xbar"] = seq_json(kt.ker_xbar);
  j["ker_xxbar"] = seq_json(kt.ker_xxbar);
  j["ker_xbar_xxbar"] = seq_json(kt.ker_xbar_xxbar);
  j["ker_xbarx"] = seq_json(kt.ker_xbarx);
  j["seeds"] = kt.seeds;
  j["anomalies"] = kt.anomalies;
  return j;
}

Json quiver_json(const IsoReport& r) {
  Json j = tagged("quiver");
  j["lambda"] = to_json(r.lambda);
  j["word"] = word_to_string(r.word);
  j["seed"] = r.seed;
  j["alpha"] = to_json(r.alpha);
  Json walls;
  walls["P1"] = to_json(r.y);
  walls["Pn"] = to_json(r.ybar);
  j["walls"] = walls;
  Json units;
  units["x"] = to_json(r.x_units);
  units["xbar"] = to_json(r.xbar_units);
  j["matrixUnits"] = units;
  j["commutantDim"] = r.commutant_dim;
  j["kernelTable"] = to_json(r.table);
  return j;
}

Json to_json(const IsoReport& r) {
  Json j = tagged("iso_report");
  j["lambda"] = to_json(r.lambda);
  j["word"] = word_to_string(r.word);
  j["seed"] = r.seed;
  j["ok"] = r.ok;
  const char* names[3] = {"B1", "Bn", "Ad"};
  Json paths;
  for (int k = 0; k < 3; ++k) {
    Json e;
    e["direct"] = to_json(r.direct[k]);
    e["geometric"] = to_json(r.geometric[k]);
    e["firstMismatch"] = r.first_mismatch[k];
    paths[names[k]] = e;
  }
  j["paths"] = paths;
  j["quiver"] = quiver_json(r);
  j["wallsRoundtrip"] = r.walls_roundtrip;
  j["bridge"] = r.bridge;
  j["stable"] = r.stable;
  j["messages"] = r.messages;
  return j;
}

WeightVec weight_from_json(const Json& j) {
  WeightVec w(int_list(j, "weight"));
  if (w.size() < 2) throw std::invalid_argument("weight: need at least two coefficients");
  return w;
}

RootVector root_from_json(const Json& j) { return RootVector(int_list(j, "root vector")); }

Factor factor_from_json(const Json& j, PathKind kind) {
  if (!j.is_object()) throw std::invalid_argument("factor: expected an object");
  switch (kind) {
    case PathKind::B1:
      return B1Elem{int_list(field(j, "nu"), "nu")};
    case PathKind::Bn:
      return BnElem{int_list(field(j, "nubar"), "nubar")};
    case PathKind::Ad:
      return AdjElem{int_list(field(j, "mbar"), "mbar"), int_list(field(j, "m"), "m")};
  }
  throw std::invalid_argument("factor: bad kind");
}

PathElem path_from_json(const Json& j) {
  expect_type(j, "path");
  PathElem p;
  p.kind = parse_kind(field(j, "kind").get<std::string>());
  p.lambda = weight_from_json(field(j, "lambda"));
  const auto& devs = field(j, "deviations");
  if (!devs.is_array()) throw std::invalid_argument("deviations: expected an array");
  for (const auto& f : devs) p.deviations.push_back(factor_from_json(f, p.kind));
  if (!p.lambda.is_dominant() || p.lambda.level() == 0) throw std::invalid_argument("path: lambda must be dominant");
  const int n = p.lambda.rank(), ell = p.lambda.level();
  for (const auto& f : p.deviations) {
    const bool ok = std::visit(
        [&](const auto& b) {
          using T = std::decay_t<decltype(b)>;
          if constexpr (std::is_same_v<T, B1Elem>) return B1Crystal(n, ell).valid(b);
          else if constexpr (std::is_same_v<T, BnElem>) return BnCrystal(n, ell).valid(b);
          else return AdjCrystal(n, ell).valid(b);
        },
        f);
    if (!ok) throw std::invalid_argument("path: factor outside the crystal");
  }
  PathModel model(p.lambda, p.kind);
  if (!(model.normalize(p) == p)) throw std::invalid_argument("path: deviations end in a ground factor");
  return p;
}

WallTuple walls_from_json(const Json& j) {
  expect_type(j, "walls");
  WallTuple w;
  w.kind = parse_pattern(field(j, "kind").get<std::string>());
  w.n = field(j, "n").get<int>();
  w.charges = int_list(field(j, "charges"), "charges");
  const auto& hs = field(j, "heights");
  if (!hs.is_array()) throw std::invalid_argument("heights: expected an array");
  for (const auto& h : hs) w.heights.push_back(int_list(h, "heights"));
  if (w.heights.size() != w.charges.size()) throw std::invalid_argument("walls: charges and heights differ in length");
  if (auto rep = validate(w); !rep.ok) throw std::invalid_argument("walls: " + rep.rule + ": " + rep.witness);
  return w;
}

MatrixUnit unit_from_json(const Json& j) {
  if (!j.is_object()) throw std::invalid_argument("unit: expected an object");
  MatrixUnit u;
  const auto dir = field(j, "dir").get<std::string>();
  if (dir == "x") u.dir = MatrixUnit::Dir::x;
  else if (dir == "xbar") u.dir = MatrixUnit::Dir::xbar;
  else throw std::invalid_argument("unit: dir must be x or xbar");
  u.s = field(j, "s").get<int>();
  u.from = field(j, "from").get<int>();
  u.to = field(j, "to").get<int>();
  return u;
}

WallMatrix wall_matrix_from_json(const Json& j) {
  expect_type(j, "units");
  WallMatrix m;
  m.alpha = root_from_json(field(j, "alpha"));
  m.degree = field(j, "degree").get<int>();
  for (const auto& u : field(j, "units")) m.units.push_back(unit_from_json(u));
  return m;
}

KernelTable kernel_table_from_json(const Json& j) {
  expect_type(j, "kernel_table");
  KernelTable kt;
  kt.alpha = root_from_json(field(j, "alpha"));
  kt.ker_x = seq_from_json(field(j, "ker_x"));
  kt.ker_xbar = seq_from_json(field(j, "ker_xbar"));
  kt.ker_xxbar = seq_from_json(field(j, "ker_xxbar"));
  kt.ker_xbar_xxbar = seq_from_json(field(j, "ker_xbar_xxbar"));
  kt.ker_xbarx = seq_from_json(field(j, "ker_xbarx"));
  kt.seeds = field(j, "seeds").get<std::vector<std::uint64_t>>();
  kt.anomalies = field(j, "anomalies").get<std::vector<std::string>>();
  return kt;
}

WeightVec parse_lambda(const std::string& text) {
  std::vector<int> a;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("lambda: bad coefficient '" + tok + "'");
    }
    while (used < tok.size() && std::isspace(static_cast<unsigned char>(tok[used]))) ++used;
    if (used != tok.size()) throw std::invalid_argument("lambda: bad coefficient '" + tok + "'");
    a.push_back(v);
  }
  if (a.size() < 2) throw std::invalid_argument("lambda: need n+1 >= 2 coefficients");
  WeightVec w(std::move(a));
  if (!w.is_dominant()) throw std::invalid_argument("lambda: coefficients must be nonnegative");
  if (w.level() == 0) throw std::invalid_argument("lambda: level must be positive");
  return w;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace affcrystal
