#pragma once

// JSON encodings (schema "v1") for paths, wall tuples, matrix units,
// kernel tables and pipeline reports. Keys are emitted in a fixed order.

#include <string>

#include <json.hpp>

#include "affcrystal/crystal_iso.hpp"

namespace affcrystal {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "v1";

Json to_json(const WeightVec& w);
Json to_json(const RootVector& r);
Json factor_to_json(const Factor& f);
/// Includes a "rendered" list, one tableau string per deviation.
Json to_json(const PathElem& p);
Json to_json(const WallTuple& w);
Json to_json(const MatrixUnit& u);
Json to_json(const WallMatrix& m);
Json to_json(const KernelTable& kt);
Json to_json(const IsoReport& r);

/// {walls, matrixUnits, commutantDim, kernelTable} for one pipeline run.
Json quiver_json(const IsoReport& r);

// Parsers throw std::invalid_argument on malformed input.
WeightVec weight_from_json(const Json& j);
RootVector root_from_json(const Json& j);
Factor factor_from_json(const Json& j, PathKind kind);
PathElem path_from_json(const Json& j);
WallTuple walls_from_json(const Json& j);
MatrixUnit unit_from_json(const Json& j);
WallMatrix wall_matrix_from_json(const Json& j);
KernelTable kernel_table_from_json(const Json& j);

/// Comma-separated integers, e.g. "2,1,0".
WeightVec parse_lambda(const std::string& text);

std::string dump(const Json& j);

}  // namespace affcrystal
