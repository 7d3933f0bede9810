#pragma once

// Named verification suites behind `affcrystal verify`, plus the helpers
// they share with the test programs.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "affcrystal/crystal_iso.hpp"
#include "affcrystal/serialize.hpp"

namespace affcrystal {

struct SuiteReport {
  std::string suite;
  bool ok = true;
  std::vector<std::string> lines;  // one per case, prefixed PASS/FAIL
};

struct VerifyOptions {
  std::uint64_t seed = 0;
  std::string fixture;  // golden JSON for the example suite; empty skips the diff
};

/// example | xi | perfect | bridge | axioms | all. Throws
/// std::invalid_argument for unknown names.
SuiteReport run_suite(const std::string& name, const VerifyOptions& opt = {});
std::vector<std::string> suite_names();

/// The worked example: n = 2, Lambda = 2 Lambda_0 + Lambda_1.
WeightVec example_lambda();
Word example_word();

/// Paths and quiver data of the worked example; seed-dependent fields
/// (seeds) are left out so that any seed gives the same document.
Json example_json(std::uint64_t seed);

/// JSON patch turning `expected` into `actual`; empty when equal.
Json json_diff(const Json& expected, const Json& actual);

/// Dominant weight of rank n and level ell, uniform over placements.
WeightVec random_dominant(int n, int ell, std::mt19937_64& rng);
/// Word of length <= max_len that does not kill u_Lambda, built by random
/// f steps on the B1 path model.
Word random_word(const WeightVec& lambda, int max_len, std::mt19937_64& rng);

/// f_i / e_i on b (x) bbar in B^{1,l} (x) B^{n,l}.
std::optional<std::pair<B1Elem, BnElem>> pair_apply(int n, int ell, Op op, int i, const B1Elem& b, const BnElem& bbar);

}  // namespace affcrystal
