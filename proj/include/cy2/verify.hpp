#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cy2/category.hpp"

namespace cy2 {

/// A printed torsion half and its perpendicular category shifted by [-1],
/// both as labels such as "(1,3)" or "(1,5+)".
struct HalfFixture {
  std::vector<std::string> x;
  std::vector<std::string> perp_shifted;
};

/// A printed wing reading: apex label and member labels.
struct WingFixture {
  std::vector<std::string> x;
  std::string apex;  // empty for x = 0
  std::vector<std::string> members;
};

const std::vector<HalfFixture>& fixture_a22();
/// The seven X_i of A_{2,1}; the six self-perpendicular Y_j follow separately.
const std::vector<HalfFixture>& fixture_a21();
const std::vector<HalfFixture>& fixture_a21_self_perp();
const std::vector<HalfFixture>& fixture_d12();
const std::vector<HalfFixture>& fixture_d11();
const std::vector<WingFixture>& fixture_a22_wings();

/// Resolves fixture labels; throws if a label is unknown.
IndecSet fixture_set(const CategoryTables& tables, const std::vector<std::string>& labels);

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct CriterionResult {
  int id = 0;
  std::string title;
  std::vector<CheckResult> checks;

  bool pass() const;
};

struct VerifyOptions {
  unsigned workers = 1;
  std::uint64_t seed = 0x5eed2cf7;
  int property_cases = 1000;
};

inline constexpr int kCriterionCount = 7;

CriterionResult run_criterion(int id, const VerifyOptions& opts = {});
std::vector<CriterionResult> run_acceptance(const VerifyOptions& opts = {});

/// One "PASS"/"FAIL" line per criterion, optionally followed by its checks.
/// Contains no timings, so the text is identical across runs.
std::string format_results(const std::vector<CriterionResult>& results, bool details);

}  // namespace cy2
