#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cy2/category.hpp"
#include "cy2/indec_set.hpp"

namespace cy2 {

/// One apex (a rigid indecomposable) together with the members of a
/// torsion half lying in its wing.
struct WingComponent {
  int apex = 0;
  IndecSet members;

  friend bool operator==(const WingComponent&, const WingComponent&) = default;
};

using WingDecomposition = std::vector<WingComponent>;

/// The two cases for torsion pairs in D_{n,1}.
enum class D1Case { paired_diameter_in_x, paired_diameter_in_y, split_diameters };

std::string to_string(D1Case c);
D1Case parse_d1_case(const std::string& s);

struct TorsionPairRecord {
  IndecSet x;
  IndecSet y;     // right_perp(x)
  IndecSet core;  // x ∩ y[-1]
  bool is_t_structure = false;
  bool x_all_rigid = false;
  bool y_all_rigid = false;
  std::optional<D1Case> d1_case;             // type D with t = 1 only
  std::optional<WingDecomposition> wings;    // present when x is all rigid

  friend bool operator==(const TorsionPairRecord&, const TorsionPairRecord&) = default;
};

bool is_torsion_half(const CategoryTables& tables, const IndecSet& x);

/// Fills y, core and all flags for the torsion pair (x, x^perp).
TorsionPairRecord make_record(const CategoryTables& tables, const IndecSet& x);

struct EnumerateOptions {
  unsigned workers = 1;
  /// Use the exhaustive 2^k subset search instead of closure enumeration.
  bool brute_force = false;
};

/// Largest category the subset search accepts.
inline constexpr std::size_t kBruteForceLimit = 26;

/// Every x with x = left_perp(right_perp(x)), sorted.
std::vector<IndecSet> enumerate_halves(const CategoryTables& tables,
                                       const EnumerateOptions& opts = {});
std::vector<IndecSet> enumerate_halves_brute_force(const CategoryTables& tables);

std::vector<TorsionPairRecord> enumerate_torsion_pairs(const CategoryTables& tables,
                                                       const EnumerateOptions& opts = {});

/// Classes of all diagonals (arcs) overarched by a rigid apex.
IndecSet wing(const CategoryTables& tables, int apex);

/// Throws std::invalid_argument if x has a non-rigid member or is not a torsion half.
WingDecomposition wing_decomposition(const CategoryTables& tables, const IndecSet& x);

/// W[a][1] ∩ W[b] = ∅ for every ordered pair of distinct apexes.
bool wings_separated(const CategoryTables& tables, const WingDecomposition& w);

/// Throws std::domain_error unless the category is D_{n,1}; std::logic_error
/// if neither case applies.
D1Case classify_d1(const CategoryTables& tables, const TorsionPairRecord& record);

/// Torsion pairs with empty core.
std::vector<TorsionPairRecord> check_t_structures(const CategoryTables& tables);
std::vector<TorsionPairRecord> t_structures(const std::vector<TorsionPairRecord>& records);

}  // namespace cy2
