#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cy2/category.hpp"
#include "cy2/indec_set.hpp"
#include "cy2/torsion.hpp"

namespace cy2 {

/// Data determining the heart mod End(I) of the cotorsion pair (X, Y[-1]).
struct HeartReport {
  IndecSet core;
  std::size_t num_simples = 0;
  /// hom_dim between core summands, in id order. Type A only.
  std::optional<std::vector<std::vector<int>>> hom_matrix;
  std::optional<int> algebra_dim;
  std::string catalog_note;

  bool zero_heart() const { return core.empty(); }

  friend bool operator==(const HeartReport&, const HeartReport&) = default;
};

/// Throws std::logic_error if the core is not rigid.
HeartReport heart_report(const TorsionPairRecord& record, const CategoryTables& tables);

/// One quiver-with-relations entry of the known list of heart algebras.
struct CatalogEntry {
  std::string id;        // "A.1", "A.2", ...
  std::string category;  // "A_{n,t}", "D_{n,t}", "D^b(E7)/tau^2", "D^b(E7)/tau^5"
  std::string quiver;
  std::string relations;
  std::string k_range;
};

const std::vector<CatalogEntry>& heart_catalog();

}  // namespace cy2
