#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "cy2/category.hpp"
#include "cy2/hearts.hpp"
#include "cy2/torsion.hpp"

namespace cy2 {

using Json = nlohmann::json;

/// Malformed user input: a bad set, element or record file.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

Json to_json(const Diagonal& d);
Json to_json(const DiagonalSet& u);
Json to_json(const ArcD& a);
Json to_json(const ArcSetD& u);

Diagonal diagonal_from_json(const Json& j, int ngon);
DiagonalSet diagonal_set_from_json(const Json& j);
ArcD arc_from_json(const Json& j, int u);

/// Indecomposables with representatives, Ext/Hom rows as bit strings, shift permutation.
Json tables_to_json(const CategoryTables& tables);

Json to_json(const WingDecomposition& w);
Json to_json(const HeartReport& h);
Json to_json(const TorsionPairRecord& r, const std::optional<HeartReport>& heart = std::nullopt);
Json records_to_json(const std::vector<TorsionPairRecord>& records, const CategoryTables& tables,
                     bool hearts);

/// Inverse of records_to_json (hearts are dropped). Throws InputError.
std::vector<TorsionPairRecord> records_from_json(const Json& j, std::size_t universe);

/// One element in orbit-representative form:
///   id            (integer)
///   [i, j]        diagonal or arc pair; any member of the orbit is accepted
///   [i, j, "+"]   diameter, "+"/"g" green and "-"/"r" red
///   "(1,5+)"      label as printed by `build`
///   {"pair":[i,j]} or {"diam":i,"color":"g"}
/// Throws InputError naming the element.
int element_from_json(const CategoryTables& tables, const Json& j);
IndecSet set_from_json(const CategoryTables& tables, const Json& j);
/// Parses JSON text; a bare label list such as "(1,3),(1,4)" is also accepted.
IndecSet parse_set(const CategoryTables& tables, const std::string& text);

Json ids_json(const IndecSet& x);
Json labels_json(const CategoryTables& tables, const IndecSet& x);

}  // namespace cy2
