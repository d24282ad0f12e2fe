#include "cy2/hearts.hpp"

#include <stdexcept>

namespace cy2 {

namespace {

std::string note_for(const HeartReport& h) {
  if (h.num_simples == 0) return "zero heart";
  if (h.num_simples == 1 && h.algebra_dim) {
    if (*h.algebra_dim == 1) return "field k (A1 quiver)";
    if (*h.algebra_dim == 2) return "loop alpha, alpha^2 (catalog A.2, k=1)";
  }
  return "undetermined: see catalog";
}

}  // namespace

HeartReport heart_report(const TorsionPairRecord& record, const CategoryTables& tables) {
  HeartReport h;
  h.core = record.x & tables.shift(record.y, -1);
  if (!tables.is_rigid(h.core)) {
    throw std::logic_error("core of a cotorsion pair in " + tables.spec().name() +
                           " is not rigid");
  }
  h.num_simples = h.core.count();
  if (tables.spec().family == Family::A) {
    const std::vector<int> ids = h.core.ids();
    std::vector<std::vector<int>> m(ids.size(), std::vector<int>(ids.size(), 0));
    int total = 0;
    for (std::size_t r = 0; r < ids.size(); ++r) {
      for (std::size_t c = 0; c < ids.size(); ++c) {
        m[r][c] = tables.hom_dim(ids[r], ids[c]);
        total += m[r][c];
      }
    }
    h.hom_matrix = std::move(m);
    h.algebra_dim = total;
  }
  h.catalog_note = note_for(h);
  return h;
}

const std::vector<CatalogEntry>& heart_catalog() {
  static const std::vector<CatalogEntry> entries = {
      {"A.1", "A_{n,t}", "1 -> 2 -> ... -> k", "", "1 <= k <= n"},
      {"A.2", "A_{n,t}", "1 -> 2 -> ... -> k with loop alpha at k", "alpha^2", "1 <= k <= n"},
      {"A.3", "A_{n,t}", "mutations of A.1 or A.2", "", ""},
      {"D.1", "D_{n,t}", "1 -> 2 -> ... -> k", "", "1 <= k <= n"},
      {"D.2", "D_{n,t}", "1 -> 2 -> ... -> k with loop alpha at k", "alpha^2", "1 <= k <= n"},
      {"D.3", "D_{n,t}", "mutations of D.1 or D.2", "", ""},
      {"E7t2", "D^b(E7)/tau^2", "one vertex with loop alpha", "alpha^3", ""},
      {"E7t5.1", "D^b(E7)/tau^5", "one vertex with loop alpha", "alpha^2", ""},
      {"E7t5.2", "D^b(E7)/tau^5", "loop alpha at 1, beta: 1 -> 2, loop gamma at 2",
       "beta alpha - gamma beta, alpha^2, gamma^2", ""},
  };
  return entries;
}

}  // namespace cy2
