#include "cy2/torsion.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdint>
#include <iterator>
#include <stdexcept>
#include <thread>

namespace cy2 {

namespace {

// Close-by-one: every fixed point of the closure is reached from exactly
// one parent, the one obtained by dropping its largest generator.
class ClosureSearch {
 public:
  explicit ClosureSearch(const CategoryTables& tables) : tables_(tables) {}

  void descend(const IndecSet& closed, std::size_t from, std::vector<IndecSet>& out) const {
    out.push_back(closed);
    for (std::size_t i = from; i < tables_.size(); ++i) extend(closed, i, out);
  }

  void extend(const IndecSet& closed, std::size_t i, std::vector<IndecSet>& out) const {
    if (closed.contains(static_cast<int>(i))) return;
    IndecSet grown = closed;
    grown.insert(static_cast<int>(i));
    grown = tables_.ptolemy_closure(grown);
    // Canonicity: nothing new below the generator.
    auto first_new = (grown - closed).bits().find_first();
    if (first_new < i) return;
    descend(grown, i + 1, out);
  }

 private:
  const CategoryTables& tables_;
};

std::vector<IndecSet> closure_fixed_points(const CategoryTables& tables, unsigned workers) {
  ClosureSearch search(tables);
  const IndecSet root = tables.ptolemy_closure(tables.empty_set());
  const std::size_t k = tables.size();
  std::vector<IndecSet> found{root};
  if (workers <= 1) {
    for (std::size_t i = 0; i < k; ++i) search.extend(root, i, found);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::vector<IndecSet>> parts(workers);
    {
      std::vector<std::jthread> pool;
      for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
          for (std::size_t i = next++; i < k; i = next++) search.extend(root, i, parts[w]);
        });
      }
    }
    for (auto& p : parts) found.insert(found.end(), p.begin(), p.end());
  }
  return found;
}

bool has_paired_diameter(const CategoryTables& tables, const IndecSet& x) {
  for (int a : x.ids()) {
    const Coordinate& c = tables.indec(a).rep;
    if (!c.diameter || c.color != Color::green) continue;
    Coordinate partner = c;
    partner.color = Color::red;
    auto other = tables.find(partner);
    if (other && x.contains(*other)) return true;
  }
  return false;
}

int diameter_count(const CategoryTables& tables, const IndecSet& x) {
  int count = 0;
  for (int a : x.ids()) count += tables.indec(a).rep.diameter ? 1 : 0;
  return count;
}

bool non_diameters_rigid(const CategoryTables& tables, const IndecSet& x) {
  for (int a : x.ids()) {
    const Indec& m = tables.indec(a);
    if (!m.rep.diameter && !m.rigid) return false;
  }
  return true;
}

// Some lift of `outer` contains the representative interval of `inner`.
bool overarches(const CategoryTables& tables, int outer, int inner) {
  const Coordinate& o = tables.indec(outer).rep;
  const Coordinate& m = tables.indec(inner).rep;
  const int step = tables.spec().period();
  int diff = m.i - o.i;
  int r = diff >= 0 ? diff / step : -((-diff + step - 1) / step);
  int p = o.i + r * step;
  int q = o.j + r * step;
  return p <= m.i && m.j <= q;
}

}  // namespace

std::string to_string(D1Case c) {
  switch (c) {
    case D1Case::paired_diameter_in_x: return "paired_diameter_in_x";
    case D1Case::paired_diameter_in_y: return "paired_diameter_in_y";
    case D1Case::split_diameters: return "split_diameters";
  }
  return "?";
}

D1Case parse_d1_case(const std::string& s) {
  if (s == "paired_diameter_in_x") return D1Case::paired_diameter_in_x;
  if (s == "paired_diameter_in_y") return D1Case::paired_diameter_in_y;
  if (s == "split_diameters") return D1Case::split_diameters;
  throw std::invalid_argument("unknown D_{n,1} case '" + s + "'");
}

bool is_torsion_half(const CategoryTables& tables, const IndecSet& x) {
  return tables.left_perp(tables.right_perp(x)) == x;
}

TorsionPairRecord make_record(const CategoryTables& tables, const IndecSet& x) {
  TorsionPairRecord r;
  r.x = x;
  r.y = tables.right_perp(x);
  r.core = x & tables.shift(r.y, -1);
  r.is_t_structure = r.core.empty();
  const IndecSet rigid = tables.rigid_set();
  r.x_all_rigid = x.is_subset_of(rigid);
  r.y_all_rigid = r.y.is_subset_of(rigid);
  if (tables.spec().family == Family::D && tables.spec().t == 1) {
    r.d1_case = classify_d1(tables, r);
  }
  if (r.x_all_rigid) r.wings = wing_decomposition(tables, x);
  return r;
}

std::vector<IndecSet> enumerate_halves(const CategoryTables& tables,
                                       const EnumerateOptions& opts) {
  if (opts.brute_force) return enumerate_halves_brute_force(tables);
  std::vector<IndecSet> out;
  for (IndecSet& x : closure_fixed_points(tables, std::max(1u, opts.workers))) {
    if (is_torsion_half(tables, x)) out.push_back(std::move(x));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<IndecSet> enumerate_halves_brute_force(const CategoryTables& tables) {
  const std::size_t k = tables.size();
  if (k > kBruteForceLimit) {
    throw std::invalid_argument("brute force is limited to " +
                                std::to_string(kBruteForceLimit) + " indecomposables, " +
                                tables.spec().name() + " has " + std::to_string(k));
  }
  std::vector<std::uint64_t> row(k, 0);
  std::vector<std::uint64_t> col(k, 0);
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = 0; b < k; ++b) {
      if (tables.hom(static_cast<int>(a), static_cast<int>(b))) {
        row[a] |= std::uint64_t{1} << b;
        col[b] |= std::uint64_t{1} << a;
      }
    }
  }
  const std::uint64_t all = k == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << k) - 1;
  std::vector<IndecSet> out;
  for (std::uint64_t x = 0; x <= all; ++x) {
    std::uint64_t hit = 0;
    for (std::uint64_t rest = x; rest != 0; rest &= rest - 1) hit |= row[std::countr_zero(rest)];
    const std::uint64_t y = all & ~hit;
    std::uint64_t back = 0;
    for (std::uint64_t rest = y; rest != 0; rest &= rest - 1) back |= col[std::countr_zero(rest)];
    if ((all & ~back) == x) {
      IndecSet s(k);
      for (std::uint64_t rest = x; rest != 0; rest &= rest - 1) s.insert(std::countr_zero(rest));
      out.push_back(std::move(s));
    }
    if (x == all) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<TorsionPairRecord> enumerate_torsion_pairs(const CategoryTables& tables,
                                                       const EnumerateOptions& opts) {
  std::vector<TorsionPairRecord> out;
  for (const IndecSet& x : enumerate_halves(tables, opts)) out.push_back(make_record(tables, x));
  return out;
}

IndecSet wing(const CategoryTables& tables, int apex) {
  const Indec& top = tables.indec(apex);
  if (!top.rigid || top.rep.diameter) {
    throw std::invalid_argument("wing apex " + label(top) + " is not rigid");
  }
  IndecSet out(tables.size());
  const CategorySpec& spec = tables.spec();
  for (int r = top.rep.i; r <= top.rep.j; ++r) {
    for (int s = r + 2; s <= top.rep.j; ++s) {
      if (spec.family == Family::A) {
        out.insert(tables.class_of(Diagonal::make(r, s, spec.polygon_size())));
      } else {
        out.insert(tables.class_of(ArcD::pair(r, s, spec.half())));
      }
    }
  }
  return out;
}

WingDecomposition wing_decomposition(const CategoryTables& tables, const IndecSet& x) {
  for (int a : x.ids()) {
    if (!tables.indec(a).rigid) {
      throw std::invalid_argument("wing decomposition needs a rigid half; " +
                                  label(tables.indec(a)) + " is not rigid");
    }
  }
  if (!is_torsion_half(tables, x)) {
    throw std::invalid_argument("wing decomposition needs a torsion half");
  }
  const std::vector<int> members = x.ids();
  std::vector<int> apexes;
  for (int m : members) {
    bool covered = std::any_of(members.begin(), members.end(), [&](int c) {
      return c != m && overarches(tables, c, m);
    });
    if (!covered) apexes.push_back(m);
  }
  WingDecomposition out;
  for (int a : apexes) out.push_back({a, IndecSet(tables.size())});
  for (int m : members) {
    int owners = 0;
    for (WingComponent& w : out) {
      if (w.apex == m || overarches(tables, w.apex, m)) {
        w.members.insert(m);
        ++owners;
      }
    }
    if (owners != 1) {
      throw std::logic_error("member " + label(tables.indec(m)) + " lies under " +
                             std::to_string(owners) + " apexes");
    }
  }
  return out;
}

bool wings_separated(const CategoryTables& tables, const WingDecomposition& w) {
  std::vector<IndecSet> wings;
  for (const WingComponent& c : w) wings.push_back(wing(tables, c.apex));
  for (std::size_t a = 0; a < wings.size(); ++a) {
    IndecSet shifted = tables.shift(wings[a], 1);
    for (std::size_t b = 0; b < wings.size(); ++b) {
      if (a != b && shifted.intersects(wings[b])) return false;
    }
  }
  return true;
}

D1Case classify_d1(const CategoryTables& tables, const TorsionPairRecord& record) {
  const CategorySpec& spec = tables.spec();
  if (spec.family != Family::D || spec.t != 1) {
    throw std::domain_error("classify_d1 applies to D_{n,1} only, not " + spec.name());
  }
  const IndecSet rigid = tables.rigid_set();
  const bool x_rigid = record.x.is_subset_of(rigid);
  const bool y_rigid = record.y.is_subset_of(rigid);
  if (has_paired_diameter(tables, record.x) && y_rigid) return D1Case::paired_diameter_in_x;
  if (has_paired_diameter(tables, record.y) && x_rigid) return D1Case::paired_diameter_in_y;
  if (diameter_count(tables, record.x) == 1 && diameter_count(tables, record.y) == 1 &&
      non_diameters_rigid(tables, record.x) && non_diameters_rigid(tables, record.y)) {
    return D1Case::split_diameters;
  }
  throw std::logic_error("torsion pair in " + spec.name() + " fits neither D_{n,1} case");
}

std::vector<TorsionPairRecord> t_structures(const std::vector<TorsionPairRecord>& records) {
  std::vector<TorsionPairRecord> out;
  std::copy_if(records.begin(), records.end(), std::back_inserter(out),
               [](const TorsionPairRecord& r) { return r.is_t_structure; });
  return out;
}

std::vector<TorsionPairRecord> check_t_structures(const CategoryTables& tables) {
  return t_structures(enumerate_torsion_pairs(tables));
}

}  // namespace cy2
