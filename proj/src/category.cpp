#include "cy2/category.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <utility>

namespace cy2 {

std::string to_string(Family f) {
  switch (f) {
    case Family::A: return "A";
    case Family::D: return "D";
    case Family::E: return "E";
  }
  return "?";
}

Family parse_family(const std::string& s) {
  if (s == "A" || s == "a") return Family::A;
  if (s == "D" || s == "d") return Family::D;
  if (s == "E" || s == "e") return Family::E;
  throw std::invalid_argument("unknown family '" + s + "' (expected A or D)");
}

void CategorySpec::validate() const {
  if (family == Family::E) {
    throw std::domain_error("type E orbit categories have no polygon model here");
  }
  if (n < 1 || t < 1) {
    throw std::invalid_argument("need n >= 1 and t >= 1, got n=" + std::to_string(n) +
                                " t=" + std::to_string(t));
  }
}

int CategorySpec::polygon_size() const {
  return family == Family::D ? 2 * half() : (2 * t + 1) * (n + 1);
}

int CategorySpec::group_order() const { return family == Family::D ? 2 * t : 2 * t + 1; }

std::string CategorySpec::name() const {
  return to_string(family) + "_{" + std::to_string(n) + "," + std::to_string(t) + "}";
}

std::string label(const Indec& x) {
  std::string s = "(" + std::to_string(x.rep.i) + "," + std::to_string(x.rep.j);
  if (x.rep.diameter) s += x.rep.color == Color::green ? "+" : "-";
  return s + ")";
}

void CategoryTables::require(Family f, const char* what) const {
  if (spec_.family != f) {
    throw std::domain_error(std::string(what) + " is not available for " + spec_.name());
  }
}

CategoryTables CategoryTables::build(const CategorySpec& spec) {
  spec.validate();
  CategoryTables tb;
  tb.spec_ = spec;
  const int n = spec.n;
  const int t = spec.t;
  const int step = spec.period();

  std::vector<Coordinate> coords;
  if (spec.family == Family::A) {
    // Fundamental window of the AR-quiver: 1 <= i <= n+1, i+2 <= j <= (t+1)(n+1).
    const int ngon = spec.polygon_size();
    for (int i = 1; i <= step; ++i) {
      for (int j = i + 2; j <= (t + 1) * step; ++j) coords.push_back({i, j});
    }
    std::sort(coords.begin(), coords.end());
    for (const Coordinate& c : coords) {
      Diagonal d = Diagonal::make(c.i, c.j, ngon);
      std::vector<Diagonal> orbit;
      for (int r = 0; r < spec.group_order(); ++r) orbit.push_back(rotate(d, r * step, ngon));
      const int id = static_cast<int>(tb.indecs_.size());
      for (const Diagonal& e : orbit) {
        if (!tb.index_a_.emplace(e, id).second) {
          throw std::logic_error("AR window is not a fundamental domain for " + spec.name());
        }
      }
      tb.orbit_a_.push_back(std::move(orbit));
      tb.indecs_.push_back(Indec{id, c, c.j - c.i - 1, c.j - c.i, false});
    }
    if (tb.index_a_.size() != all_diagonals(ngon).size()) {
      throw std::logic_error("AR window misses diagonals of " + spec.name());
    }
  } else {
    const int u = spec.half();
    for (int i = 1; i <= step; ++i) {
      for (int j = i + 2; j <= i + u - 1; ++j) coords.push_back({i, j});
      coords.push_back({i, i + u, true, Color::green});
      coords.push_back({i, i + u, true, Color::red});
    }
    std::sort(coords.begin(), coords.end());
    for (const Coordinate& c : coords) {
      ArcD a = c.diameter ? ArcD::diameter(c.i, c.color, u) : ArcD::pair(c.i, c.j, u);
      std::vector<ArcD> orbit;
      for (int r = 0; r < spec.group_order(); ++r) orbit.push_back(F_d(a, n, r));
      const int id = static_cast<int>(tb.indecs_.size());
      for (const ArcD& e : orbit) {
        if (!tb.index_d_.emplace(e, id).second) {
          throw std::logic_error("AR window is not a fundamental domain for " + spec.name());
        }
      }
      tb.orbit_d_.push_back(std::move(orbit));
      const int len = c.j - c.i;
      tb.indecs_.push_back(Indec{id, c, len - 1, len, false});
    }
    if (tb.index_d_.size() != all_arcs_d(u).size()) {
      throw std::logic_error("AR window misses arcs of " + spec.name());
    }
  }
  tb.finish();
  return tb;
}

void CategoryTables::finish() {
  const std::size_t k = indecs_.size();
  const bool type_a = spec_.family == Family::A;
  const int ngon = spec_.polygon_size();

  shift_perm_.resize(k);
  for (std::size_t a = 0; a < k; ++a) {
    shift_perm_[a] = type_a ? class_of(rotate(orbit_a_[a][0], 1, ngon))
                            : class_of(tau_d(orbit_d_[a][0], 1));
  }

  ext_rows_.assign(k, IndecSet(k));
  implied_.assign(k, std::vector<IndecSet>(k, IndecSet(k)));
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = 0; b < k; ++b) {
      IndecSet& forced = implied_[a][b];
      if (type_a) {
        const Diagonal& alpha = orbit_a_[a][0];
        for (const Diagonal& beta : orbit_a_[b]) {
          if (!cross(alpha, beta, ngon)) continue;
          ext_rows_[a].insert(static_cast<int>(b));
          for (const Diagonal& c : ptolemy_consequences(alpha, beta, ngon)) {
            forced.insert(class_of(c));
          }
        }
      } else {
        const ArcD& alpha = orbit_d_[a][0];
        for (const ArcD& beta : orbit_d_[b]) {
          if (!cross_d(alpha, beta)) continue;
          ext_rows_[a].insert(static_cast<int>(b));
          for (const ArcD& c : ptolemy_consequences_d(alpha, beta)) forced.insert(class_of(c));
        }
      }
    }
  }

  // Hom(a, b) = Ext^1(a, b[-1]).
  hom_rows_.assign(k, IndecSet(k));
  hom_cols_.assign(k, IndecSet(k));
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = 0; b < k; ++b) {
      if (ext(static_cast<int>(a), shift(static_cast<int>(b), -1))) {
        hom_rows_[a].insert(static_cast<int>(b));
        hom_cols_[b].insert(static_cast<int>(a));
      }
    }
  }

  if (type_a) {
    hom_dims_.assign(k, std::vector<int>(k, 0));
    for (std::size_t a = 0; a < k; ++a) {
      for (std::size_t b = 0; b < k; ++b) {
        int unshifted = shift(static_cast<int>(b), -1);
        int dim = 0;
        for (const Diagonal& beta : orbit_a_[unshifted]) {
          if (cross(orbit_a_[a][0], beta, ngon)) ++dim;
        }
        hom_dims_[a][b] = dim;
      }
    }
  }

  for (std::size_t a = 0; a < k; ++a) indecs_[a].rigid = !ext_rows_[a].contains(static_cast<int>(a));
}

int CategoryTables::hom_dim(int a, int b) const {
  require(Family::A, "hom_dim");
  return hom_dims_.at(a).at(b);
}

int CategoryTables::shift(int id, long k) const {
  // [1] has finite order dividing the polygon size.
  const long order = spec_.polygon_size();
  long steps = k % order;
  if (steps < 0) steps += order;
  for (long s = 0; s < steps; ++s) id = shift_perm_[id];
  return id;
}

IndecSet CategoryTables::shift(const IndecSet& x, long k) const {
  IndecSet out(size());
  for (int id : x.ids()) out.insert(shift(id, k));
  return out;
}

IndecSet CategoryTables::right_perp(const IndecSet& x) const {
  IndecSet out = full_set();
  for (int a : x.ids()) out -= hom_rows_[a];
  return out;
}

IndecSet CategoryTables::left_perp(const IndecSet& x) const {
  IndecSet out = full_set();
  for (int b : x.ids()) out -= hom_cols_[b];
  return out;
}

IndecSet CategoryTables::rigid_set() const {
  IndecSet out(size());
  for (const Indec& x : indecs_) {
    if (x.rigid) out.insert(x.id);
  }
  return out;
}

bool CategoryTables::is_rigid(const IndecSet& x) const {
  for (int a : x.ids()) {
    if (ext_rows_[a].intersects(x)) return false;
  }
  return true;
}

IndecSet CategoryTables::ptolemy_closure(const IndecSet& x) const {
  IndecSet out = x;
  std::deque<int> work;
  for (int a : x.ids()) work.push_back(a);
  while (!work.empty()) {
    const int a = work.front();
    work.pop_front();
    IndecSet added(size());
    for (int b : out.ids()) added |= implied_[a][b];
    added -= out;
    for (int c : added.ids()) work.push_back(c);
    out |= added;
  }
  return out;
}

int CategoryTables::class_of(const Diagonal& d) const {
  require(Family::A, "diagonal lookup");
  auto it = index_a_.find(d);
  if (it == index_a_.end()) {
    throw std::invalid_argument("{" + std::to_string(d.first()) + "," +
                                std::to_string(d.second()) + "} is not a diagonal of the " +
                                std::to_string(spec_.polygon_size()) + "-gon");
  }
  return it->second;
}

int CategoryTables::class_of(const ArcD& a) const {
  require(Family::D, "arc lookup");
  auto it = index_d_.find(a);
  if (it == index_d_.end()) throw std::invalid_argument(to_string(a) + " is not an arc of this model");
  return it->second;
}

std::optional<int> CategoryTables::find(const Coordinate& c) const {
  for (const Indec& x : indecs_) {
    if (x.rep == c) return x.id;
  }
  return std::nullopt;
}

DiagonalSet CategoryTables::lift_a(const IndecSet& x) const {
  require(Family::A, "lift_a");
  DiagonalSet out(spec_.polygon_size());
  for (int id : x.ids()) {
    for (const Diagonal& d : orbit_a_[id]) out.insert(d);
  }
  return out;
}

ArcSetD CategoryTables::lift_d(const IndecSet& x) const {
  require(Family::D, "lift_d");
  ArcSetD out(spec_.half());
  for (int id : x.ids()) {
    for (const ArcD& a : orbit_d_[id]) out.insert(a);
  }
  return out;
}

IndecSet CategoryTables::project(const DiagonalSet& u) const {
  require(Family::A, "project");
  if (u.ngon() != spec_.polygon_size()) throw std::invalid_argument("polygon size mismatch");
  IndecSet out(size());
  for (const Diagonal& d : u) {
    const int id = class_of(d);
    for (const Diagonal& e : orbit_a_[id]) {
      if (!u.contains(e)) {
        throw std::invalid_argument(
            "set is not " + std::to_string(spec_.period()) + "-periodic: {" +
            std::to_string(d.first()) + "," + std::to_string(d.second()) + "} present but {" +
            std::to_string(e.first()) + "," + std::to_string(e.second()) + "} missing");
      }
    }
    out.insert(id);
  }
  return out;
}

IndecSet CategoryTables::project(const ArcSetD& u) const {
  require(Family::D, "project");
  if (u.half() != spec_.half()) throw std::invalid_argument("polygon size mismatch");
  IndecSet out(size());
  for (const ArcD& a : u) {
    const int id = class_of(a);
    for (const ArcD& e : orbit_d_[id]) {
      if (!u.contains(e)) {
        throw std::invalid_argument("set is not F-periodic: " + to_string(a) +
                                    " present but " + to_string(e) + " missing");
      }
    }
    out.insert(id);
  }
  return out;
}

}  // namespace cy2
