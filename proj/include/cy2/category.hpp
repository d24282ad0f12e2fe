#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cy2/geometry_a.hpp"
#include "cy2/geometry_d.hpp"
#include "cy2/indec_set.hpp"

namespace cy2 {

/// E is accepted by parsers only so that it can be rejected with a clear message.
enum class Family { A, D, E };

std::string to_string(Family f);
Family parse_family(const std::string& s);

struct CategorySpec {
  Family family = Family::A;
  int n = 1;
  int t = 1;

  /// Throws std::invalid_argument for n, t < 1 and std::domain_error for family E.
  void validate() const;

  /// N = (2t+1)(n+1) for A, 2u = 4t(n+1) for D.
  int polygon_size() const;
  /// u = 2t(n+1); only meaningful for D.
  int half() const { return 2 * t * (n + 1); }
  /// Rotation step generating the periodicity group.
  int period() const { return n + 1; }
  /// 2t+1 for A, 2t for D.
  int group_order() const;

  std::string name() const;

  auto operator<=>(const CategorySpec&) const = default;
};

/// Position of an orbit representative in the AR-quiver, as printed in
/// the literature: (i, j) with 1 <= i <= n+1. Diameters carry a colour.
struct Coordinate {
  int i = 0;
  int j = 0;
  bool diameter = false;
  Color color = Color::green;

  auto operator<=>(const Coordinate&) const = default;
};

struct Indec {
  int id = 0;
  Coordinate rep;
  int level = 0;   // j - i - 1
  int length = 0;  // j - i
  bool rigid = false;
};

/// "(1,3)" for type A and pairs; "(1,5+)" / "(1,5-)" for green / red diameters.
std::string label(const Indec& x);

/// The finite orbit category: its indecomposables (periodicity orbits of
/// diagonals or arcs) with Ext, Hom and shift tables. Immutable once built.
class CategoryTables {
 public:
  static CategoryTables build(const CategorySpec& spec);

  const CategorySpec& spec() const { return spec_; }
  std::size_t size() const { return indecs_.size(); }
  std::span<const Indec> indecs() const { return indecs_; }
  const Indec& indec(int id) const { return indecs_.at(static_cast<std::size_t>(id)); }

  bool ext(int a, int b) const { return ext_rows_[a].contains(b); }
  bool hom(int a, int b) const { return hom_rows_[a].contains(b); }
  /// Type A only; throws std::domain_error for type D.
  int hom_dim(int a, int b) const;

  /// Image of an indecomposable under [k]; [1] acts as tau.
  int shift(int id, long k) const;
  IndecSet shift(const IndecSet& x, long k) const;
  std::span<const int> shift_perm() const { return shift_perm_; }

  /// Objects M with Hom(x, M) = 0.
  IndecSet right_perp(const IndecSet& x) const;
  /// Objects M with Hom(M, x) = 0.
  IndecSet left_perp(const IndecSet& x) const;

  IndecSet empty_set() const { return IndecSet(size()); }
  IndecSet full_set() const { return IndecSet::full(size()); }
  IndecSet rigid_set() const;

  /// No Ext between any two members (including a member and itself).
  bool is_rigid(const IndecSet& x) const;

  /// Smallest set whose lift is a periodic Ptolemy diagram and contains lift(x).
  IndecSet ptolemy_closure(const IndecSet& x) const;

  /// Orbit class of a concrete diagonal or arc.
  int class_of(const Diagonal& d) const;
  int class_of(const ArcD& a) const;
  std::optional<int> find(const Coordinate& c) const;

  /// All lifts of one indecomposable.
  std::span<const Diagonal> orbit_a(int id) const { return orbit_a_.at(id); }
  std::span<const ArcD> orbit_d(int id) const { return orbit_d_.at(id); }

  DiagonalSet lift_a(const IndecSet& x) const;
  ArcSetD lift_d(const IndecSet& x) const;
  /// Throws std::invalid_argument naming the element whose orbit is incomplete.
  IndecSet project(const DiagonalSet& u) const;
  IndecSet project(const ArcSetD& u) const;

  const IndecSet& ext_row(int a) const { return ext_rows_[a]; }
  const IndecSet& hom_row(int a) const { return hom_rows_[a]; }

 private:
  CategoryTables() = default;
  void finish();
  void require(Family f, const char* what) const;

  CategorySpec spec_;
  std::vector<Indec> indecs_;
  std::vector<std::vector<Diagonal>> orbit_a_;
  std::vector<std::vector<ArcD>> orbit_d_;
  std::map<Diagonal, int> index_a_;
  std::map<ArcD, int> index_d_;
  std::vector<int> shift_perm_;
  std::vector<IndecSet> ext_rows_;
  std::vector<IndecSet> hom_rows_;
  std::vector<IndecSet> hom_cols_;
  std::vector<std::vector<int>> hom_dims_;
  std::vector<std::vector<IndecSet>> implied_;
};

inline CategoryTables build(const CategorySpec& spec) { return CategoryTables::build(spec); }

}  // namespace cy2
