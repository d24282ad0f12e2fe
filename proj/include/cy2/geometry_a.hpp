#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <set>
#include <utility>
#include <vector>

namespace cy2 {

/// A diagonal of a convex N-gon with vertices labelled 1..N clockwise.
/// Stored canonically as (first, second) with first < second.
class Diagonal {
 public:
  /// Normalizes (a, b) modulo N and validates that the endpoints are
  /// distinct, non-neighbouring vertices. Throws std::invalid_argument.
  static Diagonal make(long a, long b, int ngon);

  int first() const { return i_; }
  int second() const { return j_; }

  auto operator<=>(const Diagonal&) const = default;

 private:
  Diagonal(int i, int j) : i_(i), j_(j) {}
  int i_;
  int j_;
};

/// Reduces any integer vertex label into 1..ngon.
int wrap_vertex(long v, int ngon);

/// True iff the four endpoints are distinct and interleave around the polygon.
bool cross(const Diagonal& a, const Diagonal& b, int ngon);

/// k applications of tau: every vertex v goes to v - k (mod N).
Diagonal rotate(const Diagonal& a, long k, int ngon);

/// Number of boundary edges on the shorter side of the diagonal.
int cyclic_length(const Diagonal& a, int ngon);

/// Those of {a1,b1}, {a1,b2}, {a2,b1}, {a2,b2} which are diagonals.
/// Empty when a and b do not cross.
std::vector<Diagonal> ptolemy_consequences(const Diagonal& a, const Diagonal& b, int ngon);

/// Every diagonal of the N-gon in lexicographic order.
std::vector<Diagonal> all_diagonals(int ngon);

class DiagonalSet {
 public:
  using const_iterator = std::set<Diagonal>::const_iterator;

  explicit DiagonalSet(int ngon);
  DiagonalSet(int ngon, std::initializer_list<std::pair<long, long>> ends);

  int ngon() const { return ngon_; }

  /// Returns false if already present. Throws if d is not a diagonal of this polygon.
  bool insert(const Diagonal& d);
  bool insert(long a, long b) { return insert(Diagonal::make(a, b, ngon_)); }
  bool erase(const Diagonal& d) { return members_.erase(d) > 0; }
  bool contains(const Diagonal& d) const { return members_.count(d) > 0; }
  bool contains(long a, long b) const { return contains(Diagonal::make(a, b, ngon_)); }

  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  const_iterator begin() const { return members_.begin(); }
  const_iterator end() const { return members_.end(); }

  bool includes(const DiagonalSet& other) const;

  bool operator==(const DiagonalSet&) const = default;
  auto operator<=>(const DiagonalSet&) const = default;

 private:
  int ngon_;
  std::set<Diagonal> members_;
};

bool is_ptolemy(const DiagonalSet& u);

/// Least Ptolemy diagram containing u.
DiagonalSet ptolemy_closure(const DiagonalSet& u);

/// Throws std::invalid_argument unless k divides N.
bool is_k_periodic(const DiagonalSet& u, int k);

DiagonalSet rotate(const DiagonalSet& u, long k);

/// Union of rotations of u by all multiples of k.
DiagonalSet periodic_hull(const DiagonalSet& u, int k);

}  // namespace cy2
