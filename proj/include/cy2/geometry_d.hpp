#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

namespace cy2 {

enum class Color : std::uint8_t { green, red };

inline Color flip(Color c) { return c == Color::green ? Color::red : Color::green; }
inline char color_code(Color c) { return c == Color::green ? 'g' : 'r'; }

/// An object of the type-D model on the 2u-gon: either a pair of
/// non-diameter arcs related by the half-turn, or a coloured diameter.
///
/// Pairs are stored as the lexicographically smaller of their two sorted
/// arcs. Diameters are stored as (i, i+u) with 1 <= i <= u.
class ArcD {
 public:
  /// Accepts either arc of the pair, in any order and any residue mod 2u.
  static ArcD pair(long a, long b, int u);
  static ArcD diameter(long i, Color c, int u);

  int half() const { return u_; }
  int polygon() const { return 2 * u_; }
  bool is_diameter() const { return diameter_; }
  int first() const { return a_; }
  int second() const { return b_; }
  /// Meaningful only for diameters.
  Color color() const { return color_; }

  /// Boundary edges on the short side; u for diameters.
  int length() const;

  auto operator<=>(const ArcD&) const = default;

 private:
  ArcD(int u, int a, int b, bool diameter, Color c)
      : u_(u), a_(a), b_(b), diameter_(diameter), color_(c) {}
  int u_;
  int a_;
  int b_;
  bool diameter_;
  Color color_;
};

/// A concrete chord of the 2u-gon; one ArcD pair expands to two of these.
struct Chord {
  int a;
  int b;
  bool diameter;
  Color color;
};

std::vector<Chord> chords(const ArcD& x);

/// Crossing rules for pairs and coloured diameters. Throws on mismatched polygons.
bool cross_d(const ArcD& a, const ArcD& b);

/// k applications of tau (vertex v -> v - k); diameters change colour once per step.
ArcD tau_d(const ArcD& a, long k = 1);
ArcD phi_d(const ArcD& a);
/// r applications of F = tau^{n+1} phi^n.
ArcD F_d(const ArcD& a, int n, long r = 1);

/// Arcs forced into a type-D Ptolemy diagram by the crossing of a and b.
std::vector<ArcD> ptolemy_consequences_d(const ArcD& a, const ArcD& b);

/// Every pair and both colours of every diameter of the 2u-gon.
std::vector<ArcD> all_arcs_d(int u);

std::string to_string(const ArcD& a);

class ArcSetD {
 public:
  using const_iterator = std::set<ArcD>::const_iterator;

  explicit ArcSetD(int u);

  int half() const { return u_; }
  bool insert(const ArcD& a);
  bool contains(const ArcD& a) const { return members_.count(a) > 0; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  const_iterator begin() const { return members_.begin(); }
  const_iterator end() const { return members_.end(); }

  bool includes(const ArcSetD& other) const;

  bool operator==(const ArcSetD&) const = default;
  auto operator<=>(const ArcSetD&) const = default;

 private:
  int u_;
  std::set<ArcD> members_;
};

bool is_ptolemy_d(const ArcSetD& s);
ArcSetD ptolemy_closure_d(const ArcSetD& s);

/// Requires u = 2t(n+1); throws std::invalid_argument otherwise.
bool is_F_periodic(const ArcSetD& s, int n, int t);

/// Union of all F-images of the members.
ArcSetD F_hull(const ArcSetD& s, int n);

}  // namespace cy2
