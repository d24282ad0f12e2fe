#include "cy2/geometry_d.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <iterator>
#include <stdexcept>
#include <utility>

#include "cy2/geometry_a.hpp"

namespace cy2 {

namespace {

void check_half(int u) {
  if (u < 2) throw std::invalid_argument("type-D model needs u >= 2");
}

bool interleave(int a1, int a2, int b1, int b2) {
  if (a1 == b1 || a1 == b2 || a2 == b1 || a2 == b2) return false;
  if (a1 > a2) std::swap(a1, a2);
  bool in1 = a1 < b1 && b1 < a2;
  bool in2 = a1 < b2 && b2 < a2;
  return in1 != in2;
}

bool chords_cross(const Chord& x, const Chord& y) {
  if (x.diameter && y.diameter) {
    return x.color != y.color && x.a != y.a && x.a != y.b;
  }
  return interleave(x.a, x.b, y.a, y.b);
}

bool is_neighbour_or_equal(int x, int y, int polygon) {
  int gap = std::abs(x - y);
  return gap == 0 || gap == 1 || gap == polygon - 1;
}

void check_same(const ArcD& a, const ArcD& b) {
  if (a.half() != b.half()) {
    throw std::invalid_argument("arcs belong to different polygons");
  }
}

void ptolemy_from_chords(const Chord& alpha, const Chord& beta, int u,
                         std::vector<ArcD>& out) {
  const int p = 2 * u;
  if (!alpha.diameter && !beta.diameter) {
    for (int x : {alpha.a, alpha.b}) {
      for (int y : {beta.a, beta.b}) {
        if (is_neighbour_or_equal(x, y, p)) continue;
        if (std::abs(x - y) == u) {
          out.push_back(ArcD::diameter(x, Color::green, u));
          out.push_back(ArcD::diameter(x, Color::red, u));
        } else {
          out.push_back(ArcD::pair(x, y, u));
        }
      }
    }
    return;
  }
  if (alpha.diameter && beta.diameter) {
    for (int x : {alpha.a, alpha.b}) {
      for (int y : {beta.a, beta.b}) {
        if (!is_neighbour_or_equal(x, y, p)) out.push_back(ArcD::pair(x, y, u));
      }
    }
    return;
  }
  const Chord& diam = alpha.diameter ? alpha : beta;
  const Chord& arc = alpha.diameter ? beta : alpha;
  const int k2 = wrap_vertex(arc.a + u, p);
  const int l2 = wrap_vertex(arc.b + u, p);
  for (int x : {diam.a, diam.b}) {
    for (int y : {arc.a, arc.b}) {
      if (is_neighbour_or_equal(x, y, p)) continue;
      if (!interleave(x, y, k2, l2)) out.push_back(ArcD::pair(x, y, u));
    }
  }
  out.push_back(ArcD::diameter(arc.a, diam.color, u));
  out.push_back(ArcD::diameter(arc.b, diam.color, u));
}

}  // namespace

ArcD ArcD::pair(long a, long b, int u) {
  check_half(u);
  const int p = 2 * u;
  int x = wrap_vertex(a, p);
  int y = wrap_vertex(b, p);
  if (x > y) std::swap(x, y);
  int gap = y - x;
  if (gap < 2 || gap > p - 2 || gap == u) {
    throw std::invalid_argument("{" + std::to_string(a) + "," + std::to_string(b) +
                                "} is not a non-diameter arc of the " +
                                std::to_string(p) + "-gon");
  }
  int x2 = wrap_vertex(x + u, p);
  int y2 = wrap_vertex(y + u, p);
  if (x2 > y2) std::swap(x2, y2);
  if (std::pair(x2, y2) < std::pair(x, y)) {
    x = x2;
    y = y2;
  }
  return ArcD(u, x, y, false, Color::green);
}

ArcD ArcD::diameter(long i, Color c, int u) {
  check_half(u);
  int x = wrap_vertex(i, u);
  return ArcD(u, x, x + u, true, c);
}

int ArcD::length() const {
  if (diameter_) return u_;
  int gap = b_ - a_;
  return std::min(gap, 2 * u_ - gap);
}

std::vector<Chord> chords(const ArcD& x) {
  if (x.is_diameter()) return {Chord{x.first(), x.second(), true, x.color()}};
  const int p = x.polygon();
  int a2 = wrap_vertex(x.first() + x.half(), p);
  int b2 = wrap_vertex(x.second() + x.half(), p);
  if (a2 > b2) std::swap(a2, b2);
  return {Chord{x.first(), x.second(), false, Color::green},
          Chord{a2, b2, false, Color::green}};
}

bool cross_d(const ArcD& a, const ArcD& b) {
  check_same(a, b);
  for (const Chord& x : chords(a)) {
    for (const Chord& y : chords(b)) {
      if (chords_cross(x, y)) return true;
    }
  }
  return false;
}

ArcD tau_d(const ArcD& a, long k) {
  const int u = a.half();
  long shift = k % (2L * u);
  if (a.is_diameter()) {
    Color c = (k % 2 != 0) ? flip(a.color()) : a.color();
    return ArcD::diameter(a.first() - shift, c, u);
  }
  return ArcD::pair(a.first() - shift, a.second() - shift, u);
}

ArcD phi_d(const ArcD& a) {
  if (!a.is_diameter()) return a;
  return ArcD::diameter(a.first(), flip(a.color()), a.half());
}

ArcD F_d(const ArcD& a, int n, long r) {
  ArcD rotated = tau_d(a, r * (n + 1));
  // tau^{r(n+1)} already flipped r(n+1) times; phi^{rn} adds rn more.
  if (a.is_diameter() && (r * n) % 2 != 0) rotated = phi_d(rotated);
  return rotated;
}

std::vector<ArcD> ptolemy_consequences_d(const ArcD& a, const ArcD& b) {
  check_same(a, b);
  std::vector<ArcD> out;
  for (const Chord& x : chords(a)) {
    for (const Chord& y : chords(b)) {
      if (chords_cross(x, y)) ptolemy_from_chords(x, y, a.half(), out);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<ArcD> all_arcs_d(int u) {
  check_half(u);
  std::set<ArcD> found;
  const int p = 2 * u;
  for (int i = 1; i <= p; ++i) {
    for (int j = i + 2; j <= p; ++j) {
      if (j - i == u || (i == 1 && j == p)) continue;
      found.insert(ArcD::pair(i, j, u));
    }
  }
  for (int i = 1; i <= u; ++i) {
    found.insert(ArcD::diameter(i, Color::green, u));
    found.insert(ArcD::diameter(i, Color::red, u));
  }
  return {found.begin(), found.end()};
}

std::string to_string(const ArcD& a) {
  std::string s = "{" + std::to_string(a.first()) + "," + std::to_string(a.second()) + "}";
  if (a.is_diameter()) s += color_code(a.color());
  return s;
}

ArcSetD::ArcSetD(int u) : u_(u) { check_half(u); }

bool ArcSetD::insert(const ArcD& a) {
  if (a.half() != u_) throw std::invalid_argument("arc belongs to a different polygon");
  return members_.insert(a).second;
}

bool ArcSetD::includes(const ArcSetD& other) const {
  return u_ == other.u_ &&
         std::includes(members_.begin(), members_.end(), other.begin(), other.end());
}

bool is_ptolemy_d(const ArcSetD& s) {
  for (auto it = s.begin(); it != s.end(); ++it) {
    for (auto jt = std::next(it); jt != s.end(); ++jt) {
      for (const ArcD& c : ptolemy_consequences_d(*it, *jt)) {
        if (!s.contains(c)) return false;
      }
    }
  }
  return true;
}

ArcSetD ptolemy_closure_d(const ArcSetD& s) {
  ArcSetD out = s;
  std::deque<ArcD> work(s.begin(), s.end());
  while (!work.empty()) {
    ArcD d = work.front();
    work.pop_front();
    std::vector<ArcD> found;
    for (const ArcD& m : out) {
      for (const ArcD& c : ptolemy_consequences_d(d, m)) {
        if (!out.contains(c)) found.push_back(c);
      }
    }
    for (const ArcD& c : found) {
      if (out.insert(c)) work.push_back(c);
    }
  }
  return out;
}

bool is_F_periodic(const ArcSetD& s, int n, int t) {
  if (n < 1 || t < 1 || s.half() != 2 * t * (n + 1)) {
    throw std::invalid_argument("arc set does not live on the 2u-gon with u = 2t(n+1)");
  }
  return std::all_of(s.begin(), s.end(),
                     [&](const ArcD& a) { return s.contains(F_d(a, n, 1)); });
}

ArcSetD F_hull(const ArcSetD& s, int n) {
  ArcSetD out(s.half());
  for (const ArcD& a : s) {
    ArcD cur = a;
    do {
      out.insert(cur);
      cur = F_d(cur, n, 1);
    } while (cur != a);
  }
  return out;
}

}  // namespace cy2
