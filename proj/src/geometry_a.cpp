#include "cy2/geometry_a.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <iterator>
#include <stdexcept>
#include <string>

namespace cy2 {

namespace {

void check_ngon(int ngon) {
  if (ngon < 4) {
    throw std::invalid_argument("polygon must have at least 4 vertices, got " +
                                std::to_string(ngon));
  }
}

// Strictly between lo and hi going clockwise (increasing labels, mod N).
bool strictly_between(int lo, int x, int hi) { return lo < x && x < hi; }

}  // namespace

int wrap_vertex(long v, int ngon) {
  long r = (v - 1) % ngon;
  if (r < 0) r += ngon;
  return static_cast<int>(r) + 1;
}

Diagonal Diagonal::make(long a, long b, int ngon) {
  check_ngon(ngon);
  int x = wrap_vertex(a, ngon);
  int y = wrap_vertex(b, ngon);
  if (x > y) std::swap(x, y);
  int gap = y - x;
  if (gap < 2 || gap > ngon - 2) {
    throw std::invalid_argument("{" + std::to_string(a) + "," + std::to_string(b) +
                                "} is not a diagonal of the " + std::to_string(ngon) +
                                "-gon");
  }
  return Diagonal(x, y);
}

bool cross(const Diagonal& a, const Diagonal& b, int /*ngon*/) {
  // Canonical labels lie in 1..N, so cyclic interleaving is plain interleaving.
  bool b1_inside = strictly_between(a.first(), b.first(), a.second());
  bool b2_inside = strictly_between(a.first(), b.second(), a.second());
  bool shares = a.first() == b.first() || a.first() == b.second() ||
                a.second() == b.first() || a.second() == b.second();
  return !shares && (b1_inside != b2_inside);
}

Diagonal rotate(const Diagonal& a, long k, int ngon) {
  long shift = k % ngon;
  return Diagonal::make(a.first() - shift, a.second() - shift, ngon);
}

int cyclic_length(const Diagonal& a, int ngon) {
  int gap = a.second() - a.first();
  return std::min(gap, ngon - gap);
}

std::vector<Diagonal> ptolemy_consequences(const Diagonal& a, const Diagonal& b, int ngon) {
  std::vector<Diagonal> out;
  if (!cross(a, b, ngon)) return out;
  for (int x : {a.first(), a.second()}) {
    for (int y : {b.first(), b.second()}) {
      int gap = std::abs(x - y);
      if (gap >= 2 && gap <= ngon - 2) out.push_back(Diagonal::make(x, y, ngon));
    }
  }
  return out;
}

std::vector<Diagonal> all_diagonals(int ngon) {
  check_ngon(ngon);
  std::vector<Diagonal> out;
  for (int i = 1; i <= ngon; ++i) {
    for (int j = i + 2; j <= ngon; ++j) {
      if (i == 1 && j == ngon) continue;
      out.push_back(Diagonal::make(i, j, ngon));
    }
  }
  return out;
}

DiagonalSet::DiagonalSet(int ngon) : ngon_(ngon) { check_ngon(ngon); }

DiagonalSet::DiagonalSet(int ngon, std::initializer_list<std::pair<long, long>> ends)
    : DiagonalSet(ngon) {
  for (auto [a, b] : ends) insert(a, b);
}

bool DiagonalSet::insert(const Diagonal& d) {
  // Re-validate: d may have been made for a different polygon.
  Diagonal checked = Diagonal::make(d.first(), d.second(), ngon_);
  if (checked != d) {
    throw std::invalid_argument("diagonal belongs to a different polygon");
  }
  return members_.insert(d).second;
}

bool DiagonalSet::includes(const DiagonalSet& other) const {
  return ngon_ == other.ngon_ &&
         std::includes(members_.begin(), members_.end(), other.begin(), other.end());
}

bool is_ptolemy(const DiagonalSet& u) {
  const int n = u.ngon();
  for (auto it = u.begin(); it != u.end(); ++it) {
    for (auto jt = std::next(it); jt != u.end(); ++jt) {
      for (const Diagonal& d : ptolemy_consequences(*it, *jt, n)) {
        if (!u.contains(d)) return false;
      }
    }
  }
  return true;
}

DiagonalSet ptolemy_closure(const DiagonalSet& u) {
  DiagonalSet out = u;
  const int n = u.ngon();
  std::deque<Diagonal> work(u.begin(), u.end());
  while (!work.empty()) {
    Diagonal d = work.front();
    work.pop_front();
    std::vector<Diagonal> found;
    for (const Diagonal& m : out) {
      for (const Diagonal& c : ptolemy_consequences(d, m, n)) {
        if (!out.contains(c)) found.push_back(c);
      }
    }
    for (const Diagonal& c : found) {
      if (out.insert(c)) work.push_back(c);
    }
  }
  return out;
}

bool is_k_periodic(const DiagonalSet& u, int k) {
  if (k <= 0 || u.ngon() % k != 0) {
    throw std::invalid_argument("period " + std::to_string(k) + " does not divide " +
                                std::to_string(u.ngon()));
  }
  return std::all_of(u.begin(), u.end(),
                     [&](const Diagonal& d) { return u.contains(rotate(d, k, u.ngon())); });
}

DiagonalSet rotate(const DiagonalSet& u, long k) {
  DiagonalSet out(u.ngon());
  for (const Diagonal& d : u) out.insert(rotate(d, k, u.ngon()));
  return out;
}

DiagonalSet periodic_hull(const DiagonalSet& u, int k) {
  if (k <= 0 || u.ngon() % k != 0) {
    throw std::invalid_argument("period does not divide the polygon size");
  }
  DiagonalSet out(u.ngon());
  for (const Diagonal& d : u) {
    for (int r = 0; r < u.ngon(); r += k) out.insert(rotate(d, r, u.ngon()));
  }
  return out;
}

}  // namespace cy2
