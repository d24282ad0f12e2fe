#include "doctest.h"

#include <stdexcept>

#include <algorithm>
#include <random>
#include <set>
#include <utility>

#include "cy2/geometry_a.hpp"

using namespace cy2;

namespace {

// Independent oracle: walk the polygon from a.first and record the order in
// which endpoints are met.
bool interleave(int a1, int a2, int b1, int b2, int ngon) {
  if (a1 == b1 || a1 == b2 || a2 == b1 || a2 == b2) return false;
  bool inside_b1 = false;
  bool inside_b2 = false;
  for (int v = a1 % ngon + 1; v != a2; v = v % ngon + 1) {
    inside_b1 = inside_b1 || v == b1;
    inside_b2 = inside_b2 || v == b2;
  }
  return inside_b1 != inside_b2;
}

using Pairs = std::set<std::pair<int, int>>;

bool is_diag(int a, int b, int ngon) {
  int d = (b - a + ngon) % ngon;
  return d >= 2 && d <= ngon - 2;
}

std::pair<int, int> norm(int a, int b) { return a < b ? std::pair{a, b} : std::pair{b, a}; }

// Saturation by repeated passes over all pairs.
Pairs naive_closure(Pairs u, int ngon) {
  for (bool grew = true; grew;) {
    grew = false;
    Pairs add;
    for (auto [a1, a2] : u) {
      for (auto [b1, b2] : u) {
        if (!interleave(a1, a2, b1, b2, ngon)) continue;
        for (auto [x, y] : {std::pair{a1, b1}, {a1, b2}, {a2, b1}, {a2, b2}}) {
          if (is_diag(x, y, ngon) && !u.count(norm(x, y))) add.insert(norm(x, y));
        }
      }
    }
    if (!add.empty()) {
      grew = true;
      u.insert(add.begin(), add.end());
    }
  }
  return u;
}

Pairs as_pairs(const DiagonalSet& u) {
  Pairs p;
  for (const Diagonal& d : u) p.insert({d.first(), d.second()});
  return p;
}

}  // namespace

TEST_CASE("diagonal construction normalizes and validates") {
  CHECK(Diagonal::make(3, 1, 6) == Diagonal::make(1, 3, 6));
  CHECK(Diagonal::make(7, 9, 6) == Diagonal::make(1, 3, 6));
  CHECK(Diagonal::make(-1, 1, 6) == Diagonal::make(1, 5, 6));
  CHECK(Diagonal::make(1, 3, 6).first() == 1);
  CHECK(Diagonal::make(1, 3, 6).second() == 3);
  CHECK_THROWS_AS(Diagonal::make(1, 2, 6), std::invalid_argument);
  CHECK_THROWS_AS(Diagonal::make(1, 6, 6), std::invalid_argument);
  CHECK_THROWS_AS(Diagonal::make(2, 2, 6), std::invalid_argument);
  CHECK_THROWS_AS(DiagonalSet(3), std::invalid_argument);
  CHECK(all_diagonals(15).size() == 90);
  CHECK(all_diagonals(4).size() == 2);
}

TEST_CASE("cross examples") {
  CHECK(cross(Diagonal::make(1, 3, 6), Diagonal::make(2, 4, 6), 6));
  CHECK_FALSE(cross(Diagonal::make(1, 3, 6), Diagonal::make(3, 5, 6), 6));
  CHECK_FALSE(cross(Diagonal::make(1, 3, 8), Diagonal::make(4, 6, 8), 8));
}

TEST_CASE("cross agrees with the walking oracle, exhaustively for N <= 12") {
  for (int ngon = 4; ngon <= 12; ++ngon) {
    const auto ds = all_diagonals(ngon);
    for (const Diagonal& a : ds) {
      CHECK_FALSE(cross(a, a, ngon));
      for (const Diagonal& b : ds) {
        const bool c = cross(a, b, ngon);
        REQUIRE(c == interleave(a.first(), a.second(), b.first(), b.second(), ngon));
        REQUIRE(c == cross(b, a, ngon));
        for (int k = 1; k < ngon; ++k) {
          REQUIRE(c == cross(rotate(a, k, ngon), rotate(b, k, ngon), ngon));
        }
      }
    }
  }
}

TEST_CASE("rotate examples and group action") {
  const auto d13 = Diagonal::make(1, 3, 15);
  CHECK(rotate(d13, 15, 15) == d13);
  CHECK(rotate(Diagonal::make(2, 4, 15), 1, 15) == d13);
  CHECK(rotate(d13, -3, 15) == Diagonal::make(4, 6, 15));
  for (int ngon = 4; ngon <= 10; ++ngon) {
    for (const Diagonal& a : all_diagonals(ngon)) {
      CHECK(rotate(a, 0, ngon) == a);
      CHECK(rotate(a, ngon, ngon) == a);
      for (long k = -12; k <= 12; k += 5) {
        for (long m = -7; m <= 7; m += 3) {
          CHECK(rotate(rotate(a, k, ngon), m, ngon) == rotate(a, k + m, ngon));
        }
      }
    }
  }
}

TEST_CASE("is_ptolemy examples") {
  CHECK_FALSE(is_ptolemy(DiagonalSet(6, {{1, 3}, {2, 4}})));
  CHECK(is_ptolemy(DiagonalSet(6, {{1, 3}, {2, 4}, {1, 4}})));
  CHECK(is_ptolemy(DiagonalSet(15, {{1, 3}, {4, 6}, {7, 9}, {10, 12}, {13, 15}})));
  CHECK(is_ptolemy(DiagonalSet(6)));
  DiagonalSet all(9);
  for (const Diagonal& d : all_diagonals(9)) all.insert(d);
  CHECK(is_ptolemy(all));
}

TEST_CASE("ptolemy_closure examples") {
  CHECK(ptolemy_closure(DiagonalSet(6, {{1, 3}, {2, 4}})) ==
        DiagonalSet(6, {{1, 3}, {2, 4}, {1, 4}}));
  CHECK(ptolemy_closure(DiagonalSet(8)).empty());
  const DiagonalSet p(6, {{1, 3}, {2, 4}, {1, 4}});
  CHECK(ptolemy_closure(p) == p);
}

TEST_CASE("ptolemy_closure matches naive saturation on random sets") {
  std::mt19937 rng(17);
  for (int c = 0; c < 1000; ++c) {
    const int ngon = std::uniform_int_distribution<int>(4, 12)(rng);
    const auto ds = all_diagonals(ngon);
    DiagonalSet u(ngon);
    const int picks = std::uniform_int_distribution<int>(0, 4)(rng);
    for (int i = 0; i < picks; ++i) {
      u.insert(ds[std::uniform_int_distribution<std::size_t>(0, ds.size() - 1)(rng)]);
    }
    const DiagonalSet cl = ptolemy_closure(u);
    REQUIRE(as_pairs(cl) == naive_closure(as_pairs(u), ngon));
    REQUIRE(is_ptolemy(cl));
    REQUIRE(cl.includes(u));
    REQUIRE(ptolemy_closure(cl) == cl);
  }
}

TEST_CASE("pairwise non-crossing sets are Ptolemy diagrams") {
  std::mt19937 rng(3);
  for (int c = 0; c < 1000; ++c) {
    const int ngon = std::uniform_int_distribution<int>(4, 12)(rng);
    auto ds = all_diagonals(ngon);
    std::shuffle(ds.begin(), ds.end(), rng);
    DiagonalSet u(ngon);
    for (const Diagonal& d : ds) {
      bool free = true;
      for (const Diagonal& e : u) free = free && !cross(d, e, ngon);
      if (free && std::bernoulli_distribution(0.5)(rng)) u.insert(d);
    }
    REQUIRE(is_ptolemy(u));
  }
}

TEST_CASE("k-periodicity") {
  CHECK(is_k_periodic(DiagonalSet(10, {{1, 3}, {3, 5}, {5, 7}, {7, 9}, {9, 1}}), 2));
  CHECK(is_k_periodic(DiagonalSet(12), 4));
  CHECK_FALSE(is_k_periodic(DiagonalSet(15, {{1, 3}}), 3));
  CHECK_THROWS_AS(is_k_periodic(DiagonalSet(15), 4), std::invalid_argument);
  const DiagonalSet hull = periodic_hull(DiagonalSet(15, {{1, 3}}), 3);
  CHECK(hull == DiagonalSet(15, {{1, 3}, {4, 6}, {7, 9}, {10, 12}, {13, 15}}));
  CHECK(is_k_periodic(hull, 3));
}
