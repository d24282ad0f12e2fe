#include "doctest.h"

#include <stdexcept>

#include <random>
#include <set>

#include "cy2/counting.hpp"
#include "cy2/hearts.hpp"
#include "cy2/torsion.hpp"
#include "cy2/verify.hpp"

using namespace cy2;

namespace {

constexpr int kCases = 1000;

std::vector<CategorySpec> grid() {
  return {{Family::A, 1, 2}, {Family::A, 2, 1}, {Family::A, 2, 2}, {Family::A, 3, 2},
          {Family::D, 1, 1}, {Family::D, 1, 2}, {Family::D, 2, 1}, {Family::D, 2, 2}};
}

IndecSet random_set(const CategoryTables& tb, std::mt19937& rng) {
  const double p = std::uniform_real_distribution<double>(0.0, 0.4)(rng);
  IndecSet x(tb.size());
  for (std::size_t i = 0; i < tb.size(); ++i) {
    if (std::bernoulli_distribution(p)(rng)) x.insert(static_cast<int>(i));
  }
  return x;
}

}  // namespace

TEST_CASE("Galois connection laws on random sets") {
  std::mt19937 rng(0x6a1015);
  const auto specs = grid();
  std::vector<CategoryTables> tables;
  for (const auto& s : specs) tables.push_back(build(s));
  for (int c = 0; c < kCases; ++c) {
    const auto& tb = tables[c % tables.size()];
    const IndecSet x = random_set(tb, rng);
    const IndecSet z = x | random_set(tb, rng);
    const IndecSet r = tb.right_perp(x);
    REQUIRE(x.is_subset_of(tb.left_perp(r)));
    REQUIRE(x.is_subset_of(tb.right_perp(tb.left_perp(x))));
    REQUIRE(tb.right_perp(tb.left_perp(r)) == r);
    REQUIRE(tb.right_perp(z).is_subset_of(r));
    const long k = std::uniform_int_distribution<long>(-7, 7)(rng);
    REQUIRE(tb.right_perp(tb.shift(x, k)) == tb.shift(r, k));
    REQUIRE(tb.left_perp(tb.shift(x, k)) == tb.shift(tb.left_perp(x), k));
    // A torsion half is exactly the left perp of some set.
    REQUIRE(is_torsion_half(tb, tb.left_perp(x)));
  }
}

TEST_CASE("closure laws on random orbit sets") {
  std::mt19937 rng(0xc105e);
  const auto specs = grid();
  std::vector<CategoryTables> tables;
  for (const auto& s : specs) tables.push_back(build(s));
  for (int c = 0; c < kCases; ++c) {
    const auto& tb = tables[c % tables.size()];
    const IndecSet x = random_set(tb, rng);
    const IndecSet z = x | random_set(tb, rng);
    const IndecSet cx = tb.ptolemy_closure(x);
    REQUIRE(x.is_subset_of(cx));
    REQUIRE(tb.ptolemy_closure(cx) == cx);
    REQUIRE(cx.is_subset_of(tb.ptolemy_closure(z)));
  }
}

TEST_CASE("pair invariants over every enumerated pair") {
  for (const CategorySpec& s : grid()) {
    const auto tb = build(s);
    const auto records = enumerate_torsion_pairs(tb);
    std::set<std::pair<IndecSet, IndecSet>> pairs;
    for (const auto& r : records) pairs.insert({r.x, r.y});
    for (const auto& r : records) {
      for (int a : r.x.ids()) {
        for (int b : r.y.ids()) REQUIRE_FALSE(tb.hom(a, b));
      }
      REQUIRE(tb.left_perp(r.y) == r.x);
      REQUIRE(tb.right_perp(r.x) == r.y);
      // 2-CY rotation and shift-invariance of the set of pairs.
      REQUIRE(pairs.count({r.y, tb.shift(r.x, 2)}) == 1);
      REQUIRE(pairs.count({tb.shift(r.x, 1), tb.shift(r.y, 1)}) == 1);
      if (s.t > 1) REQUIRE(r.x_all_rigid != r.y_all_rigid);
    }
  }
}

TEST_CASE("lifts of torsion halves are periodic Ptolemy diagrams") {
  for (const CategorySpec& s : grid()) {
    const auto tb = build(s);
    for (const IndecSet& x : enumerate_halves(tb)) {
      if (s.family == Family::A) {
        const DiagonalSet u = tb.lift_a(x);
        REQUIRE(is_ptolemy(u));
        REQUIRE(is_k_periodic(u, s.period()));
      } else {
        const ArcSetD u = tb.lift_d(x);
        REQUIRE(is_ptolemy_d(u));
        REQUIRE(is_F_periodic(u, s.n, s.t));
      }
    }
  }
}

TEST_CASE("core laws") {
  for (const CategorySpec& s : grid()) {
    const auto tb = build(s);
    for (const auto& r : enumerate_torsion_pairs(tb)) {
      const HeartReport h = heart_report(r, tb);
      REQUIRE(h.core.is_subset_of(r.x));
      REQUIRE(h.core.is_subset_of(tb.shift(r.y, -1)));
      for (int a : h.core.ids()) {
        for (int b : h.core.ids()) REQUIRE_FALSE(tb.ext(a, b));
      }
      REQUIRE(r.is_t_structure == h.zero_heart());
      if (s.family == Family::A) REQUIRE(h.num_simples <= static_cast<std::size_t>(s.n));
    }
  }
}

TEST_CASE("wing members lift to Ptolemy diagrams") {
  for (const CategorySpec& s : grid()) {
    const auto tb = build(s);
    for (const auto& r : enumerate_torsion_pairs(tb)) {
      if (!r.wings) continue;
      REQUIRE(wings_separated(tb, *r.wings));
      for (const auto& c : *r.wings) {
        if (s.family == Family::A) {
          REQUIRE(is_ptolemy(tb.lift_a(c.members)));
        } else {
          REQUIRE(is_ptolemy_d(tb.lift_d(c.members)));
        }
      }
    }
  }
}

TEST_CASE("T grows and stays exact up to m = 50") {
  BigInt prev = 0;
  for (int m = 2; m <= 50; ++m) {
    const BigInt v = T(m);
    REQUIRE(v > prev);
    prev = v;
  }
  CHECK(prev > BigInt("1000000000000000000000000000000"));
  for (int m = 3; m <= 32; ++m) CHECK_NOTHROW(s(m));
}

TEST_CASE("verify output is deterministic across runs and worker counts") {
  VerifyOptions one;
  VerifyOptions many;
  many.workers = 4;
  const std::string a = format_results(run_acceptance(one), true);
  CHECK(format_results(run_acceptance(one), true) == a);
  CHECK(format_results(run_acceptance(many), true) == a);
  CHECK(a.find("FAIL") == std::string::npos);
}
