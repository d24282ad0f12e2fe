#include "doctest.h"

#include <stdexcept>

#include <algorithm>
#include <random>
#include <set>

#include "cy2/torsion.hpp"
#include "cy2/verify.hpp"

using namespace cy2;

namespace {

CategorySpec A(int n, int t) { return {Family::A, n, t}; }
CategorySpec D(int n, int t) { return {Family::D, n, t}; }

// Oracle: perps straight from the Hom relation, no table rows.
std::vector<int> naive_right(const CategoryTables& tb, const std::vector<int>& x) {
  std::vector<int> out;
  for (std::size_t m = 0; m < tb.size(); ++m) {
    bool ok = true;
    for (int a : x) ok = ok && !tb.hom(a, static_cast<int>(m));
    if (ok) out.push_back(static_cast<int>(m));
  }
  return out;
}

std::vector<int> naive_left(const CategoryTables& tb, const std::vector<int>& y) {
  std::vector<int> out;
  for (std::size_t m = 0; m < tb.size(); ++m) {
    bool ok = true;
    for (int b : y) ok = ok && !tb.hom(static_cast<int>(m), b);
    if (ok) out.push_back(static_cast<int>(m));
  }
  return out;
}

std::size_t naive_count(const CategoryTables& tb) {
  const std::size_t k = tb.size();
  std::size_t total = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
    std::vector<int> x;
    for (std::size_t i = 0; i < k; ++i) {
      if (mask >> i & 1) x.push_back(static_cast<int>(i));
    }
    if (naive_left(tb, naive_right(tb, x)) == x) ++total;
  }
  return total;
}

}  // namespace

TEST_CASE("torsion half examples") {
  const auto tb = build(A(2, 2));
  CHECK(is_torsion_half(tb, tb.empty_set()));
  CHECK(is_torsion_half(tb, tb.full_set()));
  CHECK(is_torsion_half(tb, fixture_set(tb, {"(1,3)", "(1,4)"})));
  CHECK_FALSE(is_torsion_half(tb, fixture_set(tb, {"(1,3)", "(2,4)"})));
  const auto r = make_record(tb, fixture_set(tb, {"(1,3)"}));
  CHECK(r.y == tb.right_perp(r.x));
  CHECK(r.core == (r.x & tb.shift(r.y, -1)));
  CHECK(r.x_all_rigid);
  CHECK_FALSE(r.y_all_rigid);
  CHECK_FALSE(r.d1_case.has_value());
  REQUIRE(r.wings.has_value());
  CHECK(r.wings->size() == 1);
}

TEST_CASE("counts against a naive subset search") {
  for (const CategorySpec& s : {A(1, 1), A(1, 2), A(2, 1), D(1, 1), A(1, 3)}) {
    const auto tb = build(s);
    CHECK(enumerate_halves(tb).size() == naive_count(tb));
  }
}

TEST_CASE("known counts") {
  CHECK(enumerate_halves(build(A(2, 2))).size() == 32);
  CHECK(enumerate_halves(build(A(2, 1))).size() == 20);
  CHECK(enumerate_halves(build(D(1, 2))).size() == 6);
  CHECK(enumerate_halves(build(D(1, 1))).size() == 10);
  CHECK(enumerate_halves(build(A(3, 2))).size() == 182);
  CHECK(enumerate_halves(build(D(2, 1))).size() == 56);
  CHECK(enumerate_halves(build(D(2, 2))).size() == 32);
  CHECK(enumerate_halves(build(A(3, 1))).size() == 114);
}

TEST_CASE("worker count does not change the result") {
  for (const CategorySpec& s : {A(2, 2), D(2, 1), A(3, 1)}) {
    const auto tb = build(s);
    const auto one = enumerate_halves(tb, {1, false});
    CHECK(enumerate_halves(tb, {4, false}) == one);
    CHECK(enumerate_halves(tb, {7, false}) == one);
    CHECK(std::is_sorted(one.begin(), one.end()));
  }
}

TEST_CASE("brute force limit") {
  CHECK_THROWS(enumerate_halves_brute_force(build(A(3, 2))));
  const auto tb = build(D(1, 2));
  CHECK(enumerate_halves(tb, {1, true}) == enumerate_halves(tb));
}

TEST_CASE("every record is consistent") {
  for (const CategorySpec& s : {A(2, 2), D(1, 1), D(2, 2)}) {
    const auto tb = build(s);
    for (const auto& r : enumerate_torsion_pairs(tb)) {
      CHECK(tb.left_perp(r.y) == r.x);
      CHECK(r.is_t_structure == r.core.empty());
      CHECK(r.wings.has_value() == r.x_all_rigid);
      CHECK(r.d1_case.has_value() == (s.family == Family::D && s.t == 1));
    }
  }
}

TEST_CASE("two t-structures") {
  for (const CategorySpec& s : {A(1, 1), A(2, 2), A(3, 1), D(1, 1), D(2, 2)}) {
    const auto tb = build(s);
    const auto ts = check_t_structures(tb);
    REQUIRE(ts.size() == 2);
    std::set<IndecSet> xs{ts[0].x, ts[1].x};
    CHECK(xs == std::set<IndecSet>{tb.empty_set(), tb.full_set()});
  }
}

TEST_CASE("classify D_{1,1}") {
  const auto tb = build(D(1, 1));
  CHECK(classify_d1(tb, make_record(tb, fixture_set(tb, {"(1,3)", "(1,5+)"}))) ==
        D1Case::split_diameters);
  CHECK(classify_d1(tb, make_record(tb, fixture_set(tb, {"(1,3)"}))) ==
        D1Case::paired_diameter_in_y);
  CHECK(classify_d1(tb, make_record(tb, tb.left_perp(fixture_set(tb, {"(1,3)"})))) ==
        D1Case::paired_diameter_in_x);
  CHECK(classify_d1(tb, make_record(tb, tb.empty_set())) == D1Case::paired_diameter_in_y);
  const auto d12 = build(D(1, 2));
  CHECK_THROWS_AS(classify_d1(d12, make_record(d12, d12.empty_set())), std::domain_error);
  CHECK(parse_d1_case(to_string(D1Case::split_diameters)) == D1Case::split_diameters);
  CHECK_THROWS_AS(parse_d1_case("both"), std::invalid_argument);
}

TEST_CASE("D_{n,1} case counts") {
  // Oracle for the split case: one diameter on each side, so the pair count
  // is 2 t_n1(n) = 2 (n+1) s(n+2); that is 4 for n = 1.
  const auto tb = build(D(1, 1));
  int split = 0;
  for (const auto& r : enumerate_torsion_pairs(tb)) {
    split += *r.d1_case == D1Case::split_diameters ? 1 : 0;
  }
  CHECK(split == 4);
}

TEST_CASE("wings") {
  const auto tb = build(A(2, 2));
  for (const WingFixture& f : fixture_a22_wings()) {
    const IndecSet x = fixture_set(tb, f.x);
    const WingDecomposition w = wing_decomposition(tb, x);
    CHECK(wings_separated(tb, w));
    IndecSet all = tb.empty_set();
    for (const auto& c : w) {
      CHECK(c.members.is_subset_of(wing(tb, c.apex)));
      CHECK(c.members.contains(c.apex));
      CHECK_FALSE(all.intersects(c.members));
      all |= c.members;
    }
    CHECK(all == x);
  }
  CHECK_THROWS_AS(wing_decomposition(tb, tb.full_set()), std::invalid_argument);
  CHECK_THROWS_AS(wing_decomposition(tb, fixture_set(tb, {"(1,3)", "(2,4)"})),
                  std::invalid_argument);
}

TEST_CASE("wing of an apex") {
  const auto tb = build(A(2, 2));
  const int apex = fixture_set(tb, {"(1,4)"}).ids().front();
  CHECK(wing(tb, apex) == fixture_set(tb, {"(1,3)", "(1,4)", "(2,4)"}));
}
