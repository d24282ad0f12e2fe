#include "doctest.h"

#include <stdexcept>

#include <vector>

#include "cy2/counting.hpp"

using namespace cy2;

namespace {

std::size_t enumerated(Family f, int n, int t) {
  return enumerate_halves(build({f, n, t})).size();
}

// Oracle for s: Ptolemy diagrams of the m-gon by recursion on the subset,
// checking each crossing pair directly.
long ptolemy_by_recursion(int m) {
  const std::vector<Diagonal> diags = all_diagonals(m);
  long total = 0;
  std::vector<bool> in(diags.size(), false);
  auto ok = [&]() {
    DiagonalSet u(m);
    for (std::size_t k = 0; k < diags.size(); ++k) {
      if (in[k]) u.insert(diags[k]);
    }
    for (const Diagonal& a : u) {
      for (const Diagonal& b : u) {
        for (const Diagonal& c : ptolemy_consequences(a, b, m)) {
          if (!u.contains(c)) return false;
        }
      }
    }
    return true;
  };
  auto rec = [&](auto&& self, std::size_t k) -> void {
    if (k == diags.size()) {
      total += ok() ? 1 : 0;
      return;
    }
    self(self, k + 1);
    in[k] = true;
    self(self, k + 1);
    in[k] = false;
  };
  rec(rec, 0);
  return total;
}

}  // namespace

TEST_CASE("binomial") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(5, 0) == 1);
  CHECK(binomial(5, 6) == 0);
  CHECK(binomial(5, -1) == 0);
  CHECK(binomial(60, 30) == BigInt("118264581564861424"));
}

TEST_CASE("T values") {
  CHECK(T(2) == 6);
  CHECK(T(3) == 32);
  CHECK(T(4) == 182);
  CHECK(T(5) == 1092);
  CHECK_THROWS_AS(T(1), std::invalid_argument);
}

TEST_CASE("T against enumeration") {
  CHECK(BigInt(enumerated(Family::A, 1, 2)) == T(2));
  CHECK(BigInt(enumerated(Family::A, 2, 2)) == T(3));
  CHECK(BigInt(enumerated(Family::A, 3, 2)) == T(4));
  CHECK(BigInt(enumerated(Family::D, 2, 2)) == T(3));
}

TEST_CASE("s values") {
  const std::vector<long> expected = {1, 4, 17, 82, 422, 2274, 12665, 72326};
  for (int m = 3; m <= 10; ++m) CHECK(s(m) == expected[m - 3]);
  CHECK_THROWS_AS(s(2), std::invalid_argument);
}

TEST_CASE("count_ptolemy") {
  for (int m = 3; m <= 10; ++m) CHECK(count_ptolemy(m) == s(m));
  for (int m = 4; m <= 6; ++m) CHECK(BigInt(ptolemy_by_recursion(m)) == count_ptolemy(m));
  CHECK_THROWS_AS(count_ptolemy(2), std::invalid_argument);
  CHECK_THROWS_AS(count_ptolemy(13), std::invalid_argument);
}

TEST_CASE("t_n1") {
  CHECK(t_n1(1) == 2);
  CHECK(t_n1(2) == 12);
  CHECK(t_n1(3) == 68);
  CHECK_THROWS_AS(t_n1(0), std::invalid_argument);
}

TEST_CASE("formula by family") {
  CHECK(count_torsion_pairs_formula({Family::A, 2, 5}) == 32);
  CHECK(count_torsion_pairs_formula({Family::A, 2, 1}) == 20);
  CHECK(count_torsion_pairs_formula({Family::D, 1, 1}) == 10);
  CHECK(count_torsion_pairs_formula({Family::D, 1, 2}) == 6);
  CHECK(count_torsion_pairs_formula({Family::A, 3, 1}) == 114);
  CHECK(count_torsion_pairs_formula({Family::D, 2, 1}) == 56);
  CHECK_THROWS_AS(count_torsion_pairs_formula({Family::E, 2, 1}), std::domain_error);
  CHECK_THROWS_AS(count_torsion_pairs_formula({Family::A, 0, 1}), std::invalid_argument);
}

TEST_CASE("counts do not depend on t > 1") {
  for (int t = 2; t <= 4; ++t) CHECK(enumerated(Family::A, 1, t) == 6);
  for (int t = 2; t <= 3; ++t) CHECK(enumerated(Family::A, 2, t) == 32);
  for (int t = 2; t <= 3; ++t) CHECK(enumerated(Family::D, 1, t) == 6);
}

TEST_CASE("count report") {
  const CountReport plain = count_report({Family::A, 2, 2}, false);
  CHECK(plain.formula_value == 32);
  CHECK_FALSE(plain.enumerated_value.has_value());
  const CountReport checked = count_report({Family::D, 2, 1}, true, {2, false});
  CHECK(*checked.enumerated_value == 56);
  CHECK(*checked.agree);
}
