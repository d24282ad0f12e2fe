#pragma once

#include <optional>

#include <boost/multiprecision/cpp_int.hpp>

#include "cy2/category.hpp"
#include "cy2/torsion.hpp"

namespace cy2 {

using BigInt = boost::multiprecision::cpp_int;

BigInt binomial(int n, int k);

/// Torsion pairs in the cluster tube of rank m (m = n+1 >= 2):
///   sum_{l>=0} 2^{l+1} C(n+l, l) C(2n+1, n-2l).
BigInt T(int m);

/// Ptolemy diagrams of the m-gon (m = n+2 >= 3):
///   1/(n+1) sum_{l>=0} 2^l C(n+l, l) C(2n, n-2l).
/// Throws std::logic_error if the sum is not divisible by n+1.
BigInt s(int m);

/// (n+1) s(n+2).
BigInt t_n1(int n);

/// T(n+1) for A with t > 1 and D with t > 1; T(n+1) - t_n1(n) for A_{n,1};
/// T(n+1) + 2 t_n1(n) for D_{n,1}. Family E throws std::domain_error.
BigInt count_torsion_pairs_formula(const CategorySpec& spec);

/// Exhaustive count of Ptolemy diagrams of the m-gon, 3 <= m <= 12.
BigInt count_ptolemy(int m);

struct CountReport {
  CategorySpec spec;
  BigInt formula_value;
  std::optional<BigInt> enumerated_value;
  std::optional<bool> agree;
};

CountReport count_report(const CategorySpec& spec, bool verify,
                         const EnumerateOptions& opts = {});

}  // namespace cy2
