#include "cy2/counting.hpp"

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "cy2/geometry_a.hpp"

namespace cy2 {

namespace {

// Diagonals of the m-gon with pairwise Ptolemy requirements as bitmasks.
struct PtolemyMasks {
  int count = 0;
  std::vector<std::uint64_t> crossing;              // crossing[a]: diagonals crossing a
  std::vector<std::vector<std::uint64_t>> forced;   // forced[a][b]: consequences of a x b
};

PtolemyMasks ptolemy_masks(int m) {
  const std::vector<Diagonal> diags = all_diagonals(m);
  PtolemyMasks pm;
  pm.count = static_cast<int>(diags.size());
  pm.crossing.assign(diags.size(), 0);
  pm.forced.assign(diags.size(), std::vector<std::uint64_t>(diags.size(), 0));
  auto index_of = [&](const Diagonal& d) {
    for (std::size_t k = 0; k < diags.size(); ++k) {
      if (diags[k] == d) return k;
    }
    throw std::logic_error("diagonal index lookup failed");
  };
  for (std::size_t a = 0; a < diags.size(); ++a) {
    for (std::size_t b = 0; b < diags.size(); ++b) {
      if (!cross(diags[a], diags[b], m)) continue;
      pm.crossing[a] |= std::uint64_t{1} << b;
      for (const Diagonal& c : ptolemy_consequences(diags[a], diags[b], m)) {
        pm.forced[a][b] |= std::uint64_t{1} << index_of(c);
      }
    }
  }
  return pm;
}

bool mask_is_ptolemy(const PtolemyMasks& pm, std::uint64_t set) {
  for (std::uint64_t rest = set; rest != 0; rest &= rest - 1) {
    const int a = std::countr_zero(rest);
    for (std::uint64_t other = pm.crossing[a] & set; other != 0; other &= other - 1) {
      const int b = std::countr_zero(other);
      if ((pm.forced[a][b] & ~set) != 0) return false;
    }
  }
  return true;
}

std::uint64_t mask_closure(const PtolemyMasks& pm, std::uint64_t set) {
  for (;;) {
    std::uint64_t grown = set;
    for (std::uint64_t rest = set; rest != 0; rest &= rest - 1) {
      const int a = std::countr_zero(rest);
      for (std::uint64_t other = pm.crossing[a] & set; other != 0; other &= other - 1) {
        grown |= pm.forced[a][std::countr_zero(other)];
      }
    }
    if (grown == set) return set;
    set = grown;
  }
}

void count_closed(const PtolemyMasks& pm, std::uint64_t closed, int from, BigInt& total) {
  ++total;
  for (int i = from; i < pm.count; ++i) {
    const std::uint64_t bit = std::uint64_t{1} << i;
    if (closed & bit) continue;
    const std::uint64_t grown = mask_closure(pm, closed | bit);
    if (((grown & ~closed) & (bit - 1)) != 0) continue;
    count_closed(pm, grown, i + 1, total);
  }
}

}  // namespace

BigInt binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  BigInt r = 1;
  for (int i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

BigInt T(int m) {
  if (m < 2) throw std::invalid_argument("T(m) needs m >= 2, got " + std::to_string(m));
  const int n = m - 1;
  BigInt sum = 0;
  for (int l = 0; 2 * l <= n; ++l) {
    sum += (BigInt(1) << (l + 1)) * binomial(n + l, l) * binomial(2 * n + 1, n - 2 * l);
  }
  return sum;
}

BigInt s(int m) {
  if (m < 3) throw std::invalid_argument("s(m) needs m >= 3, got " + std::to_string(m));
  const int n = m - 2;
  BigInt sum = 0;
  for (int l = 0; 2 * l <= n; ++l) {
    sum += (BigInt(1) << l) * binomial(n + l, l) * binomial(2 * n, n - 2 * l);
  }
  if (sum % (n + 1) != 0) {
    throw std::logic_error("s(" + std::to_string(m) + "): sum not divisible by " +
                           std::to_string(n + 1));
  }
  return sum / (n + 1);
}

BigInt t_n1(int n) {
  if (n < 1) throw std::invalid_argument("t_n1 needs n >= 1");
  return (n + 1) * s(n + 2);
}

BigInt count_torsion_pairs_formula(const CategorySpec& spec) {
  spec.validate();
  const BigInt tube = T(spec.n + 1);
  if (spec.t > 1) return tube;
  if (spec.family == Family::A) return tube - t_n1(spec.n);
  return tube + 2 * t_n1(spec.n);
}

BigInt count_ptolemy(int m) {
  if (m < 3 || m > 12) {
    throw std::invalid_argument("count_ptolemy supports 3 <= m <= 12, got " + std::to_string(m));
  }
  if (m == 3) return 1;
  const PtolemyMasks pm = ptolemy_masks(m);
  BigInt total = 0;
  if (pm.count <= 20) {
    const std::uint64_t limit = std::uint64_t{1} << pm.count;
    for (std::uint64_t set = 0; set < limit; ++set) {
      if (mask_is_ptolemy(pm, set)) ++total;
    }
    return total;
  }
  count_closed(pm, 0, 0, total);
  return total;
}

CountReport count_report(const CategorySpec& spec, bool verify, const EnumerateOptions& opts) {
  CountReport r{spec, count_torsion_pairs_formula(spec), std::nullopt, std::nullopt};
  if (verify) {
    const CategoryTables tables = CategoryTables::build(spec);
    r.enumerated_value = BigInt(enumerate_halves(tables, opts).size());
    r.agree = *r.enumerated_value == r.formula_value;
  }
  return r;
}

}  // namespace cy2
