#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace cy2 {

/// A subcategory, recorded as the set of indecomposables it contains.
/// Bit k stands for the indecomposable with id k.
class IndecSet {
 public:
  using Bits = boost::dynamic_bitset<std::uint64_t>;

  IndecSet() = default;
  explicit IndecSet(std::size_t universe) : bits_(universe) {}
  IndecSet(std::size_t universe, std::initializer_list<int> ids);

  static IndecSet full(std::size_t universe);
  static IndecSet from_ids(std::size_t universe, const std::vector<int>& ids);

  std::size_t universe() const { return bits_.size(); }
  std::size_t count() const { return bits_.count(); }
  bool empty() const { return bits_.none(); }
  bool contains(int id) const { return bits_.test(static_cast<std::size_t>(id)); }
  void insert(int id) { bits_.set(static_cast<std::size_t>(id)); }
  void erase(int id) { bits_.reset(static_cast<std::size_t>(id)); }

  bool is_subset_of(const IndecSet& other) const { return bits_.is_subset_of(other.bits_); }
  bool intersects(const IndecSet& other) const { return bits_.intersects(other.bits_); }

  std::vector<int> ids() const;

  IndecSet& operator|=(const IndecSet& o) { bits_ |= o.bits_; return *this; }
  IndecSet& operator&=(const IndecSet& o) { bits_ &= o.bits_; return *this; }
  IndecSet& operator-=(const IndecSet& o) { bits_ -= o.bits_; return *this; }
  friend IndecSet operator|(IndecSet a, const IndecSet& b) { return a |= b; }
  friend IndecSet operator&(IndecSet a, const IndecSet& b) { return a &= b; }
  friend IndecSet operator-(IndecSet a, const IndecSet& b) { return a -= b; }
  IndecSet complement() const;

  friend bool operator==(const IndecSet& a, const IndecSet& b) { return a.bits_ == b.bits_; }
  friend bool operator!=(const IndecSet& a, const IndecSet& b) { return !(a == b); }

  /// Orders sets by the integer value of their bitmask (bit k weighs 2^k).
  friend bool operator<(const IndecSet& a, const IndecSet& b);

  /// Bit string with bit 0 first, e.g. "0110".
  std::string bitstring() const;

  const Bits& bits() const { return bits_; }

 private:
  Bits bits_;
};

}  // namespace cy2
