#include "cy2/indec_set.hpp"

#include <iterator>

namespace cy2 {

IndecSet::IndecSet(std::size_t universe, std::initializer_list<int> ids) : bits_(universe) {
  for (int id : ids) insert(id);
}

IndecSet IndecSet::full(std::size_t universe) {
  IndecSet s(universe);
  s.bits_.set();
  return s;
}

IndecSet IndecSet::from_ids(std::size_t universe, const std::vector<int>& ids) {
  IndecSet s(universe);
  for (int id : ids) s.insert(id);
  return s;
}

std::vector<int> IndecSet::ids() const {
  std::vector<int> out;
  out.reserve(bits_.count());
  for (auto k = bits_.find_first(); k != Bits::npos; k = bits_.find_next(k)) {
    out.push_back(static_cast<int>(k));
  }
  return out;
}

IndecSet IndecSet::complement() const {
  IndecSet s = *this;
  s.bits_.flip();
  return s;
}

bool operator<(const IndecSet& a, const IndecSet& b) {
  std::vector<std::uint64_t> x;
  std::vector<std::uint64_t> y;
  boost::to_block_range(a.bits_, std::back_inserter(x));
  boost::to_block_range(b.bits_, std::back_inserter(y));
  if (x.size() != y.size()) return x.size() < y.size();
  for (std::size_t i = x.size(); i-- > 0;) {
    if (x[i] != y[i]) return x[i] < y[i];
  }
  return false;
}

std::string IndecSet::bitstring() const {
  std::string s(bits_.size(), '0');
  for (std::size_t k = 0; k < bits_.size(); ++k) {
    if (bits_.test(k)) s[k] = '1';
  }
  return s;
}

}  // namespace cy2
