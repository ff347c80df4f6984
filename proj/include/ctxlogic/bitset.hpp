#pragma once

#include <boost/dynamic_bitset.hpp>

#include <cstddef>
#include <vector>

namespace ctxlogic {

using Bitset = boost::dynamic_bitset<>;

inline Bitset full_set(std::size_t n) {
  Bitset b(n);
  b.set();
  return b;
}

inline std::vector<std::size_t> members(const Bitset& b) {
  std::vector<std::size_t> out;
  out.reserve(b.count());
  for (auto i = b.find_first(); i != Bitset::npos; i = b.find_next(i)) out.push_back(i);
  return out;
}

// Total order used for canonical listings: smaller sets first, then
// lexicographic on the sorted member indices.
inline bool canonical_less(const Bitset& a, const Bitset& b) {
  auto ca = a.count(), cb = b.count();
  if (ca != cb) return ca < cb;
  auto i = a.find_first(), j = b.find_first();
  while (i != Bitset::npos && j != Bitset::npos) {
    if (i != j) return i < j;
    i = a.find_next(i);
    j = b.find_next(j);
  }
  return false;
}

// Bitset whose bits are the binary digits of `code` (bit i = code >> i & 1).
inline Bitset from_code(std::size_t n, unsigned long long code) {
  Bitset b(n);
  for (std::size_t i = 0; i < n && i < 64; ++i)
    if ((code >> i) & 1ULL) b.set(i);
  return b;
}

}  // namespace ctxlogic
