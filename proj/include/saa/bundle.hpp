#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace saa {

/// A set of goods as a bitmask; bit m is good m (0-based internally, 1-based
/// in every serialized form).
using Bundle = std::uint32_t;

inline constexpr int kMaxGoods = 16;
inline constexpr Bundle kEmptyBundle = 0;

constexpr Bundle good_bit(int good) { return Bundle{1} << good; }
constexpr bool contains(Bundle b, int good) { return (b >> good) & 1u; }
constexpr int cardinality(Bundle b) { return std::popcount(b); }
constexpr Bundle all_goods(int num_goods) {
  return num_goods >= 32 ? ~Bundle{0} : (Bundle{1} << num_goods) - 1;
}
constexpr bool is_subset(Bundle sub, Bundle super) { return (sub & ~super) == 0; }

/// True if `a` comes before `b` when both are written as sorted index lists.
constexpr bool lex_less(Bundle a, Bundle b) {
  const Bundle diff = a ^ b;
  if (diff == 0) return false;
  return (a & (diff & (~diff + 1))) != 0;
}

inline Bundle make_bundle(std::initializer_list<int> goods) {
  Bundle b = 0;
  for (int g : goods) b |= good_bit(g);
  return b;
}

inline std::vector<int> goods_of(Bundle b) {
  std::vector<int> out;
  for (int g = 0; b != 0; ++g, b >>= 1)
    if (b & 1u) out.push_back(g);
  return out;
}

}  // namespace saa
