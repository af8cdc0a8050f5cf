#pragma once

#include <bit>
#include <cstdint>

namespace flagvar {

/// Fixed 128-bit set. Indexes sets of noncompact positive roots, which never
/// exceed 120 members (the E8 positive root count), so two words suffice.
class Bitset128 {
 public:
  static constexpr int kCapacity = 128;

  constexpr Bitset128() = default;

  static constexpr Bitset128 first_n(int n) {
    Bitset128 s;
    if (n >= 64) {
      s.w_[0] = ~0ull;
      s.w_[1] = (n >= 128) ? ~0ull : ((n == 64) ? 0ull : (~0ull >> (128 - n)));
    } else if (n > 0) {
      s.w_[0] = ~0ull >> (64 - n);
    }
    return s;
  }

  constexpr void set(int i) { w_[i >> 6] |= 1ull << (i & 63); }
  constexpr void reset(int i) { w_[i >> 6] &= ~(1ull << (i & 63)); }
  constexpr bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }

  constexpr int count() const { return std::popcount(w_[0]) + std::popcount(w_[1]); }
  constexpr bool none() const { return w_[0] == 0 && w_[1] == 0; }
  constexpr bool any() const { return !none(); }

  constexpr Bitset128& operator|=(const Bitset128& o) {
    w_[0] |= o.w_[0];
    w_[1] |= o.w_[1];
    return *this;
  }
  constexpr Bitset128& operator&=(const Bitset128& o) {
    w_[0] &= o.w_[0];
    w_[1] &= o.w_[1];
    return *this;
  }
  constexpr Bitset128& operator^=(const Bitset128& o) {
    w_[0] ^= o.w_[0];
    w_[1] ^= o.w_[1];
    return *this;
  }
  friend constexpr Bitset128 operator|(Bitset128 a, const Bitset128& b) { return a |= b; }
  friend constexpr Bitset128 operator&(Bitset128 a, const Bitset128& b) { return a &= b; }
  friend constexpr Bitset128 operator^(Bitset128 a, const Bitset128& b) { return a ^= b; }

  /// this & ~o
  constexpr Bitset128 and_not(const Bitset128& o) const {
    Bitset128 r;
    r.w_[0] = w_[0] & ~o.w_[0];
    r.w_[1] = w_[1] & ~o.w_[1];
    return r;
  }

  constexpr bool is_subset_of(const Bitset128& o) const {
    return (w_[0] & ~o.w_[0]) == 0 && (w_[1] & ~o.w_[1]) == 0;
  }

  /// Lowest set bit, or -1.
  constexpr int find_first() const {
    if (w_[0]) return std::countr_zero(w_[0]);
    if (w_[1]) return 64 + std::countr_zero(w_[1]);
    return -1;
  }

  /// Visit set bits in ascending order.
  template <class F>
  void for_each(F f) const {
    for (int word = 0; word < 2; ++word) {
      std::uint64_t t = w_[word];
      while (t) {
        f(64 * word + std::countr_zero(t));
        t &= t - 1;
      }
    }
  }

  /// Numeric order of the mask seen as a 128-bit integer: a total order
  /// used wherever a deterministic listing of root sets is needed.
  constexpr bool numeric_less(const Bitset128& o) const {
    if (w_[1] != o.w_[1]) return w_[1] < o.w_[1];
    return w_[0] < o.w_[0];
  }

  constexpr std::uint64_t word(int k) const { return w_[k]; }

  friend constexpr bool operator==(const Bitset128&, const Bitset128&) = default;

 private:
  std::uint64_t w_[2] = {0, 0};
};

}  // namespace flagvar
