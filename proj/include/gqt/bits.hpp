#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace gqt {

using Word = std::uint64_t;
inline constexpr std::size_t kWordBits = 64;

inline constexpr std::size_t words_for(std::size_t nbits) {
  return (nbits + kWordBits - 1) / kWordBits;
}

inline bool test_bit(std::span<const Word> row, std::size_t i) {
  return (row[i / kWordBits] >> (i % kWordBits)) & 1u;
}

inline void set_bit(std::span<Word> row, std::size_t i) {
  row[i / kWordBits] |= Word{1} << (i % kWordBits);
}

inline void clear_bit(std::span<Word> row, std::size_t i) {
  row[i / kWordBits] &= ~(Word{1} << (i % kWordBits));
}

inline std::size_t popcount(std::span<const Word> a) {
  std::size_t c = 0;
  for (Word w : a) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

inline std::size_t popcount_and(std::span<const Word> a, std::span<const Word> b) {
  std::size_t c = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    c += static_cast<std::size_t>(std::popcount(a[i] & b[i]));
  return c;
}

inline void and_into(std::span<Word> dst, std::span<const Word> src) {
  for (std::size_t i = 0; i < dst.size(); ++i) dst[i] &= src[i];
}

inline bool any(std::span<const Word> a) {
  for (Word w : a)
    if (w) return true;
  return false;
}

// Calls f(i) for every set bit i, in increasing order.
template <typename F>
inline void for_each_bit(std::span<const Word> a, F&& f) {
  for (std::size_t wi = 0; wi < a.size(); ++wi) {
    Word w = a[wi];
    while (w) {
      const int b = std::countr_zero(w);
      f(wi * kWordBits + static_cast<std::size_t>(b));
      w &= w - 1;
    }
  }
}

inline std::vector<std::size_t> bit_indices(std::span<const Word> a) {
  std::vector<std::size_t> out;
  for_each_bit(a, [&](std::size_t i) { out.push_back(i); });
  return out;
}

}  // namespace gqt
