// Part of the maplet project, under the Apache License v2.0.
// See https://www.apache.org/licenses/LICENSE-2.0 for license information.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <span>

#if defined(__BMI2__)
#include <immintrin.h>
#endif

namespace maplet::bits {

/// All-ones mask over the low `n` bits, n in [0, 64].
constexpr uint64_t mask_low(unsigned n) {
  return n >= 64 ? ~uint64_t{0} : (uint64_t{1} << n) - 1;
}

/// Number of set bits in w at positions [0, pos], pos in [0, 63].
inline unsigned rank64(uint64_t w, unsigned pos) {
  assert(pos < 64);
  return static_cast<unsigned>(std::popcount(w & mask_low(pos + 1)));
}

/// Position of the k-th (0-based) set bit of w, or 64 if w has <= k set bits.
inline unsigned select64(uint64_t w, unsigned k) {
#if defined(__BMI2__)
  uint64_t hit = _pdep_u64(uint64_t{1} << k, w);
  return hit ? static_cast<unsigned>(std::countr_zero(hit)) : 64u;
#else
  for (unsigned byte = 0; byte < 8; ++byte) {
    unsigned c = static_cast<unsigned>(std::popcount(w & 0xffu));
    if (k < c) {
      uint64_t b = w & 0xffu;
      for (unsigned bit = 0;; ++bit) {
        if (b & 1u) {
          if (k == 0) return byte * 8 + bit;
          --k;
        }
        b >>= 1;
      }
    }
    k -= c;
    w >>= 8;
  }
  return 64;
#endif
}

/// Read `width` (<= 64) bits starting at absolute bit offset `off` from a packed word array.
inline uint64_t read_bits(std::span<const uint64_t> words, uint64_t off, unsigned width) {
  assert(width <= 64);
  if (width == 0) return 0;
  uint64_t word = off >> 6;
  unsigned shift = static_cast<unsigned>(off & 63);
  uint64_t out = words[word] >> shift;
  if (shift + width > 64) out |= words[word + 1] << (64 - shift);
  return out & mask_low(width);
}

/// Write the low `width` (<= 64) bits of `value` at absolute bit offset `off`.
inline void write_bits(std::span<uint64_t> words, uint64_t off, unsigned width, uint64_t value) {
  assert(width <= 64);
  if (width == 0) return;
  value &= mask_low(width);
  uint64_t word = off >> 6;
  unsigned shift = static_cast<unsigned>(off & 63);
  words[word] = (words[word] & ~(mask_low(width) << shift)) | (value << shift);
  if (shift + width > 64) {
    unsigned spill = shift + width - 64;
    words[word + 1] = (words[word + 1] & ~mask_low(spill)) | (value >> (64 - shift));
  }
}

}  // namespace maplet::bits
