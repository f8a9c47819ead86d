// Part of the maplet project, under the Apache License v2.0.
// See https://www.apache.org/licenses/LICENSE-2.0 for license information.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>

#include "maplet/error.hpp"

namespace maplet {

/// Geometry of a filter core: 2^q slots, r remainder bits and v value bits per
/// slot, fingerprints of p = q + r bits. The load cap alpha is held as a
/// 16.16-style fixed-point fraction so that serialization round-trips exactly.
struct FilterParams {
  uint8_t quotient_bits = 6;    // q, >= 6 so a filter spans at least one 64-slot block
  uint8_t remainder_bits = 8;   // r, 1..56
  uint8_t value_bits = 0;       // v, 0..64
  uint16_t load_q16 = kDefaultLoadQ16;  // alpha in units of 1/65536
  uint64_t seed = kDefaultSeed;

  static constexpr uint16_t kDefaultLoadQ16 = 62259;  // 0.95 rounded to q16
  static constexpr uint64_t kDefaultSeed = 0x9ae16a3b2f90404full;

  unsigned fingerprint_bits() const { return unsigned(quotient_bits) + remainder_bits; }
  uint64_t slots() const { return uint64_t{1} << quotient_bits; }
  double alpha() const { return load_q16 / 65536.0; }

  /// Maximum stored instances before insert reports CapacityExceeded.
  uint64_t capacity() const { return (slots() * load_q16) >> 16; }

  /// Collision rate bound when filled to capacity: n_cap / 2^p.
  double epsilon_at_capacity() const {
    return double(capacity()) / double(uint64_t{1} << fingerprint_bits());
  }

  void validate() const;

  /// Derive geometry from a target capacity and error rate:
  /// p = ceil(log2(n_max / eps)), q = ceil(log2(n_max / alpha)), r = p - q.
  static FilterParams from_capacity(uint64_t n_max, double epsilon, uint8_t value_bits,
                                    uint64_t seed = kDefaultSeed, double alpha = 0.95);

  /// Geometry for an exact map over p-bit full-key fingerprints: q is sized
  /// from capacity, r takes whatever p leaves over.
  static FilterParams exact(unsigned p_bits, uint64_t n_max, uint8_t value_bits,
                            uint64_t seed = kDefaultSeed, double alpha = 0.95);

  bool operator==(const FilterParams&) const = default;
};

}  // namespace maplet
