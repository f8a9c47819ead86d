// Part of the maplet project, under the Apache License v2.0.
// See https://www.apache.org/licenses/LICENSE-2.0 for license information.
// SPDX-License-Identifier: Apache-2.0

#include "maplet/hash.hpp"

#include <cstring>

#include "maplet/bit_ops.hpp"

namespace maplet {

const char* hash_kind_name(HashKind kind) {
  switch (kind) {
    case HashKind::mix64: return "mix64";
    case HashKind::identity: return "identity";
  }
  return "unknown";
}

uint64_t mix64(const void* data, size_t len, uint64_t seed) {
  // MurmurHash64A (Austin Appleby, public domain), seeded.
  const uint64_t m = 0xc6a4a7935bd1e995ull;
  const int r = 47;

  uint64_t h = seed ^ (len * m);

  const auto* p = static_cast<const unsigned char*>(data);
  const unsigned char* end = p + (len & ~size_t{7});

  while (p != end) {
    uint64_t k;
    std::memcpy(&k, p, 8);
    p += 8;

    k *= m;
    k ^= k >> r;
    k *= m;

    h ^= k;
    h *= m;
  }

  switch (len & 7) {
    case 7: h ^= uint64_t(p[6]) << 48; [[fallthrough]];
    case 6: h ^= uint64_t(p[5]) << 40; [[fallthrough]];
    case 5: h ^= uint64_t(p[4]) << 32; [[fallthrough]];
    case 4: h ^= uint64_t(p[3]) << 24; [[fallthrough]];
    case 3: h ^= uint64_t(p[2]) << 16; [[fallthrough]];
    case 2: h ^= uint64_t(p[1]) << 8; [[fallthrough]];
    case 1: h ^= uint64_t(p[0]); h *= m;
  }

  h ^= h >> r;
  h *= m;
  h ^= h >> r;

  return h;
}

uint64_t fingerprint_of(HashKind kind, std::string_view key, uint64_t seed, unsigned p_bits) {
  switch (kind) {
    case HashKind::mix64:
      return mix64(key.data(), key.size(), seed) & bits::mask_low(p_bits);
    case HashKind::identity: {
      uint64_t word = 0;
      size_t n = key.size() < 8 ? key.size() : 8;
      std::memcpy(&word, key.data(), n);  // little-endian word of the first 8 bytes
      return word & bits::mask_low(p_bits);
    }
  }
  return 0;
}

uint64_t fingerprint_of_word(HashKind kind, uint64_t word, uint64_t seed, unsigned p_bits) {
  switch (kind) {
    case HashKind::mix64: {
      unsigned char buf[8];
      std::memcpy(buf, &word, 8);
      return mix64(buf, 8, seed) & bits::mask_low(p_bits);
    }
    case HashKind::identity:
      return word & bits::mask_low(p_bits);
  }
  return 0;
}

}  // namespace maplet
