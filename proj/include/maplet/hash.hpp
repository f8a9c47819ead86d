// Part of the maplet project, under the Apache License v2.0.
// See https://www.apache.org/licenses/LICENSE-2.0 for license information.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace maplet {

/// Hash family used to derive fingerprints from keys. The id is recorded in
/// the serialization header so a file is only ever read back with the hash
/// it was written with.
enum class HashKind : uint8_t {
  mix64 = 1,     // seeded 64-bit mixing hash over the key bytes
  identity = 2,  // low p bits of the key word itself (exact-map mode)
};

const char* hash_kind_name(HashKind kind);

/// Seeded MurmurHash64A-style mix over an arbitrary byte string.
uint64_t mix64(const void* data, size_t len, uint64_t seed);

/// p-bit fingerprint of a byte-string key.
uint64_t fingerprint_of(HashKind kind, std::string_view key, uint64_t seed, unsigned p_bits);

/// p-bit fingerprint of a 64-bit word key. Equivalent to hashing the word's
/// 8 little-endian bytes, so word and byte-string callers agree.
uint64_t fingerprint_of_word(HashKind kind, uint64_t word, uint64_t seed, unsigned p_bits);

}  // namespace maplet
