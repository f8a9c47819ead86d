// Part of the maplet project, under the Apache License v2.0.
// See https://www.apache.org/licenses/LICENSE-2.0 for license information.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "maplet/filter_params.hpp"

namespace maplet {

/// A p-bit key fingerprint. The high q bits pick the home slot, the low r
/// bits are the stored remainder.
struct Fingerprint {
  uint64_t raw = 0;

  friend bool operator==(Fingerprint, Fingerprint) = default;
  friend auto operator<=>(Fingerprint a, Fingerprint b) { return a.raw <=> b.raw; }
};

/// Perfect-hashing multiset filter over fingerprints, with a v-bit payload
/// co-located in each slot.
///
/// Layout: a circular rank-and-select quotient filter. Slots live in 64-slot
/// blocks; each block carries an `occupieds` word (bit i set iff some stored
/// fingerprint has home slot 64b+i), a `runends` word (bit i set iff slot
/// 64b+i terminates a run), and a 16-bit `offset` counting how many slots at
/// the start of the block are still consumed by runs whose home slot lies
/// before the block. Remainders within a run are kept nondecreasing, and the
/// payload always travels with its remainder when runs shift.
///
/// Every stored fingerprint instance owns exactly one slot, so the structure
/// is a perfect hash over the stored multiset of fingerprints.
///
/// Concurrency: single writer; const member functions may run concurrently
/// with each other but not with a writer. Instances move freely across
/// threads.
class FilterCore {
 public:
  struct Entry {
    Fingerprint fingerprint;
    uint64_t value = 0;

    friend bool operator==(const Entry&, const Entry&) = default;
  };

  explicit FilterCore(FilterParams params);

  const FilterParams& params() const { return params_; }
  uint64_t size() const { return count_; }
  bool empty() const { return count_ == 0; }
  uint64_t capacity() const { return params_.capacity(); }
  double load_factor() const { return double(count_) / double(nslots_); }

  /// Insert one instance of fp carrying `value`. Returns the slot index the
  /// instance landed in. Throws CapacityExceeded at the alpha load cap; the
  /// caller owns the resize policy.
  uint64_t insert(Fingerprint fp, uint64_t value);

  /// All stored instances equal to fp, as (slot index, payload), in slot order.
  std::vector<std::pair<uint64_t, uint64_t>> find_all(Fingerprint fp) const;

  /// Number of stored instances equal to fp.
  uint64_t multiplicity(Fingerprint fp) const;

  /// Remove the single matching instance in the lowest slot whose payload
  /// satisfies `match`. Returns the removed payload. Throws NotFound.
  uint64_t remove_one(Fingerprint fp, const std::function<bool(uint64_t)>& match);

  /// Replace the payload of the unique instance of fp. Returns 1 if applied,
  /// 0 if fp is absent. Throws MultipleInstances if fp is stored more than
  /// once (merged-slot mode invariant breach).
  int update_in_place(Fingerprint fp, const std::function<uint64_t(uint64_t)>& transform);

  /// Visit every stored instance in ascending fingerprint order.
  void for_each(const std::function<void(Entry)>& fn) const;

  /// All stored instances, ascending by fingerprint.
  std::vector<Entry> entries() const;

  /// Same content in a filter with q+1 quotient bits and r-1 remainder bits.
  /// Fingerprints (and therefore the error rate) are unchanged. Throws
  /// RemainderExhausted at r == 1.
  FilterCore resized_double() const;

  /// Multiset union of two cores sharing p and seed. The result's q is grown
  /// until the combined count fits under alpha. Throws IncompatibleParams.
  static FilterCore merge(const FilterCore& a, const FilterCore& b);

  /// Total allocated bits: 2^q * (r + v) slot bits plus 144 bits of metadata
  /// per 64-slot block (occupieds + runends words and the 16-bit offset).
  uint64_t space_bits() const;
  static uint64_t space_bits_for(const FilterParams& p);

  /// Bits of metadata per slot in this layout (occupieds + runends + offset).
  static constexpr double kMetadataBitsPerSlot = 2.25;

  /// Full-scan structural validation: decodes every cluster independently,
  /// re-derives block offsets, and cross-checks against the rank/select
  /// accessors. Throws std::logic_error on any violation. Test support; cost
  /// is O(slots).
  void check_consistency() const;

 private:
  struct Block {
    uint64_t occupieds = 0;
    uint64_t runends = 0;
    uint16_t offset = 0;
  };

  // --- bit plumbing -------------------------------------------------------
  uint64_t quotient_of(Fingerprint fp) const { return fp.raw >> params_.remainder_bits; }
  uint64_t remainder_of(Fingerprint fp) const;
  uint64_t slot_index(uint64_t v) const { return v & (nslots_ - 1); }  // reduce virtual -> real

  bool occupied(uint64_t slot) const;
  bool runend(uint64_t slot) const;
  void set_occupied(uint64_t slot, bool on);
  void set_runend(uint64_t slot, bool on);

  uint64_t slot_remainder(uint64_t vslot) const;
  uint64_t slot_value(uint64_t vslot) const;
  void write_slot(uint64_t vslot, uint64_t remainder, uint64_t value);
  void copy_slot(uint64_t vdst, uint64_t vsrc);

  // --- rank/select navigation (virtual positions; see filter_core.cpp) ----
  unsigned pending_runs_at(uint64_t slot) const;  // 0 iff slot is free
  uint64_t run_end_virtual(uint64_t x) const;
  std::pair<uint64_t, uint64_t> run_interval(uint64_t x) const;
  uint64_t select_runend_from(uint64_t block, unsigned skip_bits, uint64_t k) const;
  uint64_t find_first_empty(uint64_t vfrom) const;
  uint64_t next_occupied(uint64_t vfrom) const;
  uint64_t next_runend(uint64_t vfrom) const;
  void bump_offsets(uint64_t x, uint64_t vlimit, int delta);

  std::vector<std::pair<uint64_t, uint64_t>> match_positions(Fingerprint fp) const;

  FilterParams params_;
  uint64_t nslots_ = 0;
  uint64_t nblocks_ = 0;
  unsigned slot_bits_ = 0;  // r + v
  std::vector<Block> blocks_;
  std::vector<uint64_t> slot_words_;
  uint64_t count_ = 0;
};

}  // namespace maplet
