// Part of the maplet project, under the Apache License v2.0.
// See https://www.apache.org/licenses/LICENSE-2.0 for license information.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace maplet {

enum class Errc {
  capacity_exceeded,    // insert would push load factor past alpha; caller must resize
  remainder_exhausted,  // r == 1, cannot move another bit from remainder to quotient
  not_found,            // no stored instance matches
  multiple_instances,   // merged-slot invariant breach: fingerprint stored more than once
  incompatible_params,  // merge/apply across maplets with different p, seed, operator or mode
  unsupported_delete,   // merged-slot deletion without a group inverse
  underflow,            // group inverse would leave the codec domain (e.g. negative count)
  value_overflow,       // checked combine exceeded the v-bit domain
  domain_error,         // value outside codec domain (count >= 2^v, id >= w, bad parameter)
  format_error,         // bad magic / version / checksum in a serialized maplet
  truncated_stream,     // serialized maplet ends early
  parse_error,          // malformed sequence input
  too_many_experiments, // color index: more input files than bitset width
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace maplet
