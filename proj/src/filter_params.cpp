// Part of the maplet project, under the Apache License v2.0.
// See https://www.apache.org/licenses/LICENSE-2.0 for license information.
// SPDX-License-Identifier: Apache-2.0

#include "maplet/filter_params.hpp"

#include <cmath>

namespace maplet {

namespace {

unsigned ceil_log2(double x) {
  unsigned p = x <= 1.0 ? 0 : static_cast<unsigned>(std::ceil(std::log2(x)));
  while (p < 64 && std::ldexp(1.0, int(p)) < x) ++p;
  while (p > 0 && std::ldexp(1.0, int(p) - 1) >= x) --p;
  return p;
}

uint16_t quantize_alpha(double alpha) {
  if (!(alpha > 0.0 && alpha <= 0.99))
    raise(Errc::domain_error, "load factor must be in (0, 0.99]");
  double q = std::round(alpha * 65536.0);
  return static_cast<uint16_t>(q < 1.0 ? 1.0 : q);
}

}  // namespace

void FilterParams::validate() const {
  if (quotient_bits < 6) raise(Errc::domain_error, "quotient_bits must be >= 6");
  if (remainder_bits < 1 || remainder_bits > 56)
    raise(Errc::domain_error, "remainder_bits must be in 1..56");
  if (fingerprint_bits() > 64) raise(Errc::domain_error, "fingerprint wider than 64 bits");
  if (value_bits > 64) raise(Errc::domain_error, "value_bits must be <= 64");
  if (load_q16 == 0) raise(Errc::domain_error, "load factor must be positive");
}

FilterParams FilterParams::from_capacity(uint64_t n_max, double epsilon, uint8_t value_bits,
                                         uint64_t seed, double alpha) {
  if (!(epsilon > 0.0 && epsilon < 1.0)) raise(Errc::domain_error, "epsilon must be in (0, 1)");
  uint64_t n = n_max ? n_max : 1;

  unsigned p = ceil_log2(double(n) / epsilon);
  unsigned q = ceil_log2(double(n) / alpha);
  if (q < 6) q = 6;
  if (p <= q) p = q + 1;  // keep r >= 1; the effective epsilon only shrinks
  unsigned r = p - q;
  if (r > 56) raise(Errc::domain_error, "epsilon too small: remainder exceeds 56 bits");

  FilterParams out;
  out.quotient_bits = static_cast<uint8_t>(q);
  out.remainder_bits = static_cast<uint8_t>(r);
  out.value_bits = value_bits;
  out.load_q16 = quantize_alpha(alpha);
  out.seed = seed;
  out.validate();
  return out;
}

FilterParams FilterParams::exact(unsigned p_bits, uint64_t n_max, uint8_t value_bits,
                                 uint64_t seed, double alpha) {
  uint64_t n = n_max ? n_max : 1;
  unsigned q = ceil_log2(double(n) / alpha);
  if (q < 6) q = 6;
  if (p_bits < q + 1)
    raise(Errc::domain_error, "fingerprint too narrow for requested capacity");

  FilterParams out;
  out.quotient_bits = static_cast<uint8_t>(q);
  out.remainder_bits = static_cast<uint8_t>(p_bits - q);
  out.value_bits = value_bits;
  out.load_q16 = quantize_alpha(alpha);
  out.seed = seed;
  out.validate();
  return out;
}

}  // namespace maplet
