#pragma once

#include <cstdint>

namespace folkman::gf8 {

// Elements are polynomials over GF(2) in bits 0..2, reduced by x^3 + x + 1.
inline constexpr std::uint8_t kModulus = 0b1011;

constexpr std::uint8_t add(std::uint8_t a, std::uint8_t b) { return a ^ b; }

constexpr std::uint8_t mul(std::uint8_t a, std::uint8_t b) {
  unsigned r = 0;
  for (int i = 0; i < 3; ++i)
    if ((b >> i) & 1U) r ^= static_cast<unsigned>(a) << i;
  for (int d = 4; d >= 3; --d)
    if ((r >> d) & 1U) r ^= static_cast<unsigned>(kModulus) << (d - 3);
  return static_cast<std::uint8_t>(r);
}

constexpr std::uint8_t inverse(std::uint8_t a) {
  for (std::uint8_t b = 1; b < 8; ++b)
    if (mul(a, b) == 1) return b;
  return 0;
}

}  // namespace folkman::gf8
