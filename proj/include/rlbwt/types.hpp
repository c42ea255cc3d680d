#ifndef RLBWT_TYPES_HPP_
#define RLBWT_TYPES_HPP_

#include <cstdint>

namespace rlbwt {

// Symbol codes: 0 is the sentinel and sorts below everything else,
// input bytes are shifted up by one so that 0x00 stays representable.
using symbol_t = uint16_t;

inline constexpr symbol_t k_sentinel = 0;
inline constexpr symbol_t k_max_symbol = 256;
inline constexpr uint16_t k_no_symbol = 0xFFFF;

constexpr symbol_t code_of(uint8_t byte) noexcept {
  return static_cast<symbol_t>(static_cast<symbol_t>(byte) + 1);
}

constexpr uint8_t byte_of(symbol_t code) noexcept {
  return static_cast<uint8_t>(code - 1);
}

// One maximal run of a single symbol.
struct run {
  symbol_t head = 0;
  uint64_t exponent = 0;

  friend bool operator==(const run&, const run&) = default;
};

}  // namespace rlbwt

#endif  // RLBWT_TYPES_HPP_
