#ifndef RLBWT_ORACLE_HPP_
#define RLBWT_ORACLE_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "rlbwt/errors.hpp"
#include "rlbwt/types.hpp"

namespace rlbwt::oracle {

// Brute-force reference implementations. Everything here is a plain scan
// or a comparison sort over flat sequences; nothing shares code with the
// tree-based structures it is used to check.

// BWT of (s + sentinel), via suffix sorting.
std::vector<symbol_t> bwt_naive(std::span<const uint8_t> s);

// Recovers s from bwt_naive(s).
std::vector<uint8_t> invert_bwt_naive(std::span<const symbol_t> bwt);

std::vector<run> rle_naive(std::span<const symbol_t> x);

uint64_t rank_naive(std::span<const symbol_t> x, symbol_t c, uint64_t i);
uint64_t select_naive(std::span<const symbol_t> x, symbol_t c, uint64_t j);
symbol_t access_naive(std::span<const symbol_t> x, uint64_t i);
uint64_t occ_less_naive(std::span<const symbol_t> x, symbol_t c);

// Positional mirror for order_list: ids kept in a flat sequence, all
// operations linear-time.
class reference_order_list {
 public:
  uint64_t insert_after(std::optional<uint64_t> anchor);
  void erase(uint64_t id);
  bool precedes(uint64_t a, uint64_t b) const;
  size_t size() const noexcept { return ids_.size(); }
  const std::vector<uint64_t>& items() const noexcept { return ids_; }

 private:
  size_t position_of(uint64_t id) const;

  std::vector<uint64_t> ids_;
  uint64_t next_id_ = 1;
};

}  // namespace rlbwt::oracle

#endif  // RLBWT_ORACLE_HPP_
