#include "ldic/fq_linalg.hpp"

#include <algorithm>
#include <bit>

namespace ldic::gf2 {

std::size_t rank_packed(std::vector<std::uint64_t> rows) {
  PackedBasis basis;
  for (std::uint64_t r : rows) {
    basis.insert(r);
  }
  return basis.dimension();
}

std::size_t rank_packed_wide(std::vector<std::uint64_t> bits, std::size_t rows, std::size_t words) {
  std::size_t rank = 0;
  for (std::size_t w = 0; w < words && rank < rows; ++w) {
    for (int b = 0; b < 64 && rank < rows; ++b) {
      const std::uint64_t mask = std::uint64_t{1} << b;
      std::size_t pivot = rank;
      while (pivot < rows && (bits[pivot * words + w] & mask) == 0) {
        ++pivot;
      }
      if (pivot == rows) {
        continue;
      }
      if (pivot != rank) {
        std::swap_ranges(bits.begin() + static_cast<std::ptrdiff_t>(pivot * words),
                         bits.begin() + static_cast<std::ptrdiff_t>((pivot + 1) * words),
                         bits.begin() + static_cast<std::ptrdiff_t>(rank * words));
      }
      const std::uint64_t* prow = bits.data() + rank * words;
      for (std::size_t r = rank + 1; r < rows; ++r) {
        std::uint64_t* row = bits.data() + r * words;
        if (row[w] & mask) {
          for (std::size_t k = w; k < words; ++k) {
            row[k] ^= prow[k];
          }
        }
      }
      ++rank;
    }
  }
  return rank;
}

std::uint64_t PackedBasis::reduce(std::uint64_t v) const noexcept {
  while (v != 0) {
    const int top = 63 - std::countl_zero(v);
    const std::uint64_t row = by_pivot_[top];
    if (row == 0) {
      return v;
    }
    v ^= row;
  }
  return 0;
}

bool PackedBasis::insert(std::uint64_t v) {
  v = reduce(v);
  if (v == 0) {
    return false;
  }
  by_pivot_[63 - std::countl_zero(v)] = v;
  ++count_;
  return true;
}

} // namespace ldic::gf2
