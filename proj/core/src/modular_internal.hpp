#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "chowlab/exactla.hpp"

namespace chowlab {

/// Throws NonPrime / BadRange unless p is a prime below 2^62.
void check_modulus(std::uint64_t p);

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}
std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t p);
std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p);
std::uint64_t reduce_mod(const Integer& x, std::uint64_t p);

/// Indices of a maximal set of rows that are linearly independent mod p.
std::vector<std::size_t> independent_rows_mod_p(const IntMatrix& m, std::uint64_t p);

/// Kernel of a block mod p, tagged by free column (block-local indices).
std::vector<std::pair<std::size_t, std::vector<Integer>>> block_kernel_mod_p(const IntMatrix& m,
                                                                            std::uint64_t p);

}  // namespace chowlab
