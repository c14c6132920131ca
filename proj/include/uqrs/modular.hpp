/**
 * @file modular.hpp
 * @brief 64-bit modular arithmetic used for fast probabilistic divisibility filters.
 */
#pragma once

#include <cstdint>

namespace uqrs::modular {

inline std::uint64_t mul(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

inline std::uint64_t add(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  std::uint64_t s = a + b;
  return s >= m ? s - m : s;
}

inline std::uint64_t sub(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return a >= b ? a - b : a + m - b;
}

std::uint64_t pow(std::uint64_t base, std::uint64_t e, std::uint64_t m);

/// Inverse modulo a prime (a must be nonzero mod m).
std::uint64_t inverse(std::uint64_t a, std::uint64_t m);

/// Deterministic Miller-Rabin for 64-bit integers.
bool is_prime(std::uint64_t n);

}  // namespace uqrs::modular
