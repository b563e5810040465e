#pragma once

#include <bit>
#include <cstdint>
#include <optional>

namespace lcx {

using u64 = std::uint64_t;

inline std::optional<u64> checked_mul(u64 a, u64 b) noexcept {
  u64 r;
  if (__builtin_mul_overflow(a, b, &r)) return std::nullopt;
  return r;
}

inline std::optional<u64> checked_add(u64 a, u64 b) noexcept {
  u64 r;
  if (__builtin_add_overflow(a, b, &r)) return std::nullopt;
  return r;
}

/// Smallest k >= 0 with base^k >= n (n >= 1, base >= 2). Integer only.
inline unsigned ceil_log(u64 n, u64 base) noexcept {
  unsigned k = 0;
  u64 p = 1;
  while (p < n) {
    auto next = checked_mul(p, base);
    ++k;
    if (!next) break;  // base^k already exceeds every u64
    p = *next;
  }
  return k;
}

/// Largest k with base^k <= n (n >= 1).
inline unsigned floor_log(u64 n, u64 base) noexcept {
  unsigned k = 0;
  u64 p = base;
  while (p <= n) {
    ++k;
    auto next = checked_mul(p, base);
    if (!next) break;
    p = *next;
  }
  return k;
}

/// base^e, or nullopt on overflow.
inline std::optional<u64> checked_pow(u64 base, unsigned e) noexcept {
  u64 r = 1;
  for (unsigned i = 0; i < e; ++i) {
    auto next = checked_mul(r, base);
    if (!next) return std::nullopt;
    r = *next;
  }
  return r;
}

inline unsigned ceil_log2(u64 n) noexcept {
  return n <= 1 ? 0u : 64u - static_cast<unsigned>(std::countl_zero(n - 1));
}

inline unsigned floor_log2(u64 n) noexcept {
  return 63u - static_cast<unsigned>(std::countl_zero(n));
}

}  // namespace lcx
