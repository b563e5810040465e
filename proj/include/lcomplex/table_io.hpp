#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "lcomplex/engine.hpp"

namespace lcx {

// On-disk layout, all integers little-endian:
//   "LCXT" | u32 version (= 1) | u64 l | u64 max_n | max_n/l entry bytes | u32 CRC-32
// The CRC covers every byte before it.
inline constexpr std::uint32_t kTableFormatVersion = 1;
inline constexpr std::size_t kTableHeaderSize = 4 + 4 + 8 + 8;

std::uint32_t crc32_ieee(std::span<const std::uint8_t> bytes) noexcept;

std::vector<std::uint8_t> serialize_table(const ComplexityTable& table);

/// Throws BadMagic, BadVersion, Truncated, BadChecksum or Malformed.
ComplexityTable deserialize_table(std::span<const std::uint8_t> bytes);

/// Throws Io when the file cannot be written.
void save_table(const ComplexityTable& table, const std::filesystem::path& path);

/// Throws Io when the file cannot be read, otherwise as deserialize_table.
ComplexityTable load_table(const std::filesystem::path& path);

}  // namespace lcx
