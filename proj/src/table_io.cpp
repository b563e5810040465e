#include "lcomplex/table_io.hpp"

#include <zlib.h>

#include <algorithm>
#include <fstream>
#include <iterator>

#include "lcomplex/error.hpp"

namespace lcx {

namespace {

constexpr std::uint8_t kMagic[4] = {'L', 'C', 'X', 'T'};

template <class T>
void put_le(std::vector<std::uint8_t>& out, T v) {
  for (std::size_t i = 0; i < sizeof(T); ++i) out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

template <class T>
T get_le(std::span<const std::uint8_t> bytes, std::size_t offset) {
  T v = 0;
  for (std::size_t i = 0; i < sizeof(T); ++i) v |= static_cast<T>(bytes[offset + i]) << (8 * i);
  return v;
}

}  // namespace

std::uint32_t crc32_ieee(std::span<const std::uint8_t> bytes) noexcept {
  uLong crc = ::crc32(0L, Z_NULL, 0);
  // zlib takes uInt lengths; feed large tables in pieces.
  constexpr std::size_t piece = 1u << 30;
  for (std::size_t off = 0; off < bytes.size(); off += piece) {
    const auto len = static_cast<uInt>(std::min(piece, bytes.size() - off));
    crc = ::crc32(crc, bytes.data() + off, len);
  }
  return static_cast<std::uint32_t>(crc);
}

std::vector<std::uint8_t> serialize_table(const ComplexityTable& table) {
  std::vector<std::uint8_t> out;
  out.reserve(kTableHeaderSize + table.size() + 4);
  for (std::uint8_t b : kMagic) out.push_back(b);
  put_le<std::uint32_t>(out, kTableFormatVersion);
  put_le<std::uint64_t>(out, table.l());
  put_le<std::uint64_t>(out, table.max_n());
  const auto entries = table.entries();
  out.insert(out.end(), entries.begin(), entries.end());
  put_le<std::uint32_t>(out, crc32_ieee(out));
  return out;
}

ComplexityTable deserialize_table(std::span<const std::uint8_t> bytes) {
  const std::size_t probe = std::min(bytes.size(), std::size(kMagic));
  if (!std::equal(bytes.begin(), bytes.begin() + probe, std::begin(kMagic))) {
    throw Error(ErrorCode::BadMagic, "not a table file (magic 'LCXT' missing)");
  }
  if (bytes.size() < kTableHeaderSize) throw Error(ErrorCode::Truncated, "table header is truncated");
  const auto version = get_le<std::uint32_t>(bytes, 4);
  if (version != kTableFormatVersion) {
    throw Error(ErrorCode::BadVersion, "unsupported table format version " + std::to_string(version));
  }
  const auto l = get_le<std::uint64_t>(bytes, 8);
  const auto max_n = get_le<std::uint64_t>(bytes, 16);
  if (l == 0 || max_n < l || max_n % l != 0) {
    throw Error(ErrorCode::Malformed, "table header has inconsistent l/max_n");
  }
  const u64 count = max_n / l;
  const u64 available = bytes.size() - kTableHeaderSize;
  if (available < 4 || available - 4 < count) {
    throw Error(ErrorCode::Truncated, "table body is truncated: expected " + std::to_string(count) +
                                          " entries plus checksum");
  }
  if (available - 4 > count) throw Error(ErrorCode::Malformed, "trailing bytes after table checksum");

  const std::size_t body_end = kTableHeaderSize + count;
  const auto stored = get_le<std::uint32_t>(bytes, body_end);
  if (crc32_ieee(bytes.first(body_end)) != stored) {
    throw Error(ErrorCode::BadChecksum, "table checksum mismatch");
  }
  std::vector<std::uint8_t> entries(bytes.begin() + kTableHeaderSize, bytes.begin() + body_end);
  return ComplexityTable(l, max_n, std::move(entries));
}

void save_table(const ComplexityTable& table, const std::filesystem::path& path) {
  const auto bytes = serialize_table(table);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::Io, "cannot open " + path.string() + " for writing");
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw Error(ErrorCode::Io, "write to " + path.string() + " failed");
}

ComplexityTable load_table(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, "cannot open " + path.string());
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (in.bad()) throw Error(ErrorCode::Io, "read from " + path.string() + " failed");
  return deserialize_table(bytes);
}

}  // namespace lcx
