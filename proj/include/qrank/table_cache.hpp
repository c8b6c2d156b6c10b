#pragma once

// Binary on-disk cache for rank tables. Large tables take minutes to build,
// so the CLI and the acceptance harness persist them once and re-load on
// later runs. The format is versioned and checksummed; any mismatch (magic,
// version, family, order, truncation, CRC) is treated as a miss and the
// table is rebuilt, never trusted.
//
// Layout, little-endian throughout:
//   8 bytes  magic "QRANKTBL"
//   u32      format version (currently 1)
//   u32      family id
//   u64      order
//   u64      payload byte count
//   u32      CRC-32 of the payload
//   u32      reserved (zero)
//   payload: for each n = 0..order
//     u64 n, i64 lo, u64 count, then count coefficients as
//     i32 signed byte length (sign carries the coefficient sign,
//     zero length encodes zero) followed by |len| magnitude bytes.

#include "qrank/bigint.hpp"
#include "qrank/build_tables.hpp"
#include "qrank/rank_table.hpp"

#include <zlib.h>

#include <cstdint>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

namespace qrank {

namespace detail {

inline constexpr char kCacheMagic[8] = {'Q', 'R', 'A', 'N', 'K', 'T', 'B', 'L'};
inline constexpr std::uint32_t kCacheVersion = 1;

template <class T>
void put_le(std::vector<std::uint8_t>& out, T v) {
  for (std::size_t i = 0; i < sizeof(T); ++i)
    out.push_back(static_cast<std::uint8_t>((static_cast<std::uint64_t>(v) >> (8 * i)) & 0xff));
}

template <class T>
bool get_le(const std::vector<std::uint8_t>& in, std::size_t& pos, T& v) {
  if (pos + sizeof(T) > in.size()) return false;
  std::uint64_t acc = 0;
  for (std::size_t i = 0; i < sizeof(T); ++i)
    acc |= static_cast<std::uint64_t>(in[pos + i]) << (8 * i);
  pos += sizeof(T);
  v = static_cast<T>(acc);
  return true;
}

inline std::uint32_t family_id(Family f) { return static_cast<std::uint32_t>(f); }

}  // namespace detail

inline std::filesystem::path cache_dir_from_env(const std::string& fallback = "qrank-cache") {
  if (const char* env = std::getenv("QRANK_CACHE_DIR"); env && *env) return env;
  return fallback;
}

inline std::filesystem::path cache_path(const std::filesystem::path& dir, Family family,
                                        long order) {
  return dir / (std::string(family_name(family)) + "-" + std::to_string(order) + ".qtbl");
}

inline bool save_table(const RankTable& table, const std::filesystem::path& dir) {
  std::vector<std::uint8_t> payload;
  for (long n = 0; n <= table.order; ++n) {
    const ZetaLaurent& row = table.row(n);
    detail::put_le<std::uint64_t>(payload, static_cast<std::uint64_t>(n));
    detail::put_le<std::int64_t>(payload, row.lo());
    detail::put_le<std::uint64_t>(payload, row.support_size());
    for (long m = row.lo(); m < row.lo() + static_cast<long>(row.support_size()); ++m) {
      const BigInt& c = row.at(m);
      std::vector<std::uint8_t> mag = export_magnitude(c);
      std::int32_t len = static_cast<std::int32_t>(mag.size());
      if (c < 0) len = -len;
      detail::put_le<std::int32_t>(payload, len);
      payload.insert(payload.end(), mag.begin(), mag.end());
    }
  }

  std::vector<std::uint8_t> header;
  header.insert(header.end(), detail::kCacheMagic, detail::kCacheMagic + 8);
  detail::put_le<std::uint32_t>(header, detail::kCacheVersion);
  detail::put_le<std::uint32_t>(header, detail::family_id(table.family));
  detail::put_le<std::uint64_t>(header, static_cast<std::uint64_t>(table.order));
  detail::put_le<std::uint64_t>(header, payload.size());
  const std::uint32_t crc = static_cast<std::uint32_t>(
      crc32(0L, payload.empty() ? Z_NULL : payload.data(), static_cast<uInt>(payload.size())));
  detail::put_le<std::uint32_t>(header, crc);
  detail::put_le<std::uint32_t>(header, 0);

  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  const std::filesystem::path final_path = cache_path(dir, table.family, table.order);
  const std::filesystem::path tmp_path = final_path.string() + ".tmp";
  {
    std::ofstream out(tmp_path, std::ios::binary | std::ios::trunc);
    if (!out) return false;
    out.write(reinterpret_cast<const char*>(header.data()),
              static_cast<std::streamsize>(header.size()));
    out.write(reinterpret_cast<const char*>(payload.data()),
              static_cast<std::streamsize>(payload.size()));
    if (!out) return false;
  }
  std::filesystem::rename(tmp_path, final_path, ec);
  return !ec;
}

inline std::optional<RankTable> load_table(Family family, long order,
                                           const std::filesystem::path& dir) {
  const std::filesystem::path path = cache_path(dir, family, order);
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::vector<std::uint8_t> raw((std::istreambuf_iterator<char>(in)),
                                std::istreambuf_iterator<char>());

  auto reject = [&](const char* why) -> std::optional<RankTable> {
    std::fprintf(stderr, "warning: ignoring cache file %s: %s\n", path.string().c_str(), why);
    return std::nullopt;
  };

  if (raw.size() < 36) return reject("truncated header");
  if (std::memcmp(raw.data(), detail::kCacheMagic, 8) != 0) return reject("bad magic");
  std::size_t pos = 8;
  std::uint32_t version = 0, fam = 0, crc_stored = 0, reserved = 0;
  std::uint64_t ord = 0, payload_bytes = 0;
  detail::get_le(raw, pos, version);
  detail::get_le(raw, pos, fam);
  detail::get_le(raw, pos, ord);
  detail::get_le(raw, pos, payload_bytes);
  detail::get_le(raw, pos, crc_stored);
  detail::get_le(raw, pos, reserved);
  if (version != detail::kCacheVersion) return reject("version mismatch");
  if (fam != detail::family_id(family)) return reject("family mismatch");
  if (ord != static_cast<std::uint64_t>(order)) return reject("order mismatch");
  if (raw.size() - pos != payload_bytes) return reject("payload size mismatch");

  const std::uint32_t crc_actual = static_cast<std::uint32_t>(
      crc32(0L, payload_bytes ? raw.data() + pos : Z_NULL, static_cast<uInt>(payload_bytes)));
  if (crc_actual != crc_stored) return reject("checksum mismatch");

  RankTable table;
  table.family = family;
  table.order = order;
  table.rows.resize(static_cast<std::size_t>(order) + 1);
  for (long n = 0; n <= order; ++n) {
    std::uint64_t stored_n = 0, count = 0;
    std::int64_t lo = 0;
    if (!detail::get_le(raw, pos, stored_n) || stored_n != static_cast<std::uint64_t>(n))
      return reject("row index mismatch");
    if (!detail::get_le(raw, pos, lo)) return reject("truncated row");
    if (!detail::get_le(raw, pos, count)) return reject("truncated row");
    ZetaLaurent row;
    for (std::uint64_t i = 0; i < count; ++i) {
      std::int32_t len = 0;
      if (!detail::get_le(raw, pos, len)) return reject("truncated coefficient");
      const std::size_t mag_len = static_cast<std::size_t>(len < 0 ? -len : len);
      if (pos + mag_len > raw.size()) return reject("truncated coefficient bytes");
      BigInt c = import_magnitude(raw.data() + pos, mag_len, len < 0);
      pos += mag_len;
      if (c != 0) row.set(static_cast<long>(lo) + static_cast<long>(i), c);
    }
    table.rows[static_cast<std::size_t>(n)] = std::move(row);
  }
  if (pos != raw.size()) return reject("trailing bytes");
  return table;
}

// Loads the table if a valid cache file exists, otherwise builds and saves it.
inline RankTable get_or_build(Family family, long order, const std::filesystem::path& dir,
                              const ProgressFn& progress = {}) {
  if (auto cached = load_table(family, order, dir)) return std::move(*cached);
  RankTable table = build_table(family, order, progress);
  save_table(table, dir);
  return table;
}

}  // namespace qrank
