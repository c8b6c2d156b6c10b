#pragma once

// Independent brute-force oracles: direct enumeration of the combinatorial
// objects, never touching the series machinery they are used to check.
//
// A unimodal sequence of size n is a triple (rise, peak, fall)
//
//   a_1 <= a_2 <= ... <= a_r <= c >= b_s >= ... >= b_1,   all parts >= 1,
//
// with the peak c marked (repeated maxima give distinct sequences depending on
// which copy carries the mark), size Σa + c + Σb = n and rank s - r.
//
// The Durfee variant keeps those sequences whose fall stays below the peak by
// the Durfee square of the rise: b_s <= c - k, where k is the Durfee square
// size of the rise (a_1,...,a_r), i.e. the largest k with a_{r-k+1} >= k, and
// b_s is the largest fall part. (The bound constrains part sizes, not the
// number of parts; the histogram is symmetric in m even though the condition
// reads one-sided.)
//
// The semi-strict variant requires a strictly increasing rise and a peak
// strictly above the first fall part:  a_1 < ... < a_r < c > b_s >= ... >= b_1.
//
// Partition statistics: rank(λ) = λ_1 - (number of parts); the crank is λ_1
// when λ has no ones, and μ(λ) - ω(λ) otherwise, with ω the number of ones and
// μ the number of parts exceeding ω. The crank histogram at n = 1 follows the
// standard convention M(±1,1) = 1, M(0,1) = -1 (matching the product
// generating function) rather than the raw enumeration.
//
// Everything here is exponential-cost by design and guarded by a hard cap.

#include "qrank/bigint.hpp"
#include "qrank/zeta_laurent.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace qrank {

inline constexpr long kBruteForceDefaultCap = 30;

namespace detail {

inline void check_cap(long n, long cap) {
  if (n < 0) throw std::invalid_argument("brute force: n must be >= 0");
  if (n > cap)
    throw std::invalid_argument("brute force: n exceeds the enumeration cap (" +
                                std::to_string(cap) + "); raise the cap explicitly");
}

// Enumerates partitions of n with parts <= max_part, in weakly decreasing
// order, invoking visit(parts) for each (including the empty partition of 0).
inline void for_each_partition(long n, long max_part, std::vector<long>& parts,
                               const std::function<void(const std::vector<long>&)>& visit) {
  if (n == 0) {
    visit(parts);
    return;
  }
  long top = std::min(n, max_part);
  for (long p = top; p >= 1; --p) {
    parts.push_back(p);
    for_each_partition(n - p, p, parts, visit);
    parts.pop_back();
  }
}

// Enumerates partitions of n into distinct parts <= max_part.
inline void for_each_distinct_partition(long n, long max_part, std::vector<long>& parts,
                                        const std::function<void(const std::vector<long>&)>& visit) {
  if (n == 0) {
    visit(parts);
    return;
  }
  long top = std::min(n, max_part);
  for (long p = top; p >= 1; --p) {
    parts.push_back(p);
    for_each_distinct_partition(n - p, p - 1, parts, visit);
    parts.pop_back();
  }
}

// Durfee square size of a partition given in weakly decreasing order.
inline long durfee_square(const std::vector<long>& desc_parts) {
  long k = 0;
  while (k < static_cast<long>(desc_parts.size()) && desc_parts[static_cast<size_t>(k)] >= k + 1)
    ++k;
  return k;
}

// Lengths of all bounded partitions of j, with the Durfee square size when
// requested. One entry per partition.
struct SidesProfile {
  std::vector<long> len;
  std::vector<long> durfee;
};

inline SidesProfile profile_partitions(long j, long max_part, bool want_durfee) {
  SidesProfile out;
  std::vector<long> parts;
  for_each_partition(j, max_part, parts, [&](const std::vector<long>& p) {
    out.len.push_back(static_cast<long>(p.size()));
    if (want_durfee) out.durfee.push_back(durfee_square(p));
  });
  return out;
}

}  // namespace detail

// Rank histogram of unimodal sequences of size n.
inline ZetaLaurent brute_force_unimodal(long n, long cap = kBruteForceDefaultCap) {
  detail::check_cap(n, cap);
  ZetaLaurent hist;
  if (n == 0) return ZetaLaurent::one();
  for (long c = 1; c <= n; ++c) {
    const long rest = n - c;
    std::vector<detail::SidesProfile> rises(static_cast<size_t>(rest) + 1);
    for (long j = 0; j <= rest; ++j)
      rises[static_cast<size_t>(j)] = detail::profile_partitions(j, c, false);
    for (long j = 0; j <= rest; ++j) {
      const auto& rise = rises[static_cast<size_t>(j)];
      const auto& fall = rises[static_cast<size_t>(rest - j)];
      for (long r : rise.len)
        for (long s : fall.len)
          hist.set(s - r, hist.at(s - r) + 1);
    }
  }
  return hist;
}

// Rank histogram of Durfee unimodal sequences of size n.
inline ZetaLaurent brute_force_durfee(long n, long cap = kBruteForceDefaultCap) {
  detail::check_cap(n, cap);
  ZetaLaurent hist;
  if (n == 0) return ZetaLaurent::one();
  for (long c = 1; c <= n; ++c) {
    const long rest = n - c;
    for (long j = 0; j <= rest; ++j) {
      const auto rise = detail::profile_partitions(j, c, true);
      // The fall bound c - k depends only on the rise's Durfee size, so group
      // rise lengths by k and enumerate falls once per bound.
      std::map<long, std::vector<long>> rise_lens_by_durfee;
      for (size_t i = 0; i < rise.len.size(); ++i)
        rise_lens_by_durfee[rise.durfee[i]].push_back(rise.len[i]);
      for (const auto& [kd, rise_lens] : rise_lens_by_durfee) {
        const auto fall = detail::profile_partitions(rest - j, c - kd, false);
        for (long r : rise_lens)
          for (long s : fall.len) hist.set(s - r, hist.at(s - r) + 1);
      }
    }
  }
  return hist;
}

// Rank histogram of semi-strict unimodal sequences of size n.
inline ZetaLaurent brute_force_semistrict(long n, long cap = kBruteForceDefaultCap) {
  detail::check_cap(n, cap);
  ZetaLaurent hist;
  if (n == 0) return hist;  // empty: no sequence has a peak
  for (long c = 1; c <= n; ++c) {
    const long rest = n - c;
    for (long j = 0; j <= rest; ++j) {
      std::vector<long> rise_lens;
      {
        std::vector<long> parts;
        detail::for_each_distinct_partition(j, c - 1, parts,
                                            [&](const std::vector<long>& p) {
                                              rise_lens.push_back(static_cast<long>(p.size()));
                                            });
      }
      if (rise_lens.empty()) continue;
      const auto fall = detail::profile_partitions(rest - j, c - 1, false);
      for (long r : rise_lens)
        for (long s : fall.len)
          hist.set(s - r, hist.at(s - r) + 1);
    }
  }
  return hist;
}

// Rank histogram of partitions of n (Dyson rank: largest part minus length).
inline ZetaLaurent brute_force_partition_rank(long n, long cap = kBruteForceDefaultCap) {
  detail::check_cap(n, cap);
  if (n == 0) return ZetaLaurent::one();
  ZetaLaurent hist;
  std::vector<long> parts;
  detail::for_each_partition(n, n, parts, [&](const std::vector<long>& p) {
    if (p.empty()) return;
    const long m = p.front() - static_cast<long>(p.size());
    hist.set(m, hist.at(m) + 1);
  });
  return hist;
}

// Crank histogram of partitions of n, with the n = 1 convention noted above.
inline ZetaLaurent brute_force_partition_crank(long n, long cap = kBruteForceDefaultCap) {
  detail::check_cap(n, cap);
  if (n == 0) return ZetaLaurent::one();
  if (n == 1) {
    ZetaLaurent hist;
    hist.set(-1, 1);
    hist.set(0, -1);
    hist.set(1, 1);
    return hist;
  }
  ZetaLaurent hist;
  std::vector<long> parts;
  detail::for_each_partition(n, n, parts, [&](const std::vector<long>& p) {
    if (p.empty()) return;
    long ones = 0;
    for (long v : p)
      if (v == 1) ++ones;
    long m;
    if (ones == 0) {
      m = p.front();
    } else {
      long mu = 0;
      for (long v : p)
        if (v > ones) ++mu;
      m = mu - ones;
    }
    hist.set(m, hist.at(m) + 1);
  });
  return hist;
}

// Number of partitions of n (direct sum over the rank histogram's support
// would be circular here; this is a separate dynamic-programming count).
inline std::vector<BigInt> partition_counts(long up_to) {
  std::vector<BigInt> p(static_cast<size_t>(up_to) + 1);
  p[0] = 1;
  for (long part = 1; part <= up_to; ++part)
    for (long n = part; n <= up_to; ++n) p[static_cast<size_t>(n)] += p[static_cast<size_t>(n - part)];
  return p;
}

}  // namespace qrank
