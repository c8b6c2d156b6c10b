#pragma once

// The artifact's central persisted object: the matrix {f(m,n)} of one family,
// stored as one ZetaLaurent row per size n.

#include "qrank/bigint.hpp"
#include "qrank/zeta_laurent.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace qrank {

enum class Family {
  unimodal,
  durfee,
  semistrict,
  partition_rank,
  partition_crank,
};

inline const char* family_name(Family f) {
  switch (f) {
    case Family::unimodal: return "unimodal";
    case Family::durfee: return "durfee";
    case Family::semistrict: return "semistrict";
    case Family::partition_rank: return "partition-rank";
    case Family::partition_crank: return "partition-crank";
  }
  return "?";
}

inline Family parse_family(const std::string& s) {
  if (s == "unimodal") return Family::unimodal;
  if (s == "durfee") return Family::durfee;
  if (s == "semistrict") return Family::semistrict;
  if (s == "partition-rank" || s == "rank") return Family::partition_rank;
  if (s == "partition-crank" || s == "crank") return Family::partition_crank;
  throw std::invalid_argument("unknown family: " + s);
}

struct RankTable {
  Family family = Family::unimodal;
  long order = -1;
  std::vector<ZetaLaurent> rows;  // rows[n] = Σ_m f(m,n) ζ^m

  const ZetaLaurent& row(long n) const {
    if (n < 0 || n > order) throw std::out_of_range("RankTable::row: n out of range");
    return rows[static_cast<size_t>(n)];
  }

  // f(m, n); zero outside the stored window.
  const BigInt& value(long m, long n) const { return row(n).at(m); }

  BigInt row_sum(long n) const { return row(n).sum(); }
};

}  // namespace qrank
