// Table builders against the independent enumeration oracles, frozen rows,
// structural invariants (symmetry, support), and the decomposition
// identities with their perturbation self-test.

#include "qrank/brute_force.hpp"
#include "qrank/build_tables.hpp"
#include "qrank/identities.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace qrank;

namespace {

ZetaLaurent row_from(std::initializer_list<std::pair<long, long>> entries) {
  ZetaLaurent z;
  for (const auto& [m, c] : entries) z.set(m, BigInt(c));
  return z;
}

}  // namespace

TEST_CASE("unimodal, Durfee and semi-strict builders match enumeration") {
  const long N = 14;
  RankTable u = build_unimodal_table(N);
  RankTable v = build_durfee_table(N);
  RankTable d = build_semistrict_table(N);
  for (long n = 0; n <= N; ++n) {
    INFO("n = " << n);
    REQUIRE(u.row(n) == brute_force_unimodal(n));
    REQUIRE(v.row(n) == brute_force_durfee(n));
    REQUIRE(d.row(n) == brute_force_semistrict(n));
  }
}

TEST_CASE("partition rank and crank builders match enumeration") {
  const long N = 25;
  RankTable r = build_partition_rank_table(N);
  RankTable c = build_crank_table(N);
  for (long n = 0; n <= N; ++n) {
    INFO("n = " << n);
    REQUIRE(r.row(n) == brute_force_partition_rank(n));
    REQUIRE(c.row(n) == brute_force_partition_crank(n));
  }
}

TEST_CASE("frozen small rows") {
  RankTable u = build_unimodal_table(4);
  REQUIRE(u.row(0) == ZetaLaurent::one());
  REQUIRE(u.row(3) == row_from({{-2, 1}, {-1, 1}, {0, 2}, {1, 1}, {2, 1}}));
  REQUIRE(u.row_sum(3) == 6);

  RankTable v = build_durfee_table(4);
  REQUIRE(v.row(3) == row_from({{-2, 1}, {-1, 1}, {0, 1}, {1, 1}, {2, 1}}));
  REQUIRE(v.row(4) ==
          row_from({{-3, 1}, {-2, 1}, {-1, 2}, {0, 2}, {1, 2}, {2, 1}, {3, 1}}));

  RankTable d = build_semistrict_table(4);
  // Size 4: {4}, {1,3}, {3,1}, {1,2,1}, {2,1,1} with ranks 0,-1,+1,0,+2.
  REQUIRE(d.row(4) == row_from({{-1, 1}, {0, 2}, {1, 1}, {2, 1}}));
  REQUIRE(d.row_sum(4) == 5);
  REQUIRE(d.row(0).is_zero());

  RankTable r = build_partition_rank_table(2);
  REQUIRE(r.row(1) == row_from({{0, 1}}));

  RankTable c = build_crank_table(2);
  REQUIRE(c.row(1) == row_from({{-1, 1}, {0, -1}, {1, 1}}));
  REQUIRE(c.row(2) == row_from({{-2, 1}, {2, 1}}));
}

TEST_CASE("rank and crank rows total p(n)") {
  const long N = 60;
  RankTable r = build_partition_rank_table(N);
  RankTable c = build_crank_table(N);
  std::vector<BigInt> p = partition_counts(N);
  for (long n = 0; n <= N; ++n) {
    REQUIRE(r.row_sum(n) == p[static_cast<size_t>(n)]);
    REQUIRE(c.row_sum(n) == p[static_cast<size_t>(n)]);
  }
}

TEST_CASE("symmetry f(-m,n) = f(m,n) where the family has it") {
  const long N = 40;
  for (Family f : {Family::unimodal, Family::durfee, Family::partition_rank,
                   Family::partition_crank}) {
    RankTable t = build_table(f, N);
    for (long n = 0; n <= N; ++n) {
      INFO(family_name(f) << " n = " << n);
      REQUIRE(t.row(n).mirrored() == t.row(n));
    }
  }

  // The semi-strict family is genuinely asymmetric: witness at n = 4.
  RankTable d = build_semistrict_table(4);
  REQUIRE(d.row(4).mirrored() != d.row(4));
  REQUIRE(d.value(2, 4) == 1);
  REQUIRE(d.value(-2, 4) == 0);
}

TEST_CASE("rank support stays inside |m| <= n") {
  const long N = 40;
  for (Family f : {Family::unimodal, Family::durfee, Family::semistrict,
                   Family::partition_rank, Family::partition_crank}) {
    RankTable t = build_table(f, N);
    for (long n = 1; n <= N; ++n) {
      if (t.row(n).is_zero()) continue;
      REQUIRE(t.row(n).lo() >= -n);
      REQUIRE(t.row(n).hi() <= n);
    }
  }
}

TEST_CASE("moment structure of symmetric rows") {
  const long N = 30;
  RankTable u = build_unimodal_table(N);
  RankTable d = build_semistrict_table(N);
  for (long n = 1; n <= N; ++n) {
    // Odd signed moments vanish by symmetry; even ones are positive counts.
    REQUIRE(u.row(n).moment(1) == 0);
    REQUIRE(u.row(n).moment(3) == 0);
    REQUIRE(u.row(n).moment(2) > 0);
    REQUIRE(u.row(n).moment(4) > 0);
    REQUIRE(u.row(n).abs_moment(2) == u.row(n).moment(2));

    // Asymmetric family: |signed| <= absolute, equality exactly at even k.
    BigInt signed1 = d.row(n).moment(1);
    BigInt abs1 = d.row(n).abs_moment(1);
    REQUIRE(abs1 >= (signed1 < 0 ? BigInt(-signed1) : signed1));
    REQUIRE(d.row(n).abs_moment(2) == d.row(n).moment(2));
  }
}

TEST_CASE("rank table accessors") {
  RankTable u = build_unimodal_table(6);
  REQUIRE(u.order == 6);
  REQUIRE(u.family == Family::unimodal);
  REQUIRE(u.value(0, 3) == 2);
  REQUIRE(u.value(17, 3) == 0);
  REQUIRE_THROWS_AS(u.row(7), std::out_of_range);
  REQUIRE_THROWS_AS(u.row(-1), std::out_of_range);
}

TEST_CASE("family names parse and print") {
  for (Family f : {Family::unimodal, Family::durfee, Family::semistrict,
                   Family::partition_rank, Family::partition_crank})
    REQUIRE(parse_family(family_name(f)) == f);
  REQUIRE(parse_family("rank") == Family::partition_rank);
  REQUIRE(parse_family("crank") == Family::partition_crank);
  REQUIRE_THROWS_AS(parse_family("octahedral"), std::invalid_argument);
}

TEST_CASE("decomposition identities hold through q^30") {
  IdentityReport u = verify_identity_U(30);
  INFO(u.detail);
  REQUIRE(u.ok);

  IdentityReport v = verify_identity_V(30);
  INFO(v.detail);
  REQUIRE(v.ok);

  IdentityReport d = verify_identity_D(30);
  INFO(d.detail);
  REQUIRE(d.ok);

  // Degenerate order: only the trivial coefficients exist.
  REQUIRE(verify_identity_D(1).ok);
  REQUIRE(verify_identity_U(0).ok);
}

TEST_CASE("identity checks detect a single flipped coefficient") {
  IdentityReport u = verify_identity_U(30, true);
  REQUIRE_FALSE(u.ok);
  REQUIRE(u.first_bad_order == 15);

  IdentityReport v = verify_identity_V(30, true);
  REQUIRE_FALSE(v.ok);
  REQUIRE(v.first_bad_order == 15);

  IdentityReport d = verify_identity_D(30, true);
  REQUIRE_FALSE(d.ok);
  REQUIRE(d.first_bad_order == 15);
}
