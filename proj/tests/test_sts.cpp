#include <doctest.h>

#include <random>
#include <set>

#include "steiner/catalog.hpp"
#include "steiner/iso.hpp"
#include "steiner/sts.hpp"
#include "test_util.hpp"

using namespace steiner;

TEST_CASE("validate_sts accepts the reference STS(9)") {
  const auto& sts = catalog_get("sts9").system;
  CHECK(sts.v() == 9);
  CHECK(sts.b() == 12);
}

TEST_CASE("validate_sts accepts the Fano plane") {
  auto sts = test::fano();
  CHECK(sts.v() == 7);
  CHECK(sts.b() == 7);
}

TEST_CASE("validate_sts rejects bad input") {
  CHECK_THROWS_AS(validate_sts(8, {}), Error);
  try {
    validate_sts(8, {});
  } catch (const Error& e) {
    CHECK(e.code() == Errc::not_admissible);
  }

  // dropping one triple uncovers its pairs
  auto triples = catalog_get("sts9").system.triples();
  triples.pop_back();
  try {
    validate_sts(9, triples);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::pair_missing);
  }

  // duplicating one covers a pair twice
  triples = catalog_get("sts9").system.triples();
  triples.push_back(triples.front());
  try {
    validate_sts(9, triples);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::pair_duplicated);
  }

  try {
    validate_sts(7, {{0, 0, 1}});
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::bad_triple);
  }
  try {
    validate_sts(7, {{0, 1, 7}});
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::bad_triple);
  }
}

TEST_CASE("third_point follows the triples") {
  // reference table lists 1 2 8 as its first column (1-based labels)
  const auto& sts9 = catalog_get("sts9").system;
  CHECK(sts9.third_point(1 - 1, 2 - 1) == 8 - 1);

  auto f = test::fano();
  CHECK(f.third_point(0, 1) == 2);

  CHECK_THROWS_AS(f.third_point(3, 3), Error);

  std::mt19937 rng(7);
  for (const char* name : {"sts9", "sts13-cyclic", "sts19-S0"}) {
    const auto& sts = catalog_get(name).system;
    for (int trial = 0; trial < 50; ++trial) {
      int p = static_cast<int>(rng() % sts.v());
      int q = static_cast<int>(rng() % sts.v());
      if (p == q) continue;
      int r = sts.third_point(p, q);
      CHECK(sts.third_point(p, r) == q);
      CHECK(sts.third_point(r, q) == p);
    }
  }
}

TEST_CASE("Veblen points of the catalog systems") {
  const auto& s0 = catalog_get("sts19-S0").system;
  CHECK(is_veblen_point(s0, 0));
  CHECK_FALSE(is_veblen_point(s0, 1));
  CHECK(veblen_points(s0) == std::vector<int>{0});

  CHECK(veblen_points(catalog_get("sts19-S1").system) == std::vector<int>{0});
  CHECK(veblen_points(catalog_get("sts19-S2").system) == std::vector<int>{0});

  // projective systems: every point is Veblen
  CHECK(veblen_points(pg(3)).size() == 15);
  CHECK(veblen_points(test::fano()).size() == 7);

  CHECK(veblen_points(catalog_get("sts9").system).empty());
  CHECK(veblen_points(catalog_get("sts15-2").system) == std::vector<int>{0});
}

TEST_CASE("Veblen scan agrees with the brute-force Pasch oracle") {
  for (const char* name : {"sts9", "fano", "sts13-noncyclic", "sts15-2",
                           "sts15-80", "sts19-S0"}) {
    const auto& sts = catalog_get(name).system;
    CHECK(veblen_points(sts) == test::veblen_brute_force(sts));
  }
}

TEST_CASE("max_veblen_count") {
  CHECK(max_veblen_count(19, false) == 1);
  CHECK(max_veblen_count(19, true) == 1);
  CHECK(max_veblen_count(27, false) == 1);
  CHECK(max_veblen_count(31, false) == 3);
  CHECK(max_veblen_count(31, true) == 31);
  CHECK(max_veblen_count(15, true) == 15);
  CHECK(max_veblen_count(15, false) == 1);
  CHECK(max_veblen_count(9, false) == 0);
  CHECK(max_veblen_count(7, true) == 7);
  CHECK(max_veblen_count(7, false) == 0);
  CHECK(max_veblen_count(13, false) == 0);
  CHECK_THROWS_AS(max_veblen_count(8, false), Error);
}

TEST_CASE("Veblen count fits the 2^c - 1 shape on catalog systems") {
  for (const auto& name : catalog_names()) {
    const auto& sts = catalog_get(name).system;
    auto count = veblen_points(sts).size();
    CHECK(((count + 1) & count) == 0);  // 2^c - 1
    CHECK(static_cast<int>(count) <= max_veblen_count(sts.v(), true));
  }
}

TEST_CASE("find_pasch_configurations matches brute force") {
  CHECK(find_pasch_configurations(test::fano()).size() == 7);
  CHECK(find_pasch_configurations(catalog_get("sts9").system).empty());
  CHECK(find_pasch_configurations(catalog_get("sts15-80").system).empty());

  for (const char* name : {"fano", "sts13-cyclic", "sts15-61"}) {
    const auto& sts = catalog_get(name).system;
    auto found = find_pasch_configurations(sts);
    auto expected = test::pasch_brute_force(sts);
    CHECK(found.size() == expected.size());
    // every reported configuration is a genuine one
    std::set<std::set<int>> expected_sets(expected.begin(), expected.end());
    for (const auto& cfg : found) {
      CHECK(sts.has_triple({cfg.x, cfg.a, cfg.b}));
      CHECK(sts.has_triple({cfg.x, cfg.c, cfg.d}));
      CHECK(sts.has_triple({cfg.t, cfg.a, cfg.c}));
      CHECK(sts.has_triple({cfg.t, cfg.b, cfg.d}));
      CHECK(expected_sets.count({cfg.x, cfg.a, cfg.b, cfg.c, cfg.d, cfg.t}) ==
            1);
    }
  }
}

TEST_CASE("pasch_switch reproduces the S0 -> S1 -> S2 chain") {
  const auto& s0 = catalog_get("sts19-S0").system;
  const auto& s1 = catalog_get("sts19-S1").system;
  const auto& s2 = catalog_get("sts19-S2").system;

  auto cfg1 = pasch_from_points(s0, 3, 6, 9, 15, 18, 12);
  CHECK(pasch_switch(s0, cfg1).triples() == s1.triples());

  auto cfg2 = pasch_from_points(s1, 7, 8, 9, 17, 18, 16);
  CHECK(pasch_switch(s1, cfg2).triples() == s2.triples());

  // involution
  auto once = pasch_switch(s0, cfg1);
  auto back = pasch_switch(once, pasch_from_points(once, 3, 6, 9, 15, 18, 12));
  CHECK(back.triples() == s0.triples());

  // {1,2,3},{1,4,7} do not complete: third(2,4)=9 but third(3,7)=5
  CHECK_THROWS_AS(pasch_from_points(s0, 1, 2, 3, 4, 7, 9), Error);
  CHECK_THROWS_AS(pasch_from_points(s0, 1, 2, 3, 4, 5, 6), Error);
  CHECK_THROWS_AS(pasch_from_points(s0, 1, 1, 3, 4, 7, 9), Error);
}

TEST_CASE("pasch_switch output validates for every found configuration") {
  const auto& sts = catalog_get("sts13-noncyclic").system;
  auto configs = find_pasch_configurations(sts);
  REQUIRE(!configs.empty());
  for (size_t i = 0; i < configs.size(); i += 7) {
    auto switched = pasch_switch(sts, configs[i]);
    CHECK(switched.v() == sts.v());
    auto again = pasch_switch(
        switched, pasch_from_points(switched, configs[i].x, configs[i].a,
                                    configs[i].b, configs[i].c, configs[i].d,
                                    configs[i].t));
    CHECK(again.triples() == sts.triples());
  }
}

TEST_CASE("are_isomorphic distinguishes the three STS(19)s") {
  const auto& s0 = catalog_get("sts19-S0").system;
  const auto& s1 = catalog_get("sts19-S1").system;
  const auto& s2 = catalog_get("sts19-S2").system;
  CHECK_FALSE(are_isomorphic(s0, s1).has_value());
  CHECK_FALSE(are_isomorphic(s0, s2).has_value());
  CHECK_FALSE(are_isomorphic(s1, s2).has_value());
}

TEST_CASE("are_isomorphic finds relabelings") {
  std::mt19937 rng(11);
  for (const char* name : {"sts9", "sts13-cyclic", "sts19-S1"}) {
    const auto& sts = catalog_get(name).system;
    auto perm = test::random_perm(sts.v(), rng);
    auto shuffled = relabel(sts, perm);
    auto iso = are_isomorphic(sts, shuffled);
    REQUIRE(iso.has_value());
    // the witness maps triples onto triples
    CHECK(relabel(sts, *iso).triples() == shuffled.triples());
  }
}

TEST_CASE("are_isomorphic is reflexive and symmetric") {
  const auto& a = catalog_get("sts13-cyclic").system;
  const auto& b = catalog_get("sts9").system;
  CHECK(are_isomorphic(a, a).has_value());
  std::mt19937 rng(67);
  auto shuffled = relabel(b, test::random_perm(b.v(), rng));
  CHECK(are_isomorphic(b, shuffled).has_value() ==
        are_isomorphic(shuffled, b).has_value());
  CHECK(are_isomorphic(catalog_get("sts19-S0").system,
                       catalog_get("sts19-S1").system)
            .has_value() ==
        are_isomorphic(catalog_get("sts19-S1").system,
                       catalog_get("sts19-S0").system)
            .has_value());
}

TEST_CASE("the two STS(13)s are not isomorphic") {
  CHECK_FALSE(are_isomorphic(catalog_get("sts13-noncyclic").system,
                             catalog_get("sts13-cyclic").system)
                  .has_value());
  CHECK_THROWS_AS(
      are_isomorphic(catalog_get("sts9").system, catalog_get("fano").system),
      Error);
}

TEST_CASE("canonical form agrees with the search path") {
  std::mt19937 rng(23);
  const char* names[] = {"sts9",    "sts9-coords", "sts13-noncyclic",
                         "sts13-cyclic", "fano",   "sts15-2",
                         "sts15-61", "sts19-S0",   "sts19-S1"};
  for (const char* name : names) {
    const auto& sts = catalog_get(name).system;
    auto perm = test::random_perm(sts.v(), rng);
    CHECK(canonical_form(sts) == canonical_form(relabel(sts, perm)));
  }
  // non-isomorphic pairs get different forms, matching the search verdict
  auto check_pair = [](const SteinerTripleSystem& a,
                       const SteinerTripleSystem& b) {
    bool iso = are_isomorphic(a, b).has_value();
    CHECK((canonical_form(a) == canonical_form(b)) == iso);
  };
  check_pair(catalog_get("sts13-noncyclic").system,
             catalog_get("sts13-cyclic").system);
  check_pair(catalog_get("sts19-S0").system, catalog_get("sts19-S1").system);
  check_pair(catalog_get("sts19-S1").system, catalog_get("sts19-S2").system);
  check_pair(catalog_get("sts9").system, catalog_get("sts9-coords").system);
}
