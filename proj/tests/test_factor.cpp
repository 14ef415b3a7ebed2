#include <doctest.h>

#include <random>
#include <set>

#include "steiner/catalog.hpp"
#include "steiner/factor.hpp"
#include "test_util.hpp"

using namespace steiner;

TEST_CASE("fundamental pairs of the lexicographic STS(9)") {
  const auto& sts = catalog_get("sts9-coords").system;
  auto fp = fundamental_pairs(sts);
  REQUIRE(fp.b() == 12);
  // 1-based in the source table: {1,2},{1,4},{1,5},{1,6},{2,4},{2,5},...
  std::vector<std::array<int, 2>> expected = {
      {0, 1}, {0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4},
      {1, 5}, {2, 3}, {2, 4}, {2, 5}, {3, 4}, {6, 7}};
  CHECK(fp.pairs == expected);

  CHECK(fundamental_pairs(test::fano()).b() == 7);
  for (const char* name : {"sts13-cyclic", "sts15-61"}) {
    const auto& q = catalog_get(name).system;
    CHECK(fundamental_pairs(q).b() == q.v() * (q.v() - 1) / 6);
  }
}

TEST_CASE("encode reproduces the golden integer 29584") {
  const auto& sts = catalog_get("sts9-coords").system;
  auto fp = fundamental_pairs(sts);
  std::vector<std::uint32_t> values(12, 0);
  auto set_pair = [&](int p, int q, std::uint32_t v) {
    bool found = false;
    for (int i = 0; i < fp.b(); ++i)
      if (fp.pairs[i] == std::array<int, 2>{p, q}) {
        values[i] = v;
        found = true;
      }
    REQUIRE(found);
  };
  // (first coordinate, second coordinate) as bits, most significant first
  set_pair(1, 3, 0b01);
  set_pair(1, 4, 0b11);
  set_pair(2, 3, 0b11);
  set_pair(2, 4, 0b10);
  set_pair(2, 5, 0b01);
  auto fs = encode(values, 2);
  CHECK(fs.code.to_u64() == 29584);
  CHECK(decode(fs) == values);
}

TEST_CASE("encode places pair 1 in the top field") {
  std::vector<std::uint32_t> values(12, 0);
  values[0] = 0b01;  // (0,1)
  CHECK(encode(values, 2).code.to_u64() == (std::uint64_t(1) << 22));
  values[0] = 0b10;  // (1,0): first coordinate is the more significant bit
  CHECK(encode(values, 2).code.to_u64() == (std::uint64_t(1) << 23));

  CHECK(encode(std::vector<std::uint32_t>(12, 0), 2).code.is_zero());
  CHECK_THROWS_AS(encode({4}, 2), Error);
}

TEST_CASE("decode is a left inverse of encode") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    int t = 1 + static_cast<int>(rng() % 2);
    int b = 5 + static_cast<int>(rng() % 30);
    std::vector<std::uint32_t> values(b);
    for (auto& v : values) v = rng() % (1u << t);
    auto fs = encode(values, t);
    CHECK(decode(fs) == values);
  }
}

TEST_CASE("evaluate follows the identity and triple rules") {
  const auto& sts = catalog_get("sts9-coords").system;
  auto fp = fundamental_pairs(sts);
  // f1 marks the triple {P3,P6,P9}, 0-based {2,5,8} (code 4 at t=1)
  FactorSystem f1{Code::from_u64(4), 1, 12};

  for (int e = 0; e <= 9; ++e) {
    CHECK(evaluate(f1, fp, sts, 0, e) == 0);
    CHECK(evaluate(f1, fp, sts, e, 0) == 0);
    CHECK(evaluate(f1, fp, sts, e, e) == 0);
  }
  CHECK(evaluate(f1, fp, sts, 3, 6) == 1);
  CHECK(evaluate(f1, fp, sts, 3, 9) == 1);
  CHECK(evaluate(f1, fp, sts, 6, 9) == 1);
  CHECK(evaluate(f1, fp, sts, 1, 2) == 0);
  CHECK(evaluate(f1, fp, sts, 9, 3) == 1);  // symmetric
}

TEST_CASE("ext_count") {
  CHECK(ext_count(1, 12) == 4096);
  CHECK(ext_count(1, 35) == (std::uint64_t(1) << 35));
  CHECK(ext_count(2, 7) == 16384);
  CHECK_THROWS_AS(ext_count(2, 32), Error);
  CHECK_THROWS_AS(ext_count(0, 3), Error);
}

TEST_CASE("coboundary values are constant on triples") {
  std::mt19937 rng(5);
  for (const char* name : {"sts9", "fano", "sts13-noncyclic", "sts15-7"}) {
    const auto& q = catalog_get(name).system;
    for (int t : {1, 2}) {
      std::vector<std::uint32_t> phi(q.v() + 1, 0);
      for (int p = 1; p <= q.v(); ++p) phi[p] = rng() % (1u << t);
      auto fs = coboundary(phi, q, t);
      for (int i = 0; i < q.b(); ++i) {
        const Triple& tr = q.triple(i);
        // any pair of the triple gives the same value phi(P)+phi(Q)+phi(PQ)
        std::uint32_t v01 = phi[tr[0] + 1] ^ phi[tr[1] + 1] ^ phi[tr[2] + 1];
        CHECK(fs.field(i) == v01);
      }
    }
  }
}

TEST_CASE("indicator coboundaries mark the triples through their point") {
  for (const auto& name : catalog_names()) {
    const auto& q = catalog_get(name).system;
    for (int p = 0; p < q.v(); ++p) {
      std::vector<std::uint32_t> phi(q.v() + 1, 0);
      phi[p + 1] = 1;
      auto fs = coboundary(phi, q, 1);
      for (int i = 0; i < q.b(); ++i) {
        const Triple& tr = q.triple(i);
        bool through = tr[0] == p || tr[1] == p || tr[2] == p;
        CHECK(fs.field(i) == (through ? 1u : 0u));
      }
    }
  }
}

TEST_CASE("coboundary of zero is zero") {
  const auto& q = catalog_get("sts9").system;
  CHECK(coboundary(std::vector<std::uint32_t>(10, 0), q, 1).code.is_zero());
  std::vector<std::uint32_t> bad(10, 0);
  bad[0] = 1;
  CHECK_THROWS_AS(coboundary(bad, q, 1), Error);
}

TEST_CASE("coboundary space dimensions") {
  CHECK(coboundary_space(catalog_get("sts9").system, 1).dim == 9);
  CHECK(coboundary_space(catalog_get("sts9-coords").system, 1).dim == 9);
  CHECK(coboundary_space(pg(3), 1).dim == 11);
  CHECK(coboundary_space(test::fano(), 2).dim == 8);
  CHECK(coboundary_space(catalog_get("sts13-noncyclic").system, 1).dim == 13);
  CHECK(coboundary_space(catalog_get("sts13-cyclic").system, 1).dim == 13);
  CHECK(coboundary_space(catalog_get("sts15-2").system, 1).dim == 12);
  CHECK(coboundary_space(catalog_get("sts15-3").system, 1).dim == 13);
  CHECK(coboundary_space(catalog_get("sts15-7").system, 1).dim == 13);
  CHECK(coboundary_space(catalog_get("sts15-61").system, 1).dim == 14);
  CHECK(coboundary_space(catalog_get("sts15-80").system, 1).dim == 15);
}

TEST_CASE("every coboundary reduces to zero") {
  std::mt19937 rng(13);
  const auto& q = catalog_get("sts13-cyclic").system;
  auto space = coboundary_space(q, 1);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<std::uint32_t> phi(q.v() + 1, 0);
    for (int p = 1; p <= q.v(); ++p) phi[p] = rng() % 2;
    CHECK(space.contains(coboundary(phi, q, 1).code));
  }
}

TEST_CASE("B^2 is closed under XOR and the span test matches reduction") {
  const auto& q = catalog_get("sts9").system;
  auto space = coboundary_space(q, 1);
  // exhaustive for b = 12: two codes share a representative iff their XOR
  // lies in the span
  std::set<std::uint64_t> reps;
  for (std::uint64_t x = 0; x < 4096; ++x)
    reps.insert(space.reduce(Code::from_u64(x)).to_u64());
  CHECK(reps.size() == 8);
  std::mt19937 rng(17);
  for (int trial = 0; trial < 500; ++trial) {
    Code a = Code::from_u64(rng() % 4096);
    Code b = Code::from_u64(rng() % 4096);
    bool same = space.reduce(a) == space.reduce(b);
    CHECK(same == space.contains(a ^ b));
  }
}

TEST_CASE("coset representative streams") {
  const auto& sts9 = catalog_get("sts9").system;
  auto space9 = coboundary_space(sts9, 1);
  CosetRepStream stream(space9, 3);
  std::vector<Code> reps;
  while (stream.next_block(reps)) {
  }
  CHECK(reps.size() == 8);
  CHECK(space9.coset_count() * (std::uint64_t(1) << space9.dim) ==
        ext_count(1, sts9.b()));
  // ascending minimum representatives
  for (size_t i = 0; i + 1 < reps.size(); ++i) CHECK(reps[i] < reps[i + 1]);
  for (const Code& rep : reps) CHECK(space9.reduce(rep) == rep);

  CHECK(coboundary_space(catalog_get("sts13-cyclic").system, 1).coset_count() ==
        8192);
  CHECK(coboundary_space(test::fano(), 2).coset_count() == 64);

  // reduction lands on the minimum element of the coset (exhaustive b=12)
  std::mt19937 rng(19);
  for (int trial = 0; trial < 20; ++trial) {
    Code x = Code::from_u64(rng() % 4096);
    Code reduced = space9.reduce(x);
    CHECK(reduced <= x);
  }
}

TEST_CASE("rep_at and coset_index are inverse") {
  auto space = coboundary_space(catalog_get("sts15-2").system, 1);
  std::mt19937 rng(29);
  for (int trial = 0; trial < 100; ++trial) {
    std::uint64_t k = rng() % space.coset_count();
    Code rep = space.rep_at(k);
    CHECK(space.coset_index(rep) == k);
    CHECK(space.reduce(rep) == rep);
  }
}
