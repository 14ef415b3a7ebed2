#include <doctest.h>

#include <algorithm>

#include "steiner/catalog.hpp"
#include "steiner/loop.hpp"
#include "test_util.hpp"

using namespace steiner;

TEST_CASE("loop_from_sts builds a Steiner loop") {
  for (const char* name : {"sts9", "fano", "sts13-cyclic", "sts19-S0"}) {
    const auto& sts = catalog_get(name).system;
    auto loop = loop_from_sts(sts);
    CHECK(loop.order() == sts.v() + 1);
    CHECK_NOTHROW(loop.check_steiner());
    CHECK(loop.mul(SteinerLoop::omega, SteinerLoop::omega) ==
          SteinerLoop::omega);
  }
}

TEST_CASE("sts_from_loop inverts loop_from_sts") {
  for (const char* name : {"sts9", "fano", "sts15-61"}) {
    const auto& sts = catalog_get(name).system;
    auto back = sts_from_loop(loop_from_sts(sts));
    CHECK(back.triples() == sts.triples());
  }
  auto loop10 = loop_from_sts(catalog_get("sts9").system);
  CHECK(sts_from_loop(loop10).b() == 12);

  // and the loop direction: the rebuilt table is identical
  auto again = loop_from_sts(sts_from_loop(loop10));
  CHECK(again.order() == loop10.order());
  for (int x = 0; x < loop10.order(); ++x)
    for (int y = 0; y < loop10.order(); ++y)
      CHECK(again.mul(x, y) == loop10.mul(x, y));
}

TEST_CASE("sts_from_loop rejects non-Steiner tables") {
  // break the exponent-2 law
  std::vector<int> table(4 * 4);
  for (int x = 0; x < 4; ++x)
    for (int y = 0; y < 4; ++y) table[x * 4 + y] = (x + y) % 4;
  try {
    sts_from_loop(SteinerLoop(4, table));
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::not_steiner);
  }
}

TEST_CASE("center of the catalog loops") {
  auto center_points = [](const SteinerTripleSystem& sts) {
    std::vector<int> out;
    for (int z : center(loop_from_sts(sts)))
      if (z != SteinerLoop::omega) out.push_back(z - 1);
    return out;
  };

  CHECK(center_points(catalog_get("sts19-S0").system) == std::vector<int>{0});
  CHECK(center(loop_from_sts(test::fano())).size() == 8);
  CHECK(center(loop_from_sts(catalog_get("sts9").system)) ==
        std::vector<int>{SteinerLoop::omega});
}

TEST_CASE("non-trivial central elements are exactly the Veblen points") {
  auto check = [](const SteinerTripleSystem& sts) {
    auto loop = loop_from_sts(sts);
    std::vector<int> central;
    for (int z : center(loop))
      if (z != SteinerLoop::omega) central.push_back(z - 1);
    CHECK(central == veblen_points(sts));
  };
  for (const auto& name : catalog_names()) check(catalog_get(name).system);
  // up to order 31 including the programmatic systems
  check(ag(3));
  check(pg(4));
}

TEST_CASE("center is a subgroup containing omega") {
  for (const char* name : {"sts9", "sts15-2", "sts19-S2"}) {
    auto loop = loop_from_sts(catalog_get(name).system);
    auto z = center(loop);
    CHECK(std::find(z.begin(), z.end(), SteinerLoop::omega) != z.end());
    for (int a : z)
      for (int b : z)
        CHECK(std::find(z.begin(), z.end(), loop.mul(a, b)) != z.end());
  }
}

TEST_CASE("is_group detects associativity") {
  CHECK(is_group(loop_from_sts(test::fano())));
  CHECK(is_group(loop_from_sts(pg(3))));
  CHECK_FALSE(is_group(loop_from_sts(catalog_get("sts9").system)));
  CHECK_FALSE(is_group(loop_from_sts(catalog_get("sts15-2").system)));
}

TEST_CASE("is_group iff center is everything") {
  for (const char* name : {"sts9", "fano", "sts15-1", "sts13-cyclic"}) {
    auto loop = loop_from_sts(catalog_get(name).system);
    CHECK(is_group(loop) ==
          (center(loop).size() == static_cast<size_t>(loop.order())));
  }
}
