#include "steiner/loop.hpp"

#include <string>

namespace steiner {

void SteinerLoop::check_steiner() const {
  int n = n_;
  for (int x = 0; x < n; ++x) {
    if (mul(omega, x) != x || mul(x, omega) != x)
      fail(Errc::not_steiner, "identity law fails at " + std::to_string(x));
    if (mul(x, x) != omega)
      fail(Errc::not_steiner, "exponent-2 law fails at " + std::to_string(x));
  }
  for (int x = 0; x < n; ++x) {
    std::vector<bool> seen(n, false);
    for (int y = 0; y < n; ++y) {
      int z = mul(x, y);
      if (z < 0 || z >= n || seen[z])
        fail(Errc::not_steiner, "row " + std::to_string(x) +
                                    " is not a permutation");
      seen[z] = true;
      if (mul(y, x) != z)
        fail(Errc::not_steiner, "commutativity fails at (" +
                                    std::to_string(x) + "," +
                                    std::to_string(y) + ")");
    }
  }
}

SteinerLoop loop_from_sts(const SteinerTripleSystem& sts) {
  int n = sts.v() + 1;
  std::vector<int> table(static_cast<size_t>(n) * n, 0);
  for (int x = 0; x < n; ++x) {
    table[x] = x;            // omega * x
    table[x * n] = x;        // x * omega
    table[x * n + x] = 0;    // x * x
  }
  for (int p = 0; p < sts.v(); ++p)
    for (int q = 0; q < sts.v(); ++q)
      if (p != q) table[(p + 1) * n + (q + 1)] = sts.third_point(p, q) + 1;
  return SteinerLoop(n, std::move(table));
}

SteinerTripleSystem sts_from_loop(const SteinerLoop& loop) {
  loop.check_steiner();
  int v = loop.order() - 1;
  std::vector<Triple> triples;
  for (int x = 1; x <= v; ++x) {
    for (int y = x + 1; y <= v; ++y) {
      int z = loop.mul(x, y);
      if (z > y) triples.push_back({x - 1, y - 1, z - 1});
    }
  }
  return validate_sts(v, triples);
}

std::vector<int> center(const SteinerLoop& loop) {
  int n = loop.order();
  std::vector<int> out;
  for (int z = 0; z < n; ++z) {
    bool central = true;
    for (int x = 0; x < n && central; ++x) {
      for (int y = 0; y < n && central; ++y) {
        int xy = loop.mul(x, y);
        if (loop.mul(z, xy) != loop.mul(loop.mul(z, x), y)) central = false;
        else if (loop.mul(x, loop.mul(z, y)) != loop.mul(loop.mul(x, z), y))
          central = false;
        else if (loop.mul(xy, z) != loop.mul(x, loop.mul(y, z)))
          central = false;
      }
    }
    if (central) out.push_back(z);
  }
  return out;
}

bool is_associative(const SteinerLoop& loop) {
  int n = loop.order();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (loop.mul(loop.mul(x, y), z) != loop.mul(x, loop.mul(y, z)))
          return false;
  return true;
}

}  // namespace steiner
