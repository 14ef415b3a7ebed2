#pragma once

#include <vector>

#include "steiner/sts.hpp"

namespace steiner {

// Multiplication table of a Steiner loop: commutative, exponent 2, with
// identity at index 0.  Element i+1 corresponds to point i of the system.
class SteinerLoop {
public:
  static constexpr int omega = 0;

  SteinerLoop(int n, std::vector<int> table) : n_(n), table_(std::move(table)) {
    if (n_ <= 0 || table_.size() != static_cast<size_t>(n_) * n_)
      fail(Errc::bad_argument, "table shape does not match order");
  }

  int order() const { return n_; }
  int mul(int x, int y) const { return table_[x * n_ + y]; }

  // Throws Errc::not_steiner naming the first violated law (identity,
  // exponent 2, commutativity, or the quasigroup row condition).
  void check_steiner() const;

private:
  int n_;
  std::vector<int> table_;
};

SteinerLoop loop_from_sts(const SteinerTripleSystem& sts);

// Inverse of loop_from_sts; checks the Steiner loop laws first.
SteinerTripleSystem sts_from_loop(const SteinerLoop& loop);

// Elements associating with every pair, in all three bracketings.  Always
// contains omega; forms an elementary abelian 2-subgroup.
std::vector<int> center(const SteinerLoop& loop);

bool is_associative(const SteinerLoop& loop);
inline bool is_group(const SteinerLoop& loop) { return is_associative(loop); }

}  // namespace steiner
