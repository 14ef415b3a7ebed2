#pragma once

#include <array>
#include <optional>
#include <vector>

#include "steiner/error.hpp"

namespace steiner {

using Triple = std::array<int, 3>;

// A 2-(v,3,1) design on points {0..v-1}.  Triples are stored sorted and in
// lexicographic order; pair lookups are O(1) via a v*v table.
class SteinerTripleSystem {
public:
  static bool admissible(int v) { return v > 0 && (v % 6 == 1 || v % 6 == 3); }

  int v() const { return v_; }
  int b() const { return static_cast<int>(triples_.size()); }
  const std::vector<Triple>& triples() const { return triples_; }
  const Triple& triple(int i) const { return triples_[i]; }

  // Index of the triple containing {p,q}; Errc::same_point if p == q.
  int pair_triple(int p, int q) const;
  int third_point(int p, int q) const;
  const std::vector<int>& triples_through(int p) const { return through_[p]; }
  std::optional<int> triple_index(Triple t) const;  // t need not be sorted
  bool has_triple(Triple t) const { return triple_index(t).has_value(); }

private:
  friend SteinerTripleSystem validate_sts(int v, const std::vector<Triple>& raw);

  int v_ = 0;
  std::vector<Triple> triples_;
  std::vector<int> pair_triple_;  // v*v, -1 on the diagonal
  std::vector<int> third_;        // v*v
  std::vector<std::vector<int>> through_;
};

// Checks admissibility of v, point ranges, and exact pair coverage.
// Errors: not_admissible, bad_triple, pair_duplicated, pair_missing.
SteinerTripleSystem validate_sts(int v, const std::vector<Triple>& raw_triples);

// Six distinct points with {x,a,b}, {x,c,d}, {t,a,c}, {t,b,d} all triples.
struct PaschConfiguration {
  int x, a, b, c, d, t;
};

// Builds a configuration through x and t from the four remaining points,
// deriving the grouping into {x,a,b},{x,c,d} and the diagonal pairing from
// the system itself.  Errc::not_a_pasch if the points do not form one.
PaschConfiguration pasch_from_points(const SteinerTripleSystem& sts, int x,
                                     int a, int b, int c, int d, int t);

// All Pasch configurations, one per 4-set of triples, ordered by their
// sorted triple-index quadruples.
std::vector<PaschConfiguration> find_pasch_configurations(
    const SteinerTripleSystem& sts);

// Number of Pasch configurations through each point.
std::vector<int> pasch_point_counts(const SteinerTripleSystem& sts);

// Replaces {x,a,b},{x,c,d},{t,a,c},{t,b,d} with {x,a,c},{x,b,d},{t,a,b},
// {t,c,d}.  Involution.  Errc::not_a_pasch if the four triples are absent.
SteinerTripleSystem pasch_switch(const SteinerTripleSystem& sts,
                                 const PaschConfiguration& cfg);

// x is Veblen iff every two triples through x close to a Pasch configuration
// under both diagonal pairings.
bool is_veblen_point(const SteinerTripleSystem& sts, int x);
std::vector<int> veblen_points(const SteinerTripleSystem& sts);

// Largest possible Veblen count for order v: the projective order-v system
// (v = 2^m - 1) has all v points Veblen; otherwise the count is of the form
// 2^c - 1 with (v+1)/2^c = 2 or 4 (mod 6), and a non-projective system is
// further bounded by (v-7)/8.
int max_veblen_count(int v, bool projective_allowed);

// Applies the point bijection p -> perm[p] and revalidates.
SteinerTripleSystem relabel(const SteinerTripleSystem& sts,
                            const std::vector<int>& perm);

}  // namespace steiner
