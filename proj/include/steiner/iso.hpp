#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "steiner/sts.hpp"

namespace steiner {

// Enumerates point bijections mapping triples of a onto triples of b, in a
// deterministic order; stops early when the callback returns false.
// Errc::size_mismatch if the orders differ.
void for_each_isomorphism(const SteinerTripleSystem& a,
                          const SteinerTripleSystem& b,
                          const std::function<bool(const std::vector<int>&)>& fn);

// Backtracking search with triple propagation.  Returns a point bijection
// mapping triples of a onto triples of b, or nullopt.
std::optional<std::vector<int>> are_isomorphic(const SteinerTripleSystem& a,
                                               const SteinerTripleSystem& b);

// Canonical relabeling, independent of the input labeling: the minimum
// triple list over a seed-pair/injection family of labelings.  Two systems
// are isomorphic iff their canonical forms are equal.
std::vector<Triple> canonical_form(const SteinerTripleSystem& sts);

}  // namespace steiner
