#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "steiner/error.hpp"

namespace steiner {

// Point permutation as an image array: perm[x] is the image of x.
using Perm = std::vector<int>;

Perm perm_identity(int n);
bool perm_valid(const Perm& p);
// Composition with g applied first: (f*g)(x) = f(g(x)).
Perm perm_mul(const Perm& f, const Perm& g);
Perm perm_inverse(const Perm& p);

// Cycle notation, e.g. "(6 8)(2 11)(3 9)(4 12)(5 7)".  Identity prints "()".
std::string perm_cycles(const Perm& p);
Perm perm_from_cycles(const std::string& text, int n);  // Errc::io_error

// Order of the generated group, by breadth-first closure.
std::uint64_t closure_order(const std::vector<Perm>& gens, int n);

// All elements of the generated group (identity first, then BFS order).
std::vector<Perm> closure_elements(const std::vector<Perm>& gens, int n);

// Greedy reduction: a small subset of `elements` generating the same group.
std::vector<Perm> reduce_generators(const std::vector<Perm>& elements, int n);

}  // namespace steiner
