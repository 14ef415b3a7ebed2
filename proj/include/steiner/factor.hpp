#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "steiner/bits.hpp"
#include "steiner/sts.hpp"

namespace steiner {

// One 2-subset per triple: the lexicographically smallest pair of each
// triple, with triples in their canonical (lexicographic) order.  A factor
// system is determined by its values on these pairs.
struct FundamentalPairs {
  std::vector<std::array<int, 2>> pairs;
  int b() const { return static_cast<int>(pairs.size()); }
};

FundamentalPairs fundamental_pairs(const SteinerTripleSystem& sts);

// GF(2)^t values are held in an unsigned with coordinate j at bit (t-1-j),
// so the first coordinate is the most significant bit of the field.
//
// Code layout: fundamental pair i (0-based) occupies the t bits starting at
// bit t*(b-1-i); i.e. pair 0 sits in the top field and pair b-1 in the low
// field, matching the concatenated binary vector (n_1,...,n_b) read as an
// integer.
struct FactorSystem {
  Code code;
  int t = 1;
  int b = 0;

  static int field_base(int t, int b, int i) { return t * (b - 1 - i); }
  std::uint32_t field(int i) const;
  void set_field(int i, std::uint32_t value);
};

FactorSystem encode(const std::vector<std::uint32_t>& values, int t);
std::vector<std::uint32_t> decode(const FactorSystem& fs);

// Value of the factor system on loop elements P,Q of the quotient
// (0 = identity, p+1 = point p): zero if either is the identity or P == Q,
// otherwise the stored value of the triple containing the pair.
std::uint32_t evaluate(const FactorSystem& fs, const FundamentalPairs& fp,
                       const SteinerTripleSystem& quotient, int P, int Q);

// |Ext| = (2^t)^b.  Errc::unsupported when t*b > 63.
std::uint64_t ext_count(int t, int b);

// Coboundary of phi (indexed by loop element, phi[0] must be zero): the
// factor system with value phi(P)+phi(Q)+phi(PQ) on each fundamental pair.
FactorSystem coboundary(const std::vector<std::uint32_t>& phi,
                        const SteinerTripleSystem& quotient, int t);

// XOR basis of the coboundary space B^2, fully back-substituted so each
// pivot bit occurs in exactly one basis vector.  reduce() then maps a code
// to the minimum element of its coset.
struct CoboundarySpace {
  int t = 1;
  int b = 0;
  int dim = 0;
  std::vector<Code> basis;    // pivots strictly descending
  std::vector<int> pivots;
  std::vector<int> free_bits;  // non-pivot positions, ascending

  Code reduce(Code c) const;
  bool contains(Code c) const { return reduce(c).is_zero(); }
  std::uint64_t coset_count() const;
  // k-th coset representative in ascending order (bits of k spread over the
  // free positions), and its inverse.
  Code rep_at(std::uint64_t k) const;
  std::uint64_t coset_index(const Code& reduced) const;
};

CoboundarySpace coboundary_space(const SteinerTripleSystem& quotient, int t);

// Ascending stream of coset representatives, O(block_size) memory.
class CosetRepStream {
public:
  CosetRepStream(const CoboundarySpace& space, std::uint64_t block_size);

  std::optional<Code> next();
  // Appends up to block_size codes; returns false once exhausted.
  bool next_block(std::vector<Code>& out);
  std::uint64_t remaining() const { return total_ - next_; }

private:
  const CoboundarySpace* space_;
  std::uint64_t next_ = 0;
  std::uint64_t total_;
  std::uint64_t block_;
};

}  // namespace steiner
