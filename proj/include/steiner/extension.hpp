#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "steiner/autgrp.hpp"
#include "steiner/factor.hpp"
#include "steiner/loop.hpp"
#include "steiner/sts.hpp"

namespace steiner {

// A central extension of GF(2)^t by the Steiner loop of `quotient`, defined
// by a factor system.
struct ExtensionSpec {
  SteinerTripleSystem quotient;
  int t = 1;
  FactorSystem fs;
};

ExtensionSpec make_spec(const SteinerTripleSystem& quotient, int t, Code code);

// Loop on pairs (P,x) with (P,x)(Q,y) = (PQ, x+y+f(P,Q)); element (P,x) is
// linearized as (index of P) * 2^t + x, identity at 0.
// Errc::dimension_mismatch when fs does not match (t, b).
SteinerLoop build_extension(const ExtensionSpec& spec);

// The derived system of order (v+1)*2^t - 1.
SteinerTripleSystem extension_sts(const ExtensionSpec& spec);

// Relabeling of the extension's points for t = 1 that lists the kernel point
// first: (identity,1) -> 0, (P_i,0) -> i, (P_i,1) -> v+i (1-based i).
std::vector<int> kernel_first_labels(int quotient_v);

// Quotient points P that are Veblen in the quotient and satisfy
// f(P,Q)+f(PQ,R) = f(Q,R)+f(P,QR) for all Q,R, i.e. whose lifts (P,x) are
// Veblen points of the extension beyond the kernel.
std::vector<int> extra_veblen_points(const ExtensionSpec& spec);

// True iff every kernel element is central in the built loop.  Holds for
// every spec; a false return indicates a bug.
bool verify_centrality(const ExtensionSpec& spec);

struct ClassificationReport {
  std::string quotient_name;
  int t = 1;
  int b = 0;
  int target_veblen = 1;
  int ext_log2 = 0;
  std::uint64_t ext_count = 0;  // 0 when t*b > 63
  int b2_dim = 0;
  std::uint64_t b2_size = 0;
  std::uint64_t coset_count = 0;
  std::uint64_t aut_order = 0;
  std::uint64_t kernel_aut_order = 1;
  std::uint64_t orbit_count = 0;
  std::uint64_t survivor_count = 0;

  struct Rep {
    Code code;
    std::uint64_t orbit_size = 0;
    int veblen_count = 0;
    bool survivor = false;
  };
  std::vector<Rep> representatives;
};

struct ClassifyOptions {
  int workers = 1;
  std::uint64_t block_size = std::uint64_t(1) << 16;
  bool long_running = false;
  std::string checkpoint_path;
  std::uint64_t checkpoint_every = std::uint64_t(1) << 20;
  // Quotient automorphisms to act with; searched when absent.  Generators
  // that do not preserve the triples are rejected.
  std::optional<std::vector<Perm>> generators;
};

// Full pipeline: coboundary space -> coset representatives -> orbits ->
// extra-Veblen filter (for quotients with Veblen points) -> direct Veblen
// verification of every orbit representative.
// Errc::unsupported when t*b > 26 and long_running is not set;
// Errc::bad_argument unless target_veblen == 2^t - 1.
ClassificationReport classify(const SteinerTripleSystem& quotient,
                              const std::string& quotient_name, int t,
                              int target_veblen,
                              const ClassifyOptions& options = {});

}  // namespace steiner
