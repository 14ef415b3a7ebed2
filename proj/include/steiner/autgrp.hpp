#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "steiner/factor.hpp"
#include "steiner/perm.hpp"
#include "steiner/sts.hpp"

namespace steiner {

struct AutomorphismGroup {
  std::vector<Perm> generators;
  std::uint64_t order = 1;
};

// Full automorphism group by backtracking over point images with triple
// propagation.  Errc::search_budget_exceeded for v > 15.
AutomorphismGroup automorphism_group(const SteinerTripleSystem& sts);

// Published generating sets for the named catalog quotients:
//   sts13-noncyclic: x -> 3x (mod 13) and (6 8)(2 11)(3 9)(4 12)(5 7), S_3;
//   sts13-cyclic:    x -> x+1 and x -> 3x (mod 13), F_39;
//   sts9 / sts9-coords: Aff(2,3); fano: GL(3,2); pg32: GL(4,2).
AutomorphismGroup known_generators(const std::string& name);

bool is_sts_automorphism(const SteinerTripleSystem& sts, const Perm& beta);

// sigma[i] = index of the triple beta maps triple i onto.
// Errc::not_an_automorphism if beta does not preserve triples.
Perm induced_triple_permutation(const Perm& beta,
                                const SteinerTripleSystem& sts);

// Invertible t x t matrix over GF(2) acting on packed values: rows[i] is
// the mask of input bits feeding output bit i.
struct KernelAutomorphism {
  int t = 1;
  std::array<std::uint32_t, 8> rows{};

  std::uint32_t apply(std::uint32_t value) const;
  bool invertible() const;
};

KernelAutomorphism kernel_identity(int t);
// Elementary transvections; they generate GL(t,2).
std::vector<KernelAutomorphism> kernel_generators(int t);
std::uint64_t kernel_group_order(int t);  // |GL(t,2)|

// The action (alpha,beta)(f) = alpha f beta^{-1}: field i of the result is
// alpha applied to field sigma^{-1}(i) of f, where sigma is induced by beta.
// Errc::dimension_mismatch when shapes disagree.
FactorSystem act(const KernelAutomorphism& alpha, const Perm& beta,
                 const FactorSystem& fs, const SteinerTripleSystem& quotient);

// Precompiled generator for the orbit scan.
struct GroupAction {
  std::vector<int> source_field;          // result field i reads this field
  std::array<std::uint8_t, 256> value_map{};
};

GroupAction compile_action(const KernelAutomorphism& alpha, const Perm& beta,
                           const SteinerTripleSystem& quotient);
Code apply_action(const GroupAction& g, const Code& code, int t, int b);

struct OrbitRecord {
  Code rep;                // minimum coset representative in the orbit
  std::uint64_t size = 0;  // number of cosets in the orbit
};

struct OrbitOptions {
  int workers = 1;
  std::string checkpoint_path;          // empty: no checkpointing
  std::uint64_t checkpoint_every = 1 << 20;  // scanned cosets between writes
  std::uint64_t stop_after_orbits = 0;  // 0: run to completion
};

struct OrbitScanResult {
  std::vector<OrbitRecord> orbits;
  bool complete = true;
};

// Partitions the coset representatives of `space` into orbits under the
// generated group, scanning cosets in ascending order so each orbit is
// reported by its minimum representative.  Resumes from the checkpoint file
// when one is present and matches (quotient digest, t, b, dim).
OrbitScanResult orbit_scan(const CoboundarySpace& space,
                           const std::vector<GroupAction>& actions,
                           std::uint64_t quotient_digest,
                           const OrbitOptions& options = {});

// Convenience wrapper matching the classification pipeline: builds actions
// from point generators (and GL(t,2) generators when t > 1).
std::vector<OrbitRecord> orbits(const CoboundarySpace& space,
                                const AutomorphismGroup& aut,
                                const SteinerTripleSystem& quotient,
                                const OrbitOptions& options = {});

std::uint64_t sts_digest(const SteinerTripleSystem& sts, int t);

}  // namespace steiner
