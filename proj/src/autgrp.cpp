#include "steiner/autgrp.hpp"

#include <atomic>
#include <bit>
#include <filesystem>
#include <fstream>
#include <functional>

#include "steiner/catalog.hpp"
#include "steiner/iso.hpp"
#include "steiner/parallel.hpp"

namespace steiner {

AutomorphismGroup automorphism_group(const SteinerTripleSystem& sts) {
  if (sts.v() > 15)
    fail(Errc::search_budget_exceeded,
         "automorphism search is limited to v <= 15");
  std::vector<Perm> elements;
  for_each_isomorphism(sts, sts, [&](const std::vector<int>& img) {
    elements.push_back(img);
    return true;
  });
  AutomorphismGroup group;
  group.order = elements.size();
  group.generators = reduce_generators(elements, sts.v());
  return group;
}

bool is_sts_automorphism(const SteinerTripleSystem& sts, const Perm& beta) {
  if (static_cast<int>(beta.size()) != sts.v() || !perm_valid(beta))
    return false;
  for (const Triple& t : sts.triples())
    if (!sts.has_triple({beta[t[0]], beta[t[1]], beta[t[2]]})) return false;
  return true;
}

Perm induced_triple_permutation(const Perm& beta,
                                const SteinerTripleSystem& sts) {
  if (static_cast<int>(beta.size()) != sts.v() || !perm_valid(beta))
    fail(Errc::not_an_automorphism, "not a permutation of the points");
  Perm sigma(sts.b());
  for (int i = 0; i < sts.b(); ++i) {
    const Triple& t = sts.triple(i);
    auto idx = sts.triple_index({beta[t[0]], beta[t[1]], beta[t[2]]});
    if (!idx)
      fail(Errc::not_an_automorphism,
           "permutation does not preserve triples");
    sigma[i] = *idx;
  }
  return sigma;
}

namespace {

Perm perm_from_fn(int n, const std::function<int(int)>& fn) {
  Perm p(n);
  for (int x = 0; x < n; ++x) p[x] = fn(x);
  return p;
}

// GL(m,2) acting on the nonzero vectors, as permutations of labels v-1.
std::vector<Perm> linear_point_generators(int m) {
  int count = (1 << m) - 1;
  std::vector<Perm> gens;
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      if (i == j) continue;
      // transvection: bit i += bit j
      gens.push_back(perm_from_fn(count, [&](int label) {
        int vec = label + 1;
        if ((vec >> j) & 1) vec ^= 1 << i;
        return vec - 1;
      }));
    }
  }
  return gens;
}

// Aff(2,3) on AG(2,3) grid labels p = col + 3*row.
std::vector<Perm> affine_grid_generators() {
  auto map = [](const std::function<std::pair<int, int>(int, int)>& fn) {
    return perm_from_fn(9, [&](int p) {
      auto [c, r] = fn(p % 3, p / 3);
      return (c % 3) + 3 * (r % 3);
    });
  };
  std::vector<Perm> gens;
  gens.push_back(map([](int c, int r) { return std::pair{c + 1, r}; }));
  gens.push_back(map([](int c, int r) { return std::pair{c, r + 1}; }));
  // elementary GL(2,3) generators: two transvections and a scaling
  gens.push_back(map([](int c, int r) { return std::pair{c + r, r}; }));
  gens.push_back(map([](int c, int r) { return std::pair{c, r + c}; }));
  gens.push_back(map([](int c, int r) { return std::pair{2 * c, r}; }));
  return gens;
}

}  // namespace

AutomorphismGroup known_generators(const std::string& name) {
  AutomorphismGroup group;
  if (name == "sts13-noncyclic" || name == "sts13-1") {
    group.generators.push_back(perm_from_fn(13, [](int x) { return 3 * x % 13; }));
    group.generators.push_back(
        perm_from_cycles("(6 8)(2 11)(3 9)(4 12)(5 7)", 13));
    group.order = closure_order(group.generators, 13);
    return group;
  }
  if (name == "sts13-cyclic" || name == "sts13-2") {
    group.generators.push_back(perm_from_fn(13, [](int x) { return (x + 1) % 13; }));
    group.generators.push_back(perm_from_fn(13, [](int x) { return 3 * x % 13; }));
    group.order = closure_order(group.generators, 13);
    return group;
  }
  if (name == "fano") {
    group.generators = linear_point_generators(3);
    group.order = closure_order(group.generators, 7);
    return group;
  }
  if (name == "pg32") {
    group.generators = linear_point_generators(4);
    group.order = closure_order(group.generators, 15);
    return group;
  }
  if (name == "sts9-coords" || name == "sts9-example") {
    group.generators = affine_grid_generators();
    group.order = closure_order(group.generators, 9);
    return group;
  }
  if (name == "sts9") {
    // conjugate the Aff(2,3) generators by an isomorphism onto the
    // reference labeling
    auto iso = are_isomorphic(catalog_get("sts9-coords").system,
                              catalog_get("sts9").system);
    if (!iso) fail(Errc::internal, "catalog STS(9) variants must agree");
    Perm inv = perm_inverse(*iso);
    for (const Perm& g : affine_grid_generators())
      group.generators.push_back(perm_mul(*iso, perm_mul(g, inv)));
    group.order = closure_order(group.generators, 9);
    return group;
  }
  fail(Errc::unknown_name, "no known generators for '" + name + "'");
}

std::uint32_t KernelAutomorphism::apply(std::uint32_t value) const {
  std::uint32_t out = 0;
  for (int i = 0; i < t; ++i)
    out |= static_cast<std::uint32_t>(std::popcount(rows[i] & value) & 1) << i;
  return out;
}

bool KernelAutomorphism::invertible() const {
  std::array<std::uint32_t, 8> m = rows;
  int rank = 0;
  for (int col = 0; col < t; ++col) {
    int pivot = -1;
    for (int r = rank; r < t; ++r)
      if ((m[r] >> col) & 1) {
        pivot = r;
        break;
      }
    if (pivot < 0) return false;
    std::swap(m[rank], m[pivot]);
    for (int r = 0; r < t; ++r)
      if (r != rank && ((m[r] >> col) & 1)) m[r] ^= m[rank];
    ++rank;
  }
  return rank == t;
}

KernelAutomorphism kernel_identity(int t) {
  KernelAutomorphism a;
  a.t = t;
  for (int i = 0; i < t; ++i) a.rows[i] = 1u << i;
  return a;
}

std::vector<KernelAutomorphism> kernel_generators(int t) {
  std::vector<KernelAutomorphism> gens;
  for (int i = 0; i < t; ++i)
    for (int j = 0; j < t; ++j) {
      if (i == j) continue;
      KernelAutomorphism a = kernel_identity(t);
      a.rows[i] |= 1u << j;
      gens.push_back(a);
    }
  return gens;
}

std::uint64_t kernel_group_order(int t) {
  std::uint64_t order = 1;
  for (int i = 0; i < t; ++i)
    order *= (std::uint64_t(1) << t) - (std::uint64_t(1) << i);
  return order;
}

FactorSystem act(const KernelAutomorphism& alpha, const Perm& beta,
                 const FactorSystem& fs, const SteinerTripleSystem& quotient) {
  if (alpha.t != fs.t || static_cast<int>(beta.size()) != quotient.v() ||
      fs.b != quotient.b())
    fail(Errc::dimension_mismatch, "action shapes do not match");
  GroupAction g = compile_action(alpha, beta, quotient);
  return FactorSystem{apply_action(g, fs.code, fs.t, fs.b), fs.t, fs.b};
}

GroupAction compile_action(const KernelAutomorphism& alpha, const Perm& beta,
                           const SteinerTripleSystem& quotient) {
  GroupAction g;
  // (f beta^{-1}) on triple T_i reads f on beta^{-1}(T_i)
  g.source_field = induced_triple_permutation(perm_inverse(beta), quotient);
  for (int v = 0; v < (1 << alpha.t); ++v)
    g.value_map[v] = static_cast<std::uint8_t>(alpha.apply(v));
  return g;
}

Code apply_action(const GroupAction& g, const Code& code, int t, int b) {
  FactorSystem in{code, t, b};
  FactorSystem out{{}, t, b};
  for (int i = 0; i < b; ++i)
    out.set_field(i, g.value_map[in.field(g.source_field[i])]);
  return out.code;
}

std::uint64_t sts_digest(const SteinerTripleSystem& sts, int t) {
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&](std::uint64_t x) {
    h ^= x;
    h *= 1099511628211ull;
  };
  mix(static_cast<std::uint64_t>(sts.v()));
  mix(static_cast<std::uint64_t>(t));
  for (const Triple& tr : sts.triples())
    for (int p : tr) mix(static_cast<std::uint64_t>(p) + 1);
  return h;
}

namespace {

constexpr std::uint64_t kCheckpointMagic = 0x53544f5242435031ull;  // "STORBCP1"
constexpr std::uint32_t kCheckpointVersion = 1;

struct ScanState {
  std::uint64_t scan_pos = 0;
  std::vector<std::uint64_t> visited;
  std::vector<OrbitRecord> records;
};

void write_u64(std::ostream& out, std::uint64_t x) {
  out.write(reinterpret_cast<const char*>(&x), sizeof x);
}

std::uint64_t read_u64(std::istream& in) {
  std::uint64_t x = 0;
  in.read(reinterpret_cast<char*>(&x), sizeof x);
  return x;
}

void save_checkpoint(const std::string& path, std::uint64_t digest, int t,
                     int b, int dim, const ScanState& state) {
  std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) fail(Errc::io_error, "cannot write checkpoint: " + tmp);
    write_u64(out, kCheckpointMagic);
    write_u64(out, kCheckpointVersion);
    write_u64(out, digest);
    write_u64(out, static_cast<std::uint64_t>(t));
    write_u64(out, static_cast<std::uint64_t>(b));
    write_u64(out, static_cast<std::uint64_t>(dim));
    write_u64(out, state.scan_pos);
    write_u64(out, state.visited.size());
    for (std::uint64_t w : state.visited) write_u64(out, w);
    write_u64(out, state.records.size());
    for (const OrbitRecord& r : state.records) {
      write_u64(out, r.rep.lo);
      write_u64(out, r.rep.hi);
      write_u64(out, r.size);
    }
    if (!out) fail(Errc::io_error, "short write on checkpoint: " + tmp);
  }
  std::filesystem::rename(tmp, path);
}

bool load_checkpoint(const std::string& path, std::uint64_t digest, int t,
                     int b, int dim, std::uint64_t words, ScanState& state) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  if (read_u64(in) != kCheckpointMagic || read_u64(in) != kCheckpointVersion)
    fail(Errc::io_error, "unrecognized checkpoint file: " + path);
  if (read_u64(in) != digest || read_u64(in) != static_cast<std::uint64_t>(t) ||
      read_u64(in) != static_cast<std::uint64_t>(b) ||
      read_u64(in) != static_cast<std::uint64_t>(dim))
    fail(Errc::io_error, "checkpoint does not match this run: " + path);
  state.scan_pos = read_u64(in);
  if (read_u64(in) != words)
    fail(Errc::io_error, "checkpoint bitmap size mismatch: " + path);
  state.visited.resize(words);
  for (std::uint64_t i = 0; i < words; ++i) state.visited[i] = read_u64(in);
  std::uint64_t n = read_u64(in);
  state.records.resize(n);
  for (std::uint64_t i = 0; i < n; ++i) {
    state.records[i].rep.lo = read_u64(in);
    state.records[i].rep.hi = read_u64(in);
    state.records[i].size = read_u64(in);
  }
  if (!in) fail(Errc::io_error, "truncated checkpoint: " + path);
  return true;
}

}  // namespace

OrbitScanResult orbit_scan(const CoboundarySpace& space,
                           const std::vector<GroupAction>& actions,
                           std::uint64_t quotient_digest,
                           const OrbitOptions& options) {
  std::uint64_t count = space.coset_count();
  std::uint64_t words = (count + 63) / 64;

  ScanState state;
  state.visited.assign(words, 0);
  if (!options.checkpoint_path.empty())
    load_checkpoint(options.checkpoint_path, quotient_digest, space.t, space.b,
                    space.dim, words, state);

  // The bitmap doubles as the concurrent claim structure during BFS.
  auto is_visited = [&](std::uint64_t k) {
    std::atomic_ref<std::uint64_t> word(state.visited[k >> 6]);
    return (word.load(std::memory_order_relaxed) >> (k & 63)) & 1u;
  };
  auto claim = [&](std::uint64_t k) {
    std::atomic_ref<std::uint64_t> word(state.visited[k >> 6]);
    std::uint64_t bit = std::uint64_t(1) << (k & 63);
    return (word.fetch_or(bit, std::memory_order_relaxed) & bit) == 0;
  };

  int workers = std::max(1, options.workers);
  std::uint64_t since_checkpoint = 0;

  for (std::uint64_t k = state.scan_pos; k < count; ++k) {
    ++since_checkpoint;
    if (is_visited(k)) continue;
    claim(k);
    Code seed = space.rep_at(k);
    std::uint64_t orbit_size = 1;
    std::vector<Code> frontier{seed};
    while (!frontier.empty()) {
      std::vector<std::vector<Code>> buffers(workers);
      std::atomic<std::uint64_t> found{0};
      parallel_chunks(
          frontier.size(), frontier.size() >= 128 ? workers : 1,
          [&](std::uint64_t lo, std::uint64_t hi, int w) {
            std::uint64_t local = 0;
            for (std::uint64_t i = lo; i < hi; ++i) {
              for (const GroupAction& g : actions) {
                Code moved =
                    apply_action(g, frontier[i], space.t, space.b);
                Code rep = space.reduce(moved);
                if (claim(space.coset_index(rep))) {
                  buffers[w].push_back(rep);
                  ++local;
                }
              }
            }
            found += local;
          });
      orbit_size += found.load();
      frontier.clear();
      for (auto& buf : buffers)
        frontier.insert(frontier.end(), buf.begin(), buf.end());
    }
    state.records.push_back({seed, orbit_size});
    state.scan_pos = k + 1;

    bool stop = options.stop_after_orbits != 0 &&
                state.records.size() >= options.stop_after_orbits;
    if (!options.checkpoint_path.empty() &&
        (stop || since_checkpoint >= options.checkpoint_every)) {
      save_checkpoint(options.checkpoint_path, quotient_digest, space.t,
                      space.b, space.dim, state);
      since_checkpoint = 0;
    }
    if (stop) return {std::move(state.records), false};
  }
  state.scan_pos = count;
  if (!options.checkpoint_path.empty())
    save_checkpoint(options.checkpoint_path, quotient_digest, space.t, space.b,
                    space.dim, state);
  return {std::move(state.records), true};
}

std::vector<OrbitRecord> orbits(const CoboundarySpace& space,
                                const AutomorphismGroup& aut,
                                const SteinerTripleSystem& quotient,
                                const OrbitOptions& options) {
  std::vector<GroupAction> actions;
  for (const Perm& beta : aut.generators)
    actions.push_back(compile_action(kernel_identity(space.t), beta, quotient));
  if (space.t > 1) {
    // Aut of the kernel is trivial only for t = 1.
    Perm id = perm_identity(quotient.v());
    for (const KernelAutomorphism& alpha : kernel_generators(space.t))
      actions.push_back(compile_action(alpha, id, quotient));
  }
  return orbit_scan(space, actions, sts_digest(quotient, space.t), options)
      .orbits;
}

}  // namespace steiner
