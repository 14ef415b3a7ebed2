#include "steiner/extension.hpp"

#include <algorithm>
#include <atomic>

#include "steiner/parallel.hpp"

namespace steiner {

ExtensionSpec make_spec(const SteinerTripleSystem& quotient, int t, Code code) {
  return ExtensionSpec{quotient, t, FactorSystem{code, t, quotient.b()}};
}

SteinerLoop build_extension(const ExtensionSpec& spec) {
  const SteinerTripleSystem& Q = spec.quotient;
  if (spec.fs.t != spec.t || spec.fs.b != Q.b())
    fail(Errc::dimension_mismatch, "factor system does not match quotient");
  SteinerLoop lq = loop_from_sts(Q);
  int m = lq.order();        // v + 1 quotient elements
  int kt = 1 << spec.t;      // kernel size
  int n = m * kt;
  std::vector<int> table(static_cast<size_t>(n) * n);
  FundamentalPairs fp = fundamental_pairs(Q);
  for (int P = 0; P < m; ++P) {
    for (int R = 0; R < m; ++R) {
      int prod = lq.mul(P, R);
      std::uint32_t f = evaluate(spec.fs, fp, Q, P, R);
      for (int x = 0; x < kt; ++x)
        for (int y = 0; y < kt; ++y)
          table[(P * kt + x) * static_cast<size_t>(n) + (R * kt + y)] =
              prod * kt + (x ^ y ^ static_cast<int>(f));
    }
  }
  return SteinerLoop(n, std::move(table));
}

SteinerTripleSystem extension_sts(const ExtensionSpec& spec) {
  return sts_from_loop(build_extension(spec));
}

std::vector<int> kernel_first_labels(int quotient_v) {
  // extension point for loop element e = 2*idx + x is e - 1
  std::vector<int> labels(2 * (quotient_v + 1) - 1);
  labels[0] = 0;  // (identity, 1)
  for (int i = 1; i <= quotient_v; ++i) {
    labels[2 * i - 1] = i;               // (P_i, 0)
    labels[2 * i] = quotient_v + i;      // (P_i, 1)
  }
  return labels;
}

std::vector<int> extra_veblen_points(const ExtensionSpec& spec) {
  const SteinerTripleSystem& Q = spec.quotient;
  SteinerLoop lq = loop_from_sts(Q);
  FundamentalPairs fp = fundamental_pairs(Q);
  int m = lq.order();
  std::vector<int> out;
  for (int p : veblen_points(Q)) {
    int P = p + 1;
    bool central = true;
    for (int Qe = 0; Qe < m && central; ++Qe) {
      int PQ = lq.mul(P, Qe);
      for (int R = 0; R < m && central; ++R) {
        std::uint32_t lhs = evaluate(spec.fs, fp, Q, P, Qe) ^
                            evaluate(spec.fs, fp, Q, PQ, R);
        std::uint32_t rhs = evaluate(spec.fs, fp, Q, Qe, R) ^
                            evaluate(spec.fs, fp, Q, P, lq.mul(Qe, R));
        if (lhs != rhs) central = false;
      }
    }
    if (central) out.push_back(p);
  }
  return out;
}

bool verify_centrality(const ExtensionSpec& spec) {
  SteinerLoop loop = build_extension(spec);
  std::vector<int> z = center(loop);
  int kt = 1 << spec.t;
  for (int x = 0; x < kt; ++x)
    if (std::find(z.begin(), z.end(), x) == z.end()) return false;
  return true;
}

ClassificationReport classify(const SteinerTripleSystem& quotient,
                              const std::string& quotient_name, int t,
                              int target_veblen,
                              const ClassifyOptions& options) {
  if (target_veblen != (1 << t) - 1)
    fail(Errc::bad_argument,
         "target Veblen count must be 2^t - 1 (the kernel minus identity)");
  int tb = t * quotient.b();
  if (tb > 26 && !options.long_running)
    fail(Errc::unsupported,
         "t*b = " + std::to_string(tb) +
             " exceeds the interactive budget; pass long_running");

  ClassificationReport report;
  report.quotient_name = quotient_name;
  report.t = t;
  report.b = quotient.b();
  report.target_veblen = target_veblen;
  report.ext_log2 = tb;
  report.ext_count = tb <= 63 ? std::uint64_t(1) << tb : 0;

  CoboundarySpace space = coboundary_space(quotient, t);
  report.b2_dim = space.dim;
  report.b2_size = std::uint64_t(1) << space.dim;
  report.coset_count = space.coset_count();

  AutomorphismGroup aut;
  if (options.generators) {
    for (const Perm& g : *options.generators)
      if (!is_sts_automorphism(quotient, g))
        fail(Errc::not_an_automorphism,
             "a supplied generator does not preserve the quotient triples");
    aut.generators = *options.generators;
    aut.order = closure_order(aut.generators, quotient.v());
  } else {
    aut = automorphism_group(quotient);
  }
  report.aut_order = aut.order;
  report.kernel_aut_order = kernel_group_order(t);

  OrbitOptions orbit_options;
  orbit_options.workers = options.workers;
  orbit_options.checkpoint_path = options.checkpoint_path;
  orbit_options.checkpoint_every = options.checkpoint_every;
  std::vector<OrbitRecord> orbit_list =
      orbits(space, aut, quotient, orbit_options);
  report.orbit_count = orbit_list.size();

  bool quotient_has_veblen = !veblen_points(quotient).empty();
  report.representatives.resize(orbit_list.size());
  std::atomic<std::uint64_t> survivors{0};
  parallel_chunks(
      orbit_list.size(), options.workers,
      [&](std::uint64_t lo, std::uint64_t hi, int) {
        for (std::uint64_t i = lo; i < hi; ++i) {
          ExtensionSpec spec = make_spec(quotient, t, orbit_list[i].rep);
          bool kernel_is_center =
              !quotient_has_veblen || extra_veblen_points(spec).empty();
          int direct =
              static_cast<int>(veblen_points(extension_sts(spec)).size());
          // The filter and the direct scan must agree on the survivors.
          if (kernel_is_center != (direct == target_veblen))
            fail(Errc::internal,
                 "Veblen filter disagrees with the direct scan for code " +
                     code_to_string(orbit_list[i].rep));
          report.representatives[i] = {orbit_list[i].rep, orbit_list[i].size,
                                       direct, kernel_is_center};
          if (kernel_is_center) ++survivors;
        }
      });
  report.survivor_count = survivors.load();
  return report;
}

}  // namespace steiner
