// Command-line front end: catalog access, enumeration runs, count
// verification, and exports.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "steiner/catalog.hpp"
#include "steiner/extension.hpp"
#include "steiner/io.hpp"
#include "steiner/iso.hpp"
#include "steiner/parallel.hpp"

namespace {

using namespace steiner;

SteinerTripleSystem load_system(const std::string& arg) {
  if (catalog_has(arg)) return catalog_get(arg).system;
  return read_sts_file(arg);
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) fail(Errc::io_error, "cannot write " + path);
  out << text;
}

struct VerifyCheck {
  std::string name;
  std::uint64_t expected;
  std::uint64_t actual;
};

int report_checks(const std::vector<VerifyCheck>& checks) {
  int failed = 0;
  for (const auto& c : checks) {
    bool ok = c.expected == c.actual;
    std::printf("%-52s expected %-12llu actual %-12llu %s\n", c.name.c_str(),
                (unsigned long long)c.expected, (unsigned long long)c.actual,
                ok ? "ok" : "MISMATCH");
    if (!ok) ++failed;
  }
  return failed;
}

void append_fast_checks(std::vector<VerifyCheck>& checks, int workers) {
  ClassifyOptions opt;
  opt.workers = workers;
  auto r19 = classify(catalog_get("sts9").system, "sts9", 1, 1, opt);
  checks.push_back({"sts19: factor systems", 4096, r19.ext_count});
  checks.push_back({"sts19: coboundaries", 512, r19.b2_size});
  checks.push_back({"sts19: cosets", 8, r19.coset_count});
  checks.push_back({"sts19: orbits", 3, r19.orbit_count});
  checks.push_back({"sts19: one-Veblen classes", 3, r19.survivor_count});

  auto r31 = classify(catalog_get("fano").system, "fano", 2, 3, opt);
  checks.push_back({"sts31 (3 Veblen): factor systems", 16384, r31.ext_count});
  checks.push_back({"sts31 (3 Veblen): coboundaries", 256, r31.b2_size});
  checks.push_back({"sts31 (3 Veblen): cosets", 64, r31.coset_count});
  checks.push_back({"sts31 (3 Veblen): orbits", 3, r31.orbit_count});
  checks.push_back({"sts31 (3 Veblen): non-projective classes", 2,
                    r31.survivor_count});

  // golden code over the lexicographic STS(9)
  const auto& q = catalog_get("sts9-coords").system;
  auto fp = fundamental_pairs(q);
  std::vector<std::uint32_t> values(q.b(), 0);
  auto set_pair = [&](int p0, int p1, std::uint32_t value) {
    for (int i = 0; i < fp.b(); ++i)
      if (fp.pairs[i][0] == p0 && fp.pairs[i][1] == p1) values[i] = value;
  };
  set_pair(1, 3, 1);
  set_pair(1, 4, 3);
  set_pair(2, 3, 3);
  set_pair(2, 4, 2);
  set_pair(2, 5, 1);
  checks.push_back({"golden factor-system code", 29584,
                    encode(values, 2).code.to_u64()});
}

void append_sts27_checks(std::vector<VerifyCheck>& checks, int workers) {
  ClassifyOptions opt;
  opt.workers = workers;
  auto rn = classify(catalog_get("sts13-noncyclic").system, "sts13-noncyclic",
                     1, 1, opt);
  auto rc = classify(catalog_get("sts13-cyclic").system, "sts13-cyclic", 1, 1,
                     opt);
  checks.push_back({"sts27: cosets per quotient", 8192, rn.coset_count});
  checks.push_back({"sts27: classes over non-cyclic STS(13)", 1504,
                    rn.survivor_count});
  checks.push_back({"sts27: classes over cyclic STS(13)", 232,
                    rc.survivor_count});
  checks.push_back({"sts27: total classes", 1736,
                    rn.survivor_count + rc.survivor_count});
}

void append_sts31_small_checks(std::vector<VerifyCheck>& checks) {
  struct Row {
    const char* name;
    int b2_dim;
    std::uint64_t aut;
  };
  const Row rows[] = {{"sts15-1", 11, 20160}, {"sts15-2", 12, 192},
                      {"sts15-3", 13, 96},    {"sts15-7", 13, 288},
                      {"sts15-61", 14, 21},   {"sts15-80", 15, 60}};
  for (const Row& row : rows) {
    const auto& sys = catalog_get(row.name).system;
    checks.push_back({std::string(row.name) + ": coboundary dimension",
                      static_cast<std::uint64_t>(row.b2_dim),
                      static_cast<std::uint64_t>(coboundary_space(sys, 1).dim)});
    checks.push_back({std::string(row.name) + ": automorphism group order",
                      row.aut, automorphism_group(sys).order});
  }
}

int cmd_verify(const std::string& suite, int workers) {
  std::vector<VerifyCheck> checks;
  if (suite == "fast" || suite == "all") append_fast_checks(checks, workers);
  if (suite == "sts27" || suite == "all") append_sts27_checks(checks, workers);
  if (suite == "sts31-small" || suite == "all")
    append_sts31_small_checks(checks);
  if (checks.empty()) fail(Errc::bad_argument, "unknown suite: " + suite);
  int failed = report_checks(checks);
  std::printf("%s: %zu checks, %d failed\n", suite.c_str(), checks.size(),
              failed);
  return failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Steiner triple systems with Veblen points: catalog, "
               "enumeration via Schreier extensions, verification"};
  app.require_subcommand(1);
  int workers = default_workers();
  app.add_option("--workers", workers,
                 "worker threads (default: STEINER_WORKERS or hardware)");

  auto* cat = app.add_subcommand("catalog", "list or show reference systems");
  cat->require_subcommand(1);
  cat->add_subcommand("list", "list catalog names");
  auto* show = cat->add_subcommand("show", "print one system");
  std::string show_name, show_format = "table";
  show->add_option("name", show_name)->required();
  show->add_option("--format", show_format, "table|json|paper-columns");

  auto* enumerate = app.add_subcommand(
      "enumerate", "classify extensions of GF(2)^t over a quotient");
  std::string quotient, checkpoint, out_path, dump_reps;
  int t = 1, veblen = 1;
  std::uint64_t block_size = std::uint64_t(1) << 16;
  bool long_running = false, as_json = false;
  enumerate->add_option("--quotient", quotient, "catalog name or file")
      ->required();
  enumerate->add_option("--t", t, "kernel dimension");
  enumerate->add_option("--veblen", veblen, "target Veblen count (2^t - 1)");
  enumerate->add_option("--block-size", block_size, "stream block size");
  enumerate->add_flag("--long-running", long_running,
                      "allow runs beyond the t*b <= 26 budget");
  enumerate->add_option("--checkpoint", checkpoint,
                        "resumable checkpoint file for the orbit phase");
  std::string gens_file;
  enumerate->add_option("--gens", gens_file,
                        "file of quotient automorphism generators in cycle "
                        "notation (default: search)");
  enumerate->add_option("--out", out_path, "write the report here");
  enumerate->add_option("--dump-reps", dump_reps,
                        "write coset representatives to this file");
  std::string dump_orbits;
  enumerate->add_option("--dump-orbits", dump_orbits,
                        "write '<code> <size>' orbit lines to this file");
  enumerate->add_flag("--json", as_json, "machine-readable report");

  auto* verify = app.add_subcommand("verify", "check built-in reference counts");
  std::string suite = "fast";
  verify->add_option("suite", suite, "fast|sts27|sts31-small|all");

  auto* exp = app.add_subcommand("export", "write a system in some format");
  std::string exp_name, exp_format = "sts", exp_out, exp_code, exp_quotient;
  int exp_t = 1;
  exp->add_option("name", exp_name, "catalog name or file");
  exp->add_option("--format", exp_format, "sts|json|paper-columns");
  exp->add_option("--out", exp_out, "output file (default stdout)");
  exp->add_option("--factor-code", exp_code,
                  "decode a factor-system code instead");
  exp->add_option("--quotient", exp_quotient, "quotient for --factor-code");
  exp->add_option("--t", exp_t, "kernel dimension for --factor-code");

  auto* veb = app.add_subcommand("veblen", "list the Veblen points");
  std::string veb_arg;
  veb->add_option("system", veb_arg)->required();
  auto* aut = app.add_subcommand("aut", "automorphism generators and order");
  std::string aut_arg;
  aut->add_option("system", aut_arg)->required();
  auto* pasch = app.add_subcommand("pasch", "list Pasch configurations");
  std::string pasch_arg;
  pasch->add_option("system", pasch_arg)->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (cat->parsed()) {
      if (cat->get_subcommand("list")->parsed()) {
        for (const auto& name : catalog_names()) {
          const auto& e = catalog_get(name);
          std::printf("%-16s v=%-3d b=%-4d veblen=%-3d %s\n", name.c_str(),
                      e.system.v(), e.system.b(),
                      e.known_veblen_count.value_or(-1), e.provenance.c_str());
        }
      } else {
        const auto& e = catalog_get(show_name);
        if (show_format == "json")
          std::cout << sts_to_json(e.system) << "\n";
        else if (show_format == "paper-columns")
          std::cout << paper_columns(e);
        else
          std::cout << write_sts_text(e.system);
      }
      return 0;
    }

    if (enumerate->parsed()) {
      SteinerTripleSystem q = load_system(quotient);
      if (!dump_reps.empty()) {
        auto space = coboundary_space(q, t);
        CosetRepStream stream(space, block_size);
        write_output(dump_reps, reps_dump(space, stream));
      }
      ClassifyOptions options;
      options.workers = workers;
      options.block_size = block_size;
      options.long_running = long_running;
      options.checkpoint_path = checkpoint;
      if (!gens_file.empty())
        options.generators = read_generators_file(gens_file, q.v());
      ClassificationReport report = classify(q, quotient, t, veblen, options);
      if (!dump_orbits.empty()) {
        std::vector<OrbitRecord> records;
        for (const auto& rep : report.representatives)
          records.push_back({rep.code, rep.orbit_size});
        write_output(dump_orbits, orbits_dump(records));
      }
      write_output(out_path, as_json ? report_to_json(report) + "\n"
                                     : report_to_text(report));
      return 0;
    }

    if (verify->parsed()) return cmd_verify(suite, workers);

    if (exp->parsed()) {
      if (!exp_code.empty()) {
        if (exp_quotient.empty())
          fail(Errc::bad_argument, "--factor-code requires --quotient");
        SteinerTripleSystem q = load_system(exp_quotient);
        FactorSystem fs{code_from_string(exp_code), exp_t, q.b()};
        FundamentalPairs fp = fundamental_pairs(q);
        std::string text;
        for (int i = 0; i < q.b(); ++i) {
          std::uint32_t value = fs.field(i);
          text += "{" + std::to_string(fp.pairs[i][0]) + "," +
                  std::to_string(fp.pairs[i][1]) + "} -> (";
          for (int j = exp_t - 1; j >= 0; --j)
            text += std::to_string((value >> j) & 1u) + (j ? "," : "");
          text += ")\n";
        }
        write_output(exp_out, text);
        return 0;
      }
      if (exp_name.empty())
        fail(Errc::bad_argument, "export needs a system or --factor-code");
      if (exp_format == "paper-columns" && catalog_has(exp_name)) {
        write_output(exp_out, paper_columns(catalog_get(exp_name)));
        return 0;
      }
      SteinerTripleSystem sys = load_system(exp_name);
      if (exp_format == "json")
        write_output(exp_out, sts_to_json(sys) + "\n");
      else if (exp_format == "paper-columns")
        write_output(exp_out, paper_columns(sys));
      else
        write_output(exp_out, write_sts_text(sys));
      return 0;
    }

    if (veb->parsed()) {
      SteinerTripleSystem sys = load_system(veb_arg);
      auto points = veblen_points(sys);
      std::printf("%zu Veblen point(s):", points.size());
      for (int p : points) std::printf(" %d", p);
      std::printf("\n");
      return 0;
    }

    if (aut->parsed()) {
      SteinerTripleSystem sys = load_system(aut_arg);
      auto group = automorphism_group(sys);
      std::printf("order %llu\n", (unsigned long long)group.order);
      for (const Perm& g : group.generators)
        std::printf("%s\n", perm_cycles(g).c_str());
      return 0;
    }

    if (pasch->parsed()) {
      SteinerTripleSystem sys = load_system(pasch_arg);
      auto configs = find_pasch_configurations(sys);
      std::printf("%zu Pasch configuration(s)\n", configs.size());
      for (const auto& c : configs)
        std::printf("x=%d a=%d b=%d c=%d d=%d t=%d\n", c.x, c.a, c.b, c.c, c.d,
                    c.t);
      return 0;
    }
  } catch (const Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 0;
}
