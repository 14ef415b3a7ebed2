#include "steiner/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace steiner {

namespace {

int decode_label(const std::string& token) {
  if (token.size() == 1 && token[0] >= 'a' && token[0] <= 'e')
    return 10 + (token[0] - 'a');
  size_t pos = 0;
  int value;
  try {
    value = std::stoi(token, &pos);
  } catch (const std::exception&) {
    fail(Errc::io_error, "bad point label: " + token);
  }
  if (pos != token.size() || value < 0)
    fail(Errc::io_error, "bad point label: " + token);
  return value;
}

std::string format_label(int label, bool hex) {
  if (hex && label >= 10 && label <= 14)
    return std::string(1, static_cast<char>('a' + label - 10));
  return std::to_string(label);
}

}  // namespace

SteinerTripleSystem read_sts_text(std::istream& in) {
  std::string line;
  int v = -1;
  std::vector<Triple> triples;
  while (std::getline(in, line)) {
    std::string trimmed;
    for (char ch : line)
      if (ch != '\r') trimmed += ch;
    if (trimmed.empty() || trimmed[0] == '#') continue;
    if (v < 0) {
      if (trimmed.rfind("v=", 0) != 0)
        fail(Errc::io_error, "expected header 'v=<int>'");
      v = decode_label(trimmed.substr(2));
      continue;
    }
    std::istringstream ls(trimmed);
    std::string a, b, c, extra;
    if (!(ls >> a >> b >> c) || (ls >> extra))
      fail(Errc::io_error, "expected three labels per line: " + trimmed);
    triples.push_back({decode_label(a), decode_label(b), decode_label(c)});
  }
  if (v < 0) fail(Errc::io_error, "missing 'v=' header");
  return validate_sts(v, triples);
}

SteinerTripleSystem read_sts_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::io_error, "cannot open " + path);
  return read_sts_text(in);
}

std::string write_sts_text(const SteinerTripleSystem& sts) {
  std::string out = "v=" + std::to_string(sts.v()) + "\n";
  for (const Triple& t : sts.triples())
    out += std::to_string(t[0]) + " " + std::to_string(t[1]) + " " +
           std::to_string(t[2]) + "\n";
  return out;
}

std::string sts_to_json(const SteinerTripleSystem& sts) {
  nlohmann::json j;
  j["v"] = sts.v();
  j["triples"] = sts.triples();
  return j.dump();
}

SteinerTripleSystem sts_from_json(const std::string& text) {
  try {
    nlohmann::json j = nlohmann::json::parse(text);
    std::vector<Triple> triples = j.at("triples").get<std::vector<Triple>>();
    return validate_sts(j.at("v").get<int>(), triples);
  } catch (const nlohmann::json::exception& e) {
    fail(Errc::io_error, std::string("bad JSON system: ") + e.what());
  }
}

std::string paper_columns(const std::vector<Triple>& triples, bool hex_labels) {
  std::string out;
  for (int row = 0; row < 3; ++row) {
    for (size_t i = 0; i < triples.size(); ++i) {
      if (i) out += " ";
      out += format_label(triples[i][row], hex_labels);
    }
    out += "\n";
  }
  return out;
}

std::string paper_columns(const CatalogEntry& entry) {
  return paper_columns(entry.source_triples, entry.hex_labels);
}

std::string paper_columns(const SteinerTripleSystem& sts) {
  return paper_columns(sts.triples(), false);
}

std::string cayley_text(const SteinerLoop& loop) {
  std::string out;
  for (int x = 0; x < loop.order(); ++x) {
    for (int y = 0; y < loop.order(); ++y) {
      if (y) out += " ";
      out += std::to_string(loop.mul(x, y));
    }
    out += "\n";
  }
  return out;
}

std::vector<Perm> read_generators_text(std::istream& in, int n) {
  std::vector<Perm> gens;
  std::string line;
  while (std::getline(in, line)) {
    size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;
    gens.push_back(perm_from_cycles(line, n));
  }
  return gens;
}

std::vector<Perm> read_generators_file(const std::string& path, int n) {
  std::ifstream in(path);
  if (!in) fail(Errc::io_error, "cannot open " + path);
  return read_generators_text(in, n);
}

std::string reps_dump(const CoboundarySpace& space, CosetRepStream& stream) {
  std::string out = "# t=" + std::to_string(space.t) +
                    " b=" + std::to_string(space.b) +
                    " dim=" + std::to_string(space.dim) + "\n";
  while (auto code = stream.next()) out += code_to_string(*code) + "\n";
  return out;
}

std::string orbits_dump(const std::vector<OrbitRecord>& records) {
  std::string out;
  for (const OrbitRecord& r : records)
    out += code_to_string(r.rep) + " " + std::to_string(r.size) + "\n";
  return out;
}

namespace {

nlohmann::json rep_to_json(const ClassificationReport::Rep& rep) {
  nlohmann::json j;
  j["code"] = code_to_string(rep.code);
  j["orbit_size"] = rep.orbit_size;
  j["veblen_count"] = rep.veblen_count;
  j["survivor"] = rep.survivor;
  return j;
}

}  // namespace

std::string report_to_json(const ClassificationReport& report) {
  nlohmann::json j;
  j["quotient"] = report.quotient_name;
  j["t"] = report.t;
  j["b"] = report.b;
  j["target_veblen"] = report.target_veblen;
  j["ext_log2"] = report.ext_log2;
  if (report.ext_count) j["ext_count"] = report.ext_count;
  j["b2_dim"] = report.b2_dim;
  j["b2_size"] = report.b2_size;
  j["coset_count"] = report.coset_count;
  j["aut_order"] = report.aut_order;
  j["kernel_aut_order"] = report.kernel_aut_order;
  j["orbit_count"] = report.orbit_count;
  j["survivor_count"] = report.survivor_count;
  j["representatives"] = nlohmann::json::array();
  for (const auto& rep : report.representatives)
    j["representatives"].push_back(rep_to_json(rep));
  return j.dump(2);
}

std::string report_to_text(const ClassificationReport& report) {
  std::ostringstream out;
  out << "quotient:            " << report.quotient_name << "\n";
  out << "kernel:              GF(2)^" << report.t << "\n";
  out << "triples (b):         " << report.b << "\n";
  out << "|Ext| = 2^" << report.ext_log2;
  if (report.ext_count) out << " = " << report.ext_count;
  out << "\n";
  out << "|B^2| = 2^" << report.b2_dim << " = " << report.b2_size << "\n";
  out << "cosets:              " << report.coset_count << "\n";
  out << "|Aut(quotient)|:     " << report.aut_order << "\n";
  if (report.t > 1)
    out << "|Aut(kernel)|:       " << report.kernel_aut_order << "\n";
  out << "orbits:              " << report.orbit_count << "\n";
  out << "exactly " << report.target_veblen
      << " Veblen point(s): " << report.survivor_count << "\n";
  size_t shown = 0;
  for (const auto& rep : report.representatives) {
    if (shown == 24) {
      out << "  ... (" << report.representatives.size() - shown
          << " more; use --json for all)\n";
      break;
    }
    out << "  code " << code_to_string(rep.code) << "  orbit " << rep.orbit_size
        << "  veblen " << rep.veblen_count
        << (rep.survivor ? "" : "  (dropped)") << "\n";
    ++shown;
  }
  return out.str();
}

}  // namespace steiner
