#include "steiner/catalog.hpp"

#include <cctype>
#include <map>
#include <sstream>

namespace steiner {

SteinerTripleSystem pg(int n) {
  if (n < 2) fail(Errc::bad_argument, "pg(n) requires n >= 2");
  int count = (1 << (n + 1)) - 1;
  std::vector<Triple> triples;
  for (int u = 1; u <= count; ++u)
    for (int w = u + 1; w <= count; ++w) {
      int z = u ^ w;
      if (z > w) triples.push_back({u - 1, w - 1, z - 1});
    }
  return validate_sts(count, triples);
}

SteinerTripleSystem ag(int n) {
  if (n < 2) fail(Errc::bad_argument, "ag(n) requires n >= 2");
  int count = 1;
  for (int i = 0; i < n; ++i) count *= 3;
  auto add = [&](int u, int w) {
    // third collinear point: coordinatewise -(u+w) mod 3
    int z = 0, pw = 1;
    for (int i = 0; i < n; ++i) {
      int cu = (u / pw) % 3, cw = (w / pw) % 3;
      z += ((6 - cu - cw) % 3) * pw;
      pw *= 3;
    }
    return z;
  };
  std::vector<Triple> triples;
  for (int u = 0; u < count; ++u)
    for (int w = u + 1; w < count; ++w) {
      int z = add(u, w);
      if (z > w) triples.push_back({u, w, z});
    }
  return validate_sts(count, triples);
}

namespace {

struct RawEntry {
  const char* name;
  const char* alias;  // may be null
  const char* provenance;
  int v;
  int label_base;
  bool hex_labels;
  const char* rows;  // three whitespace-separated label rows
  int known_veblen;  // -1: unknown
};

// Column tables; column i is the i-th triple in source order.
const RawEntry kRawEntries[] = {
    {"sts9", nullptr, "STS(9), reference labeling", 9, 1, false,
     "1 1 1 1 2 2 2 3 3 4 4 6\n"
     "2 3 4 5 3 5 6 5 7 5 8 7\n"
     "8 6 7 9 4 7 9 8 9 6 9 8\n",
     0},
    {"sts9-coords", "sts9-example",
     "STS(9) = AG(2,3) in 3x3 grid coordinates, lexicographic triples", 9, 1,
     false,
     "1 1 1 1 2 2 2 3 3 3 4 7\n"
     "2 4 5 6 4 5 6 4 5 6 5 8\n"
     "3 7 9 8 9 8 7 8 7 9 6 9\n",
     0},
    {"sts13-noncyclic", "sts13-1", "STS(13) #1 (non-cyclic)", 13, 0, false,
     "1 2 3 4 5 6 7 8 9 6 11 12 0 2 3 4 5 6 7 8 9 10 11 12 0 1\n"
     "3 4 5 10 7 8 9 10 11 12 0 1 2 5 6 7 8 9 10 11 12 0 1 2 3 4\n"
     "9 6 11 12 0 1 2 3 4 5 6 7 8 10 7 8 9 10 11 12 0 1 2 3 4 5\n",
     0},
    {"sts13-cyclic", "sts13-2", "STS(13) #2 (cyclic)", 13, 0, false,
     "1 2 3 4 5 6 7 8 9 10 11 12 0 2 3 4 5 6 7 8 9 10 11 12 0 1\n"
     "3 4 5 6 7 8 9 10 11 12 0 1 2 5 6 7 8 9 10 11 12 0 1 2 3 4\n"
     "9 10 11 12 0 1 2 3 4 5 6 7 8 6 7 8 9 10 11 12 0 1 2 3 4 5\n",
     0},
    {"sts15-2", nullptr, "STS(15) #2", 15, 0, true,
     "0 0 0 0 0 0 0 1 1 1 1 1 1 2 2 2 2 2 2 3 3 3 3 4 4 4 4 5 5 5 5 6 6 6 6\n"
     "1 3 5 7 9 b d 3 4 7 8 b c 3 4 7 8 b c 7 8 9 a 7 8 9 a 7 8 9 a 7 8 9 a\n"
     "2 4 6 8 a c e 5 6 9 a d e 6 5 a 9 e d b c d e c b e d e d c b d e b c\n",
     1},
    {"sts15-3", nullptr, "STS(15) #3", 15, 0, true,
     "0 0 0 0 0 0 0 1 1 1 1 1 1 2 2 2 2 2 2 3 3 3 3 4 4 4 4 5 5 5 5 6 6 6 6\n"
     "1 3 5 7 9 b d 3 4 7 8 b c 3 4 7 8 b c 7 8 9 a 7 8 9 a 7 8 9 a 7 8 9 a\n"
     "2 4 6 8 a c e 5 6 9 a d e 6 5 a 9 e d b c d e d e b c e d c b c b e d\n",
     0},
    {"sts15-7", nullptr, "STS(15) #7", 15, 0, true,
     "0 0 0 0 0 0 0 1 1 1 1 1 1 2 2 2 2 2 2 3 3 3 3 4 4 4 4 5 5 5 5 6 6 6 6\n"
     "1 3 5 7 9 b d 3 4 7 8 b c 3 4 7 8 b c 7 8 9 a 7 8 9 a 7 8 9 a 7 8 9 a\n"
     "2 4 6 8 a c e 5 6 9 a d e 6 5 a 9 e d b d e c e c b d c e d b d b c e\n",
     0},
    {"sts15-61", nullptr, "STS(15) #61", 15, 0, true,
     "0 0 0 0 0 0 0 1 1 1 1 1 1 2 2 2 2 2 2 3 3 3 3 4 4 4 4 5 5 5 5 6 6 6 6\n"
     "1 3 5 7 9 b d 3 4 7 8 a c 3 4 7 8 9 b 7 8 9 c 7 8 9 a 7 8 a b 7 8 9 a\n"
     "2 4 6 8 a c e 5 6 9 b d e 6 5 a e c d b a e d e c d b d 9 c e c d b e\n",
     0},
    {"sts15-80", nullptr, "STS(15) #80 (anti-Pasch)", 15, 0, true,
     "0 0 0 0 0 0 0 1 1 1 1 1 1 2 2 2 2 2 2 3 3 3 3 4 4 4 4 5 5 5 6 6 6 7 8\n"
     "1 3 5 7 9 b d 3 4 6 9 a c 3 4 5 7 8 b 6 7 8 a 5 8 a b 7 8 9 7 9 c 9 a\n"
     "2 4 6 8 a c e 5 7 8 b d e 9 6 a e c d b c d e d 9 c e b e c a e d d b\n",
     0},
    {"sts19-S0", nullptr, "one-Veblen STS(19) S0", 19, 0, false,
     "0 0 0 0 0 0 0 0 0 1 1 1 1 1 1 1 1 2 2 "
     "2 2 2 2 2 3 3 3 3 3 3 3 4 4 4 4 4 5 5 "
     "5 5 6 6 6 6 7 7 7 7 7 8 8 8 8 9 9 9 9\n"
     "1 2 3 4 5 6 7 8 9 2 4 5 6 11 13 14 15 4 5 "
     "6 10 13 14 15 4 5 6 10 13 14 15 5 10 11 12 14 10 11 "
     "12 13 10 11 12 13 8 10 11 12 17 10 11 12 16 10 11 12 16\n"
     "10 11 12 13 14 15 16 17 18 3 7 9 8 12 16 18 17 9 8 "
     "7 12 18 17 16 8 7 9 11 17 16 18 6 16 18 17 15 18 17 "
     "16 15 17 16 18 14 9 13 15 14 18 15 14 13 18 14 13 15 17\n",
     1},
    {"sts19-S1", nullptr, "one-Veblen STS(19) S1", 19, 0, false,
     "0 0 0 0 0 0 0 0 0 1 1 1 1 1 1 1 1 2 2 "
     "2 2 2 2 2 3 3 3 3 3 3 3 4 4 4 4 4 5 5 "
     "5 5 6 6 6 6 7 7 7 7 7 8 8 8 8 9 9 9 12\n"
     "1 2 3 4 5 6 7 8 9 2 4 5 6 11 13 14 15 4 5 "
     "6 10 13 14 15 4 5 6 9 10 13 14 5 10 11 12 14 10 11 "
     "12 13 9 10 11 13 8 10 11 12 17 10 11 12 16 10 11 16 15\n"
     "10 11 12 13 14 15 16 17 18 3 7 9 8 12 16 18 17 9 8 "
     "7 12 18 17 16 8 7 18 15 11 17 16 6 16 18 17 15 18 17 "
     "16 15 12 17 16 14 9 13 15 14 18 15 14 13 18 14 13 17 18\n",
     1},
    {"sts19-S2", nullptr, "one-Veblen STS(19) S2", 19, 0, false,
     "0 0 0 0 0 0 0 0 0 1 1 1 1 1 1 1 1 2 2 "
     "2 2 2 2 2 3 3 3 3 3 3 3 4 4 4 4 4 5 5 "
     "5 5 6 6 6 6 7 7 7 7 7 8 8 8 8 9 9 12 16\n"
     "1 2 3 4 5 6 7 8 9 2 4 5 6 11 13 14 15 4 5 "
     "6 10 13 14 15 4 5 6 9 10 13 14 5 10 11 12 14 10 11 "
     "12 13 9 10 11 13 8 9 10 11 12 9 10 11 12 10 11 15 17\n"
     "10 11 12 13 14 15 16 17 18 3 7 9 8 12 16 18 17 9 8 "
     "7 12 18 17 16 8 7 18 15 11 17 16 6 16 18 17 15 18 17 "
     "16 15 12 17 16 14 18 17 13 15 14 16 15 14 13 14 13 18 18\n",
     1},
};

int decode_label(const std::string& token) {
  if (token.size() == 1 && token[0] >= 'a' && token[0] <= 'e')
    return 10 + (token[0] - 'a');
  for (char ch : token)
    if (!std::isdigit(static_cast<unsigned char>(ch)))
      fail(Errc::io_error, "bad point label: " + token);
  return std::stoi(token);
}

std::vector<Triple> parse_columns(const char* rows) {
  std::istringstream in(rows);
  std::vector<int> labels;
  std::string token;
  while (in >> token) labels.push_back(decode_label(token));
  if (labels.empty() || labels.size() % 3 != 0)
    fail(Errc::io_error, "column table is not 3 rows");
  size_t b = labels.size() / 3;
  std::vector<Triple> out(b);
  for (size_t i = 0; i < b; ++i)
    out[i] = {labels[i], labels[b + i], labels[2 * b + i]};
  return out;
}

CatalogEntry make_entry(const RawEntry& raw) {
  CatalogEntry entry;
  entry.name = raw.name;
  entry.provenance = raw.provenance;
  entry.label_base = raw.label_base;
  entry.hex_labels = raw.hex_labels;
  entry.source_triples = parse_columns(raw.rows);
  std::vector<Triple> rebased;
  rebased.reserve(entry.source_triples.size());
  for (const Triple& t : entry.source_triples)
    rebased.push_back({t[0] - raw.label_base, t[1] - raw.label_base,
                       t[2] - raw.label_base});
  entry.system = validate_sts(raw.v, rebased);
  if (raw.known_veblen >= 0) entry.known_veblen_count = raw.known_veblen;
  return entry;
}

CatalogEntry make_programmatic(const std::string& name,
                               const std::string& provenance,
                               SteinerTripleSystem system, int veblen) {
  CatalogEntry entry;
  entry.name = name;
  entry.provenance = provenance;
  entry.source_triples = system.triples();
  entry.system = std::move(system);
  entry.known_veblen_count = veblen;
  return entry;
}

struct Catalog {
  std::vector<CatalogEntry> entries;
  std::map<std::string, size_t> index;

  void add(CatalogEntry entry, const char* alias = nullptr) {
    index[entry.name] = entries.size();
    if (alias) index[alias] = entries.size();
    entries.push_back(std::move(entry));
  }
};

const Catalog& catalog() {
  static const Catalog instance = [] {
    Catalog c;
    for (const RawEntry& raw : kRawEntries) {
      c.add(make_entry(raw), raw.alias);
      if (std::string(raw.name) == "sts13-cyclic") {
        c.add(make_programmatic("fano", "STS(7) = PG(2,2), labels = nonzero "
                                        "vectors of GF(2)^3 minus one",
                                pg(2), 7),
              "pg2");
        c.add(make_programmatic("sts15-1", "STS(15) #1 = PG(3,2)", pg(3), 15),
              "pg32");
      }
    }
    return c;
  }();
  return instance;
}

}  // namespace

const CatalogEntry& catalog_get(const std::string& name) {
  const Catalog& c = catalog();
  auto it = c.index.find(name);
  if (it == c.index.end())
    fail(Errc::unknown_name, "no catalog system named '" + name + "'");
  return c.entries[it->second];
}

bool catalog_has(const std::string& name) {
  return catalog().index.count(name) != 0;
}

std::vector<std::string> catalog_names() {
  std::vector<std::string> names;
  for (const CatalogEntry& e : catalog().entries) names.push_back(e.name);
  return names;
}

}  // namespace steiner
