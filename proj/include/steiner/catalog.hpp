#pragma once

#include <optional>
#include <string>
#include <vector>

#include "steiner/sts.hpp"

namespace steiner {

// A reference system shipped with the library.  `system` is the validated
// 0-based copy; `source_triples` keep the source column order and labels
// (already decoded to integers, not rebased) for column-table export.
struct CatalogEntry {
  std::string name;
  std::string provenance;
  int label_base = 0;   // subtract from source labels to get points
  bool hex_labels = false;  // labels 10..14 print as a..e
  std::vector<Triple> source_triples;
  SteinerTripleSystem system;
  std::optional<int> known_veblen_count;
};

const CatalogEntry& catalog_get(const std::string& name);  // Errc::unknown_name
bool catalog_has(const std::string& name);
std::vector<std::string> catalog_names();

// Point-line design of PG(n,2): points are the nonzero vectors of
// GF(2)^(n+1), point label = vector - 1, lines {u, w, u^w}.
SteinerTripleSystem pg(int n);

// Point-line design of AG(n,3): points are the vectors of GF(3)^n,
// label = sum coord_i * 3^i, lines are the zero-sum triples.
SteinerTripleSystem ag(int n);

}  // namespace steiner
