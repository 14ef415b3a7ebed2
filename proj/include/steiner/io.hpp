#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "steiner/catalog.hpp"
#include "steiner/extension.hpp"
#include "steiner/factor.hpp"
#include "steiner/loop.hpp"
#include "steiner/perm.hpp"
#include "steiner/sts.hpp"

namespace steiner {

// Text format: header "v=<int>", then one triple per line.  Labels are
// decimal; single hex digits a..e are accepted on input as 10..14.
SteinerTripleSystem read_sts_text(std::istream& in);
SteinerTripleSystem read_sts_file(const std::string& path);
std::string write_sts_text(const SteinerTripleSystem& sts);

std::string sts_to_json(const SteinerTripleSystem& sts);
SteinerTripleSystem sts_from_json(const std::string& text);

// Column-table export: 3 rows, one column per triple.  Catalog entries keep
// their source order and label style; anything else prints canonical order.
std::string paper_columns(const std::vector<Triple>& triples, bool hex_labels);
std::string paper_columns(const CatalogEntry& entry);
std::string paper_columns(const SteinerTripleSystem& sts);

std::string cayley_text(const SteinerLoop& loop);

// Generator files: one permutation of {0..n-1} per line, cycle notation.
// Blank lines and '#' comments are skipped.
std::vector<Perm> read_generators_text(std::istream& in, int n);
std::vector<Perm> read_generators_file(const std::string& path, int n);

// Representative dump: "# t=<t> b=<b> dim=<dim>" then one code per line.
std::string reps_dump(const CoboundarySpace& space, CosetRepStream& stream);

std::string report_to_json(const ClassificationReport& report);
std::string report_to_text(const ClassificationReport& report);

// Orbit report: one "<representative-code> <orbit-size>" line per orbit.
std::string orbits_dump(const std::vector<OrbitRecord>& records);

}  // namespace steiner
