#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kf/killing.hpp"
#include "kf/titsidx.hpp"

namespace kf {

struct parse_error : error {
  using error::error;
};

/// Parsed form of the plain-text index file consumed by `compute` and
/// `signature`. Strict: unknown keys and malformed values are errors.
///
///   type E6
///   orbits (1 6)(3 5)          # optional; cycle notation
///   circled 1,6                # vertices; '-' for none
///   a sym:a                    # or an integer; required iff orbits present
///   subalgebra 2,3,4,5         # Delta'; '-' for empty
///   q0 pfister:sym             # or pfister:<g1,g2,g3> | sym | explicit entries
///   kappa so_of_q:1,1*g1,...   # one per component: auto | so_of_q:<entries> | <form>
struct IndexFile {
  TitsIndex index;
  SubalgebraSpec spec;
  std::optional<QuadForm> q0;
};

IndexFile parse_index_file(const std::string& text);
IndexFile load_index_file(const std::string& path);

/// Catalog case matching the index shape, when one of the paper's closed
/// forms applies; used by `compute --verify`.
std::optional<CatalogCase> infer_catalog_case(const IndexFile& f);

/// Flat, line-oriented key-value output; identical inputs produce
/// byte-identical reports.
struct Report {
  std::vector<std::pair<std::string, std::string>> lines;

  void add(const std::string& key, const std::string& value) { lines.push_back({key, value}); }
  std::string render(bool machine) const;
};

}  // namespace kf
