#pragma once

/// \file reference.hpp
/// Table of published join spectra (embedded at build time) and the regression
/// comparison against freshly computed spectra.

#include <string>
#include <string_view>
#include <vector>

#include "spectrajoin/graph.hpp"
#include "spectrajoin/joins.hpp"

namespace spectrajoin {

struct ReferenceEntry {
  std::string name;
  JoinKind join = JoinKind::NS;
  std::string left;   ///< graph spec
  std::string right;  ///< graph spec
  MatrixKind kind = MatrixKind::A;
  std::vector<double> values;  ///< ascending, multiplicities expanded
};

/// Parses the pipe-separated table format; '#' starts a comment line.
std::vector<ReferenceEntry> parse_reference_table(std::string_view text);

/// The table shipped with the library.
const std::vector<ReferenceEntry>& reference_table();
const ReferenceEntry& reference_entry(std::string_view name);

struct ReferenceCheck {
  std::vector<double> expected;
  std::vector<double> actual;
  std::vector<double> deviation;
  double max_deviation = 0.0;
  bool passed = false;
};

/// Builds the join, computes its numeric spectrum and compares entry by entry.
ReferenceCheck check_reference(const ReferenceEntry& entry, double tol = 1e-3);

}  // namespace spectrajoin
