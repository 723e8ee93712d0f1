#pragma once

#include <optional>
#include <string>
#include <vector>

#include "htype/algebra.hpp"

namespace htype {

/// One row of the nonsymmetric-dimension table: for center dimension k,
/// dim S runs through base + n * stride, n = 0, 1, ...; k = 1 has no
/// nonsymmetric spaces at all.
struct TableRow {
  int k = 0;
  std::optional<int> base;
  int stride = 0;
  bool published = false;  // k <= 8 rows are the published table

  std::string closed_form() const;  // "7+4n" etc., "---" when empty
};

TableRow table_row(int k);

/// Dimensions of the nonsymmetric S for center dimension k, n = 0..n_max.
std::vector<int> nonsymmetric_dims(int k, int n_max);

/// The full table for k = 1..k_max with expansions for n = 0..n_max.
std::string render_table(int n_max, int k_max = 8);

/// Known symmetric (Iwasawa) configurations: k = 1; k = 3 isotypic (the
/// quaternionic hyperbolic family, any multiplicity); k = 7 isotypic with
/// module dimension 8 (the octonionic hyperbolic plane).
bool expected_symmetric(const CliffordSpec& spec);

}  // namespace htype
