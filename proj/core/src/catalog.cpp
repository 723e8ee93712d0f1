#include "htype/catalog.hpp"

#include <sstream>
#include <stdexcept>

namespace htype {

namespace {

// Smallest number of irreducible copies giving a nonsymmetric space.
// k = 3 and k = 7 need two copies: the single-copy modules are the
// Iwasawa ones.
int j_min(int k) {
  int kr = (k - 1) % 8 + 1;
  if (kr == 3 || kr == 7) return 2;
  return 1;
}

}  // namespace

std::string TableRow::closed_form() const {
  if (!base) return "---";
  std::ostringstream os;
  os << *base << "+" << stride << "n";
  return os.str();
}

TableRow table_row(int k) {
  if (k < 1) throw std::domain_error("table_row: k must be >= 1");
  TableRow row;
  row.k = k;
  row.published = k <= 8;
  if (k == 1) return row;  // every k = 1 space is complex hyperbolic
  int d = min_dimension(k);
  row.base = j_min(k) * d + k + 1;
  row.stride = d;
  return row;
}

std::vector<int> nonsymmetric_dims(int k, int n_max) {
  TableRow row = table_row(k);
  std::vector<int> dims;
  if (!row.base) return dims;
  for (int n = 0; n <= n_max; ++n) dims.push_back(*row.base + n * row.stride);
  return dims;
}

std::string render_table(int n_max, int k_max) {
  std::ostringstream os;
  os << "k    dim S";
  if (n_max >= 0) os << "      values (n = 0.." << n_max << ")";
  os << "\n";
  for (int k = 1; k <= k_max; ++k) {
    TableRow row = table_row(k);
    os << k << (k < 10 ? "    " : "   ") << row.closed_form();
    if (row.base) {
      os << std::string(row.closed_form().size() < 11 ? 11 - row.closed_form().size() : 1, ' ');
      for (int n = 0; n <= n_max; ++n) os << (n ? ", " : "") << *row.base + n * row.stride;
    }
    if (!row.published) os << "   [beyond published table]";
    os << "\n";
  }
  return os.str();
}

bool expected_symmetric(const CliffordSpec& spec) {
  spec.validate();
  if (spec.k == 1) return true;
  if (spec.k == 3 && spec.isotypic()) return true;
  if (spec.k == 7 && spec.total_multiplicity() == 1) return true;
  return false;
}

}  // namespace htype
