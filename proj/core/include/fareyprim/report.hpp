#ifndef FAREYPRIM_REPORT_HPP_
#define FAREYPRIM_REPORT_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fareyprim/continued_fraction.hpp"
#include "fareyprim/enumeration.hpp"
#include "fareyprim/farey.hpp"
#include "fareyprim/word.hpp"

namespace fareyprim {

/// One line of the enumeration table.
struct TableRow {
  Rational fraction;
  Scheme scheme = Scheme::Positive;
  CFSeq cf;
  std::int64_t level = 0;
  Parity parity = Parity::Even;
  /// Parents in concatenation order; absent for 0/1 and 1/0.
  std::optional<ParentProduct> parents;
  Word left_word;
  Word right_word;
  Word word;
  FactorCase kind = FactorCase::Base;
  bool palindrome = false;
};

enum class TableFormat { Table, Json, Csv };

TableRow make_row(Enumerator& enumerator, Rational x, Scheme roots = Scheme::Positive);

/// Rows for rationals_by_level(max_level, sign).
std::vector<TableRow> enumeration_table(std::int64_t max_level, SignFilter sign);

/// "0/1 + 1/1", or "-" without parents.
std::string parents_text(const TableRow& row);

/// "A^-1 * b A^-1": factor words in caret form joined by " * ". Base rows
/// without parents show the word itself.
std::string product_text(const TableRow& row);

/// CSV columns: fraction,parents,parity,word,product,simplified,level,length,
/// cf,palindrome,case. `word` is the compact letter string and `simplified`
/// the caret form.
std::string render_table(const std::vector<TableRow>& rows, TableFormat format);

}  // namespace fareyprim

#endif  // FAREYPRIM_REPORT_HPP_
