#pragma once

#include <optional>
#include <string>
#include <vector>

#include "flawpark/enumerate.hpp"

namespace flawpark {

// One reference-table cell.  Tables 1-4 fix the flaw count at id-1 and key
// cells by (n, bound, leading); table 5 counts complete sequences keyed by
// (n, extra spaces, leading).  leading == 0 marks the row total.  `printed`
// preserves a published value when it differs from the true count.
struct TableCell {
  int n = 0;
  int second = 0;
  int leading = 0;
  BigInt value;
  std::optional<BigInt> printed;
};

// Reads a fixture: tab-separated "n second leading value" rows, optionally
// followed by printed=<value>; '#' starts a comment.
std::vector<TableCell> load_table(const std::string& path);

BigInt table_oracle(int table_id, int n, int second, int leading,
                    std::uint64_t budget = kDefaultBudget);

// Every cell of the published grid for one table, freshly counted.
std::vector<TableCell> generate_table(int table_id,
                                      std::uint64_t budget = kDefaultBudget);

struct TableCheck {
  int cells = 0;
  int mismatches = 0;
  int annotated = 0;  // cells whose published value differs from the count
};

// Recounts every cell and compares with the stored true value.
TableCheck check_table(int table_id, const std::vector<TableCell>& cells,
                       std::uint64_t budget = kDefaultBudget);

}  // namespace flawpark
