#include "flawpark/tables.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace flawpark {

namespace {

void require_table_id(int table_id) {
  if (table_id < 1 || table_id > 5) {
    throw std::invalid_argument("tables: id must be 1..5");
  }
}

}  // namespace

std::vector<TableCell> load_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("tables: cannot open " + path);
  std::vector<TableCell> cells;
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream row(line);
    TableCell cell;
    if (!(row >> cell.n >> cell.second >> cell.leading >> cell.value)) {
      if (row.eof() && line.find_first_not_of(" \t\r") == std::string::npos) {
        continue;
      }
      throw std::runtime_error("tables: malformed row in " + path);
    }
    std::string extra;
    if (row >> extra) {
      const std::string tag = "printed=";
      if (extra.rfind(tag, 0) != 0) {
        throw std::runtime_error("tables: unexpected token in " + path);
      }
      cell.printed = BigInt(extra.substr(tag.size()));
    }
    cells.push_back(cell);
  }
  return cells;
}

BigInt table_oracle(int table_id, int n, int second, int leading,
                    std::uint64_t budget) {
  require_table_id(table_id);
  std::optional<int> lead;
  if (leading != 0) lead = leading;
  if (table_id <= 4) {
    return count_class(make_class_spec(n, {}, second, table_id - 1, lead),
                       budget);
  }
  return count_class(make_class_spec(n, n + second, n + second, 0, lead),
                     budget);
}

std::vector<TableCell> generate_table(int table_id, std::uint64_t budget) {
  require_table_id(table_id);
  std::vector<TableCell> cells;
  auto emit = [&](int n, int second, int leading) {
    TableCell cell;
    cell.n = n;
    cell.second = second;
    cell.leading = leading;
    cell.value = table_oracle(table_id, n, second, leading, budget);
    cells.push_back(cell);
  };
  if (table_id <= 4) {
    int flaws = table_id - 1;
    for (int n = flaws + 1; n <= 7; ++n) {
      for (int s = 1; s <= n; ++s) {
        for (int l = 1; l <= s; ++l) emit(n, s, l);
        emit(n, s, 0);
      }
    }
  } else {
    for (int n = 1; n <= 5; ++n) {
      for (int k = 0; k <= 3; ++k) {
        for (int l = 1; l <= n + k; ++l) emit(n, k, l);
        emit(n, k, 0);
      }
    }
  }
  return cells;
}

TableCheck check_table(int table_id, const std::vector<TableCell>& cells,
                       std::uint64_t budget) {
  require_table_id(table_id);
  TableCheck report;
  for (const TableCell& cell : cells) {
    ++report.cells;
    BigInt fresh =
        table_oracle(table_id, cell.n, cell.second, cell.leading, budget);
    if (fresh != cell.value) ++report.mismatches;
    if (cell.printed && *cell.printed != cell.value) ++report.annotated;
  }
  return report;
}

}  // namespace flawpark
