#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "flawpark/enumerate.hpp"
#include "flawpark/forest.hpp"
#include "flawpark/formulas.hpp"
#include "flawpark/genfun.hpp"
#include "flawpark/parking.hpp"
#include "flawpark/surgery.hpp"
#include "flawpark/tables.hpp"
#include "flawpark/verify.hpp"

namespace {

using Json = nlohmann::ordered_json;
using namespace flawpark;

enum class Format { plain, csv, json };

Format parse_format(const std::string& text) {
  if (text == "plain-table") return Format::plain;
  if (text == "csv") return Format::csv;
  return Format::json;
}

std::string csv_quote(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char ch : field) {
    if (ch == '"') out += '"';
    out += ch;
  }
  out += '"';
  return out;
}

// Uniform tabular output: plain-table prints tab-separated rows with the
// header as a leading comment, csv prints a header row, structured-json an
// array of objects.
struct TableOut {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> notes;

  void print(Format format, bool plain_header = true) const {
    if (format == Format::json) {
      Json doc = Json::array();
      for (const auto& row : rows) {
        Json item;
        for (std::size_t i = 0; i < header.size() && i < row.size(); ++i) {
          item[header[i]] = row[i];
        }
        doc.push_back(std::move(item));
      }
      Json out;
      out["rows"] = std::move(doc);
      if (!notes.empty()) out["notes"] = notes;
      std::cout << out.dump(2) << "\n";
      return;
    }
    if (format == Format::csv) {
      std::string line;
      for (std::size_t i = 0; i < header.size(); ++i) {
        if (i > 0) line += ',';
        line += csv_quote(header[i]);
      }
      std::cout << line << "\n";
      for (const auto& row : rows) {
        line.clear();
        for (std::size_t i = 0; i < row.size(); ++i) {
          if (i > 0) line += ',';
          line += csv_quote(row[i]);
        }
        std::cout << line << "\n";
      }
      for (const auto& note : notes) std::cout << "# " << note << "\n";
      return;
    }
    if (plain_header) {
      std::string line = "#";
      for (const auto& name : header) line += " " + name;
      std::cout << line << "\n";
    }
    for (const auto& row : rows) {
      std::string line;
      for (std::size_t i = 0; i < row.size(); ++i) {
        if (i > 0) line += '\t';
        line += row[i];
      }
      std::cout << line << "\n";
    }
    for (const auto& note : notes) std::cout << "# " << note << "\n";
  }
};

// Key/value output for the scalar commands.
struct ReportOut {
  std::vector<std::pair<std::string, std::string>> fields;

  void add(const std::string& key, const std::string& value) {
    fields.emplace_back(key, value);
  }
  void add(const std::string& key, const BigInt& value) {
    add(key, value.str());
  }
  void add(const std::string& key, int value) {
    add(key, std::to_string(value));
  }

  void print(Format format) const {
    if (format == Format::json) {
      Json out;
      for (const auto& [key, value] : fields) out[key] = value;
      std::cout << out.dump(2) << "\n";
      return;
    }
    if (format == Format::csv) {
      std::cout << "key,value\n";
      for (const auto& [key, value] : fields) {
        std::cout << csv_quote(key) << ',' << csv_quote(value) << "\n";
      }
      return;
    }
    for (const auto& [key, value] : fields) {
      std::cout << key << '\t' << value << "\n";
    }
  }
};

std::vector<int> parse_entries(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(std::stoi(item));
  return out;
}

std::string join(const std::vector<int>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(values[i]);
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

int max_entry(const PreferenceSet& pref) {
  return pref.entries.empty()
             ? 0
             : *std::max_element(pref.entries.begin(), pref.entries.end());
}

// Sequences handed to the forest pipeline must park completely; a flawed
// sequence on its own length is first widened by its flaw count.
PreferenceSet widen_if_flawed(const PreferenceSet& pref) {
  if (park(pref).flaws == 0) return pref;
  return embed_with_flaws(pref);
}

// Narrow a pipeline result back onto the caller's spaces when possible.
PreferenceSet present(const PreferenceSet& wide, int spaces) {
  if (wide.spaces != spaces && max_entry(wide) <= spaces) {
    return make_preference_set(wide.entries, spaces);
  }
  return wide;
}

struct CommonFlags {
  int n = 0;
  std::optional<int> m;
  std::optional<int> s;
  int k = 0;
  std::optional<int> l;
  std::uint64_t budget = kDefaultBudget;
  std::string format = "plain-table";
};

int require_flag(const std::optional<int>& value, const char* name) {
  if (!value) {
    throw std::invalid_argument(std::string("missing required flag ") + name);
  }
  return *value;
}

int run_count(const CommonFlags& f, const std::string& formula) {
  Format format = parse_format(f.format);
  ReportOut rep;
  if (formula.empty()) {
    ClassSpec spec = make_class_spec(f.n, f.m, f.s, f.k, f.l);
    rep.add("n", spec.cars);
    rep.add("m", spec.spaces);
    rep.add("s", spec.max_pref);
    rep.add("k", spec.flaws);
    if (spec.leading) rep.add("l", *spec.leading);
    rep.add("count", count_class(spec, f.budget));
    rep.print(format);
    return 0;
  }

  BigInt value;
  BigInt oracle;
  if (formula == "count-parking") {
    int m = f.m.value_or(f.n);
    value = count_parking(f.n, m);
    oracle = count_class(make_class_spec(f.n, m, {}, 0), f.budget);
  } else if (formula == "count-by-last-empty") {
    int s = require_flag(f.s, "--s");
    value = count_by_last_empty(f.n, s, f.k);
    oracle = count_class(make_class_spec(f.n, {}, s, f.k), f.budget);
  } else if (formula == "leading-one-embedded") {
    value = leading_one_embedded(f.n, f.k);
    oracle = count_class(make_class_spec(f.n, f.n + f.k, {}, 0, 1), f.budget);
  } else if (formula == "lead-replace") {
    int l = require_flag(f.l, "--l");
    value = lead_replace_count(f.n, f.k, l);
    oracle = 0;
    for_each_in_class(
        make_class_spec(f.n, f.n + f.k, {}, 0, l),
        [&](const PreferenceSet& alpha) {
          LeadingStats st = leading_stats(alpha, park(alpha));
          if (st.multiplicity == 1 && st.lead_rank == l - st.empties_below &&
              st.empties_below == f.k) {
            ++oracle;
          }
        },
        f.budget);
  } else if (formula == "leading-delta-embedded") {
    int l = require_flag(f.l, "--l");
    value = leading_delta_embedded(f.n, f.k, l);
    oracle = count_class(make_class_spec(f.n, f.n + f.k, {}, 0, l), f.budget) -
             count_class(make_class_spec(f.n, f.n + f.k, {}, 0, l + 1),
                         f.budget);
  } else if (formula == "leading-one-bounded") {
    int s = require_flag(f.s, "--s");
    value = leading_one_bounded(f.n, s, f.k);
    oracle = count_class(make_class_spec(f.n, {}, s, f.k, 1), f.budget);
  } else if (formula == "low-max-empty") {
    int s = require_flag(f.s, "--s");
    int l = require_flag(f.l, "--l");
    value = low_max_empty_count(f.n, s, f.k, l);
    oracle = 0;
    for_each_in_class(
        make_class_spec(f.n, {}, s, f.k, l),
        [&](const PreferenceSet& alpha) {
          PreferenceSet wide = embed_with_flaws(alpha);
          if (leading_stats(wide, park(wide)).max_empty < l) ++oracle;
        },
        f.budget);
  } else if (formula == "leading-delta-bounded") {
    int s = require_flag(f.s, "--s");
    int l = require_flag(f.l, "--l");
    value = leading_delta_bounded(f.n, s, f.k, l);
    oracle =
        count_class(make_class_spec(f.n, {}, s, f.k, l + 1), f.budget) -
        count_class(make_class_spec(f.n, {}, s, f.k, l), f.budget);
  } else if (formula == "lead-replace-bounded") {
    int s = require_flag(f.s, "--s");
    int l = require_flag(f.l, "--l");
    value = lead_replace_count_bounded(f.n, s, f.k, l);
    oracle = 0;
    for_each_in_class(
        make_class_spec(f.n, {}, s, f.k, l),
        [&](const PreferenceSet& alpha) {
          PreferenceSet wide = embed_with_flaws(alpha);
          LeadingStats st = leading_stats(wide, park(wide));
          if (st.multiplicity == 1 && st.lead_rank == l - st.empties_below &&
              st.empties_below == f.k - 1) {
            ++oracle;
          }
        },
        f.budget);
  } else {
    throw std::invalid_argument("unknown formula " + formula);
  }

  bool match = value == oracle;
  rep.add("formula", formula);
  rep.add("count", oracle);
  rep.add("value", value);
  rep.add("match", match ? "yes" : "no");
  rep.print(format);
  return match ? 0 : 2;
}

int run_enumerate(const CommonFlags& f, bool outcomes) {
  Format format = parse_format(f.format);
  ClassSpec spec = make_class_spec(f.n, f.m, f.s, f.k, f.l);
  TableOut table;
  table.header = {"pref"};
  if (outcomes) {
    table.header.insert(table.header.end(),
                        {"assignment", "empty_spaces", "flaws"});
  }
  for_each_in_class(
      spec,
      [&](const PreferenceSet& pref) {
        std::vector<std::string> row{join(pref.entries)};
        if (outcomes) {
          ParkingOutcome outcome = park(pref);
          row.push_back(join(outcome.assignment));
          row.push_back(join(outcome.empty_spaces));
          row.push_back(std::to_string(outcome.flaws));
        }
        table.rows.push_back(std::move(row));
      },
      f.budget);
  table.print(format, /*plain_header=*/outcomes);
  return 0;
}

int run_table(int id, const std::string& data_dir, std::uint64_t budget,
              const std::string& format_name) {
  Format format = parse_format(format_name);
  auto fixture =
      load_table(data_dir + "/table" + std::to_string(id) + ".tsv");
  auto fresh = generate_table(id, budget);

  std::map<std::array<int, 3>, const TableCell*> by_key;
  for (const auto& cell : fixture) {
    by_key[{cell.n, cell.second, cell.leading}] = &cell;
  }

  bool mismatch = false;
  TableOut out;
  std::size_t matched = 0;
  if (format == Format::plain) {
    out.header = {"n", "second", "l=1..", "total"};
    std::vector<std::string> row;
    for (const auto& cell : fresh) {
      if (row.empty()) {
        row.push_back(std::to_string(cell.n));
        row.push_back(std::to_string(cell.second));
      }
      std::string text = cell.value.str();
      auto it = by_key.find({cell.n, cell.second, cell.leading});
      const TableCell* stored = it == by_key.end() ? nullptr : it->second;
      if (stored) ++matched;
      if (stored && stored->printed) {
        text += "*";
        out.notes.push_back(
            "printed n=" + std::to_string(cell.n) +
            " second=" + std::to_string(cell.second) +
            " l=" + std::to_string(cell.leading) + ": " +
            stored->printed->str() + " (counted " + cell.value.str() + ")");
      }
      if (!stored || stored->value != cell.value) {
        mismatch = true;
        text += "!";
        out.notes.push_back(
            "mismatch n=" + std::to_string(cell.n) +
            " second=" + std::to_string(cell.second) +
            " l=" + std::to_string(cell.leading) + ": counted " +
            cell.value.str() +
            (stored ? ", stored " + stored->value.str() : ", no stored cell"));
      }
      row.push_back(std::move(text));
      if (cell.leading == 0) {
        out.rows.push_back(std::move(row));
        row.clear();
      }
    }
  } else {
    out.header = {"n", "second", "leading", "value", "note"};
    for (const auto& cell : fresh) {
      auto it = by_key.find({cell.n, cell.second, cell.leading});
      const TableCell* stored = it == by_key.end() ? nullptr : it->second;
      if (stored) ++matched;
      std::string note;
      if (stored && stored->printed) note = "printed=" + stored->printed->str();
      if (!stored || stored->value != cell.value) {
        mismatch = true;
        note = stored ? "mismatch stored=" + stored->value.str()
                      : "mismatch no stored cell";
      }
      out.rows.push_back({std::to_string(cell.n), std::to_string(cell.second),
                          std::to_string(cell.leading), cell.value.str(),
                          note});
    }
  }
  if (matched != fixture.size()) {
    mismatch = true;
    out.notes.push_back("fixture holds cells outside the generated grid");
  }
  out.print(format);
  return mismatch ? 2 : 0;
}

void describe_forest(const LabeledForest& forest, std::optional<int> bound,
                     ReportOut& rep) {
  rep.add("forest", serialize_forest(forest));
  ForestOrder order = forest_order(forest);
  rep.add("order", join(order.order));
  rep.add("tree_sizes", join(order.tree_sizes));
  rep.add("mu", join(order.mu));
  rep.add("specification", join(forest_specification(forest)));
  TripletForest tf = triplet_forest(forest);
  std::string triplets;
  for (int label = 1; label <= forest.size(); ++label) {
    if (label > 1) triplets += ' ';
    triplets += std::to_string(label) + ":" +
                std::to_string(tf.pref[label - 1]) + "/" +
                std::to_string(tf.rank[label - 1]);
  }
  rep.add("triplets", triplets);
  if (bound) {
    rep.add("bound", *bound);
    rep.add("restricted",
            in_restricted_family(forest, *bound) ? "inside" : "outside");
  }
}

int run_forest(const std::string& pref_text, std::optional<int> spaces,
               const std::string& file, std::optional<int> bound,
               const std::string& format_name) {
  Format format = parse_format(format_name);
  ReportOut rep;
  LabeledForest forest;
  if (!file.empty()) {
    forest = parse_forest(read_file(file));
  } else {
    PreferenceSet input = make_preference_set(
        parse_entries(pref_text), require_flag(spaces, "--spaces"));
    PreferenceSet work = widen_if_flawed(input);
    rep.add("pref", join(input.entries));
    rep.add("spaces", input.spaces);
    if (work.spaces != input.spaces) rep.add("widened_spaces", work.spaces);
    forest = phi(work);
  }
  describe_forest(forest, bound, rep);
  rep.print(format);
  return 0;
}

int run_bijection(const std::string& name, const std::string& direction_name,
                  const std::string& pref_text, std::optional<int> spaces,
                  const std::string& file, std::optional<int> bound,
                  const std::string& format_name) {
  Format format = parse_format(format_name);
  Direction direction = direction_name == "backward" ? Direction::backward
                                                     : Direction::forward;
  ReportOut rep;

  if (name == "phi-inverse") {
    if (file.empty()) throw std::invalid_argument("phi-inverse needs --file");
    LabeledForest forest = parse_forest(read_file(file));
    PreferenceSet pref = phi_inverse(forest);
    rep.add("input", serialize_forest(forest));
    rep.add("output", join(pref.entries));
    rep.add("spaces", pref.spaces);
    rep.print(format);
    return 0;
  }

  // Forest-file input runs the surgery directly on the parsed forest.
  if (!file.empty()) {
    LabeledForest forest = parse_forest(read_file(file));
    TripletForest tf = triplet_forest(forest);
    TripletForest mapped = tf;
    if (name == "move") {
      mapped = psi_move(tf, direction);
    } else if (name == "root-shift") {
      mapped = psi_rootshift(tf, direction);
    } else if (name == "flaw-raise") {
      mapped = flaw_raise(tf, require_flag(bound, "--bound"), direction);
    } else if (name == "flaw-seed") {
      mapped = flaw_seed(tf, direction);
    } else {
      throw std::invalid_argument("bijection " + name +
                                  " does not take a forest file");
    }
    rep.add("input", serialize_forest(forest));
    rep.add("output", serialize_forest(mapped.forest));
    rep.print(format);
    return 0;
  }

  PreferenceSet input = make_preference_set(parse_entries(pref_text),
                                            require_flag(spaces, "--spaces"));
  rep.add("input", join(input.entries));
  rep.add("spaces", input.spaces);
  PreferenceSet work = widen_if_flawed(input);
  if (work.spaces != input.spaces) rep.add("widened_spaces", work.spaces);

  if (name == "phi") {
    rep.add("output", serialize_forest(phi(work)));
    rep.print(format);
    return 0;
  }

  PreferenceSet result = work;
  if (name == "move") {
    result = phi_inverse(psi_move(triplet_forest(phi(work)), direction));
  } else if (name == "root-shift") {
    result = phi_inverse(psi_rootshift(triplet_forest(phi(work)), direction));
  } else if (name == "lead-replace") {
    result = psi_lead_replace(work, direction);
  } else if (name == "flaw-raise") {
    result = phi_inverse(flaw_raise(triplet_forest(phi(work)),
                                    require_flag(bound, "--bound"), direction));
  } else if (name == "flaw-seed") {
    result = phi_inverse(flaw_seed(triplet_forest(phi(work)), direction));
  } else {
    throw std::invalid_argument("unknown bijection " + name);
  }
  PreferenceSet shown = present(result, input.spaces);
  rep.add("output", join(shown.entries));
  rep.add("output_spaces", shown.spaces);
  rep.print(format);
  return 0;
}

int run_series(const std::string& name, std::optional<int> k,
               std::optional<int> s, std::optional<int> l,
               std::optional<int> degree, const std::string& format_name) {
  Format format = parse_format(format_name);
  int deg = degree.value_or(name == "F" ? 6 : 7);
  TableOut out;

  auto sequence_rows = [&](const MultiSeries& series, const std::string& note) {
    out.header = {"n", "value"};
    out.notes.push_back(note + " scale=n!");
    for (int n = 0; n <= deg; ++n) {
      out.rows.push_back({std::to_string(n), sequence_count(series, n).str()});
    }
  };
  auto pointed_rows = [&](const MultiSeries& series, const std::string& note) {
    out.header = {"n", "value"};
    out.notes.push_back(note + " scale=(n-1)!");
    for (int n = 1; n <= deg; ++n) {
      out.rows.push_back({std::to_string(n), pointed_count(series, n).str()});
    }
  };

  if (name == "P") {
    sequence_rows(series_P(deg), "series P");
  } else if (name == "Q") {
    int kk = require_flag(k, "--k");
    sequence_rows(series_Q(kk, deg), "series Q k=" + std::to_string(kk));
  } else if (name == "R") {
    int kk = require_flag(k, "--k");
    sequence_rows(series_R(kk, deg), "series R k=" + std::to_string(kk));
  } else if (name == "D") {
    int kk = require_flag(k, "--k");
    int ss = require_flag(s, "--s");
    sequence_rows(series_D(kk, ss, deg), "series D k=" + std::to_string(kk) +
                                             " s=" + std::to_string(ss));
  } else if (name == "I") {
    int kk = require_flag(k, "--k");
    pointed_rows(series_I(kk, deg), "series I k=" + std::to_string(kk));
  } else if (name == "H") {
    int ll = require_flag(l, "--l");
    int kk = require_flag(k, "--k");
    pointed_rows(series_H(ll, kk, deg), "series H l=" + std::to_string(ll) +
                                            " k=" + std::to_string(kk));
  } else if (name == "M") {
    int ss = require_flag(s, "--s");
    int kk = require_flag(k, "--k");
    pointed_rows(series_M(ss, kk, deg), "series M s=" + std::to_string(ss) +
                                            " k=" + std::to_string(kk));
  } else if (name == "W") {
    int kk = require_flag(k, "--k");
    int ss = require_flag(s, "--s");
    int ll = require_flag(l, "--l");
    pointed_rows(series_W(kk, ss, ll, deg),
                 "series W k=" + std::to_string(kk) +
                     " s=" + std::to_string(ss) + " l=" + std::to_string(ll));
  } else if (name == "F") {
    MultiSeries f = series_F_xyz(deg, deg - 1, deg - 1);
    out.header = {"n", "s", "k", "value"};
    out.notes.push_back("series F scale=(n-1)!");
    for (int n = 1; n <= deg; ++n) {
      for (int ss = 0; ss <= deg - 1; ++ss) {
        for (int kk = 0; kk <= deg - 1; ++kk) {
          MultiSeries slice =
              coefficient_slice(coefficient_slice(f, kVarZ, kk), kVarY, ss);
          out.rows.push_back({std::to_string(n), std::to_string(ss),
                              std::to_string(kk),
                              pointed_count(slice, n).str()});
        }
      }
    }
  } else {
    throw std::invalid_argument("unknown series " + name);
  }
  out.print(format);
  return 0;
}

int run_verify(const std::string& suite, const std::string& data_dir,
               int max_n, int max_k, int degree, int joint_degree,
               std::uint64_t budget, const std::string& format_name) {
  Format format = parse_format(format_name);
  std::vector<CheckResult> results;
  auto take = [&](std::vector<CheckResult> more) {
    results.insert(results.end(), std::make_move_iterator(more.begin()),
                   std::make_move_iterator(more.end()));
  };
  bool all = suite == "all";
  if (all || suite == "tables") take(verify_tables(data_dir, budget));
  if (all || suite == "formulas") take(verify_formulas(max_n, budget));
  if (all || suite == "identities") take(verify_identity_suite(max_n, budget));
  if (all || suite == "bijections") {
    take(verify_bijections(std::min(max_n, 5), max_k, budget));
  }
  if (all || suite == "series") {
    take(verify_series(degree, joint_degree, budget));
    take(verify_exp_identity(8));
  }

  int failed = 0;
  for (const auto& r : results) {
    if (!r.pass) ++failed;
  }
  if (format == Format::json) {
    Json doc;
    Json list = Json::array();
    for (const auto& r : results) {
      list.push_back(Json{{"suite", r.suite},
                          {"name", r.name},
                          {"pass", r.pass},
                          {"detail", r.detail}});
    }
    doc["results"] = std::move(list);
    doc["total"] = results.size();
    doc["failed"] = failed;
    doc["pass"] = failed == 0;
    std::cout << doc.dump(2) << "\n";
  } else if (format == Format::csv) {
    std::cout << "suite,name,pass,detail\n";
    for (const auto& r : results) {
      std::cout << csv_quote(r.suite) << ',' << csv_quote(r.name) << ','
                << (r.pass ? "yes" : "no") << ',' << csv_quote(r.detail)
                << "\n";
    }
  } else {
    for (const auto& r : results) {
      std::cout << (r.pass ? "PASS" : "FAIL") << '\t' << r.suite << '/'
                << r.name << '\t' << r.detail << "\n";
    }
    std::cout << "passed " << results.size() - failed << "/" << results.size()
              << "\n";
  }
  return failed == 0 ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"flawed parking sequence toolkit"};
  app.require_subcommand(1);
  const std::vector<std::string> format_names{"plain-table", "csv",
                                              "structured-json"};

  CommonFlags flags;
  std::string formula;
  bool outcomes = false;
  int table_id = 1;
  std::string data_dir = "data";
  std::string pref_text;
  std::optional<int> spaces;
  std::string file;
  std::optional<int> bound;
  std::string bijection_name;
  std::string direction = "forward";
  std::string series_name;
  std::optional<int> series_k, series_s, series_l, series_deg;
  std::string suite = "all";
  int max_n = 6;
  int max_k = 2;
  int degree = 7;
  int joint_degree = 6;

  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", flags.format, "output format")
        ->check(CLI::IsMember(format_names));
  };
  auto add_budget = [&](CLI::App* cmd) {
    cmd->add_option("--budget", flags.budget, "enumeration budget");
  };
  auto add_class_flags = [&](CLI::App* cmd, bool require_n = true) {
    auto* n_opt = cmd->add_option("--n", flags.n, "number of cars");
    if (require_n) n_opt->required();
    cmd->add_option("--m", flags.m, "number of spaces (default n)");
    cmd->add_option("--s", flags.s, "preference bound (default m)");
    cmd->add_option("--k", flags.k, "number of unparked cars");
    cmd->add_option("--l", flags.l, "first entry");
    add_budget(cmd);
    add_format(cmd);
  };

  auto* cmd_count = app.add_subcommand("count", "count a sequence class");
  add_class_flags(cmd_count);
  cmd_count->add_option("--formula", formula,
                        "closed formula to evaluate against the count");

  auto* cmd_enumerate =
      app.add_subcommand("enumerate", "list every sequence in a class");
  add_class_flags(cmd_enumerate);
  cmd_enumerate->add_flag("--outcomes", outcomes,
                          "include parking outcomes per sequence");

  auto* cmd_table =
      app.add_subcommand("table", "regenerate a reference table");
  cmd_table->add_option("--id", table_id, "table number")
      ->required()
      ->check(CLI::Range(1, 5));
  cmd_table->add_option("--data", data_dir, "fixture directory");
  add_budget(cmd_table);
  add_format(cmd_table);

  auto* cmd_forest = app.add_subcommand("forest", "inspect a sequence forest");
  cmd_forest->add_option("--pref", pref_text, "comma-separated entries");
  cmd_forest->add_option("--spaces", spaces, "number of spaces");
  cmd_forest->add_option("--file", file, "serialized forest file");
  cmd_forest->add_option("--bound", bound, "restricted-family bound to test");
  add_format(cmd_forest);

  auto* cmd_bijection =
      app.add_subcommand("bijection", "apply a bijection or surgery");
  cmd_bijection
      ->add_option("--name", bijection_name,
                   "phi | phi-inverse | move | root-shift | lead-replace | "
                   "flaw-raise | flaw-seed")
      ->required()
      ->check(CLI::IsMember({"phi", "phi-inverse", "move", "root-shift",
                             "lead-replace", "flaw-raise", "flaw-seed"}));
  cmd_bijection->add_option("--direction", direction, "forward | backward")
      ->check(CLI::IsMember({"forward", "backward"}));
  cmd_bijection->add_option("--pref", pref_text, "comma-separated entries");
  cmd_bijection->add_option("--spaces", spaces, "number of spaces");
  cmd_bijection->add_option("--file", file, "serialized forest file");
  cmd_bijection->add_option("--bound", bound, "preference bound");
  add_format(cmd_bijection);

  auto* cmd_series =
      app.add_subcommand("series", "print scaled series coefficients");
  cmd_series
      ->add_option("--name", series_name,
                   "P | Q | R | D | I | H | M | W | F")
      ->required()
      ->check(CLI::IsMember({"P", "Q", "R", "D", "I", "H", "M", "W", "F"}));
  cmd_series->add_option("--k", series_k, "flaw index");
  cmd_series->add_option("--s", series_s, "bound offset");
  cmd_series->add_option("--l", series_l, "lead offset");
  cmd_series->add_option("--deg", series_deg, "truncation degree");
  add_format(cmd_series);

  auto* cmd_verify = app.add_subcommand("verify", "run a verification suite");
  cmd_verify->add_option("--suite", suite, "suite to run")
      ->check(CLI::IsMember(
          {"tables", "formulas", "identities", "bijections", "series", "all"}));
  cmd_verify->add_option("--data", data_dir, "fixture directory");
  cmd_verify->add_option("--max-n", max_n, "largest car count");
  cmd_verify->add_option("--max-k", max_k, "largest extra space count");
  cmd_verify->add_option("--degree", degree, "univariate series degree");
  cmd_verify->add_option("--joint-degree", joint_degree,
                         "multivariate series degree");
  add_budget(cmd_verify);
  add_format(cmd_verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (*cmd_count) return run_count(flags, formula);
    if (*cmd_enumerate) return run_enumerate(flags, outcomes);
    if (*cmd_table) {
      return run_table(table_id, data_dir, flags.budget, flags.format);
    }
    if (*cmd_forest) {
      return run_forest(pref_text, spaces, file, bound, flags.format);
    }
    if (*cmd_bijection) {
      return run_bijection(bijection_name, direction, pref_text, spaces, file,
                           bound, flags.format);
    }
    if (*cmd_series) {
      return run_series(series_name, series_k, series_s, series_l, series_deg,
                        flags.format);
    }
    if (*cmd_verify) {
      return run_verify(suite, data_dir, max_n, max_k, degree, joint_degree,
                        flags.budget, flags.format);
    }
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.required << " candidates, allowed "
              << e.allowed << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
