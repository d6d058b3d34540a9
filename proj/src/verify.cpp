#include "flawpark/verify.hpp"

#include <algorithm>
#include <array>
#include <initializer_list>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "flawpark/forest.hpp"
#include "flawpark/formulas.hpp"
#include "flawpark/genfun.hpp"
#include "flawpark/identities.hpp"
#include "flawpark/parking.hpp"
#include "flawpark/series.hpp"
#include "flawpark/surgery.hpp"
#include "flawpark/tables.hpp"

namespace flawpark {
namespace {

constexpr int kMaxDetails = 3;

// Accumulates per-instance outcomes for one named check.
class Check {
 public:
  Check(std::string suite, std::string name)
      : suite_(std::move(suite)), name_(std::move(name)) {}

  void expect(bool ok, const std::string& what) {
    ++instances_;
    if (ok) return;
    ++failures_;
    if (static_cast<int>(details_.size()) < kMaxDetails) {
      details_.push_back(what);
    }
  }

  template <typename L, typename R>
  void expect_eq(const L& lhs, const R& rhs, const std::string& what) {
    if (lhs == rhs) {
      ++instances_;
      return;
    }
    std::ostringstream os;
    os << what << ": " << lhs << " != " << rhs;
    expect(false, os.str());
  }

  CheckResult result() const {
    CheckResult out;
    out.suite = suite_;
    out.name = name_;
    out.pass = failures_ == 0;
    std::ostringstream os;
    os << instances_ << " instances";
    if (failures_ > 0) {
      os << ", " << failures_ << " failed: ";
      for (std::size_t i = 0; i < details_.size(); ++i) {
        if (i > 0) os << "; ";
        os << details_[i];
      }
      if (failures_ > static_cast<int>(details_.size())) os << "; ...";
    }
    out.detail = os.str();
    return out;
  }

 private:
  std::string suite_;
  std::string name_;
  int instances_ = 0;
  int failures_ = 0;
  std::vector<std::string> details_;
};

BigInt cc(int cars, std::optional<int> spaces, std::optional<int> max_pref,
          int flaws, std::optional<int> leading, std::uint64_t budget) {
  return count_class(make_class_spec(cars, spaces, max_pref, flaws, leading),
                     budget);
}

std::string seq_str(const std::vector<int>& entries) {
  std::string out;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(entries[i]);
  }
  return out;
}

std::string tag(const char* name, int value) {
  return std::string(name) + "=" + std::to_string(value);
}

std::string ctx(std::initializer_list<std::pair<const char*, int>> parts) {
  std::string out;
  for (const auto& [name, value] : parts) {
    if (!out.empty()) out += ' ';
    out += tag(name, value);
  }
  return out;
}

LeadingStats stats_of(const PreferenceSet& pref) {
  return leading_stats(pref, park(pref));
}

int max_entry(const PreferenceSet& pref) {
  return pref.entries.empty()
             ? 0
             : *std::max_element(pref.entries.begin(), pref.entries.end());
}

// Leading-statistic block of a complete sequence with lead entry l on n+k
// spaces: 1 when the lead entry repeats or its rank exceeds the slack, 2 when
// it sits at the slack with empty spaces still above it, 3 otherwise.
int source_block(const LeadingStats& st, int l, int k) {
  if (st.lead_rank > l - st.empties_below || st.multiplicity >= 2) return 1;
  if (st.empties_below <= k - 1) return 2;
  return 3;
}

// On the raised-lead side the split is by the gap to the last empty space
// below: 1 when the lead clears it by two or more, 2 when it lands just above.
int image_block(const LeadingStats& st, int lead) {
  if (lead >= st.max_empty_below + 2) return 1;
  return 2;
}

// Same split for bounded sequences, read off the widened form; block 0 holds
// the sequences whose empty spaces all sit below the lead entry.
int bounded_source_block(const LeadingStats& st, int l, int k) {
  if (st.empties_below == k) return 0;
  if (st.lead_rank > l - st.empties_below || st.multiplicity >= 2) return 1;
  if (st.empties_below <= k - 2) return 2;
  return 3;
}

int bounded_image_block(const LeadingStats& st, int lead, int k) {
  if (st.empties_below == k) return 0;
  return image_block(st, lead);
}

}  // namespace

std::vector<CheckResult> verify_tables(const std::string& data_dir,
                                       std::uint64_t budget) {
  std::vector<CheckResult> out;
  for (int id = 1; id <= 5; ++id) {
    Check c("tables", "table" + std::to_string(id));
    try {
      auto fixture = load_table(data_dir + "/table" + std::to_string(id) +
                                ".tsv");
      auto fresh = generate_table(id, budget);
      c.expect_eq(fixture.size(), fresh.size(), "cell count");
      if (fixture.size() == fresh.size()) {
        for (std::size_t i = 0; i < fixture.size(); ++i) {
          const auto& have = fixture[i];
          const auto& want = fresh[i];
          std::string where = ctx({{"n", have.n},
                                   {"second", have.second},
                                   {"l", have.leading}});
          c.expect(have.n == want.n && have.second == want.second &&
                       have.leading == want.leading,
                   "cell key out of order at " + where);
          c.expect_eq(have.value, want.value, "cell " + where);
        }
      }
      int annotated = 0;
      for (const auto& cell : fixture) {
        if (!cell.printed) continue;
        ++annotated;
        bool known = id == 2 && cell.n == 5 && cell.second == 3 &&
                     cell.leading == 2 && cell.value == 16 &&
                     *cell.printed == 616;
        c.expect(known, "unexpected published-value annotation at " +
                            ctx({{"n", cell.n},
                                 {"second", cell.second},
                                 {"l", cell.leading}}));
      }
      c.expect_eq(annotated, id == 2 ? 1 : 0, "annotation count");
    } catch (const BudgetExceeded&) {
      throw;
    } catch (const std::exception& e) {
      c.expect(false, e.what());
    }
    out.push_back(c.result());
  }
  return out;
}

std::vector<CheckResult> verify_formulas(int max_n, std::uint64_t budget) {
  std::vector<CheckResult> out;
  {
    Check c("formulas", "complete-count");
    for (int n = 0; n <= max_n; ++n) {
      for (int m = n; m <= n + 3; ++m) {
        c.expect_eq(count_parking(n, m), cc(n, m, m, 0, {}, budget),
                    ctx({{"n", n}, {"m", m}}));
      }
    }
    out.push_back(c.result());
  }
  {
    Check c("formulas", "count-by-last-empty");
    for (int n = 1; n <= max_n; ++n) {
      for (int s = 1; s <= n; ++s) {
        for (int k = 1; k <= s - 1; ++k) {
          c.expect_eq(count_by_last_empty(n, s, k), cc(n, {}, s, k, {}, budget),
                      ctx({{"n", n}, {"s", s}, {"k", k}}));
        }
      }
    }
    out.push_back(c.result());
  }
  {
    Check c("formulas", "leading-one-embedded");
    for (int k = 0; k <= 3; ++k) {
      for (int n = 1; n <= max_n; ++n) {
        BigInt value = leading_one_embedded(n, k);
        c.expect_eq(value, cc(n, n + k, {}, 0, 1, budget),
                    ctx({{"n", n}, {"k", k}}));
        c.expect_eq(value, count_parking(n - 1, n + k),
                    "shorter-sequence form " + ctx({{"n", n}, {"k", k}}));
      }
    }
    out.push_back(c.result());
  }
  {
    Check c("formulas", "lead-replace");
    for (int k = 0; k <= 3; ++k) {
      for (int n = 1; n <= max_n; ++n) {
        for (int l = k + 1; l <= n + k; ++l) {
          BigInt filtered = 0;
          for_each_in_class(
              make_class_spec(n, n + k, {}, 0, l),
              [&](const PreferenceSet& alpha) {
                LeadingStats st = stats_of(alpha);
                if (st.multiplicity == 1 &&
                    st.lead_rank == l - st.empties_below &&
                    st.empties_below == k) {
                  ++filtered;
                }
              },
              budget);
          c.expect_eq(lead_replace_count(n, k, l), filtered,
                      ctx({{"n", n}, {"k", k}, {"l", l}}));
        }
      }
    }
    out.push_back(c.result());
  }
  {
    Check c("formulas", "leading-delta-embedded");
    for (int k = 0; k <= 3; ++k) {
      for (int n = 2; n <= max_n; ++n) {
        for (int l = k + 1; l <= n + k - 1; ++l) {
          BigInt delta = cc(n, n + k, {}, 0, l, budget) -
                         cc(n, n + k, {}, 0, l + 1, budget);
          c.expect_eq(leading_delta_embedded(n, k, l), delta,
                      ctx({{"n", n}, {"k", k}, {"l", l}}));
        }
      }
    }
    out.push_back(c.result());
  }
  {
    Check c("formulas", "leading-one-bounded");
    for (int k = 1; k <= 3; ++k) {
      for (int n = 1; n <= max_n; ++n) {
        for (int s = k + 1; s <= n; ++s) {
          c.expect_eq(leading_one_bounded(n, s, k), cc(n, {}, s, k, 1, budget),
                      ctx({{"n", n}, {"s", s}, {"k", k}}));
        }
      }
    }
    out.push_back(c.result());
  }
  {
    Check c("formulas", "low-max-empty");
    for (int k = 1; k <= 3; ++k) {
      for (int n = 1; n <= max_n; ++n) {
        for (int s = k + 1; s <= n; ++s) {
          for (int l = k; l <= s - 1; ++l) {
            BigInt filtered = 0;
            for_each_in_class(
                make_class_spec(n, {}, s, k, l),
                [&](const PreferenceSet& alpha) {
                  if (stats_of(embed_with_flaws(alpha)).max_empty < l) {
                    ++filtered;
                  }
                },
                budget);
            c.expect_eq(low_max_empty_count(n, s, k, l), filtered,
                        ctx({{"n", n}, {"s", s}, {"k", k}, {"l", l}}));
          }
        }
      }
    }
    out.push_back(c.result());
  }
  {
    Check c("formulas", "leading-delta-bounded");
    for (int k = 1; k <= 3; ++k) {
      for (int n = 1; n <= max_n; ++n) {
        for (int s = k + 1; s <= n; ++s) {
          for (int l = k; l <= s - 1; ++l) {
            BigInt delta =
                cc(n, {}, s, k, l + 1, budget) - cc(n, {}, s, k, l, budget);
            c.expect_eq(leading_delta_bounded(n, s, k, l), delta,
                        ctx({{"n", n}, {"s", s}, {"k", k}, {"l", l}}));
          }
        }
      }
    }
    out.push_back(c.result());
  }
  {
    Check c("formulas", "lead-replace-bounded");
    for (int k = 1; k <= 3; ++k) {
      for (int n = 1; n <= max_n; ++n) {
        for (int s = k + 3; s <= n; ++s) {
          for (int l = k + 1; l <= s - 2; ++l) {
            BigInt filtered = 0;
            for_each_in_class(
                make_class_spec(n, {}, s, k, l),
                [&](const PreferenceSet& alpha) {
                  LeadingStats st = stats_of(embed_with_flaws(alpha));
                  if (st.multiplicity == 1 &&
                      st.lead_rank == l - st.empties_below &&
                      st.empties_below == k - 1) {
                    ++filtered;
                  }
                },
                budget);
            c.expect_eq(lead_replace_count_bounded(n, s, k, l), filtered,
                        ctx({{"n", n}, {"s", s}, {"k", k}, {"l", l}}));
          }
        }
      }
    }
    out.push_back(c.result());
  }
  {
    Check c("formulas", "spot-values");
    c.expect_eq(count_parking(5, 5), 1296, "count-parking n=5 m=5");
    c.expect_eq(count_parking(2, 3), 8, "count-parking n=2 m=3");
    c.expect_eq(count_parking(0, 4), 1, "count-parking n=0 m=4");
    c.expect_eq(count_by_last_empty(7, 6, 2), 29870,
                "count-by-last-empty n=7 s=6 k=2");
    c.expect_eq(cc(7, {}, 6, 2, {}, budget), 29870, "count n=7 s=6 k=2");
    c.expect_eq(count_by_last_empty(4, 3, 1), 19,
                "count-by-last-empty n=4 s=3 k=1");
    c.expect_eq(count_by_last_empty(3, 2, 1), 1,
                "count-by-last-empty n=3 s=2 k=1");
    c.expect_eq(leading_one_embedded(4, 1), 108,
                "leading-one-embedded n=4 k=1");
    c.expect_eq(leading_one_embedded(3, 2), 24, "leading-one-embedded n=3 k=2");
    c.expect_eq(leading_one_embedded(1, 0), 1, "leading-one-embedded n=1 k=0");
    c.expect_eq(lead_replace_count(3, 0, 2), 2, "lead-replace n=3 k=0 l=2");
    c.expect_eq(lead_replace_count(3, 0, 3), 3, "lead-replace n=3 k=0 l=3");
    c.expect_eq(lead_replace_count(1, 2, 3), 1, "lead-replace n=1 k=2 l=3");
    c.expect_eq(leading_delta_embedded(3, 1, 2), 3,
                "leading-delta-embedded n=3 k=1 l=2");
    c.expect_eq(leading_delta_embedded(4, 0, 1), 16,
                "leading-delta-embedded n=4 k=0 l=1");
    c.expect_eq(leading_delta_embedded(2, 0, 1), 1,
                "leading-delta-embedded n=2 k=0 l=1");
    c.expect_eq(leading_one_bounded(6, 5, 1), 436,
                "leading-one-bounded n=6 s=5 k=1");
    c.expect_eq(leading_one_bounded(4, 3, 1), 1,
                "leading-one-bounded n=4 s=3 k=1");
    c.expect_eq(leading_one_bounded(5, 5, 2), 27,
                "leading-one-bounded n=5 s=5 k=2");
    c.expect_eq(low_max_empty_count(7, 6, 2, 4), 6265,
                "low-max-empty n=7 s=6 k=2 l=4");
    {
      BigInt filtered = 0;
      for_each_in_class(
          make_class_spec(7, {}, 6, 2, 4),
          [&](const PreferenceSet& alpha) {
            if (stats_of(embed_with_flaws(alpha)).max_empty < 4) ++filtered;
          },
          budget);
      c.expect_eq(filtered, 6265, "low-max-empty count n=7 s=6 k=2 l=4");
    }
    c.expect_eq(leading_delta_bounded(7, 6, 1, 4), 440,
                "leading-delta-bounded n=7 s=6 k=1 l=4");
    c.expect_eq(cc(7, {}, 6, 1, 5, budget), 19042, "count n=7 s=6 k=1 lead=5");
    c.expect_eq(cc(7, {}, 6, 1, 5, budget) - cc(7, {}, 6, 1, 4, budget), 440,
                "count delta n=7 s=6 k=1 l=4");
    c.expect_eq(leading_delta_bounded(5, 4, 1, 2), 13,
                "leading-delta-bounded n=5 s=4 k=1 l=2");
    c.expect_eq(leading_delta_bounded(4, 4, 2, 2), 7,
                "leading-delta-bounded n=4 s=4 k=2 l=2");
    c.expect_eq(leading_delta_bounded(4, 4, 2, 3), 5,
                "leading-delta-bounded n=4 s=4 k=2 l=3");
    c.expect_eq(lead_replace_count_bounded(7, 6, 1, 4), 320,
                "lead-replace-bounded n=7 s=6 k=1 l=4");
    c.expect_eq(cc(5, 8, {}, 0, 5, budget), 3520, "count n=5 m=8 lead=5");
    c.expect_eq(cc(3, {}, {}, 0, {}, budget), 16, "count n=3 complete");
    out.push_back(c.result());
  }
  return out;
}

std::vector<CheckResult> verify_identity_suite(int max_n,
                                               std::uint64_t budget) {
  std::vector<CheckResult> out;
  for (const auto& family : identity_families()) {
    Check c("identities", family);
    for (const auto& r : verify_identities(family, max_n, budget)) {
      std::ostringstream os;
      os << r.params << ": " << r.lhs << " != " << r.rhs;
      c.expect(r.pass, os.str());
    }
    out.push_back(c.result());
  }
  {
    Check c("identities", "spot-values");
    c.expect_eq(cc(5, {}, 4, 2, 4, budget), 23, "count n=5 s=4 k=2 lead=4");
    c.expect_eq(cc(5, {}, 4, 1, 1, budget), 23, "count n=5 s=4 k=1 lead=1");
    c.expect_eq(cc(4, {}, {}, 1, 4, budget), 34, "count n=4 k=1 lead=4");
    c.expect_eq(cc(4, {}, {}, 0, 2, budget), 34, "count n=4 lead=2");
    c.expect_eq(cc(4, {}, {}, 1, 4, budget) - cc(4, {}, {}, 1, 3, budget),
                count_parking(2, 2), "top-lead gap n=4 k=1");
    out.push_back(c.result());
  }
  return out;
}

std::vector<CheckResult> verify_bijections(int max_n, int max_k,
                                           std::uint64_t budget) {
  std::vector<CheckResult> out;
  int cap = std::min(max_n, 4);
  {
    Check c("bijections", "round-trip");
    for (int k = 0; k <= max_k; ++k) {
      for (int n = 1; n <= max_n; ++n) {
        for_each_in_class(
            make_class_spec(n, n + k, {}, 0),
            [&](const PreferenceSet& alpha) {
              std::string where =
                  ctx({{"n", n}, {"k", k}}) + " alpha=" + seq_str(alpha.entries);
              LabeledForest forest = phi(alpha);
              PreferenceSet back = phi_inverse(forest);
              c.expect(back.entries == alpha.entries &&
                           back.spaces == alpha.spaces,
                       "round trip at " + where);
              c.expect(forest_specification(forest) ==
                           specification(alpha).counts,
                       "specification transport at " + where);
              ForestOrder order = forest_order(forest);
              c.expect(order.order == rank_permutation(alpha).pi_inverse,
                       "traversal order at " + where);
              Decomposition dec = decompose(alpha, park(alpha));
              c.expect(order.mu == dec.mu &&
                           order.tree_sizes == dec.block_sizes,
                       "block transport at " + where);
            },
            budget);
      }
    }
    out.push_back(c.result());
  }
  {
    Check c("bijections", "forest-generation");
    for (int k = 0; k <= max_k; ++k) {
      for (int n = 1; n <= cap; ++n) {
        std::string where = ctx({{"n", n}, {"k", k}});
        auto forests = all_forests(n, k);
        c.expect_eq(BigInt(forests.size()),
                    BigInt(k + 1) * int_pow(BigInt(n + k + 1), n - 1),
                    "forest count at " + where);
        std::set<std::string> everything;
        for (const auto& forest : forests) {
          std::string text = serialize_forest(forest);
          everything.insert(text);
          c.expect(serialize_forest(phi(phi_inverse(forest))) == text,
                   "reverse round trip at " + where);
        }
        std::set<std::string> image;
        for_each_in_class(
            make_class_spec(n, n + k, {}, 0),
            [&](const PreferenceSet& alpha) {
              image.insert(serialize_forest(phi(alpha)));
            },
            budget);
        c.expect(image == everything, "image misses forests at " + where);
      }
    }
    out.push_back(c.result());
  }
  {
    Check c("bijections", "restriction-window");
    for (int k = 0; k <= max_k; ++k) {
      for (int n = std::max(1, k); n <= max_n; ++n) {
        for_each_in_class(
            make_class_spec(n, {}, {}, k),
            [&](const PreferenceSet& alpha) {
              LabeledForest forest = phi(embed_with_flaws(alpha));
              int mx = max_entry(alpha);
              for (int s = 1; s <= n; ++s) {
                c.expect(in_restricted_family(forest, s) == (mx <= s),
                         "window mismatch at " + ctx({{"n", n}, {"k", k},
                                                      {"s", s}}) +
                             " alpha=" + seq_str(alpha.entries));
              }
            },
            budget);
      }
    }
    out.push_back(c.result());
  }
  {
    Check c("bijections", "leading-partition");
    for (int k = 0; k <= max_k; ++k) {
      for (int n = 1; n <= cap; ++n) {
        for (int l = 1; l <= n + k; ++l) {
          for_each_in_class(
              make_class_spec(n, n + k, {}, 0, l),
              [&](const PreferenceSet& alpha) {
                LeadingStats st = stats_of(alpha);
                std::string where = ctx({{"n", n}, {"k", k}, {"l", l}}) +
                                    " alpha=" + seq_str(alpha.entries);
                c.expect(st.empties_below <= k, "empties overflow at " + where);
                c.expect(st.lead_rank >= l - st.empties_below,
                         "rank below slack at " + where);
                if (l == n + k) {
                  c.expect(source_block(st, l, k) == 3,
                           "top lead outside replace block at " + where);
                }
              },
              budget);
        }
      }
    }
    out.push_back(c.result());
  }
  {
    Check c("bijections", "move");
    for (int k = 0; k <= max_k; ++k) {
      for (int n = 2; n <= cap; ++n) {
        int spaces = n + k;
        for (int l = k + 1; l <= spaces - 1; ++l) {
          std::string where = ctx({{"n", n}, {"k", k}, {"l", l}});
          std::set<std::vector<int>> image;
          std::set<std::vector<int>> target;
          for_each_in_class(
              make_class_spec(n, spaces, {}, 0, l),
              [&](const PreferenceSet& alpha) {
                if (source_block(stats_of(alpha), l, k) != 1) return;
                try {
                  TripletForest moved =
                      psi_move(triplet_forest(phi(alpha)), Direction::forward);
                  PreferenceSet beta = phi_inverse(moved);
                  LeadingStats st = stats_of(beta);
                  c.expect(st.leading == l + 1 && image_block(st, l + 1) == 1,
                           "image block at " + where +
                               " alpha=" + seq_str(alpha.entries));
                  c.expect(image.insert(beta.entries).second,
                           "collision at " + where);
                  PreferenceSet back = phi_inverse(psi_move(
                      triplet_forest(phi(beta)), Direction::backward));
                  c.expect(back.entries == alpha.entries,
                           "round trip at " + where +
                               " alpha=" + seq_str(alpha.entries));
                } catch (const std::exception& e) {
                  c.expect(false, where + " alpha=" + seq_str(alpha.entries) +
                                      ": " + e.what());
                }
              },
              budget);
          for_each_in_class(
              make_class_spec(n, spaces, {}, 0, l + 1),
              [&](const PreferenceSet& beta) {
                if (image_block(stats_of(beta), l + 1) == 1) {
                  target.insert(beta.entries);
                }
              },
              budget);
          c.expect(image == target, "image differs from codomain at " + where);
        }
      }
    }
    out.push_back(c.result());
  }
  {
    Check c("bijections", "root-shift");
    for (int k = 0; k <= max_k; ++k) {
      for (int n = 2; n <= cap; ++n) {
        int spaces = n + k;
        for (int l = k + 1; l <= spaces - 1; ++l) {
          std::string where = ctx({{"n", n}, {"k", k}, {"l", l}});
          std::set<std::vector<int>> image;
          std::set<std::vector<int>> target;
          for_each_in_class(
              make_class_spec(n, spaces, {}, 0, l),
              [&](const PreferenceSet& alpha) {
                if (source_block(stats_of(alpha), l, k) != 2) return;
                try {
                  TripletForest shifted = psi_rootshift(
                      triplet_forest(phi(alpha)), Direction::forward);
                  PreferenceSet beta = phi_inverse(shifted);
                  LeadingStats st = stats_of(beta);
                  c.expect(st.leading == l + 1 && image_block(st, l + 1) == 2,
                           "image block at " + where +
                               " alpha=" + seq_str(alpha.entries));
                  c.expect(image.insert(beta.entries).second,
                           "collision at " + where);
                  PreferenceSet back = phi_inverse(psi_rootshift(
                      triplet_forest(phi(beta)), Direction::backward));
                  c.expect(back.entries == alpha.entries,
                           "round trip at " + where +
                               " alpha=" + seq_str(alpha.entries));
                } catch (const std::exception& e) {
                  c.expect(false, where + " alpha=" + seq_str(alpha.entries) +
                                      ": " + e.what());
                }
              },
              budget);
          for_each_in_class(
              make_class_spec(n, spaces, {}, 0, l + 1),
              [&](const PreferenceSet& beta) {
                if (image_block(stats_of(beta), l + 1) == 2) {
                  target.insert(beta.entries);
                }
              },
              budget);
          c.expect(image == target, "image differs from codomain at " + where);
        }
      }
    }
    out.push_back(c.result());
  }
  {
    Check c("bijections", "lead-replace");
    for (int k = 0; k <= max_k; ++k) {
      for (int n = 1; n <= cap; ++n) {
        int spaces = n + k;
        BigInt mapped = 0;
        for (int l = k + 1; l <= spaces; ++l) {
          std::string where = ctx({{"n", n}, {"k", k}, {"l", l}});
          std::set<std::vector<int>> image;
          std::set<std::vector<int>> target;
          for_each_in_class(
              make_class_spec(n, spaces, {}, 0, l),
              [&](const PreferenceSet& alpha) {
                if (source_block(stats_of(alpha), l, k) != 3) return;
                try {
                  PreferenceSet beta =
                      psi_lead_replace(alpha, Direction::forward);
                  bool tail =
                      std::equal(alpha.entries.begin() + 1, alpha.entries.end(),
                                 beta.entries.begin() + 1, beta.entries.end());
                  c.expect(beta.spaces == spaces + 1 &&
                               beta.entries[0] == spaces + 1 && tail,
                           "shape at " + where +
                               " alpha=" + seq_str(alpha.entries));
                  LeadingStats st = stats_of(beta);
                  c.expect(st.max_empty == l,
                           "top empty space at " + where +
                               " alpha=" + seq_str(alpha.entries));
                  c.expect(image.insert(beta.entries).second,
                           "collision at " + where);
                  PreferenceSet back =
                      psi_lead_replace(beta, Direction::backward);
                  c.expect(back.spaces == spaces &&
                               back.entries == alpha.entries,
                           "round trip at " + where +
                               " alpha=" + seq_str(alpha.entries));
                } catch (const std::exception& e) {
                  c.expect(false, where + " alpha=" + seq_str(alpha.entries) +
                                      ": " + e.what());
                }
              },
              budget);
          for_each_in_class(
              make_class_spec(n, spaces + 1, {}, 0, spaces + 1),
              [&](const PreferenceSet& beta) {
                if (stats_of(beta).max_empty == l) target.insert(beta.entries);
              },
              budget);
          c.expect(image == target, "image differs from codomain at " + where);
          mapped += BigInt(image.size());
        }
        c.expect_eq(mapped, cc(n, spaces + 1, {}, 0, spaces + 1, budget),
                    "blocks cover the raised class at " +
                        ctx({{"n", n}, {"k", k}}));
      }
    }
    out.push_back(c.result());
  }
  {
    Check c("bijections", "flaw-raise");
    std::vector<std::array<int, 3>> shapes;
    for (int k = 1; k <= max_k; ++k) {
      for (int n = 2; n <= cap; ++n) {
        for (int s = k + 2; s <= n; ++s) shapes.push_back({n, s, k});
      }
    }
    shapes.push_back({5, 4, 1});
    for (const auto& [n, s, k] : shapes) {
      std::string where = ctx({{"n", n}, {"s", s}, {"k", k}});
      std::set<std::vector<int>> image;
      std::set<std::vector<int>> target;
      for_each_in_class(
          make_class_spec(n, {}, s, k, 1),
          [&](const PreferenceSet& alpha) {
            try {
              TripletForest raised =
                  flaw_raise(triplet_forest(phi(embed_with_flaws(alpha))), s,
                             Direction::forward);
              PreferenceSet wide = phi_inverse(raised);
              c.expect(wide.spaces == n + k + 1 && max_entry(wide) <= s,
                       "shape at " + where + " alpha=" + seq_str(alpha.entries));
              if (max_entry(wide) > s) return;
              PreferenceSet beta = make_preference_set(wide.entries, n);
              c.expect(in_class(beta, make_class_spec(n, {}, s, k + 1, s)),
                       "image class at " + where +
                           " alpha=" + seq_str(alpha.entries));
              c.expect(image.insert(beta.entries).second,
                       "collision at " + where);
              TripletForest lowered =
                  flaw_raise(triplet_forest(phi(embed_with_flaws(beta))), s,
                             Direction::backward);
              PreferenceSet back =
                  make_preference_set(phi_inverse(lowered).entries, n);
              c.expect(back.entries == alpha.entries,
                       "round trip at " + where +
                           " alpha=" + seq_str(alpha.entries));
            } catch (const std::exception& e) {
              c.expect(false, where + " alpha=" + seq_str(alpha.entries) +
                                  ": " + e.what());
            }
          },
          budget);
      for_each_in_class(
          make_class_spec(n, {}, s, k + 1, s),
          [&](const PreferenceSet& beta) { target.insert(beta.entries); },
          budget);
      c.expect(image == target, "image differs from codomain at " + where);
    }
    out.push_back(c.result());
  }
  {
    Check c("bijections", "flaw-seed");
    for (int n = 2; n <= std::min(max_n, 5); ++n) {
      std::string where = ctx({{"n", n}});
      std::set<std::vector<int>> image;
      std::set<std::vector<int>> target;
      for_each_in_class(
          make_class_spec(n, {}, {}, 0, 2),
          [&](const PreferenceSet& alpha) {
            try {
              TripletForest seeded =
                  flaw_seed(triplet_forest(phi(alpha)), Direction::forward);
              PreferenceSet wide = phi_inverse(seeded);
              c.expect(wide.spaces == n + 1 && max_entry(wide) <= n,
                       "shape at " + where + " alpha=" + seq_str(alpha.entries));
              if (max_entry(wide) > n) return;
              PreferenceSet beta = make_preference_set(wide.entries, n);
              c.expect(in_class(beta, make_class_spec(n, {}, {}, 1, n)),
                       "image class at " + where +
                           " alpha=" + seq_str(alpha.entries));
              c.expect(image.insert(beta.entries).second,
                       "collision at " + where);
              TripletForest unseeded =
                  flaw_seed(triplet_forest(phi(embed_with_flaws(beta))),
                            Direction::backward);
              PreferenceSet back =
                  make_preference_set(phi_inverse(unseeded).entries, n);
              c.expect(back.entries == alpha.entries,
                       "round trip at " + where +
                           " alpha=" + seq_str(alpha.entries));
            } catch (const std::exception& e) {
              c.expect(false, where + " alpha=" + seq_str(alpha.entries) +
                                  ": " + e.what());
            }
          },
          budget);
      for_each_in_class(
          make_class_spec(n, {}, {}, 1, n),
          [&](const PreferenceSet& beta) { target.insert(beta.entries); },
          budget);
      c.expect(image == target, "image differs from codomain at " + where);
    }
    out.push_back(c.result());
  }
  {
    Check c("bijections", "bounded-window");
    for (int k = 1; k <= max_k; ++k) {
      for (int n = 2; n <= cap; ++n) {
        for (int s = k + 1; s <= n; ++s) {
          for (int l = k; l + 1 <= s; ++l) {
            std::string where = ctx({{"n", n}, {"s", s}, {"k", k}, {"l", l}});
            std::set<std::vector<int>> move_image;
            std::set<std::vector<int>> shift_image;
            std::set<std::vector<int>> clear_target;
            std::set<std::vector<int>> snug_target;
            for_each_in_class(
                make_class_spec(n, {}, s, k, l),
                [&](const PreferenceSet& alpha) {
                  PreferenceSet wide = embed_with_flaws(alpha);
                  int block = bounded_source_block(stats_of(wide), l, k);
                  if (block != 1 && block != 2) return;
                  try {
                    TripletForest tf = triplet_forest(phi(wide));
                    TripletForest mapped =
                        block == 1 ? psi_move(tf, Direction::forward)
                                   : psi_rootshift(tf, Direction::forward);
                    PreferenceSet raised = phi_inverse(mapped);
                    c.expect(max_entry(raised) <= s,
                             "bound broken at " + where +
                                 " alpha=" + seq_str(alpha.entries));
                    if (max_entry(raised) > s) return;
                    PreferenceSet beta =
                        make_preference_set(raised.entries, n);
                    c.expect(
                        in_class(beta, make_class_spec(n, {}, s, k, l + 1)),
                        "image class at " + where +
                            " alpha=" + seq_str(alpha.entries));
                    c.expect(bounded_image_block(stats_of(raised), l + 1, k) ==
                                 block,
                             "image block at " + where +
                                 " alpha=" + seq_str(alpha.entries));
                    auto& image = block == 1 ? move_image : shift_image;
                    c.expect(image.insert(beta.entries).second,
                             "collision at " + where);
                    TripletForest back_tf =
                        triplet_forest(phi(embed_with_flaws(beta)));
                    TripletForest unmapped =
                        block == 1 ? psi_move(back_tf, Direction::backward)
                                   : psi_rootshift(back_tf,
                                                   Direction::backward);
                    PreferenceSet back = make_preference_set(
                        phi_inverse(unmapped).entries, n);
                    c.expect(back.entries == alpha.entries,
                             "round trip at " + where +
                                 " alpha=" + seq_str(alpha.entries));
                  } catch (const std::exception& e) {
                    c.expect(false, where + " alpha=" + seq_str(alpha.entries) +
                                        ": " + e.what());
                  }
                },
                budget);
            for_each_in_class(
                make_class_spec(n, {}, s, k, l + 1),
                [&](const PreferenceSet& beta) {
                  int block = bounded_image_block(
                      stats_of(embed_with_flaws(beta)), l + 1, k);
                  if (block == 1) clear_target.insert(beta.entries);
                  if (block == 2) snug_target.insert(beta.entries);
                },
                budget);
            c.expect(move_image == clear_target,
                     "move image differs at " + where);
            c.expect(shift_image == snug_target,
                     "root-shift image differs at " + where);
          }
        }
      }
    }
    out.push_back(c.result());
  }
  {
    Check c("bijections", "worked-instances");
    {
      PreferenceSet alpha = make_preference_set(
          {2, 4, 8, 12, 9, 1, 12, 8, 4, 12, 1, 3}, 14);
      PreferenceSet want = make_preference_set(
          {3, 4, 8, 12, 9, 1, 12, 8, 4, 12, 1, 3}, 14);
      PreferenceSet beta = phi_inverse(
          psi_move(triplet_forest(phi(alpha)), Direction::forward));
      c.expect(beta.entries == want.entries, "move forward instance");
      PreferenceSet back = phi_inverse(
          psi_move(triplet_forest(phi(want)), Direction::backward));
      c.expect(back.entries == alpha.entries, "move backward instance");
    }
    {
      PreferenceSet alpha =
          make_preference_set({3, 10, 4, 10, 7, 1, 4, 1, 10, 7}, 12);
      PreferenceSet want =
          make_preference_set({4, 10, 5, 10, 4, 1, 5, 1, 10, 4}, 12);
      PreferenceSet beta = phi_inverse(
          psi_rootshift(triplet_forest(phi(alpha)), Direction::forward));
      c.expect(beta.entries == want.entries, "root-shift forward instance");
      PreferenceSet back = phi_inverse(
          psi_rootshift(triplet_forest(phi(want)), Direction::backward));
      c.expect(back.entries == alpha.entries, "root-shift backward instance");
    }
    {
      PreferenceSet a1 = make_preference_set({2, 1, 3}, 3);
      PreferenceSet a2 = make_preference_set({2, 3, 1}, 3);
      PreferenceSet b1 = psi_lead_replace(a1, Direction::forward);
      PreferenceSet b2 = psi_lead_replace(a2, Direction::forward);
      c.expect(b1.spaces == 4 && b1.entries == std::vector<int>({4, 1, 3}),
               "lead-replace forward instance 1");
      c.expect(b2.spaces == 4 && b2.entries == std::vector<int>({4, 3, 1}),
               "lead-replace forward instance 2");
      c.expect(psi_lead_replace(b1, Direction::backward).entries == a1.entries,
               "lead-replace backward instance 1");
      c.expect(psi_lead_replace(b2, Direction::backward).entries == a2.entries,
               "lead-replace backward instance 2");
    }
    out.push_back(c.result());
  }
  return out;
}

std::vector<CheckResult> verify_series(int max_degree, int max_joint_degree,
                                       std::uint64_t budget) {
  std::vector<CheckResult> out;
  int nd = max_degree;
  int nj = max_joint_degree;
  {
    Check c("series", "series-p");
    MultiSeries p = series_P(nd);
    for (int n = 0; n <= nd; ++n) {
      c.expect_eq(sequence_count(p, n), cc(n, {}, {}, 0, {}, budget), tag("n", n));
    }
    out.push_back(c.result());
  }
  {
    Check c("series", "series-q");
    for (int k = 0; k <= 3; ++k) {
      MultiSeries q = series_Q(k, nd);
      for (int n = 0; n <= nd; ++n) {
        c.expect_eq(sequence_count(q, n), cc(n, n + k, {}, 0, {}, budget),
                    ctx({{"k", k}, {"n", n}}));
      }
    }
    out.push_back(c.result());
  }
  {
    Check c("series", "series-r");
    for (int k = 0; k <= 3; ++k) {
      MultiSeries r = series_R(k, nd);
      for (int n = 0; n <= nd; ++n) {
        BigInt want = n - k >= 0 ? cc(n, {}, n - k, 0, {}, budget) : BigInt(0);
        c.expect_eq(sequence_count(r, n), want, ctx({{"k", k}, {"n", n}}));
      }
    }
    out.push_back(c.result());
  }
  {
    Check c("series", "series-d");
    for (int k = 1; k <= 3; ++k) {
      for (int s = 0; s <= 3; ++s) {
        MultiSeries d = series_D(k, s, nd);
        for (int n = 0; n <= nd; ++n) {
          BigInt want = n >= k && n - s >= 0 ? cc(n, {}, n - s, k, {}, budget)
                                             : BigInt(0);
          c.expect_eq(sequence_count(d, n), want,
                      ctx({{"k", k}, {"s", s}, {"n", n}}));
        }
      }
    }
    out.push_back(c.result());
  }
  {
    Check c("series", "series-i");
    for (int k = 0; k <= 3; ++k) {
      MultiSeries i = series_I(k, nd);
      c.expect(i.coefficient(Exponents{0, 0, 0, 0}) == 0,
               "constant term " + tag("k", k));
      for (int n = 1; n <= nd; ++n) {
        c.expect_eq(pointed_count(i, n), cc(n, n + k, {}, 0, 1, budget),
                    ctx({{"k", k}, {"n", n}}));
      }
    }
    out.push_back(c.result());
  }
  {
    Check c("series", "series-h");
    for (int l = 0; l <= 4; ++l) {
      for (int k = 0; k <= 3; ++k) {
        MultiSeries h = series_H(l, k, nd);
        c.expect(h.coefficient(Exponents{0, 0, 0, 0}) == 0,
                 "constant term " + ctx({{"l", l}, {"k", k}}));
        for (int n = 1; n <= nd; ++n) {
          BigInt want =
              n >= l + 1 ? cc(n, n + k, {}, 0, n + k - l, budget) : BigInt(0);
          c.expect_eq(pointed_count(h, n), want,
                      ctx({{"l", l}, {"k", k}, {"n", n}}));
        }
      }
    }
    out.push_back(c.result());
  }
  {
    Check c("series", "series-m");
    for (int k = 1; k <= 3; ++k) {
      for (int s = 0; s <= 3; ++s) {
        MultiSeries m = series_M(s, k, nd);
        for (int n = 1; n <= nd; ++n) {
          BigInt want = n >= k && n - s >= 1 ? cc(n, {}, n - s, k, 1, budget)
                                             : BigInt(0);
          c.expect_eq(pointed_count(m, n), want,
                      ctx({{"s", s}, {"k", k}, {"n", n}}));
        }
      }
    }
    out.push_back(c.result());
  }
  {
    Check c("series", "series-w");
    for (int k = 1; k <= 2; ++k) {
      for (int s = 0; s <= 2; ++s) {
        for (int l = s; l <= 3; ++l) {
          MultiSeries w = series_W(k, s, l, nd);
          for (int n = 1; n <= nd; ++n) {
            int lead = n - l;
            BigInt want =
                lead >= k ? cc(n, {}, n - s, k, lead, budget) : BigInt(0);
            c.expect_eq(pointed_count(w, n), want,
                        ctx({{"k", k}, {"s", s}, {"l", l}, {"n", n}}));
          }
        }
      }
    }
    out.push_back(c.result());
  }
  {
    Check c("series", "series-f");
    MultiSeries f = series_F_xyz(nj, nj - 1, nj - 1);
    for (int s = 0; s <= nj - 1; ++s) {
      for (int k = 0; k <= nj - 1; ++k) {
        MultiSeries slice =
            coefficient_slice(coefficient_slice(f, kVarZ, k), kVarY, s);
        c.expect(slice.coefficient(Exponents{0, 0, 0, 0}) == 0,
                 "constant term " + ctx({{"s", s}, {"k", k}}));
        if (k > s) continue;
        for (int n = s + 1; n <= nj; ++n) {
          c.expect_eq(pointed_count(slice, n),
                      cc(n, {}, n - k, 0, n - s, budget),
                      ctx({{"s", s}, {"k", k}, {"n", n}}));
        }
      }
    }
    out.push_back(c.result());
  }
  {
    Check c("series", "joint-slices");
    MultiSeries r_xy = series_R_xy(nd, 3);
    for (int k = 0; k <= 3; ++k) {
      c.expect(coefficient_slice(r_xy, kVarY, k) == series_R(k, nd),
               "flawless bound family " + tag("k", k));
    }
    MultiSeries i_xy = series_I_xy(nd, 3);
    for (int k = 0; k <= 3; ++k) {
      c.expect(coefficient_slice(i_xy, kVarY, k) == series_I(k, nd),
               "lead-one family " + tag("k", k));
    }
    for (int k = 0; k <= 2; ++k) {
      MultiSeries h_xy = series_H_xy(k, nd, 4);
      for (int l = 0; l <= 4; ++l) {
        c.expect(coefficient_slice(h_xy, kVarY, l) == series_H(l, k, nd),
                 "lead-gap family " + ctx({{"k", k}, {"l", l}}));
      }
    }
    MultiSeries h_xyz = series_H_xyz(nj, 3, 3);
    for (int l = 0; l <= 3; ++l) {
      for (int k = 0; k <= 3; ++k) {
        MultiSeries slice =
            coefficient_slice(coefficient_slice(h_xyz, kVarZ, k), kVarY, l);
        c.expect(slice == series_H(l, k, nj),
                 "lead-gap sheet " + ctx({{"l", l}, {"k", k}}));
      }
    }
    MultiSeries d_sum = series_D_sum(nj, 3, 3);
    c.expect(coefficient_slice(d_sum, kVarZ, 0).is_zero(),
             "flaw-zero sheet of the bounded family");
    for (int k = 1; k <= 3; ++k) {
      for (int s = 0; s <= 3; ++s) {
        MultiSeries slice =
            coefficient_slice(coefficient_slice(d_sum, kVarZ, k), kVarY, s);
        c.expect(slice == series_D(k, s, nj),
                 "bounded family sheet " + ctx({{"k", k}, {"s", s}}));
      }
    }
    MultiSeries w_xyzv = series_W_xyzv(nj, 3, 2, 2);
    c.expect(coefficient_slice(w_xyzv, kVarV, 0).is_zero(),
             "flaw-zero sheet of the leading family");
    for (int k = 1; k <= 2; ++k) {
      MultiSeries by_flaws = coefficient_slice(w_xyzv, kVarV, k);
      for (int s = 0; s <= 2; ++s) {
        MultiSeries by_bound = coefficient_slice(by_flaws, kVarZ, s);
        for (int l = 0; l <= 3; ++l) {
          MultiSeries slice = coefficient_slice(by_bound, kVarY, l);
          if (l < s) {
            c.expect(slice.is_zero(),
                     "lead above bound " + ctx({{"k", k}, {"s", s}, {"l", l}}));
          } else {
            c.expect(slice == series_W(k, s, l, nj),
                     "leading family sheet " +
                         ctx({{"k", k}, {"s", s}, {"l", l}}));
          }
        }
      }
    }
    out.push_back(c.result());
  }
  {
    Check c("series", "closed-forms");
    c.expect(check_D_xyz(7, 4, 3), "bounded family sum vs closed form");
    c.expect(check_M_xyz(7, 4, 3), "lead-one family sum vs closed form");
    c.expect(check_W_xyzv(6, 4, 3, 3), "leading family vs closed form");
    out.push_back(c.result());
  }
  return out;
}

std::vector<CheckResult> verify_exp_identity(int degree) {
  Check c("series", "exp-identity");
  MultiSeries p = series_P(degree);
  MultiSeries x = MultiSeries::monomial(p.trunc(), Exponents{1, 0, 0, 0}, 1);
  MultiSeries xp = x * p;
  c.expect((xp * exp_series(-xp) - x).is_zero(),
           "x.P.exp(-x.P) - x nonzero through " + tag("degree", degree));
  return {c.result()};
}

}  // namespace flawpark
