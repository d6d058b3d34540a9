#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "flawpark/numeric.hpp"

namespace flawpark {

// A preference sequence for `entries.size()` cars on `spaces` one-way spaces.
// Entries are 1-based and must lie in [1, spaces].
struct PreferenceSet {
  int spaces = 0;
  std::vector<int> entries;

  int cars() const { return static_cast<int>(entries.size()); }
};

PreferenceSet make_preference_set(std::vector<int> entries, int spaces);

// Parameters selecting one class of preference sequences: n cars on m spaces,
// every entry <= s, exactly k cars left unparked, and optionally a fixed first
// entry l.  Defaults: omitted m means m = n; omitted s means s = m.
struct ClassSpec {
  int cars = 0;
  int spaces = 0;
  int max_pref = 0;
  int flaws = 0;
  std::optional<int> leading;
};

ClassSpec make_class_spec(int cars, std::optional<int> spaces,
                          std::optional<int> max_pref, int flaws,
                          std::optional<int> leading = std::nullopt);

constexpr int kUnparked = 0;

// Result of running the parking process.  assignment[i] is the 1-based space
// taken by car i+1, or kUnparked.  occupied[j] holds the 1-based index of the
// car in space j+1, or 0 for an empty space.
struct ParkingOutcome {
  std::vector<int> assignment;
  std::vector<int> occupied;
  std::vector<int> empty_spaces;
  int flaws = 0;
};

ParkingOutcome park(const PreferenceSet& pref);

// Number of cars preferring each space: counts[j] = #{i : a_i = j+1}.
struct Specification {
  std::vector<int> counts;
};

Specification specification(const PreferenceSet& pref);

// Space j is empty iff fewer than j - #{empties below j} cars prefer <= j.
bool space_empty_by_counts(const Specification& spec, int space,
                           int empties_below);

// pi[i] = rank of car i+1 when cars are sorted by preference, ties broken by
// car index; pi_inverse[r] = 1-based car of rank r+1.
struct RankPermutation {
  std::vector<int> pi;
  std::vector<int> pi_inverse;
};

RankPermutation rank_permutation(const PreferenceSet& pref);

// Statistics of the first entry relative to the parking outcome.
struct LeadingStats {
  int leading = 0;          // a_1
  int multiplicity = 0;     // #{i : a_i = a_1}
  int max_empty = 0;        // largest empty space, 0 if none
  int max_empty_below = 0;  // largest empty space < a_1, 0 if none
  int empties_below = 0;    // #{empty spaces < a_1}
  int lead_rank = 0;        // #{i : a_i < a_1} + 1
};

LeadingStats leading_stats(const PreferenceSet& pref,
                           const ParkingOutcome& outcome);

// Block decomposition of a preference sequence against its outcome.  With
// empty spaces m_1 < ... < m_k, block i (0-based, k+1 blocks) spans the
// occupied spaces between consecutive empties; block_sizes[i] = t_i counts
// them, so the sizes sum to the number of parked cars.  mu[i] = m_i - i for
// i >= 1 (mu[0] = 0).  order_blocks slices pi_inverse into runs of length
// t_i; spec_blocks slices the specification the same way after dropping the
// entries at empty spaces, which must be zero.
struct Decomposition {
  std::vector<int> mu;
  std::vector<int> block_sizes;
  std::vector<std::vector<int>> spec_blocks;
  std::vector<std::vector<int>> order_blocks;
};

Decomposition decompose(const PreferenceSet& pref,
                        const ParkingOutcome& outcome);

// View an n-car sequence on n spaces as one on n + k spaces, where k is its
// flaw count on n spaces.  The widened sequence parks completely.
PreferenceSet embed_with_flaws(const PreferenceSet& pref);

bool in_class(const PreferenceSet& pref, const ClassSpec& spec);

}  // namespace flawpark
