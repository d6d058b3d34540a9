#include "flawpark/parking.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>

namespace flawpark {

PreferenceSet make_preference_set(std::vector<int> entries, int spaces) {
  if (spaces < 0) throw std::invalid_argument("preference set: spaces < 0");
  for (int a : entries) {
    if (a < 1 || a > spaces)
      throw std::invalid_argument("preference set: entry out of range");
  }
  return PreferenceSet{spaces, std::move(entries)};
}

ClassSpec make_class_spec(int cars, std::optional<int> spaces,
                          std::optional<int> max_pref, int flaws,
                          std::optional<int> leading) {
  ClassSpec spec;
  spec.cars = cars;
  spec.spaces = spaces.value_or(cars);
  spec.max_pref = max_pref.value_or(spec.spaces);
  spec.flaws = flaws;
  spec.leading = leading;
  if (cars < 0) throw std::invalid_argument("class: cars < 0");
  if (spec.spaces < 0) throw std::invalid_argument("class: spaces < 0");
  if (spec.max_pref < 0) throw std::invalid_argument("class: max pref < 0");
  if (spec.max_pref > spec.spaces)
    throw std::invalid_argument("class: max pref exceeds spaces");
  if (flaws < 0 || flaws > cars)
    throw std::invalid_argument("class: flaws outside [0, cars]");
  if (leading && (*leading < 1 || cars < 1))
    throw std::invalid_argument("class: bad leading entry");
  return spec;
}

ParkingOutcome park(const PreferenceSet& pref) {
  const int m = pref.spaces;
  ParkingOutcome out;
  out.assignment.assign(pref.cars(), kUnparked);
  out.occupied.assign(m, 0);
  if (m <= 63) {
    std::uint64_t free_mask = (m == 0) ? 0 : ((std::uint64_t{1} << m) - 1);
    for (int i = 0; i < pref.cars(); ++i) {
      const int a = pref.entries[i];
      const std::uint64_t ahead = free_mask >> (a - 1);
      if (ahead == 0) {
        ++out.flaws;
        continue;
      }
      const int space = a + std::countr_zero(ahead);
      out.assignment[i] = space;
      out.occupied[space - 1] = i + 1;
      free_mask &= ~(std::uint64_t{1} << (space - 1));
    }
  } else {
    for (int i = 0; i < pref.cars(); ++i) {
      int space = pref.entries[i];
      while (space <= m && out.occupied[space - 1] != 0) ++space;
      if (space > m) {
        ++out.flaws;
        continue;
      }
      out.assignment[i] = space;
      out.occupied[space - 1] = i + 1;
    }
  }
  for (int j = 1; j <= m; ++j) {
    if (out.occupied[j - 1] == 0) out.empty_spaces.push_back(j);
  }
  return out;
}

Specification specification(const PreferenceSet& pref) {
  Specification spec;
  spec.counts.assign(pref.spaces, 0);
  for (int a : pref.entries) ++spec.counts[a - 1];
  return spec;
}

bool space_empty_by_counts(const Specification& spec, int space,
                           int empties_below) {
  if (space < 1 || space > static_cast<int>(spec.counts.size()))
    throw std::invalid_argument("space out of range");
  const int prefer_at_most =
      std::accumulate(spec.counts.begin(), spec.counts.begin() + space, 0);
  return prefer_at_most < space - empties_below;
}

RankPermutation rank_permutation(const PreferenceSet& pref) {
  const int n = pref.cars();
  RankPermutation rp;
  rp.pi_inverse.resize(n);
  std::iota(rp.pi_inverse.begin(), rp.pi_inverse.end(), 1);
  std::stable_sort(rp.pi_inverse.begin(), rp.pi_inverse.end(),
                   [&](int lhs, int rhs) {
                     return pref.entries[lhs - 1] < pref.entries[rhs - 1];
                   });
  rp.pi.resize(n);
  for (int r = 1; r <= n; ++r) rp.pi[rp.pi_inverse[r - 1] - 1] = r;
  return rp;
}

LeadingStats leading_stats(const PreferenceSet& pref,
                           const ParkingOutcome& outcome) {
  if (pref.cars() == 0)
    throw std::invalid_argument("leading stats: empty sequence");
  LeadingStats st;
  st.leading = pref.entries[0];
  for (int a : pref.entries) {
    if (a == st.leading) ++st.multiplicity;
    if (a < st.leading) ++st.lead_rank;
  }
  ++st.lead_rank;
  for (int e : outcome.empty_spaces) {
    st.max_empty = e;
    if (e < st.leading) {
      st.max_empty_below = e;
      ++st.empties_below;
    }
  }
  return st;
}

Decomposition decompose(const PreferenceSet& pref,
                        const ParkingOutcome& outcome) {
  const int m = pref.spaces;
  const auto& empties = outcome.empty_spaces;
  const int k = static_cast<int>(empties.size());
  Decomposition dec;
  dec.mu.assign(k + 1, 0);
  for (int i = 1; i <= k; ++i) dec.mu[i] = empties[i - 1] - i;

  dec.block_sizes.assign(k + 1, 0);
  for (int i = 0; i <= k; ++i) {
    const int lo = (i == 0) ? 1 : empties[i - 1] + 1;
    const int hi = (i == k) ? m : empties[i] - 1;
    dec.block_sizes[i] = std::max(0, hi - lo + 1);
  }

  const Specification spec = specification(pref);
  std::vector<int> kept;
  kept.reserve(m - k);
  int next_empty = 0;
  for (int j = 1; j <= m; ++j) {
    if (next_empty < k && empties[next_empty] == j) {
      if (spec.counts[j - 1] != 0)
        throw std::invalid_argument("decompose: outcome inconsistent");
      ++next_empty;
    } else {
      kept.push_back(spec.counts[j - 1]);
    }
  }

  const RankPermutation rp = rank_permutation(pref);
  std::size_t spec_pos = 0;
  std::size_t order_pos = 0;
  for (int i = 0; i <= k; ++i) {
    const auto t = static_cast<std::size_t>(dec.block_sizes[i]);
    dec.spec_blocks.emplace_back(kept.begin() + spec_pos,
                                 kept.begin() + spec_pos + t);
    dec.order_blocks.emplace_back(rp.pi_inverse.begin() + order_pos,
                                  rp.pi_inverse.begin() + order_pos + t);
    spec_pos += t;
    order_pos += t;
  }
  return dec;
}

PreferenceSet embed_with_flaws(const PreferenceSet& pref) {
  if (pref.spaces != pref.cars())
    throw std::invalid_argument("embed: needs spaces == cars");
  PreferenceSet wide = pref;
  wide.spaces = pref.cars() + park(pref).flaws;
  return wide;
}

bool in_class(const PreferenceSet& pref, const ClassSpec& spec) {
  if (pref.cars() != spec.cars || pref.spaces != spec.spaces) return false;
  for (int a : pref.entries) {
    if (a > spec.max_pref) return false;
  }
  if (spec.leading && (pref.cars() == 0 || pref.entries[0] != *spec.leading))
    return false;
  return park(pref).flaws == spec.flaws;
}

}  // namespace flawpark
