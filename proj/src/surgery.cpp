#include "flawpark/surgery.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace flawpark {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw std::domain_error(what);
}

// Vertex 1 together with its descendants, flagged by label.
std::vector<bool> subtree_of_one(const LabeledForest& forest) {
  ChildLists lists = children_lists(forest);
  std::vector<bool> in(forest.size(), false);
  std::vector<int> stack{1};
  in[0] = true;
  while (!stack.empty()) {
    int w = stack.back();
    stack.pop_back();
    for (int child : lists.of_vertex[w - 1]) {
      in[child - 1] = true;
      stack.push_back(child);
    }
  }
  return in;
}

// Traversal order of one tree with the flagged labels dropped; removing a
// subtree never reorders the survivors.
std::vector<int> tree_order_without(const TripletForest& forest, int tree,
                                    const std::vector<bool>& dropped) {
  ForestOrder order = forest_order(forest.forest);
  std::vector<int> kept;
  for (int j = 0; j < order.tree_sizes[tree]; ++j) {
    int w = order.order[order.mu[tree] + j];
    if (!dropped[w - 1]) kept.push_back(w);
  }
  return kept;
}

int count_entry(const std::vector<int>& pref, int value) {
  return static_cast<int>(std::count(pref.begin(), pref.end(), value));
}

}  // namespace

TripletStats triplet_stats(const TripletForest& forest) {
  if (forest.forest.size() < 1) {
    throw std::domain_error("triplet_stats: empty forest");
  }
  TripletStats stats;
  stats.leading = forest.pref[0];
  stats.lead_rank = forest.rank[0];
  stats.multiplicity = count_entry(forest.pref, stats.leading);
  stats.tree = tree_of(forest.forest, 1);
  stats.max_empty_below = stats.tree > 0
                              ? forest.mu[stats.tree] + stats.tree
                              : 0;
  int k = forest.forest.extra_roots;
  stats.max_empty = k > 0 ? forest.mu[k] + k : 0;
  return stats;
}

TripletForest psi_move(const TripletForest& forest, Direction direction) {
  TripletStats st = triplet_stats(forest);
  const int n = forest.forest.size();
  const int k = forest.forest.extra_roots;
  LabeledForest next = forest.forest;
  if (direction == Direction::forward) {
    require(st.leading <= n + k - 1, "psi_move: lead entry already maximal");
    require(st.lead_rank > st.leading - st.tree || st.multiplicity >= 2,
            "psi_move: lead entry is a unique block opener");
    std::vector<bool> sub = subtree_of_one(forest.forest);
    std::vector<int> kept = tree_order_without(forest, st.tree, sub);
    int idx = st.leading - st.max_empty_below;
    if (idx < 1 || idx > static_cast<int>(kept.size())) {
      throw std::logic_error("psi_move: target out of tree");
    }
    next.parent[0] = vertex_ref(kept[idx - 1]);
  } else {
    require(st.leading >= st.max_empty_below + 2,
            "psi_move: lead entry too close to the empty space below");
    ForestOrder order = forest_order(forest.forest);
    int target = st.leading - 2 - st.tree;
    if (target == order.mu[st.tree]) {
      next.parent[0] = root_ref(st.tree);
    } else {
      if (target < order.mu[st.tree] || target > n) {
        throw std::logic_error("psi_move: target out of tree");
      }
      next.parent[0] = vertex_ref(order.order[target - 1]);
    }
  }
  return triplet_forest(next);
}

TripletForest psi_rootshift(const TripletForest& forest, Direction direction) {
  TripletStats st = triplet_stats(forest);
  LabeledForest next = forest.forest;
  if (direction == Direction::forward) {
    require(st.lead_rank == st.leading - st.tree && st.multiplicity == 1,
            "psi_rootshift: lead entry does not open the last block");
    require(st.tree <= forest.forest.extra_roots - 1,
            "psi_rootshift: no tree after the lead vertex");
    next.parent[0] = root_ref(st.tree + 1);
  } else {
    require(st.tree >= 1 && st.leading == st.max_empty_below + 1,
            "psi_rootshift: lead entry not just above an empty space");
    if (!(forest.forest.parent[0] == root_ref(st.tree))) {
      throw std::logic_error("psi_rootshift: lead vertex not a root child");
    }
    ForestOrder order = forest_order(forest.forest);
    if (order.tree_sizes[st.tree - 1] == 0) {
      next.parent[0] = root_ref(st.tree - 1);
    } else {
      next.parent[0] = vertex_ref(order.order[order.mu[st.tree] - 1]);
    }
  }
  return triplet_forest(next);
}

PreferenceSet psi_lead_replace(const PreferenceSet& pref,
                               Direction direction) {
  require(pref.cars() >= 1, "psi_lead_replace: empty sequence");
  ParkingOutcome outcome = park(pref);
  require(outcome.flaws == 0, "psi_lead_replace: incomplete parking");
  LeadingStats st = leading_stats(pref, outcome);
  PreferenceSet next = pref;
  if (direction == Direction::forward) {
    int k = pref.spaces - pref.cars();
    require(st.multiplicity == 1 &&
                st.lead_rank == st.leading - st.empties_below &&
                st.empties_below == k,
            "psi_lead_replace: lead entry does not open the top block");
    next.entries[0] = pref.spaces + 1;
    next.spaces = pref.spaces + 1;
  } else {
    require(pref.spaces > pref.cars(),
            "psi_lead_replace: no empty space to take");
    require(st.leading == pref.spaces,
            "psi_lead_replace: lead entry is not the top space");
    next.entries[0] = st.max_empty;
    next.spaces = pref.spaces - 1;
  }
  return next;
}

TripletForest flaw_raise(const TripletForest& forest, int max_pref,
                         Direction direction) {
  const int n = forest.forest.size();
  const int k = forest.forest.extra_roots;
  require(n >= 1, "flaw_raise: empty forest");
  require(max_pref <= n, "flaw_raise: bound exceeds sequence length");
  require(in_restricted_family(forest.forest, max_pref),
          "flaw_raise: forest not in the bounded family");
  ForestOrder order = forest_order(forest.forest);
  LabeledForest next;
  if (direction == Direction::forward) {
    require(k >= 1 && max_pref >= k + 2, "flaw_raise: bound too small");
    require(forest.pref[0] == 1, "flaw_raise: lead entry is not 1");
    std::vector<bool> sub = subtree_of_one(forest.forest);
    next.extra_roots = k + 1;
    next.parent.assign(n, ParentRef{});
    for (int w = 2; w <= n; ++w) {
      ParentRef p = forest.forest.parent[w - 1];
      if (sub[w - 1]) {
        next.parent[w - 1] = p == vertex_ref(1) ? root_ref(1) : p;
      } else if (p.root && p.index >= 1) {
        next.parent[w - 1] = root_ref(p.index + 1);
      } else {
        next.parent[w - 1] = p;
      }
    }
    int idx = max_pref - 1 - k - order.mu[k];
    if (idx < 0 || idx > order.tree_sizes[k]) {
      throw std::logic_error("flaw_raise: insertion point out of tree");
    }
    next.parent[0] = idx == 0
                         ? root_ref(k + 1)
                         : vertex_ref(order.order[order.mu[k] + idx - 1]);
  } else {
    require(k >= 2 && max_pref >= k + 1, "flaw_raise: bound too small");
    require(forest.pref[0] == max_pref, "flaw_raise: lead entry is not the bound");
    ChildLists lists = children_lists(forest.forest);
    require(lists.of_vertex[0].empty() && tree_of(forest.forest, 1) == k,
            "flaw_raise: lead vertex not a leaf of the last tree");
    next.extra_roots = k - 1;
    next.parent.assign(n, ParentRef{});
    next.parent[0] = root_ref(0);
    for (int w = 2; w <= n; ++w) {
      ParentRef p = forest.forest.parent[w - 1];
      if (p.root && p.index == 1) {
        next.parent[w - 1] = vertex_ref(1);
      } else if (p.root && p.index >= 2) {
        next.parent[w - 1] = root_ref(p.index - 1);
      } else {
        next.parent[w - 1] = p;
      }
    }
  }
  return triplet_forest(next);
}

TripletForest flaw_seed(const TripletForest& forest, Direction direction) {
  const int n = forest.forest.size();
  const int k = forest.forest.extra_roots;
  require(n >= 2, "flaw_seed: need at least two vertices");
  LabeledForest next;
  if (direction == Direction::forward) {
    require(k == 0, "flaw_seed: sequence already has an empty space");
    require(forest.pref[0] == 2, "flaw_seed: lead entry is not 2");
    std::vector<bool> sub = subtree_of_one(forest.forest);
    int a = static_cast<int>(std::count(sub.begin(), sub.end(), true));
    std::vector<int> kept = tree_order_without(forest, 0, sub);
    next.extra_roots = 1;
    next.parent.assign(n, ParentRef{});
    for (int w = 2; w <= n; ++w) {
      ParentRef p = forest.forest.parent[w - 1];
      if (sub[w - 1]) {
        next.parent[w - 1] = p == vertex_ref(1) ? root_ref(0) : p;
      } else {
        next.parent[w - 1] = p.root ? root_ref(1) : p;
      }
    }
    int idx = n - 1 - a;
    if (idx < 0 || idx > static_cast<int>(kept.size())) {
      throw std::logic_error("flaw_seed: insertion point out of tree");
    }
    next.parent[0] = idx == 0 ? root_ref(1) : vertex_ref(kept[idx - 1]);
  } else {
    require(k == 1, "flaw_seed: need exactly one empty space");
    require(forest.pref[0] == n, "flaw_seed: lead entry is not the car count");
    require(in_restricted_family(forest.forest, n),
            "flaw_seed: forest not in the bounded family");
    ChildLists lists = children_lists(forest.forest);
    require(lists.of_vertex[0].empty() && tree_of(forest.forest, 1) == 1,
            "flaw_seed: lead vertex not a leaf of the last tree");
    std::vector<bool> drop(n, false);
    drop[0] = true;
    std::vector<int> kept = tree_order_without(forest, 1, drop);
    if (kept.empty()) {
      throw std::logic_error("flaw_seed: last tree lost its anchor");
    }
    next.extra_roots = 0;
    next.parent.assign(n, ParentRef{});
    next.parent[0] = vertex_ref(kept[0]);
    for (int w = 2; w <= n; ++w) {
      ParentRef p = forest.forest.parent[w - 1];
      if (p.root && p.index == 1) {
        next.parent[w - 1] = root_ref(0);
      } else if (p.root) {
        next.parent[w - 1] = vertex_ref(1);
      } else {
        next.parent[w - 1] = p;
      }
    }
  }
  return triplet_forest(next);
}

}  // namespace flawpark
