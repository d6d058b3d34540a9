#include "flawpark/forest.hpp"

#include <algorithm>
#include <cstddef>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace flawpark {

namespace {

// Walk to a root, bounding steps so cycles terminate.
int walk_to_root(const LabeledForest& forest, int label) {
  int steps = 0;
  ParentRef cur = vertex_ref(label);
  while (!cur.root) {
    if (steps++ > forest.size()) return -1;
    cur = forest.parent[cur.index - 1];
  }
  return cur.index;
}

}  // namespace

void validate_forest(const LabeledForest& forest) {
  if (forest.extra_roots < 0) {
    throw std::invalid_argument("forest: negative root count");
  }
  const int n = forest.size();
  for (int label = 1; label <= n; ++label) {
    const ParentRef& p = forest.parent[label - 1];
    if (p.root) {
      if (p.index < 0 || p.index > forest.extra_roots) {
        throw std::invalid_argument("forest: root reference out of range");
      }
    } else if (p.index < 1 || p.index > n || p.index == label) {
      throw std::invalid_argument("forest: parent label out of range");
    }
  }
  for (int label = 1; label <= n; ++label) {
    if (walk_to_root(forest, label) < 0) {
      throw std::invalid_argument("forest: cycle detected");
    }
  }
}

int tree_of(const LabeledForest& forest, int label) {
  if (label < 1 || label > forest.size()) {
    throw std::invalid_argument("tree_of: label out of range");
  }
  int root = walk_to_root(forest, label);
  if (root < 0) throw std::invalid_argument("tree_of: cycle detected");
  return root;
}

ChildLists children_lists(const LabeledForest& forest) {
  ChildLists lists;
  lists.of_root.resize(forest.extra_roots + 1);
  lists.of_vertex.resize(forest.size());
  for (int label = 1; label <= forest.size(); ++label) {
    const ParentRef& p = forest.parent[label - 1];
    if (p.root) {
      lists.of_root[p.index].push_back(label);
    } else {
      lists.of_vertex[p.index - 1].push_back(label);
    }
  }
  return lists;
}

ForestOrder forest_order(const LabeledForest& forest) {
  const int n = forest.size();
  ChildLists lists = children_lists(forest);
  ForestOrder out;
  out.order.reserve(n);
  out.position.assign(n, 0);
  out.tree_sizes.assign(forest.extra_roots + 1, 0);
  out.mu.assign(forest.extra_roots + 1, 0);
  for (int tree = 0; tree <= forest.extra_roots; ++tree) {
    out.mu[tree] = static_cast<int>(out.order.size());
    std::size_t head = out.order.size();
    for (int child : lists.of_root[tree]) out.order.push_back(child);
    while (head < out.order.size()) {
      int w = out.order[head++];
      for (int child : lists.of_vertex[w - 1]) out.order.push_back(child);
    }
    out.tree_sizes[tree] = static_cast<int>(out.order.size()) - out.mu[tree];
  }
  if (static_cast<int>(out.order.size()) != n) {
    throw std::invalid_argument("forest_order: cycle detected");
  }
  for (int pos = 0; pos < n; ++pos) out.position[out.order[pos] - 1] = pos + 1;
  return out;
}

std::vector<int> forest_specification(const LabeledForest& forest) {
  ChildLists lists = children_lists(forest);
  ForestOrder order = forest_order(forest);
  std::vector<int> spec;
  spec.reserve(forest.size() + forest.extra_roots + 1);
  int at = 0;
  for (int tree = 0; tree <= forest.extra_roots; ++tree) {
    spec.push_back(static_cast<int>(lists.of_root[tree].size()));
    for (int j = 0; j < order.tree_sizes[tree]; ++j) {
      int w = order.order[at++];
      spec.push_back(static_cast<int>(lists.of_vertex[w - 1].size()));
    }
  }
  spec.pop_back();
  return spec;
}

LabeledForest phi(const PreferenceSet& pref) {
  ParkingOutcome outcome = park(pref);
  if (outcome.flaws != 0) {
    throw std::domain_error("phi: sequence does not park completely");
  }
  Decomposition dec = decompose(pref, outcome);
  const int trees = static_cast<int>(dec.mu.size());
  LabeledForest forest;
  forest.extra_roots = trees - 1;
  forest.parent.assign(pref.cars(), ParentRef{});
  for (int tree = 0; tree < trees; ++tree) {
    const std::vector<int>& counts = dec.spec_blocks[tree];
    const std::vector<int>& sigma = dec.order_blocks[tree];
    if (sigma.empty()) continue;
    std::size_t at = 0;
    for (int rep = 0; rep < counts[0]; ++rep) {
      forest.parent[sigma[at++] - 1] = root_ref(tree);
    }
    for (std::size_t j = 0; j + 1 < sigma.size(); ++j) {
      for (int rep = 0; rep < counts[j + 1]; ++rep) {
        forest.parent[sigma[at++] - 1] = vertex_ref(sigma[j]);
      }
    }
    if (at != sigma.size()) {
      throw std::logic_error("phi: block specification mismatch");
    }
  }
  return forest;
}

TripletForest triplet_forest(const LabeledForest& forest) {
  validate_forest(forest);
  const int n = forest.size();
  ChildLists lists = children_lists(forest);
  ForestOrder order = forest_order(forest);
  TripletForest out;
  out.forest = forest;
  out.pref.assign(n, 0);
  out.rank = order.position;
  out.mu = order.mu;
  int at = 0;
  for (int tree = 0; tree <= forest.extra_roots; ++tree) {
    for (int child : lists.of_root[tree]) {
      out.pref[child - 1] = order.mu[tree] + tree + 1;
    }
    for (int j = 0; j < order.tree_sizes[tree]; ++j) {
      int w = order.order[at++];
      for (int child : lists.of_vertex[w - 1]) {
        out.pref[child - 1] = order.position[w - 1] + tree + 1;
      }
    }
  }
  return out;
}

PreferenceSet phi_inverse(const TripletForest& forest) {
  return make_preference_set(forest.pref,
                             forest.forest.size() + forest.forest.extra_roots);
}

PreferenceSet phi_inverse(const LabeledForest& forest) {
  return phi_inverse(triplet_forest(forest));
}

bool in_restricted_family(const LabeledForest& forest, int max_pref) {
  if (max_pref < 0) {
    throw std::invalid_argument("in_restricted_family: negative bound");
  }
  const int n = forest.size();
  const int k = forest.extra_roots;
  if (n == 0) return k == 0;
  ForestOrder order = forest_order(forest);
  if (order.tree_sizes[k] < n + k - max_pref + 1) return false;
  ChildLists lists = children_lists(forest);
  for (int j = std::max(1, max_pref - k); j <= n; ++j) {
    if (!lists.of_vertex[order.order[j - 1] - 1].empty()) return false;
  }
  return true;
}

std::string serialize_forest(const LabeledForest& forest) {
  std::ostringstream out;
  out << "k " << forest.extra_roots << "\n";
  out << "n " << forest.size() << "\n";
  for (int label = 1; label <= forest.size(); ++label) {
    const ParentRef& p = forest.parent[label - 1];
    out << label << ' ';
    if (p.root) {
      out << 'R' << p.index;
    } else {
      out << p.index;
    }
    out << "\n";
  }
  return out.str();
}

LabeledForest parse_forest(const std::string& text) {
  std::istringstream in(text);
  std::string key;
  int extra_roots = 0;
  int n = 0;
  if (!(in >> key) || key != "k" || !(in >> extra_roots)) {
    throw std::invalid_argument("parse_forest: expected 'k <count>'");
  }
  if (!(in >> key) || key != "n" || !(in >> n) || n < 0) {
    throw std::invalid_argument("parse_forest: expected 'n <count>'");
  }
  LabeledForest forest;
  forest.extra_roots = extra_roots;
  forest.parent.assign(n, ParentRef{});
  std::vector<bool> seen(n, false);
  for (int row = 0; row < n; ++row) {
    int label = 0;
    std::string parent;
    if (!(in >> label >> parent)) {
      throw std::invalid_argument("parse_forest: truncated vertex list");
    }
    if (label < 1 || label > n || seen[label - 1]) {
      throw std::invalid_argument("parse_forest: bad vertex label");
    }
    seen[label - 1] = true;
    if (!parent.empty() && parent[0] == 'R') {
      forest.parent[label - 1] = root_ref(std::stoi(parent.substr(1)));
    } else {
      forest.parent[label - 1] = vertex_ref(std::stoi(parent));
    }
  }
  validate_forest(forest);
  return forest;
}

std::vector<LabeledForest> all_forests(int n, int k) {
  if (n < 0 || k < 0) {
    throw std::invalid_argument("all_forests: negative parameters");
  }
  // Parent codes per vertex: 0..k name roots, k+1.. name the other labels.
  std::vector<LabeledForest> out;
  LabeledForest forest;
  forest.extra_roots = k;
  forest.parent.assign(n, root_ref(0));
  std::vector<int> code(n, 0);
  const int options = n + k;  // k+1 roots plus n-1 non-self labels
  auto decode = [&](int label, int c) {
    if (c <= k) return root_ref(c);
    int other = c - k;  // 1-based among labels with `label` skipped
    if (other >= label) ++other;
    return vertex_ref(other);
  };
  while (true) {
    for (int label = 1; label <= n; ++label) {
      forest.parent[label - 1] = decode(label, code[label - 1]);
    }
    bool ok = true;
    for (int label = 1; label <= n && ok; ++label) {
      ok = walk_to_root(forest, label) >= 0;
    }
    if (ok) out.push_back(forest);
    int at = n - 1;
    while (at >= 0 && code[at] == options - 1) code[at--] = 0;
    if (at < 0) break;
    ++code[at];
  }
  return out;
}

}  // namespace flawpark
