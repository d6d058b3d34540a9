#pragma once

#include <string>
#include <vector>

#include "flawpark/parking.hpp"

namespace flawpark {

// Parent of a forest vertex: either the root R_index or the vertex labeled
// index.  Roots are tags of their own kind, never vertex labels.
struct ParentRef {
  bool root = false;
  int index = 0;
  friend bool operator==(const ParentRef&, const ParentRef&) = default;
};

inline ParentRef root_ref(int tree) { return ParentRef{true, tree}; }
inline ParentRef vertex_ref(int label) { return ParentRef{false, label}; }

// Forest of extra_roots+1 trees rooted at R_0..R_extra_roots whose non-root
// vertices are labeled 1..parent.size(); parent[i] is the parent of label i+1.
struct LabeledForest {
  int extra_roots = 0;
  std::vector<ParentRef> parent;

  int size() const { return static_cast<int>(parent.size()); }
  friend bool operator==(const LabeledForest&, const LabeledForest&) = default;
};

// Throws std::invalid_argument on out-of-range references or cycles.
void validate_forest(const LabeledForest& forest);

// Index of the tree containing a label.
int tree_of(const LabeledForest& forest, int label);

// Children of each root and vertex, labels ascending.
struct ChildLists {
  std::vector<std::vector<int>> of_root;
  std::vector<std::vector<int>> of_vertex;
};

ChildLists children_lists(const LabeledForest& forest);

// Traversal order over non-root vertices: tree by tree, within a tree level
// by level, within a level by parent position, among siblings by label.
struct ForestOrder {
  std::vector<int> order;       // order[j] = label in position j+1
  std::vector<int> position;    // position[label-1] = 1-based position
  std::vector<int> tree_sizes;  // non-roots per tree
  std::vector<int> mu;          // mu[i] = non-roots in trees before tree i
};

ForestOrder forest_order(const LabeledForest& forest);

// Children counts read along the traversal with roots interleaved, omitting
// the final vertex; length size+extra_roots.
std::vector<int> forest_specification(const LabeledForest& forest);

// Sequence-to-forest bijection.  The input must park completely; the number
// of empty spaces becomes extra_roots.
LabeledForest phi(const PreferenceSet& pref);

// Forest with each vertex's sequence entry (pref) and traversal rank.
struct TripletForest {
  LabeledForest forest;
  std::vector<int> pref;
  std::vector<int> rank;
  std::vector<int> mu;
};

TripletForest triplet_forest(const LabeledForest& forest);

PreferenceSet phi_inverse(const LabeledForest& forest);
PreferenceSet phi_inverse(const TripletForest& forest);

// Whether the forest is the image of a sequence with entries <= max_pref:
// the last tree keeps at least size+extra_roots-max_pref+1 non-roots and the
// tail of the traversal consists of leaves.
bool in_restricted_family(const LabeledForest& forest, int max_pref);

// Line format: "k <extra_roots>", "n <size>", then one "<label> <parent>"
// line per label in order; parents print as R<tree> or the label.
std::string serialize_forest(const LabeledForest& forest);
LabeledForest parse_forest(const std::string& text);

// Every forest on n labeled non-roots and k+1 roots.
std::vector<LabeledForest> all_forests(int n, int k);

}  // namespace flawpark
