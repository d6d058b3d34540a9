#pragma once

#include "flawpark/forest.hpp"
#include "flawpark/parking.hpp"

namespace flawpark {

enum class Direction { forward, backward };

// Summary of the sequence encoded by a triplet forest, read off the triplet
// data alone: empty spaces sit at mu[i]+i, vertex 1 carries the lead entry.
struct TripletStats {
  int leading = 0;          // entry attached to vertex 1
  int lead_rank = 0;        // traversal rank of vertex 1
  int multiplicity = 0;     // vertices sharing the leading entry
  int tree = 0;             // tree containing vertex 1
  int max_empty_below = 0;  // largest empty space below the lead entry, else 0
  int max_empty = 0;        // largest empty space overall, else 0
};

TripletStats triplet_stats(const TripletForest& forest);

// Re-parents vertex 1 within its tree, raising the lead entry by one
// (forward) or lowering it by one (backward).  Forward input must have the
// lead entry repeated or ranked past its slack; backward input must have
// lead entry at least two above the last empty space below it.
TripletForest psi_move(const TripletForest& forest, Direction direction);

// Moves vertex 1 under the next root, raising the lead entry by one.
// Forward input: multiplicity one, rank exactly at the slack, and at least
// one later tree.  Backward input: lead entry one above an empty space.
TripletForest psi_rootshift(const TripletForest& forest, Direction direction);

// Swaps the lead entry with the top space.  Forward input must park
// completely with a unique lead entry ranked at its slack and no empty space
// above it; the entry becomes spaces+1 on one more space.  Backward input
// must park completely with lead entry equal to spaces; the entry becomes
// the largest empty space on one fewer space.
PreferenceSet psi_lead_replace(const PreferenceSet& pref, Direction direction);

// Trades a lead entry of 1 for a lead entry of max_pref and one more empty
// space, within forests of sequences bounded by max_pref.  Vertex 1's
// subtree becomes the new second tree and vertex 1 re-enters as a leaf in
// the last tree.
TripletForest flaw_raise(const TripletForest& forest, int max_pref,
                         Direction direction);

// Trades a lead entry of 2 in a complete sequence for a lead entry of n with
// one empty space.  Vertex 1's subtree becomes the first tree and vertex 1
// re-enters as a leaf.
TripletForest flaw_seed(const TripletForest& forest, Direction direction);

}  // namespace flawpark
