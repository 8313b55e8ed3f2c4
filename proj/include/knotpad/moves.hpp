#pragma once

#include <array>
#include <vector>

#include "knotpad/diagram.hpp"

namespace knotpad {

// Roles of the four ends of a braid-like box (strands read bottom to top).
enum BoxRole { BL = 0, BR = 1, TR = 2, TL = 3 };

// Slot of a crossing that plays `role` when the crossing is a generator of sign
// `gen` (+1: strand BL->TR passes over; -1: strand BR->TL passes over).
int box_slot(int gen, BoxRole role);

// Builder-level primitive: inserts a vertical stack of `k` generator-`gen`
// crossings inside a face, between two distinct edges of that face. e1 and e2
// are halves from the face-on-left walk (the walk leaves e1.crossing along e1).
// The part of e1 nearer the walk start is attached at TL, the rest at BL; for e2
// at BR and TR respectively. Returns the new crossing ids bottom to top.
std::vector<int> insert_box(DiagramBuilder& b, Half e1, Half e2, int k, int gen);

// Builder-level R2 finger: e1's strand is pushed across e2 inside their common
// face, creating two crossings with e1 over if e1_over.
std::array<int, 2> insert_r2_finger(DiagramBuilder& b, Half e1, Half e2, bool e1_over);

// Kink of the given sign on edge `label` (for the 0-crossing unknot, label 1).
Diagram add_kink(const Diagram& k, int label, int sign);
// Two kinks of opposite signs on one edge (writhe and regular isotopy class kept).
Diagram apply_r1_pair(const Diagram& k, int label);

// Diagram-level wrappers. `i1`, `i2` index the walk of face `face`.
Diagram insert_twist(const Diagram& k, int face, int i1, int i2, int count, int gen, bool require_knot = true);
Diagram insert_r2(const Diagram& k, int face, int i1, int i2, bool first_over);

Diagram switch_crossing(const Diagram& k, int x);
Diagram mirror(const Diagram& k);
// Diagrammatic connected sum, joined at edge label 1 of each diagram.
Diagram connected_sum(const Diagram& a, const Diagram& b);

// Number of Seifert circles (= maxima of the braid-form height function).
int seifert_circle_count(const Diagram& k);

}  // namespace knotpad
