#pragma once

#include <vector>

#include "knotpad/diagram.hpp"

namespace knotpad {

// Word in the braid group on `strands` strands, read bottom to top. Letter +i is
// sigma_i (strands i and i+1, lower-left strand over), -i its inverse.
struct BraidWord {
    int strands = 1;
    std::vector<int> letters;

    int writhe() const;
    bool operator==(const BraidWord&) const = default;
};

// Trace closure. Throws NotAKnotError unless `allow_links`.
Diagram braid_closure(const BraidWord& w, bool allow_links = false);

// Braid word whose closure is regularly isotopic to `k`: Vogel moves (R2 fingers
// across defect faces) until the Seifert circles are coherently nested, then
// the crossings are read off in angular order. Strand count = Seifert circles.
BraidWord to_braid(const Diagram& k);

}  // namespace knotpad
