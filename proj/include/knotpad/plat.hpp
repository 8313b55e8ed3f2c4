#pragma once

#include <vector>

#include "knotpad/diagram.hpp"

namespace knotpad {

// Standard m-plat: 2m strand positions (1-based), bottom cups {2j-1, 2j}.
// Row i (1-based, bottom first) is odd: m-1 regions on pairs (2j, 2j+1);
// even: m regions on pairs (2j-1, 2j). A coefficient a is the braid generator
// on that pair raised to the power a (positive = lower-left strand over).
// Top caps: adjacent pairs when n is odd; {1,2m} and {2j,2j+1} when n is even.
struct PlatDiagram {
    int m = 1;
    std::vector<std::vector<int>> rows;

    int n() const { return static_cast<int>(rows.size()); }
    // Throws std::invalid_argument if row lengths do not alternate m-1, m, ...
    void validate() const;
    bool highly_twisted() const;
    long total_crossings() const;
    // Left strand position (1-based) of region j (0-based) in row i (0-based).
    int left_position(int row, int j) const { return row % 2 == 0 ? 2 * j + 2 : 2 * j + 1; }
    // Partner (1-based) of each position under the top matching.
    std::vector<int> top_partner() const;

    bool operator==(const PlatDiagram&) const = default;
};

// Expand into an oriented PD diagram; orientation leaves bottom position 1 upward.
// Throws NotAKnotError if the closure is not a single component.
Diagram plat_to_pd(const PlatDiagram& p);
// Same, but allows several components (intermediate use).
Diagram plat_to_pd_any(const PlatDiagram& p);

// Strand directions at the bottom cups obtained by tracing the plat closure from
// position 1 upward: going_up[pos] for pos = 1..2m. Also reports the component count.
struct PlatTrace {
    std::vector<bool> going_up;  // index 1..2m
    int components = 0;
};
PlatTrace trace_plat(const PlatDiagram& p);

}  // namespace knotpad
