#pragma once

#include <optional>
#include <string>
#include <vector>

#include "knotpad/diagram.hpp"
#include "knotpad/plat.hpp"

namespace knotpad {

// Bundled test corpus: the 0-crossing unknot, kinked unknots, both trefoils,
// 4_1, 5_2, 6_1, granny and square composites, non-alternating diagrams made by
// switching crossings, and seeded random plats. Every entry is a knot with at
// most 12 crossings; plat entries also carry their plat form.
struct CorpusEntry {
    std::string name;
    Diagram diagram;
    std::optional<PlatDiagram> plat;
};

inline constexpr unsigned kCorpusSeed = 20240531u;
inline constexpr int kCorpusRandomPlats = 50;

const std::vector<CorpusEntry>& corpus();
// Throws std::out_of_range for an unknown name.
const CorpusEntry& corpus_entry(const std::string& name);

// Seeded random knot plat with m <= max_m, n <= max_n rows and |a| <= max_a
// (retries until the closure has one component and at most max_crossings).
PlatDiagram seeded_random_plat(unsigned long long seed, int max_m, int max_n, int max_a, long max_crossings);

}  // namespace knotpad
