#pragma once

#include <optional>
#include <string>
#include <vector>

#include "knotpad/diagram.hpp"
#include "knotpad/plat.hpp"
#include "knotpad/theory.hpp"

namespace knotpad {

// One audited rewriting event. `framing` is the exponent of theta the event
// multiplies the framed invariant by (non-zero only for R1-type events and the
// fallback substitution); `dwrithe` is the writhe change.
struct ReductionStep {
    std::string kind;
    std::string location;
    long dwrithe = 0;
    long framing = 0;
};

// Crossings whose reversal makes the diagram alternating (smaller of the two
// complementary solutions; ties keep crossing 0 unflipped). Sorted.
std::vector<int> flip_set(const Diagram& k);

// Replace every crossing of the flip set by a string of 2T-1 crossings of the
// opposite sign in the same twist region.
Diagram make_alternating(const Diagram& k, int T, std::vector<ReductionStep>* log = nullptr);

struct NugatoryResult {
    Diagram diagram;
    long dwrithe = 0;
    std::vector<ReductionStep> steps;
};
// Remove every nugatory crossing by untwisting (turning one side over).
NugatoryResult remove_nugatory(const Diagram& k);

// The two diagram edges (labels in the parent) cut by a summing circle.
struct SpliceCut {
    int e1 = 0, e2 = 0;
    int side_crossings = 0;
};
struct PrimeDecomposition {
    std::vector<Diagram> summands;
    std::vector<SpliceCut> cuts;  // in the order they were split off
};
// Edge pairs bounding the same two faces, i.e. diagrammatic 2-edge cuts.
std::vector<std::pair<int, int>> two_edge_cuts(const Diagram& k);
PrimeDecomposition prime_decompose(const Diagram& k);

struct RejoinResult {
    Diagram diagram;
    std::vector<int> epsilon;        // handedness of the pad twist between P_i and P_i+1
    std::vector<int> entered_under;  // 1 if the joining arc enters P_i+1 at an under-pass
    std::vector<ReductionStep> steps;
};
RejoinResult rejoin_with_pads(const std::vector<Diagram>& summands, int T);

struct SpecialKind {
    enum Kind { trivial, torus, hyperbolic } kind = hyperbolic;
    int p = 0;
};
// For reduced prime alternating diagrams.
SpecialKind recognize_special(const Diagram& k);

// Highly twisted 3-plat replacing a (2,p) torus diagram (or the unknot, with
// p = 2T+1). Throws std::invalid_argument for even p or T < 2.
PlatDiagram torus_fallback(int p, int T);

enum class AltCase { hyperbolic, torus_fallback, unknot_fallback };
std::string to_string(AltCase c);

struct AltReductionReport {
    Diagram output;
    std::optional<PlatDiagram> fallback_plat;
    long r = 0;
    AltCase kase = AltCase::hyperbolic;
    int T = 0;
    int torus_p = 0;
    int summands = 0;
    int crossings_before = 0;
    int crossings_after = 0;
    std::vector<ReductionStep> steps;
};

AltReductionReport reduce_alternating(const Diagram& k, int T);
AltReductionReport reduce_alternating(const Diagram& k, const Theory& th);

}  // namespace knotpad
