#pragma once

#include <cstdint>

#include "knotpad/diagram.hpp"
#include "knotpad/group.hpp"
#include "knotpad/plat.hpp"

namespace knotpad {

struct HomcountOptions {
    // Search nodes allowed in the Wirtinger colouring search before CapExceeded.
    std::int64_t node_budget = 20'000'000;
};

// Number of homomorphisms from the knot group to G sending meridians into C,
// counted as C-colourings of the diagram's arcs (Wirtinger relations).
std::int64_t homcount_pd(const Diagram& k, const GroupClass& gc, const HomcountOptions& opt = {});

// Same count through the Artin action on the plat's bottom cups: seeds are
// pushed up through the rows and must satisfy the cap relations.
std::int64_t homcount_plat(const PlatDiagram& p, const GroupClass& gc, const HomcountOptions& opt = {});

}  // namespace knotpad
