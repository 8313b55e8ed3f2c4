#pragma once

#include <string>

#include "knotpad/diagram.hpp"
#include "knotpad/plat.hpp"

namespace knotpad {

// Deterministic figures. Plats are drawn as a grid of twist boxes labelled with
// their coefficients between the cup and cap matchings; PD diagrams as a
// barycentric (Tutte) embedding with gaps at under-passes.
std::string render_plat_svg(const PlatDiagram& p);
std::string render_plat_ascii(const PlatDiagram& p);
std::string render_pd_svg(const Diagram& k);
std::string render_pd_ascii(const Diagram& k);

}  // namespace knotpad
