#pragma once

#include <vector>

#include "knotpad/diagram.hpp"

namespace knotpad {

enum class Shading { black, white };

struct CheckerboardEdge {
    int u = 0, v = 0;   // vertex ids (indices into CheckerboardGraph::faces)
    int crossing = 0;   // source crossing id
    int type = 0;       // +1 if the A-smoothing joins the two shaded corners, else -1
};

// Tait graph: shaded faces as vertices, one edge per crossing.
struct CheckerboardGraph {
    std::vector<int> faces;  // diagram face id of each vertex
    std::vector<CheckerboardEdge> edges;

    int vertex_count() const { return static_cast<int>(faces.size()); }
    bool connected() const;
};

// Face colouring: colour[f] in {0,1}; faces sharing an edge get different colours.
// Black is the colour of the corner 0 face of crossing 0.
std::vector<int> face_colouring(const Diagram& k);
CheckerboardGraph checkerboard(const Diagram& k, Shading shading);

}  // namespace knotpad
