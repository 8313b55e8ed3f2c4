#include "knotpad/checkerboard.hpp"

#include <numeric>
#include <queue>
#include <stdexcept>

namespace knotpad {

std::vector<int> face_colouring(const Diagram& k) {
    const int f = k.face_count();
    std::vector<int> colour(f, -1);
    if (f == 0) return colour;
    std::vector<std::vector<int>> adj(f);
    for (int lab = 1; lab <= k.edge_count(); ++lab) {
        auto [a, b] = k.edge_faces(lab);
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    const int start = k.corner_face(0, 0);
    colour[start] = 0;
    std::queue<int> q;
    q.push(start);
    while (!q.empty()) {
        const int u = q.front();
        q.pop();
        for (int v : adj[u]) {
            if (colour[v] < 0) {
                colour[v] = 1 - colour[u];
                q.push(v);
            } else if (colour[v] == colour[u]) {
                throw std::logic_error("face adjacency is not bipartite");
            }
        }
    }
    return colour;
}

CheckerboardGraph checkerboard(const Diagram& k, Shading shading) {
    CheckerboardGraph g;
    if (k.crossing_count() == 0) {
        g.faces.push_back(0);  // one shaded region, no crossings
        return g;
    }
    const int want = shading == Shading::black ? 0 : 1;
    const auto colour = face_colouring(k);
    std::vector<int> vertex_of(k.face_count(), -1);
    for (int f = 0; f < k.face_count(); ++f)
        if (colour[f] == want) {
            vertex_of[f] = g.vertex_count();
            g.faces.push_back(f);
        }
    for (int x = 0; x < k.crossing_count(); ++x) {
        // corners 0 and 2 share a colour, as do corners 1 and 3
        const bool even_shaded = colour[k.corner_face(x, 0)] == want;
        const int c = even_shaded ? 0 : 1;
        CheckerboardEdge e;
        e.u = vertex_of[k.corner_face(x, c)];
        e.v = vertex_of[k.corner_face(x, c + 2)];
        e.crossing = x;
        e.type = even_shaded ? -1 : 1;
        g.edges.push_back(e);
    }
    return g;
}

bool CheckerboardGraph::connected() const {
    const int n = vertex_count();
    if (n == 0) return true;
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    for (const auto& e : edges) parent[find(e.u)] = find(e.v);
    int roots = 0;
    for (int v = 0; v < n; ++v)
        if (find(v) == v) ++roots;
    return roots == 1;
}

}  // namespace knotpad
