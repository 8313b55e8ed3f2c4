#include "knotpad/diagram.hpp"

#include <map>
#include <numeric>
#include <string>

#include "knotpad/errors.hpp"

namespace knotpad {

int DiagramBuilder::add_crossing() {
    link.push_back({});
    hint.push_back({0, 0, 0, 0});
    return static_cast<int>(link.size()) - 1;
}

void DiagramBuilder::connect(Half a, Half b) {
    link[a.crossing][a.slot] = b;
    link[b.crossing][b.slot] = a;
}

void DiagramBuilder::compact(const std::vector<bool>& dead) {
    if (dead.size() != link.size()) throw std::logic_error("compact: mask size differs from crossing count");
    std::vector<int> remap(link.size(), -1);
    int next = 0;
    for (std::size_t x = 0; x < link.size(); ++x)
        if (!dead[x]) remap[x] = next++;
    std::vector<std::array<Half, 4>> nl(next);
    std::vector<std::array<std::int8_t, 4>> nh(next);
    for (std::size_t x = 0; x < link.size(); ++x) {
        if (dead[x]) continue;
        for (int s = 0; s < 4; ++s) {
            Half t = link[x][s];
            if (!t.valid() || remap[t.crossing] < 0) throw std::logic_error("compact: live crossing linked to removed one");
            nl[remap[x]][s] = {remap[t.crossing], t.slot};
        }
        nh[remap[x]] = hint[x];
    }
    link = std::move(nl);
    hint = std::move(nh);
}

Diagram::Diagram() { free_loops_ = 1; components_ = 1; tail_.resize(1); head_.resize(1); }

Diagram Diagram::unlink(int loops) {
    DiagramBuilder b;
    b.free_loops = loops;
    return build(std::move(b), std::nullopt, false);
}

Diagram Diagram::from_pd(const std::vector<std::array<int, 4>>& quads, bool allow_links) {
    const int n = static_cast<int>(quads.size());
    if (n == 0) return Diagram();
    std::map<int, std::vector<Half>> where;
    for (int x = 0; x < n; ++x)
        for (int s = 0; s < 4; ++s) where[quads[x][s]].push_back({x, s});
    for (const auto& [lab, occ] : where) {
        if (occ.size() != 2)
            throw ParseError("edge multiplicity: label " + std::to_string(lab) + " appears " +
                             std::to_string(occ.size()) + " times");
        if (lab < 1 || lab > 2 * n)
            throw ParseError("edge label " + std::to_string(lab) + " outside 1.." + std::to_string(2 * n));
    }
    DiagramBuilder b;
    for (int x = 0; x < n; ++x) {
        b.add_crossing();
        b.hint[x] = {-1, 0, 1, 0};
    }
    for (const auto& [lab, occ] : where) b.connect(occ[0], occ[1]);
    return build(std::move(b), std::nullopt, !allow_links, true);
}

Diagram Diagram::build(DiagramBuilder b, std::optional<Half> reference_out, bool require_knot, bool strict_hints) {
    Diagram d;
    const int n = b.crossing_count();
    d.free_loops_ = b.free_loops;
    if (n == 0) {
        d.components_ = b.free_loops;
        if (require_knot && d.components_ != 1) throw NotAKnotError("diagram has " + std::to_string(d.components_) + " components");
        return d;
    }
    for (int x = 0; x < n; ++x)
        for (int s = 0; s < 4; ++s) {
            Half t = b.link[x][s];
            if (!t.valid() || t.crossing >= n || t.slot < 0 || t.slot > 3 || b.link[t.crossing][t.slot] != Half{x, s})
                throw ParseError("dangling or asymmetric edge at crossing " + std::to_string(x));
        }

    auto step = [&](Half out) {
        Half a = b.link[out.crossing][out.slot];
        return Half{a.crossing, (a.slot + 2) & 3};
    };
    std::vector<std::array<std::int8_t, 4>> dir(n, {0, 0, 0, 0});
    int traversals = 0;
    auto orient = [&](Half out) {
        Half h = out;
        do {
            dir[h.crossing][h.slot] = 1;
            Half a = b.link[h.crossing][h.slot];
            dir[a.crossing][a.slot] = -1;
            h = step(h);
        } while (h != out);
        ++traversals;
    };
    if (reference_out) orient(*reference_out);
    for (int x = 0; x < n; ++x)
        for (int s = 0; s < 4; ++s) {
            if (dir[x][s] != 0) continue;
            // collect this component (walking in the direction leaving (x,s)) and look for a hint
            Half start{x, s};
            int agree = 0;
            Half h = start;
            do {
                const int ho = b.hint[h.crossing][h.slot];
                Half a = b.link[h.crossing][h.slot];
                const int hi = b.hint[a.crossing][a.slot];
                if (ho != 0) agree = ho;
                else if (hi != 0) agree = -hi;
                if (agree != 0) break;
                h = step(h);
            } while (h != start);
            if (agree == 0) agree = (s == 2 || s == 3) ? 1 : -1;  // default: slot 0 incoming
            orient(agree > 0 ? start : Half{x, (s + 2) & 3});
        }
    if (strict_hints)
        for (int x = 0; x < n; ++x)
            for (int s = 0; s < 4; ++s)
                if (b.hint[x][s] != 0 && b.hint[x][s] != dir[x][s])
                    throw ParseError("inconsistent orientation at crossing " + std::to_string(x + 1));

    // rotate so that slot 0 is the incoming under-strand
    std::vector<int> rot(n);
    for (int x = 0; x < n; ++x) rot[x] = dir[x][0] == 1 ? 2 : 0;
    d.link_.assign(n, {});
    d.sign_.assign(n, 0);
    for (int x = 0; x < n; ++x) {
        for (int s = 0; s < 4; ++s) {
            Half t = b.link[x][s];
            d.link_[x][(s + rot[x]) & 3] = {t.crossing, (t.slot + rot[t.crossing]) & 3};
        }
        d.sign_[x] = dir[x][(1 + rot[x]) & 3] == 1 ? 1 : -1;
    }

    // label edges along the orientation, component by component
    d.label_.assign(n, {0, 0, 0, 0});
    d.tail_.assign(2 * n + 1, {});
    d.head_.assign(2 * n + 1, {});
    int next_label = 1;
    for (int x = 0; x < n; ++x)
        for (int s : {0, d.over_in(x)}) {
            if (d.label_[x][s] != 0) continue;
            const Half first_tail = d.link_[x][s];
            Half h = first_tail;
            do {
                Half a = d.link(h);
                d.label_[h.crossing][h.slot] = next_label;
                d.label_[a.crossing][a.slot] = next_label;
                d.tail_[next_label] = h;
                d.head_[next_label] = a;
                ++next_label;
                h = {a.crossing, (a.slot + 2) & 3};
            } while (h != first_tail);
        }
    d.components_ = traversals + b.free_loops;
    if (require_knot && d.components_ != 1)
        throw NotAKnotError("diagram has " + std::to_string(d.components_) + " components");

    d.compute_faces();
    // Euler check per connected piece of the crossing graph
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    for (int x = 0; x < n; ++x)
        for (int s = 0; s < 4; ++s) parent[find(x)] = find(d.link_[x][s].crossing);
    int pieces = 0;
    for (int x = 0; x < n; ++x)
        if (find(x) == x) ++pieces;
    if (d.face_count() != n + 2 * pieces) throw ParseError("non-planar map (Euler characteristic check failed)");
    return d;
}

void Diagram::compute_faces() {
    const int n = crossing_count();
    face_.assign(n, {-1, -1, -1, -1});
    faces_.clear();
    for (int x = 0; x < n; ++x)
        for (int s = 0; s < 4; ++s) {
            if (face_[x][s] >= 0) continue;
            const int id = static_cast<int>(faces_.size());
            faces_.emplace_back();
            Half h{x, s};
            do {
                face_[h.crossing][h.slot] = id;
                faces_.back().push_back(h);
                h = face_next(*this, h);
            } while (h != Half{x, s});
        }
}

DiagramBuilder Diagram::to_builder() const {
    DiagramBuilder b;
    b.link = link_;
    b.free_loops = free_loops_;
    b.hint.assign(link_.size(), {0, 0, 0, 0});
    for (int x = 0; x < crossing_count(); ++x)
        for (int s = 0; s < 4; ++s) b.hint[x][s] = is_out({x, s}) ? 1 : -1;
    return b;
}

int Diagram::writhe() const { return std::accumulate(sign_.begin(), sign_.end(), 0); }

bool Diagram::is_out(Half h) const {
    if (h.slot == 0) return false;
    if (h.slot == 2) return true;
    return h.slot == over_out(h.crossing);
}

std::pair<int, int> Diagram::edge_faces(int lab) const { return {face_of(tail_[lab]), face_of(head_[lab])}; }

bool Diagram::is_alternating() const {
    for (int lab = 1; lab <= edge_count(); ++lab)
        if ((tail_[lab].slot & 1) == (head_[lab].slot & 1)) return false;
    return true;
}

std::vector<int> Diagram::nugatory_crossings() const {
    std::vector<int> out;
    for (int x = 0; x < crossing_count(); ++x)
        if (face_[x][0] == face_[x][2] || face_[x][1] == face_[x][3]) out.push_back(x);
    return out;
}

std::vector<std::array<int, 4>> Diagram::to_pd() const {
    std::vector<std::array<int, 4>> out(crossing_count());
    for (int x = 0; x < crossing_count(); ++x)
        for (int s = 0; s < 4; ++s) out[x][s] = label_[x][s];
    return out;
}

}  // namespace knotpad
