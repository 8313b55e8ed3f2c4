#include "knotpad/moves.hpp"

#include <stdexcept>

namespace knotpad {

int box_slot(int gen, BoxRole role) {
    // generator +1: ccw [BR, TR, TL, BL] (under strand BR-TL)
    // generator -1: ccw [BL, BR, TR, TL] (under strand BL-TR)
    static constexpr int pos[4] = {3, 0, 1, 2};  // indexed by BoxRole
    static constexpr int neg[4] = {0, 1, 2, 3};
    return gen > 0 ? pos[role] : neg[role];
}

std::vector<int> insert_box(DiagramBuilder& b, Half e1, Half e2, int k, int gen) {
    std::vector<int> ids;
    if (k <= 0) return ids;
    const Half p1 = e1, q1 = b.link[e1.crossing][e1.slot];
    const Half p2 = e2, q2 = b.link[e2.crossing][e2.slot];
    if (p2 == p1 || p2 == q1) throw std::invalid_argument("insert_box: both ends on the same edge");
    for (int i = 0; i < k; ++i) ids.push_back(b.add_crossing());
    auto at = [&](int i, BoxRole r) { return Half{ids[i], box_slot(gen, r)}; };
    b.connect(at(0, BL), q1);
    b.connect(at(0, BR), p2);
    b.connect(at(k - 1, TL), p1);
    b.connect(at(k - 1, TR), q2);
    for (int i = 0; i + 1 < k; ++i) {
        b.connect(at(i, TL), at(i + 1, BL));
        b.connect(at(i, TR), at(i + 1, BR));
    }
    return ids;
}

std::array<int, 2> insert_r2_finger(DiagramBuilder& b, Half e1, Half e2, bool e1_over) {
    const Half p1 = e1, q1 = b.link[e1.crossing][e1.slot];
    const Half p2 = e2, q2 = b.link[e2.crossing][e2.slot];
    if (p2 == p1 || p2 == q1) throw std::invalid_argument("insert_r2: both ends on the same edge");
    enum { N, W, S, E };
    // ccw order around each new crossing is E, N, W, S; pick the start so that
    // e2 (N-S) is the under-strand when e1 passes over, and vice versa.
    auto slot = [&](int dir) {
        static constexpr int over_layout[4] = {0, 1, 2, 3};   // N W S E
        static constexpr int under_layout[4] = {3, 0, 1, 2};  // W S E N
        return e1_over ? over_layout[dir] : under_layout[dir];
    };
    const int top = b.add_crossing();
    const int bot = b.add_crossing();
    b.connect({top, slot(W)}, p1);
    b.connect({bot, slot(W)}, q1);
    b.connect({bot, slot(S)}, p2);
    b.connect({top, slot(N)}, q2);
    b.connect({top, slot(E)}, {bot, slot(E)});
    b.connect({top, slot(S)}, {bot, slot(N)});
    return {top, bot};
}

namespace {

// Splice a chain of kinks into edge `label`; signs listed along the orientation.
Diagram splice_kinks(const Diagram& k, int label, const std::vector<int>& signs) {
    DiagramBuilder b = k.to_builder();
    Half tail{}, head{};
    const bool closed_loop = k.crossing_count() == 0;
    if (closed_loop) {
        if (label != 1) throw std::invalid_argument("edge id out of range");
        b.free_loops = 0;
    } else {
        if (label < 1 || label > k.edge_count()) throw std::invalid_argument("edge id out of range");
        tail = k.tail(label);
        head = k.head(label);
    }
    Half prev = tail;
    Half first_enter{};
    for (int s : signs) {
        const int x = b.add_crossing();
        // enter through slot 0 (under); positive kinks exit through slot 1, negative through slot 3
        const int exit = s > 0 ? 1 : 3;
        const int loop_in = s > 0 ? 3 : 1;
        b.hint[x] = {-1, 0, 1, 0};
        if (prev.valid()) b.connect(prev, {x, 0});
        else first_enter = {x, 0};
        b.connect({x, 2}, {x, loop_in});
        prev = {x, exit};
    }
    if (closed_loop) b.connect(prev, first_enter);
    else b.connect(prev, head);
    return Diagram::build(std::move(b));
}

}  // namespace

Diagram add_kink(const Diagram& k, int label, int sign) { return splice_kinks(k, label, {sign}); }

Diagram apply_r1_pair(const Diagram& k, int label) { return splice_kinks(k, label, {+1, -1}); }

Diagram insert_twist(const Diagram& k, int face, int i1, int i2, int count, int gen, bool require_knot) {
    DiagramBuilder b = k.to_builder();
    const auto& walk = k.faces().at(face);
    insert_box(b, walk.at(i1), walk.at(i2), count, gen);
    return Diagram::build(std::move(b), std::nullopt, require_knot);
}

Diagram insert_r2(const Diagram& k, int face, int i1, int i2, bool first_over) {
    DiagramBuilder b = k.to_builder();
    const auto& walk = k.faces().at(face);
    insert_r2_finger(b, walk.at(i1), walk.at(i2), first_over);
    return Diagram::build(std::move(b));
}

namespace {

// Rotate the slots of the flagged crossings by one, exchanging over and under.
Diagram switch_set(const Diagram& k, const std::vector<bool>& flip) {
    DiagramBuilder b = k.to_builder();
    DiagramBuilder out = b;
    auto img = [&](Half h) { return flip[h.crossing] ? Half{h.crossing, (h.slot + 1) & 3} : h; };
    for (int x = 0; x < b.crossing_count(); ++x)
        for (int s = 0; s < 4; ++s) {
            const Half src = img({x, s});
            out.link[src.crossing][src.slot] = img(b.link[x][s]);
            out.hint[src.crossing][src.slot] = b.hint[x][s];
        }
    return Diagram::build(std::move(out), std::nullopt, false);
}

}  // namespace

Diagram switch_crossing(const Diagram& k, int x) {
    std::vector<bool> flip(k.crossing_count(), false);
    flip.at(x) = true;
    return switch_set(k, flip);
}

Diagram mirror(const Diagram& k) {
    if (k.crossing_count() == 0) return k;
    return switch_set(k, std::vector<bool>(k.crossing_count(), true));
}

Diagram connected_sum(const Diagram& a, const Diagram& b) {
    if (a.crossing_count() == 0) return b;
    if (b.crossing_count() == 0) return a;
    DiagramBuilder out = a.to_builder();
    const DiagramBuilder bb = b.to_builder();
    const int off = a.crossing_count();
    for (int x = 0; x < bb.crossing_count(); ++x) {
        out.add_crossing();
        for (int s = 0; s < 4; ++s) {
            out.link[off + x][s] = {bb.link[x][s].crossing + off, bb.link[x][s].slot};
            out.hint[off + x][s] = bb.hint[x][s];
        }
    }
    const Half ta = a.tail(1), ha = a.head(1);
    const Half tb{b.tail(1).crossing + off, b.tail(1).slot};
    const Half hb{b.head(1).crossing + off, b.head(1).slot};
    out.connect(ta, hb);
    out.connect(tb, ha);
    return Diagram::build(std::move(out));
}

int seifert_circle_count(const Diagram& k) {
    const int n = k.crossing_count();
    if (n == 0) return k.free_loops();
    std::vector<std::array<bool, 4>> seen(n, {false, false, false, false});
    int circles = 0;
    for (int x = 0; x < n; ++x)
        for (int s = 0; s < 4; ++s) {
            Half start{x, s};
            if (!k.is_out(start) || seen[x][s]) continue;
            ++circles;
            Half h = start;
            do {
                seen[h.crossing][h.slot] = true;
                const Half a = k.link(h);
                // Seifert smoothing: incoming under (0) turns to outgoing over, incoming over turns to 2
                h = {a.crossing, a.slot == 0 ? k.over_out(a.crossing) : 2};
            } while (h != start);
        }
    return circles + k.free_loops();
}

}  // namespace knotpad
