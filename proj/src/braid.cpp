#include "knotpad/braid.hpp"

#include <cstdlib>
#include <queue>
#include <stdexcept>

#include "knotpad/errors.hpp"
#include "knotpad/moves.hpp"

namespace knotpad {

int BraidWord::writhe() const {
    int w = 0;
    for (int l : letters) w += l > 0 ? 1 : -1;
    return w;
}

Diagram braid_closure(const BraidWord& w, bool allow_links) {
    if (w.strands < 1) throw std::invalid_argument("braid needs at least one strand");
    DiagramBuilder b;
    std::vector<Half> top(w.strands + 1), bottom(w.strands + 1);
    for (int l : w.letters) {
        const int g = std::abs(l), e = l > 0 ? 1 : -1;
        if (g < 1 || g >= w.strands) throw std::invalid_argument("braid letter out of range");
        const int x = b.add_crossing();
        for (int side = 0; side < 2; ++side) {
            const Half in{x, box_slot(e, side == 0 ? BL : BR)};
            b.hint[x][in.slot] = -1;
            if (top[g + side].valid()) b.connect(top[g + side], in);
            else bottom[g + side] = in;
        }
        top[g] = {x, box_slot(e, TL)};
        top[g + 1] = {x, box_slot(e, TR)};
        b.hint[x][top[g].slot] = 1;
        b.hint[x][top[g + 1].slot] = 1;
    }
    for (int pos = 1; pos <= w.strands; ++pos) {
        if (top[pos].valid()) b.connect(top[pos], bottom[pos]);
        else ++b.free_loops;  // strand untouched by any letter
    }
    return Diagram::build(std::move(b), std::nullopt, !allow_links);
}

namespace {

// Seifert circle index of every edge label.
std::vector<int> seifert_circles(const Diagram& k, int& count) {
    std::vector<int> circle(k.edge_count() + 1, -1);
    count = 0;
    for (int start = 1; start <= k.edge_count(); ++start) {
        if (circle[start] >= 0) continue;
        int lab = start;
        do {
            circle[lab] = count;
            const Half a = k.head(lab);
            lab = k.label({a.crossing, a.slot == 0 ? k.over_out(a.crossing) : 2});
        } while (lab != start);
        ++count;
    }
    return circle;
}

// A face holding edges of two different Seifert circles that run the same way
// around it; returns the two walk positions or {-1,-1}.
std::pair<Half, Half> find_defect(const Diagram& k, const std::vector<int>& circle) {
    for (const auto& walk : k.faces())
        for (std::size_t i = 0; i < walk.size(); ++i)
            for (std::size_t j = i + 1; j < walk.size(); ++j) {
                const Half a = walk[i], b = walk[j];
                if (circle[k.label(a)] != circle[k.label(b)] && k.is_out(a) == k.is_out(b)) return {a, b};
            }
    return {Half{}, Half{}};
}

}  // namespace

BraidWord to_braid(const Diagram& input) {
    if (input.crossing_count() == 0) return {1, {}};
    Diagram k = input;
    int circles = 0;
    auto circle = seifert_circles(k, circles);
    // Vogel: every move on a defect keeps the circle count and lowers the height
    const int max_moves = circles * circles + 8;
    for (int moves = 0;; ++moves) {
        const auto [a, b] = find_defect(k, circle);
        if (!a.valid()) break;
        if (moves >= max_moves) throw std::logic_error("to_braid: Vogel moves did not terminate");
        DiagramBuilder bld = k.to_builder();
        insert_r2_finger(bld, a, b, true);
        k = Diagram::build(std::move(bld));
        circle = seifert_circles(k, circles);
    }

    // Polar face about which the circles run clockwise: the braid axis.
    const int nf = k.face_count();
    int axis = -1;
    for (int f = 0; f < nf && axis < 0; ++f) {
        const auto& walk = k.faces()[f];
        bool single = true, clockwise = true;
        for (const Half h : walk) {
            single = single && circle[k.label(h)] == circle[k.label(walk[0])];
            clockwise = clockwise && !k.is_out(h);
        }
        if (single && clockwise) axis = f;
    }
    if (axis < 0) throw std::logic_error("to_braid: no braid axis after Vogel moves");

    // Cut path from the axis outwards, crossing each circle once.
    std::vector<int> level(circles, -1), cut(circles, 0);
    int face = axis;
    int cur = circle[k.label(k.faces()[axis][0])];
    level[cur] = 0;
    for (int lv = 0;; ++lv) {
        int cut_label = 0;
        for (const Half h : k.faces()[face])
            if (circle[k.label(h)] == cur) {
                cut_label = k.label(h);
                break;
            }
        cut[lv] = cut_label;
        if (lv + 1 == circles) break;
        const auto [f1, f2] = k.edge_faces(cut_label);
        face = f1 == face ? f2 : f1;
        int next = -1;
        for (const Half h : k.faces()[face]) {
            const int c = circle[k.label(h)];
            if (c == cur) continue;
            if (next >= 0 && next != c) throw std::logic_error("to_braid: circles are not nested");
            next = c;
        }
        if (next < 0 || level[next] >= 0) throw std::logic_error("to_braid: circles are not nested");
        level[next] = lv + 1;
        cur = next;
    }

    // Each circle's crossings in order from its cut; merge the orders.
    const int n = k.crossing_count();
    std::vector<std::vector<int>> succ(n);
    std::vector<int> indeg(n, 0), lo(n, circles), hi(n, -1);
    for (int lv = 0; lv < circles; ++lv) {
        int lab = cut[lv], prev = -1;
        do {
            const Half a = k.head(lab);
            const int x = a.crossing;
            lo[x] = std::min(lo[x], lv);
            hi[x] = std::max(hi[x], lv);
            if (prev >= 0) {
                succ[prev].push_back(x);
                ++indeg[x];
            }
            prev = x;
            lab = k.label({x, a.slot == 0 ? k.over_out(x) : 2});
        } while (lab != cut[lv]);
    }
    BraidWord w{circles, {}};
    std::priority_queue<int, std::vector<int>, std::greater<>> ready;
    for (int x = 0; x < n; ++x)
        if (indeg[x] == 0) ready.push(x);
    while (!ready.empty()) {
        const int x = ready.top();
        ready.pop();
        if (hi[x] != lo[x] + 1) throw std::logic_error("to_braid: crossing between non-adjacent circles");
        w.letters.push_back((circles - hi[x]) * k.sign(x));
        for (int y : succ[x])
            if (--indeg[y] == 0) ready.push(y);
    }
    if (static_cast<int>(w.letters.size()) != n) throw std::logic_error("to_braid: inconsistent angular order");
    return w;
}

}  // namespace knotpad
