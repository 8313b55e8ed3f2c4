#include "knotpad/reduce_alt.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <stdexcept>
#include <string>

#include "knotpad/checkerboard.hpp"
#include "knotpad/errors.hpp"
#include "knotpad/moves.hpp"

namespace knotpad {

namespace {

bool passes_over(Half h) { return (h.slot & 1) != 0; }

std::string crossing_loc(int x) { return "crossing " + std::to_string(x); }

// Copy of `k`'s builder with orientation hints taken from the diagram.
DiagramBuilder oriented_builder(const Diagram& k) {
    DiagramBuilder b = k.to_builder();
    for (int x = 0; x < k.crossing_count(); ++x)
        for (int s = 0; s < 4; ++s) b.hint[x][s] = k.is_out({x, s}) ? 1 : -1;
    return b;
}

}  // namespace

std::vector<int> flip_set(const Diagram& k) {
    const int n = k.crossing_count();
    if (n == 0) return {};
    const int edges = k.edge_count();
    // f(c(i)) xor f(c(i+1)) = 1 xor o_i xor o_(i+1) for consecutive passes i, i+1
    std::vector<std::vector<std::pair<int, int>>> adj(n);
    for (int i = 1; i <= edges; ++i) {
        const Half a = k.head(i), b = k.head(i % edges + 1);
        const int want = 1 ^ static_cast<int>(passes_over(a)) ^ static_cast<int>(passes_over(b));
        adj[a.crossing].push_back({b.crossing, want});
        adj[b.crossing].push_back({a.crossing, want});
    }
    std::vector<int> f(n, -1);
    f[0] = 0;
    std::queue<int> q;
    q.push(0);
    while (!q.empty()) {
        const int c = q.front();
        q.pop();
        for (auto [d, w] : adj[c]) {
            const int v = f[c] ^ w;
            if (f[d] < 0) {
                f[d] = v;
                q.push(d);
            } else if (f[d] != v) {
                throw ParseError("over/under parity constraints are inconsistent (malformed diagram)");
            }
        }
    }
    std::vector<int> on, off;
    for (int c = 0; c < n; ++c) (f[c] == 1 ? on : off).push_back(c);
    // the complement of a solution is a solution; keep the smaller one
    return on.size() <= off.size() ? on : off;
}

Diagram make_alternating(const Diagram& k, int T, std::vector<ReductionStep>* log) {
    if (T < 1) throw std::invalid_argument("make_alternating needs T >= 1");
    const auto flips = flip_set(k);
    if (flips.empty()) return k;
    const int len = 2 * T - 1;
    DiagramBuilder b = oriented_builder(k);
    const int n = k.crossing_count();
    // where each end of a flipped crossing now attaches
    std::vector<std::array<Half, 4>> attach(n);
    for (int x = 0; x < n; ++x)
        for (int s = 0; s < 4; ++s) attach[x][s] = {x, s};
    std::vector<bool> dead(n, false);
    for (int x : flips) {
        const int s = k.sign(x);
        const int gen = -s;
        // box frame of the original crossing: both strands enter at the bottom
        std::array<BoxRole, 4> role_of_slot{};
        if (s > 0) role_of_slot = {BR, TR, TL, BL};
        else role_of_slot = {BL, BR, TR, TL};
        std::vector<int> ids;
        for (int i = 0; i < len; ++i) ids.push_back(b.add_crossing());
        auto at = [&](int i, BoxRole r) { return Half{ids[i], box_slot(gen, r)}; };
        for (int i = 0; i + 1 < len; ++i) {
            b.connect(at(i, TL), at(i + 1, BL));
            b.connect(at(i, TR), at(i + 1, BR));
        }
        for (int slot = 0; slot < 4; ++slot) {
            const BoxRole r = role_of_slot[slot];
            const Half h = (r == BL || r == BR) ? at(0, r) : at(len - 1, r);
            attach[x][slot] = h;
            b.hint[h.crossing][h.slot] = (r == BL || r == BR) ? -1 : 1;
        }
        dead[x] = true;
        if (log)
            log->push_back({"flip-pad", crossing_loc(x), static_cast<long>(gen) * len - s, 0});
    }
    for (int x : flips)
        for (int s = 0; s < 4; ++s) {
            const Half t = k.link({x, s});
            b.connect(attach[x][s], attach[t.crossing][t.slot]);
        }
    dead.resize(b.link.size(), false);  // pad crossings are live
    b.compact(dead);
    return Diagram::build(std::move(b));
}

NugatoryResult remove_nugatory(const Diagram& input) {
    NugatoryResult res{input, 0, {}};
    for (;;) {
        const Diagram& k = res.diagram;
        const auto nug = k.nugatory_crossings();
        if (nug.empty()) return res;
        const int n = k.crossing_count();
        std::vector<bool> removed(n, false);
        for (int x : nug) removed[x] = true;
        for (int x : nug) {
            res.dwrithe -= k.sign(x);
            res.steps.push_back({"R1", crossing_loc(x), -k.sign(x), -k.sign(x)});
        }
        if (static_cast<int>(nug.size()) == n) {
            res.diagram = Diagram();
            return res;
        }
        const int root = static_cast<int>(std::find(removed.begin(), removed.end(), false) - removed.begin());
        // turning over the side of each removed crossing away from the root
        std::vector<int> parity(n, 0);
        std::vector<int> mark(n, -1);
        for (int x : nug) {
            std::vector<int> stack{root};
            mark[root] = x;
            while (!stack.empty()) {
                const int c = stack.back();
                stack.pop_back();
                for (int s = 0; s < 4; ++s) {
                    const int d = k.link({c, s}).crossing;
                    if (d == x || mark[d] == x) continue;
                    mark[d] = x;
                    stack.push_back(d);
                }
            }
            for (int y = 0; y < n; ++y)
                if (y != x && mark[y] != x) parity[y] ^= 1;
        }
        std::vector<int> new_id(n, -1);
        DiagramBuilder b;
        for (int y = 0; y < n; ++y)
            if (!removed[y]) new_id[y] = b.add_crossing();
        auto mapped = [&](Half h) { return Half{new_id[h.crossing], parity[h.crossing] ? 3 - h.slot : h.slot}; };
        for (int y = 0; y < n; ++y) {
            if (removed[y]) continue;
            for (int s = 0; s < 4; ++s) {
                Half t = k.link({y, s});
                // removed crossings are passed straight through
                while (removed[t.crossing]) t = k.link({t.crossing, t.slot ^ 2});
                const Half from = mapped({y, s});
                b.link[from.crossing][from.slot] = mapped(t);
                b.hint[from.crossing][from.slot] = k.is_out({y, s}) ? 1 : -1;
            }
        }
        res.diagram = Diagram::build(std::move(b));
    }
}

std::vector<std::pair<int, int>> two_edge_cuts(const Diagram& k) {
    std::map<std::pair<int, int>, std::vector<int>> by_faces;
    for (int lab = 1; lab <= k.edge_count(); ++lab) {
        auto [a, b] = k.edge_faces(lab);
        if (a > b) std::swap(a, b);
        by_faces[{a, b}].push_back(lab);
    }
    std::vector<std::pair<int, int>> cuts;
    for (const auto& [faces, labs] : by_faces)
        for (std::size_t i = 0; i < labs.size(); ++i)
            for (std::size_t j = i + 1; j < labs.size(); ++j) cuts.push_back({labs[i], labs[j]});
    std::sort(cuts.begin(), cuts.end());
    return cuts;
}

namespace {

// Crossings reachable from `start` without using edges e1 or e2.
std::vector<bool> side_of(const Diagram& k, int start, int e1, int e2) {
    std::vector<bool> in(k.crossing_count(), false);
    std::vector<int> stack{start};
    in[start] = true;
    while (!stack.empty()) {
        const int c = stack.back();
        stack.pop_back();
        for (int s = 0; s < 4; ++s) {
            const int lab = k.label({c, s});
            if (lab == e1 || lab == e2) continue;
            const int d = k.link({c, s}).crossing;
            if (!in[d]) {
                in[d] = true;
                stack.push_back(d);
            }
        }
    }
    return in;
}

// Sub-diagram on the flagged crossings, closed up by joining `out` to `in`.
Diagram close_side(const Diagram& k, const std::vector<bool>& keep, Half out, Half in) {
    std::vector<int> id(k.crossing_count(), -1);
    DiagramBuilder b;
    for (int x = 0; x < k.crossing_count(); ++x)
        if (keep[x]) id[x] = b.add_crossing();
    for (int x = 0; x < k.crossing_count(); ++x) {
        if (!keep[x]) continue;
        for (int s = 0; s < 4; ++s) {
            const Half t = k.link({x, s});
            b.hint[id[x]][s] = k.is_out({x, s}) ? 1 : -1;
            if (keep[t.crossing]) b.link[id[x]][s] = {id[t.crossing], t.slot};
        }
    }
    const Half o{id[out.crossing], out.slot}, i{id[in.crossing], in.slot};
    b.connect(o, i);
    return Diagram::build(std::move(b), o);
}

void decompose_into(const Diagram& k, PrimeDecomposition& dec) {
    const int n = k.crossing_count();
    int best_size = n + 1;
    std::pair<int, int> best{0, 0};
    std::vector<bool> best_side;
    for (auto [e1, e2] : two_edge_cuts(k)) {
        auto side = side_of(k, k.head(e1).crossing, e1, e2);
        const int size = static_cast<int>(std::count(side.begin(), side.end(), true));
        if (size == n || size == 0) continue;  // not a separating pair
        const int small = std::min(size, n - size);
        if (small < best_size) {
            best_size = small;
            best = {e1, e2};
            best_side = std::move(side);
        }
    }
    if (best_size > n) {
        dec.summands.push_back(k);
        return;
    }
    auto [e1, e2] = best;
    const int size = static_cast<int>(std::count(best_side.begin(), best_side.end(), true));
    dec.cuts.push_back({e1, e2, std::min(size, n - size)});
    std::vector<bool> other(n);
    for (int x = 0; x < n; ++x) other[x] = !best_side[x];
    // the side holding head(e1) also holds tail(e2); it closes with tail(e2) -> head(e1)
    Diagram a = close_side(k, best_side, k.tail(e2), k.head(e1));
    Diagram b = close_side(k, other, k.tail(e1), k.head(e2));
    if (size <= n - size) {
        decompose_into(a, dec);
        decompose_into(b, dec);
    } else {
        decompose_into(b, dec);
        decompose_into(a, dec);
    }
}

}  // namespace

PrimeDecomposition prime_decompose(const Diagram& k) {
    PrimeDecomposition dec;
    if (k.crossing_count() == 0) return dec;
    decompose_into(k, dec);
    return dec;
}

RejoinResult rejoin_with_pads(const std::vector<Diagram>& summands, int T) {
    if (summands.empty()) throw std::invalid_argument("rejoin needs at least one summand");
    if (T < 1) throw std::invalid_argument("rejoin needs T >= 1");
    RejoinResult res{summands[0], {}, {}, {}};
    int prev_offset = 0;
    for (std::size_t i = 1; i < summands.size(); ++i) {
        const Diagram& d = res.diagram;
        const Diagram& p = summands[i];
        const int prev_end = prev_offset + summands[i - 1].crossing_count();
        auto in_prev = [&](Half h) { return h.crossing >= prev_offset && h.crossing < prev_end; };
        int f = 0;
        for (int lab = 1; lab <= d.edge_count() && f == 0; ++lab)
            if (in_prev(d.tail(lab)) && in_prev(d.head(lab))) f = lab;
        if (f == 0) throw std::logic_error("rejoin: no internal edge in previous summand");
        // pick g so the plain sum stays alternating: equal pass types at the two tails
        const int g = passes_over(p.tail(1)) == passes_over(d.tail(f)) ? 1 : 2;
        const int off = d.crossing_count();
        DiagramBuilder b = oriented_builder(d);
        const DiagramBuilder pb = oriented_builder(p);
        for (int x = 0; x < p.crossing_count(); ++x) {
            b.add_crossing();
            for (int s = 0; s < 4; ++s) {
                b.link[off + x][s] = {pb.link[x][s].crossing + off, pb.link[x][s].slot};
                b.hint[off + x][s] = pb.hint[x][s];
            }
        }
        auto shift = [&](Half h) { return Half{h.crossing + off, h.slot}; };
        const Half alpha_tail = d.tail(f), alpha_head = shift(p.head(g));
        b.connect(alpha_tail, alpha_head);
        b.connect(shift(p.tail(g)), d.head(f));
        const Diagram joined = Diagram::build(b, alpha_tail);

        // pad: a 2T twist in the face left of alpha, between its neighbouring edges
        const int face = joined.face_of(alpha_tail);
        const auto& walk = joined.faces()[face];
        const auto it = std::find(walk.begin(), walk.end(), alpha_tail);
        const auto idx = static_cast<std::size_t>(it - walk.begin());
        const Half pw = walk[(idx + walk.size() - 1) % walk.size()];
        const Half qw = walk[(idx + 1) % walk.size()];
        const int plab = joined.label(pw);
        const Half ptail = joined.tail(plab);
        const bool tail_at_top = joined.is_out(pw);  // walk runs along the orientation
        const bool want_over = !passes_over(ptail);
        const int gen = (want_over == tail_at_top) ? -1 : +1;
        DiagramBuilder jb = oriented_builder(joined);
        const auto pad = insert_box(jb, pw, qw, 2 * T, gen);
        res.diagram = Diagram::build(std::move(jb), alpha_tail);
        if (!res.diagram.is_alternating()) throw std::logic_error("rejoin: padded sum is not alternating");
        // epsilon is the handedness of the pad twist (-gen), not the oriented
        // crossing sign, which also depends on how the two strands run
        res.epsilon.push_back(-gen);
        res.entered_under.push_back(passes_over(alpha_head) ? 0 : 1);
        res.steps.push_back({"pad", "summands " + std::to_string(i) + "-" + std::to_string(i + 1),
                             static_cast<long>(res.diagram.sign(pad.front())) * 2 * T, 0});
        prev_offset = off;
    }
    return res;
}

SpecialKind recognize_special(const Diagram& k) {
    SpecialKind sk;
    const int n = k.crossing_count();
    if (n == 0) {
        sk.kind = SpecialKind::trivial;
        return sk;
    }
    for (auto sh : {Shading::black, Shading::white}) {
        const auto g = checkerboard(k, sh);
        if (g.vertex_count() != 2 || n < 3) continue;
        const bool parallel = std::all_of(g.edges.begin(), g.edges.end(), [](const auto& e) { return e.u != e.v; });
        if (!parallel) continue;
        const int w = k.writhe();
        if (std::abs(w) != n) continue;
        if (w % 2 == 0) throw NotAKnotError("closed 2-braid with an even number of crossings is a link");
        sk.kind = SpecialKind::torus;
        sk.p = w;
        return sk;
    }
    sk.kind = SpecialKind::hyperbolic;
    return sk;
}

PlatDiagram torus_fallback(int p, int T) {
    if (p % 2 == 0) throw std::invalid_argument("torus fallback needs odd p");
    if (T < 2) throw std::invalid_argument("torus fallback needs T >= 2");
    const int s = p > 0 ? 1 : -1;
    PlatDiagram out;
    out.m = 3;
    // 13 rows: odd count keeps the top caps adjacent, as the first row needs
    out.rows.push_back({s * (2 * T + 1), p});
    for (int i = 1; i < 13; ++i) {
        if (i % 2 == 1) out.rows.push_back({-2 * T * s, -2 * T * s, -2 * T * s});
        else out.rows.push_back({2 * T * s, 2 * T * s});
    }
    return out;
}

std::string to_string(AltCase c) {
    switch (c) {
        case AltCase::hyperbolic: return "hyperbolic";
        case AltCase::torus_fallback: return "torus_fallback";
        case AltCase::unknot_fallback: return "unknot_fallback";
    }
    return "unknown";
}

AltReductionReport reduce_alternating(const Diagram& k, int T) {
    if (T < 2) throw std::invalid_argument("reduce_alternating needs T >= 2");
    AltReductionReport rep;
    rep.T = T;
    rep.crossings_before = k.crossing_count();
    const Diagram k1 = make_alternating(k, T, &rep.steps);
    auto nug = remove_nugatory(k1);
    rep.steps.insert(rep.steps.end(), nug.steps.begin(), nug.steps.end());
    const Diagram& k2 = nug.diagram;
    Diagram k3 = k2;
    if (k2.crossing_count() > 0) {
        auto dec = prime_decompose(k2);
        rep.summands = static_cast<int>(dec.summands.size());
        if (dec.summands.size() > 1) {
            auto rj = rejoin_with_pads(dec.summands, T);
            rep.steps.insert(rep.steps.end(), rj.steps.begin(), rj.steps.end());
            k3 = std::move(rj.diagram);
        }
    }
    const auto sk = recognize_special(k3);
    if (sk.kind == SpecialKind::hyperbolic) {
        rep.kase = AltCase::hyperbolic;
        rep.output = k3;
    } else {
        const bool unknot = sk.kind == SpecialKind::trivial;
        const int p = unknot ? 2 * T + 1 : sk.p;
        rep.kase = unknot ? AltCase::unknot_fallback : AltCase::torus_fallback;
        rep.torus_p = p;
        rep.fallback_plat = torus_fallback(p, T);
        rep.output = plat_to_pd(*rep.fallback_plat);
        const long framing = unknot ? 2 : (p > 0 ? 1 : -1);
        rep.steps.push_back({unknot ? "fallback-unknot" : "fallback-torus", "p=" + std::to_string(p),
                             rep.output.writhe() - k3.writhe(), framing});
    }
    for (const auto& s : rep.steps) rep.r += s.framing;
    rep.crossings_after = rep.output.crossing_count();
    return rep;
}

AltReductionReport reduce_alternating(const Diagram& k, const Theory& th) { return reduce_alternating(k, th.T); }

}  // namespace knotpad
