#include "knotpad/plat.hpp"

#include <cstdlib>
#include <stdexcept>
#include <string>

#include "knotpad/errors.hpp"
#include "knotpad/moves.hpp"

namespace knotpad {

void PlatDiagram::validate() const {
    if (m < 1) throw std::invalid_argument("plat number m must be positive");
    for (int i = 0; i < n(); ++i) {
        const std::size_t want = i % 2 == 0 ? m - 1 : m;
        if (rows[i].size() != want)
            throw std::invalid_argument("row " + std::to_string(i + 1) + " has " + std::to_string(rows[i].size()) +
                                        " entries, expected " + std::to_string(want));
    }
}

bool PlatDiagram::highly_twisted() const {
    for (const auto& r : rows)
        for (int a : r)
            if (std::abs(a) < 3) return false;
    return true;
}

long PlatDiagram::total_crossings() const {
    long t = 0;
    for (const auto& r : rows)
        for (int a : r) t += std::abs(a);
    return t;
}

std::vector<int> PlatDiagram::top_partner() const {
    std::vector<int> partner(2 * m + 1, 0);
    if (n() % 2 == 1) {
        for (int j = 1; j <= m; ++j) {
            partner[2 * j - 1] = 2 * j;
            partner[2 * j] = 2 * j - 1;
        }
    } else {
        partner[1] = 2 * m;
        partner[2 * m] = 1;
        for (int j = 1; j < m; ++j) {
            partner[2 * j] = 2 * j + 1;
            partner[2 * j + 1] = 2 * j;
        }
    }
    return partner;
}

namespace {

Diagram expand(const PlatDiagram& p, bool require_knot) {
    p.validate();
    const int m = p.m;
    const long xn = p.total_crossings();
    // endpoint ids: crossing halves 4x+s, then cup ends, then cap ends
    const long arc_base = 4 * xn;
    auto cup_end = [&](int pos) { return arc_base + (pos - 1); };
    auto cap_end = [&](int pos) { return arc_base + 2 * m + (pos - 1); };
    const long total = arc_base + 4 * m;
    std::vector<long> wire(total, -1);
    auto join = [&](long a, long b) {
        wire[a] = b;
        wire[b] = a;
    };
    std::vector<long> pending(2 * m + 1);
    for (int pos = 1; pos <= 2 * m; ++pos) pending[pos] = cup_end(pos);
    int x = 0;
    for (int i = 0; i < p.n(); ++i)
        for (std::size_t j = 0; j < p.rows[i].size(); ++j) {
            const int a = p.rows[i][j];
            const int gen = a > 0 ? 1 : -1;
            const int left = p.left_position(i, static_cast<int>(j));
            for (int t = 0; t < std::abs(a); ++t, ++x) {
                join(pending[left], 4L * x + box_slot(gen, BL));
                join(pending[left + 1], 4L * x + box_slot(gen, BR));
                pending[left] = 4L * x + box_slot(gen, TL);
                pending[left + 1] = 4L * x + box_slot(gen, TR);
            }
        }
    for (int pos = 1; pos <= 2 * m; ++pos) join(pending[pos], cap_end(pos));
    const auto top = p.top_partner();
    auto arc_mate = [&](long e) {
        const long k = e - arc_base;
        if (k < 2 * m) {
            const int pos = static_cast<int>(k) + 1;
            return cup_end(pos % 2 == 1 ? pos + 1 : pos - 1);
        }
        const int pos = static_cast<int>(k - 2 * m) + 1;
        return cap_end(top[pos]);
    };
    std::vector<bool> seen(total, false);
    // follow from an endpoint through arcs to the next crossing half
    auto resolve = [&](long from) {
        long q = wire[from];
        while (q >= arc_base) {
            seen[q] = true;
            const long mate = arc_mate(q);
            seen[mate] = true;
            q = wire[mate];
        }
        return q;
    };
    DiagramBuilder b;
    for (long c = 0; c < xn; ++c) b.add_crossing();
    for (long h = 0; h < arc_base; ++h) {
        const long q = resolve(h);
        b.link[h / 4][h % 4] = {static_cast<int>(q / 4), static_cast<int>(q % 4)};
    }
    int loops = 0;
    for (long e = arc_base; e < total; ++e) {
        if (seen[e]) continue;
        ++loops;
        long q = e;
        do {
            seen[q] = true;
            const long mate = arc_mate(q);
            seen[mate] = true;
            q = wire[mate];
        } while (q != e);
    }
    b.free_loops = loops;
    std::optional<Half> ref;
    if (xn > 0) {
        // travel up from bottom position 1 until the first crossing is entered
        long q = cup_end(1);
        long hit = wire[q];
        for (long guard = 0; hit >= arc_base && guard < total; ++guard) hit = wire[arc_mate(hit)];
        if (hit >= 0 && hit < arc_base) {
            const long out = resolve(hit);
            ref = Half{static_cast<int>(out / 4), static_cast<int>(out % 4)};
        }
    }
    return Diagram::build(std::move(b), ref, require_knot);
}

}  // namespace

Diagram plat_to_pd(const PlatDiagram& p) {
    try {
        return expand(p, true);
    } catch (const NotAKnotError& e) {
        throw NotAKnotError(std::string("not a knot: ") + e.what());
    }
}

Diagram plat_to_pd_any(const PlatDiagram& p) { return expand(p, false); }

PlatTrace trace_plat(const PlatDiagram& p) {
    p.validate();
    const int m = p.m;
    const int n = p.n();
    // position map of each row going up (odd coefficients exchange the pair)
    std::vector<std::vector<int>> perm(n, std::vector<int>(2 * m + 1));
    for (int i = 0; i < n; ++i) {
        for (int pos = 0; pos <= 2 * m; ++pos) perm[i][pos] = pos;
        for (std::size_t j = 0; j < p.rows[i].size(); ++j)
            if (p.rows[i][j] % 2 != 0) {
                const int l = p.left_position(i, static_cast<int>(j));
                perm[i][l] = l + 1;
                perm[i][l + 1] = l;
            }
    }
    const auto top = p.top_partner();
    PlatTrace tr;
    tr.going_up.assign(2 * m + 1, false);
    std::vector<bool> visited(2 * m + 1, false);
    for (int start = 1; start <= 2 * m; ++start) {
        if (visited[start]) continue;
        ++tr.components;
        int pos = start;
        do {
            visited[pos] = true;
            tr.going_up[pos] = true;
            int q = pos;
            for (int i = 0; i < n; ++i) q = perm[i][q];
            q = top[q];
            for (int i = n - 1; i >= 0; --i) q = perm[i][q];
            visited[q] = true;
            tr.going_up[q] = false;
            pos = q % 2 == 1 ? q + 1 : q - 1;
        } while (pos != start);
    }
    return tr;
}

}  // namespace knotpad
