#include "oracles.hpp"

#include <map>
#include <functional>
#include <numeric>
#include <set>

#include "knotpad/errors.hpp"
#include "knotpad/moves.hpp"

namespace oracle {

PD trefoil_left_pd() { return {{1, 4, 2, 5}, {3, 6, 4, 1}, {5, 2, 6, 3}}; }
PD figure_eight_pd() { return {{4, 2, 5, 1}, {8, 6, 1, 5}, {6, 3, 7, 4}, {2, 7, 3, 8}}; }
PD five_one_pd() { return {{1, 6, 2, 7}, {3, 8, 4, 9}, {5, 10, 6, 1}, {7, 2, 8, 3}, {9, 4, 10, 5}}; }
PD five_two_pd() { return {{1, 4, 2, 5}, {3, 8, 4, 9}, {5, 10, 6, 1}, {9, 6, 10, 7}, {7, 2, 8, 3}}; }
PD six_one_pd() {
    return {{1, 4, 2, 5}, {7, 10, 8, 11}, {3, 9, 4, 8}, {9, 3, 10, 2}, {5, 12, 6, 1}, {11, 6, 12, 7}};
}
PD hopf_pd() { return {{4, 1, 3, 2}, {2, 3, 1, 4}}; }

CyclotomicInt theta_power(int order, int e) {
    // (-1)^e * A^(3e)
    CyclotomicInt r = CyclotomicInt::zeta_power(order, 3LL * e);
    return (e % 2 != 0) ? -r : r;
}

CyclotomicInt brute_bracket(const Diagram& k, int order) {
    const int n = k.crossing_count();
    const CyclotomicInt delta = -(CyclotomicInt::zeta_power(order, 2) + CyclotomicInt::zeta_power(order, -2));
    std::vector<CyclotomicInt> delta_pow{CyclotomicInt::from_int(order, 1)};
    for (int i = 0; i < 4 * n + k.free_loops() + 2; ++i) delta_pow.push_back(delta_pow.back() * delta);
    CyclotomicInt total(order);
    if (n == 0) return delta_pow[k.free_loops() - 1];
    std::vector<int> parent(4 * n);
    for (std::uint64_t state = 0; state < (1ULL << n); ++state) {
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](int v) {
            while (parent[v] != v) v = parent[v] = parent[parent[v]];
            return v;
        };
        auto unite = [&](int a, int b) { parent[find(a)] = find(b); };
        int a_count = 0;
        for (int x = 0; x < n; ++x) {
            const bool b_smoothing = (state >> x) & 1U;
            if (b_smoothing) {
                unite(4 * x + 0, 4 * x + 3);
                unite(4 * x + 1, 4 * x + 2);
            } else {
                ++a_count;
                unite(4 * x + 0, 4 * x + 1);
                unite(4 * x + 2, 4 * x + 3);
            }
            for (int s = 0; s < 4; ++s) {
                const auto t = k.link({x, s});
                unite(4 * x + s, 4 * t.crossing + t.slot);
            }
        }
        int loops = 0;
        for (int v = 0; v < 4 * n; ++v)
            if (find(v) == v) ++loops;
        const int b_count = n - a_count;
        total.add_scaled(delta_pow[loops - 1 + k.free_loops()], a_count - b_count);
    }
    return total;
}

CyclotomicInt laurent_in_t(const std::map<int, int>& poly, int order) {
    CyclotomicInt r(order);
    for (const auto& [e, c] : poly) r += CyclotomicInt::from_int(order, c) * CyclotomicInt::zeta_power(order, -4LL * e);
    return r;
}

namespace {

Perm perm_mul(const Perm& a, const Perm& b) {
    Perm r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = b[a[i]];
    return r;
}

Perm perm_inv(const Perm& a) {
    Perm r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[a[i]] = static_cast<int>(i);
    return r;
}

}  // namespace

std::vector<Perm> perm_class(const std::vector<Perm>& gens, const Perm& rep) {
    std::vector<Perm> group{Perm(rep.size())};
    std::iota(group[0].begin(), group[0].end(), 0);
    std::set<Perm> seen(group.begin(), group.end());
    for (std::size_t i = 0; i < group.size(); ++i)
        for (const auto& g : gens) {
            auto p = perm_mul(group[i], g);
            if (seen.insert(p).second) group.push_back(p);
        }
    std::set<Perm> klass;
    for (const auto& g : group) klass.insert(perm_mul(perm_mul(g, rep), perm_inv(g)));
    return {klass.begin(), klass.end()};
}

std::int64_t brute_colourings(const PD& pd, const std::vector<Perm>& klass) {
    const int n = static_cast<int>(pd.size());
    const int edges = 2 * n;
    // arcs: over-edges at a crossing are the same arc
    std::vector<int> parent(edges + 1);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int v) { return parent[v] == v ? v : parent[v] = find(parent[v]); };
    for (const auto& q : pd) parent[find(q[1])] = find(q[3]);
    std::map<int, int> arc_id;
    for (int e = 1; e <= edges; ++e) arc_id.emplace(find(e), static_cast<int>(arc_id.size()));
    const int arcs = static_cast<int>(arc_id.size());
    const int c = static_cast<int>(klass.size());
    std::vector<int> digit(arcs, 0);
    std::int64_t count = 0;
    for (;;) {
        bool ok = true;
        for (const auto& q : pd) {
            // positive iff the over strand enters at position 3 (label q[1] follows q[3])
            const bool positive = q[1] == q[3] % edges + 1;
            const Perm& in = klass[digit[arc_id[find(q[0])]]];
            const Perm& out = klass[digit[arc_id[find(q[2])]]];
            Perm g = klass[digit[arc_id[find(q[1])]]];
            if (!positive) g = perm_inv(g);
            if (perm_mul(perm_mul(g, in), perm_inv(g)) != out) {
                ok = false;
                break;
            }
        }
        if (ok) ++count;
        int i = 0;
        while (i < arcs && ++digit[i] == c) digit[i++] = 0;
        if (i == arcs) break;
    }
    return count;
}

int pd_face_count(const PD& pd) {
    std::map<int, std::vector<std::pair<int, int>>> where;
    for (int x = 0; x < static_cast<int>(pd.size()); ++x)
        for (int s = 0; s < 4; ++s) where[pd[x][s]].push_back({x, s});
    auto other = [&](int x, int s) {
        const auto& occ = where[pd[x][s]];
        return occ[0] == std::make_pair(x, s) ? occ[1] : occ[0];
    };
    std::vector<std::array<bool, 4>> used(pd.size(), {false, false, false, false});
    int faces = 0;
    for (int x = 0; x < static_cast<int>(pd.size()); ++x)
        for (int s = 0; s < 4; ++s) {
            if (used[x][s]) continue;
            ++faces;
            int cx = x, cs = s;
            while (!used[cx][cs]) {
                used[cx][cs] = true;
                auto [y, t] = other(cx, cs);
                cx = y;
                cs = (t + 3) % 4;
            }
        }
    return faces;
}

std::int64_t permutation_order(const std::vector<int>& succ) {
    std::vector<bool> seen(succ.size(), false);
    std::int64_t order = 1;
    for (std::size_t i = 0; i < succ.size(); ++i) {
        if (seen[i]) continue;
        std::int64_t len = 0;
        for (std::size_t j = i; !seen[j]; j = succ[j]) {
            seen[j] = true;
            ++len;
        }
        order = std::lcm(order, len);
    }
    return order;
}

PlatDiagram random_knot_plat(std::mt19937_64& rng, int max_m, int max_n, int max_a) {
    for (;;) {
        PlatDiagram p;
        p.m = std::uniform_int_distribution<int>(2, max_m)(rng);
        const int n = std::uniform_int_distribution<int>(1, max_n)(rng);
        std::uniform_int_distribution<int> coef(-max_a, max_a);
        for (int i = 0; i < n; ++i) {
            std::vector<int> row(i % 2 == 0 ? p.m - 1 : p.m);
            for (auto& a : row) a = coef(rng);
            p.rows.push_back(row);
        }
        if (knotpad::trace_plat(p).components == 1) return p;
    }
}

Diagram random_braid_closure(std::mt19937_64& rng, int strands, int letters) {
    using knotpad::Half;
    for (int attempt = 1;; ++attempt) {
        // some (strands, letters) pairs can never close to a knot; grow the word
        if (attempt % 200 == 0) ++letters;
        std::vector<std::pair<int, int>> word;
        std::uniform_int_distribution<int> gen(1, strands - 1);
        std::uniform_int_distribution<int> coin(0, 1);
        for (int i = 0; i < letters; ++i) word.push_back({gen(rng), coin(rng) ? 1 : -1});
        knotpad::DiagramBuilder b;
        std::vector<Half> pending(strands + 1), bottom(strands + 1);
        for (auto [g, e] : word) {
            const int x = b.add_crossing();
            for (int side = 0; side < 2; ++side) {
                const int pos = g + side;
                const Half in{x, knotpad::box_slot(e, side == 0 ? knotpad::BL : knotpad::BR)};
                if (pending[pos].valid()) b.connect(pending[pos], in);
                else bottom[pos] = in;
            }
            pending[g] = {x, knotpad::box_slot(e, knotpad::TL)};
            pending[g + 1] = {x, knotpad::box_slot(e, knotpad::TR)};
        }
        bool ok = true;
        for (int pos = 1; pos <= strands; ++pos)
            if (!pending[pos].valid()) ok = false;
        if (!ok) continue;
        for (int pos = 1; pos <= strands; ++pos) b.connect(pending[pos], bottom[pos]);
        try {
            return Diagram::build(b, std::nullopt, true);
        } catch (const knotpad::NotAKnotError&) {
        }
    }
}

}  // namespace oracle
