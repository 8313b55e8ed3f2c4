#include "knotpad/homcount.hpp"

#include <cstdlib>
#include <functional>
#include <string>

#include "knotpad/errors.hpp"

namespace knotpad {

namespace {

struct WirtingerCrossing {
    int in = -1, over = -1, out = -1;  // arc ids
    int sign = 1;
};

class ColouringSearch {
public:
    ColouringSearch(const GroupClass& gc, int arcs, std::vector<WirtingerCrossing> xs, std::int64_t budget)
        : gc_(gc), g_(gc.group), xs_(std::move(xs)), val_(arcs, -1), touching_(arcs), budget_(budget) {
        for (int c = 0; c < static_cast<int>(xs_.size()); ++c)
            for (int a : {xs_[c].in, xs_[c].over, xs_[c].out}) touching_[a].push_back(c);
    }

    std::int64_t count_with_first(int value) {
        solutions_ = 0;
        if (assign(0, value)) search();
        return solutions_;
    }

private:
    const GroupClass& gc_;
    const FiniteGroup& g_;
    std::vector<WirtingerCrossing> xs_;
    std::vector<int> val_;
    std::vector<std::vector<int>> touching_;
    std::vector<int> trail_;
    std::int64_t budget_;
    std::int64_t nodes_ = 0;
    std::int64_t solutions_ = 0;

    // out = over^s in over^-s
    int forward(const WirtingerCrossing& x, int over, int in) const {
        return g_.conj(x.sign > 0 ? over : g_.inv(over), in);
    }

    bool set(int arc, int v, std::vector<int>& queue) {
        if (val_[arc] >= 0) return val_[arc] == v;
        val_[arc] = v;
        trail_.push_back(arc);
        queue.push_back(arc);
        return true;
    }

    bool assign(int arc, int v) {
        std::vector<int> queue;
        if (!set(arc, v, queue)) return false;
        while (!queue.empty()) {
            const int a = queue.back();
            queue.pop_back();
            for (int c : touching_[a]) {
                const auto& x = xs_[c];
                const int gv = val_[x.over];
                if (gv < 0) continue;
                if (val_[x.in] >= 0) {
                    if (!set(x.out, forward(x, gv, val_[x.in]), queue)) return false;
                } else if (val_[x.out] >= 0) {
                    const int back = g_.conj(x.sign > 0 ? g_.inv(gv) : gv, val_[x.out]);
                    if (!set(x.in, back, queue)) return false;
                }
            }
        }
        return true;
    }

    void undo(std::size_t mark) {
        while (trail_.size() > mark) {
            val_[trail_.back()] = -1;
            trail_.pop_back();
        }
    }

    int choose() const {
        // prefer an over-arc whose crossing already knows one under-arc: it forces the other
        for (const auto& x : xs_)
            if (val_[x.over] < 0 && (val_[x.in] >= 0 || val_[x.out] >= 0)) return x.over;
        for (int a = 0; a < static_cast<int>(val_.size()); ++a)
            if (val_[a] < 0) return a;
        return -1;
    }

    void search() {
        if (++nodes_ > budget_)
            throw CapExceeded("colouring search exceeded node budget " + std::to_string(budget_));
        const int arc = choose();
        if (arc < 0) {
            ++solutions_;
            return;
        }
        for (int v : gc_.klass) {
            const auto mark = trail_.size();
            if (assign(arc, v)) search();
            undo(mark);
        }
    }
};

}  // namespace

std::int64_t homcount_pd(const Diagram& k, const GroupClass& gc, const HomcountOptions& opt) {
    const auto csize = static_cast<std::int64_t>(gc.klass.size());
    const int n = k.crossing_count();
    if (n == 0) {
        if (k.free_loops() != 1) throw NotAKnotError("diagram is not a knot");
        return csize;
    }
    if (k.component_count() != 1) throw NotAKnotError("diagram is not a knot");
    // arcs run from one under-passage to the next along the traversal
    const int edges = k.edge_count();
    int start = 1;
    while (k.head(start).slot != 0) ++start;
    std::vector<int> arc_of(edges + 1, -1);
    int arcs = 0;
    for (int i = 1; i <= edges; ++i) {
        const int lab = (start - 1 + i) % edges + 1;
        const int prev = (lab + edges - 2) % edges + 1;
        if (k.head(prev).slot == 0) ++arcs;
        arc_of[lab] = arcs - 1;
    }
    std::vector<WirtingerCrossing> xs(n);
    for (int x = 0; x < n; ++x)
        xs[x] = {arc_of[k.label({x, 0})], arc_of[k.label({x, 1})], arc_of[k.label({x, 2})], k.sign(x)};
    ColouringSearch search(gc, arcs, std::move(xs), opt.node_budget);
    // colourings are permuted by conjugation, which acts transitively on C
    return csize * search.count_with_first(gc.klass.front());
}

std::int64_t homcount_plat(const PlatDiagram& p, const GroupClass& gc, const HomcountOptions& opt) {
    p.validate();
    const auto& g = gc.group;
    const int m = p.m;
    const auto tr = trace_plat(p);
    const auto top = p.top_partner();
    const auto csize = static_cast<std::int64_t>(gc.klass.size());
    // the braiding has order dividing 2e on every pair, so entries reduce modulo 2e
    const long period = 2L * dw_vafa_exponent(gc);
    std::int64_t seeds = 1;
    for (int j = 1; j < m; ++j) {
        seeds *= csize;
        if (seeds > opt.node_budget)
            throw CapExceeded("plat colouring enumeration exceeds budget " + std::to_string(opt.node_budget));
    }
    struct Op {
        int l;
        long a;
    };
    std::vector<Op> ops;
    for (int r = 0; r < p.n(); ++r)
        for (int j = 0; j < static_cast<int>(p.rows[r].size()); ++j) {
            long a = p.rows[r][j] % period;
            if (a > period / 2) a -= period;
            if (a < -period / 2) a += period;
            if (a != 0) ops.push_back({p.left_position(r, j), a});
        }

    std::vector<int> choice(m + 1, 0), x(2 * m + 1);
    std::int64_t count = 0;
    for (std::int64_t s = 0; s < seeds; ++s) {
        std::int64_t rest = s;
        for (int j = 2; j <= m; ++j) {
            choice[j] = static_cast<int>(rest % csize);
            rest /= csize;
        }
        for (int j = 1; j <= m; ++j) {
            const int v = gc.klass[choice[j]];
            const int up = tr.going_up[2 * j - 1] ? 2 * j - 1 : 2 * j;
            x[up] = v;
            x[up == 2 * j ? 2 * j - 1 : 2 * j] = g.inv(v);
        }
        for (const auto& op : ops) {
            int& u = x[op.l];
            int& w = x[op.l + 1];
            for (long i = 0; i < std::labs(op.a); ++i) {
                const int a = u, b = w;
                if (op.a > 0) {
                    u = g.conj(a, b);
                    w = a;
                } else {
                    u = b;
                    w = g.conj(g.inv(b), a);
                }
            }
        }
        bool ok = true;
        for (int q = 1; q <= 2 * m && ok; ++q)
            if (q < top[q]) ok = g.mul(x[q], x[top[q]]) == g.identity();
        if (ok) ++count;
    }
    return csize * count;
}

}  // namespace knotpad
