#include "knotpad/bracket.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "knotpad/errors.hpp"

namespace knotpad {

namespace {

using Key = unsigned __int128;
constexpr int kKeyBits = 5;
constexpr int kMaxWidth = 24;  // 24 * 5 bits fit in 128

struct KeyHash {
    std::size_t operator()(Key k) const noexcept {
        const auto lo = static_cast<std::uint64_t>(k);
        const auto hi = static_cast<std::uint64_t>(k >> 64);
        return std::hash<std::uint64_t>{}(lo * 0x9E3779B97F4A7C15ULL ^ (hi + 0x632BE59BD9B4E019ULL));
    }
};

int key_get(Key k, int i) { return static_cast<int>((k >> (kKeyBits * i)) & 31U); }
void key_set(Key& k, int i, int v) {
    const Key mask = Key{31U} << (kKeyBits * i);
    k = (k & ~mask) | (Key(static_cast<unsigned>(v)) << (kKeyBits * i));
}

std::vector<CyclotomicInt> powers_of(const CyclotomicInt& x, int count) {
    std::vector<CyclotomicInt> p{CyclotomicInt::from_int(x.order(), 1)};
    for (int i = 1; i < count; ++i) p.push_back(p.back() * x);
    return p;
}

// Greedy elimination order: always take the crossing with the most links into
// the processed set, which keeps the open frontier narrow.
std::vector<int> sweep_order(const Diagram& k) {
    const int n = k.crossing_count();
    std::vector<int> score(n, 0), order;
    std::vector<bool> done(n, false);
    std::set<std::pair<int, int>> queue;  // (-score, crossing)
    for (int x = 0; x < n; ++x) queue.insert({0, x});
    while (!queue.empty()) {
        const int x = queue.begin()->second;
        queue.erase(queue.begin());
        done[x] = true;
        order.push_back(x);
        for (int s = 0; s < 4; ++s) {
            const int y = k.link({x, s}).crossing;
            if (done[y]) continue;
            queue.erase({-score[y], y});
            ++score[y];
            queue.insert({-score[y], y});
        }
    }
    return order;
}

}  // namespace

CyclotomicInt loop_value(int order) {
    return -(CyclotomicInt::zeta_power(order, 2) + CyclotomicInt::zeta_power(order, -2));
}

CyclotomicInt theta_power(int order, long r) {
    CyclotomicInt t = CyclotomicInt::zeta_power(order, 3LL * r);
    return (r % 2 != 0) ? -t : t;
}

CyclotomicInt bracket_pd(const Diagram& k, int order, const BracketOptions& opt) {
    const int n = k.crossing_count();
    const int width_cap = std::min(opt.max_frontier, kMaxWidth);
    const CyclotomicInt delta = loop_value(order);
    const auto delta_pow = powers_of(delta, 8 + k.free_loops());
    if (n == 0) return delta.pow(static_cast<std::uint64_t>(k.free_loops() - 1));

    std::vector<std::array<int, 4>> pos(n, {-1, -1, -1, -1});  // frontier index of each open half
    std::vector<bool> processed(n, false);
    std::vector<Half> frontier;
    std::unordered_map<Key, CyclotomicInt, KeyHash> states{{Key{0}, CyclotomicInt::from_int(order, 1)}};
    bool closed_once = false;

    static constexpr int kSmooth[2][4] = {{1, 0, 3, 2}, {3, 2, 1, 0}};  // A: (0,1)(2,3); B: (0,3)(1,2)

    for (const int x : sweep_order(k)) {
        const int w = static_cast<int>(frontier.size());
        // classify the four slots of x
        std::array<int, 4> consumed{-1, -1, -1, -1}, loop_to{-1, -1, -1, -1};
        std::vector<bool> is_consumed(w, false);
        std::vector<int> slot_of_pos(w, -1);
        std::vector<Half> next_frontier;
        for (int s = 0; s < 4; ++s) {
            const Half t = k.link({x, s});
            if (t.crossing == x) {
                loop_to[s] = t.slot;
            } else if (processed[t.crossing]) {
                consumed[s] = pos[t.crossing][t.slot];
                is_consumed[consumed[s]] = true;
                slot_of_pos[consumed[s]] = s;
            }
        }
        std::vector<int> new_index(w + 4, -1);
        for (int p = 0; p < w; ++p)
            if (!is_consumed[p]) {
                new_index[p] = static_cast<int>(next_frontier.size());
                next_frontier.push_back(frontier[p]);
            }
        for (int s = 0; s < 4; ++s)
            if (consumed[s] < 0 && loop_to[s] < 0) {
                new_index[w + s] = static_cast<int>(next_frontier.size());
                next_frontier.push_back({x, s});
            }
        const int nw = static_cast<int>(next_frontier.size());
        if (nw > width_cap)
            throw CapExceeded("bracket frontier width " + std::to_string(nw) + " exceeds cap " +
                              std::to_string(width_cap));
        const bool empties = nw == 0;

        std::unordered_map<Key, CyclotomicInt, KeyHash> next;
        next.reserve(states.size() * 2);
        // node v: 0..w-1 frontier positions, w+s slots; nb[v][0] inner edge, nb[v][1] outer edge
        std::vector<std::array<int, 2>> nb(w + 4);
        std::vector<char> seen(w + 4);
        for (const auto& [key, coef] : states) {
            for (int sm = 0; sm < 2; ++sm) {
                for (int p = 0; p < w; ++p) nb[p] = {key_get(key, p), is_consumed[p] ? w + slot_of_pos[p] : -1};
                for (int s = 0; s < 4; ++s) {
                    const int outer = consumed[s] >= 0 ? consumed[s] : (loop_to[s] >= 0 ? w + loop_to[s] : -1);
                    nb[w + s] = {w + kSmooth[sm][s], outer};
                }
                std::fill(seen.begin(), seen.end(), 0);
                Key out{0};
                for (int v = 0; v < w + 4; ++v) {
                    if (new_index[v] < 0 || seen[v]) continue;
                    int cur = v, via = 0;
                    seen[cur] = 1;
                    for (;;) {
                        const int nx = nb[cur][via];
                        seen[nx] = 1;
                        via = 1 - via;
                        if (nb[nx][via] < 0) {
                            key_set(out, new_index[v], new_index[nx]);
                            key_set(out, new_index[nx], new_index[v]);
                            break;
                        }
                        cur = nx;
                    }
                }
                int cycles = 0;
                for (int v = 0; v < w + 4; ++v) {
                    if (seen[v] || (v < w && !is_consumed[v])) continue;
                    ++cycles;
                    int cur = v, via = 0;
                    do {
                        seen[cur] = 1;
                        cur = nb[cur][via];
                        via = 1 - via;
                    } while (cur != v || via != 0);
                }
                int loops = cycles;
                if (empties && !closed_once) --loops;
                auto& slot = next.try_emplace(out, order).first->second;
                const int a_exp = sm == 0 ? 1 : -1;
                if (loops == 0) slot.add_scaled(coef, a_exp);
                else slot.add_scaled(coef * delta_pow.at(loops), a_exp);
            }
        }
        if (empties) closed_once = true;
        states = std::move(next);
        processed[x] = true;
        frontier = std::move(next_frontier);
        for (int p = 0; p < nw; ++p) pos[frontier[p].crossing][frontier[p].slot] = p;
    }
    CyclotomicInt total = states.at(Key{0});
    for (int i = 0; i < k.free_loops(); ++i) total *= delta;
    return total;
}

std::pair<CyclotomicInt, CyclotomicInt> twist_coefficients(int order, long a) {
    const CyclotomicInt delta = loop_value(order);
    const int s = a >= 0 ? 1 : -1;
    const CyclotomicInt x = CyclotomicInt::zeta_power(order, s), y = CyclotomicInt::zeta_power(order, -s);
    CyclotomicInt alpha = CyclotomicInt::from_int(order, 1), beta(order);
    for (long i = 0; i < std::labs(a); ++i) {
        // (alpha + beta e)(x + y e) with e^2 = delta e
        CyclotomicInt nb = alpha * y + beta * x + beta * y * delta;
        alpha = alpha * x;
        beta = std::move(nb);
    }
    return {alpha, beta};
}

CyclotomicInt bracket_plat(const PlatDiagram& p, int order, const BracketOptions& opt) {
    p.validate();
    if (p.m > opt.max_plat_m || p.m > 8)
        throw CapExceeded("plat number " + std::to_string(p.m) + " exceeds cap " + std::to_string(opt.max_plat_m));
    const int w = 2 * p.m;
    const CyclotomicInt delta = loop_value(order);
    auto get = [](std::uint64_t s, int i) { return static_cast<int>((s >> (4 * i)) & 15U); };
    auto put = [](std::uint64_t& s, int i, int v) {
        s = (s & ~(std::uint64_t{15} << (4 * i))) | (static_cast<std::uint64_t>(v) << (4 * i));
    };
    std::uint64_t start = 0;
    for (int i = 0; i < w; ++i) put(start, i, i ^ 1);
    std::unordered_map<std::uint64_t, CyclotomicInt> states{{start, CyclotomicInt::from_int(order, 1)}};
    std::map<long, std::pair<CyclotomicInt, CyclotomicInt>> cache;

    for (int r = 0; r < p.n(); ++r) {
        for (int j = 0; j < static_cast<int>(p.rows[r].size()); ++j) {
            const long a = p.rows[r][j];
            if (a == 0) continue;
            auto it = cache.find(a);
            if (it == cache.end()) it = cache.emplace(a, twist_coefficients(order, a)).first;
            const auto& [alpha, beta] = it->second;
            const int l = p.left_position(r, j) - 1;
            std::unordered_map<std::uint64_t, CyclotomicInt> next;
            next.reserve(states.size() * 2);
            for (const auto& [s, c] : states) {
                next.try_emplace(s, order).first->second += alpha * c;
                std::uint64_t t = s;
                CyclotomicInt bc = beta * c;
                if (get(s, l) == l + 1) {
                    bc *= delta;
                } else {
                    const int x = get(s, l), y = get(s, l + 1);
                    put(t, x, y);
                    put(t, y, x);
                    put(t, l, l + 1);
                    put(t, l + 1, l);
                }
                next.try_emplace(t, order).first->second += bc;
            }
            std::erase_if(next, [](const auto& kv) { return kv.second.is_zero(); });
            states = std::move(next);
        }
    }
    const auto top = p.top_partner();
    const auto delta_pow = powers_of(delta, w + 1);
    CyclotomicInt total(order);
    for (const auto& [s, c] : states) {
        std::vector<bool> seen(w, false);
        int loops = 0;
        for (int v = 0; v < w; ++v) {
            if (seen[v]) continue;
            ++loops;
            int cur = v;
            do {
                seen[cur] = true;
                const int u = get(s, cur);
                seen[u] = true;
                cur = top[u + 1] - 1;
            } while (cur != v);
        }
        total += c * delta_pow[loops - 1];
    }
    return total;
}

CyclotomicInt framed_invariant(const Diagram& k, int order, const BracketOptions& opt) {
    return bracket_pd(k, order, opt);
}

CyclotomicInt jones_value(const Diagram& k, int order, const BracketOptions& opt) {
    return theta_power(order, -k.writhe()) * bracket_pd(k, order, opt);
}

int tl_vafa_formula(int order) {
    if (order < 1) throw std::invalid_argument("root order must be positive");
    return std::lcm(root_order(order, 2), root_order(order, 6));
}

int tl_vafa_exponent(int order) {
    if (order < 1) throw std::invalid_argument("root order must be positive");
    if (CyclotomicInt::zeta_power(order, 4) == CyclotomicInt::from_int(order, -1))
        throw std::domain_error("crossing action is not diagonalisable at order " + std::to_string(order) +
                                " (A^4 = -1); the squared braiding has infinite order");
    const int e = tl_vafa_formula(order);
    const auto [alpha, beta] = twist_coefficients(order, 2L * e);
    if (alpha != CyclotomicInt::from_int(order, 1) || !beta.is_zero())
        throw std::domain_error("squared braiding does not have order " + std::to_string(e));
    return e;
}

}  // namespace knotpad
