#include "knotpad/corpus.hpp"

#include <random>
#include <stdexcept>

#include "knotpad/moves.hpp"

namespace knotpad {

namespace {

using Quads = std::vector<std::array<int, 4>>;

const Quads kTrefoil{{1, 4, 2, 5}, {3, 6, 4, 1}, {5, 2, 6, 3}};
const Quads kFigureEight{{4, 2, 5, 1}, {8, 6, 1, 5}, {6, 3, 7, 4}, {2, 7, 3, 8}};
const Quads kFiveTwo{{1, 4, 2, 5}, {3, 8, 4, 9}, {5, 10, 6, 1}, {9, 6, 10, 7}, {7, 2, 8, 3}};
const Quads kSixOne{{1, 4, 2, 5}, {7, 10, 8, 11}, {3, 9, 4, 8}, {9, 3, 10, 2}, {5, 12, 6, 1}, {11, 6, 12, 7}};

Diagram kinks(const std::vector<int>& signs) {
    Diagram d;
    for (int s : signs) d = add_kink(d, 1, s);
    return d;
}

std::vector<CorpusEntry> build() {
    std::vector<CorpusEntry> c;
    auto add = [&](std::string name, Diagram d) { c.push_back({std::move(name), std::move(d), std::nullopt}); };
    const Diagram t3 = Diagram::from_pd(kTrefoil);
    const Diagram f8 = Diagram::from_pd(kFigureEight);
    const Diagram k52 = Diagram::from_pd(kFiveTwo);
    const Diagram k61 = Diagram::from_pd(kSixOne);
    add("unknot", Diagram());
    add("unknot_kink_pos", kinks({+1}));
    add("unknot_kink_neg", kinks({-1}));
    add("unknot3kinks", kinks({+1, +1, -1}));
    add("3_1_left", t3);
    add("3_1_right", mirror(t3));
    add("4_1", f8);
    add("5_2", k52);
    add("6_1", k61);
    add("granny", connected_sum(t3, t3));
    add("square", connected_sum(t3, mirror(t3)));
    add("3_1_switched", switch_crossing(t3, 1));
    add("4_1_switched", switch_crossing(f8, 0));
    add("5_2_switched", switch_crossing(k52, 2));
    add("6_1_switched", switch_crossing(k61, 2));
    add("granny_switched", switch_crossing(connected_sum(t3, t3), 0));
    for (int i = 0; i < kCorpusRandomPlats; ++i) {
        auto p = seeded_random_plat(kCorpusSeed + static_cast<unsigned>(i), 3, 5, 2, 12);
        CorpusEntry e{"plat_" + std::to_string(i), plat_to_pd(p), p};
        c.push_back(std::move(e));
    }
    return c;
}

}  // namespace

PlatDiagram seeded_random_plat(unsigned long long seed, int max_m, int max_n, int max_a, long max_crossings) {
    std::mt19937_64 rng(seed);
    auto uniform = [&](int lo, int hi) {
        // modulo reduction keeps the draw identical across standard libraries
        return lo + static_cast<int>(rng() % static_cast<unsigned long long>(hi - lo + 1));
    };
    for (;;) {
        PlatDiagram p;
        p.m = uniform(2, max_m);
        const int n = uniform(1, max_n);
        for (int i = 0; i < n; ++i) {
            std::vector<int> row(i % 2 == 0 ? p.m - 1 : p.m);
            for (auto& a : row) a = uniform(-max_a, max_a);
            p.rows.push_back(std::move(row));
        }
        if (p.total_crossings() == 0 || p.total_crossings() > max_crossings) continue;
        if (trace_plat(p).components == 1) return p;
    }
}

const std::vector<CorpusEntry>& corpus() {
    static const std::vector<CorpusEntry> entries = build();
    return entries;
}

const CorpusEntry& corpus_entry(const std::string& name) {
    for (const auto& e : corpus())
        if (e.name == name) return e;
    throw std::out_of_range("no corpus entry named \"" + name + "\"");
}

}  // namespace knotpad
