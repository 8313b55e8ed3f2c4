// Acceptance run: one PASS/FAIL line per criterion 1-8 with the measured detail.
// Every check is exact (zero tolerance) except criterion 7, whose thresholds are
// R^2 >= 0.99 for the linear fits in T and < 10 s per pipeline on 100-crossing
// inputs. The process exits 0 once all lines are printed; failures are reported
// in the lines themselves.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "knotpad/bracket.hpp"
#include "knotpad/braid.hpp"
#include "knotpad/corpus.hpp"
#include "knotpad/errors.hpp"
#include "knotpad/group.hpp"
#include "knotpad/homcount.hpp"
#include "knotpad/moves.hpp"
#include "knotpad/reduce_alt.hpp"
#include "knotpad/reduce_plat.hpp"
#include "knotpad/theory.hpp"
#include "oracles.hpp"

using namespace knotpad;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome {
    bool pass = true;
    std::ostringstream detail;
    std::vector<std::string> failures;
    void fail(const std::string& what) {
        pass = false;
        if (failures.size() < 8) failures.push_back(what);
    }
};

const std::vector<int> kTlOrders{8, 12, 20};
const std::vector<std::string> kDwPresets{"a5/5cycle-a", "a5/5cycle-b"};

// TL theory, falling back to the bare formula where the exponent cannot be
// confirmed (N = 8); the fallback is reported.
Theory tl_theory(int order, bool* confirmed) {
    try {
        *confirmed = true;
        return make_tl_theory(order);
    } catch (const std::domain_error&) {
        *confirmed = false;
        return make_tl_theory(order, true);
    }
}

// Bracket of a plat-pipeline output: TL sweep (cross-checked against the PD
// state sum in criterion 6), PD frontier sweep beyond the sweep's plat limit.
CyclotomicInt output_bracket(const PlatDiagram& p, int order) {
    BracketOptions opt;
    opt.max_plat_m = 10;
    try {
        return bracket_plat(p, order, opt);
    } catch (const CapExceeded&) {
        return bracket_pd(plat_to_pd(p), order);
    }
}

// The pipeline entry matching the corpus object: plats go in as plats.
PlatReductionReport plat_pipeline(const CorpusEntry& e, int T) {
    return e.plat ? reduce_plat(*e.plat, T) : reduce_plat(e.diagram, T);
}

// Independent 2-edge-cut oracle: two edges bounding the same two distinct
// faces whose removal separates the crossings into two non-empty parts.
bool has_two_edge_cut(const Diagram& k) {
    const int n = k.crossing_count();
    const int edges = k.edge_count();
    for (int e1 = 1; e1 <= edges; ++e1)
        for (int e2 = e1 + 1; e2 <= edges; ++e2) {
            auto f1 = k.edge_faces(e1), f2 = k.edge_faces(e2);
            if (f1.first == f1.second) continue;
            if (std::minmax(f1.first, f1.second) != std::minmax(f2.first, f2.second)) continue;
            std::vector<bool> seen(n, false);
            std::vector<int> stack{0};
            seen[0] = true;
            int reached = 1;
            while (!stack.empty()) {
                const int x = stack.back();
                stack.pop_back();
                for (int s = 0; s < 4; ++s) {
                    const int lab = k.label({x, s});
                    if (lab == e1 || lab == e2) continue;
                    const int y = k.link({x, s}).crossing;
                    if (!seen[y]) {
                        seen[y] = true;
                        ++reached;
                        stack.push_back(y);
                    }
                }
            }
            if (reached < n) return true;
        }
    return false;
}

// Smallest k > 0 with (A^2)^k = 1 and (A^-6)^k = 1, by repeated multiplication
// of the two eigenvalues of the squared crossing.
int brute_eigen_order(int order) {
    const auto a2 = CyclotomicInt::zeta_power(order, 2);
    const auto a6 = CyclotomicInt::zeta_power(order, -6);
    const auto one = CyclotomicInt::from_int(order, 1);
    auto x = a2, y = a6;
    for (int k = 1; k <= 4 * order; ++k) {
        if (x == one && y == one) return k;
        x *= a2;
        y *= a6;
    }
    return -1;
}

double r_squared(const std::vector<double>& xs, const std::vector<double>& ys) {
    const double n = static_cast<double>(xs.size());
    const double mx = std::accumulate(xs.begin(), xs.end(), 0.0) / n;
    const double my = std::accumulate(ys.begin(), ys.end(), 0.0) / n;
    double sxy = 0, sxx = 0, syy = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sxy += (xs[i] - mx) * (ys[i] - my);
        sxx += (xs[i] - mx) * (xs[i] - mx);
        syy += (ys[i] - my) * (ys[i] - my);
    }
    if (syy == 0) return 1.0;
    return sxy * sxy / (sxx * syy);
}

// Plat-pipeline outputs kept for the certificate and advisory checks.
std::vector<std::pair<std::string, PlatReductionReport>> g_plat_outputs;
// Alternating-pipeline outputs (N = 20) kept for criterion 5.
std::vector<std::pair<std::string, AltReductionReport>> g_alt_outputs;

void criterion1(Outcome& o) {
    const auto t0 = Clock::now();
    int checks = 0;
    std::vector<int> unconfirmed;
    for (int order : kTlOrders) {
        bool confirmed = true;
        const Theory th = tl_theory(order, &confirmed);
        if (!confirmed) unconfirmed.push_back(order);
        int failed = 0;
        for (const auto& e : corpus()) {
            const auto rep = plat_pipeline(e, th.T);
            ++checks;
            std::string why;
            try {
                if (output_bracket(rep.output, order) != bracket_pd(e.diagram, order)) why = "differs";
            } catch (const std::exception& ex) {
                why = ex.what();
            }
            if (!why.empty()) {
                ++failed;
                o.fail("N=" + std::to_string(order) + " " + e.name + ": " + why);
            }
            if (order == 20) g_plat_outputs.push_back({e.name, rep});
        }
        o.detail << "N=" << order << " (T=" << th.T << (confirmed ? "" : ", unconfirmed exponent")
                 << "): " << corpus().size() - failed << "/" << corpus().size() << " exact; ";
    }
    {
        // plat corpus entries once more through the diagram route (braid, then plat)
        // (supplementary; outputs wider than the default sweep limit are only certified)
        int failed = 0, total = 0, wide = 0;
        const Theory th = make_tl_theory(20);
        for (const auto& e : corpus()) {
            if (!e.plat) continue;
            const auto rep = reduce_plat(e.diagram, th);
            g_plat_outputs.push_back({e.name + "@diagram", rep});
            if (rep.m > BracketOptions{}.max_plat_m) {
                ++wide;
                continue;
            }
            ++total;
            ++checks;
            if (output_bracket(rep.output, 20) != bracket_pd(e.diagram, 20)) {
                ++failed;
                o.fail("N=20 diagram route " + e.name);
            }
        }
        o.detail << "N=20 diagram route for plats: " << total - failed << "/" << total << " exact (" << wide
                 << " with m > " << BracketOptions{}.max_plat_m << " certified only); ";
    }
    for (const auto& preset : kDwPresets) {
        const auto gc = group_preset(preset);
        const Theory th = make_dw_theory(gc);
        int failed = 0;
        for (const auto& e : corpus()) {
            const auto rep = plat_pipeline(e, th.T);
            ++checks;
            if (homcount_plat(rep.output, gc) != homcount_pd(e.diagram, gc)) {
                ++failed;
                o.fail(preset + " " + e.name);
            }
            g_plat_outputs.push_back({e.name + "@" + preset, rep});
        }
        o.detail << preset << " (T=" << th.T << "): " << corpus().size() - failed << "/" << corpus().size()
                 << " exact; ";
    }
    const double secs = seconds_since(t0);
    if (secs >= 300) o.fail("runtime " + std::to_string(secs) + " s >= 300 s");
    o.detail << checks << " checks in " << secs << " s";
}

void criterion2(Outcome& o) {
    std::map<AltCase, int> branches;
    const Theory tl20 = make_tl_theory(20);
    int failed = 0;
    for (const auto& e : corpus()) {
        const auto rep = reduce_alternating(e.diagram, tl20);
        ++branches[rep.kase];
        const auto want = bracket_pd(e.diagram, 20) * theta_power(20, rep.r);
        if (bracket_pd(rep.output, 20) != want) {
            ++failed;
            o.fail("tl:20 " + e.name + " (" + to_string(rep.kase) + ")");
        }
        // the fallback plat is the same knot as the output diagram
        if (rep.fallback_plat && bracket_plat(*rep.fallback_plat, 20) != want) o.fail("fallback plat " + e.name);
        g_alt_outputs.push_back({e.name, rep});
    }
    o.detail << "tl:20 " << corpus().size() - failed << "/" << corpus().size() << " exact; branches";
    for (AltCase c : {AltCase::hyperbolic, AltCase::torus_fallback, AltCase::unknot_fallback}) {
        o.detail << " " << to_string(c) << "=" << branches[c];
        if (branches[c] == 0) o.fail("branch " + to_string(c) + " never exercised");
    }
    for (const auto& preset : kDwPresets) {
        const auto gc = group_preset(preset);
        const Theory th = make_dw_theory(gc);
        int bad = 0;
        for (const auto& e : corpus()) {
            const auto rep = reduce_alternating(e.diagram, th);
            const auto got = rep.fallback_plat ? homcount_plat(*rep.fallback_plat, gc) : homcount_pd(rep.output, gc);
            if (got != homcount_pd(e.diagram, gc)) {
                ++bad;
                o.fail(preset + " " + e.name);
            }
        }
        o.detail << "; " << preset << " " << corpus().size() - bad << "/" << corpus().size() << " exact";
    }
}

void criterion3(Outcome& o) {
    std::mt19937_64 rng(7);
    std::vector<const CorpusEntry*> hosts;
    for (const auto& e : corpus())
        if (e.diagram.crossing_count() > 0 && e.diagram.crossing_count() <= 8) hosts.push_back(&e);
    for (int order : {8, 12, 20, 28}) {
        int e_val = 0;
        bool confirmed = true;
        try {
            e_val = tl_vafa_exponent(order);
        } catch (const std::domain_error&) {
            confirmed = false;
            e_val = tl_vafa_formula(order);
        }
        int same = 0;
        for (int trial = 0; trial < 100; ++trial) {
            const Diagram& k = hosts[rng() % hosts.size()]->diagram;
            std::vector<int> faces;
            for (int f = 0; f < k.face_count(); ++f)
                if (k.faces()[f].size() >= 2) faces.push_back(f);
            const int f = faces[rng() % faces.size()];
            const int len = static_cast<int>(k.faces()[f].size());
            const int i1 = static_cast<int>(rng() % len);
            const int i2 = (i1 + 1 + static_cast<int>(rng() % (len - 1))) % len;
            const int gen = rng() % 2 ? 1 : -1;
            const auto padded = insert_twist(k, f, i1, i2, 2 * e_val, gen);
            if (bracket_pd(padded, order) == bracket_pd(k, order))
                ++same;
            else
                o.fail("N=" + std::to_string(order) + " trial " + std::to_string(trial));
        }
        o.detail << "N=" << order << " e=" << e_val << (confirmed ? "" : " (formula, unconfirmed)") << ": " << same
                 << "/100; ";
    }
    const int e20 = tl_vafa_exponent(20), brute20 = brute_eigen_order(20);
    o.detail << "e(20)=" << e20 << " brute eigenvalue order=" << brute20 << "; ";
    if (e20 != 10 || brute20 != 10) o.fail("tl_vafa_exponent(20) cross-check");
    for (int order : {12, 28})
        if (tl_vafa_exponent(order) != brute_eigen_order(order)) o.fail("exponent oracle N=" + std::to_string(order));

    const auto gc = group_preset("a5/5cycle-a");
    const int e_dw = dw_vafa_exponent(gc);
    int same = 0;
    for (int trial = 0; trial < 100; ++trial) {
        const auto p = seeded_random_plat(1000 + trial, 4, 8, 2, 40);
        auto padded = p;
        auto& row = padded.rows[rng() % padded.rows.size()];
        const int j = static_cast<int>(rng() % row.size());
        row[j] += (rng() % 2 ? 2 : -2) * e_dw;
        if (homcount_pd(plat_to_pd(padded), gc) == homcount_pd(plat_to_pd(p), gc))
            ++same;
        else
            o.fail("dw trial " + std::to_string(trial));
    }
    o.detail << "dw a5/5cycle-a e=" << e_dw << ": " << same << "/100";
}

void criterion4(Outcome& o) {
    int checked = 0;
    for (const auto& [name, rep] : g_plat_outputs) {
        const auto& p = rep.output;
        const auto c = certify(p);
        bool twisted = true;
        for (const auto& row : p.rows)
            for (int a : row) twisted = twisted && std::abs(a) >= 3;
        int d = 1;
        while (2 * (p.m - 2) * d < p.n()) ++d;
        const bool ok = c.certificates.all() && twisted && p.m >= 3 && p.n() % 2 == 0 && p.n() > 4 * p.m * (p.m - 2) &&
                        c.d == d && rep.d == d && d > 2 * p.m;
        ++checked;
        if (!ok) o.fail(name);
    }
    if (checked == 0) o.fail("no pipeline outputs to check");
    const int d313 = bridge_distance(3, 13), d314 = bridge_distance(3, 14), d433 = bridge_distance(4, 33);
    if (d313 != 7 || d314 != 7 || d433 != 9) o.fail("spot values");
    o.detail << checked << " outputs certified; d(3,13)=" << d313 << " d(3,14)=" << d314 << " d(4,33)=" << d433;
}

void criterion5(Outcome& o) {
    int checked = 0;
    for (const auto& [name, rep] : g_alt_outputs) {
        const auto& k = rep.output;
        ++checked;
        if (!k.is_alternating()) o.fail(name + " not alternating");
        if (!k.nugatory_crossings().empty()) o.fail(name + " has nugatory crossings");
        if (has_two_edge_cut(k)) o.fail(name + " has a 2-edge cut");
    }
    const int T = make_tl_theory(20).T;
    for (const char* name : {"granny", "square"}) {
        const auto& k = corpus_entry(name).diagram;
        const auto dec = prime_decompose(k);
        const auto rep = reduce_alternating(k, T);
        if (dec.summands.size() != 2 || rep.summands != 2) o.fail(std::string(name) + " summand count");
        const auto rj = rejoin_with_pads(dec.summands, T);
        for (std::size_t i = 0; i < rj.epsilon.size(); ++i)
            if (rj.epsilon[i] != (rj.entered_under[i] ? -1 : 1)) o.fail(std::string(name) + " epsilon rule");
        if (!rj.diagram.is_alternating() || has_two_edge_cut(rj.diagram)) o.fail(std::string(name) + " rejoin");
        o.detail << name << ": " << dec.summands.size() << " summands, eps=" << rj.epsilon.front()
                 << " entered_under=" << rj.entered_under.front() << "; ";
    }
    o.detail << checked << " outputs alternating, nugatory-free and prime";
}

void criterion6(Outcome& o) {
    const auto gc = group_preset("a5/5cycle-a");
    int bracket_ok = 0, hom_ok = 0;
    for (int i = 0; i < 200; ++i) {
        const auto p = seeded_random_plat(50000 + i, 4, 20, 2, 1000);
        const auto k = plat_to_pd(p);
        if (bracket_pd(k, 20) == bracket_plat(p, 20))
            ++bracket_ok;
        else
            o.fail("bracket plat " + std::to_string(i));
        if (homcount_pd(k, gc) == homcount_plat(p, gc))
            ++hom_ok;
        else
            o.fail("homcount plat " + std::to_string(i));
    }
    o.detail << "bracket " << bracket_ok << "/200, homcount " << hom_ok << "/200";
}

Diagram random_knot(std::mt19937_64& rng, int strands, int letters) {
    for (;;) {
        BraidWord w{strands, {}};
        for (int i = 0; i < letters; ++i) {
            const int g = 1 + static_cast<int>(rng() % (strands - 1));
            w.letters.push_back(rng() % 2 ? g : -g);
        }
        try {
            return braid_closure(w);
        } catch (const NotAKnotError&) {
        }
    }
}

void criterion7(Outcome& o) {
    const std::vector<int> Ts{2, 10, 30, 60};
    std::vector<double> xs, size_plat, size_alt, time_plat, time_alt;
    for (int T : Ts) {
        double best_plat = 1e30, best_alt = 1e30;
        double crossings_plat = 0, crossings_alt = 0;
        for (int rep = 0; rep < 5; ++rep) {
            crossings_plat = crossings_alt = 0;
            auto t0 = Clock::now();
            for (const auto& e : corpus()) crossings_plat += static_cast<double>(plat_pipeline(e, T).crossings_after);
            best_plat = std::min(best_plat, seconds_since(t0));
            t0 = Clock::now();
            for (const auto& e : corpus())
                crossings_alt += static_cast<double>(reduce_alternating(e.diagram, T).output.crossing_count());
            best_alt = std::min(best_alt, seconds_since(t0));
        }
        xs.push_back(T);
        size_plat.push_back(crossings_plat);
        size_alt.push_back(crossings_alt);
        time_plat.push_back(best_plat);
        time_alt.push_back(best_alt);
    }
    const double r_sp = r_squared(xs, size_plat), r_sa = r_squared(xs, size_alt);
    const double r_tp = r_squared(xs, time_plat), r_ta = r_squared(xs, time_alt);
    char buf[256];
    std::snprintf(buf, sizeof buf, "R^2 size plat=%.4f alt=%.4f, time plat=%.4f alt=%.4f; ", r_sp, r_sa, r_tp, r_ta);
    o.detail << buf;
    if (r_sp < 0.99) o.fail("plat size fit");
    if (r_sa < 0.99) o.fail("alt size fit");
    if (r_tp < 0.99) o.fail("plat time fit");
    if (r_ta < 0.99) o.fail("alt time fit");

    std::mt19937_64 rng(100);
    const int T = make_tl_theory(20).T;
    double worst_plat = 0, worst_alt = 0;
    for (int i = 0; i < 5; ++i) {
        const auto k = random_knot(rng, 5, 100);
        auto t0 = Clock::now();
        reduce_plat(k, T);
        worst_plat = std::max(worst_plat, seconds_since(t0));
        t0 = Clock::now();
        reduce_alternating(k, T);
        worst_alt = std::max(worst_alt, seconds_since(t0));
    }
    std::snprintf(buf, sizeof buf, "100-crossing inputs: worst plat %.3f s, alt %.3f s", worst_plat, worst_alt);
    o.detail << buf;
    if (worst_plat >= 10 || worst_alt >= 10) o.fail("100-crossing runtime");
}

void criterion8(Outcome& o) {
    // Advisory only: the certified hypotheses and v3 volume bounds are reported,
    // not hyperbolic structures or volumes.
    int hyperbolic = 0, unique_sphere = 0;
    double lo = 1e300, hi = 0;
    for (const auto& [name, rep] : g_plat_outputs) {
        hyperbolic += rep.certificates.hyperbolic;
        unique_sphere += rep.certificates.unique_minimal_bridge_sphere;
        lo = std::min(lo, rep.volume_bounds.first);
        hi = std::max(hi, rep.volume_bounds.second);
        if (!(rep.volume_bounds.first > 0 && rep.volume_bounds.first <= rep.volume_bounds.second))
            o.fail(name + " volume bounds");
    }
    if (g_plat_outputs.empty()) o.fail("no pipeline outputs to report on");
    char buf[160];
    std::snprintf(buf, sizeof buf, "advisory: %d/%zu certified hyperbolic, %d with unique minimal bridge sphere, "
                  "v3 bounds span [%.2f, %.2f]", hyperbolic, g_plat_outputs.size(), unique_sphere, lo, hi);
    o.detail << buf;
}

}  // namespace

int main() {
    const std::vector<std::pair<int, std::function<void(Outcome&)>>> criteria{
        {1, criterion1}, {2, criterion2}, {3, criterion3}, {4, criterion4},
        {5, criterion5}, {6, criterion6}, {7, criterion7}, {8, criterion8}};
    int passed = 0;
    for (const auto& [id, run] : criteria) {
        Outcome o;
        const auto t0 = Clock::now();
        try {
            run(o);
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        std::cout << "criterion " << id << ": " << (o.pass ? "PASS" : "FAIL") << " - " << o.detail.str();
        if (!o.failures.empty()) {
            std::cout << " | failing:";
            for (const auto& f : o.failures) std::cout << " [" << f << "]";
        }
        std::printf(" (%.1f s)\n", seconds_since(t0));
        std::cout.flush();
        passed += o.pass;
    }
    std::cout << passed << "/" << criteria.size() << " criteria pass\n";
    return 0;
}
