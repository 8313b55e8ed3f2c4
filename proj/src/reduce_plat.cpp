#include "knotpad/reduce_plat.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "knotpad/errors.hpp"

namespace knotpad {

namespace {

// Row builder that places single twist regions bottom to top, inserting zero
// rows where the required row type does not come next.
class RowWriter {
public:
    explicit RowWriter(int m) : m_(m) {}
    // type 0: rows on pairs (2j, 2j+1), m-1 regions; type 1: pairs (2j-1, 2j), m regions
    void put(int type, int region, int coeff) {
        if (static_cast<int>(rows_.size()) % 2 != type) push_zero();
        push_zero();
        rows_.back()[region] = coeff;
    }
    void push_zero() {
        const int type = static_cast<int>(rows_.size()) % 2;
        rows_.emplace_back(type == 0 ? m_ - 1 : m_, 0);
    }
    std::vector<std::vector<int>> take() { return std::move(rows_); }

private:
    int m_;
    std::vector<std::vector<int>> rows_;
};

void note(std::vector<std::string>* log, const std::string& line) {
    if (log) log->push_back(line);
}

// Kink signs of the stabilising pair; the two kinks have opposite writhe.
constexpr int kStabiliseBottom = 1;
constexpr int kStabiliseTop = -1;

}  // namespace

PlatDiagram braid_to_plat(const BraidWord& w) {
    const int k = w.strands;
    if (k < 1) throw std::invalid_argument("braid needs at least one strand");
    RowWriter rows(k);
    for (int l : w.letters) {
        const int g = std::abs(l), e = l > 0 ? 1 : -1;
        if (g < 1 || g >= k) throw std::invalid_argument("braid letter out of range");
        if (g == k - 1) {
            // strands k-1 and k are adjacent, at 2k-2 and 2k-1
            rows.put(0, k - 2, e);
        } else {
            // move the return strand at 2g+1 out of the way (always passing under)
            rows.put(1, g, -1);
            rows.put(0, g - 1, e);
            rows.put(1, g, +1);
        }
    }
    PlatDiagram p;
    p.m = k;
    p.rows = rows.take();
    // odd row count: the top caps join 2j-1 and 2j like the bottom cups
    if (p.rows.size() % 2 == 0) p.rows.emplace_back(k - 1, 0);
    p.validate();
    plat_to_pd(p);  // throws NotAKnotError for links
    return p;
}

PlatDiagram standardize(const PlatDiagram& input, std::vector<std::string>* log) {
    PlatDiagram p = input;
    p.validate();
    if (p.n() % 2 == 1) {
        const int m = p.m;
        if (m == 1) {
            p.rows.emplace_back(1, 0);
            note(log, "parity: zero row (single plat, caps unchanged)");
        } else {
            // adjacent caps = shifted caps over a strand running from 2m-1 to 1 above
            // everything else (an R2/R3 slide of the outer cap), appended here
            p.rows.back()[m - 2] -= 1;
            for (int i = 2 * m - 3; i >= 1; --i) {
                if (i % 2 == 1) {
                    p.rows.emplace_back(m, 0);
                    p.rows.back()[(i - 1) / 2] = -1;
                } else {
                    p.rows.emplace_back(m - 1, 0);
                    p.rows.back()[i / 2 - 1] = -1;
                }
            }
            note(log, "parity: " + std::to_string(2 * m - 3) + " rows of R2-slid crossings to reach an even row count");
        }
    }
    if (p.n() == 0) {
        p.rows.emplace_back(p.m - 1, 0);
        p.rows.emplace_back(p.m, 0);
    }
    while (p.m < 3) {
        const int m = p.m;
        const int old_n = p.n();
        for (auto& row : p.rows) row.push_back(0);
        p.m = m + 1;
        p.rows.emplace_back(m, 0);
        p.rows.emplace_back(m + 1, 0);
        p.rows[1][m] = kStabiliseBottom;
        p.rows[old_n][m - 1] = kStabiliseTop;
        note(log, "stabilise: plat " + std::to_string(m + 1) + " added with a cancelling pair of kinks");
    }
    const int bound = 4 * p.m * (p.m - 2);
    int added = 0;
    while (p.n() <= bound) {
        p.rows.emplace_back(p.m - 1, 0);
        p.rows.emplace_back(p.m, 0);
        added += 2;
    }
    if (added) note(log, "pad: " + std::to_string(added) + " zero rows (n > " + std::to_string(bound) + ")");
    p.validate();
    return p;
}

PlatDiagram vafa_pad(const PlatDiagram& p, int T) {
    if (T < 2) throw std::invalid_argument("vafa_pad needs T >= 2");
    PlatDiagram out = p;
    for (auto& row : out.rows)
        for (int& a : row) a = a >= 0 ? a + 2 * T : a - 2 * T;
    return out;
}

int bridge_distance(int m, int n) {
    if (m < 3 || n <= 4 * m * (m - 2))
        throw std::invalid_argument("bridge distance formula needs m >= 3 and n > 4m(m-2)");
    const int denom = 2 * (m - 2);
    return (n + denom - 1) / denom;
}

std::pair<double, double> volume_bounds(int m, int n) {
    const long t = (static_cast<long>(2 * m - 1) * n) / 2;
    return {kV3 * static_cast<double>(t - 2), 10.0 * kV3 * static_cast<double>(t - 1)};
}

PlatCertification certify(const PlatDiagram& p) {
    PlatCertification c;
    auto& cert = c.certificates;
    try {
        p.validate();
        cert.standard = true;
    } catch (const std::invalid_argument&) {
        return c;
    }
    cert.highly_twisted = p.highly_twisted();
    cert.m_ge_3 = p.m >= 3;
    cert.n_gt_bound = p.n() > 4 * p.m * (p.m - 2);
    cert.n_even = p.n() % 2 == 0;
    if (cert.m_ge_3 && cert.n_gt_bound && cert.highly_twisted) {
        c.d = bridge_distance(p.m, p.n());
        cert.unique_minimal_bridge_sphere = c.d > 2 * p.m;
        cert.hyperbolic = c.d > 2;
    }
    c.volume = volume_bounds(p.m, p.n());
    return c;
}

namespace {

void finish_plat_reduction(PlatReductionReport& rep, const PlatDiagram& p0, int T) {
    const auto p1 = standardize(p0, &rep.audit);
    rep.output = vafa_pad(p1, T);
    rep.audit.push_back("vafa_pad: T=" + std::to_string(T));
    const auto c = certify(rep.output);
    rep.m = rep.output.m;
    rep.n = rep.output.n();
    rep.d = c.d;
    rep.certificates = c.certificates;
    rep.volume_bounds = c.volume;
    rep.crossings_after = rep.output.total_crossings();
    rep.output_alternating = plat_to_pd(rep.output).is_alternating();
}

}  // namespace

PlatReductionReport reduce_plat(const Diagram& k, int T) {
    PlatReductionReport rep;
    rep.T = T;
    rep.crossings_before = k.crossing_count();
    rep.braid = to_braid(k);
    rep.audit.push_back("to_braid: " + std::to_string(rep.braid.strands) + " strands, " +
                        std::to_string(rep.braid.letters.size()) + " letters");
    const auto p0 = braid_to_plat(rep.braid);
    rep.audit.push_back("braid_to_plat: m=" + std::to_string(p0.m) + " n=" + std::to_string(p0.n()));
    finish_plat_reduction(rep, p0, T);
    return rep;
}

PlatReductionReport reduce_plat(const PlatDiagram& p, int T) {
    PlatReductionReport rep;
    rep.T = T;
    rep.braid.strands = 0;
    rep.crossings_before = plat_to_pd(p).crossing_count();  // also rejects links
    rep.audit.push_back("input plat: m=" + std::to_string(p.m) + " n=" + std::to_string(p.n()));
    finish_plat_reduction(rep, p, T);
    return rep;
}

PlatReductionReport reduce_plat(const PlatDiagram& p, const Theory& th) { return reduce_plat(p, th.T); }

PlatReductionReport reduce_plat(const Diagram& k, const Theory& th) { return reduce_plat(k, th.T); }

}  // namespace knotpad
