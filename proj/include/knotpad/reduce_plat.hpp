#pragma once

#include <string>
#include <utility>
#include <vector>

#include "knotpad/braid.hpp"
#include "knotpad/diagram.hpp"
#include "knotpad/plat.hpp"
#include "knotpad/theory.hpp"

namespace knotpad {

// Hyperbolic volume of the regular ideal tetrahedron, to the stored precision.
inline constexpr double kV3 = 1.01494;

// Plat on 2k positions whose closure is the trace closure of `w`: strand i < k
// sits at 2i, strand k at 2k-1, and each return strand runs just beside its
// strand, passing under everything. Throws NotAKnotError if the closure is a link.
PlatDiagram braid_to_plat(const BraidWord& w);

// m >= 3, n even and n > 4m(m-2), by regular isotopy only. `log`, when given,
// receives one line per transformation.
PlatDiagram standardize(const PlatDiagram& p, std::vector<std::string>* log = nullptr);

// a' = a + 2T for a >= 0, a - 2T otherwise. Throws std::invalid_argument for T < 2.
PlatDiagram vafa_pad(const PlatDiagram& p, int T);

// ceil(n / (2(m-2))). Throws std::invalid_argument unless m >= 3 and n > 4m(m-2).
int bridge_distance(int m, int n);
// (v3 (t-2), 10 v3 (t-1)) with t = floor((2m-1) n / 2).
std::pair<double, double> volume_bounds(int m, int n);

struct PlatCertificates {
    bool standard = false;
    bool highly_twisted = false;
    bool m_ge_3 = false;
    bool n_gt_bound = false;
    bool n_even = false;
    bool unique_minimal_bridge_sphere = false;  // d > 2m
    bool hyperbolic = false;                    // d > 2
    bool all() const {
        return standard && highly_twisted && m_ge_3 && n_gt_bound && n_even && unique_minimal_bridge_sphere &&
               hyperbolic;
    }
};

struct PlatCertification {
    PlatCertificates certificates;
    int d = 0;  // 0 when the distance formula does not apply
    std::pair<double, double> volume{0.0, 0.0};
};
// Recomputes every certificate from the plat itself.
PlatCertification certify(const PlatDiagram& p);

struct PlatReductionReport {
    PlatDiagram output;
    BraidWord braid;
    int m = 0, n = 0, d = 0;
    int T = 0;
    PlatCertificates certificates;
    std::pair<double, double> volume_bounds{0.0, 0.0};
    bool output_alternating = false;
    int crossings_before = 0;
    long crossings_after = 0;
    std::vector<std::string> audit;
};

PlatReductionReport reduce_plat(const Diagram& k, int T);
PlatReductionReport reduce_plat(const Diagram& k, const Theory& th);
// Input already in plat form: skips to_braid/braid_to_plat (braid stays empty).
PlatReductionReport reduce_plat(const PlatDiagram& p, int T);
PlatReductionReport reduce_plat(const PlatDiagram& p, const Theory& th);

}  // namespace knotpad
