#pragma once

#include "knotpad/cyclotomic.hpp"
#include "knotpad/diagram.hpp"
#include "knotpad/plat.hpp"

namespace knotpad {

struct BracketOptions {
    // Frontier width limit of the PD state-sum sweep (open edge ends at once).
    int max_frontier = 24;
    // Plat number limit of the Temperley-Lieb sweep.
    int max_plat_m = 7;
};

// delta = -A^2 - A^-2 and theta = -A^3 with A = zeta_N.
CyclotomicInt loop_value(int order);
CyclotomicInt theta_power(int order, long r);

// Kauffman bracket, <unknot> = 1. Frontier dynamic programme over the crossings.
CyclotomicInt bracket_pd(const Diagram& k, int order, const BracketOptions& opt = {});
// Same value via a Temperley-Lieb sweep of the plat rows.
CyclotomicInt bracket_plat(const PlatDiagram& p, int order, const BracketOptions& opt = {});

// Framed invariant (the bracket) and the writhe-normalised Jones value (-A^3)^-w <K>.
CyclotomicInt framed_invariant(const Diagram& k, int order, const BracketOptions& opt = {});
CyclotomicInt jones_value(const Diagram& k, int order, const BracketOptions& opt = {});

// Coefficients (alpha, beta) with sigma^a = alpha * 1 + beta * e in TL_2.
std::pair<CyclotomicInt, CyclotomicInt> twist_coefficients(int order, long a);

// Order of the squared braiding on the two-strand space: lcm(ord A^2, ord A^6),
// confirmed by matrix power. Throws std::domain_error when the crossing action
// is not diagonalisable (A^4 = -1), where no finite order exists.
int tl_vafa_exponent(int order);
// The bare lcm(ord A^2, ord A^6), without the matrix-power confirmation.
int tl_vafa_formula(int order);

}  // namespace knotpad
