#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "knotpad/bracket.hpp"
#include "knotpad/diagram.hpp"
#include "knotpad/group.hpp"
#include "knotpad/homcount.hpp"
#include "knotpad/plat.hpp"

namespace knotpad {

// A chosen invariant: the Temperley-Lieb bracket at A = zeta_N ("tl:N") or the
// untwisted Dijkgraaf-Witten count for a group and class ("dw:group/class").
struct Theory {
    enum class Kind { tl, dw };
    Kind kind = Kind::tl;
    std::string selector;
    int order = 0;                    // tl only
    std::optional<GroupClass> group;  // dw only
    int exponent = 1;                 // e(V,V)
    int T = 2;                        // twist constant used for padding
};

// Smallest multiple of e that is at least 2.
int twist_constant(int exponent);

// Parse "tl:<N>" or "dw:<preset>". Throws std::invalid_argument on bad syntax,
// std::domain_error if the TL exponent cannot be confirmed (unless
// allow_unconfirmed, which falls back to the bare formula).
Theory parse_theory(const std::string& selector, bool allow_unconfirmed = false);
Theory make_tl_theory(int order, bool allow_unconfirmed = false);
Theory make_dw_theory(GroupClass gc);

struct EvalOptions {
    BracketOptions bracket;
    HomcountOptions homcount;
};

// Value of the theory on a diagram: the framed bracket for TL, #H for DW.
struct InvariantValue {
    Theory::Kind kind = Theory::Kind::tl;
    CyclotomicInt bracket;
    std::int64_t count = 0;
    bool operator==(const InvariantValue& o) const;
    std::string to_string() const;
};

InvariantValue evaluate(const Theory& th, const Diagram& k, const EvalOptions& opt = {});
// Plat evaluation prefers the sweep algorithms and falls back to the PD ones
// when the plat is beyond their caps.
InvariantValue evaluate(const Theory& th, const PlatDiagram& p, const EvalOptions& opt = {});

// theta^r * v (theta = -A^3 for TL, 1 for DW).
InvariantValue twist_by(const Theory& th, const InvariantValue& v, long r);

}  // namespace knotpad
