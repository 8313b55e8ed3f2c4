#include "knotpad/theory.hpp"

#include <stdexcept>

#include "knotpad/errors.hpp"

namespace knotpad {

int twist_constant(int exponent) {
    if (exponent < 1) throw std::invalid_argument("exponent must be positive");
    int t = exponent;
    while (t < 2) t += exponent;
    return t;
}

Theory make_tl_theory(int order, bool allow_unconfirmed) {
    if (order < 3) throw std::invalid_argument("tl theory needs a root order N >= 3");
    Theory th;
    th.kind = Theory::Kind::tl;
    th.selector = "tl:" + std::to_string(order);
    th.order = order;
    try {
        th.exponent = tl_vafa_exponent(order);
    } catch (const std::domain_error&) {
        if (!allow_unconfirmed) throw;
        th.exponent = tl_vafa_formula(order);
    }
    th.T = twist_constant(th.exponent);
    return th;
}

Theory make_dw_theory(GroupClass gc) {
    Theory th;
    th.kind = Theory::Kind::dw;
    th.selector = "dw:" + gc.name;
    th.exponent = dw_vafa_exponent(gc);
    th.T = twist_constant(th.exponent);
    th.group = std::move(gc);
    return th;
}

Theory parse_theory(const std::string& selector, bool allow_unconfirmed) {
    if (selector.rfind("tl:", 0) == 0) {
        std::size_t used = 0;
        int n = 0;
        try {
            n = std::stoi(selector.substr(3), &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != selector.size() - 3)
            throw std::invalid_argument("bad root order in theory '" + selector + "'");
        return make_tl_theory(n, allow_unconfirmed);
    }
    if (selector.rfind("dw:", 0) == 0) return make_dw_theory(group_preset(selector.substr(3)));
    throw std::invalid_argument("theory must be tl:<N> or dw:<group>/<class>, got '" + selector + "'");
}

bool InvariantValue::operator==(const InvariantValue& o) const {
    if (kind != o.kind) return false;
    return kind == Theory::Kind::tl ? bracket == o.bracket : count == o.count;
}

std::string InvariantValue::to_string() const {
    return kind == Theory::Kind::tl ? bracket.to_string() : std::to_string(count);
}

InvariantValue evaluate(const Theory& th, const Diagram& k, const EvalOptions& opt) {
    InvariantValue v;
    v.kind = th.kind;
    if (th.kind == Theory::Kind::tl) v.bracket = framed_invariant(k, th.order, opt.bracket);
    else v.count = homcount_pd(k, *th.group, opt.homcount);
    return v;
}

InvariantValue evaluate(const Theory& th, const PlatDiagram& p, const EvalOptions& opt) {
    InvariantValue v;
    v.kind = th.kind;
    try {
        if (th.kind == Theory::Kind::tl) v.bracket = bracket_plat(p, th.order, opt.bracket);
        else v.count = homcount_plat(p, *th.group, opt.homcount);
        return v;
    } catch (const CapExceeded&) {
        return evaluate(th, plat_to_pd(p), opt);
    }
}

InvariantValue twist_by(const Theory& th, const InvariantValue& v, long r) {
    InvariantValue out = v;
    if (th.kind == Theory::Kind::tl) out.bracket = theta_power(th.order, r) * v.bracket;
    return out;
}

}  // namespace knotpad
