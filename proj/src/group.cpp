#include "knotpad/group.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace knotpad {

FiniteGroup::FiniteGroup(std::vector<std::vector<int>> table) : table_(std::move(table)) {
    const int n = order();
    if (n == 0) throw std::invalid_argument("group table is empty");
    for (const auto& row : table_) {
        if (static_cast<int>(row.size()) != n) throw std::invalid_argument("group table is not square");
        for (int v : row)
            if (v < 0 || v >= n) throw std::invalid_argument("group table entry out of range");
    }
    identity_ = -1;
    for (int e = 0; e < n && identity_ < 0; ++e) {
        bool ok = true;
        for (int a = 0; a < n && ok; ++a) ok = table_[e][a] == a && table_[a][e] == a;
        if (ok) identity_ = e;
    }
    if (identity_ < 0) throw std::invalid_argument("group table has no identity");
    inverse_.assign(n, -1);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (table_[a][b] == identity_ && table_[b][a] == identity_) inverse_[a] = b;
    if (std::count(inverse_.begin(), inverse_.end(), -1) != 0)
        throw std::invalid_argument("group table lacks inverses");
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (table_[table_[a][b]][c] != table_[a][table_[b][c]])
                    throw std::invalid_argument("group table is not associative");
}

std::vector<int> FiniteGroup::conjugacy_class(int x) const {
    std::set<int> s;
    for (int g = 0; g < order(); ++g) s.insert(conj(g, x));
    return {s.begin(), s.end()};
}

int FiniteGroup::element_order(int x) const {
    int k = 1;
    for (int y = x; y != identity_; y = mul(y, x)) ++k;
    return k;
}

GroupClass make_group_class(std::string name, FiniteGroup g, std::vector<int> klass) {
    std::sort(klass.begin(), klass.end());
    if (klass.empty() || klass.front() < 0 || klass.back() >= g.order())
        throw std::invalid_argument("class elements out of range");
    if (g.conjugacy_class(klass.front()) != klass) throw std::invalid_argument("class is not a conjugacy class");
    return {std::move(name), std::move(g), std::move(klass)};
}

namespace {

// Closure of a generating set under an element product, giving a table.
template <class Elem>
std::pair<FiniteGroup, std::vector<Elem>> generate(const std::vector<Elem>& gens,
                                                   const std::function<Elem(const Elem&, const Elem&)>& mul,
                                                   const Elem& identity) {
    std::vector<Elem> elems{identity};
    std::map<Elem, int> index{{identity, 0}};
    for (std::size_t i = 0; i < elems.size(); ++i)
        for (const auto& g : gens) {
            Elem p = mul(elems[i], g);
            if (index.emplace(p, static_cast<int>(elems.size())).second) elems.push_back(p);
        }
    const int n = static_cast<int>(elems.size());
    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) table[a][b] = index.at(mul(elems[a], elems[b]));
    return {FiniteGroup(std::move(table)), std::move(elems)};
}

using Perm = std::vector<int>;  // image of 0..k-1

Perm compose(const Perm& a, const Perm& b) {  // a then b (left-to-right product)
    Perm r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = b[a[i]];
    return r;
}

Perm cycle(int k, std::vector<int> c) {  // 1-based cycle notation
    Perm p(k);
    std::iota(p.begin(), p.end(), 0);
    for (std::size_t i = 0; i < c.size(); ++i) p[c[i] - 1] = c[(i + 1) % c.size()] - 1;
    return p;
}

GroupClass perm_preset(const std::string& name, int k, const std::vector<Perm>& gens, const Perm& rep) {
    Perm id(k);
    std::iota(id.begin(), id.end(), 0);
    auto [g, elems] = generate<Perm>(gens, compose, id);
    const int r = static_cast<int>(std::find(elems.begin(), elems.end(), rep) - elems.begin());
    return make_group_class(name, g, g.conjugacy_class(r));
}

using Mat = std::array<int, 4>;  // [[a,b],[c,d]] over F_7 modulo +-1

Mat normalise(Mat m) {
    Mat neg{};
    for (int i = 0; i < 4; ++i) neg[i] = (7 - m[i]) % 7;
    return std::min(m, neg);
}

Mat mat_mul(const Mat& x, const Mat& y) {
    return normalise({(x[0] * y[0] + x[1] * y[2]) % 7, (x[0] * y[1] + x[1] * y[3]) % 7,
                      (x[2] * y[0] + x[3] * y[2]) % 7, (x[2] * y[1] + x[3] * y[3]) % 7});
}

GroupClass psl27_preset(const std::string& name) {
    const Mat id = normalise({1, 0, 0, 1});
    const Mat t = normalise({1, 1, 0, 1}), s = normalise({0, 6, 1, 0});
    auto [g, elems] = generate<Mat>({t, s}, mat_mul, id);
    const int r = static_cast<int>(std::find(elems.begin(), elems.end(), t) - elems.begin());
    return make_group_class(name, g, g.conjugacy_class(r));
}

}  // namespace

GroupClass group_preset(const std::string& name) {
    const std::vector<Perm> a5_gens{cycle(5, {1, 2, 3}), cycle(5, {1, 2, 3, 4, 5})};
    if (name == "a5/5cycle-a") return perm_preset(name, 5, a5_gens, cycle(5, {1, 2, 3, 4, 5}));
    if (name == "a5/5cycle-b") return perm_preset(name, 5, a5_gens, cycle(5, {1, 3, 5, 2, 4}));
    if (name == "a5/3cycle") return perm_preset(name, 5, a5_gens, cycle(5, {1, 2, 3}));
    if (name == "s3/2cycle") return perm_preset(name, 3, {cycle(3, {1, 2}), cycle(3, {1, 2, 3})}, cycle(3, {1, 2}));
    if (name == "psl27/7a") return psl27_preset(name);
    throw std::invalid_argument("unknown group preset '" + name + "'");
}

std::vector<std::string> group_preset_names() {
    return {"a5/5cycle-a", "a5/5cycle-b", "a5/3cycle", "psl27/7a", "s3/2cycle"};
}

int dw_vafa_exponent(const GroupClass& gc) {
    const auto& g = gc.group;
    std::vector<int> inv_class;
    for (int x : gc.klass) inv_class.push_back(g.inv(x));
    std::sort(inv_class.begin(), inv_class.end());
    const std::array<const std::vector<int>*, 2> classes{&gc.klass, &inv_class};
    // squared braiding: (x, y) -> (xy) . (x, y) . (xy)^-1
    long e = 1;
    for (const auto* left : classes)
        for (const auto* right : classes)
            for (int x : *left)
                for (int y : *right) {
                    const int h = g.mul(x, y);
                    long len = 0;
                    int a = x, b = y;
                    do {
                        a = g.conj(h, a);
                        b = g.conj(h, b);
                        ++len;
                    } while (a != x || b != y);
                    e = std::lcm(e, len);
                }
    return static_cast<int>(e);
}

}  // namespace knotpad
