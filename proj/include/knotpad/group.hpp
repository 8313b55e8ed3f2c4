#pragma once

#include <string>
#include <vector>

namespace knotpad {

// Finite group given by its multiplication table on elements 0..order-1.
class FiniteGroup {
public:
    FiniteGroup() = default;
    // Validates closure, identity, inverses and associativity; throws
    // std::invalid_argument otherwise.
    explicit FiniteGroup(std::vector<std::vector<int>> table);

    int order() const { return static_cast<int>(table_.size()); }
    int mul(int a, int b) const { return table_[a][b]; }
    int inv(int a) const { return inverse_[a]; }
    int identity() const { return identity_; }
    int conj(int g, int x) const { return mul(mul(g, x), inverse_[g]); }  // g x g^-1
    const std::vector<std::vector<int>>& table() const { return table_; }

    std::vector<int> conjugacy_class(int x) const;  // sorted
    int element_order(int x) const;

private:
    std::vector<std::vector<int>> table_;
    std::vector<int> inverse_;
    int identity_ = 0;
};

// A group together with a conjugacy class C (the meridian images).
struct GroupClass {
    std::string name;
    FiniteGroup group;
    std::vector<int> klass;  // sorted element ids
};

// Throws std::invalid_argument unless `klass` is exactly one conjugacy class.
GroupClass make_group_class(std::string name, FiniteGroup g, std::vector<int> klass);

// Built-in groups: "a5/5cycle-a", "a5/5cycle-b", "a5/3cycle", "psl27/7a", "s3/2cycle".
GroupClass group_preset(const std::string& name);
std::vector<std::string> group_preset_names();

// Order of the squared braiding (x, y) -> (x y x^-1, x) on pairs drawn from C
// and C^-1 (strands of either orientation).
int dw_vafa_exponent(const GroupClass& gc);

}  // namespace knotpad
