#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace knotpad {

// Exact element of Z[zeta_N], stored in the canonical power basis
// 1, z, ..., z^(phi(N)-1) (reduction modulo the N-th cyclotomic polynomial).
// Arithmetic is overflow-checked; overflow throws std::overflow_error.
class CyclotomicInt {
public:
    CyclotomicInt() = default;  // invalid (order 0) placeholder
    explicit CyclotomicInt(int order);  // zero of Z[zeta_order]

    static CyclotomicInt from_int(int order, std::int64_t value);
    static CyclotomicInt zeta_power(int order, std::int64_t k);

    int order() const { return order_; }
    bool valid() const { return order_ > 0; }
    bool is_zero() const;

    // Length-N coefficient vector; entries at index >= phi(N) are zero.
    std::vector<std::int64_t> coefficients() const;

    CyclotomicInt& operator+=(const CyclotomicInt& o);
    CyclotomicInt& operator-=(const CyclotomicInt& o);
    CyclotomicInt operator+(const CyclotomicInt& o) const;
    CyclotomicInt operator-(const CyclotomicInt& o) const;
    CyclotomicInt operator-() const;
    CyclotomicInt operator*(const CyclotomicInt& o) const;
    CyclotomicInt& operator*=(const CyclotomicInt& o);
    bool operator==(const CyclotomicInt& o) const;
    bool operator!=(const CyclotomicInt& o) const { return !(*this == o); }

    // Multiply by zeta^k in place (cheap: O(k * phi(N))).
    void mul_zeta(std::int64_t k);
    // this += zeta^k * o, without allocating a temporary.
    void add_scaled(const CyclotomicInt& o, std::int64_t k);

    // Non-negative integer power.
    CyclotomicInt pow(std::uint64_t e) const;

    std::string to_string() const;

    struct Context;

private:
    int order_ = 0;
    std::shared_ptr<const Context> ctx_;
    std::vector<std::int64_t> c_;  // length phi(N)

    void require_same(const CyclotomicInt& o) const;
};

// Euler phi and the coefficient list of the N-th cyclotomic polynomial.
int euler_phi(int n);
std::vector<std::int64_t> cyclotomic_polynomial(int n);
// Multiplicative order of zeta_N^k.
int root_order(int n, std::int64_t k);

}  // namespace knotpad
