#include "knotpad/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace knotpad {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("cyclotomic coefficient overflow");
    return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("cyclotomic coefficient overflow");
    return r;
}

// Exact division of integer polynomials (coefficients low to high) by a monic divisor.
std::vector<std::int64_t> poly_div_exact(std::vector<std::int64_t> num, const std::vector<std::int64_t>& den) {
    const std::size_t dn = den.size() - 1;
    std::vector<std::int64_t> q(num.size() - dn, 0);
    for (std::size_t i = num.size(); i-- > dn;) {
        const std::int64_t c = num[i];
        q[i - dn] = c;
        for (std::size_t j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
    }
    for (std::size_t i = 0; i < dn; ++i)
        if (num[i] != 0) throw std::logic_error("inexact cyclotomic polynomial division");
    return q;
}

}  // namespace

int euler_phi(int n) {
    int result = n;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

std::vector<std::int64_t> cyclotomic_polynomial(int n) {
    if (n < 1) throw std::invalid_argument("cyclotomic polynomial order must be positive");
    std::vector<std::int64_t> p(n + 1, 0);
    p[0] = -1;
    p[n] = 1;
    for (int d = 1; d < n; ++d)
        if (n % d == 0) p = poly_div_exact(p, cyclotomic_polynomial(d));
    return p;
}

int root_order(int n, std::int64_t k) {
    const std::int64_t r = ((k % n) + n) % n;
    return n / static_cast<int>(std::gcd<std::int64_t>(r, n));
}

struct CyclotomicInt::Context {
    int order = 0;
    int phi = 0;
    // powers[j] = canonical coefficients of zeta^j, j = 0..order-1
    std::vector<std::vector<std::int64_t>> powers;
};

namespace {

std::shared_ptr<const CyclotomicInt::Context> build_context(int order) {
    static std::mutex mu;
    static std::map<int, std::shared_ptr<const CyclotomicInt::Context>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(order);
    if (it != cache.end()) return it->second;
    auto ctx = std::make_shared<CyclotomicInt::Context>();
    ctx->order = order;
    const auto phi_poly = cyclotomic_polynomial(order);
    ctx->phi = static_cast<int>(phi_poly.size()) - 1;
    const int phi = ctx->phi;
    std::vector<std::int64_t> cur(phi, 0);
    cur[0] = 1;
    for (int j = 0; j < order; ++j) {
        ctx->powers.push_back(cur);
        // multiply by z and reduce the degree-phi term with the monic polynomial
        std::int64_t top = cur[phi - 1];
        for (int i = phi - 1; i > 0; --i) cur[i] = cur[i - 1];
        cur[0] = 0;
        for (int i = 0; i < phi; ++i) cur[i] -= top * phi_poly[i];
    }
    cache.emplace(order, ctx);
    return ctx;
}

std::shared_ptr<const CyclotomicInt::Context> context_for(int order) {
    thread_local std::shared_ptr<const CyclotomicInt::Context> last;
    if (!last || last->order != order) last = build_context(order);
    return last;
}

}  // namespace

CyclotomicInt::CyclotomicInt(int order) : order_(order) {
    if (order < 1) throw std::invalid_argument("root order must be positive");
    ctx_ = context_for(order);
    c_.assign(ctx_->phi, 0);
}

CyclotomicInt CyclotomicInt::from_int(int order, std::int64_t value) {
    CyclotomicInt r(order);
    r.c_[0] = value;
    return r;
}

CyclotomicInt CyclotomicInt::zeta_power(int order, std::int64_t k) {
    CyclotomicInt r(order);
    const std::int64_t j = ((k % order) + order) % order;
    r.c_ = r.ctx_->powers[j];
    return r;
}

bool CyclotomicInt::is_zero() const {
    for (auto v : c_)
        if (v != 0) return false;
    return true;
}

std::vector<std::int64_t> CyclotomicInt::coefficients() const {
    std::vector<std::int64_t> out(order_, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) out[i] = c_[i];
    return out;
}

void CyclotomicInt::require_same(const CyclotomicInt& o) const {
    if (order_ != o.order_ || order_ == 0) throw std::invalid_argument("cyclotomic order mismatch");
}

CyclotomicInt& CyclotomicInt::operator+=(const CyclotomicInt& o) {
    require_same(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] = checked_add(c_[i], o.c_[i]);
    return *this;
}

CyclotomicInt& CyclotomicInt::operator-=(const CyclotomicInt& o) {
    require_same(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] = checked_add(c_[i], -o.c_[i]);
    return *this;
}

CyclotomicInt CyclotomicInt::operator+(const CyclotomicInt& o) const {
    CyclotomicInt r = *this;
    r += o;
    return r;
}

CyclotomicInt CyclotomicInt::operator-(const CyclotomicInt& o) const {
    CyclotomicInt r = *this;
    r -= o;
    return r;
}

CyclotomicInt CyclotomicInt::operator-() const {
    CyclotomicInt r = *this;
    for (auto& v : r.c_) v = -v;
    return r;
}

CyclotomicInt CyclotomicInt::operator*(const CyclotomicInt& o) const {
    require_same(o);
    const int phi = ctx_->phi;
    const int n = order_;
    std::vector<std::int64_t> raw(n, 0);
    for (int i = 0; i < phi; ++i) {
        if (c_[i] == 0) continue;
        for (int j = 0; j < phi; ++j) {
            if (o.c_[j] == 0) continue;
            const int k = (i + j) % n;
            raw[k] = checked_add(raw[k], checked_mul(c_[i], o.c_[j]));
        }
    }
    CyclotomicInt r(order_);
    for (int k = 0; k < n; ++k) {
        if (raw[k] == 0) continue;
        const auto& p = ctx_->powers[k];
        for (int i = 0; i < phi; ++i)
            if (p[i] != 0) r.c_[i] = checked_add(r.c_[i], checked_mul(raw[k], p[i]));
    }
    return r;
}

CyclotomicInt& CyclotomicInt::operator*=(const CyclotomicInt& o) {
    *this = *this * o;
    return *this;
}

bool CyclotomicInt::operator==(const CyclotomicInt& o) const {
    return order_ == o.order_ && c_ == o.c_;
}

void CyclotomicInt::mul_zeta(std::int64_t k) {
    CyclotomicInt r(order_);
    r.add_scaled(*this, k);
    c_ = std::move(r.c_);
}

void CyclotomicInt::add_scaled(const CyclotomicInt& o, std::int64_t k) {
    require_same(o);
    const int n = order_;
    const int phi = ctx_->phi;
    const int base = static_cast<int>(((k % n) + n) % n);
    for (int i = 0; i < phi; ++i) {
        const std::int64_t v = o.c_[i];
        if (v == 0) continue;
        const auto& p = ctx_->powers[(base + i) % n];
        for (int j = 0; j < phi; ++j)
            if (p[j] != 0) c_[j] = checked_add(c_[j], checked_mul(v, p[j]));
    }
}

CyclotomicInt CyclotomicInt::pow(std::uint64_t e) const {
    CyclotomicInt result = from_int(order_, 1);
    CyclotomicInt base = *this;
    while (e > 0) {
        if (e & 1U) result *= base;
        e >>= 1U;
        if (e > 0) base *= base;
    }
    return result;
}

std::string CyclotomicInt::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        const std::int64_t v = c_[i];
        if (v == 0) continue;
        if (!first) os << (v < 0 ? " - " : " + ");
        else if (v < 0) os << "-";
        const std::int64_t a = v < 0 ? -v : v;
        if (i == 0) os << a;
        else {
            if (a != 1) os << a << "*";
            os << "z";
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    if (first) os << "0";
    os << " (N=" << order_ << ")";
    return os.str();
}

}  // namespace knotpad
