#include "cages/field.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <map>
#include <numeric>
#include <utility>

namespace cages {

namespace {

// Dense polynomials over GF(p), coefficients low-to-high, no trailing zeros
// (the zero polynomial is the empty vector).
using Poly = std::vector<std::uint32_t>;

Poly trim(Poly f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
    return f;
}

std::uint32_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint32_t m) {
    std::uint64_t r = 1 % m;
    base %= m;
    while (exp) {
        if (exp & 1) r = r * base % m;
        base = base * base % m;
        exp >>= 1;
    }
    return static_cast<std::uint32_t>(r);
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
    return mod_pow(a, p - 2, p);  // p prime, a != 0
}

Poly poly_mul(const Poly& a, const Poly& b, std::uint32_t p) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = static_cast<std::uint32_t>(
                (r[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p);
    }
    return trim(std::move(r));
}

Poly poly_sub(Poly a, const Poly& b, std::uint32_t p) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
    return trim(std::move(a));
}

// quotient and remainder of a / b, b nonzero
std::pair<Poly, Poly> poly_divmod(Poly a, const Poly& b, std::uint32_t p) {
    assert(!b.empty());
    const std::uint32_t lead_inv = inv_mod(b.back(), p);
    Poly quot(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, 0);
    while (a.size() >= b.size()) {
        if (a.back() == 0) {
            a.pop_back();
            continue;
        }
        const std::uint32_t coef =
            static_cast<std::uint32_t>(static_cast<std::uint64_t>(a.back()) * lead_inv % p);
        const std::size_t shift = a.size() - b.size();
        quot[shift] = coef;
        for (std::size_t i = 0; i + 1 < b.size(); ++i) {
            const std::uint64_t s = static_cast<std::uint64_t>(coef) * b[i] % p;
            a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - s) % p);
        }
        a.pop_back();  // leading term cancels exactly
    }
    return {trim(std::move(quot)), trim(std::move(a))};
}

Poly poly_rem(Poly a, const Poly& b, std::uint32_t p) {
    return poly_divmod(std::move(a), b, p).second;
}

// multiplicative inverse of a modulo m, gcd(a, m) constant; extended Euclid
Poly poly_inverse(Poly a, const Poly& m, std::uint32_t p) {
    Poly r0 = m, r1 = std::move(a);
    Poly t0, t1 = {1};
    while (!r1.empty()) {
        auto [quot, rem] = poly_divmod(r0, r1, p);
        r0 = std::move(r1);
        r1 = std::move(rem);
        Poly t2 = poly_sub(t0, poly_mul(quot, t1, p), p);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    assert(r0.size() == 1);  // coprime with the (irreducible) modulus
    const std::uint32_t scale = inv_mod(r0[0], p);
    for (auto& c : t0) c = static_cast<std::uint32_t>(static_cast<std::uint64_t>(c) * scale % p);
    return poly_rem(trim(std::move(t0)), m, p);
}

// Moduli for common extension orders.  Each entry equals what
// lex_min_irreducible(p, n) would return; the table only pins them down
// explicitly (and is cross-checked against the search in the test suite).
const std::map<std::uint32_t, Poly>& modulus_table() {
    static const std::map<std::uint32_t, Poly> table = {
        {4u, {1, 1, 1}},
        {8u, {1, 0, 1, 1}},
        {9u, {1, 0, 1}},
        {16u, {1, 0, 0, 1, 1}},
        {25u, {1, 1, 1}},
        {27u, {1, 0, 2, 1}},
        {32u, {1, 0, 0, 1, 0, 1}},
        {49u, {1, 0, 1}},
        {64u, {1, 0, 0, 0, 0, 1, 1}},
        {81u, {1, 0, 1, 1, 1}},
        {121u, {1, 0, 1}},
        {125u, {1, 0, 1, 1}},
        {128u, {1, 0, 0, 0, 0, 0, 1, 1}},
    };
    return table;
}

}  // namespace

bool is_irreducible(std::span<const std::uint32_t> f, std::uint32_t p) {
    Poly poly(f.begin(), f.end());
    poly = trim(std::move(poly));
    if (poly.size() < 2) return false;  // constants are units, not irreducible
    const std::size_t deg = poly.size() - 1;
    Poly divisor;
    for (std::size_t d = 1; 2 * d <= deg; ++d) {
        divisor.assign(d + 1, 0);
        divisor[d] = 1;
        while (true) {
            if (poly_rem(poly, divisor, p).empty()) return false;
            std::size_t i = 0;  // advance to the next monic polynomial of degree d
            while (i < d && ++divisor[i] == p) divisor[i++] = 0;
            if (i == d) break;
        }
    }
    return true;
}

std::vector<std::uint32_t> lex_min_irreducible(std::uint32_t p, std::uint32_t n) {
    Poly f(n + 1, 0);
    f[n] = 1;
    while (true) {
        if (is_irreducible(f, p)) return f;
        // lexicographic successor: the low-degree coefficient is the most
        // significant position, so increment from degree n-1 downward
        std::size_t i = n;
        while (i-- > 0) {
            if (++f[i] < p) break;
            f[i] = 0;
        }
        if (i == static_cast<std::size_t>(-1))
            throw std::logic_error("no irreducible polynomial found");  // unreachable
    }
}

Field::Field(std::uint32_t q) : q_(q) {
    if (q < 2) throw NotAPrimePower("field order must be at least 2, got " + std::to_string(q));
    if (q > (1u << 20))
        throw TooLarge("field order " + std::to_string(q) + " exceeds the 2^20 limit");
    std::uint32_t p = 0;
    for (std::uint32_t d = 2; d * d <= q; ++d) {
        if (q % d == 0) {
            p = d;
            break;
        }
    }
    if (p == 0) p = q;  // q itself is prime
    std::uint32_t m = q, n = 0;
    while (m % p == 0) {
        m /= p;
        ++n;
    }
    if (m != 1)
        throw NotAPrimePower(std::to_string(q) + " is not a prime power");
    p_ = p;
    n_ = n;
    if (n_ > 1) {
        auto it = modulus_table().find(q_);
        modulus_ = it != modulus_table().end() ? it->second : lex_min_irreducible(p_, n_);
    }
    pw_.resize(n_ + 1);
    pw_[0] = 1;
    for (std::uint32_t i = 1; i <= n_; ++i) pw_[i] = pw_[i - 1] * p_;
}

FieldElem Field::add(FieldElem x, FieldElem y) const {
    assert(x < q_ && y < q_);
    if (n_ == 1) return (x + y) % p_;
    FieldElem r = 0;
    for (std::uint32_t i = 0; i < n_; ++i) {
        const std::uint32_t xi = x / pw_[i] % p_;
        const std::uint32_t yi = y / pw_[i] % p_;
        r += (xi + yi) % p_ * pw_[i];
    }
    return r;
}

FieldElem Field::neg(FieldElem x) const {
    assert(x < q_);
    if (n_ == 1) return (p_ - x) % p_;
    FieldElem r = 0;
    for (std::uint32_t i = 0; i < n_; ++i) {
        const std::uint32_t xi = x / pw_[i] % p_;
        r += (p_ - xi) % p_ * pw_[i];
    }
    return r;
}

FieldElem Field::sub(FieldElem x, FieldElem y) const { return add(x, neg(y)); }

FieldElem Field::mul(FieldElem x, FieldElem y) const {
    assert(x < q_ && y < q_);
    if (n_ == 1) return static_cast<FieldElem>(static_cast<std::uint64_t>(x) * y % p_);
    std::array<std::uint64_t, 64> prod{};
    for (std::uint32_t i = 0; i < n_; ++i) {
        const std::uint64_t xi = x / pw_[i] % p_;
        if (xi == 0) continue;
        for (std::uint32_t j = 0; j < n_; ++j) {
            const std::uint64_t yj = y / pw_[j] % p_;
            prod[i + j] = (prod[i + j] + xi * yj) % p_;
        }
    }
    // reduce degree >= n terms using t^n = -(m_0 + m_1 t + ... + m_{n-1} t^{n-1})
    for (std::uint32_t i = 2 * n_ - 2; i >= n_; --i) {
        const std::uint64_t c = prod[i];
        if (c != 0) {
            prod[i] = 0;
            for (std::uint32_t j = 0; j < n_; ++j)
                prod[i - n_ + j] = (prod[i - n_ + j] + c * (p_ - modulus_[j])) % p_;
        }
        if (i == n_) break;
    }
    FieldElem r = 0;
    for (std::uint32_t i = 0; i < n_; ++i)
        r += static_cast<FieldElem>(prod[i]) * pw_[i];
    return r;
}

FieldElem Field::inv(FieldElem x) const {
    assert(x < q_);
    if (x == 0) throw DivisionByZero("inverse of zero in GF(" + std::to_string(q_) + ")");
    if (n_ == 1) return mod_pow(x, p_ - 2, p_);
    Poly a;
    for (std::uint32_t i = 0; i < n_; ++i) a.push_back(x / pw_[i] % p_);
    a = trim(std::move(a));
    Poly r = poly_inverse(std::move(a), modulus_, p_);
    FieldElem out = 0;
    for (std::size_t i = 0; i < r.size(); ++i) out += r[i] * pw_[i];
    return out;
}

std::vector<FieldElem> Field::elements() const {
    std::vector<FieldElem> v(q_);
    std::iota(v.begin(), v.end(), 0u);
    return v;
}

std::vector<std::uint32_t> Field::coeffs(FieldElem x) const {
    assert(x < q_);
    std::vector<std::uint32_t> d(n_);
    for (std::uint32_t i = 0; i < n_; ++i) d[i] = x / pw_[i] % p_;
    return d;
}

FieldElem Field::from_coeffs(std::span<const std::uint32_t> digits) const {
    if (digits.size() != n_)
        throw std::invalid_argument("expected " + std::to_string(n_) + " coefficients");
    FieldElem x = 0;
    for (std::uint32_t i = 0; i < n_; ++i) {
        if (digits[i] >= p_) throw std::invalid_argument("coefficient out of range");
        x += digits[i] * pw_[i];
    }
    return x;
}

}  // namespace cages
