#pragma once
// Truncated p-adic integers: Z/p^N Z as a model of Z_p.

#include <cstdint>
#include <stdexcept>
#include <string>

namespace defring {

/// Raised on mismatched moduli, non-unit inversion and other arithmetic misuse.
class ArithmeticError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

namespace detail {

using u128 = unsigned __int128;

inline bool is_prime(std::uint64_t n)
{
    if (n < 2)
        return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

// p^e, or 0 when it does not fit below 2^62.
inline std::uint64_t checked_pow(std::uint64_t p, unsigned e)
{
    u128 acc = 1;
    for (unsigned i = 0; i < e; ++i) {
        acc *= p;
        if (acc >= (u128(1) << 62))
            return 0;
    }
    return static_cast<std::uint64_t>(acc);
}

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m)
{
    return static_cast<std::uint64_t>(u128(a) * b % m);
}

inline std::uint64_t reduce_signed(std::int64_t a, std::uint64_t m)
{
    if (a >= 0)
        return static_cast<std::uint64_t>(a) % m;
    // careful with INT64_MIN
    std::uint64_t mag = static_cast<std::uint64_t>(-(a + 1)) + 1;
    std::uint64_t r = mag % m;
    return r == 0 ? 0 : m - r;
}

// Inverse of a modulo m via the extended Euclidean algorithm; 0 if none.
inline std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t m)
{
    __int128 old_r = a % m, r = m, old_s = 1, s = 0;
    while (r != 0) {
        __int128 q = old_r / r;
        __int128 t = old_r - q * r;
        old_r = r;
        r = t;
        t = old_s - q * s;
        old_s = s;
        s = t;
    }
    if (old_r != 1)
        return 0;
    __int128 res = old_s % static_cast<__int128>(m);
    if (res < 0)
        res += m;
    return static_cast<std::uint64_t>(res);
}

} // namespace detail

/// The coefficient ring Z/p^N Z. Cheap to copy; compared by (p, N).
class Modulus {
public:
    Modulus() = default;

    Modulus(std::uint64_t prime, unsigned precision) : p_(prime), n_(precision)
    {
        if (prime == 2)
            throw ArithmeticError("p = 2 is not supported: the prime must be odd");
        if (!detail::is_prime(prime) || prime > (std::uint64_t(1) << 31))
            throw ArithmeticError("modulus base " + std::to_string(prime) +
                                  " is not an odd prime below 2^31");
        if (precision < 1)
            throw ArithmeticError("precision must be at least 1");
        pn_ = detail::checked_pow(prime, precision);
        if (pn_ == 0)
            throw ArithmeticError("p^N does not fit in 62 bits");
    }

    std::uint64_t prime() const { return p_; }
    unsigned precision() const { return n_; }
    /// p^N
    std::uint64_t value() const { return pn_; }
    bool valid() const { return pn_ != 0; }

    std::uint64_t reduce(std::int64_t a) const { return detail::reduce_signed(a, pn_); }
    std::uint64_t add(std::uint64_t a, std::uint64_t b) const
    {
        std::uint64_t s = a + b;
        return s >= pn_ ? s - pn_ : s;
    }
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return a >= b ? a - b : a + pn_ - b; }
    std::uint64_t neg(std::uint64_t a) const { return a == 0 ? 0 : pn_ - a; }
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return detail::mulmod(a, b, pn_); }

    std::uint64_t inv(std::uint64_t a) const
    {
        if (a % p_ == 0)
            throw ArithmeticError("inverse of non-unit " + std::to_string(a) + " mod " +
                                  std::to_string(p_) + "^" + std::to_string(n_));
        return detail::inverse_mod(a, pn_);
    }

    /// p-adic valuation of a residue; N for zero.
    unsigned valuation(std::uint64_t a) const
    {
        if (a == 0)
            return n_;
        unsigned v = 0;
        while (a % p_ == 0) {
            a /= p_;
            ++v;
        }
        return v;
    }

    /// Representative in (-p^N/2, p^N/2].
    std::int64_t balanced(std::uint64_t a) const
    {
        return a > pn_ / 2 ? -static_cast<std::int64_t>(pn_ - a) : static_cast<std::int64_t>(a);
    }

    std::uint64_t pow(std::uint64_t base, std::uint64_t e) const
    {
        std::uint64_t acc = 1 % pn_;
        base %= pn_;
        while (e) {
            if (e & 1)
                acc = mul(acc, base);
            base = mul(base, base);
            e >>= 1;
        }
        return acc;
    }

    friend bool operator==(const Modulus &a, const Modulus &b) { return a.p_ == b.p_ && a.n_ == b.n_; }

    std::string describe() const { return std::to_string(p_) + "^" + std::to_string(n_); }

private:
    std::uint64_t p_ = 0;
    unsigned n_ = 0;
    std::uint64_t pn_ = 0;
};

inline void require_same(const Modulus &a, const Modulus &b)
{
    if (!(a == b))
        throw ArithmeticError("mismatched coefficient rings: mod " + a.describe() + " vs mod " +
                              b.describe());
}

/// Element of Z/p^N Z. Immutable value type.
class PadicInt {
public:
    PadicInt() = default;
    PadicInt(const Modulus &m, std::int64_t value) : m_(m), r_(m.reduce(value)) {}
    static PadicInt from_residue(const Modulus &m, std::uint64_t r)
    {
        PadicInt x;
        x.m_ = m;
        x.r_ = r % m.value();
        return x;
    }

    const Modulus &modulus() const { return m_; }
    std::uint64_t residue() const { return r_; }
    std::int64_t balanced() const { return m_.balanced(r_); }
    bool is_zero() const { return r_ == 0; }
    bool is_unit() const { return r_ % m_.prime() != 0; }
    unsigned valuation() const { return m_.valuation(r_); }

    PadicInt inv() const { return from_residue(m_, m_.inv(r_)); }
    PadicInt operator-() const { return from_residue(m_, m_.neg(r_)); }

    friend PadicInt operator+(const PadicInt &a, const PadicInt &b)
    {
        require_same(a.m_, b.m_);
        return from_residue(a.m_, a.m_.add(a.r_, b.r_));
    }
    friend PadicInt operator-(const PadicInt &a, const PadicInt &b)
    {
        require_same(a.m_, b.m_);
        return from_residue(a.m_, a.m_.sub(a.r_, b.r_));
    }
    friend PadicInt operator*(const PadicInt &a, const PadicInt &b)
    {
        require_same(a.m_, b.m_);
        return from_residue(a.m_, a.m_.mul(a.r_, b.r_));
    }
    friend bool operator==(const PadicInt &a, const PadicInt &b)
    {
        return a.m_ == b.m_ && a.r_ == b.r_;
    }

    PadicInt pow(std::uint64_t e) const { return from_residue(m_, m_.pow(r_, e)); }

private:
    Modulus m_;
    std::uint64_t r_ = 0;
};

inline PadicInt add(const PadicInt &a, const PadicInt &b) { return a + b; }
inline PadicInt sub(const PadicInt &a, const PadicInt &b) { return a - b; }
inline PadicInt mul(const PadicInt &a, const PadicInt &b) { return a * b; }
inline PadicInt neg(const PadicInt &a) { return -a; }
inline PadicInt inv(const PadicInt &a) { return a.inv(); }
inline unsigned valuation(const PadicInt &a) { return a.valuation(); }

/// v_p(j!) by Legendre's formula.
inline unsigned factorial_valuation(std::uint64_t j, std::uint64_t p)
{
    unsigned v = 0;
    for (std::uint64_t q = p; q <= j; q *= p) {
        v += static_cast<unsigned>(j / q);
        if (q > j / p)
            break;
    }
    return v;
}

/// Binomial coefficient C(a, j) mod p^N for an integer a (any sign).
///
/// The falling factorial is formed exactly modulo p^(N + v_p(j!)) and the
/// p-part of j! is divided out before reducing, so nothing is lost.
inline PadicInt binom_integer(const Modulus &m, std::int64_t a, unsigned j)
{
    if (j == 0)
        return PadicInt(m, 1);
    bool negate = false;
    if (a < 0) {
        // C(a, j) = (-1)^j C(j - a - 1, j)
        negate = (j % 2) == 1;
        a = static_cast<std::int64_t>(j) - a - 1;
    }
    if (a < static_cast<std::int64_t>(j))
        return PadicInt(m, 0);

    const std::uint64_t p = m.prime();
    const unsigned v = factorial_valuation(j, p);
    const std::uint64_t big = detail::checked_pow(p, m.precision() + v);
    if (big == 0)
        throw ArithmeticError("binomial lift p^(N+v) exceeds 62 bits");

    std::uint64_t num = 1 % big;
    std::uint64_t unit_part = 1 % m.value();
    for (unsigned i = 0; i < j; ++i) {
        std::uint64_t term = static_cast<std::uint64_t>(a - static_cast<std::int64_t>(i)) % big;
        num = detail::mulmod(num, term, big);
        std::uint64_t f = i + 1;
        while (f % p == 0)
            f /= p;
        unit_part = m.mul(unit_part, f % m.value());
    }
    std::uint64_t pv = detail::checked_pow(p, v);
    std::uint64_t quotient = (num / pv) % m.value();
    PadicInt r = PadicInt::from_residue(m, m.mul(quotient, m.inv(unit_part)));
    return negate ? -r : r;
}

/// C(a, j) for a p-adic a, lifted through its balanced representative.
inline PadicInt binom_padic(const PadicInt &a, unsigned j)
{
    return binom_integer(a.modulus(), a.balanced(), j);
}

/// Teichmueller lift of a nonzero residue mod p: the (p-1)-st root of unity
/// congruent to a0, found as the fixed point of x -> x^p.
inline PadicInt teichmuller(const Modulus &m, std::int64_t a0)
{
    std::uint64_t r = detail::reduce_signed(a0, m.prime());
    if (r == 0)
        throw ArithmeticError("Teichmueller lift of 0 mod p is undefined");
    std::uint64_t x = r;
    for (unsigned i = 0; i <= m.precision(); ++i) {
        std::uint64_t next = m.pow(x, m.prime());
        if (next == x)
            break;
        x = next;
    }
    return PadicInt::from_residue(m, x);
}

/// Smallest primitive root mod p.
inline std::uint64_t primitive_root(std::uint64_t p)
{
    std::uint64_t phi = p - 1, n = phi;
    std::uint64_t factors[64];
    int nf = 0;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            factors[nf++] = d;
            while (n % d == 0)
                n /= d;
        }
    }
    if (n > 1)
        factors[nf++] = n;
    Modulus m(p, 1);
    for (std::uint64_t g = 2; g < p; ++g) {
        bool ok = true;
        for (int i = 0; i < nf && ok; ++i)
            ok = m.pow(g, phi / factors[i]) != 1;
        if (ok)
            return g;
    }
    return 1;
}

} // namespace defring
