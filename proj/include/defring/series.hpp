#pragma once
// Truncated power series with Z/p^N coefficients, cut at total degree D.
//
// One template covers both rings in play: the noncommutative Magnus algebra
// Z_p[[T_1..T_k]]_nc (monomials are words in the T_i) and the commutative
// ring Z_p[[Y_1..Y_m]] (monomials are exponent vectors).

#include "defring/padic.hpp"

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace defring {

/// Noncommutative monomials: words over {0..k-1}.
struct NcMonomial {
    using key_type = std::vector<std::uint8_t>;

    static unsigned degree(const key_type &k) { return static_cast<unsigned>(k.size()); }
    static key_type one(unsigned) { return {}; }
    static key_type variable(unsigned, unsigned i) { return {static_cast<std::uint8_t>(i)}; }
    static key_type product(const key_type &a, const key_type &b)
    {
        key_type r;
        r.reserve(a.size() + b.size());
        r.insert(r.end(), a.begin(), a.end());
        r.insert(r.end(), b.begin(), b.end());
        return r;
    }
    struct order {
        bool operator()(const key_type &a, const key_type &b) const
        {
            if (a.size() != b.size())
                return a.size() < b.size();
            return a < b;
        }
    };
    static std::string render(const key_type &k, std::span<const std::string> names)
    {
        std::string out;
        for (std::size_t i = 0; i < k.size();) {
            std::size_t j = i;
            while (j < k.size() && k[j] == k[i])
                ++j;
            if (!out.empty())
                out += "*";
            out += names[k[i]];
            if (j - i > 1)
                out += "^" + std::to_string(j - i);
            i = j;
        }
        return out;
    }
    static std::string default_name(unsigned nvars, unsigned i)
    {
        return nvars == 1 ? std::string("T") : "T_" + std::to_string(i + 1);
    }
};

/// Commutative monomials: exponent vectors of fixed length m, graded
/// lexicographic order (lower total degree first, then Y_1 before Y_2).
struct CommMonomial {
    using key_type = std::vector<std::uint8_t>;

    static unsigned degree(const key_type &k)
    {
        unsigned d = 0;
        for (auto e : k)
            d += e;
        return d;
    }
    static key_type one(unsigned nvars) { return key_type(nvars, 0); }
    static key_type variable(unsigned nvars, unsigned i)
    {
        key_type k(nvars, 0);
        k[i] = 1;
        return k;
    }
    static key_type product(const key_type &a, const key_type &b)
    {
        key_type r = a;
        for (std::size_t i = 0; i < r.size(); ++i)
            r[i] = static_cast<std::uint8_t>(r[i] + b[i]);
        return r;
    }
    struct order {
        bool operator()(const key_type &a, const key_type &b) const
        {
            unsigned da = degree(a), db = degree(b);
            if (da != db)
                return da < db;
            return a > b;
        }
    };
    static std::string render(const key_type &k, std::span<const std::string> names)
    {
        std::string out;
        for (std::size_t i = 0; i < k.size(); ++i) {
            if (k[i] == 0)
                continue;
            if (!out.empty())
                out += "*";
            out += names[i];
            if (k[i] > 1)
                out += "^" + std::to_string(k[i]);
        }
        return out;
    }
    static std::string default_name(unsigned, unsigned i) { return "Y_" + std::to_string(i + 1); }
};

template <class Mono>
class TruncatedSeries {
public:
    using key_type = typename Mono::key_type;
    using map_type = std::map<key_type, std::uint64_t, typename Mono::order>;

    TruncatedSeries() = default;
    TruncatedSeries(const Modulus &m, unsigned nvars, unsigned cap) : m_(m), nvars_(nvars), cap_(cap) {}

    static TruncatedSeries constant(const Modulus &m, unsigned nvars, unsigned cap, std::int64_t c)
    {
        TruncatedSeries s(m, nvars, cap);
        s.add_term(Mono::one(nvars), m.reduce(c));
        return s;
    }
    static TruncatedSeries constant(const Modulus &m, unsigned nvars, unsigned cap, const PadicInt &c)
    {
        require_same(m, c.modulus());
        TruncatedSeries s(m, nvars, cap);
        s.add_term(Mono::one(nvars), c.residue());
        return s;
    }
    static TruncatedSeries variable(const Modulus &m, unsigned nvars, unsigned cap, unsigned i)
    {
        if (i >= nvars)
            throw ArithmeticError("variable index out of range");
        TruncatedSeries s(m, nvars, cap);
        s.add_term(Mono::variable(nvars, i), 1);
        return s;
    }
    /// Same ring, given constant.
    TruncatedSeries make_constant(std::int64_t c) const { return constant(m_, nvars_, cap_, c); }
    TruncatedSeries make_variable(unsigned i) const { return variable(m_, nvars_, cap_, i); }

    const Modulus &modulus() const { return m_; }
    unsigned nvars() const { return nvars_; }
    unsigned degree_cap() const { return cap_; }
    const map_type &terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    PadicInt coeff(const key_type &k) const
    {
        auto it = terms_.find(k);
        return PadicInt::from_residue(m_, it == terms_.end() ? 0 : it->second);
    }
    PadicInt constant_term() const { return coeff(Mono::one(nvars_)); }

    /// Lowest total degree carrying a nonzero coefficient (cap + 1 for zero).
    unsigned order() const { return terms_.empty() ? cap_ + 1 : Mono::degree(terms_.begin()->first); }

    void add_term(const key_type &k, std::uint64_t c)
    {
        if (c == 0 || Mono::degree(k) > cap_)
            return;
        auto [it, fresh] = terms_.try_emplace(k, c);
        if (!fresh) {
            it->second = m_.add(it->second, c);
            if (it->second == 0)
                terms_.erase(it);
        }
    }

    TruncatedSeries &operator+=(const TruncatedSeries &b)
    {
        check_compatible(b);
        for (const auto &[k, c] : b.terms_)
            add_term(k, c);
        return *this;
    }
    TruncatedSeries &operator-=(const TruncatedSeries &b)
    {
        check_compatible(b);
        for (const auto &[k, c] : b.terms_)
            add_term(k, m_.neg(c));
        return *this;
    }
    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries &b) { return a += b; }
    friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries &b) { return a -= b; }
    TruncatedSeries operator-() const
    {
        TruncatedSeries r(m_, nvars_, cap_);
        for (const auto &[k, c] : terms_)
            r.terms_.emplace(k, m_.neg(c));
        return r;
    }

    friend TruncatedSeries operator*(const TruncatedSeries &a, const TruncatedSeries &b)
    {
        a.check_compatible(b);
        TruncatedSeries r(a.m_, a.nvars_, a.cap_);
        for (const auto &[ka, ca] : a.terms_) {
            unsigned da = Mono::degree(ka);
            for (const auto &[kb, cb] : b.terms_) {
                if (da + Mono::degree(kb) > a.cap_)
                    break; // b is sorted by degree
                r.add_term(Mono::product(ka, kb), a.m_.mul(ca, cb));
            }
        }
        return r;
    }
    TruncatedSeries &operator*=(const TruncatedSeries &b) { return *this = *this * b; }

    TruncatedSeries scaled(const PadicInt &c) const
    {
        require_same(m_, c.modulus());
        TruncatedSeries r(m_, nvars_, cap_);
        for (const auto &[k, x] : terms_)
            r.add_term(k, m_.mul(x, c.residue()));
        return r;
    }
    TruncatedSeries scaled(std::int64_t c) const { return scaled(PadicInt(m_, c)); }

    /// Drops every term above the new cap.
    TruncatedSeries truncated(unsigned cap) const
    {
        TruncatedSeries r(m_, nvars_, cap);
        for (const auto &[k, c] : terms_)
            r.add_term(k, c);
        return r;
    }

    friend bool operator==(const TruncatedSeries &a, const TruncatedSeries &b)
    {
        return a.m_ == b.m_ && a.nvars_ == b.nvars_ && a.cap_ == b.cap_ && a.terms_ == b.terms_;
    }

    /// Canonical text: terms in monomial order, balanced coefficients.
    std::string to_string(std::span<const std::string> names) const
    {
        if (terms_.empty())
            return "0";
        std::string out;
        bool first = true;
        for (const auto &[k, c] : terms_) {
            std::int64_t b = m_.balanced(c);
            std::int64_t mag = b < 0 ? -b : b;
            if (first)
                out += b < 0 ? "-" : "";
            else
                out += b < 0 ? " - " : " + ";
            first = false;
            std::string mono = Mono::render(k, names);
            if (mono.empty())
                out += std::to_string(mag);
            else if (mag == 1)
                out += mono;
            else
                out += std::to_string(mag) + "*" + mono;
        }
        return out;
    }
    std::string to_string() const { return to_string(default_names()); }

    std::vector<std::string> default_names() const
    {
        std::vector<std::string> names;
        for (unsigned i = 0; i < nvars_; ++i)
            names.push_back(Mono::default_name(nvars_, i));
        return names;
    }

    void check_compatible(const TruncatedSeries &b) const
    {
        require_same(m_, b.m_);
        if (nvars_ != b.nvars_ || cap_ != b.cap_)
            throw ArithmeticError("series parameter mismatch: (vars " + std::to_string(nvars_) +
                                  ", deg " + std::to_string(cap_) + ") vs (vars " +
                                  std::to_string(b.nvars_) + ", deg " + std::to_string(b.cap_) + ")");
    }

private:
    Modulus m_;
    unsigned nvars_ = 0;
    unsigned cap_ = 0;
    map_type terms_;
};

using MagnusSeries = TruncatedSeries<NcMonomial>;
using CommSeries = TruncatedSeries<CommMonomial>;

inline MagnusSeries m_add(const MagnusSeries &a, const MagnusSeries &b) { return a + b; }
inline MagnusSeries m_mul(const MagnusSeries &a, const MagnusSeries &b) { return a * b; }
inline CommSeries c_add(const CommSeries &a, const CommSeries &b) { return a + b; }
inline CommSeries c_mul(const CommSeries &a, const CommSeries &b) { return a * b; }

/// Two-sided inverse of a series with unit constant term, by the geometric
/// series on the degree filtration.
template <class Mono>
TruncatedSeries<Mono> unit_inv(const TruncatedSeries<Mono> &a)
{
    PadicInt c0 = a.constant_term();
    if (!c0.is_unit())
        throw ArithmeticError("unit_inv: constant term " + std::to_string(c0.residue()) +
                              " is not a unit");
    PadicInt c0inv = c0.inv();
    auto one = a.make_constant(1);
    // a = c0 (1 + y), y without constant term
    auto minus_y = (one - a.scaled(c0inv));
    auto sum = one;
    auto term = one;
    for (unsigned i = 1; i <= a.degree_cap(); ++i) {
        term = term * minus_y;
        if (term.is_zero())
            break;
        sum += term;
    }
    return sum.scaled(c0inv);
}

/// Integer power; negative exponents go through unit_inv.
template <class Mono>
TruncatedSeries<Mono> power(const TruncatedSeries<Mono> &a, std::int64_t e)
{
    if (e < 0)
        return power(unit_inv(a), -e);
    if (a.constant_term().residue() == 1 % a.modulus().value()) {
        // (1 + x)^e as a finite binomial sum
        auto x = a - a.make_constant(1);
        auto sum = a.make_constant(1);
        auto xp = a.make_constant(1);
        for (unsigned j = 1; j <= a.degree_cap(); ++j) {
            xp = xp * x;
            if (xp.is_zero())
                break;
            sum += xp.scaled(binom_integer(a.modulus(), e, j));
        }
        return sum;
    }
    auto acc = a.make_constant(1);
    auto base = a;
    while (e) {
        if (e & 1)
            acc = acc * base;
        e >>= 1;
        if (e)
            base = base * base;
    }
    return acc;
}

/// u^a for a p-adic exponent: sum_j C(a, j) (u - 1)^j.
template <class Mono>
TruncatedSeries<Mono> pow_padic(const TruncatedSeries<Mono> &u, const PadicInt &a)
{
    require_same(u.modulus(), a.modulus());
    if (u.constant_term().residue() != 1 % u.modulus().value())
        throw ArithmeticError("pow_padic: base must have constant term 1");
    auto x = u - u.make_constant(1);
    auto sum = u.make_constant(1);
    auto xp = u.make_constant(1);
    for (unsigned j = 1; j <= u.degree_cap(); ++j) {
        xp = xp * x;
        if (xp.is_zero())
            break;
        sum += xp.scaled(binom_padic(a, j));
    }
    return sum;
}

/// A word in the Gamma generators: (letter index in 0..k-1, exponent).
using GammaWord = std::vector<std::pair<int, std::int64_t>>;

/// Magnus image of a Gamma word: gamma_i -> 1 + T_i, multiplicatively.
inline MagnusSeries gamma_embed(const GammaWord &w, const Modulus &m, unsigned k, unsigned cap)
{
    MagnusSeries acc = MagnusSeries::constant(m, k, cap, 1);
    for (const auto &[letter, e] : w) {
        if (letter < 0 || static_cast<unsigned>(letter) >= k)
            throw ArithmeticError("gamma_embed: letter outside the Gamma alphabet");
        if (e == 0)
            continue;
        MagnusSeries factor(m, k, cap);
        NcMonomial::key_type key;
        for (unsigned j = 0; j <= cap; ++j) {
            factor.add_term(key, binom_integer(m, e, j).residue());
            key.push_back(static_cast<std::uint8_t>(letter));
        }
        acc = acc * factor;
    }
    return acc;
}

/// Substitutes T_1 -> w and T_i -> 0 (i > 1) in a Magnus series. Monomials
/// involving T_2.. are annihilated; they are appended to `dropped` if given.
inline CommSeries subst_T(const MagnusSeries &f, const CommSeries &w,
                          std::vector<NcMonomial::key_type> *dropped = nullptr)
{
    require_same(f.modulus(), w.modulus());
    if (!w.constant_term().is_zero())
        throw ArithmeticError("subst_T: substituted series must have zero constant term");
    std::vector<std::uint64_t> coeffs(f.degree_cap() + 1, 0);
    for (const auto &[k, c] : f.terms()) {
        bool pure = true;
        for (auto letter : k)
            pure = pure && letter == 0;
        if (pure)
            coeffs[k.size()] = c;
        else if (dropped)
            dropped->push_back(k);
    }
    // Horner in w
    CommSeries acc(w.modulus(), w.nvars(), w.degree_cap());
    for (std::size_t j = coeffs.size(); j-- > 0;) {
        acc = acc * w;
        acc.add_term(CommMonomial::one(w.nvars()), coeffs[j]);
    }
    return acc;
}

/// Coefficients of a one-variable Magnus series: f = a + sum_k b_k T^k.
struct CoeffExpansion {
    PadicInt a;
    std::vector<PadicInt> b; ///< b[0] is the coefficient of T^1
};

inline CoeffExpansion coeff_expansion(const MagnusSeries &f)
{
    if (f.nvars() != 1)
        throw ArithmeticError("coeff_expansion needs a one-variable Magnus series");
    CoeffExpansion out;
    out.a = f.constant_term();
    NcMonomial::key_type key;
    for (unsigned j = 1; j <= f.degree_cap(); ++j) {
        key.push_back(0);
        out.b.push_back(f.coeff(key));
    }
    return out;
}

/// Evaluates a commutative series after replacing each Y_i by images[i]
/// (series in the target ring). Images must have zero constant term.
inline CommSeries compose(const CommSeries &f, std::span<const CommSeries> images)
{
    if (images.size() != f.nvars())
        throw ArithmeticError("compose: one image per variable required");
    if (images.empty())
        return f;
    const CommSeries &proto = images.front();
    for (const auto &im : images) {
        proto.check_compatible(im);
        if (!im.constant_term().is_zero())
            throw ArithmeticError("compose: images must lie in the maximal ideal");
    }
    require_same(f.modulus(), proto.modulus());
    std::vector<std::vector<CommSeries>> powers(images.size());
    auto power_of = [&](std::size_t i, unsigned e) -> const CommSeries & {
        auto &pw = powers[i];
        if (pw.empty())
            pw.push_back(proto.make_constant(1));
        while (pw.size() <= e)
            pw.push_back(pw.back() * images[i]);
        return pw[e];
    };
    CommSeries out(proto.modulus(), proto.nvars(), proto.degree_cap());
    for (const auto &[k, c] : f.terms()) {
        CommSeries term = proto.make_constant(1);
        for (std::size_t i = 0; i < k.size(); ++i)
            if (k[i])
                term = term * power_of(i, k[i]);
        out += term.scaled(PadicInt::from_residue(f.modulus(), c));
    }
    return out;
}

/// True when every monomial of f is divisible by Y_i.
inline bool divisible_by_variable(const CommSeries &f, unsigned i)
{
    for (const auto &[k, c] : f.terms())
        if (k[i] == 0)
            return false;
    return true;
}

} // namespace defring
