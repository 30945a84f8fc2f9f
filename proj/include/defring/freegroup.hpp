#pragma once
// Reduced words in a free group and finite Z/p^N-linear combinations of them.

#include "defring/padic.hpp"

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace defring {

/// A generator of a free group: position in its alphabet plus display name.
struct Gen {
    int index = 0;
    std::string name;
};

struct Syllable {
    int gen = 0;
    std::int64_t exp = 0;

    friend bool operator==(const Syllable &, const Syllable &) = default;
    friend auto operator<=>(const Syllable &, const Syllable &) = default;
};

/// Freely reduced word: adjacent syllables carry distinct generators and
/// no exponent is zero.
class FreeWord {
public:
    FreeWord() = default;

    static FreeWord letter(int gen, std::int64_t exp = 1)
    {
        FreeWord w;
        if (exp != 0)
            w.syl_.push_back({gen, exp});
        return w;
    }

    /// Reduces an arbitrary syllable sequence.
    static FreeWord from_syllables(std::span<const Syllable> s)
    {
        FreeWord w;
        for (const auto &x : s)
            w.push(x);
        return w;
    }

    const std::vector<Syllable> &syllables() const { return syl_; }
    bool empty() const { return syl_.empty(); }
    /// Number of letters counted with multiplicity.
    std::int64_t length() const
    {
        std::int64_t n = 0;
        for (const auto &s : syl_)
            n += s.exp < 0 ? -s.exp : s.exp;
        return n;
    }

    /// Exponent sum of one generator.
    std::int64_t exponent_sum(int gen) const
    {
        std::int64_t n = 0;
        for (const auto &s : syl_)
            if (s.gen == gen)
                n += s.exp;
        return n;
    }

    friend FreeWord operator*(const FreeWord &u, const FreeWord &v)
    {
        FreeWord w = u;
        for (const auto &s : v.syl_)
            w.push(s);
        return w;
    }

    FreeWord inverse() const
    {
        FreeWord w;
        w.syl_.reserve(syl_.size());
        for (auto it = syl_.rbegin(); it != syl_.rend(); ++it)
            w.syl_.push_back({it->gen, -it->exp});
        return w;
    }

    FreeWord pow(std::int64_t e) const
    {
        FreeWord base = e < 0 ? inverse() : *this;
        std::int64_t n = e < 0 ? -e : e;
        FreeWord acc;
        // square-and-multiply keeps long powers of short words cheap
        while (n) {
            if (n & 1)
                acc = acc * base;
            n >>= 1;
            if (n)
                base = base * base;
        }
        return acc;
    }

    /// Applies a generator renumbering old -> map[old].
    FreeWord relabel(std::span<const int> map) const
    {
        FreeWord w;
        for (const auto &s : syl_)
            w.push({map[static_cast<std::size_t>(s.gen)], s.exp});
        return w;
    }

    std::string to_string(std::span<const std::string> names) const
    {
        if (syl_.empty())
            return "1";
        std::string out;
        for (std::size_t i = 0; i < syl_.size(); ++i) {
            if (i)
                out += " * ";
            const auto &s = syl_[i];
            out += s.gen >= 0 && static_cast<std::size_t>(s.gen) < names.size()
                       ? names[static_cast<std::size_t>(s.gen)]
                       : "s" + std::to_string(s.gen);
            if (s.exp != 1)
                out += "^" + std::to_string(s.exp);
        }
        return out;
    }

    friend bool operator==(const FreeWord &, const FreeWord &) = default;
    friend auto operator<=>(const FreeWord &a, const FreeWord &b) { return a.syl_ <=> b.syl_; }

private:
    void push(Syllable s)
    {
        if (s.exp == 0)
            return;
        if (!syl_.empty() && syl_.back().gen == s.gen) {
            syl_.back().exp += s.exp;
            if (syl_.back().exp == 0)
                syl_.pop_back();
        } else {
            syl_.push_back(s);
        }
    }

    std::vector<Syllable> syl_;
};

inline FreeWord word_mul(const FreeWord &u, const FreeWord &v) { return u * v; }
inline FreeWord word_inv(const FreeWord &u) { return u.inverse(); }
inline FreeWord word_pow(const FreeWord &u, std::int64_t e) { return u.pow(e); }

/// [u, v] = u v u^-1 v^-1
inline FreeWord commutator(const FreeWord &u, const FreeWord &v)
{
    return u * v * u.inverse() * v.inverse();
}

/// Element of the group ring (Z/p^N)[F]: finitely many words with nonzero
/// coefficients.
class GroupRingElt {
public:
    GroupRingElt() = default;
    explicit GroupRingElt(const Modulus &m) : m_(m) {}
    GroupRingElt(const Modulus &m, const FreeWord &w, std::int64_t c = 1) : m_(m)
    {
        add_term(w, m.reduce(c));
    }

    const Modulus &modulus() const { return m_; }
    const std::map<FreeWord, std::uint64_t> &terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    PadicInt coeff(const FreeWord &w) const
    {
        auto it = terms_.find(w);
        return PadicInt::from_residue(m_, it == terms_.end() ? 0 : it->second);
    }

    void add_term(const FreeWord &w, std::uint64_t c)
    {
        if (c == 0)
            return;
        auto [it, fresh] = terms_.try_emplace(w, c);
        if (!fresh) {
            it->second = m_.add(it->second, c);
            if (it->second == 0)
                terms_.erase(it);
        }
    }

    friend GroupRingElt operator+(GroupRingElt a, const GroupRingElt &b)
    {
        a.absorb(b);
        for (const auto &[w, c] : b.terms_)
            a.add_term(w, c);
        return a;
    }
    friend GroupRingElt operator-(const GroupRingElt &a)
    {
        return a.m_.valid() ? a.scaled(a.m_.value() - 1) : a;
    }
    friend GroupRingElt operator-(const GroupRingElt &a, const GroupRingElt &b) { return a + (-b); }

    GroupRingElt scaled(std::uint64_t c) const
    {
        GroupRingElt r(m_);
        if (c == 0)
            return r;
        for (const auto &[w, x] : terms_)
            r.add_term(w, m_.mul(x, c));
        return r;
    }

    /// w * e
    GroupRingElt mul_word_left(const FreeWord &w) const
    {
        GroupRingElt r(m_);
        for (const auto &[u, c] : terms_)
            r.add_term(w * u, c);
        return r;
    }
    /// e * w
    GroupRingElt mul_word_right(const FreeWord &w) const
    {
        GroupRingElt r(m_);
        for (const auto &[u, c] : terms_)
            r.add_term(u * w, c);
        return r;
    }

    friend GroupRingElt operator*(const GroupRingElt &a, const GroupRingElt &b)
    {
        require_same(a.m_, b.m_);
        GroupRingElt r(a.m_);
        for (const auto &[u, c] : a.terms_)
            for (const auto &[v, d] : b.terms_)
                r.add_term(u * v, a.m_.mul(c, d));
        return r;
    }

    friend bool operator==(const GroupRingElt &a, const GroupRingElt &b)
    {
        return a.m_ == b.m_ && a.terms_ == b.terms_;
    }

    std::string to_string(std::span<const std::string> names) const
    {
        if (terms_.empty())
            return "0";
        std::string out;
        bool first = true;
        for (const auto &[w, c] : terms_) {
            std::int64_t b = m_.balanced(c);
            if (!first)
                out += b < 0 ? " - " : " + ";
            else if (b < 0)
                out += "-";
            first = false;
            std::int64_t mag = b < 0 ? -b : b;
            if (mag != 1)
                out += std::to_string(mag) + "*";
            out += w.empty() ? "1" : "(" + w.to_string(names) + ")";
        }
        return out;
    }

private:
    void absorb(const GroupRingElt &b)
    {
        if (!m_.valid())
            m_ = b.m_;
        else if (b.m_.valid())
            require_same(m_, b.m_);
    }

    Modulus m_;
    std::map<FreeWord, std::uint64_t> terms_;
};

inline GroupRingElt gr_add(const GroupRingElt &a, const GroupRingElt &b) { return a + b; }
inline GroupRingElt gr_scale(const GroupRingElt &a, const PadicInt &c)
{
    require_same(a.modulus(), c.modulus());
    return a.scaled(c.residue());
}
inline GroupRingElt gr_mul_word_left(const FreeWord &w, const GroupRingElt &e) { return e.mul_word_left(w); }
inline GroupRingElt gr_mul(const GroupRingElt &a, const GroupRingElt &b) { return a * b; }

} // namespace defring
