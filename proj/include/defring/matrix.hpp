#pragma once
// 2x2 matrices over truncated commutative series.

#include "defring/freegroup.hpp"
#include "defring/series.hpp"

#include <array>
#include <string>
#include <vector>

namespace defring {

struct MatRep {
    std::array<std::array<CommSeries, 2>, 2> e;

    CommSeries &operator()(int i, int j) { return e[std::size_t(i)][std::size_t(j)]; }
    const CommSeries &operator()(int i, int j) const { return e[std::size_t(i)][std::size_t(j)]; }

    static MatRep identity(const CommSeries &proto)
    {
        MatRep m;
        m(0, 0) = proto.make_constant(1);
        m(0, 1) = proto.make_constant(0);
        m(1, 0) = proto.make_constant(0);
        m(1, 1) = proto.make_constant(1);
        return m;
    }
    static MatRep of(const CommSeries &a, const CommSeries &b, const CommSeries &c, const CommSeries &d)
    {
        MatRep m;
        m(0, 0) = a;
        m(0, 1) = b;
        m(1, 0) = c;
        m(1, 1) = d;
        return m;
    }

    CommSeries det() const { return e[0][0] * e[1][1] - e[0][1] * e[1][0]; }

    friend bool operator==(const MatRep &, const MatRep &) = default;

    std::string to_string(std::span<const std::string> names) const
    {
        return "[[" + e[0][0].to_string(names) + ", " + e[0][1].to_string(names) + "], [" +
               e[1][0].to_string(names) + ", " + e[1][1].to_string(names) + "]]";
    }
};

inline MatRep mat_mul(const MatRep &a, const MatRep &b)
{
    MatRep r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            r(i, j) = a(i, 0) * b(0, j) + a(i, 1) * b(1, j);
    return r;
}

inline MatRep operator*(const MatRep &a, const MatRep &b) { return mat_mul(a, b); }

inline MatRep mat_inv(const MatRep &a)
{
    CommSeries d = a.det();
    if (!d.constant_term().is_unit())
        throw ArithmeticError("mat_inv: determinant is not a unit");
    CommSeries di = unit_inv(d);
    return MatRep::of(a(1, 1) * di, -(a(0, 1) * di), -(a(1, 0) * di), a(0, 0) * di);
}

inline MatRep mat_pow(const MatRep &a, std::int64_t e)
{
    if (e < 0)
        return mat_pow(mat_inv(a), -e);
    MatRep acc = MatRep::identity(a(0, 0));
    MatRep base = a;
    while (e) {
        if (e & 1)
            acc = acc * base;
        e >>= 1;
        if (e)
            base = base * base;
    }
    return acc;
}

/// rho(w) for a word over generators 0..images.size()-1.
inline MatRep evaluate_word(const FreeWord &w, const std::vector<MatRep> &images, const CommSeries &proto)
{
    MatRep acc = MatRep::identity(proto);
    for (const auto &s : w.syllables()) {
        if (s.gen < 0 || static_cast<std::size_t>(s.gen) >= images.size())
            throw ArithmeticError("evaluate_word: generator " + std::to_string(s.gen) + " has no image");
        acc = acc * mat_pow(images[static_cast<std::size_t>(s.gen)], s.exp);
    }
    return acc;
}

} // namespace defring
