#pragma once
// Shared helpers for the unit tests.

#include "defring/defring.hpp"
#include "defring_fixtures.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <random>
#include <string>
#include <tuple>
#include <vector>

namespace testing_support {

using boost::multiprecision::cpp_int;
using namespace defring;

inline std::mt19937_64 rng(std::uint64_t seed) { return std::mt19937_64(seed); }

inline std::int64_t uniform(std::mt19937_64 &g, std::int64_t lo, std::int64_t hi)
{
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(g);
}

inline cpp_int ipow(std::uint64_t p, unsigned e)
{
    cpp_int r = 1;
    for (unsigned i = 0; i < e; ++i)
        r *= p;
    return r;
}

inline std::uint64_t reduce(const cpp_int &x, const cpp_int &mod)
{
    cpp_int r = x % mod;
    if (r < 0)
        r += mod;
    return static_cast<std::uint64_t>(r);
}

/// Exact C(a, j) for any integer a.
inline cpp_int exact_binom(std::int64_t a, unsigned j)
{
    cpp_int num = 1, den = 1;
    for (unsigned i = 0; i < j; ++i) {
        num *= cpp_int(a) - i;
        den *= i + 1;
    }
    return num / den;
}

inline Presentation fixture(const std::string &name) { return parse_presentation(fixtures::get(name)); }

inline CommSeries Y(const Modulus &m, unsigned nvars, unsigned cap, unsigned i)
{
    return CommSeries::variable(m, nvars, cap, i);
}

/// Coefficient of a commutative monomial given as an exponent list.
inline std::int64_t ccoeff(const CommSeries &f, const std::vector<std::uint8_t> &e)
{
    return f.coeff(e).balanced();
}

/// Random reduced word over `ngens` letters.
inline FreeWord random_word(std::mt19937_64 &g, int ngens, int max_len, int max_exp)
{
    std::vector<Syllable> s;
    int len = static_cast<int>(uniform(g, 0, max_len));
    for (int i = 0; i < len; ++i) {
        std::int64_t e = 0;
        while (e == 0)
            e = uniform(g, -max_exp, max_exp);
        s.push_back({static_cast<int>(uniform(g, 0, ngens - 1)), e});
    }
    return FreeWord::from_syllables(s);
}

/// Random presentation that passes validation: one diagonal Gamma
/// generator, optional Gamma uppers, a pinned generator and assorted X_inf
/// generators; relations are products of X_inf letters and their
/// conjugates by Gamma generators, so they project trivially.
inline Presentation random_presentation(std::mt19937_64 &g)
{
    Presentation pres;
    const std::uint64_t primes[] = {5, 7, 11};
    pres.p = primes[uniform(g, 0, 2)];
    pres.prec = static_cast<unsigned>(uniform(g, 1, 4));
    pres.deg = static_cast<unsigned>(uniform(g, 1, 10));
    if (uniform(g, 0, 1)) {
        pres.diag.symbolic = true;
        bool odd1 = uniform(g, 0, 1) == 1;
        pres.diag.chi1_odd = odd1;
        pres.diag.chi2_odd = !odd1;
    } else {
        pres.diag.m1 = 0;
        pres.diag.m2 = 1;
    }
    auto pick_char = [&]() -> std::pair<CharExpr, bool> {
        switch (uniform(g, 0, 4)) {
        case 0:
            return {CharExpr::upper(), false};
        case 1:
            return {CharExpr::lower(), false};
        case 2:
            return {CharExpr::trivial(), true};
        case 3:
            return {CharExpr::lower(), true};
        default:
            if (pres.diag.symbolic)
                return {CharExpr{0, 0, 0, uniform(g, 0, 1) ? CharExpr::Opaque::Odd : CharExpr::Opaque::Even}, false};
        {
            auto e = uniform(g, -6, 12);
            bool trivial = e % static_cast<std::int64_t>(pres.p - 1) == 0;
            return {CharExpr::omega_pow(e), trivial || uniform(g, 0, 1) == 1};
        }
        }
    };
    int ngamma = static_cast<int>(uniform(g, 1, 3));
    for (int i = 0; i < ngamma; ++i)
        pres.gamma_letters.push_back("c" + std::to_string(i));
    std::vector<int> gamma_gens, x_gens;
    for (int i = 0; i < ngamma; ++i) {
        GenMeta m;
        m.name = "g" + std::to_string(i);
        m.block = Block::Gamma;
        m.chi = i == 0 ? CharExpr::trivial() : CharExpr::upper();
        m.pi = FreeWord::letter(i);
        gamma_gens.push_back(static_cast<int>(pres.gens.size()));
        pres.gens.push_back(m);
    }
    GenMeta pin;
    pin.name = "tw";
    pin.chi = CharExpr::upper();
    pin.pinned = true;
    x_gens.push_back(static_cast<int>(pres.gens.size()));
    pres.gens.push_back(pin);
    int nx = static_cast<int>(uniform(g, 0, 4));
    for (int i = 0; i < nx; ++i) {
        GenMeta m;
        m.name = "x" + std::to_string(i);
        std::tie(m.chi, m.commutes) = pick_char();
        x_gens.push_back(static_cast<int>(pres.gens.size()));
        pres.gens.push_back(m);
    }
    int nrel = static_cast<int>(uniform(g, 0, 3));
    for (int r = 0; r < nrel; ++r) {
        FreeWord w;
        int pieces = static_cast<int>(uniform(g, 1, 4));
        for (int i = 0; i < pieces; ++i) {
            auto x = FreeWord::letter(x_gens[static_cast<std::size_t>(uniform(g, 0, static_cast<std::int64_t>(x_gens.size()) - 1))],
                                      uniform(g, 1, 3) * (uniform(g, 0, 1) ? 1 : -1));
            if (uniform(g, 0, 1)) {
                auto c = FreeWord::letter(gamma_gens[static_cast<std::size_t>(uniform(g, 0, ngamma - 1))], uniform(g, 1, 5));
                x = c * x * c.inverse();
            }
            w = w * x;
        }
        pres.relations.push_back({"r" + std::to_string(r), w});
    }
    normalize(pres);
    unsigned dprime = allocate_variables(pres).d_prime();
    if (dprime >= 2 && uniform(g, 0, 1))
        pres.ties.push_back({1, dprime, uniform(g, -4, 4)});
    return pres;
}

} // namespace testing_support
