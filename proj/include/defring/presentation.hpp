#pragma once
// Annotated pro-p presentations: generators carry a block (X_inf or the
// Gamma section), a character of A and a projection to Gamma; the image
// shape of each generator under the universal representation follows.

#include "defring/freegroup.hpp"
#include "defring/padic.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace defring {

/// Structurally invalid input (bad counts, forbidden shapes, bad ties).
class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class Block { Xinf, Gamma };

enum class ImageShape {
    Scalar,         ///< diag(1+Y, 1+Y)
    Diagonal,       ///< diag(1+Y, 1+Y')
    Upper,          ///< [[1, Y], [0, 1]]
    UpperPinned,    ///< [[1, 1], [0, 1]]
    Lower,          ///< [[1, 0], [Y, 1]]
    Identity,
};

inline unsigned variable_count(ImageShape s)
{
    switch (s) {
    case ImageShape::Diagonal:
        return 2;
    case ImageShape::Scalar:
    case ImageShape::Upper:
    case ImageShape::Lower:
        return 1;
    default:
        return 0;
    }
}

inline const char *to_string(ImageShape s)
{
    switch (s) {
    case ImageShape::Scalar:
        return "scalar";
    case ImageShape::Diagonal:
        return "diagonal";
    case ImageShape::Upper:
        return "upper";
    case ImageShape::UpperPinned:
        return "pinned";
    case ImageShape::Lower:
        return "lower";
    case ImageShape::Identity:
        return "identity";
    }
    return "?";
}

inline const char *to_string(Block b) { return b == Block::Xinf ? "Xinf" : "Gamma"; }

/// The pair (chi1, chi2) of diagonal characters of the residual
/// representation. Either both are powers of omega, or both are kept
/// symbolic with a declared parity.
struct DiagChars {
    bool symbolic = false;
    std::int64_t m1 = 0, m2 = 1; // omega exponents
    bool chi1_odd = false, chi2_odd = true;

    friend bool operator==(const DiagChars &, const DiagChars &) = default;
};

/// A character of A written as omega^m * chi1^a * chi2^b, or an unnamed
/// nontrivial character of known parity.
struct CharExpr {
    std::int64_t omega = 0, a = 0, b = 0;
    enum class Opaque { None, Odd, Even } opaque = Opaque::None;

    static CharExpr trivial() { return {}; }
    static CharExpr upper() { return {0, 1, -1, Opaque::None}; }
    static CharExpr lower() { return {0, -1, 1, Opaque::None}; }
    static CharExpr omega_pow(std::int64_t m) { return {m, 0, 0, Opaque::None}; }

    friend bool operator==(const CharExpr &, const CharExpr &) = default;

    std::string to_string() const
    {
        if (opaque == Opaque::Odd)
            return "odd";
        if (opaque == Opaque::Even)
            return "even";
        std::string out;
        auto part = [&](const char *name, std::int64_t e) {
            if (e == 0)
                return;
            if (!out.empty())
                out += "*";
            out += name;
            if (e != 1)
                out += "^" + std::to_string(e);
        };
        part("omega", omega);
        part("chi1", a);
        part("chi2", b);
        return out.empty() ? "trivial" : out;
    }
};

namespace detail {

inline std::int64_t mod_floor(std::int64_t a, std::int64_t m)
{
    std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

// What the shape rules need to know about a character.
struct CharFacts {
    bool trivial = false;
    bool odd = false;
    bool is_upper = false; // chi1 chi2^-1
    bool is_lower = false; // chi2 chi1^-1
};

inline CharFacts char_facts(const CharExpr &c, const DiagChars &d, std::uint64_t p)
{
    CharFacts f;
    if (c.opaque != CharExpr::Opaque::None) {
        f.odd = c.opaque == CharExpr::Opaque::Odd;
        return f;
    }
    if (d.symbolic) {
        if (c.omega != 0)
            throw ValidationError("character " + c.to_string() +
                                  " uses omega but chi1/chi2 are symbolic");
        f.trivial = c.a == 0 && c.b == 0;
        std::int64_t par = (d.chi1_odd ? c.a : 0) + (d.chi2_odd ? c.b : 0);
        f.odd = mod_floor(par, 2) == 1;
        f.is_upper = c.a == 1 && c.b == -1;
        f.is_lower = c.a == -1 && c.b == 1;
        return f;
    }
    const auto order = static_cast<std::int64_t>(p - 1);
    std::int64_t v = mod_floor(c.omega + c.a * d.m1 + c.b * d.m2, order);
    f.trivial = v == 0;
    f.odd = v % 2 == 1;
    f.is_upper = v == mod_floor(d.m1 - d.m2, order);
    f.is_lower = v == mod_floor(d.m2 - d.m1, order);
    return f;
}

} // namespace detail

/// Empty when (chi1, chi2) is an odd pair with chi1 != +-chi2.
inline std::optional<std::string> borel_violation(const DiagChars &d, std::uint64_t p)
{
    if (d.symbolic) {
        if (d.chi1_odd == d.chi2_odd)
            return "chi1*chi2 must be odd (exactly one of chi1, chi2 odd)";
        return std::nullopt;
    }
    const auto order = static_cast<std::int64_t>(p - 1);
    std::int64_t m1 = detail::mod_floor(d.m1, order), m2 = detail::mod_floor(d.m2, order);
    if (m1 == m2)
        return "chi1 = chi2: not in the Borel case";
    if (m1 == detail::mod_floor(m2 + order / 2, order))
        return "chi1 = -chi2 (differ by the quadratic character): not in the Borel case";
    if ((m1 + m2) % 2 == 0)
        return "chi1*chi2 must be odd";
    return std::nullopt;
}

/// Shape of the universal image of a generator with character chi.
/// `commutes` asserts the generator commutes with the pinned generator.
inline ImageShape classify_image(const CharExpr &chi, bool commutes, const DiagChars &diag,
                                 std::uint64_t p)
{
    if (auto why = borel_violation(diag, p))
        throw ValidationError(*why);
    auto f = detail::char_facts(chi, diag, p);
    if (f.trivial)
        return commutes ? ImageShape::Scalar : ImageShape::Diagonal;
    if (!f.odd)
        return ImageShape::Identity;
    if (f.is_upper)
        return ImageShape::Upper;
    if (f.is_lower)
        // a lower unipotent commuting with [[1,1],[0,1]] is trivial
        return commutes ? ImageShape::Identity : ImageShape::Lower;
    return ImageShape::Identity;
}

struct GenMeta {
    std::string name;
    Block block = Block::Xinf;
    CharExpr chi;
    FreeWord pi; ///< over Presentation::gamma_letters; empty for X_inf
    bool pinned = false;
    bool commutes = false;
    ImageShape shape = ImageShape::Identity; ///< derived

    friend bool operator==(const GenMeta &, const GenMeta &) = default;
};

struct Relation {
    std::string name;
    FreeWord word; ///< over generator indices

    friend bool operator==(const Relation &, const Relation &) = default;
};

/// Y_a = c * Y_b (1-based variable indices, as written by the user).
struct Tie {
    unsigned a = 0, b = 0;
    std::int64_t c = 0;

    friend bool operator==(const Tie &, const Tie &) = default;
};

struct Counts {
    unsigned d = 0, n = 0, k = 0;
    unsigned u_x = 0, v_x = 0;          // X_inf: scalars, scalars + uppers
    unsigned u_g = 0, v_g = 0, w_g = 0; // Gamma: diagonals, + uppers, + lowers
    unsigned x_lower = 0, pinned = 0;
};

struct Presentation {
    std::uint64_t p = 0;
    unsigned prec = 3;
    unsigned deg = 8;
    DiagChars diag;
    std::vector<std::string> gamma_letters;
    std::vector<GenMeta> gens;
    std::vector<Relation> relations;
    std::vector<Tie> ties;

    Modulus modulus() const { return Modulus(p, prec); }

    std::vector<std::string> names() const
    {
        std::vector<std::string> out;
        for (const auto &g : gens)
            out.push_back(g.name);
        return out;
    }

    int find(const std::string &name) const
    {
        for (std::size_t i = 0; i < gens.size(); ++i)
            if (gens[i].name == name)
                return static_cast<int>(i);
        return -1;
    }

    Counts counts() const
    {
        Counts c;
        c.d = static_cast<unsigned>(gens.size());
        for (const auto &g : gens) {
            if (g.block == Block::Xinf) {
                ++c.n;
                c.u_x += g.shape == ImageShape::Scalar;
                c.v_x += g.shape == ImageShape::Scalar || g.shape == ImageShape::Upper;
                c.x_lower += g.shape == ImageShape::Lower;
            } else {
                ++c.k;
                c.u_g += g.shape == ImageShape::Diagonal;
                c.v_g += g.shape == ImageShape::Diagonal || g.shape == ImageShape::Upper;
                c.w_g += g.shape == ImageShape::Diagonal || g.shape == ImageShape::Upper ||
                         g.shape == ImageShape::Lower;
            }
            c.pinned += g.pinned;
        }
        return c;
    }

    /// Image of a word in the free group on gamma_letters.
    FreeWord project_to_gamma(const FreeWord &w) const
    {
        FreeWord out;
        for (const auto &s : w.syllables())
            out = out * gens.at(static_cast<std::size_t>(s.gen)).pi.pow(s.exp);
        return out;
    }

    friend bool operator==(const Presentation &, const Presentation &) = default;
};

/// Recomputes every generator's shape from its character and flags.
inline void assign_shapes(Presentation &pres)
{
    for (auto &g : pres.gens) {
        g.shape = classify_image(g.chi, g.commutes, pres.diag, pres.p);
        if (g.pinned && g.shape == ImageShape::Upper)
            g.shape = ImageShape::UpperPinned;
    }
}

namespace detail {

inline int shape_rank(const GenMeta &g)
{
    if (g.block == Block::Xinf) {
        switch (g.shape) {
        case ImageShape::Scalar:
            return 0;
        case ImageShape::Upper:
            return 1;
        case ImageShape::Lower:
            return 2;
        case ImageShape::Identity:
            return 3;
        case ImageShape::Diagonal:
            return 4;
        case ImageShape::UpperPinned:
            return 5;
        }
    }
    switch (g.shape) {
    case ImageShape::Diagonal:
        return 0;
    case ImageShape::Scalar:
        return 1;
    case ImageShape::Upper:
        return 2;
    case ImageShape::Lower:
        return 3;
    case ImageShape::Identity:
        return 4;
    case ImageShape::UpperPinned:
        return 5;
    }
    return 6;
}

} // namespace detail

/// Stable sort into the special order (X_inf block first; inside each block
/// by shape class, the pinned generator last in X_inf), relabelling relation
/// words, then renumbering Gamma letters by first appearance so that the
/// diagonal generator's letter becomes T_1.
inline void normalize(Presentation &pres)
{
    assign_shapes(pres);
    std::vector<int> order(pres.gens.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
        const auto &gx = pres.gens[static_cast<std::size_t>(x)];
        const auto &gy = pres.gens[static_cast<std::size_t>(y)];
        if (gx.block != gy.block)
            return gx.block == Block::Xinf;
        return detail::shape_rank(gx) < detail::shape_rank(gy);
    });
    std::vector<int> new_index(order.size());
    std::vector<GenMeta> sorted;
    for (std::size_t i = 0; i < order.size(); ++i) {
        new_index[static_cast<std::size_t>(order[i])] = static_cast<int>(i);
        sorted.push_back(pres.gens[static_cast<std::size_t>(order[i])]);
    }
    pres.gens = std::move(sorted);
    for (auto &r : pres.relations)
        r.word = r.word.relabel(new_index);

    std::vector<int> letter_map(pres.gamma_letters.size(), -1);
    std::vector<std::string> letters;
    for (const auto &g : pres.gens)
        for (const auto &s : g.pi.syllables()) {
            auto &slot = letter_map.at(static_cast<std::size_t>(s.gen));
            if (slot < 0) {
                slot = static_cast<int>(letters.size());
                letters.push_back(pres.gamma_letters[static_cast<std::size_t>(s.gen)]);
            }
        }
    for (std::size_t i = 0; i < letter_map.size(); ++i)
        if (letter_map[i] < 0) {
            letter_map[i] = static_cast<int>(letters.size());
            letters.push_back(pres.gamma_letters[i]);
        }
    for (auto &g : pres.gens)
        g.pi = g.pi.relabel(letter_map);
    pres.gamma_letters = std::move(letters);
}

enum class Severity {
    Error,    ///< unusable input
    Pipeline, ///< the Fox-matrix construction does not apply; the direct route is used
    Warning,
};

struct Violation {
    Severity severity = Severity::Error;
    std::string rule;
    std::string message;
};

inline const char *to_string(Severity s)
{
    switch (s) {
    case Severity::Error:
        return "error";
    case Severity::Pipeline:
        return "pipeline";
    case Severity::Warning:
        return "warning";
    }
    return "?";
}

struct Variable {
    std::string name;   ///< "Y_3"
    std::string source; ///< generator name
    std::string role;   ///< scalar, upper, lower, diagonal-1, diagonal-2
    int gen = -1;
};

struct VariableTable {
    std::vector<Variable> vars;
    std::vector<int> first; ///< per generator: index of its first variable or -1
    unsigned d_prime() const { return static_cast<unsigned>(vars.size()); }
};

/// Y-variable assignment: X_inf scalars, X_inf uppers, Gamma diagonal pairs,
/// Gamma uppers, Gamma lowers, X_inf lowers.
inline VariableTable allocate_variables(const Presentation &pres)
{
    VariableTable t;
    t.first.assign(pres.gens.size(), -1);
    auto take = [&](Block block, ImageShape shape) {
        for (std::size_t i = 0; i < pres.gens.size(); ++i) {
            const auto &g = pres.gens[i];
            if (g.block != block || g.shape != shape)
                continue;
            t.first[i] = static_cast<int>(t.vars.size());
            const char *role = to_string(shape);
            if (shape == ImageShape::Diagonal) {
                t.vars.push_back({"Y_" + std::to_string(t.vars.size() + 1), g.name, "diagonal-1",
                                  static_cast<int>(i)});
                t.vars.push_back({"Y_" + std::to_string(t.vars.size() + 1), g.name, "diagonal-2",
                                  static_cast<int>(i)});
            } else {
                t.vars.push_back({"Y_" + std::to_string(t.vars.size() + 1), g.name, role,
                                  static_cast<int>(i)});
            }
        }
    };
    take(Block::Xinf, ImageShape::Scalar);
    take(Block::Xinf, ImageShape::Upper);
    take(Block::Gamma, ImageShape::Diagonal);
    take(Block::Gamma, ImageShape::Upper);
    take(Block::Gamma, ImageShape::Lower);
    take(Block::Xinf, ImageShape::Lower);
    return t;
}

/// Everything wrong with a presentation, most severe first. The Pipeline
/// entries explain why the Fox-matrix route is unavailable.
inline std::vector<Violation> validate(const Presentation &pres)
{
    std::vector<Violation> out;
    auto err = [&](std::string rule, std::string msg) {
        out.push_back({Severity::Error, std::move(rule), std::move(msg)});
    };
    auto pipe = [&](std::string rule, std::string msg) {
        out.push_back({Severity::Pipeline, std::move(rule), std::move(msg)});
    };

    try {
        Modulus m(pres.p, pres.prec);
        (void)m;
    } catch (const ArithmeticError &e) {
        err("coefficients", e.what());
        return out;
    }
    if (pres.deg < 1)
        err("coefficients", "degree cap must be at least 1");
    if (auto why = borel_violation(pres.diag, pres.p)) {
        err("borel", *why);
        return out;
    }

    // shapes must be the derived ones
    Presentation fresh = pres;
    try {
        assign_shapes(fresh);
    } catch (const ValidationError &e) {
        err("character", e.what());
        return out;
    }
    for (std::size_t i = 0; i < pres.gens.size(); ++i)
        if (fresh.gens[i].shape != pres.gens[i].shape)
            err("shape", "generator " + pres.gens[i].name + " has stale shape " +
                             to_string(pres.gens[i].shape));

    std::map<std::string, int> seen;
    for (const auto &g : pres.gens)
        if (seen[g.name]++ == 1)
            err("names", "generator " + g.name + " declared twice");

    const auto c = pres.counts();
    if (c.n + c.k != c.d)
        err("counts", "n + k != d");
    if (c.pinned > 1)
        err("pinned", "at most one pinned generator is allowed, found " + std::to_string(c.pinned));

    int prev_block = 0, prev_rank = -1;
    for (const auto &g : pres.gens) {
        int block = g.block == Block::Xinf ? 0 : 1;
        int rank = detail::shape_rank(g);
        if (block < prev_block || (block == prev_block && rank < prev_rank))
            err("order", "generator " + g.name + " is out of the special order");
        if (block != prev_block)
            prev_rank = -1;
        prev_block = block;
        prev_rank = std::max(prev_rank, rank);

        if (g.block == Block::Xinf && !g.pi.empty())
            err("projection", "X_inf generator " + g.name + " must project trivially to Gamma");
        if (g.block == Block::Gamma && g.pi.empty())
            err("projection", "Gamma generator " + g.name + " needs a nontrivial pi image");
        if (g.pinned && g.block != Block::Xinf)
            err("pinned", "pinned generator " + g.name + " must lie in the X_inf block");
        if (g.pinned && g.shape != ImageShape::UpperPinned)
            err("pinned", "pinned generator " + g.name + " must carry the character chi1*chi2^-1");
        if (g.block == Block::Xinf && g.shape == ImageShape::Diagonal)
            err("shape", "X_inf generator " + g.name +
                             " has trivial character without commuting with the pinned "
                             "generator; mark it `commutes` or change its character");
        if (g.block == Block::Gamma && g.shape == ImageShape::Scalar)
            err("shape", "Gamma generator " + g.name + " with trivial character must be diagonal");
    }
    if (c.u_g > 1)
        err("diagonal", "at most one diagonal generator in the Gamma block (u_Gamma <= 1), found " +
                            std::to_string(c.u_g));

    for (const auto &r : pres.relations) {
        bool known = true;
        for (const auto &s : r.word.syllables())
            known = known && s.gen >= 0 && static_cast<std::size_t>(s.gen) < pres.gens.size();
        if (!known) {
            err("relation", "relation " + r.name + " uses an unknown generator");
            continue;
        }
        FreeWord img = pres.project_to_gamma(r.word);
        if (!img.empty())
            err("relation", "relation " + r.name + " projects to " +
                                img.to_string(pres.gamma_letters) +
                                " in Gamma, which is free; relations must lie in the kernel");
    }

    const unsigned dprime = allocate_variables(pres).d_prime();
    for (const auto &t : pres.ties) {
        if (t.a < 1 || t.b < 1 || t.a > dprime || t.b > dprime)
            err("tie", "tie Y_" + std::to_string(t.a) + " = c*Y_" + std::to_string(t.b) +
                           " names a variable outside Y_1..Y_" + std::to_string(dprime));
        else if (t.a == t.b)
            err("tie", "tie relates Y_" + std::to_string(t.a) + " to itself");
    }

    // conditions of the Fox-matrix construction
    if (c.u_g == 0)
        pipe("diagonal", "no diagonal generator in the Gamma block (u_Gamma = 0)");
    if (c.w_g != c.v_g)
        pipe("gamma-lower", "w_Gamma != v_Gamma: a Gamma generator has a lower unipotent image");
    if (c.x_lower > 0)
        pipe("xinf-lower", "an X_inf generator has a lower unipotent image");
    if (c.pinned == 0)
        pipe("pinned", "no pinned generator");
    std::vector<int> letters_used;
    for (const auto &g : pres.gens) {
        if (g.block != Block::Gamma)
            continue;
        const auto &syl = g.pi.syllables();
        if (syl.size() != 1 || syl[0].exp != 1) {
            pipe("gamma-section", "Gamma generator " + g.name + " does not map to a single letter");
            continue;
        }
        if (std::find(letters_used.begin(), letters_used.end(), syl[0].gen) != letters_used.end())
            pipe("gamma-section", "two Gamma generators share the letter " +
                                      pres.gamma_letters[static_cast<std::size_t>(syl[0].gen)]);
        letters_used.push_back(syl[0].gen);
    }
    if (!pres.gens.empty() && c.u_g == 1 && pres.gens[c.n].shape == ImageShape::Diagonal) {
        const auto &syl = pres.gens[c.n].pi.syllables();
        if (syl.size() == 1 && syl[0].gen != 0)
            pipe("gamma-section", "the diagonal generator's letter is not the first Gamma letter");
    }
    std::stable_sort(out.begin(), out.end(),
                     [](const Violation &x, const Violation &y) { return x.severity < y.severity; });
    return out;
}

inline bool has_errors(const std::vector<Violation> &v)
{
    return std::any_of(v.begin(), v.end(), [](const Violation &x) { return x.severity == Severity::Error; });
}

inline bool fox_route_available(const std::vector<Violation> &v)
{
    return std::none_of(v.begin(), v.end(), [](const Violation &x) { return x.severity != Severity::Warning; });
}

/// Throws ValidationError listing every Error-level violation.
inline void require_valid(const Presentation &pres)
{
    auto v = validate(pres);
    if (!has_errors(v))
        return;
    std::string msg = "invalid presentation:";
    for (const auto &x : v)
        if (x.severity == Severity::Error)
            msg += "\n  [" + x.rule + "] " + x.message;
    throw ValidationError(msg);
}

// ---------------------------------------------------------------------------
// Builders

/// A place of S outside S_0. The distinguished place w has q = p and
/// supplies gamma and the pinned t_w.
struct PlaceSpec {
    std::string name;
    enum class Kind { Tame, Wild } kind = Kind::Tame;
    std::int64_t q = 0;
    std::int64_t q_prime = 1;
    unsigned n_v = 1; ///< wild places: number of (s, t) pairs
    bool distinguished = false;
    CharExpr chi_t = CharExpr::upper();
    CharExpr chi_s = CharExpr::upper();
    std::vector<CharExpr> chi_extra; ///< wild pairs 2..n_v, (s, t) alternating; default upper
};

struct WingbergSpec {
    std::uint64_t p = 5;
    unsigned prec = 3, deg = 8;
    DiagChars diag{false, 0, 1};
    std::vector<PlaceSpec> places;
    std::vector<CharExpr> free_chars; ///< one per free generator s_f1, s_f2, ...
};

namespace detail {

inline unsigned p_valuation(std::int64_t x, std::uint64_t p)
{
    unsigned v = 0;
    auto pp = static_cast<std::int64_t>(p);
    while (x != 0 && x % pp == 0) {
        x /= pp;
        ++v;
    }
    return v;
}

inline bool is_power_of(std::int64_t x, std::uint64_t p)
{
    if (x < 1)
        return false;
    auto pp = static_cast<std::int64_t>(p);
    while (x % pp == 0)
        x /= pp;
    return x == 1;
}

} // namespace detail

/// Wingberg presentation after the good-generator change s'_v = gamma^-q'_v s_v.
inline Presentation build_wingberg(const WingbergSpec &spec)
{
    Presentation pres;
    pres.p = spec.p;
    pres.prec = spec.prec;
    pres.deg = spec.deg;
    pres.diag = spec.diag;
    pres.gamma_letters = {"gamma"};

    const PlaceSpec *w = nullptr;
    for (const auto &pl : spec.places)
        if (pl.distinguished) {
            if (w)
                throw ValidationError("more than one distinguished place");
            w = &pl;
        }
    if (!w)
        throw ValidationError("no distinguished place");
    if (w->q != static_cast<std::int64_t>(spec.p))
        throw ValidationError("distinguished place " + w->name + " must have q = p");

    auto add_gen = [&](std::string name, Block block, CharExpr chi, bool pinned = false) {
        GenMeta g;
        g.name = std::move(name);
        g.block = block;
        g.chi = chi;
        g.pinned = pinned;
        if (block == Block::Gamma)
            g.pi = FreeWord::letter(0);
        pres.gens.push_back(std::move(g));
        return static_cast<int>(pres.gens.size() - 1);
    };
    auto L = [](int i, std::int64_t e = 1) { return FreeWord::letter(i, e); };

    for (std::size_t i = 0; i < spec.free_chars.size(); ++i)
        add_gen("s_f" + std::to_string(i + 1), Block::Xinf, spec.free_chars[i]);

    const int g = add_gen("g", Block::Gamma, CharExpr::trivial());
    const int tw = add_gen("t_" + w->name, Block::Xinf, CharExpr::upper(), true);
    pres.relations.push_back({"r_" + w->name, L(tw).pow(w->q) * commutator(L(tw), L(g))});

    for (const auto &pl : spec.places) {
        if (pl.distinguished)
            continue;
        if (!detail::is_power_of(pl.q, spec.p))
            throw ValidationError("place " + pl.name + ": q = " + std::to_string(pl.q) +
                                  " is not a power of p");
        if (pl.q_prime < 1)
            throw ValidationError("place " + pl.name + ": q' must be positive");
        if (pl.kind == PlaceSpec::Kind::Tame &&
            detail::p_valuation(pl.q_prime, spec.p) + 1 != detail::p_valuation(pl.q, spec.p))
            throw ValidationError("place " + pl.name + ": q' must have the valuation of q/p");
        const int t = add_gen("t_" + pl.name, Block::Xinf, pl.chi_t);
        const int sp = add_gen("sp_" + pl.name, Block::Xinf, pl.chi_s);
        FreeWord rel = L(t).pow(pl.q) * commutator(L(t), L(g, pl.q_prime) * L(sp));
        if (pl.kind == PlaceSpec::Kind::Wild) {
            for (unsigned i = 2; i <= pl.n_v; ++i) {
                std::size_t slot = 2 * (i - 2);
                CharExpr cs = slot < pl.chi_extra.size() ? pl.chi_extra[slot] : CharExpr::upper();
                CharExpr ct = slot + 1 < pl.chi_extra.size() ? pl.chi_extra[slot + 1] : CharExpr::upper();
                const int si = add_gen("s_" + pl.name + "_" + std::to_string(i), Block::Xinf, cs);
                const int ti = add_gen("t_" + pl.name + "_" + std::to_string(i), Block::Xinf, ct);
                rel = rel * commutator(L(ti), L(si));
            }
        }
        pres.relations.push_back({"r_" + pl.name, rel});
    }
    normalize(pres);
    return pres;
}

/// A free inertia generator t_q added to a presentation.
struct TameGenSpec {
    std::string name;
    CharExpr chi;
    bool pinned = false;
    bool commutes = false;
};

/// Appends free X_inf generators (no new relations) and re-derives shapes
/// and the special order.
inline Presentation build_neumann_augmented(const Presentation &base, const std::vector<TameGenSpec> &extra)
{
    Presentation pres = base;
    for (const auto &t : extra) {
        if (pres.find(t.name) >= 0)
            throw ValidationError("generator " + t.name + " already present");
        GenMeta g;
        g.name = t.name;
        g.block = Block::Xinf;
        g.chi = t.chi;
        g.pinned = t.pinned;
        g.commutes = t.commutes;
        pres.gens.push_back(std::move(g));
    }
    normalize(pres);
    return pres;
}

} // namespace defring
