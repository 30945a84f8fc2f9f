#pragma once
// Fox derivatives in the free group ring and their images in the Magnus
// algebra of Gamma.

#include "defring/freegroup.hpp"
#include "defring/presentation.hpp"
#include "defring/series.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace defring {

/// Memoized Fox derivatives d/ds_gen of words over a fixed coefficient ring.
class FoxDeriver {
public:
    explicit FoxDeriver(const Modulus &m) : m_(m) {}

    GroupRingElt derive(const FreeWord &w, int gen)
    {
        const auto &syl = w.syllables();
        if (syl.empty())
            return GroupRingElt(m_);
        if (syl.size() == 1)
            return derive_syllable(syl[0], gen);
        auto key = std::make_pair(w, gen);
        if (auto it = cache_.find(key); it != cache_.end())
            return it->second;
        // d(uv) = du + u dv, split in the middle so halves are reused
        std::size_t mid = syl.size() / 2;
        FreeWord u = FreeWord::from_syllables(std::span(syl).first(mid));
        FreeWord v = FreeWord::from_syllables(std::span(syl).subspan(mid));
        GroupRingElt out = derive(u, gen) + derive(v, gen).mul_word_left(u);
        cache_.emplace(std::move(key), out);
        return out;
    }

    std::size_t cache_size() const { return cache_.size(); }

private:
    GroupRingElt derive_syllable(const Syllable &s, int gen) const
    {
        GroupRingElt out(m_);
        if (s.gen != gen)
            return out;
        if (s.exp > 0) {
            for (std::int64_t i = 0; i < s.exp; ++i)
                out.add_term(FreeWord::letter(gen, i), 1);
        } else {
            for (std::int64_t i = 1; i <= -s.exp; ++i)
                out.add_term(FreeWord::letter(gen, -i), m_.neg(1));
        }
        return out;
    }

    Modulus m_;
    std::map<std::pair<FreeWord, int>, GroupRingElt> cache_;
};

inline GroupRingElt fox_derivative(const FreeWord &w, int gen, const Modulus &m)
{
    FoxDeriver d(m);
    return d.derive(w, gen);
}

/// pi on generators: each generator's image word over k Gamma letters.
struct Projection {
    std::vector<FreeWord> images;
    unsigned k = 1;

    static Projection of(const Presentation &pres)
    {
        Projection pr;
        for (const auto &g : pres.gens)
            pr.images.push_back(g.pi);
        pr.k = std::max<unsigned>(1, static_cast<unsigned>(pres.gamma_letters.size()));
        return pr;
    }

    FreeWord apply(const FreeWord &w) const
    {
        FreeWord out;
        for (const auto &s : w.syllables())
            out = out * images.at(static_cast<std::size_t>(s.gen)).pow(s.exp);
        return out;
    }
};

inline MagnusSeries gamma_embed(const FreeWord &w, const Modulus &m, unsigned k, unsigned cap)
{
    GammaWord gw;
    for (const auto &s : w.syllables())
        gw.emplace_back(s.gen, s.exp);
    return gamma_embed(gw, m, k, cap);
}

/// Linear extension of w -> Magnus image of pi(w).
inline MagnusSeries project(const GroupRingElt &e, const Projection &pr, unsigned cap)
{
    const Modulus &m = e.modulus();
    MagnusSeries out(m, pr.k, cap);
    std::map<FreeWord, MagnusSeries> memo;
    for (const auto &[w, c] : e.terms()) {
        FreeWord img = pr.apply(w);
        auto it = memo.find(img);
        if (it == memo.end())
            it = memo.emplace(img, gamma_embed(img, m, pr.k, cap)).first;
        out += it->second.scaled(PadicInt::from_residue(m, c));
    }
    return out;
}

/// Rows are generators, columns relations.
struct FoxMatrix {
    unsigned rows = 0, cols = 0;
    std::vector<std::string> row_names, col_names;
    std::vector<MagnusSeries> entries; ///< row-major

    const MagnusSeries &at(unsigned i, unsigned j) const { return entries.at(std::size_t(i) * cols + j); }
};

inline FoxMatrix fox_matrix(const Presentation &pres)
{
    const Modulus m = pres.modulus();
    const Projection pr = Projection::of(pres);
    FoxMatrix fm;
    fm.rows = static_cast<unsigned>(pres.gens.size());
    fm.cols = static_cast<unsigned>(pres.relations.size());
    fm.row_names = pres.names();
    for (const auto &r : pres.relations)
        fm.col_names.push_back(r.name);
    fm.entries.assign(std::size_t(fm.rows) * fm.cols, MagnusSeries(m, pr.k, pres.deg));
    FoxDeriver d(m);
    for (unsigned j = 0; j < fm.cols; ++j)
        for (unsigned i = 0; i < fm.rows; ++i)
            fm.entries[std::size_t(i) * fm.cols + j] =
                project(d.derive(pres.relations[j].word, static_cast<int>(i)), pr, pres.deg);
    return fm;
}

/// The first n rows (the X_inf generators).
inline FoxMatrix restrict_to_xinf(const FoxMatrix &fm, unsigned n)
{
    if (n > fm.rows)
        throw ValidationError("restrict_to_xinf: n = " + std::to_string(n) + " exceeds the " +
                              std::to_string(fm.rows) + " rows");
    FoxMatrix out;
    out.rows = n;
    out.cols = fm.cols;
    out.row_names.assign(fm.row_names.begin(), fm.row_names.begin() + n);
    out.col_names = fm.col_names;
    out.entries.assign(fm.entries.begin(), fm.entries.begin() + std::ptrdiff_t(n) * fm.cols);
    return out;
}

} // namespace defring
