#pragma once
// Independent check of a ring presentation: evaluate the universal matrices
// on every relation word and test the entries of rho(r) - Id against I.

#include "defring/deform.hpp"
#include "defring/linalg.hpp"
#include "defring/matrix.hpp"

#include <string>
#include <vector>

namespace defring {

enum class ActionCase { Diagonal, Lower, Other };

struct LemmaCheck {
    std::string name;
    bool pass = false;
    std::string detail;
};

/// rho(s) rho(x) rho(s)^-1 rho(x)^-1 for generic images, compared with the
/// closed forms, at the given (p, N, D).
inline LemmaCheck check_action_lemma(ActionCase which, std::uint64_t p, unsigned prec, unsigned deg)
{
    const Modulus m(p, prec);
    // variables: Y, Y', U
    auto Y = CommSeries::variable(m, 3, deg, 0);
    auto Yp = CommSeries::variable(m, 3, deg, 1);
    auto U = CommSeries::variable(m, 3, deg, 2);
    auto one = Y.make_constant(1), zero = Y.make_constant(0);
    auto upper = MatRep::of(one, U, zero, one);
    auto comm = [](const MatRep &s, const MatRep &x) { return s * x * mat_inv(s) * mat_inv(x); };
    const std::vector<std::string> names{"Y", "Y'", "U"};
    LemmaCheck out;
    auto tag = " at p=" + std::to_string(p) + " N=" + std::to_string(prec) + " D=" + std::to_string(deg);

    switch (which) {
    case ActionCase::Diagonal: {
        out.name = "diagonal s, upper x" + tag;
        auto s = MatRep::of(one + Y, zero, zero, one + Yp);
        auto got = comm(s, upper);
        auto want = MatRep::of(one, ((one + Y) * unit_inv(one + Yp) - one) * U, zero, one);
        out.pass = got == want;
        out.detail = out.pass ? "matches" : "got " + got.to_string(names);
        break;
    }
    case ActionCase::Lower: {
        out.name = "lower s, upper x" + tag;
        auto s = MatRep::of(one, zero, Y, one);
        auto got = comm(s, upper);
        auto want = MatRep::of(one - Y * U, Y * U * U, -(Y * Y * U), Y * Y * U * U + Y * U + one);
        bool det_one = want.det() == one;
        out.pass = got == want && det_one;
        out.detail = got == want ? (det_one ? "matches, det = 1" : "det != 1: " + want.det().to_string(names))
                                 : "got " + got.to_string(names);
        break;
    }
    case ActionCase::Other: {
        out.name = "scalar s with upper/lower x" + tag;
        auto s = MatRep::of(one + Y, zero, zero, one + Y);
        auto lower = MatRep::of(one, zero, U, one);
        auto id = MatRep::identity(one);
        auto a = comm(s, upper), b = comm(s, lower);
        out.pass = a == id && b == id;
        out.detail = out.pass ? "identity" : "got " + a.to_string(names) + " and " + b.to_string(names);
        break;
    }
    }
    return out;
}

struct EntryCheck {
    std::string relation;
    int row = 0, col = 0; ///< 1-based
    std::string status;   ///< zero, generator, member, not-in-ideal
    std::string series;
};

struct RelationReport {
    bool ok = true;
    std::vector<EntryCheck> entries;
    std::vector<std::string> failures;
};

/// Every entry of rho(r_j) - Id must lie in I at truncation. Entries equal
/// to +-(a generator) are accepted before the linear solve.
inline RelationReport check_relations(const Presentation &pres, const RingPresentation &rp,
                                      const std::vector<MatRep> &images)
{
    RelationReport rep;
    const auto names = rp.var_names();
    auto zero = ring_zero(pres, rp.table);
    std::vector<CommSeries> gens = rp.ideal_series();
    std::vector<CommSeries> literal = gens;
    if (!pres.ties.empty())
        for (const auto &g : gens)
            literal.push_back(apply_ties(g, pres));
    TruncatedIdeal ideal(gens);

    for (const auto &r : pres.relations) {
        MatRep e = evaluate_word(r.word, images, zero);
        e(0, 0) -= zero.make_constant(1);
        e(1, 1) -= zero.make_constant(1);
        for (int a = 0; a < 2; ++a)
            for (int b = 0; b < 2; ++b) {
                const CommSeries &f = e(a, b);
                EntryCheck ec{r.name, a + 1, b + 1, "", f.to_string(names)};
                if (f.is_zero()) {
                    ec.status = "zero";
                } else if (std::any_of(literal.begin(), literal.end(),
                                       [&](const CommSeries &g) { return g == f || g == -f; })) {
                    ec.status = "generator";
                } else if (ideal.contains(f)) {
                    ec.status = "member";
                } else {
                    ec.status = "not-in-ideal";
                    rep.ok = false;
                    rep.failures.push_back("relation " + r.name + " entry (" + std::to_string(a + 1) + "," +
                                           std::to_string(b + 1) + "): " + ec.series + " is not in I mod (p^" +
                                           std::to_string(pres.prec) + ", deg > " + std::to_string(pres.deg) +
                                           ")");
                }
                rep.entries.push_back(std::move(ec));
            }
    }
    return rep;
}

inline RelationReport check_relations(const Presentation &pres, const RingPresentation &rp)
{
    return check_relations(pres, rp, universal_matrices(pres, rp.table));
}

} // namespace defring
