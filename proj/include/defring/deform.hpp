#pragma once
// The ideal of relations I with R = Z_p[[Y_1..Y_d']]/I, the universal
// matrices, and the variable map between two presentations.

#include "defring/fox.hpp"
#include "defring/matrix.hpp"
#include "defring/presentation.hpp"
#include "defring/series.hpp"

#include <optional>
#include <set>
#include <string>
#include <vector>

namespace defring {

struct IdealGen {
    std::string relation;
    std::string family; ///< A, B, tie, or direct(i,j)
    CommSeries series;
};

struct RingPresentation {
    std::uint64_t p = 0;
    unsigned prec = 0, deg = 0;
    VariableTable table;
    std::string route; ///< "fox" or "direct"
    std::vector<IdealGen> ideal;
    std::vector<IdealGen> dropped; ///< generators that came out zero
    std::vector<std::string> warnings;

    unsigned d_prime() const { return table.d_prime(); }
    Modulus modulus() const { return Modulus(p, prec); }
    std::vector<std::string> var_names() const
    {
        std::vector<std::string> out;
        for (const auto &v : table.vars)
            out.push_back(v.name);
        return out;
    }
    std::vector<CommSeries> ideal_series() const
    {
        std::vector<CommSeries> out;
        for (const auto &g : ideal)
            out.push_back(g.series);
        return out;
    }
};

inline CommSeries ring_zero(const Presentation &pres, const VariableTable &t)
{
    return CommSeries(pres.modulus(), t.d_prime(), pres.deg);
}

inline CommSeries ring_var(const Presentation &pres, const VariableTable &t, int i)
{
    return CommSeries::variable(pres.modulus(), t.d_prime(), pres.deg, static_cast<unsigned>(i));
}

/// Index of the diagonal Gamma generator, or -1.
inline int diagonal_generator(const Presentation &pres)
{
    for (std::size_t i = 0; i < pres.gens.size(); ++i)
        if (pres.gens[i].block == Block::Gamma && pres.gens[i].shape == ImageShape::Diagonal)
            return static_cast<int>(i);
    return -1;
}

/// W = (1+Y_a)/(1+Y_b) - 1 for the diagonal pair (Y_a, Y_b).
inline CommSeries gamma_quotient(const Presentation &pres, const VariableTable &t)
{
    int g = diagonal_generator(pres);
    if (g < 0)
        throw ValidationError("no diagonal Gamma generator");
    int a = t.first[static_cast<std::size_t>(g)];
    auto one = ring_zero(pres, t).make_constant(1);
    return (one + ring_var(pres, t, a)) * unit_inv(one + ring_var(pres, t, a + 1)) - one;
}

/// Applies every tie Y_a -> c * Y_b, in order.
inline CommSeries apply_ties(const CommSeries &f, const Presentation &pres)
{
    CommSeries out = f;
    for (const auto &tie : pres.ties) {
        std::vector<CommSeries> images;
        for (unsigned i = 0; i < f.nvars(); ++i)
            images.push_back(f.make_variable(i));
        images[tie.a - 1] = f.make_variable(tie.b - 1).scaled(tie.c);
        out = compose(out, images);
    }
    return out;
}

/// Universal image of every generator (in presentation order).
inline std::vector<MatRep> universal_matrices(const Presentation &pres, const VariableTable &t,
                                              bool substitute_ties = true)
{
    auto zero = ring_zero(pres, t);
    auto one = zero.make_constant(1);
    std::vector<MatRep> out;
    for (std::size_t i = 0; i < pres.gens.size(); ++i) {
        int v = t.first[i];
        MatRep m;
        switch (pres.gens[i].shape) {
        case ImageShape::Scalar: {
            auto y = one + ring_var(pres, t, v);
            m = MatRep::of(y, zero, zero, y);
            break;
        }
        case ImageShape::Diagonal:
            m = MatRep::of(one + ring_var(pres, t, v), zero, zero, one + ring_var(pres, t, v + 1));
            break;
        case ImageShape::Upper:
            m = MatRep::of(one, ring_var(pres, t, v), zero, one);
            break;
        case ImageShape::UpperPinned:
            m = MatRep::of(one, one, zero, one);
            break;
        case ImageShape::Lower:
            m = MatRep::of(one, zero, ring_var(pres, t, v), one);
            break;
        case ImageShape::Identity:
            m = MatRep::identity(zero);
            break;
        }
        if (substitute_ties && !pres.ties.empty())
            for (auto &row : m.e)
                for (auto &x : row)
                    x = apply_ties(x, pres);
        out.push_back(std::move(m));
    }
    return out;
}

/// Image of a generator of A, diag(omega(a)^m1, omega(a)^m2), with omega(a)
/// the Teichmueller lift of the least primitive root. Only for omega-mode
/// characters.
inline std::optional<MatRep> a_image(const Presentation &pres, const VariableTable &t)
{
    if (pres.diag.symbolic)
        return std::nullopt;
    const Modulus m = pres.modulus();
    PadicInt w = teichmuller(m, static_cast<std::int64_t>(primitive_root(pres.p)));
    auto order = static_cast<std::int64_t>(pres.p - 1);
    auto e1 = static_cast<std::uint64_t>(detail::mod_floor(pres.diag.m1, order));
    auto e2 = static_cast<std::uint64_t>(detail::mod_floor(pres.diag.m2, order));
    auto zero = ring_zero(pres, t);
    auto c1 = CommSeries::constant(m, t.d_prime(), pres.deg, w.pow(e1));
    auto c2 = CommSeries::constant(m, t.d_prime(), pres.deg, w.pow(e2));
    return MatRep::of(c1, zero, zero, c2);
}

namespace detail {

// Evaluation of a Magnus entry at T_1 -> W, T_i -> 0; reports discarded
// monomials once per entry.
inline CommSeries eval_entry(const MagnusSeries &f, const CommSeries &w, const std::string &where,
                             std::vector<std::string> &warnings)
{
    std::vector<NcMonomial::key_type> dropped;
    CommSeries out = subst_T(f, w, &dropped);
    if (!dropped.empty()) {
        std::vector<std::string> names;
        for (unsigned i = 0; i < f.nvars(); ++i)
            names.push_back(NcMonomial::default_name(f.nvars(), i));
        warnings.push_back(where + ": " + std::to_string(dropped.size()) +
                           " monomial(s) involving T_2.. set to 0 (those letters act trivially), first " +
                           NcMonomial::render(dropped.front(), names));
    }
    return out;
}

} // namespace detail

/// Per relation: prod over scalar X_inf rows of (1+Y_i)^(a_i) - 1, a_i the
/// constant coefficient of the Fox entry.
inline std::vector<CommSeries> ideal_family_A(const FoxMatrix &restricted, const Presentation &pres,
                                              const VariableTable &t)
{
    auto one = ring_zero(pres, t).make_constant(1);
    std::vector<CommSeries> out;
    for (unsigned j = 0; j < restricted.cols; ++j) {
        CommSeries prod = one;
        for (unsigned i = 0; i < restricted.rows; ++i) {
            if (pres.gens[i].shape != ImageShape::Scalar)
                continue;
            PadicInt a = restricted.at(i, j).constant_term();
            prod = prod * pow_padic(one + ring_var(pres, t, t.first[i]), a);
        }
        out.push_back(prod - one);
    }
    return out;
}

/// Per relation: f_pinned(W) + sum over upper X_inf rows of f_i(W) * Y_i.
inline std::vector<CommSeries> ideal_family_B(const FoxMatrix &restricted, const Presentation &pres,
                                              const VariableTable &t, std::vector<std::string> &warnings)
{
    const CommSeries w = gamma_quotient(pres, t);
    std::vector<CommSeries> out;
    for (unsigned j = 0; j < restricted.cols; ++j) {
        CommSeries acc = ring_zero(pres, t);
        for (unsigned i = 0; i < restricted.rows; ++i) {
            const auto shape = pres.gens[i].shape;
            if (shape != ImageShape::UpperPinned && shape != ImageShape::Upper)
                continue;
            std::string where = "entry (" + restricted.row_names[i] + ", " + restricted.col_names[j] + ")";
            CommSeries f = detail::eval_entry(restricted.at(i, j), w, where, warnings);
            if (shape == ImageShape::Upper)
                f = f * ring_var(pres, t, t.first[i]);
            acc += f;
        }
        out.push_back(acc);
    }
    return out;
}

enum class Route { Auto, Direct };

/// Full pipeline. The Fox-matrix construction is used when its hypotheses
/// hold (and Route::Direct is not requested); otherwise the entries of
/// rho(r_j) - Id generate I directly.
inline RingPresentation ring_presentation(const Presentation &pres, Route route = Route::Auto)
{
    auto violations = validate(pres);
    if (has_errors(violations))
        require_valid(pres);

    RingPresentation rp;
    rp.p = pres.p;
    rp.prec = pres.prec;
    rp.deg = pres.deg;
    rp.table = allocate_variables(pres);
    const auto &t = rp.table;

    std::vector<IdealGen> gens;
    if (route == Route::Auto && fox_route_available(violations)) {
        rp.route = "fox";
        const auto c = pres.counts();
        if (pres.gamma_letters.size() > 1)
            rp.warnings.push_back("Gamma has " + std::to_string(pres.gamma_letters.size()) +
                                  " letters; only the diagonal generator's letter acts on X_inf, the others "
                                  "are evaluated at T_i = 0");
        FoxMatrix full = fox_matrix(pres);
        // the omitted Gamma rows vanish when pi(r) = 1 and Gamma letters are distinct
        for (unsigned i = c.n; i < full.rows; ++i)
            for (unsigned j = 0; j < full.cols; ++j)
                if (!full.at(i, j).is_zero())
                    rp.warnings.push_back("Fox entry (" + full.row_names[i] + ", " + full.col_names[j] +
                                          ") in an omitted Gamma row is nonzero");
        FoxMatrix m = restrict_to_xinf(full, c.n);
        auto famA = ideal_family_A(m, pres, t);
        auto famB = ideal_family_B(m, pres, t, rp.warnings);
        for (unsigned j = 0; j < m.cols; ++j) {
            gens.push_back({m.col_names[j], "A", famA[j]});
            gens.push_back({m.col_names[j], "B", famB[j]});
        }
    } else {
        rp.route = "direct";
        for (const auto &v : violations)
            if (v.severity == Severity::Pipeline)
                rp.warnings.push_back("Fox-matrix construction unavailable (" + v.message +
                                      "); ideal generated by the entries of rho(r) - Id");
        auto images = universal_matrices(pres, t, false);
        auto zero = ring_zero(pres, t);
        for (const auto &r : pres.relations) {
            MatRep e = evaluate_word(r.word, images, zero);
            e(0, 0) -= zero.make_constant(1);
            e(1, 1) -= zero.make_constant(1);
            for (int a = 0; a < 2; ++a)
                for (int b = 0; b < 2; ++b)
                    gens.push_back({r.name, "direct(" + std::to_string(a + 1) + "," + std::to_string(b + 1) + ")",
                                    e(a, b)});
        }
    }
    for (const auto &tie : pres.ties) {
        auto f = ring_var(pres, t, int(tie.a) - 1) - ring_var(pres, t, int(tie.b) - 1).scaled(tie.c);
        gens.push_back({"tie", "tie", f});
    }
    for (auto &g : gens) {
        if (g.series.is_zero()) {
            rp.dropped.push_back(std::move(g));
            continue;
        }
        if (g.series.constant_term().is_unit())
            rp.warnings.push_back("generator " + g.relation + "/" + g.family +
                                  " has a unit constant term: the input is inconsistent (rho-bar is not a "
                                  "deformation point)");
        rp.ideal.push_back(std::move(g));
    }
    return rp;
}

/// Text form "I = (...), R = Z_p[[Y_1, ..]]".
inline std::string ring_summary(const RingPresentation &rp)
{
    std::string vars;
    auto names = rp.var_names();
    for (std::size_t i = 0; i < names.size(); ++i)
        vars += (i ? ", " : "") + names[i];
    std::string ideal;
    for (std::size_t i = 0; i < rp.ideal.size(); ++i)
        ideal += (i ? ", " : "") + rp.ideal[i].series.to_string(names);
    return "I = (" + (ideal.empty() ? std::string("0") : ideal) + "), R = Z_p[[" + vars + "]]";
}

// ---------------------------------------------------------------------------

struct SurjectionReport {
    std::vector<std::pair<std::string, std::string>> mapping; ///< Y of G_S -> Y of G
    std::vector<std::string> kernel;                          ///< Y of G_S with no partner
    std::vector<std::string> kernel_sources;
    unsigned d_gs = 0, d_g = 0;
    unsigned g_gens_nonzero_mod_p = 0, gs_gens_nonzero_mod_p = 0;
    unsigned krull_lower_g = 0;  ///< d'_G - #(G generators nonzero mod p)
    unsigned krull_lower_gs = 0; ///< max of the above and the same count for G_S
    unsigned krull_upper_gs = 0; ///< d'_{G_S}
};

namespace detail {

inline unsigned nonzero_mod_p(const RingPresentation &rp)
{
    unsigned n = 0;
    for (const auto &g : rp.ideal) {
        bool any = false;
        for (const auto &[k, c] : g.series.terms())
            any = any || c % rp.p != 0;
        n += any;
    }
    return n;
}

} // namespace detail

/// Matches variables by (generator name, role). Every generator of G must
/// exist in G_S.
inline SurjectionReport compare_surjection(const Presentation &gs, const Presentation &g)
{
    if (gs.p != g.p)
        throw ValidationError("compare: the two presentations use different primes");
    for (const auto &gen : g.gens)
        if (gs.find(gen.name) < 0)
            throw ValidationError("compare: generator " + gen.name + " of G has no namesake in G_S");
    auto rp_gs = ring_presentation(gs);
    auto rp_g = ring_presentation(g);
    SurjectionReport rep;
    rep.d_gs = rp_gs.d_prime();
    rep.d_g = rp_g.d_prime();
    for (const auto &v : rp_gs.table.vars) {
        const Variable *partner = nullptr;
        for (const auto &w : rp_g.table.vars)
            if (w.source == v.source && w.role == v.role)
                partner = &w;
        if (partner) {
            rep.mapping.emplace_back(v.name, partner->name);
        } else {
            rep.kernel.push_back(v.name);
            rep.kernel_sources.push_back(v.source);
        }
    }
    rep.g_gens_nonzero_mod_p = detail::nonzero_mod_p(rp_g);
    rep.gs_gens_nonzero_mod_p = detail::nonzero_mod_p(rp_gs);
    auto sub = [](unsigned a, unsigned b) { return a > b ? a - b : 0u; };
    rep.krull_lower_g = sub(rep.d_g, rep.g_gens_nonzero_mod_p);
    rep.krull_lower_gs = std::max(rep.krull_lower_g, sub(rep.d_gs, rep.gs_gens_nonzero_mod_p));
    rep.krull_upper_gs = rep.d_gs;
    return rep;
}

} // namespace defring
