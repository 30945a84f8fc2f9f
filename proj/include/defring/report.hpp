#pragma once
// JSON and text renderings of the computed objects. Every report carries
// its (p, N, D) window.

#include "defring/deform.hpp"
#include "defring/fox.hpp"
#include "defring/verify.hpp"

#include <nlohmann/json.hpp>

#include <sstream>
#include <string>

namespace defring {

using ojson = nlohmann::ordered_json;

inline std::string window(std::uint64_t p, unsigned prec, unsigned deg)
{
    return "p = " + std::to_string(p) + ", N = " + std::to_string(prec) + ", D = " + std::to_string(deg) +
           " (coefficients mod " + std::to_string(p) + "^" + std::to_string(prec) + ", degree <= " +
           std::to_string(deg) + ")";
}

inline ojson to_json(const RingPresentation &rp)
{
    ojson j;
    j["p"] = rp.p;
    j["prec"] = rp.prec;
    j["deg"] = rp.deg;
    j["route"] = rp.route;
    j["d_prime"] = rp.d_prime();
    j["variables"] = ojson::array();
    for (const auto &v : rp.table.vars)
        j["variables"].push_back({{"name", v.name}, {"source_generator", v.source}, {"role", v.role}});
    auto names = rp.var_names();
    j["ideal"] = ojson::array();
    for (const auto &g : rp.ideal)
        j["ideal"].push_back({{"relation", g.relation}, {"family", g.family}, {"series", g.series.to_string(names)}});
    j["dropped"] = ojson::array();
    for (const auto &g : rp.dropped)
        j["dropped"].push_back({{"relation", g.relation}, {"family", g.family}});
    j["warnings"] = rp.warnings;
    j["summary"] = ring_summary(rp);
    return j;
}

inline std::string to_text(const RingPresentation &rp)
{
    std::ostringstream out;
    out << "# " << window(rp.p, rp.prec, rp.deg) << "\n";
    out << "route: " << rp.route << "\n";
    out << "d' = " << rp.d_prime() << "\n";
    for (const auto &v : rp.table.vars)
        out << "  " << v.name << "  " << v.source << "  " << v.role << "\n";
    auto names = rp.var_names();
    out << "ideal generators: " << rp.ideal.size() << "\n";
    for (const auto &g : rp.ideal)
        out << "  [" << g.relation << "/" << g.family << "] " << g.series.to_string(names) << "\n";
    if (!rp.dropped.empty()) {
        out << "dropped (zero):";
        for (const auto &g : rp.dropped)
            out << " " << g.relation << "/" << g.family;
        out << "\n";
    }
    for (const auto &w : rp.warnings)
        out << "warning: " << w << "\n";
    out << ring_summary(rp) << "\n";
    return out.str();
}

inline std::vector<std::string> magnus_names(unsigned k)
{
    std::vector<std::string> out;
    for (unsigned i = 0; i < k; ++i)
        out.push_back(NcMonomial::default_name(k, i));
    return out;
}

inline ojson to_json(const FoxMatrix &fm, const Presentation &pres)
{
    ojson j;
    unsigned k = fm.entries.empty() ? std::max<unsigned>(1, unsigned(pres.gamma_letters.size()))
                                    : fm.entries.front().nvars();
    auto names = magnus_names(k);
    j["p"] = pres.p;
    j["prec"] = pres.prec;
    j["deg"] = pres.deg;
    j["k"] = k;
    j["orientation"] = "rows=generators, columns=relations";
    j["rows"] = fm.row_names;
    j["columns"] = fm.col_names;
    j["entries"] = ojson::array();
    for (unsigned i = 0; i < fm.rows; ++i) {
        ojson row = ojson::array();
        for (unsigned c = 0; c < fm.cols; ++c)
            row.push_back(fm.at(i, c).to_string(names));
        j["entries"].push_back(row);
    }
    return j;
}

inline std::string to_text(const FoxMatrix &fm, const Presentation &pres)
{
    std::ostringstream out;
    out << "# " << window(pres.p, pres.prec, pres.deg) << "\n";
    out << "# rows = generators (" << fm.rows << "), columns = relations (" << fm.cols << "); zero entries omitted\n";
    for (unsigned i = 0; i < fm.rows; ++i)
        for (unsigned c = 0; c < fm.cols; ++c) {
            const auto &e = fm.at(i, c);
            if (!e.is_zero())
                out << "(" << fm.row_names[i] << ", " << fm.col_names[c] << ") " << e.to_string(magnus_names(e.nvars()))
                    << "\n";
        }
    return out.str();
}

inline ojson to_json(const RelationReport &rep, const RingPresentation &rp)
{
    ojson j;
    j["p"] = rp.p;
    j["prec"] = rp.prec;
    j["deg"] = rp.deg;
    j["ok"] = rep.ok;
    j["entries"] = ojson::array();
    for (const auto &e : rep.entries)
        j["entries"].push_back({{"relation", e.relation},
                                {"row", e.row},
                                {"col", e.col},
                                {"status", e.status},
                                {"series", e.series}});
    j["failures"] = rep.failures;
    return j;
}

inline std::string to_text(const RelationReport &rep, const RingPresentation &rp)
{
    std::ostringstream out;
    out << "# " << window(rp.p, rp.prec, rp.deg) << "\n";
    for (const auto &e : rep.entries)
        out << e.relation << " (" << e.row << "," << e.col << ") " << e.status
            << (e.status == "zero" ? "" : ": " + e.series) << "\n";
    for (const auto &f : rep.failures)
        out << "FAIL " << f << "\n";
    out << (rep.ok ? "all relation entries lie in I" : "verification failed") << "\n";
    return out.str();
}

inline ojson to_json(const SurjectionReport &rep)
{
    ojson j;
    j["d_prime_gs"] = rep.d_gs;
    j["d_prime_g"] = rep.d_g;
    j["mapping"] = ojson::array();
    for (const auto &[a, b] : rep.mapping)
        j["mapping"].push_back({{"from", a}, {"to", b}});
    j["kernel"] = ojson::array();
    for (std::size_t i = 0; i < rep.kernel.size(); ++i)
        j["kernel"].push_back({{"variable", rep.kernel[i]}, {"source_generator", rep.kernel_sources[i]}});
    j["krull_mod_p"] = {{"g_lower_bound", rep.krull_lower_g},
                        {"gs_lower_bound", rep.krull_lower_gs},
                        {"gs_upper_bound", rep.krull_upper_gs}};
    return j;
}

inline std::string to_text(const SurjectionReport &rep)
{
    std::ostringstream out;
    out << "d'(G_S) = " << rep.d_gs << ", d'(G) = " << rep.d_g << "\n";
    for (const auto &[a, b] : rep.mapping)
        out << "  " << a << " -> " << b << "\n";
    out << "kernel variables:";
    if (rep.kernel.empty())
        out << " none";
    for (std::size_t i = 0; i < rep.kernel.size(); ++i)
        out << " " << rep.kernel[i] << " (" << rep.kernel_sources[i] << ")";
    out << "\n";
    out << "dim R_G/p >= " << rep.krull_lower_g << "; " << rep.krull_lower_gs << " <= dim R_{G_S}/p <= "
        << rep.krull_upper_gs << "\n";
    return out.str();
}

} // namespace defring
