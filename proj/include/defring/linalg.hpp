#pragma once
// Submodules of (Z/p^N)^n in echelon form with saturated pivots, and ideal
// membership at truncation built on them.

#include "defring/padic.hpp"
#include "defring/series.hpp"

#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace defring {

/// Sparse vector: (index, nonzero residue), sorted by index.
using SparseVec = std::vector<std::pair<std::uint32_t, std::uint64_t>>;

/// Span over Z/p^N kept in Howell-style form: one row per pivot column, the
/// pivot entry a power p^e, and p^(N-e) * row reinserted so that reduction
/// by pivots decides membership.
class ModSpan {
public:
    explicit ModSpan(const Modulus &m) : m_(m) {}

    void insert(SparseVec v)
    {
        std::deque<SparseVec> work;
        work.push_back(std::move(v));
        while (!work.empty()) {
            SparseVec x = std::move(work.front());
            work.pop_front();
            insert_one(std::move(x), work);
        }
    }

    bool contains(SparseVec v) const
    {
        while (!v.empty()) {
            auto [col, x] = v.front();
            auto it = rows_.find(col);
            if (it == rows_.end())
                return false;
            unsigned e = m_.valuation(x);
            unsigned f = it->second.pivot_val;
            if (e < f)
                return false;
            std::uint64_t pf = m_.pow(m_.prime(), f);
            // x = p^f * q with q = x / p^f
            std::uint64_t q = x / pf;
            v = axpy(v, it->second.vec, m_.neg(q));
        }
        return true;
    }

    std::size_t rank() const { return rows_.size(); }

private:
    struct Row {
        unsigned pivot_val;
        SparseVec vec;
    };

    // v + c * w
    SparseVec axpy(const SparseVec &v, const SparseVec &w, std::uint64_t c) const
    {
        SparseVec out;
        out.reserve(v.size() + w.size());
        std::size_t i = 0, j = 0;
        while (i < v.size() || j < w.size()) {
            if (j == w.size() || (i < v.size() && v[i].first < w[j].first)) {
                out.push_back(v[i++]);
            } else if (i == v.size() || w[j].first < v[i].first) {
                std::uint64_t y = m_.mul(w[j].second, c);
                if (y)
                    out.emplace_back(w[j].first, y);
                ++j;
            } else {
                std::uint64_t y = m_.add(v[i].second, m_.mul(w[j].second, c));
                if (y)
                    out.emplace_back(v[i].first, y);
                ++i;
                ++j;
            }
        }
        return out;
    }

    SparseVec scale(const SparseVec &v, std::uint64_t c) const
    {
        SparseVec out;
        for (const auto &[i, x] : v)
            if (std::uint64_t y = m_.mul(x, c))
                out.emplace_back(i, y);
        return out;
    }

    void insert_one(SparseVec v, std::deque<SparseVec> &work)
    {
        while (!v.empty()) {
            auto [col, x] = v.front();
            unsigned e = m_.valuation(x);
            std::uint64_t pe = m_.pow(m_.prime(), e);
            // make the pivot exactly p^e
            std::uint64_t unit = (x / pe) % m_.value();
            v = scale(v, m_.inv(unit));
            auto it = rows_.find(col);
            if (it == rows_.end()) {
                if (e > 0)
                    work.push_back(scale(v, m_.pow(m_.prime(), m_.precision() - e)));
                rows_.emplace(col, Row{e, std::move(v)});
                return;
            }
            unsigned f = it->second.pivot_val;
            if (e >= f) {
                std::uint64_t mult = m_.pow(m_.prime(), e - f);
                v = axpy(v, it->second.vec, m_.neg(mult));
            } else {
                // the newcomer has the better pivot; the old row is reduced instead
                if (e > 0)
                    work.push_back(scale(v, m_.pow(m_.prime(), m_.precision() - e)));
                std::swap(v, it->second.vec);
                it->second.pivot_val = e;
                std::uint64_t mult = m_.pow(m_.prime(), f - e);
                v = axpy(v, it->second.vec, m_.neg(mult));
            }
        }
    }

    Modulus m_;
    std::map<std::uint32_t, Row> rows_;
};

/// Membership of f in (g_1..g_r) modulo p^N and degree > D: is f a
/// Z/p^N-combination of the products mu * g_j with mu a monomial? A
/// necessary condition for membership in the true ideal.
class TruncatedIdeal {
public:
    TruncatedIdeal(std::vector<CommSeries> gens) : gens_(std::move(gens)) {}

    bool contains(const CommSeries &f)
    {
        if (f.is_zero())
            return true;
        for (const auto &g : gens_)
            if (g == f || g == -f)
                return true;
        if (gens_.empty())
            return false;
        build();
        return span_->contains(to_vec(f));
    }

    const std::vector<CommSeries> &gens() const { return gens_; }

private:
    void build()
    {
        if (span_)
            return;
        const CommSeries &proto = gens_.front();
        const unsigned m = proto.nvars(), cap = proto.degree_cap();
        // all monomials of degree <= cap, graded order
        std::vector<CommMonomial::key_type> monos;
        CommMonomial::key_type cur(m, 0);
        enumerate(monos, cur, 0, cap);
        std::sort(monos.begin(), monos.end(), CommMonomial::order{});
        for (std::uint32_t i = 0; i < monos.size(); ++i)
            index_.emplace(monos[i], i);
        span_.emplace(proto.modulus());
        for (const auto &g : gens_) {
            proto.check_compatible(g);
            unsigned ord = g.order();
            for (const auto &mu : monos) {
                if (CommMonomial::degree(mu) + ord > cap)
                    break;
                SparseVec v;
                for (const auto &[k, c] : g.terms()) {
                    auto prod = CommMonomial::product(mu, k);
                    if (CommMonomial::degree(prod) > cap)
                        continue;
                    v.emplace_back(index_.at(prod), c);
                }
                std::sort(v.begin(), v.end());
                span_->insert(std::move(v));
            }
        }
    }

    static void enumerate(std::vector<CommMonomial::key_type> &out, CommMonomial::key_type &cur, unsigned i,
                          unsigned budget)
    {
        if (i == cur.size()) {
            out.push_back(cur);
            return;
        }
        for (unsigned e = 0; e <= budget; ++e) {
            cur[i] = static_cast<std::uint8_t>(e);
            enumerate(out, cur, i + 1, budget - e);
        }
        cur[i] = 0;
    }

    SparseVec to_vec(const CommSeries &f) const
    {
        SparseVec v;
        for (const auto &[k, c] : f.terms())
            v.emplace_back(index_.at(k), c);
        std::sort(v.begin(), v.end());
        return v;
    }

    std::vector<CommSeries> gens_;
    std::map<CommMonomial::key_type, std::uint32_t> index_;
    std::optional<ModSpan> span_;
};

inline bool ideal_member(const CommSeries &f, const std::vector<CommSeries> &gens)
{
    TruncatedIdeal ideal(gens);
    return ideal.contains(f);
}

} // namespace defring
