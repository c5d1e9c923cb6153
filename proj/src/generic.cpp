#include "qlogic/generic.hpp"

#include <algorithm>
#include <stdexcept>

namespace qlogic {

Family pairwise_generic(std::size_t d_even, std::size_t n)
{
    if (d_even < 2 || d_even % 2 != 0) throw std::invalid_argument("pairwise generic families need even d >= 2");
    std::size_t h = d_even / 2;
    Family fam{d_even, {}};
    for (std::size_t i = 1; i <= n; ++i) {
        Matrix m(h, d_even);
        for (std::size_t k = 0; k < h; ++k) {
            m.at(k, k) = 1;
            m.at(k, h + k) = static_cast<long>(i);
        }
        fam.members.push_back(Subspace::row_space(m));
    }
    return fam;
}

namespace {

bool proper(const Subspace& u) { return !u.is_zero() && !u.is_full(); }

bool generic_pair(const Subspace& u, const Subspace& v)
{
    Subspace nu = complement(u), nv = complement(v);
    return meet(u, v).is_zero() && meet(u, nv).is_zero() && meet(nu, v).is_zero() && meet(nu, nv).is_zero();
}

} // namespace

bool is_pairwise_generic(const Family& fam)
{
    for (const auto& u : fam.members)
        if (!proper(u)) return false;
    for (std::size_t i = 0; i < fam.members.size(); ++i)
        for (std::size_t j = i + 1; j < fam.members.size(); ++j)
            if (!generic_pair(fam.members[i], fam.members[j])) return false;
    return true;
}

Family vandermonde_generic(std::size_t d, std::size_t n, const std::vector<mpq_class>& points)
{
    std::vector<mpq_class> t = points;
    if (t.empty())
        for (std::size_t k = 0; k < n; ++k) t.emplace_back(static_cast<long>(k));
    if (t.size() < n) throw std::invalid_argument("not enough Vandermonde points");
    t.resize(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (t[i] == t[j]) throw std::invalid_argument("duplicate Vandermonde point");
    Family fam{d, {}};
    for (const auto& x : t) {
        Vec v(d);
        mpq_class p = 1;
        for (std::size_t k = 0; k < d; ++k) {
            v[k] = p;
            p *= x;
        }
        fam.members.push_back(Subspace::span(d, {v}));
    }
    return fam;
}

bool is_generic(const Family& fam)
{
    std::size_t d = fam.ambient, n = fam.members.size();
    if (d == 0 || n < d) return false;
    for (const auto& u : fam.members)
        if (u.dim() != 1) return false;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (!meet(fam.members[i], complement(fam.members[j])).is_zero()) return false;
    std::vector<std::size_t> idx(d);
    for (std::size_t k = 0; k < d; ++k) idx[k] = k;
    while (true) {
        Subspace s = Subspace::zero(d);
        for (auto k : idx) s = join(s, fam.members[k]);
        if (!s.is_full()) return false;
        std::size_t k = d;
        while (k > 0 && idx[k - 1] == n - d + (k - 1)) --k;
        if (k == 0) break;
        ++idx[k - 1];
        for (std::size_t j = k; j < d; ++j) idx[j] = idx[j - 1] + 1;
    }
    return true;
}

DegreeResult degree(const Family& fam, std::size_t cap)
{
    std::vector<Subspace> cand;
    for (const auto& u : fam.members)
        if (proper(u)) cand.push_back(u);
    if (fam.ambient == 2) {
        // lines are pairwise generic unless equal or complementary
        std::vector<Subspace> chosen;
        for (const auto& u : cand) {
            bool fresh = true;
            for (const auto& c : chosen) fresh = fresh && generic_pair(u, c);
            if (fresh) chosen.push_back(u);
        }
        return {chosen.size(), false};
    }
    if (cand.size() > cap) return {0, true};
    std::size_t n = cand.size();
    std::vector<std::vector<bool>> ok(n, std::vector<bool>(n, true));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) ok[i][j] = ok[j][i] = generic_pair(cand[i], cand[j]);
    std::size_t best = 0;
    for (unsigned long mask = 1; mask < (1UL << n); ++mask) {
        std::size_t size = static_cast<std::size_t>(__builtin_popcountl(mask));
        if (size <= best) continue;
        bool good = true;
        for (std::size_t i = 0; i < n && good; ++i)
            if (mask >> i & 1UL)
                for (std::size_t j = i + 1; j < n && good; ++j)
                    if (mask >> j & 1UL) good = ok[i][j];
        if (good) best = size;
    }
    return {best, false};
}

} // namespace qlogic
