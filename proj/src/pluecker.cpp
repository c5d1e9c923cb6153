#include "qlogic/pluecker.hpp"

#include <algorithm>
#include <stdexcept>

namespace qlogic {

std::vector<std::vector<std::size_t>> index_tuples(std::size_t d, std::size_t k)
{
    std::vector<std::vector<std::size_t>> out;
    if (k > d) return out;
    std::vector<std::size_t> t(k);
    for (std::size_t i = 0; i < k; ++i) t[i] = i + 1;
    while (true) {
        out.push_back(t);
        std::size_t i = k;
        while (i > 0 && t[i - 1] == d - k + i) --i;
        if (i == 0) return out;
        ++t[i - 1];
        for (std::size_t j = i; j < k; ++j) t[j] = t[j - 1] + 1;
    }
}

PlueckerVector canonical(const PlueckerVector& v)
{
    PlueckerVector out = v;
    Scalar lead;
    for (const auto& [idx, c] : v.coords)
        if (!c.is_zero()) {
            lead = c;
            break;
        }
    if (lead.is_zero()) throw std::invalid_argument("Pluecker vector is zero");
    for (auto& [idx, c] : out.coords) c /= lead;
    return out;
}

PlueckerVector to_pluecker(const Subspace& s)
{
    PlueckerVector v;
    v.ambient = s.ambient();
    v.grade = s.dim();
    const Matrix& b = s.basis();
    for (const auto& idx : index_tuples(v.ambient, v.grade)) {
        Matrix m(v.grade, v.grade);
        for (std::size_t i = 0; i < v.grade; ++i)
            for (std::size_t j = 0; j < v.grade; ++j) m.at(i, j) = b.at(i, idx[j] - 1);
        v.coords[idx] = determinant(m);
    }
    return canonical(v);
}

Subspace from_pluecker(const PlueckerVector& v)
{
    std::size_t d = v.ambient, k = v.grade;
    if (k > d) throw std::invalid_argument("Pluecker grade exceeds ambient dimension");
    if (k == 0) {
        if (v.coords.size() != 1 || v.coords.begin()->second.is_zero())
            throw std::invalid_argument("grade 0 needs a single nonzero coordinate");
        return Subspace::zero(d);
    }
    auto lead = std::find_if(v.coords.begin(), v.coords.end(), [](const auto& e) { return !e.second.is_zero(); });
    if (lead == v.coords.end()) throw std::invalid_argument("Pluecker vector is zero");
    const std::vector<std::size_t>& base = lead->first;
    Scalar pivot = lead->second;
    auto coord = [&](const std::vector<std::size_t>& idx) {
        auto it = v.coords.find(idx);
        return it == v.coords.end() ? Scalar(0) : it->second;
    };
    // row j: entry i is the coordinate with base[j] replaced by i, sign from sorting
    Matrix rows(k, d);
    for (std::size_t j = 0; j < k; ++j)
        for (std::size_t i = 1; i <= d; ++i) {
            std::vector<std::size_t> t = base;
            t[j] = i;
            std::vector<std::size_t> sorted = t;
            std::sort(sorted.begin(), sorted.end());
            if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) continue;
            std::size_t inversions = 0;
            for (std::size_t a = 0; a < k; ++a)
                for (std::size_t b = a + 1; b < k; ++b)
                    if (t[a] > t[b]) ++inversions;
            Scalar c = coord(sorted) / pivot;
            rows.at(j, i - 1) = inversions % 2 ? -c : c;
        }
    return Subspace::row_space(rows);
}

} // namespace qlogic
