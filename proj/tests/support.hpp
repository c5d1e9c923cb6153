#ifndef QLOGIC_TESTS_SUPPORT_HPP
#define QLOGIC_TESTS_SUPPORT_HPP

#include "qlogic/formula.hpp"

#include <random>
#include <string>
#include <vector>

namespace qtest {

using namespace qlogic;

inline Scalar small_scalar(std::mt19937& rng, bool complex_entries = true)
{
    std::uniform_int_distribution<int> v(-2, 2);
    std::uniform_int_distribution<int> coin(0, 2);
    Scalar s(v(rng));
    if (complex_entries && coin(rng) == 0) s += Scalar(0, v(rng));
    return s;
}

inline Vec random_vector(std::mt19937& rng, std::size_t d, bool complex_entries = true)
{
    Vec v(d);
    std::uniform_int_distribution<int> zero(0, 3);
    for (auto& x : v) x = zero(rng) == 0 ? Scalar(0) : small_scalar(rng, complex_entries);
    return v;
}

// Small integer spans; dependent draws make nontrivial meets common.
inline Subspace random_subspace(std::mt19937& rng, std::size_t d, bool complex_entries = true)
{
    std::uniform_int_distribution<std::size_t> k(0, d);
    std::size_t n = k(rng);
    std::vector<Vec> vs;
    for (std::size_t i = 0; i < n; ++i) vs.push_back(random_vector(rng, d, complex_entries));
    if (vs.empty()) return Subspace::zero(d);
    return Subspace::span(d, vs);
}

inline Matrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c, bool complex_entries = true)
{
    Matrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m.at(i, j) = small_scalar(rng, complex_entries);
    return m;
}

inline mpq_class random_rational(std::mt19937& rng, int range = 9)
{
    std::uniform_int_distribution<int> num(-range, range), den(1, range);
    mpq_class q(num(rng), den(rng));
    q.canonicalize();
    return q;
}

inline Formula random_formula(std::mt19937& rng, const std::vector<std::string>& vars, int depth)
{
    std::uniform_int_distribution<int> pick(0, 9);
    std::uniform_int_distribution<std::size_t> vp(0, vars.size() - 1);
    if (depth <= 0) {
        int c = pick(rng);
        if (c == 0) return lzero();
        if (c == 1) return lone();
        return var(vars[vp(rng)]);
    }
    switch (pick(rng) % 5) {
    case 0: return lnot(random_formula(rng, vars, depth - 1));
    case 1:
    case 2: return land(random_formula(rng, vars, depth - 1), random_formula(rng, vars, depth - 1));
    case 3: return lor(random_formula(rng, vars, depth - 1), random_formula(rng, vars, depth - 1));
    default: return var(vars[vp(rng)]);
    }
}

inline Assignment random_assignment(std::mt19937& rng, std::size_t d, const std::vector<std::string>& vars,
                                    bool complex_entries = true)
{
    Assignment a;
    a.ambient = d;
    for (const auto& v : vars) a.bind(v, random_subspace(rng, d, complex_entries));
    return a;
}

inline Subspace line(std::initializer_list<long> xs)
{
    Vec v;
    for (long x : xs) v.emplace_back(x);
    return Subspace::span(v.size(), {v});
}

} // namespace qtest

#endif
