#include "support.hpp"

#include <doctest.h>

#include <set>

using namespace qlogic;
using qtest::line;
using qtest::random_subspace;

namespace {

// Random subspace commuting with x: parts drawn inside x and inside its complement.
Subspace commuting_with(std::mt19937& rng, const Subspace& x)
{
    std::size_t d = x.ambient();
    Subspace nx = complement(x);
    std::vector<Vec> vs;
    for (const Subspace* part : std::initializer_list<const Subspace*>{&x, &nx}) {
        std::size_t k = rng() % (part->dim() + 1);
        for (std::size_t t = 0; t < k; ++t) {
            Vec v(d);
            for (std::size_t r = 0; r < part->dim(); ++r) {
                Scalar c = qtest::small_scalar(rng);
                for (std::size_t j = 0; j < d; ++j) v[j] += c * part->basis().at(r, j);
            }
            vs.push_back(v);
        }
    }
    return vs.empty() ? Subspace::zero(d) : Subspace::span(d, vs);
}

} // namespace

TEST_CASE("complement examples")
{
    CHECK(complement(line({1, 0})) == line({0, 1}));
    Subspace s = Subspace::span(2, {{Scalar(1), Scalar(0, 1)}});
    Subspace expect = Subspace::span(2, {{Scalar(0, 1), Scalar(1)}});
    CHECK(complement(s) == expect);
    CHECK(inner(expect.basis().row(0), s.basis().row(0)).is_zero());
}

TEST_CASE("complement of a graph is the adjoint graph")
{
    std::mt19937 rng(3);
    for (int t = 0; t < 30; ++t) {
        std::size_t d = 1 + rng() % 3;
        Matrix T = qtest::random_matrix(rng, d, d);
        Matrix g(d, 2 * d), h(d, 2 * d);
        Matrix Ta = T.conj_transpose();
        for (std::size_t k = 0; k < d; ++k)
            for (std::size_t j = 0; j < d; ++j) {
                // rows (e_k, T e_k) and (-T^* e_k, e_k)
                g.at(k, j) = k == j ? Scalar(1) : Scalar(0);
                g.at(k, d + j) = T.at(j, k);
                h.at(k, j) = -Ta.at(j, k);
                h.at(k, d + j) = k == j ? Scalar(1) : Scalar(0);
            }
        CHECK(complement(Subspace::row_space(g)) == Subspace::row_space(h));
    }
}

TEST_CASE("meet and join examples")
{
    CHECK(join(line({1, 0}), line({0, 1})) == Subspace::full(2));
    CHECK(meet(line({1, 0}), line({1, 1})) == Subspace::zero(2));
    CHECK(join(join(line({1, 0, 0}), line({1, 1, 0})), line({1, 1, 1})) == Subspace::full(3));
    CHECK_THROWS(meet(line({1, 0}), line({1, 0, 0})));
}

TEST_CASE("commutator examples")
{
    CHECK(commutator(line({1, 0}), line({1, 1})) == Subspace::zero(2));
    std::mt19937 rng(1);
    for (int t = 0; t < 20; ++t) {
        Subspace x = random_subspace(rng, 3);
        CHECK(commutes(x, Subspace::full(3)));
    }
    Subspace a = Subspace::span(4, {{1, 0, 1, 0}, {0, 1, 0, 1}});
    Subspace b = Subspace::span(4, {{1, 0, 2, 0}, {0, 1, 0, 2}});
    CHECK(commutator(a, b) == Subspace::zero(4));
}

TEST_CASE("projection examples")
{
    std::mt19937 rng(2);
    for (int t = 0; t < 20; ++t) {
        Subspace x = random_subspace(rng, 3), z = random_subspace(rng, 3);
        CHECK(project(x, Subspace::full(3)) == x);
        CHECK(project(Subspace::zero(3), z) == Subspace::zero(3));
        Subspace p = project(x, z);
        CHECK(p.leq(z));
        CHECK(p.dim() <= std::min(x.dim(), z.dim()));
    }
    CHECK(project(line({1, 1}), line({1, 0})) == line({1, 0}));
}

TEST_CASE("real and complex embeddings")
{
    std::mt19937 rng(4);
    CHECK(complexify(Subspace::zero(3)) == Subspace::zero(3));
    CHECK_THROWS(complexify(Subspace::span(2, {{Scalar(1), Scalar(0, 1)}})));
    for (int t = 0; t < 50; ++t) {
        std::size_t d = 1 + rng() % 3;
        Subspace a = random_subspace(rng, d, false), b = random_subspace(rng, d, false);
        CHECK(complement(complexify(a)) == complexify(complement(a)));
        CHECK(meet(complexify(a), complexify(b)) == complexify(meet(a, b)));
        Subspace x = random_subspace(rng, d), y = random_subspace(rng, d);
        CHECK(realify(x).dim() == 2 * x.dim());
        CHECK(realify(x).is_real());
        CHECK(complement(realify(x)) == realify(complement(x)));
        CHECK(meet(realify(x), realify(y)) == realify(meet(x, y)));
        CHECK(join(realify(x), realify(y)) == realify(join(x, y)));
    }
    Subspace r = realify(Subspace::span(1, {{Scalar(1, 1)}}));
    CHECK(r.ambient() == 2);
    CHECK(r.dim() == 2);
}

TEST_CASE("direct sums")
{
    CHECK(direct_sum(Subspace::full(1), Subspace::zero(1)) == line({1, 0}));
    std::mt19937 rng(8);
    for (int t = 0; t < 50; ++t) {
        Subspace a = random_subspace(rng, 2), b = random_subspace(rng, 2);
        Subspace s = direct_sum(a, b);
        CHECK(s.dim() == a.dim() + b.dim());
        CHECK(complement(s) == direct_sum(complement(a), complement(b)));
    }
}

TEST_CASE("ortholattice identities and dimension formula on random triples")
{
    std::mt19937 rng(9);
    for (std::size_t d = 0; d <= 4; ++d)
        for (int t = 0; t < 60; ++t) {
            Subspace a = random_subspace(rng, d), b = random_subspace(rng, d), c = random_subspace(rng, d);
            CHECK(meet(a, join(a, b)) == a);
            CHECK(join(a, meet(a, b)) == a);
            CHECK(complement(complement(a)) == a);
            CHECK(complement(meet(a, b)) == join(complement(a), complement(b)));
            CHECK(join(a, complement(a)) == Subspace::full(d));
            CHECK(meet(a, complement(a)) == Subspace::zero(d));
            CHECK(join(a, b).dim() + meet(a, b).dim() == a.dim() + b.dim());
            CHECK(meet(a, meet(b, c)) == meet(meet(a, b), c));
            Subspace lo = meet(a, c);
            CHECK(join(lo, meet(b, c)) == meet(join(lo, b), c));
            CHECK(same_subspace(join(a, b), join(b, a)));
        }
}

TEST_CASE("commuting elements distribute")
{
    std::mt19937 rng(10);
    for (int t = 0; t < 100; ++t) {
        std::size_t d = 2 + rng() % 3;
        Subspace x = random_subspace(rng, d);
        Subspace y = commuting_with(rng, x), z = commuting_with(rng, x);
        REQUIRE(commutes(x, y));
        REQUIRE(commutes(x, z));
        CHECK(commutator(x, y) == Subspace::full(d));
        CHECK(meet(x, join(y, z)) == join(meet(x, y), meet(x, z)));
    }
}

TEST_CASE("pairwise commuting tuples generate a power-of-two Boolean algebra")
{
    std::mt19937 rng(12);
    for (int t = 0; t < 20; ++t) {
        std::size_t d = 2 + rng() % 3;
        // coordinate spans in a rotated orthogonal basis
        std::vector<Vec> basis;
        for (std::size_t k = 0; k < d; ++k) {
            Vec v(d);
            v[k] = 1;
            if (k + 1 < d) v[k + 1] = k % 2 ? Scalar(1) : Scalar(-1);
            basis.push_back(v);
        }
        std::vector<Vec> ortho;
        for (const auto& u : basis) {
            Vec v = u;
            for (const auto& w : ortho) {
                Scalar c = inner(u, w) / inner(w, w);
                for (std::size_t j = 0; j < d; ++j) v[j] -= c * w[j];
            }
            ortho.push_back(v);
        }
        std::vector<Subspace> gens;
        for (int g = 0; g < 3; ++g) {
            std::vector<Vec> pick;
            for (const auto& v : ortho)
                if (rng() % 2) pick.push_back(v);
            gens.push_back(pick.empty() ? Subspace::zero(d) : Subspace::span(d, pick));
        }
        std::set<std::string> seen;
        std::vector<Subspace> all;
        auto add = [&](const Subspace& x) {
            if (seen.insert(x.key()).second) all.push_back(x);
        };
        for (const auto& g : gens) add(g);
        for (std::size_t i = 0; i < all.size(); ++i) {
            add(complement(all[i]));
            for (std::size_t j = 0; j <= i; ++j) {
                add(meet(all[i], all[j]));
                add(join(all[i], all[j]));
            }
        }
        std::size_t n = all.size();
        CHECK((n & (n - 1)) == 0);
    }
}

TEST_CASE("inclusion-exclusion fails for three lines in the plane")
{
    Subspace x = line({1, 0}), y = line({0, 1}), z = line({1, 1});
    long lhs = static_cast<long>(join(join(x, y), z).dim());
    long rhs = static_cast<long>(x.dim() + y.dim() + z.dim()) - static_cast<long>(meet(x, y).dim()) -
               static_cast<long>(meet(x, z).dim()) - static_cast<long>(meet(y, z).dim()) +
               static_cast<long>(meet(meet(x, y), z).dim());
    CHECK(lhs == 2);
    CHECK(rhs == 3);
}
