#include "qlogic/count.hpp"
#include "support.hpp"

#include <doctest.h>

#include <map>

using namespace qlogic;

namespace {

// Number of partitions of an m-set into p blocks, by direct enumeration of block labelings.
long partitions(std::size_t m, std::size_t p)
{
    long count = 0;
    std::vector<std::size_t> lab(m, 0);
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t used) {
        if (i == m) {
            if (used == p) ++count;
            return;
        }
        for (std::size_t b = 0; b <= used && b < p; ++b) rec(i + 1, std::max(used, b + 1));
    };
    rec(0, 0);
    return count;
}

} // namespace

TEST_CASE("Stirling numbers")
{
    CHECK(stirling2(3, 2) == 3);
    CHECK(stirling2(0, 0) == 1);
    CHECK(stirling2(4, 0) == 0);
    for (std::size_t m = 0; m <= 7; ++m)
        for (std::size_t p = 0; p <= m; ++p) CHECK(stirling2(m, p) == partitions(m, p));
    CHECK_THROWS(stirling2(2, 3));
}

TEST_CASE("phi values")
{
    CHECK(phi(3, 2) == 12);
    CHECK(phi(3, 3) == 1);
    CHECK(phi(2, 2) == 1);
    CHECK_THROWS(phi(3, 1));
    CHECK_THROWS(phi(2, 3));
}

TEST_CASE("formula counts")
{
    CHECK(card_F(1) == 4);
    CHECK(card_F(2) == 96);
    mpz_class six12, expect;
    mpz_ui_pow_ui(six12.get_mpz_t(), 6, 12);
    expect = 256 * six12 * 8;
    CHECK(card_F(3) == expect);
    CHECK(card_F(4) > card_F(3));
    CHECK_THROWS(card_F(0));
}

TEST_CASE("closure enumeration")
{
    ClosureResult one = enumerate_signatures_2d(1);
    CHECK(one.count() == 4);
    CHECK(one.grid.size() == 6);
    ClosureResult two = enumerate_signatures_2d(2);
    CHECK(two.count() == 96);
    CHECK(mpz_class(two.count()) == card_F(2));
    Formula c = commutator_f(var("X1"), var("X2"));
    CHECK(two.contains(signature(c, two.grid)));
    CHECK(two.contains(signature(lnot(c), two.grid)));
    CHECK_THROWS(enumerate_signatures_2d(3));
}

TEST_CASE("closure does not depend on the generic pair")
{
    Family p1 = pairwise_generic(2, 2);
    Family p2{2, {qtest::line({1, 3}), qtest::line({2, -1})}};
    REQUIRE(is_pairwise_generic(p2));
    ClosureResult a = enumerate_signatures_2d(2, p1), b = enumerate_signatures_2d(2, p2);
    CHECK(a.count() == b.count());
    std::map<std::string, Subspace> relabel;
    for (std::size_t i = 0; i < 2; ++i) {
        relabel.emplace(p1.members[i].key(), p2.members[i]);
        relabel.emplace(complement(p1.members[i]).key(), complement(p2.members[i]));
    }
    relabel.emplace(Subspace::zero(2).key(), Subspace::zero(2));
    relabel.emplace(Subspace::full(2).key(), Subspace::full(2));
    for (const auto& s : a.signatures) {
        Signature t;
        for (const auto& v : s) t.push_back(relabel.at(v.key()));
        CHECK(b.contains(t));
    }
}

TEST_CASE("function encoding")
{
    CHECK(equal(encode_function(2, [](const std::vector<std::size_t>&) { return false; }), lzero()));
    std::mt19937 rng(44);
    for (std::size_t n : {2u, 3u}) {
        Family fam = pairwise_generic(2, n);
        std::map<std::vector<std::size_t>, bool> table;
        std::set<std::string> seen;
        int trials = n == 2 ? 16 : 5;
        for (int t = 0; t < trials; ++t) {
            auto f = [&](const std::vector<std::size_t>& k) {
                std::size_t idx = 0;
                for (auto x : k) idx = idx * n + (x - 1);
                return n == 2 ? ((t >> idx) & 1) != 0 : table.at(k);
            };
            if (n == 3) {
                table.clear();
                std::vector<std::size_t> k(3, 1);
                for (int a = 0; a < 27; ++a) {
                    k = {1 + static_cast<std::size_t>(a / 9), 1 + static_cast<std::size_t>(a / 3 % 3),
                         1 + static_cast<std::size_t>(a % 3)};
                    table[k] = rng() % 2;
                }
            }
            Formula g = encode_function(n, f);
            std::string sig;
            std::vector<std::size_t> k(n, 1);
            while (true) {
                Assignment as;
                as.ambient = 2;
                for (std::size_t i = 0; i < n; ++i) {
                    as.bind(xname(i + 1), fam.members[i]);
                    as.bind(yname(i + 1), fam.members[k[i] - 1]);
                }
                Subspace v = eval(g, as);
                CHECK((v.is_full() || v.is_zero()));
                CHECK(v.is_full() == f(k));
                sig += v.is_full() ? '1' : '0';
                std::size_t i = n;
                while (i > 0 && ++k[i - 1] > n) k[--i] = 1;
                if (i == 0) break;
            }
            seen.insert(sig);
        }
        if (n == 2) CHECK(seen.size() == 16);
    }
}
