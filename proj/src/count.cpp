#include "qlogic/count.hpp"

#include "qlogic/solve.hpp"

#include <map>
#include <set>
#include <stdexcept>

namespace qlogic {

mpz_class stirling2(std::size_t m, std::size_t p)
{
    if (p > m) throw std::invalid_argument("stirling2 needs p <= m");
    std::vector<mpz_class> row(p + 1, 0);
    row[0] = 1;
    for (std::size_t i = 1; i <= m; ++i) {
        for (std::size_t k = std::min(i, p); k >= 1; --k) row[k] = mpz_class(k) * row[k] + row[k - 1];
        row[0] = 0;
    }
    return row[p];
}

namespace {

mpz_class binomial(std::size_t n, std::size_t k)
{
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

} // namespace

mpz_class phi(std::size_t n, std::size_t p)
{
    if (p < 2 || p > n) throw std::invalid_argument("phi needs 2 <= p <= n");
    mpz_class s = 0;
    for (std::size_t l = 0; l <= n - p; ++l) s += binomial(n, l) * stirling2(n - l, p);
    mpz_class pow2;
    mpz_ui_pow_ui(pow2.get_mpz_t(), 2, n - p);
    return pow2 * s;
}

mpz_class card_F(std::size_t n)
{
    if (n == 0) throw std::invalid_argument("card_F needs n >= 1");
    if (n >= 8 * sizeof(unsigned long)) throw std::invalid_argument("card_F exponent too large");
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, 1UL << n);
    for (std::size_t p = 2; p <= n; ++p) {
        mpz_class e = phi(n, p), f;
        if (!e.fits_ulong_p()) throw std::invalid_argument("card_F exponent too large");
        mpz_ui_pow_ui(f.get_mpz_t(), 2 * p + 2, e.get_ui());
        r *= f;
    }
    return r;
}

std::vector<Assignment> signature_grid(std::size_t n, const Family& pair)
{
    if (pair.ambient != 2 || pair.members.size() != 2 || !is_pairwise_generic(pair))
        throw std::invalid_argument("signature grid needs a pairwise generic pair in F^2");
    const Subspace& a = pair.members[0];
    const Subspace& b = pair.members[1];
    std::vector<Subspace> values{Subspace::zero(2), Subspace::full(2), a, complement(a), b, complement(b)};
    std::vector<Assignment> grid;
    std::vector<std::size_t> digit(n, 0);
    while (true) {
        Assignment as;
        as.ambient = 2;
        for (std::size_t i = 0; i < n; ++i) as.bind(xname(i + 1), values[digit[i]]);
        grid.push_back(as);
        std::size_t i = n;
        while (i > 0 && ++digit[i - 1] == values.size()) digit[--i] = 0;
        if (i == 0) return grid;
    }
}

Signature signature(const Formula& f, const std::vector<Assignment>& grid)
{
    Signature s;
    s.reserve(grid.size());
    for (const auto& a : grid) s.push_back(eval(f, a));
    return s;
}

bool ClosureResult::contains(const Signature& s) const
{
    for (const auto& t : signatures)
        if (t == s) return true;
    return false;
}

ClosureResult enumerate_signatures_2d(std::size_t n, const Family& pair)
{
    if (n < 1 || n > 2) throw std::invalid_argument("closure enumeration supports n = 1 or 2");
    ClosureResult out;
    out.grid = signature_grid(n, pair);
    Interner in(2);
    std::size_t g = out.grid.size();
    std::vector<std::vector<int>> sigs;
    std::set<std::vector<int>> seen;
    auto add = [&](std::vector<int> s) {
        if (seen.insert(s).second) sigs.push_back(std::move(s));
    };
    add(std::vector<int>(g, in.zero()));
    add(std::vector<int>(g, in.full()));
    for (std::size_t i = 1; i <= n; ++i) {
        std::vector<int> s(g);
        for (std::size_t k = 0; k < g; ++k) s[k] = in.id(out.grid[k].at(xname(i)));
        add(s);
    }
    // every pair is combined once, when its later member is processed
    for (std::size_t i = 0; i < sigs.size(); ++i) {
        std::vector<int> s(g);
        for (std::size_t k = 0; k < g; ++k) s[k] = in.lnot(sigs[i][k]);
        add(s);
        for (std::size_t j = 0; j <= i; ++j) {
            std::vector<int> m(g), o(g);
            for (std::size_t k = 0; k < g; ++k) {
                m[k] = in.land(sigs[i][k], sigs[j][k]);
                o[k] = in.lor(sigs[i][k], sigs[j][k]);
            }
            add(m);
            add(o);
        }
    }
    for (const auto& s : sigs) {
        Signature v;
        for (int id : s) v.push_back(in.value(id));
        out.signatures.push_back(v);
    }
    return out;
}

Formula encode_function(std::size_t n, const std::function<bool(const std::vector<std::size_t>&)>& f)
{
    if (n == 0) throw std::invalid_argument("encode_function needs n >= 1");
    std::vector<Formula> terms;
    std::vector<std::size_t> k(n, 1);
    while (true) {
        if (f(k)) {
            std::vector<Formula> conj;
            for (std::size_t i = 0; i < n; ++i) conj.push_back(commutator_f(var(yname(i + 1)), var(xname(k[i]))));
            terms.push_back(land_all(conj));
        }
        std::size_t i = n;
        while (i > 0 && ++k[i - 1] > n) k[--i] = 1;
        if (i == 0) break;
    }
    return terms.empty() ? lzero() : lor_all(terms);
}

} // namespace qlogic
