#ifndef QLOGIC_COUNT_HPP
#define QLOGIC_COUNT_HPP

#include "qlogic/formula.hpp"
#include "qlogic/generic.hpp"

#include <gmpxx.h>

#include <functional>
#include <vector>

namespace qlogic {

mpz_class stirling2(std::size_t m, std::size_t p);
mpz_class phi(std::size_t n, std::size_t p);
// 2^(2^n) * prod_{p=2..n} (2p+2)^phi(n,p)
mpz_class card_F(std::size_t n);

// Values of a formula at each grid point, in grid order.
using Signature = std::vector<Subspace>;

// All assignments of X1..Xn from {0, 1, A, !A, B, !B}, A and B the two members of pair.
std::vector<Assignment> signature_grid(std::size_t n, const Family& pair);
Signature signature(const Formula& f, const std::vector<Assignment>& grid);

struct ClosureResult {
    std::vector<Assignment> grid;
    std::vector<Signature> signatures;  // discovery order
    std::size_t count() const { return signatures.size(); }
    bool contains(const Signature& s) const;
};

// Closure of X1..Xn, 0, 1 under pointwise !, &, | on the grid; n in {1, 2}.
ClosureResult enumerate_signatures_2d(std::size_t n, const Family& pair = pairwise_generic(2, 2));

// Disjunction over F(k) = 1 of the conjunction of C(Y_i, X_{k_i}); indices k_i run over 1..n.
Formula encode_function(std::size_t n, const std::function<bool(const std::vector<std::size_t>&)>& f);

} // namespace qlogic

#endif
