#ifndef QLOGIC_GENERIC_HPP
#define QLOGIC_GENERIC_HPP

#include "qlogic/lattice.hpp"

#include <cstddef>
#include <vector>

namespace qlogic {

struct Family {
    std::size_t ambient = 0;
    std::vector<Subspace> members;
};

// Member i is {(x, i*x) : x in F^(d/2)}, i = 1..n.
Family pairwise_generic(std::size_t d_even, std::size_t n);
bool is_pairwise_generic(const Family& fam);

// Lines spanned by (1, t, t^2, ..., t^(d-1)); empty points means t = 0..n-1.
Family vandermonde_generic(std::size_t d, std::size_t n, const std::vector<mpq_class>& points = {});
bool is_generic(const Family& fam);

struct DegreeResult {
    std::size_t degree = 0;
    bool capped = false;
};

// Size of a largest pairwise-generic subfamily; exhaustive above ambient 2.
DegreeResult degree(const Family& fam, std::size_t cap = 12);

} // namespace qlogic

#endif
