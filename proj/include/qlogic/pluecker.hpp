#ifndef QLOGIC_PLUECKER_HPP
#define QLOGIC_PLUECKER_HPP

#include "qlogic/lattice.hpp"

#include <map>
#include <vector>

namespace qlogic {

// Coordinates indexed by sorted 1-based column tuples; scaled so the first nonzero one is 1.
struct PlueckerVector {
    std::size_t ambient = 0;
    std::size_t grade = 0;
    std::map<std::vector<std::size_t>, Scalar> coords;

    friend bool operator==(const PlueckerVector& a, const PlueckerVector& b)
    {
        return a.ambient == b.ambient && a.grade == b.grade && a.coords == b.coords;
    }
};

// All sorted k-subsets of {1..d} in lexicographic order.
std::vector<std::vector<std::size_t>> index_tuples(std::size_t d, std::size_t k);

PlueckerVector to_pluecker(const Subspace& s);
PlueckerVector canonical(const PlueckerVector& v);
Subspace from_pluecker(const PlueckerVector& v);

} // namespace qlogic

#endif
