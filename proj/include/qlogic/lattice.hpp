#ifndef QLOGIC_LATTICE_HPP
#define QLOGIC_LATTICE_HPP

#include "qlogic/exactlin.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace qlogic {

// Subspace of F^d stored as its rref basis; equality is structural.
class Subspace {
public:
    Subspace() = default;
    static Subspace zero(std::size_t d);
    static Subspace full(std::size_t d);
    static Subspace span(std::size_t d, const std::vector<Vec>& vectors);
    static Subspace row_space(const Matrix& m);
    static Subspace column_space(const Matrix& m);

    std::size_t ambient() const { return d_; }
    std::size_t dim() const { return basis_.rows(); }
    const Matrix& basis() const { return basis_; }
    bool is_zero() const { return dim() == 0; }
    bool is_full() const { return dim() == d_; }
    bool is_real() const { return basis_.is_real(); }

    bool contains(const Vec& v) const;
    bool leq(const Subspace& other) const;
    // Basis vectors as columns padded with zero columns to a d x d matrix.
    Matrix as_square_matrix() const;

    std::string key() const;
    std::string str() const;

    friend bool operator==(const Subspace& a, const Subspace& b)
    {
        return a.d_ == b.d_ && a.basis_ == b.basis_;
    }
    friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

private:
    std::size_t d_ = 0;
    Matrix basis_;
};

Subspace complement(const Subspace& s);
Subspace meet(const Subspace& a, const Subspace& b);
Subspace join(const Subspace& a, const Subspace& b);

Subspace commutator(const Subspace& x, const Subspace& y);
Subspace semicommutator(const Subspace& x, const Subspace& y);
bool commutes(const Subspace& x, const Subspace& y);
Subspace project(const Subspace& x, const Subspace& z);

Subspace complexify(const Subspace& s);
Subspace realify(const Subspace& s);
Subspace direct_sum(const Subspace& a, const Subspace& b);
// X -> X x {0}^extra
Subspace embed(const Subspace& s, std::size_t extra);

// Inclusion in both directions; kept independent of the canonical form.
bool same_subspace(const Subspace& a, const Subspace& b);

} // namespace qlogic

#endif
