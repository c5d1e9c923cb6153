#ifndef QLOGIC_REDUCE_HPP
#define QLOGIC_REDUCE_HPP

#include "qlogic/solve.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace qlogic {

// Boolean CNF to 2D: f conjoined with pairwise commutators of its variables.
Formula bool_to_q2d(const CnfFormula& f);
// Boolean assignment read off a pairwise commuting 2D witness.
std::optional<Assignment> decode_boolean_witness(const Formula& f, const Assignment& a2d, Mode mode);

Formula strong_from_weak(const Formula& f, std::size_t d);
Formula weak_from_strong(const Formula& f, std::size_t d);
Formula lift_dim(const Formula& f, std::size_t k, std::size_t d);

extern const char* const kWeakCorePrefix;
// (f(Y) & X0) = X1, conjoined with big_psi(d); variables of f get kWeakCorePrefix.
Formula weak2strong_psi(const Formula& f, std::size_t d);
// Strong witness of weak2strong_psi from a weak witness of f.
Assignment weak2strong_witness(const Formula& f, const Assignment& weak, std::size_t d);

struct QElimResult {
    Formula formula;
    std::map<std::string, Subspace> fresh_constants;
};

// Eliminates the existential variable x; constants maps every constant of f to F^2.
QElimResult qelim2d(const Formula& f, const std::string& x, const std::map<std::string, Subspace>& constants,
                    Mode mode = Mode::Weak);

using Monomial = std::vector<std::string>;  // sorted multiset of unknowns

struct Poly {
    std::map<Monomial, mpq_class> terms;

    static Poly constant(const mpq_class& c);
    static Poly variable(const std::string& v);
    Poly& operator+=(const Poly& o);
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly scaled(const mpq_class& c) const;
    std::size_t degree() const;
    bool is_zero() const { return terms.empty(); }
    mpq_class eval(const std::map<std::string, mpq_class>& point) const;
};

struct PolySystem {
    std::size_t ambient = 0;
    Mode mode = Mode::Strong;
    bool split = true;
    std::vector<std::string> variables;
    std::vector<Poly> equations;
    std::optional<Poly> combined;
    // Formula leaf name to the index k of its matrix M<k>.
    std::map<std::string, std::size_t> matrix_of;

    struct Node {
        Op op;
        int a = -1, b = -1;
        std::size_t matrix = 0;
        std::vector<std::size_t> aux;
        std::string leaf;
    };
    std::vector<Node> nodes;
    std::vector<std::size_t> root_aux;
    std::map<std::string, Subspace> constants;

    std::size_t degree() const;
    std::string text() const;
    std::string json() const;
};

// Unsplit systems name unknowns M<k>_<i>_<j> and conj(...) and need real coefficients.
PolySystem to_polysystem(const Formula& f, std::size_t d, Mode mode, bool split = true,
                         const std::map<std::string, Subspace>& constants = {});
PolySystem combine_quartic(const PolySystem& s);
// Integer coefficients of magnitude at most 2, via auxiliary unknowns.
PolySystem normalize(const PolySystem& s);
bool verify_poly_witness(const PolySystem& s, const std::map<std::string, mpq_class>& point);

std::string matrix_entry_name(std::size_t k, std::size_t i, std::size_t j, bool split, bool imag);
// Point built from a satisfying assignment; auxiliaries solved exactly.
std::optional<std::map<std::string, mpq_class>> poly_witness(const PolySystem& s, const Assignment& a);
// Column ranges of the leaf matrices at a point of a split system.
Assignment decode_poly_point(const PolySystem& s, const std::map<std::string, mpq_class>& point);

} // namespace qlogic

#endif
