#ifndef QLOGIC_STAUDT_HPP
#define QLOGIC_STAUDT_HPP

#include "qlogic/formula.hpp"

#include <gmpxx.h>

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace qlogic {

// Von Neumann 3-frame in Gr(F^(3d)).
struct Frame3 {
    std::size_t block = 0;
    Subspace w0, w1, w2, v0, v1;
};

// {(x, T x)} for T with d columns.
Subspace graph(const Matrix& t);

// Coordinate subspaces of F^(3d), j in {0,1,2}:
// X_0(T) = {(0,x,-Tx)}, X_1(T) = {(-Tx,0,x)}, X_2(T) = {(x,-Tx,0)},
// X^0(T) = {(0,-Tx,x)}, X^1(T) = {(x,0,-Tx)}, X^2(T) = {(-Tx,x,0)}.
Subspace x_lower(int j, const Matrix& t);
Subspace x_upper(int j, const Matrix& t);

Frame3 standard_frame(std::size_t d);
bool is_frame(const Frame3& fr);

// Only the standard frame is accepted by the evaluators below.
Subspace encode(const Matrix& t, const Frame3& fr);
std::optional<Matrix> decode(const Subspace& x, const Frame3& fr);

Subspace mul(const Subspace& xa, const Subspace& xb, const Frame3& fr);
Subspace sub(const Subspace& xa, const Subspace& xb, const Frame3& fr);
Subspace adjoint(const Subspace& xa, const Frame3& fr);

// Lattice terms over the frame variables W0, W1, W2, V0, V1.
struct FrameTerms {
    Formula w0, w1, w2, v0, v1;
};
FrameTerms frame_vars();
Formula mul_term(const Formula& a, const Formula& b, const FrameTerms& fr);   // encodes A*B
Formula sub_term(const Formula& a, const Formula& b, const FrameTerms& fr);   // encodes A-B
Formula add_term(const Formula& a, const Formula& b, const FrameTerms& fr);   // encodes A+B
Formula adj_term(const Formula& a, const FrameTerms& fr);                     // encodes A^dagger
Formula int_term(const mpz_class& k, const FrameTerms& fr);
// Frame conditions, each term equal to 1 exactly when it holds.
std::vector<Formula> frame_conditions(const FrameTerms& fr);
std::vector<Formula> encodable_conditions(const Formula& x, const FrameTerms& fr);

Assignment frame_assignment(const Frame3& fr);

// Noncommutative integer polynomial with adjoints of variables.
struct PolyExpr {
    enum class Kind { Var, Int, Add, Sub, Neg, Mul, Adj };
    Kind kind = Kind::Int;
    std::string name;
    mpz_class value;
    std::vector<std::shared_ptr<const PolyExpr>> args;
};
using PolyPtr = std::shared_ptr<const PolyExpr>;

PolyPtr parse_poly(const std::string& text);
std::string print_poly(const PolyPtr& p);
std::vector<std::string> poly_variables(const PolyPtr& p);  // order of first occurrence
Matrix eval_poly(const PolyPtr& p, const std::map<std::string, Matrix>& values, std::size_t d);

std::string poly_var_name(const std::string& v);  // "X_<v>"
// Value of p as a lattice term over X_<v> and the frame variables.
Formula poly_term(const PolyPtr& p, const FrameTerms& fr);
// Frame conditions, encodability of every X_<v>, and poly_term(p) = W0.
Formula poly_to_formula(const PolyPtr& p);
Assignment poly_witness_assignment(const PolyPtr& p, const std::map<std::string, Matrix>& values, std::size_t d);

} // namespace qlogic

#endif
