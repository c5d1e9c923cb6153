#ifndef QLOGIC_FORMULA_HPP
#define QLOGIC_FORMULA_HPP

#include "qlogic/lattice.hpp"

#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qlogic {

enum class Op { Zero, One, Var, Const, Not, And, Or };

struct Node;
using Formula = std::shared_ptr<const Node>;

struct Node {
    Op op;
    std::string name;
    Formula l, r;
};

Formula lzero();
Formula lone();
Formula var(const std::string& name);
Formula cst(const std::string& name);
Formula lnot(Formula a);
Formula land(Formula a, Formula b);
Formula lor(Formula a, Formula b);
// Left-nested folds; the empty meet is 1 and the empty join is 0.
Formula land_all(const std::vector<Formula>& fs);
Formula lor_all(const std::vector<Formula>& fs);

bool equal(const Formula& a, const Formula& b);
std::size_t length(const Formula& f);
std::set<std::string> variables(const Formula& f);
std::set<std::string> constants(const Formula& f);

Formula rename_vars(const Formula& f, const std::function<std::string(const std::string&)>& fn);
Formula substitute(const Formula& f, const std::map<std::string, Formula>& by_var);

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, std::size_t pos)
        : std::runtime_error(msg + " at position " + std::to_string(pos)), pos_(pos) {}
    std::size_t position() const { return pos_; }

private:
    std::size_t pos_;
};

// Identifiers listed in `constant_names` parse as named constants.
Formula parse(std::string_view text, const std::set<std::string>& constant_names = {});
std::string print(const Formula& f);

struct Assignment {
    std::size_t ambient = 0;
    std::map<std::string, Subspace> bindings;

    void bind(const std::string& name, const Subspace& s);
    const Subspace& at(const std::string& name) const;
    bool has(const std::string& name) const { return bindings.count(name) != 0; }
};

// Value of f; negation is relative to z (default: the full space).
Subspace eval(const Formula& f, const Assignment& a, const std::optional<Subspace>& z = std::nullopt);

// Negation-free equivalent over doubled names: a negated leaf X becomes X'.
Formula nnf(const Formula& f);
std::string primed(const std::string& name);

// Gadgets.
Formula commutator_f(const Formula& x, const Formula& y);
Formula semicommutator_f(const Formula& x, const Formula& y);
Formula eq_f(const Formula& x, const Formula& y);
Formula proj_f(const Formula& x, const Formula& z);
Formula leq_f(const Formula& x, const Formula& z);

extern const char* const kRestrictPrefix;
Formula restrict(const Formula& f, const Formula& g);
Formula sum_f(const Formula& f, const Formula& g);
Formula multiple(std::size_t k, const Formula& f);
std::string copy_name(const std::string& name, std::size_t copy);

Formula generic_over(const std::vector<Formula>& ys, std::size_t d);
Formula generic_f(std::size_t d);
Formula generic_f(std::size_t d, std::size_t n);
Formula indicator_gI(const std::vector<bool>& in_I, std::size_t n);
Formula psi(std::size_t k, std::size_t m);
Formula psi12();
Formula hagge_h();
Formula big_psi(std::size_t d);
Formula ndist_psi(std::size_t n);
Formula fneq2d();
Formula fneq2d_of(const Formula& x, const Formula& y, const Formula& z);
Formula boolean_test_f(std::size_t d);
Formula npc_commuting_wrap(const Formula& f);

std::string yname(std::size_t i);  // "Y<i>"
std::string xname(std::size_t i);  // "X<i>"

// Satisfying assignment of big_psi(d) in F^d; X1 is `first_line` when given.
Assignment big_psi_witness(std::size_t d, const std::optional<Vec>& first_line = std::nullopt);

} // namespace qlogic

#endif
