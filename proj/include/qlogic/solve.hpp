#ifndef QLOGIC_SOLVE_HPP
#define QLOGIC_SOLVE_HPP

#include "qlogic/formula.hpp"
#include "qlogic/generic.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace qlogic {

enum class Mode { Strong, Weak };
enum class Status { Sat, Unsat, Unknown };

std::string to_string(Mode m);
std::string to_string(Status s);

struct Literal {
    std::string var;
    bool positive = true;
};
using Clause = std::vector<Literal>;

struct CnfFormula {
    std::vector<Clause> clauses;

    std::vector<std::string> variables() const;
};

// Throws on a clause mentioning one variable twice.
void validate(const CnfFormula& f);
// DIMACS "p cnf"; variable k is named X<k>.
CnfFormula parse_dimacs(std::string_view text);
Formula to_formula(const CnfFormula& f);

struct SatVerdict {
    Status status = Status::Unknown;
    std::optional<Assignment> witness;
    std::string certificate;
};

bool verify(const Formula& f, const Assignment& a, Mode mode);

// Hash-consed subspaces of one ambient with cached connectives.
class Interner {
public:
    explicit Interner(std::size_t d);

    int id(const Subspace& s);
    const Subspace& value(int id) const { return values_[static_cast<std::size_t>(id)]; }
    std::size_t ambient() const { return d_; }
    std::size_t size() const { return values_.size(); }
    int zero() const { return 0; }
    int full() const { return 1; }

    int lnot(int a);
    int land(int a, int b);
    int lor(int a, int b);

private:
    std::size_t d_;
    std::vector<Subspace> values_;
    std::unordered_map<std::string, int> ids_;
    std::vector<int> not_;
    std::unordered_map<std::uint64_t, int> and_, or_;
};

// Straight-line form of a formula with shared subterms merged.
struct Program {
    struct Instr {
        Op op;
        int a = -1, b = -1;
    };
    std::vector<Instr> code;
    std::vector<std::string> leaves;  // a Var/Const instruction reads leaves[a]

    static Program compile(const Formula& f);
    int run(Interner& in, const std::vector<int>& leaf_values, std::vector<int>& scratch) const;
};

SatVerdict decide_cnf(const CnfFormula& f, std::size_t d, Mode mode);

struct TwoDOptions {
    std::size_t max_vars = 8;
    bool allow_large = false;
    // Explicit generic lines to use instead of span(1,1), span(1,2), ...
    std::optional<Family> pool;
    // Values of named constants, all in F^2.
    std::map<std::string, Subspace> constants;
};

SatVerdict decide_2d(const Formula& f, Mode mode, const TwoDOptions& opts = {});

SatVerdict decide_boolean(const Formula& f, std::size_t max_vars = 20);

struct PoolConfig {
    bool booleans = true;
    std::size_t vandermonde_lines = 4;
    std::size_t generic_blocks = 3;
    long graph_slope_range = 1;
    std::size_t depth = 1;
    std::size_t max_pool = 40;
    std::size_t max_candidates = 2000000;
    std::vector<Assignment> seeds;
};

// Incomplete: returns Sat or Unknown, never Unsat.
SatVerdict search(const Formula& f, std::size_t d, Mode mode, const PoolConfig& pool = {});

// For negation-free g with eval(g, a) >= z, dim z = 1.
Assignment shrink_witness(const Formula& g, const Assignment& a, const Subspace& z);

std::size_t weak_dim_bound(const Formula& f);

} // namespace qlogic

#endif
