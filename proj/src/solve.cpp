#include "qlogic/solve.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace qlogic {

std::string to_string(Mode m) { return m == Mode::Strong ? "strong" : "weak"; }

std::string to_string(Status s)
{
    switch (s) {
    case Status::Sat: return "sat";
    case Status::Unsat: return "unsat";
    case Status::Unknown: return "unknown";
    }
    return "unknown";
}

std::vector<std::string> CnfFormula::variables() const
{
    std::set<std::string> vs;
    for (const auto& c : clauses)
        for (const auto& l : c) vs.insert(l.var);
    return {vs.begin(), vs.end()};
}

void validate(const CnfFormula& f)
{
    for (std::size_t i = 0; i < f.clauses.size(); ++i) {
        std::set<std::string> seen;
        for (const auto& l : f.clauses[i])
            if (!seen.insert(l.var).second)
                throw std::invalid_argument("clause " + std::to_string(i + 1) + " repeats variable " + l.var);
    }
}

CnfFormula parse_dimacs(std::string_view text)
{
    std::istringstream in{std::string(text)};
    std::string line;
    CnfFormula f;
    Clause cur;
    bool header = false;
    long nvars = 0, nclauses = 0;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok)) continue;
        if (tok == "c" || tok[0] == 'c' || tok == "%") continue;
        if (tok == "p") {
            std::string kind;
            if (!(ls >> kind >> nvars >> nclauses) || kind != "cnf" || nvars < 0 || nclauses < 0)
                throw std::invalid_argument("malformed DIMACS header: " + line);
            header = true;
            continue;
        }
        if (!header) throw std::invalid_argument("DIMACS clause before header");
        ls.clear();
        ls.str(line);
        long lit = 0;
        while (ls >> lit) {
            if (lit == 0) {
                f.clauses.push_back(cur);
                cur.clear();
                continue;
            }
            long v = lit < 0 ? -lit : lit;
            if (v > nvars) throw std::invalid_argument("DIMACS literal " + std::to_string(lit) + " exceeds variable count");
            cur.push_back({"X" + std::to_string(v), lit > 0});
        }
        if (!ls.eof()) throw std::invalid_argument("malformed DIMACS clause line: " + line);
    }
    if (!header) throw std::invalid_argument("missing DIMACS header");
    if (!cur.empty()) f.clauses.push_back(cur);
    validate(f);
    return f;
}

Formula to_formula(const CnfFormula& f)
{
    std::vector<Formula> cs;
    for (const auto& c : f.clauses) {
        std::vector<Formula> ls;
        for (const auto& l : c) ls.push_back(l.positive ? var(l.var) : lnot(var(l.var)));
        cs.push_back(lor_all(ls));
    }
    return land_all(cs);
}

bool verify(const Formula& f, const Assignment& a, Mode mode)
{
    Subspace v = eval(f, a);
    return mode == Mode::Strong ? v.is_full() : !v.is_zero();
}

// ---------------------------------------------------------------- interned evaluation

Interner::Interner(std::size_t d) : d_(d)
{
    id(Subspace::zero(d));
    if (d == 0) {
        // zero and full coincide; keep id 1 valid
        values_.push_back(Subspace::full(0));
        not_.push_back(-1);
    } else {
        id(Subspace::full(d));
    }
}

int Interner::id(const Subspace& s)
{
    if (s.ambient() != d_) throw std::invalid_argument("interned subspace has wrong ambient dimension");
    auto [it, fresh] = ids_.emplace(s.key(), static_cast<int>(values_.size()));
    if (fresh) {
        values_.push_back(s);
        not_.push_back(-1);
    }
    return it->second;
}

int Interner::lnot(int a)
{
    auto k = static_cast<std::size_t>(a);
    if (not_[k] < 0) {
        int r = id(complement(values_[k]));
        not_[k] = r;
        not_[static_cast<std::size_t>(r)] = a;
    }
    return not_[k];
}

namespace {

std::uint64_t pair_key(int a, int b)
{
    if (a > b) std::swap(a, b);
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(a)) << 32) | static_cast<std::uint32_t>(b);
}

} // namespace

int Interner::land(int a, int b)
{
    if (a == b) return a;
    auto k = pair_key(a, b);
    auto it = and_.find(k);
    if (it != and_.end()) return it->second;
    int r = id(meet(value(a), value(b)));
    and_.emplace(k, r);
    return r;
}

int Interner::lor(int a, int b)
{
    if (a == b) return a;
    auto k = pair_key(a, b);
    auto it = or_.find(k);
    if (it != or_.end()) return it->second;
    int r = id(join(value(a), value(b)));
    or_.emplace(k, r);
    return r;
}

Program Program::compile(const Formula& f)
{
    Program p;
    std::map<std::tuple<int, int, int>, int> shape;
    std::map<std::string, int> leaf_ids;
    std::unordered_map<const Node*, int> seen;
    std::function<int(const Formula&)> go = [&](const Formula& g) -> int {
        auto s = seen.find(g.get());
        if (s != seen.end()) return s->second;
        int a = -1, b = -1;
        switch (g->op) {
        case Op::Var:
        case Op::Const: {
            auto [it, fresh] = leaf_ids.emplace(g->name, static_cast<int>(p.leaves.size()));
            if (fresh) p.leaves.push_back(g->name);
            a = it->second;
            break;
        }
        case Op::Not: a = go(g->l); break;
        case Op::And:
        case Op::Or:
            a = go(g->l);
            b = go(g->r);
            break;
        default: break;
        }
        auto key = std::make_tuple(static_cast<int>(g->op), a, b);
        auto it = shape.find(key);
        int idx;
        if (it != shape.end()) {
            idx = it->second;
        } else {
            idx = static_cast<int>(p.code.size());
            p.code.push_back({g->op, a, b});
            shape.emplace(key, idx);
        }
        seen.emplace(g.get(), idx);
        return idx;
    };
    int root = go(f);
    if (root != static_cast<int>(p.code.size()) - 1) throw std::logic_error("compiled root is not last");
    return p;
}

int Program::run(Interner& in, const std::vector<int>& leaf_values, std::vector<int>& scratch) const
{
    scratch.resize(code.size());
    for (std::size_t i = 0; i < code.size(); ++i) {
        const Instr& c = code[i];
        int v = 0;
        switch (c.op) {
        case Op::Zero: v = in.zero(); break;
        case Op::One: v = in.full(); break;
        case Op::Var:
        case Op::Const: v = leaf_values[static_cast<std::size_t>(c.a)]; break;
        case Op::Not: v = in.lnot(scratch[static_cast<std::size_t>(c.a)]); break;
        case Op::And: v = in.land(scratch[static_cast<std::size_t>(c.a)], scratch[static_cast<std::size_t>(c.b)]); break;
        case Op::Or: v = in.lor(scratch[static_cast<std::size_t>(c.a)], scratch[static_cast<std::size_t>(c.b)]); break;
        }
        scratch[i] = v;
    }
    return scratch.back();
}

namespace {

bool accepts(const Interner& in, int v, Mode mode)
{
    return mode == Mode::Strong ? v == in.full() || in.value(v).is_full() : !in.value(v).is_zero();
}

// ---------------------------------------------------------------- CNF

// Tarjan SCC over literal nodes 2v (positive) and 2v+1 (negative); nullopt when unsatisfiable.
std::optional<std::vector<bool>> two_sat(std::size_t n, const std::vector<std::pair<int, int>>& clauses)
{
    std::size_t m = 2 * n;
    std::vector<std::vector<int>> adj(m);
    for (auto [a, b] : clauses) {
        adj[static_cast<std::size_t>(a ^ 1)].push_back(b);
        adj[static_cast<std::size_t>(b ^ 1)].push_back(a);
    }
    std::vector<int> index(m, -1), low(m, 0), comp(m, -1), stack;
    std::vector<bool> on(m, false);
    int counter = 0, ncomp = 0;
    std::function<void(int)> dfs = [&](int v) {
        auto u = static_cast<std::size_t>(v);
        index[u] = low[u] = counter++;
        stack.push_back(v);
        on[u] = true;
        for (int w : adj[u]) {
            auto x = static_cast<std::size_t>(w);
            if (index[x] < 0) {
                dfs(w);
                low[u] = std::min(low[u], low[x]);
            } else if (on[x]) {
                low[u] = std::min(low[u], index[x]);
            }
        }
        if (low[u] == index[u]) {
            int w;
            do {
                w = stack.back();
                stack.pop_back();
                on[static_cast<std::size_t>(w)] = false;
                comp[static_cast<std::size_t>(w)] = ncomp;
            } while (w != v);
            ++ncomp;
        }
    };
    for (std::size_t v = 0; v < m; ++v)
        if (index[v] < 0) dfs(static_cast<int>(v));
    std::vector<bool> val(n);
    for (std::size_t v = 0; v < n; ++v) {
        if (comp[2 * v] == comp[2 * v + 1]) return std::nullopt;
        // components finish in reverse topological order
        val[v] = comp[2 * v] < comp[2 * v + 1];
    }
    return val;
}

SatVerdict finish(const CnfFormula& f, Assignment a, const std::string& cert, Mode mode)
{
    if (verify(to_formula(f), a, mode)) return {Status::Sat, std::move(a), cert};
    return {Status::Unknown, std::nullopt, cert + ": witness failed verification"};
}

SatVerdict decide_cnf_weak(const CnfFormula& f, std::size_t d)
{
    std::set<std::pair<std::string, bool>> units;
    for (const auto& c : f.clauses)
        if (c.size() == 1) units.insert({c[0].var, c[0].positive});
    for (const auto& c : f.clauses) {
        bool all_false = true;
        for (const auto& l : c) all_false = all_false && units.count({l.var, !l.positive});
        if (all_false) return {Status::Unsat, std::nullopt, "weak-unit-falsified"};
    }
    std::vector<std::string> vars = f.variables();
    Family fam = pairwise_generic(2, vars.size() + 1);
    const Subspace& line = fam.members[0];
    Assignment a;
    a.ambient = d;
    for (std::size_t i = 0; i < vars.size(); ++i) {
        Subspace v = fam.members[i + 1];
        if (units.count({vars[i], true})) v = line;
        if (units.count({vars[i], false})) v = complement(line);
        a.bind(vars[i], embed(v, d - 2));
    }
    return finish(f, std::move(a), "weak-embedded-generic", Mode::Weak);
}

SatVerdict decide_cnf_strong(const CnfFormula& f, std::size_t d)
{
    std::vector<std::string> vars = f.variables();
    std::map<std::string, bool> forced;
    std::vector<Clause> work = f.clauses;
    while (true) {
        std::vector<Clause> next;
        for (const auto& c : work) {
            Clause kept;
            bool sat = false;
            for (const auto& l : c) {
                auto it = forced.find(l.var);
                if (it == forced.end()) kept.push_back(l);
                else if (it->second == l.positive) sat = true;
            }
            if (sat) continue;
            if (kept.empty()) return {Status::Unsat, std::nullopt, "unit-contradiction"};
            next.push_back(kept);
        }
        work = std::move(next);
        auto unit = std::find_if(work.begin(), work.end(), [](const Clause& c) { return c.size() == 1; });
        if (unit == work.end()) break;
        forced[(*unit)[0].var] = (*unit)[0].positive;
    }

    std::vector<std::string> free_vars;
    {
        std::set<std::string> s;
        for (const auto& c : work)
            for (const auto& l : c) s.insert(l.var);
        free_vars.assign(s.begin(), s.end());
    }
    Assignment a;
    a.ambient = d;
    for (const auto& v : vars) {
        auto it = forced.find(v);
        a.bind(v, it != forced.end() && it->second ? Subspace::full(d) : Subspace::zero(d));
    }
    if (d % 2 == 0) {
        Family fam = pairwise_generic(d, free_vars.size());
        for (std::size_t i = 0; i < free_vars.size(); ++i) a.bind(free_vars[i], fam.members[i]);
        return finish(f, std::move(a), "even-generic", Mode::Strong);
    }

    std::map<std::string, int> index;
    for (std::size_t i = 0; i < free_vars.size(); ++i) index[free_vars[i]] = static_cast<int>(i);
    std::vector<std::pair<int, int>> pairs;
    for (const auto& c : work)
        if (c.size() == 2) {
            auto lit = [&](const Literal& l) { return 2 * index[l.var] + (l.positive ? 0 : 1); };
            pairs.push_back({lit(c[0]), lit(c[1])});
        }
    auto b = two_sat(free_vars.size(), pairs);
    if (!b) return {Status::Unsat, std::nullopt, "odd-2sat-unsat"};

    // V_i spanned by h Vandermonde vectors at positive points unique to i
    std::size_t h = (d - 1) / 2;
    for (std::size_t i = 0; i < free_vars.size(); ++i) {
        std::vector<mpq_class> pts;
        for (std::size_t k = 0; k < h; ++k) pts.emplace_back(static_cast<long>(i * h + k + 1));
        Family lines = vandermonde_generic(d, h, pts);
        Subspace v = Subspace::zero(d);
        for (const auto& m : lines.members) v = join(v, m);
        a.bind(free_vars[i], (*b)[i] ? complement(v) : v);
    }
    return finish(f, std::move(a), "odd-mixed-vandermonde", Mode::Strong);
}

} // namespace

SatVerdict decide_cnf(const CnfFormula& f, std::size_t d, Mode mode)
{
    validate(f);
    if (d == 0) throw std::invalid_argument("decide_cnf needs d >= 1");
    if (d == 1) {
        SatVerdict v = decide_boolean(to_formula(f));
        v.certificate = "d1-" + v.certificate;
        return v;
    }
    return mode == Mode::Weak ? decide_cnf_weak(f, d) : decide_cnf_strong(f, d);
}

// ---------------------------------------------------------------- 2D

SatVerdict decide_2d(const Formula& f, Mode mode, const TwoDOptions& opts)
{
    std::set<std::string> vset = variables(f), cset = constants(f);
    std::vector<std::string> vars(vset.begin(), vset.end());
    std::size_t n = vars.size();
    if (n > opts.max_vars && !opts.allow_large)
        return {Status::Unknown, std::nullopt,
                "variable-cap: " + std::to_string(n) + " variables exceed " + std::to_string(opts.max_vars)};

    Interner in(2);
    std::vector<int> fixed{in.zero(), in.full()};
    std::vector<Subspace> const_lines;
    for (const auto& c : cset) {
        auto it = opts.constants.find(c);
        if (it == opts.constants.end()) throw std::invalid_argument("constant " + c + " has no 2D value");
        if (it->second.ambient() != 2) throw std::invalid_argument("constant " + c + " is not in F^2");
    }
    auto collides = [&](const Subspace& s) {
        for (const auto& l : const_lines)
            if (s == l || s == complement(l)) return true;
        return false;
    };
    for (const auto& c : cset) {
        const Subspace& s = opts.constants.at(c);
        if (s.dim() == 1 && !collides(s)) {
            const_lines.push_back(s);
            fixed.push_back(in.id(s));
            fixed.push_back(in.lnot(in.id(s)));
        }
    }
    std::vector<Subspace> fresh;
    if (opts.pool) {
        if (opts.pool->ambient != 2 || !is_pairwise_generic(*opts.pool))
            throw std::invalid_argument("2D pool must be a pairwise generic family of lines");
        for (const auto& m : opts.pool->members)
            if (fresh.size() < n && !collides(m)) fresh.push_back(m);
        if (fresh.size() < n) throw std::invalid_argument("2D pool has too few lines generic to the constants");
    } else {
        for (long q = 1; fresh.size() < n; ++q) {
            Subspace s = Subspace::span(2, {{Scalar(1), Scalar(q)}});
            if (!collides(s)) fresh.push_back(s);
        }
    }
    std::vector<int> pos, neg;
    for (const auto& s : fresh) {
        pos.push_back(in.id(s));
        neg.push_back(in.lnot(pos.back()));
    }

    Program prog = Program::compile(f);
    std::vector<int> leaf(prog.leaves.size(), 0);
    std::vector<std::size_t> var_slot(n, 0);
    for (std::size_t k = 0; k < prog.leaves.size(); ++k) {
        const std::string& name = prog.leaves[k];
        if (cset.count(name)) leaf[k] = in.id(opts.constants.at(name));
        else var_slot[static_cast<std::size_t>(std::find(vars.begin(), vars.end(), name) - vars.begin())] = k;
    }
    std::vector<int> chosen(n), scratch;
    // fresh lines are interchangeable up to order and complement, so a new one always enters as the next V_k
    std::function<bool(std::size_t, std::size_t)> dfs = [&](std::size_t i, std::size_t used) -> bool {
        if (i == n) return accepts(in, prog.run(in, leaf, scratch), mode);
        std::vector<int> options = fixed;
        for (std::size_t k = 0; k < used; ++k) {
            options.push_back(pos[k]);
            options.push_back(neg[k]);
        }
        for (int o : options) {
            chosen[i] = o;
            leaf[var_slot[i]] = o;
            if (dfs(i + 1, used)) return true;
        }
        if (used < n) {
            chosen[i] = pos[used];
            leaf[var_slot[i]] = pos[used];
            if (dfs(i + 1, used + 1)) return true;
        }
        return false;
    };
    if (!dfs(0, 0)) return {Status::Unsat, std::nullopt, "2d-exhaustive"};
    Assignment a;
    a.ambient = 2;
    for (std::size_t i = 0; i < n; ++i) a.bind(vars[i], in.value(chosen[i]));
    for (const auto& c : cset) a.bind(c, opts.constants.at(c));
    return {Status::Sat, std::move(a), "2d-exhaustive"};
}

// ---------------------------------------------------------------- Boolean

SatVerdict decide_boolean(const Formula& f, std::size_t max_vars)
{
    if (!constants(f).empty()) throw std::invalid_argument("Boolean decision does not accept named constants");
    Program prog = Program::compile(f);
    std::size_t n = prog.leaves.size();
    if (n > max_vars || n > 62)
        throw std::invalid_argument("Boolean decision capped at " + std::to_string(max_vars) + " variables, got " +
                                    std::to_string(n));
    std::vector<char> val(prog.code.size());
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        for (std::size_t i = 0; i < prog.code.size(); ++i) {
            const auto& c = prog.code[i];
            auto a = static_cast<std::size_t>(c.a), b = static_cast<std::size_t>(c.b);
            switch (c.op) {
            case Op::Zero: val[i] = 0; break;
            case Op::One: val[i] = 1; break;
            case Op::Var:
            case Op::Const: val[i] = static_cast<char>((mask >> a) & 1U); break;
            case Op::Not: val[i] = static_cast<char>(!val[a]); break;
            case Op::And: val[i] = static_cast<char>(val[a] && val[b]); break;
            case Op::Or: val[i] = static_cast<char>(val[a] || val[b]); break;
            }
        }
        if (val.back()) {
            Assignment w;
            w.ambient = 1;
            for (std::size_t k = 0; k < n; ++k)
                w.bind(prog.leaves[k], (mask >> k) & 1U ? Subspace::full(1) : Subspace::zero(1));
            return {Status::Sat, std::move(w), "boolean-exhaustive"};
        }
    }
    return {Status::Unsat, std::nullopt, "boolean-exhaustive"};
}

// ---------------------------------------------------------------- pool search

SatVerdict search(const Formula& f, std::size_t d, Mode mode, const PoolConfig& cfg)
{
    std::set<std::string> names = variables(f);
    for (const auto& c : constants(f)) names.insert(c);
    std::vector<std::string> vars(names.begin(), names.end());

    for (const auto& s : cfg.seeds) {
        if (s.ambient != d) continue;
        bool complete = std::all_of(vars.begin(), vars.end(), [&](const std::string& v) { return s.has(v); });
        if (complete && verify(f, s, mode)) return {Status::Sat, s, "seeded-witness"};
    }

    Interner in(d);
    std::vector<int> pool;
    std::set<int> in_pool;
    auto add = [&](const Subspace& s) {
        if (pool.size() >= cfg.max_pool) return;
        int id = in.id(s);
        if (in_pool.insert(id).second) pool.push_back(id);
    };
    if (cfg.booleans) {
        add(Subspace::zero(d));
        add(Subspace::full(d));
    }
    for (const auto& s : cfg.seeds)
        if (s.ambient == d)
            for (const auto& [n, v] : s.bindings) add(v);
    if (d >= 1 && cfg.vandermonde_lines > 0)
        for (const auto& m : vandermonde_generic(d, cfg.vandermonde_lines).members) {
            add(m);
            add(complement(m));
        }
    if (d >= 2 && d % 2 == 0) {
        if (cfg.generic_blocks > 0)
            for (const auto& m : pairwise_generic(d, cfg.generic_blocks).members) {
                add(m);
                add(complement(m));
            }
        std::size_t h = d / 2;
        for (long s = -cfg.graph_slope_range; s <= cfg.graph_slope_range; ++s) {
            // graphs of s*I and of s*I plus the upper shift
            for (int shift = 0; shift < 2; ++shift) {
                Matrix m(h, d);
                for (std::size_t k = 0; k < h; ++k) {
                    m.at(k, k) = 1;
                    m.at(k, h + k) = s;
                    if (shift && k + 1 < h) m.at(k, h + k + 1) = 1;
                }
                add(Subspace::row_space(m));
            }
        }
    }
    for (std::size_t level = 1; level < cfg.depth && pool.size() < cfg.max_pool; ++level) {
        std::vector<int> cur = pool;
        for (std::size_t i = 0; i < cur.size(); ++i) {
            add(in.value(in.lnot(cur[i])));
            for (std::size_t j = i + 1; j < cur.size(); ++j) {
                add(in.value(in.land(cur[i], cur[j])));
                add(in.value(in.lor(cur[i], cur[j])));
            }
        }
    }
    if (pool.empty()) return {Status::Unknown, std::nullopt, "empty-pool"};

    Program prog = Program::compile(f);
    std::vector<std::size_t> slot(vars.size());
    for (std::size_t k = 0; k < prog.leaves.size(); ++k)
        slot[static_cast<std::size_t>(std::find(vars.begin(), vars.end(), prog.leaves[k]) - vars.begin())] = k;
    std::vector<int> leaf(prog.leaves.size(), 0), scratch;
    std::vector<std::size_t> digit(vars.size(), 0);
    for (std::size_t count = 0; count < cfg.max_candidates; ++count) {
        for (std::size_t i = 0; i < vars.size(); ++i) leaf[slot[i]] = pool[digit[i]];
        if (accepts(in, prog.run(in, leaf, scratch), mode)) {
            Assignment a;
            a.ambient = d;
            for (std::size_t i = 0; i < vars.size(); ++i) a.bind(vars[i], in.value(pool[digit[i]]));
            return {Status::Sat, std::move(a), "pool-search"};
        }
        std::size_t i = vars.size();
        while (i > 0 && ++digit[i - 1] == pool.size()) digit[--i] = 0;
        if (i == 0) return {Status::Unknown, std::nullopt, "pool-exhausted"};
    }
    return {Status::Unknown, std::nullopt, "candidate-cap"};
}

// ---------------------------------------------------------------- shrinking

namespace {

void shrink_into(const Formula& g, const Assignment& a, const Vec& v, std::map<std::string, Subspace>& out)
{
    std::size_t d = a.ambient;
    switch (g->op) {
    case Op::One: return;
    case Op::Zero: throw std::invalid_argument("shrink_witness: vector not below the value");
    case Op::Not: throw std::invalid_argument("shrink_witness expects a negation-free formula");
    case Op::Var:
    case Op::Const: {
        auto it = out.find(g->name);
        Subspace s = Subspace::span(d, {v});
        if (it == out.end()) out.emplace(g->name, s);
        else it->second = join(it->second, s);
        return;
    }
    case Op::And:
        shrink_into(g->l, a, v, out);
        shrink_into(g->r, a, v, out);
        return;
    case Op::Or: {
        Subspace p = eval(g->l, a), q = eval(g->r, a);
        Matrix m(d, p.dim() + q.dim());
        for (std::size_t k = 0; k < p.dim(); ++k)
            for (std::size_t j = 0; j < d; ++j) m.at(j, k) = p.basis().at(k, j);
        for (std::size_t k = 0; k < q.dim(); ++k)
            for (std::size_t j = 0; j < d; ++j) m.at(j, p.dim() + k) = q.basis().at(k, j);
        auto c = solve(m, v);
        if (!c) throw std::invalid_argument("shrink_witness: vector not below the value");
        Vec vp(d), vq(d);
        for (std::size_t k = 0; k < p.dim(); ++k)
            for (std::size_t j = 0; j < d; ++j) vp[j] += (*c)[k] * p.basis().at(k, j);
        for (std::size_t j = 0; j < d; ++j) vq[j] = v[j] - vp[j];
        auto nonzero = [](const Vec& x) {
            return std::any_of(x.begin(), x.end(), [](const Scalar& s) { return !s.is_zero(); });
        };
        if (nonzero(vp)) shrink_into(g->l, a, vp, out);
        if (nonzero(vq)) shrink_into(g->r, a, vq, out);
        return;
    }
    }
}

} // namespace

Assignment shrink_witness(const Formula& g, const Assignment& a, const Subspace& z)
{
    if (z.ambient() != a.ambient || z.dim() != 1) throw std::invalid_argument("shrink_witness needs a line z");
    if (!z.leq(eval(g, a))) throw std::invalid_argument("shrink_witness: z is not below the value of g");
    std::map<std::string, Subspace> parts;
    shrink_into(g, a, z.basis().row(0), parts);
    Assignment out;
    out.ambient = a.ambient;
    for (const auto& [n, s] : a.bindings) {
        auto it = parts.find(n);
        out.bind(n, it == parts.end() ? Subspace::zero(a.ambient) : it->second);
    }
    return out;
}

std::size_t weak_dim_bound(const Formula& f) { return variables(f).size() * length(f); }

} // namespace qlogic
