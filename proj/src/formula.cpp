#include "qlogic/formula.hpp"

#include <cctype>
#include <sstream>
#include <unordered_map>

namespace qlogic {

namespace {

Formula make(Op op, std::string name = {}, Formula l = nullptr, Formula r = nullptr)
{
    return std::make_shared<const Node>(Node{op, std::move(name), std::move(l), std::move(r)});
}

} // namespace

Formula lzero()
{
    static const Formula z = make(Op::Zero);
    return z;
}

Formula lone()
{
    static const Formula o = make(Op::One);
    return o;
}

Formula var(const std::string& name) { return make(Op::Var, name); }
Formula cst(const std::string& name) { return make(Op::Const, name); }
Formula lnot(Formula a) { return make(Op::Not, {}, std::move(a)); }
Formula land(Formula a, Formula b) { return make(Op::And, {}, std::move(a), std::move(b)); }
Formula lor(Formula a, Formula b) { return make(Op::Or, {}, std::move(a), std::move(b)); }

Formula land_all(const std::vector<Formula>& fs)
{
    if (fs.empty()) return lone();
    Formula acc = fs[0];
    for (std::size_t k = 1; k < fs.size(); ++k) acc = land(acc, fs[k]);
    return acc;
}

Formula lor_all(const std::vector<Formula>& fs)
{
    if (fs.empty()) return lzero();
    Formula acc = fs[0];
    for (std::size_t k = 1; k < fs.size(); ++k) acc = lor(acc, fs[k]);
    return acc;
}

bool equal(const Formula& a, const Formula& b)
{
    if (a == b) return true;
    if (!a || !b || a->op != b->op || a->name != b->name) return false;
    return equal(a->l, b->l) && equal(a->r, b->r);
}

std::size_t length(const Formula& f)
{
    if (!f) return 0;
    return 1 + length(f->l) + length(f->r);
}

namespace {

void collect(const Formula& f, Op op, std::set<std::string>& out)
{
    if (!f) return;
    if (f->op == op) out.insert(f->name);
    collect(f->l, op, out);
    collect(f->r, op, out);
}

} // namespace

std::set<std::string> variables(const Formula& f)
{
    std::set<std::string> s;
    collect(f, Op::Var, s);
    return s;
}

std::set<std::string> constants(const Formula& f)
{
    std::set<std::string> s;
    collect(f, Op::Const, s);
    return s;
}

Formula rename_vars(const Formula& f, const std::function<std::string(const std::string&)>& fn)
{
    switch (f->op) {
    case Op::Var: return var(fn(f->name));
    case Op::Zero:
    case Op::One:
    case Op::Const: return f;
    case Op::Not: return lnot(rename_vars(f->l, fn));
    case Op::And: return land(rename_vars(f->l, fn), rename_vars(f->r, fn));
    case Op::Or: return lor(rename_vars(f->l, fn), rename_vars(f->r, fn));
    }
    return f;
}

Formula substitute(const Formula& f, const std::map<std::string, Formula>& by_var)
{
    switch (f->op) {
    case Op::Var: {
        auto it = by_var.find(f->name);
        return it == by_var.end() ? f : it->second;
    }
    case Op::Zero:
    case Op::One:
    case Op::Const: return f;
    case Op::Not: return lnot(substitute(f->l, by_var));
    case Op::And: return land(substitute(f->l, by_var), substitute(f->r, by_var));
    case Op::Or: return lor(substitute(f->l, by_var), substitute(f->r, by_var));
    }
    return f;
}

Formula commutator_f(const Formula& x, const Formula& y)
{
    Formula nx = lnot(x), ny = lnot(y);
    return lor(lor(lor(land(x, y), land(x, ny)), land(nx, y)), land(nx, ny));
}

Formula semicommutator_f(const Formula& x, const Formula& y) { return lor(land(x, y), land(x, lnot(y))); }
Formula eq_f(const Formula& x, const Formula& y) { return lor(land(x, y), land(lnot(x), lnot(y))); }
Formula proj_f(const Formula& x, const Formula& z) { return land(z, lor(x, lnot(z))); }
Formula leq_f(const Formula& x, const Formula& z) { return lor(lnot(x), land(x, z)); }

// ---------------------------------------------------------------- parsing

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_'; }

class Parser {
public:
    Parser(std::string_view s, const std::set<std::string>& consts) : s_(s), consts_(consts) {}

    Formula run()
    {
        Formula f = parse_or();
        skip();
        if (p_ != s_.size()) throw ParseError(std::string("unexpected '") + s_[p_] + "'", p_);
        return f;
    }

private:
    void skip()
    {
        while (p_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[p_]))) ++p_;
    }

    char peek()
    {
        skip();
        return p_ < s_.size() ? s_[p_] : '\0';
    }

    void expect(char c)
    {
        if (peek() != c) {
            if (p_ >= s_.size()) throw ParseError(std::string("expected '") + c + "' but input ended", p_);
            throw ParseError(std::string("expected '") + c + "'", p_);
        }
        ++p_;
    }

    Formula parse_or()
    {
        Formula a = parse_and();
        while (peek() == '|') {
            ++p_;
            a = lor(a, parse_and());
        }
        return a;
    }

    Formula parse_and()
    {
        Formula a = parse_unary();
        while (peek() == '&') {
            ++p_;
            a = land(a, parse_unary());
        }
        return a;
    }

    Formula parse_unary()
    {
        if (peek() == '!') {
            ++p_;
            return lnot(parse_unary());
        }
        return parse_atom();
    }

    Formula parse_atom()
    {
        char c = peek();
        if (c == '\0') throw ParseError("unexpected end of input", p_);
        if (c == '(') {
            ++p_;
            Formula f = parse_or();
            expect(')');
            return f;
        }
        if (c == '0' || c == '1') {
            ++p_;
            if (p_ < s_.size() && ident_char(s_[p_])) throw ParseError("malformed constant", p_);
            return c == '0' ? lzero() : lone();
        }
        if (!ident_start(c)) throw ParseError(std::string("unexpected '") + c + "'", p_);
        std::size_t start = p_;
        while (p_ < s_.size() && ident_char(s_[p_])) ++p_;
        while (p_ < s_.size() && s_[p_] == '\'') ++p_;
        std::string name(s_.substr(start, p_ - start));
        if ((name == "C" || name == "proj" || name == "eq" || name == "leq") && peek() == '(') {
            ++p_;
            Formula a = parse_or();
            expect(',');
            Formula b = parse_or();
            expect(')');
            if (name == "C") return commutator_f(a, b);
            if (name == "proj") return proj_f(a, b);
            if (name == "eq") return eq_f(a, b);
            return leq_f(a, b);
        }
        return consts_.count(name) ? cst(name) : var(name);
    }

    std::string_view s_;
    const std::set<std::string>& consts_;
    std::size_t p_ = 0;
};

int prec(const Formula& f)
{
    switch (f->op) {
    case Op::Or: return 1;
    case Op::And: return 2;
    case Op::Not: return 3;
    default: return 4;
    }
}

bool match_commutator(const Formula& f, Formula& x, Formula& y)
{
    if (f->op != Op::Or || f->l->op != Op::Or || f->l->l->op != Op::Or) return false;
    const Formula& a1 = f->l->l->l;
    if (a1->op != Op::And) return false;
    x = a1->l;
    y = a1->r;
    return equal(f->l->l->r, land(x, lnot(y))) && equal(f->l->r, land(lnot(x), y)) &&
           equal(f->r, land(lnot(x), lnot(y)));
}

void emit(const Formula& f, int ctx, std::ostream& os)
{
    Formula x, y;
    if (match_commutator(f, x, y)) {
        os << "C(";
        emit(x, 0, os);
        os << ", ";
        emit(y, 0, os);
        os << ')';
        return;
    }
    int p = prec(f);
    bool paren = p < ctx;
    if (paren) os << '(';
    switch (f->op) {
    case Op::Zero: os << '0'; break;
    case Op::One: os << '1'; break;
    case Op::Var:
    case Op::Const: os << f->name; break;
    case Op::Not:
        os << '!';
        emit(f->l, 3, os);
        break;
    case Op::And:
        emit(f->l, 2, os);
        os << " & ";
        emit(f->r, 3, os);
        break;
    case Op::Or:
        emit(f->l, 1, os);
        os << " | ";
        emit(f->r, 2, os);
        break;
    }
    if (paren) os << ')';
}

} // namespace

Formula parse(std::string_view text, const std::set<std::string>& constant_names)
{
    return Parser(text, constant_names).run();
}

std::string print(const Formula& f)
{
    std::ostringstream os;
    emit(f, 0, os);
    return os.str();
}

// ---------------------------------------------------------------- evaluation

void Assignment::bind(const std::string& name, const Subspace& s)
{
    if (s.ambient() != ambient)
        throw std::invalid_argument("binding " + name + " has ambient " + std::to_string(s.ambient()) +
                                    ", expected " + std::to_string(ambient));
    bindings[name] = s;
}

const Subspace& Assignment::at(const std::string& name) const
{
    auto it = bindings.find(name);
    if (it == bindings.end()) throw std::out_of_range("unbound name: " + name);
    return it->second;
}

namespace {

struct Evaluator {
    const Assignment& a;
    Subspace top;
    std::unordered_map<const Node*, Subspace> memo;

    Subspace run(const Formula& f)
    {
        auto it = memo.find(f.get());
        if (it != memo.end()) return it->second;
        Subspace v;
        switch (f->op) {
        case Op::Zero: v = Subspace::zero(top.ambient()); break;
        case Op::One: v = top; break;
        case Op::Var:
        case Op::Const: v = a.at(f->name); break;
        case Op::Not: v = meet(top, complement(run(f->l))); break;
        case Op::And: v = meet(run(f->l), run(f->r)); break;
        case Op::Or: v = join(run(f->l), run(f->r)); break;
        }
        memo.emplace(f.get(), v);
        return v;
    }
};

} // namespace

Subspace eval(const Formula& f, const Assignment& a, const std::optional<Subspace>& z)
{
    Subspace top = z ? *z : Subspace::full(a.ambient);
    if (top.ambient() != a.ambient) throw std::invalid_argument("relative top has wrong ambient dimension");
    if (z) {
        std::set<std::string> names = variables(f);
        auto cs = constants(f);
        names.insert(cs.begin(), cs.end());
        for (const auto& n : names)
            if (!a.at(n).leq(top)) throw std::invalid_argument("binding " + n + " is not below the relative top");
    }
    Evaluator ev{a, top, {}};
    return ev.run(f);
}

// ---------------------------------------------------------------- negation-free form

std::string primed(const std::string& name) { return name + "'"; }

namespace {

using LeafFn = std::function<Formula(const Formula&, bool)>;

Formula push_neg(const Formula& f, bool neg, const Formula& top, const LeafFn& leaf)
{
    switch (f->op) {
    case Op::Zero: return neg ? top : lzero();
    case Op::One: return neg ? lzero() : top;
    case Op::Var:
    case Op::Const: return leaf(f, neg);
    case Op::Not: return push_neg(f->l, !neg, top, leaf);
    case Op::And:
        if (neg) return lor(push_neg(f->l, true, top, leaf), push_neg(f->r, true, top, leaf));
        return land(push_neg(f->l, false, top, leaf), push_neg(f->r, false, top, leaf));
    case Op::Or:
        if (neg) return land(push_neg(f->l, true, top, leaf), push_neg(f->r, true, top, leaf));
        return lor(push_neg(f->l, false, top, leaf), push_neg(f->r, false, top, leaf));
    }
    return f;
}

} // namespace

Formula nnf(const Formula& f)
{
    return push_neg(f, false, lone(), [](const Formula& leaf, bool neg) {
        if (!neg) return leaf;
        return leaf->op == Op::Var ? var(primed(leaf->name)) : cst(primed(leaf->name));
    });
}

// ---------------------------------------------------------------- gadgets

const char* const kRestrictPrefix = "G_";

Formula restrict(const Formula& f, const Formula& g)
{
    std::set<std::string> fv = variables(f);
    std::string prefix = kRestrictPrefix;
    auto clash = [&](const std::string& p) {
        for (const auto& v : variables(g))
            if (fv.count(p + v)) return true;
        return false;
    };
    while (clash(prefix)) prefix += kRestrictPrefix;
    Formula gr = rename_vars(g, [&](const std::string& v) { return prefix + v; });
    return push_neg(f, false, gr, [&](const Formula& leaf, bool neg) {
        Formula base = land(leaf, gr);
        return neg ? land(lnot(base), gr) : base;
    });
}

std::string copy_name(const std::string& name, std::size_t copy) { return name + "_" + std::to_string(copy); }

Formula sum_f(const Formula& f, const Formula& g)
{
    std::set<std::string> fv = variables(f), gv = variables(g);
    std::map<std::string, std::string> ren;
    std::set<std::string> taken = fv;
    taken.insert(gv.begin(), gv.end());
    for (const auto& v : gv) {
        if (!fv.count(v)) continue;
        std::string n = v + "_2";
        while (taken.count(n)) n += "_2";
        taken.insert(n);
        ren[v] = n;
    }
    Formula g2 = rename_vars(g, [&](const std::string& v) {
        auto it = ren.find(v);
        return it == ren.end() ? v : it->second;
    });
    return lor(f, g2);
}

Formula multiple(std::size_t k, const Formula& f)
{
    if (k == 0) return lzero();
    if (k == 1) return f;
    std::vector<Formula> copies;
    for (std::size_t c = 1; c <= k; ++c)
        copies.push_back(rename_vars(f, [c](const std::string& v) { return copy_name(v, c); }));
    return lor_all(copies);
}

std::string yname(std::size_t i) { return "Y" + std::to_string(i); }
std::string xname(std::size_t i) { return "X" + std::to_string(i); }

Formula generic_over(const std::vector<Formula>& ys, std::size_t d)
{
    if (ys.size() < d || d == 0) throw std::invalid_argument("generic formula needs at least d >= 1 arguments");
    if (ys.size() > d) {
        std::vector<Formula> parts;
        std::vector<std::size_t> idx(d);
        for (std::size_t k = 0; k < d; ++k) idx[k] = k;
        while (true) {
            std::vector<Formula> sub;
            for (auto k : idx) sub.push_back(ys[k]);
            parts.push_back(generic_over(sub, d));
            std::size_t k = d;
            while (k > 0 && idx[k - 1] == ys.size() - d + (k - 1)) --k;
            if (k == 0) break;
            ++idx[k - 1];
            for (std::size_t j = k; j < d; ++j) idx[j] = idx[j - 1] + 1;
        }
        return land_all(parts);
    }
    std::vector<Formula> terms{lor_all(ys)};
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            if (i != j) terms.push_back(lor(lnot(ys[i]), ys[j]));
    for (std::size_t j = 0; j < d; ++j) {
        std::vector<Formula> others;
        for (std::size_t i = 0; i < d; ++i)
            if (i != j) others.push_back(ys[i]);
        terms.push_back(lor(lnot(ys[j]), lnot(lor_all(others))));
    }
    return land_all(terms);
}

Formula generic_f(std::size_t d) { return generic_f(d, d); }

Formula generic_f(std::size_t d, std::size_t n)
{
    std::vector<Formula> ys;
    for (std::size_t i = 1; i <= n; ++i) ys.push_back(var(yname(i)));
    return generic_over(ys, d);
}

Formula indicator_gI(const std::vector<bool>& in_I, std::size_t n)
{
    if (in_I.size() != n) throw std::invalid_argument("indicator subset has wrong length");
    std::vector<Formula> terms;
    for (std::size_t i = 0; i < n; ++i) {
        Formula y = var(yname(i + 1));
        terms.push_back(in_I[i] ? y : lnot(y));
    }
    return land_all(terms);
}

namespace {

std::size_t ceil_log2(std::size_t m)
{
    std::size_t n = 0;
    while ((std::size_t{1} << n) < m) ++n;
    return n;
}

Formula psi1(std::size_t m)
{
    std::size_t n = ceil_log2(m);
    Formula x = var("X");
    Formula p = x;
    for (std::size_t k = 0; k < m; ++k) {
        std::vector<bool> in_I(n);
        for (std::size_t b = 0; b < n; ++b) in_I[b] = ((k >> b) & 1U) != 0;
        Formula z = indicator_gI(in_I, n);
        p = proj_f(proj_f(p, z), x);
    }
    return p;
}

} // namespace

Formula psi(std::size_t k, std::size_t m)
{
    if (k == 0 || m == 0) throw std::invalid_argument("psi indices must be positive");
    return multiple(k, psi1(m));
}

Formula psi12()
{
    Formula x = var("X"), z = var("Z");
    return proj_f(proj_f(proj_f(x, z), x), lnot(z));
}

Formula hagge_h()
{
    Formula p = var("p"), q = var("q"), r = var("r");
    return land(land(land(lor(p, q), lor(p, r)), lor(lnot(q), lnot(r))), lnot(p));
}

Formula big_psi(std::size_t d)
{
    if (d == 0) throw std::invalid_argument("big_psi needs d >= 1");
    std::size_t n = 0;
    while ((std::size_t{2} << n) <= d) ++n;
    auto X = [](std::size_t i) { return var(xname(i)); };
    auto Y = [](std::size_t i) { return var(yname(i)); };
    auto Z = [](std::size_t i) { return var("Z" + std::to_string(i)); };
    auto W = [](std::size_t i) { return var("W" + std::to_string(i)); };

    std::vector<Formula> terms;
    if (d == (std::size_t{1} << n)) {
        terms.push_back(X(n + 1));
    } else {
        std::vector<std::size_t> bits;
        for (std::size_t i = 0; i <= n; ++i)
            if ((d >> i) & 1U) bits.push_back(i);
        std::vector<Formula> top;
        for (auto i : bits) top.push_back(Z(i + 1));
        terms.push_back(lor_all(top));
        for (auto i : bits) {
            terms.push_back(lor(Z(i + 1), lnot(X(i + 1))));
            terms.push_back(lor(X(i + 1), lnot(Z(i + 1))));
        }
        terms.push_back(lnot(W(bits[0] + 1)));
        for (std::size_t k = 0; k < bits.size(); ++k) {
            std::size_t i = bits[k] + 1;
            terms.push_back(lnot(land(Z(i), W(i))));
            if (k + 1 < bits.size()) terms.push_back(eq_f(W(bits[k + 1] + 1), lor(Z(i), W(i))));
        }
    }
    for (std::size_t i = 1; i <= n; ++i) {
        Formula xi = X(i), yi = Y(i), xy = lor(xi, yi);
        terms.push_back(land(land(land(lor(xi, lnot(yi)), lor(yi, lnot(xi))), lor(lnot(xi), lnot(yi))),
                             eq_f(X(i + 1), xy)));
    }
    return land_all(terms);
}

Assignment big_psi_witness(std::size_t d, const std::optional<Vec>& first_line)
{
    if (d == 0) throw std::invalid_argument("big_psi witness needs d >= 1");
    std::vector<Vec> candidates;
    if (first_line) candidates.push_back(*first_line);
    for (std::size_t j = 0; j < d; ++j) {
        Vec e(d);
        e[j] = 1;
        candidates.push_back(e);
    }
    std::vector<Vec> b;
    for (const auto& u : candidates) {
        Vec v = u;
        for (const auto& w : b) {
            Scalar c = inner(u, w) / inner(w, w);
            for (std::size_t k = 0; k < d; ++k) v[k] -= c * w[k];
        }
        bool nonzero = false;
        for (const auto& x : v) nonzero = nonzero || !x.is_zero();
        if (nonzero) b.push_back(v);
        if (b.size() == d) break;
    }
    auto sum = [d](const Vec& a, const Vec& c) {
        Vec s(d);
        for (std::size_t k = 0; k < d; ++k) s[k] = a[k] + c[k];
        return s;
    };
    auto first = [&](std::size_t m) { return Subspace::span(d, std::vector<Vec>(b.begin(), b.begin() + m)); };

    std::size_t n = 0;
    while ((std::size_t{2} << n) <= d) ++n;
    Assignment a;
    a.ambient = d;
    for (std::size_t i = 1; i <= n + 1; ++i) a.bind(xname(i), first(std::size_t{1} << (i - 1)));
    for (std::size_t i = 1; i <= n; ++i) {
        std::size_t m = std::size_t{1} << (i - 1);
        std::vector<Vec> diag;
        for (std::size_t j = 0; j < m; ++j) diag.push_back(sum(b[j], b[m + j]));
        a.bind(yname(i), Subspace::span(d, diag));
    }
    if (d != (std::size_t{1} << n)) {
        std::vector<std::size_t> bits;
        for (std::size_t i = 0; i <= n; ++i)
            if ((d >> i) & 1U) bits.push_back(i);
        std::size_t offset = 0;
        std::map<std::size_t, Subspace> z;
        for (auto it = bits.rbegin(); it != bits.rend(); ++it) {
            std::size_t m = std::size_t{1} << *it;
            std::vector<Vec> vs;
            for (std::size_t j = 0; j < m; ++j) vs.push_back(offset == 0 ? b[j] : sum(b[j], b[offset + j]));
            z[*it] = Subspace::span(d, vs);
            offset += m;
        }
        Subspace w = Subspace::zero(d);
        for (auto i : bits) {
            a.bind("Z" + std::to_string(i + 1), z[i]);
            a.bind("W" + std::to_string(i + 1), w);
            w = join(w, z[i]);
        }
    }
    return a;
}

Formula ndist_psi(std::size_t n)
{
    if (n == 0) throw std::invalid_argument("ndist_psi needs n >= 1");
    Formula x0 = var(xname(0));
    std::vector<Formula> xs;
    for (std::size_t i = 1; i <= n; ++i) xs.push_back(var(xname(i)));
    Formula fn = land(x0, lor_all(xs));
    std::vector<Formula> parts;
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Formula> others;
        for (std::size_t j = 0; j < n; ++j)
            if (j != i) others.push_back(xs[j]);
        parts.push_back(land(x0, lor_all(others)));
    }
    return land(fn, lnot(lor_all(parts)));
}

Formula fneq2d_of(const Formula& x, const Formula& y, const Formula& z)
{
    return lnot(land(land(commutator_f(x, y), commutator_f(x, z)), lnot(x)));
}

Formula fneq2d() { return fneq2d_of(var("X"), var("Y"), var("Z")); }

Formula boolean_test_f(std::size_t d)
{
    std::vector<Formula> ys;
    for (std::size_t i = 1; i <= d; ++i) ys.push_back(var(yname(i)));
    std::vector<Formula> terms{generic_over(ys, d)};
    Formula x = var("X");
    for (const auto& y : ys) terms.push_back(commutator_f(x, y));
    return land_all(terms);
}

Formula npc_commuting_wrap(const Formula& f)
{
    std::set<std::string> names = variables(f);
    std::vector<std::string> vs(names.begin(), names.end());
    std::vector<Formula> terms{f};
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j) terms.push_back(commutator_f(var(vs[i]), var(vs[j])));
    return land_all(terms);
}

} // namespace qlogic
