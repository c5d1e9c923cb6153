#include "qlogic/staudt.hpp"

#include <cctype>
#include <set>
#include <sstream>
#include <stdexcept>

namespace qlogic {

namespace {

// Rows (b0, b1, b2) of F^(3d), one per unit vector x = e_k; each block is 0, x or -Tx.
enum class Part { Zero, X, MinusTx };

Subspace blocks(const Matrix& t, Part p0, Part p1, Part p2)
{
    std::size_t d = t.cols();
    if (t.rows() != d) throw std::invalid_argument("coordinate subspaces need a square matrix");
    Matrix m(d, 3 * d);
    Part parts[3] = {p0, p1, p2};
    for (std::size_t k = 0; k < d; ++k)
        for (std::size_t b = 0; b < 3; ++b)
            for (std::size_t i = 0; i < d; ++i) {
                if (parts[b] == Part::X) m.at(k, b * d + i) = i == k ? Scalar(1) : Scalar(0);
                if (parts[b] == Part::MinusTx) m.at(k, b * d + i) = -t.at(i, k);
            }
    return Subspace::row_space(m);
}

Part pick(int slot, int zero, int x)
{
    if (slot == zero) return Part::Zero;
    if (slot == x) return Part::X;
    return Part::MinusTx;
}

void require_standard(const Frame3& fr)
{
    Frame3 s = standard_frame(fr.block);
    if (!(fr.w0 == s.w0 && fr.w1 == s.w1 && fr.w2 == s.w2 && fr.v0 == s.v0 && fr.v1 == s.v1))
        throw std::invalid_argument("coordinate evaluation needs the standard frame");
}

} // namespace

Subspace graph(const Matrix& t)
{
    std::size_t d = t.cols(), e = t.rows();
    Matrix m(d, d + e);
    for (std::size_t k = 0; k < d; ++k) {
        m.at(k, k) = 1;
        for (std::size_t i = 0; i < e; ++i) m.at(k, d + i) = t.at(i, k);
    }
    return Subspace::row_space(m);
}

Subspace x_lower(int j, const Matrix& t)
{
    if (j < 0 || j > 2) throw std::invalid_argument("frame index must be 0, 1 or 2");
    int x = (j + 1) % 3;
    return blocks(t, pick(0, j, x), pick(1, j, x), pick(2, j, x));
}

Subspace x_upper(int j, const Matrix& t)
{
    if (j < 0 || j > 2) throw std::invalid_argument("frame index must be 0, 1 or 2");
    int x = (j + 2) % 3;
    return blocks(t, pick(0, j, x), pick(1, j, x), pick(2, j, x));
}

Frame3 standard_frame(std::size_t d)
{
    if (d == 0) throw std::invalid_argument("frame block size must be positive");
    Matrix z(d, d), id = Matrix::identity(d);
    return {d, x_lower(0, z), x_lower(1, z), x_lower(2, z), x_lower(0, id), x_lower(1, id)};
}

bool is_frame(const Frame3& fr)
{
    std::size_t d = fr.block, n = 3 * d;
    for (const Subspace* s : {&fr.w0, &fr.w1, &fr.w2, &fr.v0, &fr.v1})
        if (s->ambient() != n || s->dim() != d) return false;
    if (!fr.w0.leq(complement(fr.w1)) || !fr.w1.leq(complement(fr.w2)) || !fr.w2.leq(complement(fr.w0)))
        return false;
    Subspace w01 = join(fr.w0, fr.w1), w12 = join(fr.w1, fr.w2);
    return join(fr.w0, fr.v0) == w01 && join(fr.w1, fr.v0) == w01 && join(fr.w1, fr.v1) == w12 &&
           join(fr.w2, fr.v1) == w12;
}

Subspace encode(const Matrix& t, const Frame3& fr)
{
    require_standard(fr);
    if (t.rows() != fr.block || t.cols() != fr.block) throw std::invalid_argument("matrix size differs from frame block");
    return x_lower(0, t);
}

std::optional<Matrix> decode(const Subspace& x, const Frame3& fr)
{
    require_standard(fr);
    std::size_t d = fr.block;
    if (x.ambient() != 3 * d) return std::nullopt;
    Subspace nw0 = complement(fr.w0);
    if (!meet(x, nw0).is_zero() || !join(x, nw0).is_full() || !x.leq(join(fr.w0, fr.w1))) return std::nullopt;
    // rref rows are (0, e_k, -T e_k)
    Matrix t(d, d);
    for (std::size_t k = 0; k < d; ++k)
        for (std::size_t i = 0; i < d; ++i) t.at(i, k) = -x.basis().at(k, 2 * d + i);
    return t;
}

FrameTerms frame_vars() { return {var("W0"), var("W1"), var("W2"), var("V0"), var("V1")}; }

namespace {

Formula x2_id(const FrameTerms& f) { return land(lor(f.v0, f.v1), lnot(f.w1)); }

// X_1(A) from X_0(A)
Formula lower1(const Formula& a, const FrameTerms& f)
{
    return land(lor(land(lor(a, f.v1), lnot(f.w1)), f.v0), lnot(f.w0));
}

// X^1(A) from X_0(A)
Formula upper1(const Formula& a, const FrameTerms& f) { return land(lor(x2_id(f), a), lnot(f.w0)); }

} // namespace

Formula mul_term(const Formula& a, const Formula& b, const FrameTerms& f)
{
    Formula upper2 = land(lor(b, lower1(a, f)), lnot(f.w1));
    return land(lor(f.v1, upper2), lnot(f.w2));
}

Formula sub_term(const Formula& a, const Formula& b, const FrameTerms& f)
{
    Formula core = land(lor(a, upper1(b, f)), lor(x2_id(f), f.w1));
    return land(lor(core, f.w2), lnot(f.w2));
}

Formula add_term(const Formula& a, const Formula& b, const FrameTerms& f) { return sub_term(a, sub_term(f.w0, b, f), f); }

Formula adj_term(const Formula& a, const FrameTerms& f)
{
    Formula lower2 = land(lor(f.v0, upper1(a, f)), lnot(f.w1));
    Formula upper2_neg_adj = land(lnot(lower2), lnot(f.w1));
    Formula neg_adj = land(lor(f.v1, upper2_neg_adj), lnot(f.w2));
    return sub_term(f.w0, neg_adj, f);
}

Formula int_term(const mpz_class& k, const FrameTerms& f)
{
    if (k == 0) return f.w0;
    if (k < 0) return sub_term(f.w0, int_term(-k, f), f);
    Formula two = add_term(f.v0, f.v0, f);
    std::size_t bits = mpz_sizeinbase(k.get_mpz_t(), 2);
    Formula m = f.v0;
    for (std::size_t b = bits - 1; b-- > 0;) {
        m = mul_term(two, m, f);
        if (mpz_tstbit(k.get_mpz_t(), b)) m = add_term(m, f.v0, f);
    }
    return m;
}

std::vector<Formula> frame_conditions(const FrameTerms& f)
{
    Formula w01 = lor(f.w0, f.w1), w12 = lor(f.w1, f.w2);
    return {leq_f(f.w0, lnot(f.w1)),
            leq_f(f.w1, lnot(f.w2)),
            leq_f(f.w2, lnot(f.w0)),
            eq_f(lor(f.w0, f.v0), lor(f.w1, f.v0)),
            eq_f(lor(f.w1, f.v0), w01),
            eq_f(lor(f.w1, f.v1), lor(f.w2, f.v1)),
            eq_f(lor(f.w2, f.v1), w12),
            // dimension forcing: every member of dimension d
            lnot(land(f.w0, f.v0)),
            lnot(land(f.w1, f.v0)),
            lnot(land(f.w1, f.v1)),
            lnot(land(f.w2, f.v1)),
            lor(w01, f.w2)};
}

std::vector<Formula> encodable_conditions(const Formula& x, const FrameTerms& f)
{
    return {lnot(land(x, lnot(f.w0))), lor(x, lnot(f.w0)), leq_f(x, lor(f.w0, f.w1))};
}

Assignment frame_assignment(const Frame3& fr)
{
    Assignment a;
    a.ambient = 3 * fr.block;
    a.bind("W0", fr.w0);
    a.bind("W1", fr.w1);
    a.bind("W2", fr.w2);
    a.bind("V0", fr.v0);
    a.bind("V1", fr.v1);
    return a;
}

namespace {

Subspace eval_term(const Formula& term, const Frame3& fr, const std::vector<const Subspace*>& args)
{
    Assignment a = frame_assignment(fr);
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (!decode(*args[i], fr)) throw std::invalid_argument("argument is not a frame encoding");
        a.bind("A" + std::to_string(i), *args[i]);
    }
    return eval(term, a);
}

} // namespace

Subspace mul(const Subspace& xa, const Subspace& xb, const Frame3& fr)
{
    return eval_term(mul_term(var("A0"), var("A1"), frame_vars()), fr, {&xa, &xb});
}

Subspace sub(const Subspace& xa, const Subspace& xb, const Frame3& fr)
{
    return eval_term(sub_term(var("A0"), var("A1"), frame_vars()), fr, {&xa, &xb});
}

Subspace adjoint(const Subspace& xa, const Frame3& fr)
{
    return eval_term(adj_term(var("A0"), frame_vars()), fr, {&xa});
}

// ---------------------------------------------------------------- polynomials

namespace {

PolyPtr node(PolyExpr::Kind k, std::vector<PolyPtr> args = {}, std::string name = {}, mpz_class v = 0)
{
    auto p = std::make_shared<PolyExpr>();
    p->kind = k;
    p->args = std::move(args);
    p->name = std::move(name);
    p->value = v;
    return p;
}

class PolyParser {
public:
    explicit PolyParser(const std::string& s) : s_(s) {}

    PolyPtr run()
    {
        PolyPtr p = expr();
        skip();
        if (i_ != s_.size()) fail("unexpected '" + std::string(1, s_[i_]) + "'");
        return p;
    }

private:
    const std::string& s_;
    std::size_t i_ = 0;

    [[noreturn]] void fail(const std::string& msg) const
    {
        throw std::invalid_argument(msg + " at position " + std::to_string(i_));
    }
    void skip()
    {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    }
    bool eat(char c)
    {
        skip();
        if (i_ < s_.size() && s_[i_] == c) {
            ++i_;
            return true;
        }
        return false;
    }

    PolyPtr expr()
    {
        PolyPtr p = term();
        while (true) {
            if (eat('+'))
                p = node(PolyExpr::Kind::Add, {p, term()});
            else if (eat('-'))
                p = node(PolyExpr::Kind::Sub, {p, term()});
            else
                return p;
        }
    }
    PolyPtr term()
    {
        PolyPtr p = unary();
        while (eat('*')) p = node(PolyExpr::Kind::Mul, {p, unary()});
        return p;
    }
    PolyPtr unary()
    {
        if (eat('-')) return node(PolyExpr::Kind::Neg, {unary()});
        return atom();
    }
    PolyPtr atom()
    {
        skip();
        if (i_ >= s_.size()) fail("unexpected end of input");
        char c = s_[i_];
        if (c == '(') {
            ++i_;
            PolyPtr p = expr();
            if (!eat(')')) fail("expected ')'");
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i_;
            while (j < s_.size() && std::isdigit(static_cast<unsigned char>(s_[j]))) ++j;
            mpz_class v(s_.substr(i_, j - i_));
            i_ = j;
            return node(PolyExpr::Kind::Int, {}, {}, v);
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i_;
            while (j < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[j])) || s_[j] == '_')) ++j;
            std::string id = s_.substr(i_, j - i_);
            i_ = j;
            if (id == "adj") {
                if (!eat('(')) fail("expected '(' after adj");
                PolyPtr p = expr();
                if (!eat(')')) fail("expected ')'");
                return node(PolyExpr::Kind::Adj, {p});
            }
            return node(PolyExpr::Kind::Var, {}, id);
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }
};

int precedence(const PolyPtr& p)
{
    switch (p->kind) {
    case PolyExpr::Kind::Add:
    case PolyExpr::Kind::Sub: return 1;
    case PolyExpr::Kind::Mul: return 2;
    case PolyExpr::Kind::Neg: return 3;
    default: return 4;
    }
}

std::string wrap(const PolyPtr& p, int min_prec)
{
    std::string s = print_poly(p);
    return precedence(p) < min_prec ? "(" + s + ")" : s;
}

void collect_vars(const PolyPtr& p, std::vector<std::string>& out, std::set<std::string>& seen)
{
    if (p->kind == PolyExpr::Kind::Var && seen.insert(p->name).second) out.push_back(p->name);
    for (const auto& a : p->args) collect_vars(a, out, seen);
}

} // namespace

PolyPtr parse_poly(const std::string& text) { return PolyParser(text).run(); }

std::string print_poly(const PolyPtr& p)
{
    switch (p->kind) {
    case PolyExpr::Kind::Var: return p->name;
    case PolyExpr::Kind::Int: return p->value.get_str();
    case PolyExpr::Kind::Add: return wrap(p->args[0], 1) + " + " + wrap(p->args[1], 2);
    case PolyExpr::Kind::Sub: return wrap(p->args[0], 1) + " - " + wrap(p->args[1], 2);
    case PolyExpr::Kind::Mul: return wrap(p->args[0], 2) + "*" + wrap(p->args[1], 3);
    case PolyExpr::Kind::Neg: return "-" + wrap(p->args[0], 3);
    case PolyExpr::Kind::Adj: return "adj(" + print_poly(p->args[0]) + ")";
    }
    return {};
}

std::vector<std::string> poly_variables(const PolyPtr& p)
{
    std::vector<std::string> out;
    std::set<std::string> seen;
    collect_vars(p, out, seen);
    return out;
}

Matrix eval_poly(const PolyPtr& p, const std::map<std::string, Matrix>& values, std::size_t d)
{
    switch (p->kind) {
    case PolyExpr::Kind::Var: {
        auto it = values.find(p->name);
        if (it == values.end()) throw std::invalid_argument("unbound polynomial variable " + p->name);
        return it->second;
    }
    case PolyExpr::Kind::Int: return Matrix::identity(d).scaled(Scalar(mpq_class(p->value)));
    case PolyExpr::Kind::Add: return eval_poly(p->args[0], values, d) + eval_poly(p->args[1], values, d);
    case PolyExpr::Kind::Sub: return eval_poly(p->args[0], values, d) - eval_poly(p->args[1], values, d);
    case PolyExpr::Kind::Neg: return eval_poly(p->args[0], values, d).scaled(Scalar(-1));
    case PolyExpr::Kind::Mul: return eval_poly(p->args[0], values, d) * eval_poly(p->args[1], values, d);
    case PolyExpr::Kind::Adj: return eval_poly(p->args[0], values, d).conj_transpose();
    }
    return {};
}

std::string poly_var_name(const std::string& v) { return "X_" + v; }

Formula poly_term(const PolyPtr& p, const FrameTerms& f)
{
    switch (p->kind) {
    case PolyExpr::Kind::Var: return var(poly_var_name(p->name));
    case PolyExpr::Kind::Int: return int_term(p->value, f);
    case PolyExpr::Kind::Add: return add_term(poly_term(p->args[0], f), poly_term(p->args[1], f), f);
    case PolyExpr::Kind::Sub: return sub_term(poly_term(p->args[0], f), poly_term(p->args[1], f), f);
    case PolyExpr::Kind::Neg: return sub_term(f.w0, poly_term(p->args[0], f), f);
    case PolyExpr::Kind::Mul: return mul_term(poly_term(p->args[0], f), poly_term(p->args[1], f), f);
    case PolyExpr::Kind::Adj: return adj_term(poly_term(p->args[0], f), f);
    }
    return f.w0;
}

Formula poly_to_formula(const PolyPtr& p)
{
    FrameTerms f = frame_vars();
    std::vector<Formula> parts = frame_conditions(f);
    for (const auto& v : poly_variables(p))
        for (const auto& c : encodable_conditions(var(poly_var_name(v)), f)) parts.push_back(c);
    parts.push_back(eq_f(poly_term(p, f), f.w0));
    return land_all(parts);
}

Assignment poly_witness_assignment(const PolyPtr& p, const std::map<std::string, Matrix>& values, std::size_t d)
{
    Frame3 fr = standard_frame(d);
    Assignment a = frame_assignment(fr);
    for (const auto& v : poly_variables(p)) {
        auto it = values.find(v);
        if (it == values.end()) throw std::invalid_argument("no value for polynomial variable " + v);
        a.bind(poly_var_name(v), encode(it->second, fr));
    }
    return a;
}

} // namespace qlogic
