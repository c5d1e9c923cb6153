#include "qlogic/reduce.hpp"

#include <json.hpp>

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>

namespace qlogic {

// ---------------------------------------------------------------- Boolean and dimension transforms

Formula bool_to_q2d(const CnfFormula& f)
{
    validate(f);
    Formula g = to_formula(f);
    std::vector<std::string> vs = f.variables();
    std::vector<Formula> terms{g};
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j) terms.push_back(commutator_f(var(vs[i]), var(vs[j])));
    return land_all(terms);
}

std::optional<Assignment> decode_boolean_witness(const Formula& f, const Assignment& a2d, Mode mode)
{
    std::vector<Subspace> atoms;
    for (const auto& [n, s] : a2d.bindings)
        if (s.dim() == 1) {
            atoms.push_back(s);
            atoms.push_back(complement(s));
            break;
        }
    if (atoms.empty()) atoms.push_back(Subspace::full(a2d.ambient));
    for (const auto& atom : atoms) {
        Assignment b;
        b.ambient = 1;
        for (const auto& [n, s] : a2d.bindings) b.bind(n, atom.leq(s) ? Subspace::full(1) : Subspace::zero(1));
        if (verify(f, b, mode)) return b;
    }
    return std::nullopt;
}

Formula strong_from_weak(const Formula& f, std::size_t d)
{
    if (d == 0) throw std::invalid_argument("strong_from_weak needs d >= 1");
    return multiple(d, f);
}

Formula weak_from_strong(const Formula& f, std::size_t d)
{
    if (d == 0) throw std::invalid_argument("weak_from_strong needs d >= 1");
    return restrict(psi(1, d), f);
}

Formula lift_dim(const Formula& f, std::size_t k, std::size_t d)
{
    if (k < 1 || k >= d) throw std::invalid_argument("lift_dim needs 1 <= k < d");
    return restrict(f, psi(k, d));
}

const char* const kWeakCorePrefix = "F_";

Formula weak2strong_psi(const Formula& f, std::size_t d)
{
    Formula core = rename_vars(f, [](const std::string& v) { return kWeakCorePrefix + v; });
    return land(eq_f(land(core, var(xname(0))), var(xname(1))), big_psi(d));
}

Assignment weak2strong_witness(const Formula& f, const Assignment& weak, std::size_t d)
{
    if (weak.ambient != d) throw std::invalid_argument("weak witness has wrong ambient dimension");
    Subspace v = eval(f, weak);
    if (v.is_zero()) throw std::invalid_argument("assignment does not weakly satisfy the formula");
    Vec line = v.basis().row(0);
    Assignment a = big_psi_witness(d, line);
    a.bind(xname(0), Subspace::span(d, {line}));
    for (const auto& [n, s] : weak.bindings) a.bind(kWeakCorePrefix + n, s);
    return a;
}

// ---------------------------------------------------------------- 2D quantifier elimination

namespace {

std::string fresh_name(const std::string& base, std::set<std::string>& taken)
{
    std::string n = base;
    while (taken.count(n)) n += "_";
    taken.insert(n);
    return n;
}

bool line_collides(const Subspace& s, const std::vector<Subspace>& lines)
{
    for (const auto& l : lines)
        if (s == l || s == complement(l)) return true;
    return false;
}

} // namespace

QElimResult qelim2d(const Formula& f, const std::string& x, const std::map<std::string, Subspace>& constants,
                    Mode mode)
{
    std::set<std::string> vars = variables(f), consts = qlogic::constants(f);
    for (const auto& c : consts) {
        auto it = constants.find(c);
        if (it == constants.end()) throw std::invalid_argument("constant " + c + " is unbound");
        if (it->second.ambient() != 2) throw std::invalid_argument("constant " + c + " is not in F^2");
    }
    std::set<std::string> taken = vars;
    taken.insert(consts.begin(), consts.end());
    QElimResult out;
    std::vector<Subspace> lines;
    for (const auto& c : consts)
        if (constants.at(c).dim() == 1) lines.push_back(constants.at(c));
    auto next_line = [&lines](long& q) {
        while (true) {
            Subspace s = Subspace::span(2, {{Scalar(1), Scalar(q++)}});
            if (!line_collides(s, lines)) {
                lines.push_back(s);
                return s;
            }
        }
    };
    long q = 1;

    Formula body = f;
    std::vector<std::string> all_consts(consts.begin(), consts.end());
    if (mode == Mode::Strong) {
        std::string e1 = fresh_name("E1", taken), e2 = fresh_name("E2", taken);
        out.fresh_constants[e1] = next_line(q);
        out.fresh_constants[e2] = next_line(q);
        body = lnot(fneq2d_of(lnot(f), cst(e1), cst(e2)));
        all_consts.push_back(e1);
        all_consts.push_back(e2);
    }
    std::vector<std::string> ys;
    for (const auto& v : vars)
        if (v != x) ys.push_back(v);
    std::size_t n_fresh = all_consts.size() + ys.size() + 1;
    std::vector<std::string> us;
    for (std::size_t i = 1; i <= n_fresh; ++i) {
        std::string u = fresh_name("U" + std::to_string(i), taken);
        out.fresh_constants[u] = next_line(q);
        us.push_back(u);
    }

    std::vector<Formula> cands{lzero(), lone()};
    for (const auto& c : all_consts) {
        cands.push_back(cst(c));
        cands.push_back(lnot(cst(c)));
    }
    for (const auto& y : ys) {
        cands.push_back(var(y));
        cands.push_back(lnot(var(y)));
    }
    for (const auto& u : us) cands.push_back(cst(u));
    std::vector<Formula> parts;
    for (const auto& c : cands) parts.push_back(substitute(body, {{x, c}}));
    out.formula = lor_all(parts);
    return out;
}

// ---------------------------------------------------------------- polynomials

Poly Poly::constant(const mpq_class& c)
{
    Poly p;
    if (c != 0) p.terms[{}] = c;
    return p;
}

Poly Poly::variable(const std::string& v)
{
    Poly p;
    p.terms[{v}] = 1;
    return p;
}

Poly& Poly::operator+=(const Poly& o)
{
    for (const auto& [m, c] : o.terms) {
        auto it = terms.find(m);
        if (it == terms.end()) {
            terms.emplace(m, c);
        } else {
            it->second += c;
            if (it->second == 0) terms.erase(it);
        }
    }
    return *this;
}

Poly Poly::operator+(const Poly& o) const
{
    Poly r = *this;
    r += o;
    return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + o.scaled(-1); }

Poly Poly::operator*(const Poly& o) const
{
    Poly r;
    for (const auto& [m1, c1] : terms)
        for (const auto& [m2, c2] : o.terms) {
            Monomial m = m1;
            m.insert(m.end(), m2.begin(), m2.end());
            std::sort(m.begin(), m.end());
            Poly t;
            t.terms[m] = c1 * c2;
            r += t;
        }
    return r;
}

Poly Poly::scaled(const mpq_class& c) const
{
    Poly r;
    if (c == 0) return r;
    for (const auto& [m, v] : terms) r.terms[m] = v * c;
    return r;
}

std::size_t Poly::degree() const
{
    std::size_t d = 0;
    for (const auto& [m, c] : terms) d = std::max(d, m.size());
    return d;
}

mpq_class Poly::eval(const std::map<std::string, mpq_class>& point) const
{
    mpq_class s = 0;
    for (const auto& [m, c] : terms) {
        mpq_class t = c;
        for (const auto& v : m) {
            auto it = point.find(v);
            // rational points are real, so conj(x) takes the value of x
            if (it == point.end() && v.rfind("conj(", 0) == 0) it = point.find(v.substr(5, v.size() - 6));
            if (it == point.end()) throw std::invalid_argument("unbound polynomial variable " + v);
            t *= it->second;
        }
        s += t;
    }
    return s;
}

std::size_t PolySystem::degree() const
{
    std::size_t d = 0;
    for (const auto& e : equations) d = std::max(d, e.degree());
    if (combined) d = std::max(d, combined->degree());
    return d;
}

namespace {

std::string poly_text(const Poly& p)
{
    if (p.terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : p.terms) {
        if (!first) os << " + ";
        first = false;
        os << c.get_str() << ' ';
        if (m.empty()) {
            os << '1';
        } else {
            for (std::size_t i = 0; i < m.size(); ++i) os << (i ? "*" : "") << m[i];
        }
    }
    return os.str();
}

nlohmann::json poly_json(const Poly& p)
{
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [m, c] : p.terms) arr.push_back({{"coeff", c.get_str()}, {"monomial", m}});
    return arr;
}

} // namespace

std::string PolySystem::text() const
{
    std::ostringstream os;
    os << "# ambient " << ambient << " mode " << to_string(mode) << (split ? " real-split" : " gaussian") << '\n';
    os << "# unknown M<k>_<i>_<j> is entry (i,j) of matrix k; leaf matrices:";
    for (const auto& [n, k] : matrix_of) os << ' ' << n << "=M" << k;
    os << '\n';
    if (mode == Mode::Weak) os << "# weak root condition encoded as w = R v, u^T w = 1\n";
    for (const auto& v : variables) os << "var " << v << '\n';
    for (const auto& e : equations) os << "poly " << poly_text(e) << " = 0\n";
    if (combined) os << "quartic " << poly_text(*combined) << " = 0\n";
    return os.str();
}

std::string PolySystem::json() const
{
    nlohmann::json j;
    j["ambient"] = ambient;
    j["mode"] = to_string(mode);
    j["split"] = split;
    j["variables"] = variables;
    j["leaf_matrices"] = matrix_of;
    nlohmann::json eqs = nlohmann::json::array();
    for (const auto& e : equations) eqs.push_back(poly_json(e));
    j["equations"] = eqs;
    if (combined) j["combined"] = poly_json(*combined);
    return j.dump(2);
}

std::string matrix_entry_name(std::size_t k, std::size_t i, std::size_t j, bool split, bool imag)
{
    std::string base = "M" + std::to_string(k) + "_" + std::to_string(i) + "_" + std::to_string(j);
    if (!split) return base;
    return base + (imag ? "_im" : "_re");
}

namespace {

// Polynomials over Q(i) in complex unknowns; a conjugated unknown carries a trailing '*'.
using CMonomial = std::vector<std::string>;
using CPoly = std::map<CMonomial, Scalar>;

void cadd(CPoly& p, const CMonomial& m, const Scalar& c)
{
    if (c.is_zero()) return;
    auto it = p.find(m);
    if (it == p.end()) {
        p.emplace(m, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) p.erase(it);
    }
}

CPoly cmul(const CPoly& a, const CPoly& b)
{
    CPoly r;
    for (const auto& [m1, c1] : a)
        for (const auto& [m2, c2] : b) {
            CMonomial m = m1;
            m.insert(m.end(), m2.begin(), m2.end());
            std::sort(m.begin(), m.end());
            cadd(r, m, c1 * c2);
        }
    return r;
}

struct SymMatrix {
    std::size_t rows = 0, cols = 0;
    std::vector<CPoly> e;

    SymMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), e(r * c) {}
    CPoly& at(std::size_t i, std::size_t j) { return e[i * cols + j]; }
    const CPoly& at(std::size_t i, std::size_t j) const { return e[i * cols + j]; }
};

SymMatrix unknown(std::size_t k, std::size_t r, std::size_t c)
{
    SymMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m.at(i, j)[{matrix_entry_name(k, i, j, false, false)}] = Scalar(1);
    return m;
}

SymMatrix constant_matrix(const Matrix& a)
{
    SymMatrix m(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) cadd(m.at(i, j), {}, a.at(i, j));
    return m;
}

SymMatrix operator*(const SymMatrix& a, const SymMatrix& b)
{
    SymMatrix r(a.rows, b.cols);
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t j = 0; j < b.cols; ++j)
            for (std::size_t k = 0; k < a.cols; ++k)
                for (const auto& [m, c] : cmul(a.at(i, k), b.at(k, j))) cadd(r.at(i, j), m, c);
    return r;
}

SymMatrix combine(const SymMatrix& a, const SymMatrix& b, long sign)
{
    SymMatrix r = a;
    for (std::size_t i = 0; i < r.e.size(); ++i)
        for (const auto& [m, c] : b.e[i]) cadd(r.e[i], m, c * Scalar(sign));
    return r;
}

SymMatrix adjoint(const SymMatrix& a)
{
    SymMatrix r(a.cols, a.rows);
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t j = 0; j < a.cols; ++j)
            for (const auto& [m, c] : a.at(i, j)) {
                CMonomial mc;
                for (const auto& v : m) mc.push_back(v.back() == '*' ? v.substr(0, v.size() - 1) : v + "*");
                std::sort(mc.begin(), mc.end());
                cadd(r.at(j, i), mc, c.conj());
            }
    return r;
}

SymMatrix transpose(const SymMatrix& a)
{
    SymMatrix r(a.cols, a.rows);
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t j = 0; j < a.cols; ++j) r.at(j, i) = a.at(i, j);
    return r;
}

// Real and imaginary parts in the split unknowns.
std::pair<Poly, Poly> split_poly(const CPoly& p)
{
    Poly re, im;
    for (const auto& [m, c] : p) {
        Poly a = Poly::constant(c.re()), b = Poly::constant(c.im());
        for (const auto& v : m) {
            bool conj = v.back() == '*';
            std::string base = conj ? v.substr(0, v.size() - 1) : v;
            Poly x = Poly::variable(base + "_re"), y = Poly::variable(base + "_im");
            if (conj) y = y.scaled(-1);
            Poly na = a * x - b * y;
            Poly nb = a * y + b * x;
            a = std::move(na);
            b = std::move(nb);
        }
        re += a;
        im += b;
    }
    return {re, im};
}

Poly unsplit_poly(const CPoly& p)
{
    Poly r;
    for (const auto& [m, c] : p) {
        if (!c.is_real()) throw std::invalid_argument("Gaussian-rational coefficients need the real split");
        Monomial mm;
        for (const auto& v : m) mm.push_back(v.back() == '*' ? "conj(" + v.substr(0, v.size() - 1) + ")" : v);
        std::sort(mm.begin(), mm.end());
        Poly t;
        t.terms[mm] = c.re();
        r += t;
    }
    return r;
}

// Replaces And by de Morgan so only Not and Or remain.
Formula desugar_and(const Formula& f)
{
    switch (f->op) {
    case Op::Not: return lnot(desugar_and(f->l));
    case Op::Or: return lor(desugar_and(f->l), desugar_and(f->r));
    case Op::And: return lnot(lor(lnot(desugar_and(f->l)), lnot(desugar_and(f->r))));
    default: return f;
    }
}

} // namespace

PolySystem to_polysystem(const Formula& f, std::size_t d, Mode mode, bool split,
                         const std::map<std::string, Subspace>& constants)
{
    if (d == 0) throw std::invalid_argument("to_polysystem needs d >= 1");
    for (const auto& c : qlogic::constants(f)) {
        auto it = constants.find(c);
        if (it == constants.end() || it->second.ambient() != d)
            throw std::invalid_argument("constant " + c + " needs a value in F^" + std::to_string(d));
    }
    Program prog = Program::compile(desugar_and(f));
    PolySystem s;
    s.ambient = d;
    s.mode = mode;
    s.split = split;
    s.constants = constants;
    std::size_t next = prog.code.size();
    std::vector<std::pair<std::size_t, std::size_t>> shapes(prog.code.size(), {d, d});
    std::vector<SymMatrix> eqs;
    SymMatrix id = constant_matrix(Matrix::identity(d));
    auto M = [&](std::size_t k) { return unknown(k, d, d); };
    auto aux = [&](PolySystem::Node& n) {
        n.aux.push_back(next);
        shapes.push_back({d, d});
        return unknown(next++, d, d);
    };
    for (std::size_t k = 0; k < prog.code.size(); ++k) {
        const auto& c = prog.code[k];
        PolySystem::Node n{c.op, c.a, c.b, k, {}, ""};
        switch (c.op) {
        case Op::Var:
            n.leaf = prog.leaves[static_cast<std::size_t>(c.a)];
            s.matrix_of[n.leaf] = k;
            break;
        case Op::Const:
            n.leaf = prog.leaves[static_cast<std::size_t>(c.a)];
            s.matrix_of[n.leaf] = k;
            eqs.push_back(combine(M(k), constant_matrix(constants.at(n.leaf).as_square_matrix()), -1));
            break;
        case Op::Zero: eqs.push_back(M(k)); break;
        case Op::One: eqs.push_back(combine(M(k), id, -1)); break;
        case Op::Not: {
            SymMatrix sm = M(k), tm = M(static_cast<std::size_t>(c.a));
            SymMatrix x = aux(n);
            eqs.push_back(adjoint(tm) * sm);
            eqs.push_back(combine(combine(sm, tm, 1) * x, id, -1));
            break;
        }
        case Op::Or: {
            SymMatrix r = M(k), sm = M(static_cast<std::size_t>(c.a)), tm = M(static_cast<std::size_t>(c.b));
            SymMatrix x = aux(n), y = aux(n), w = aux(n), z = aux(n);
            eqs.push_back(combine(combine(r, sm * x, -1), tm * y, -1));
            eqs.push_back(combine(sm, r * w, -1));
            eqs.push_back(combine(tm, r * z, -1));
            break;
        }
        case Op::And: throw std::logic_error("conjunction survived desugaring");
        }
        s.nodes.push_back(n);
    }
    SymMatrix root = M(prog.code.size() - 1);
    if (mode == Mode::Strong) {
        s.root_aux.push_back(next);
        shapes.push_back({d, d});
        eqs.push_back(combine(root * unknown(next++, d, d), id, -1));
    } else {
        std::size_t u = next++, v = next++, w = next++;
        s.root_aux = {u, v, w};
        shapes.push_back({d, 1});
        shapes.push_back({d, 1});
        shapes.push_back({d, 1});
        SymMatrix one(1, 1);
        cadd(one.at(0, 0), {}, Scalar(1));
        eqs.push_back(combine(unknown(w, d, 1), root * unknown(v, d, 1), -1));
        eqs.push_back(combine(transpose(unknown(u, d, 1)) * unknown(w, d, 1), one, -1));
    }
    for (std::size_t k = 0; k < shapes.size(); ++k)
        for (std::size_t i = 0; i < shapes[k].first; ++i)
            for (std::size_t j = 0; j < shapes[k].second; ++j) {
                if (split) {
                    s.variables.push_back(matrix_entry_name(k, i, j, true, false));
                    s.variables.push_back(matrix_entry_name(k, i, j, true, true));
                } else {
                    s.variables.push_back(matrix_entry_name(k, i, j, false, false));
                }
            }
    for (const auto& m : eqs)
        for (const auto& e : m.e) {
            if (e.empty()) continue;
            if (split) {
                auto [re, im] = split_poly(e);
                if (!re.is_zero()) s.equations.push_back(re);
                if (!im.is_zero()) s.equations.push_back(im);
            } else {
                s.equations.push_back(unsplit_poly(e));
            }
        }
    return s;
}

PolySystem combine_quartic(const PolySystem& s)
{
    if (!s.split) throw std::invalid_argument("sum of squares needs a real-split system");
    PolySystem r = s;
    Poly p;
    for (const auto& e : s.equations) p += e * e;
    r.combined = p;
    return r;
}

PolySystem normalize(const PolySystem& s)
{
    PolySystem r = s;
    r.equations.clear();
    r.combined.reset();
    std::size_t aux = 0;
    std::set<std::string> names(s.variables.begin(), s.variables.end());
    for (const auto& e : s.equations) {
        mpz_class l = 1;
        for (const auto& [m, c] : e.terms) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
        Poly out;
        for (const auto& [m, c] : e.terms) {
            mpz_class v = c.get_num() * (l / c.get_den());
            mpz_class mag = abs(v);
            int sign = v < 0 ? -1 : 1;
            if (mag <= 2) {
                Poly t;
                t.terms[m] = mpq_class(v);
                out += t;
                continue;
            }
            // q_0 = m, q_{k+1} = 2 q_k, and the term becomes the signed sum of q_k over set bits
            std::string base = "N" + std::to_string(aux++);
            while (names.count(base + "_0")) base = "N" + std::to_string(aux++);
            std::size_t bits = mpz_sizeinbase(mag.get_mpz_t(), 2);
            Poly mono;
            mono.terms[m] = 1;
            for (std::size_t k = 0; k < bits; ++k) {
                std::string q = base + "_" + std::to_string(k);
                names.insert(q);
                r.variables.push_back(q);
                Poly prev = k == 0 ? mono : Poly::variable(base + "_" + std::to_string(k - 1)).scaled(2);
                r.equations.push_back(Poly::variable(q) - prev);
                if (mpz_tstbit(mag.get_mpz_t(), k)) out += Poly::variable(q).scaled(sign);
            }
        }
        r.equations.push_back(out);
    }
    return r;
}

bool verify_poly_witness(const PolySystem& s, const std::map<std::string, mpq_class>& point)
{
    for (const auto& e : s.equations)
        if (e.eval(point) != 0) return false;
    if (s.combined && s.combined->eval(point) != 0) return false;
    return true;
}

// ---------------------------------------------------------------- witness transfer

namespace {

// Range(S) = range(T)^perp with S + T invertible: S maps ker T onto range(T)^perp and kills a complement.
Matrix complement_matrix(const Matrix& t)
{
    std::size_t d = t.rows();
    Matrix k = nullspace(t);
    if (k.rows() == 0) return Matrix(d, d);
    Matrix n = complement(Subspace::column_space(t)).basis();
    Matrix c = complement(Subspace::row_space(k)).basis();
    Matrix basis = vstack(k, c).transpose();
    Matrix target(d, d);
    for (std::size_t j = 0; j < n.rows(); ++j)
        for (std::size_t i = 0; i < d; ++i) target.at(i, j) = n.at(j, i);
    auto inv = inverse(basis);
    if (!inv) throw std::logic_error("kernel and complement do not form a basis");
    return target * *inv;
}

void put_matrix(std::map<std::string, mpq_class>& p, std::size_t k, const Matrix& m, bool split)
{
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (split) {
                p[matrix_entry_name(k, i, j, true, false)] = m.at(i, j).re();
                p[matrix_entry_name(k, i, j, true, true)] = m.at(i, j).im();
            } else {
                if (!m.at(i, j).is_real()) throw std::invalid_argument("complex witness needs the real split");
                p[matrix_entry_name(k, i, j, false, false)] = m.at(i, j).re();
            }
        }
}

} // namespace

std::optional<std::map<std::string, mpq_class>> poly_witness(const PolySystem& s, const Assignment& a)
{
    std::size_t d = s.ambient;
    if (a.ambient != d) throw std::invalid_argument("assignment ambient differs from the system");
    std::map<std::string, mpq_class> p;
    std::vector<Matrix> val(s.nodes.size());
    for (std::size_t k = 0; k < s.nodes.size(); ++k) {
        const auto& n = s.nodes[k];
        Matrix m;
        switch (n.op) {
        case Op::Var: m = a.at(n.leaf).as_square_matrix(); break;
        case Op::Const: m = s.constants.at(n.leaf).as_square_matrix(); break;
        case Op::Zero: m = Matrix(d, d); break;
        case Op::One: m = Matrix::identity(d); break;
        case Op::Not: {
            const Matrix& t = val[static_cast<std::size_t>(n.a)];
            m = complement_matrix(t);
            auto x = inverse(m + t);
            if (!x) return std::nullopt;
            put_matrix(p, n.aux[0], *x, s.split);
            break;
        }
        case Op::Or: {
            const Matrix& sm = val[static_cast<std::size_t>(n.a)];
            const Matrix& tm = val[static_cast<std::size_t>(n.b)];
            m = join(Subspace::column_space(sm), Subspace::column_space(tm)).as_square_matrix();
            auto xy = solve(hstack(sm, tm), m);
            auto w = solve(m, sm);
            auto z = solve(m, tm);
            if (!xy || !w || !z) return std::nullopt;
            Matrix x(d, d), y(d, d);
            for (std::size_t i = 0; i < d; ++i)
                for (std::size_t j = 0; j < d; ++j) {
                    x.at(i, j) = xy->at(i, j);
                    y.at(i, j) = xy->at(d + i, j);
                }
            put_matrix(p, n.aux[0], x, s.split);
            put_matrix(p, n.aux[1], y, s.split);
            put_matrix(p, n.aux[2], *w, s.split);
            put_matrix(p, n.aux[3], *z, s.split);
            break;
        }
        case Op::And: return std::nullopt;
        }
        val[k] = m;
        put_matrix(p, n.matrix, m, s.split);
    }
    const Matrix& root = val.back();
    if (s.mode == Mode::Strong) {
        auto x = inverse(root);
        if (!x) return std::nullopt;
        put_matrix(p, s.root_aux[0], *x, s.split);
    } else {
        bool found = false;
        for (std::size_t i = 0; i < d && !found; ++i)
            for (std::size_t j = 0; j < d && !found; ++j)
                if (!root.at(i, j).is_zero()) {
                    Matrix u(d, 1), v(d, 1);
                    u.at(i, 0) = root.at(i, j).inverse();
                    v.at(j, 0) = 1;
                    put_matrix(p, s.root_aux[0], u, s.split);
                    put_matrix(p, s.root_aux[1], v, s.split);
                    put_matrix(p, s.root_aux[2], root * v, s.split);
                    found = true;
                }
        if (!found) return std::nullopt;
    }
    return p;
}

Assignment decode_poly_point(const PolySystem& s, const std::map<std::string, mpq_class>& point)
{
    if (!s.split) throw std::invalid_argument("decoding needs a real-split system");
    std::size_t d = s.ambient;
    Assignment a;
    a.ambient = d;
    for (const auto& [name, k] : s.matrix_of) {
        Matrix m(d, d);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j)
                m.at(i, j) = Scalar(point.at(matrix_entry_name(k, i, j, true, false)),
                                    point.at(matrix_entry_name(k, i, j, true, true)));
        a.bind(name, Subspace::column_space(m));
    }
    return a;
}

} // namespace qlogic
