#include "qlogic/count.hpp"
#include "qlogic/generic.hpp"
#include "qlogic/pluecker.hpp"
#include "qlogic/reduce.hpp"
#include "qlogic/solve.hpp"
#include "qlogic/staudt.hpp"
#include "support.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

using namespace qlogic;
using qtest::line;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

// Collects failed sub-checks of one criterion.
struct Checker {
    std::vector<std::string> failures;
    std::vector<std::string> notes;

    void expect(bool ok, const std::string& what)
    {
        if (!ok && std::find(failures.begin(), failures.end(), what) == failures.end()) failures.push_back(what);
    }
    void note(const std::string& s) { notes.push_back(s); }

    Outcome outcome() const
    {
        Outcome o;
        o.pass = failures.empty();
        std::ostringstream s;
        for (std::size_t i = 0; i < notes.size(); ++i) s << (i ? "; " : "") << notes[i];
        if (!failures.empty()) {
            s << (notes.empty() ? "" : "; ") << "failed:";
            for (const auto& f : failures) s << " [" << f << "]";
        }
        o.detail = s.str();
        return o;
    }
};

Assignment bind_all(std::size_t d, const std::vector<std::pair<std::string, Subspace>>& xs)
{
    Assignment a;
    a.ambient = d;
    for (const auto& [n, s] : xs) a.bind(n, s);
    return a;
}

Assignment direct_sum(const Assignment& a, const Assignment& b)
{
    Assignment r;
    r.ambient = a.ambient + b.ambient;
    for (const auto& [n, s] : a.bindings) r.bind(n, qlogic::direct_sum(s, b.at(n)));
    return r;
}

Assignment zero_block(const Assignment& shape, std::size_t d)
{
    Assignment r;
    r.ambient = d;
    for (const auto& [n, s] : shape.bindings) r.bind(n, Subspace::zero(d));
    return r;
}

bool boolean_sat(const CnfFormula& f)
{
    auto vars = f.variables();
    for (unsigned mask = 0; mask < (1U << vars.size()); ++mask) {
        bool all = true;
        for (const auto& c : f.clauses) {
            bool any = false;
            for (const auto& l : c) {
                auto k = static_cast<unsigned>(std::find(vars.begin(), vars.end(), l.var) - vars.begin());
                any = any || (((mask >> k) & 1U) != 0) == l.positive;
            }
            all = all && any;
        }
        if (all) return true;
    }
    return false;
}

CnfFormula random_cnf(std::mt19937& rng, std::size_t nvars, std::size_t nclauses, std::size_t width)
{
    CnfFormula f;
    for (std::size_t c = 0; c < nclauses; ++c) {
        std::vector<std::size_t> pool(nvars);
        for (std::size_t i = 0; i < nvars; ++i) pool[i] = i + 1;
        std::shuffle(pool.begin(), pool.end(), rng);
        std::size_t len = std::min(nvars, 1 + rng() % width);
        Clause cl;
        for (std::size_t k = 0; k < len; ++k) cl.push_back({"X" + std::to_string(pool[k]), rng() % 2 == 0});
        f.clauses.push_back(cl);
    }
    return f;
}

// Every CNF over X1..X3 with at most four distinct clauses, no clause repeating a variable.
std::vector<CnfFormula> cnf_corpus()
{
    std::vector<Clause> clauses;
    for (int code = 1; code < 27; ++code) {
        Clause c;
        int x = code;
        for (int v = 1; v <= 3; ++v, x /= 3)
            if (x % 3) c.push_back({"X" + std::to_string(v), x % 3 == 1});
        clauses.push_back(c);
    }
    std::vector<CnfFormula> out;
    std::vector<std::size_t> pick;
    std::function<void(std::size_t)> rec = [&](std::size_t from) {
        if (!pick.empty()) {
            CnfFormula f;
            for (auto i : pick) f.clauses.push_back(clauses[i]);
            out.push_back(f);
        }
        if (pick.size() == 4) return;
        for (std::size_t i = from; i < clauses.size(); ++i) {
            pick.push_back(i);
            rec(i + 1);
            pick.pop_back();
        }
    };
    rec(0);
    return out;
}

const std::vector<CnfFormula>& corpus()
{
    static const std::vector<CnfFormula> c = cnf_corpus();
    return c;
}

struct CorpusVerdicts {
    std::vector<SatVerdict> strong, weak;
};

const CorpusVerdicts& corpus_2d()
{
    static const CorpusVerdicts v = [] {
        CorpusVerdicts r;
        for (const auto& f : corpus()) {
            Formula g = to_formula(f);
            r.strong.push_back(decide_2d(g, Mode::Strong));
            r.weak.push_back(decide_2d(g, Mode::Weak));
        }
        return r;
    }();
    return v;
}

Matrix scalar(const Scalar& v)
{
    Matrix m(1, 1);
    m.at(0, 0) = v;
    return m;
}

Outcome lattice_laws()
{
    Checker c;
    std::mt19937 rng(101);
    for (std::size_t d = 1; d <= 5; ++d)
        for (int t = 0; t < 1000; ++t) {
            Subspace a = qtest::random_subspace(rng, d), b = qtest::random_subspace(rng, d),
                     x = qtest::random_subspace(rng, d);
            Subspace zero = Subspace::zero(d), one = Subspace::full(d);
            c.expect(meet(a, b) == meet(b, a) && join(a, b) == join(b, a), "commutativity");
            c.expect(meet(a, meet(b, x)) == meet(meet(a, b), x), "meet associativity");
            c.expect(join(a, join(b, x)) == join(join(a, b), x), "join associativity");
            c.expect(meet(a, join(a, b)) == a && join(a, meet(a, b)) == a, "absorption");
            c.expect(meet(a, a) == a && join(a, a) == a, "idempotence");
            c.expect(meet(a, zero) == zero && join(a, one) == one, "bounds");
            c.expect(meet(a, one) == a && join(a, zero) == a, "units");
            c.expect(complement(complement(a)) == a, "involution");
            c.expect(meet(a, complement(a)) == zero && join(a, complement(a)) == one, "complementation");
            c.expect(complement(meet(a, b)) == join(complement(a), complement(b)), "de Morgan meet");
            c.expect(complement(join(a, b)) == meet(complement(a), complement(b)), "de Morgan join");
            c.expect(!a.leq(b) || complement(b).leq(complement(a)), "order reversal");
            c.expect(meet(a, b).leq(a) && a.leq(join(a, b)), "order of meet and join");
            Subspace lo = meet(a, x);
            c.expect(join(lo, meet(b, x)) == meet(join(lo, b), x), "modular law");
        }
    c.note("5000 triples, d = 1..5");
    return c.outcome();
}

Outcome worked_examples()
{
    Checker c;
    c.expect(commutator(line({1, 0}), line({1, 1})).is_zero(), "commutator of span(1,0), span(1,1) is 0");

    Formula fxy = parse("C(X,Y) | X | Y"), fxz = parse("C(X,Z) | X | Z"), fyz = parse("C(Y,Z) | Y | Z");
    Formula g = land(land(fxy, fxz), fyz);
    std::vector<Subspace> grid;
    for (long a : {0, 1, -1, 2, -2, 3})
        for (long b : {0, 1, -1, 2, -2, 3}) grid.push_back(a == 0 && b == 0 ? Subspace::zero(2) : line({a, b}));
    std::size_t points = 0, full = 0;
    for (const auto& x : grid)
        for (const auto& y : grid)
            for (const auto& z : grid) {
                ++points;
                if (eval(g, bind_all(2, {{"X", x}, {"Y", y}, {"Z", z}})).is_full()) ++full;
            }
    c.expect(points == 46656 && full == points, "g = 1 on the 2D grid");
    c.note("g = 1 at " + std::to_string(full) + "/" + std::to_string(points) + " grid points");
    Assignment three = bind_all(3, {{"X", line({1, 0, 0})}, {"Y", line({1, 1, 0})}, {"Z", line({1, 1, 1})}});
    Subspace g3 = eval(g, three);
    c.note("g at the three F^3 lines has dim " + std::to_string(g3.dim()));
    c.expect(join(join(three.at("X"), three.at("Y")), three.at("Z")).is_full(), "three F^3 lines span F^3");
    c.expect(g3.is_zero(), "g = 0 at the three F^3 lines");

    Formula e1 = parse("X & (!X | Y)"), e2 = parse("Y & (!Y | X)");
    Assignment w = bind_all(2, {{"X", line({1, 0})}, {"Y", line({1, 1})}});
    c.expect(eval(e1, w) != eval(e2, w), "inequivalence witness");
    for (const auto& x : grid)
        for (const auto& y : grid) {
            Assignment b = bind_all(2, {{"X", x}, {"Y", y}});
            c.expect(eval(e1, b).is_full() == eval(e2, b).is_full(), "=1 iff =1 on the grid");
        }

    Subspace x = line({1, 0}), y = line({0, 1}), z = line({1, 1});
    long lhs = static_cast<long>(join(join(x, y), z).dim());
    long rhs = static_cast<long>(x.dim() + y.dim() + z.dim()) - static_cast<long>(meet(x, y).dim()) -
               static_cast<long>(meet(x, z).dim()) - static_cast<long>(meet(y, z).dim()) +
               static_cast<long>(meet(meet(x, y), z).dim());
    c.expect(lhs == 2 && rhs == 3, "inclusion-exclusion counterexample");
    return c.outcome();
}

Outcome counting()
{
    Checker c;
    mpz_class expect3 = mpz_class(256);
    for (int i = 0; i < 12; ++i) expect3 *= 6;
    expect3 *= 8;
    c.expect(card_F(1) == 4, "card_F(1) = 4");
    c.expect(card_F(2) == 96, "card_F(2) = 96");
    c.expect(card_F(3) == expect3, "card_F(3) = 2^8 * 6^12 * 8");
    std::size_t n1 = enumerate_signatures_2d(1).count(), n2 = enumerate_signatures_2d(2).count();
    c.expect(n1 == 4, "closure at n = 1");
    c.expect(n2 == 96, "closure at n = 2");
    c.note("card " + card_F(1).get_str() + ", " + card_F(2).get_str() + ", " + card_F(3).get_str() + "; closure " +
           std::to_string(n1) + ", " + std::to_string(n2));
    return c.outcome();
}

Outcome cnf_decider()
{
    Checker c;
    const auto& cs = corpus();
    const auto& v2 = corpus_2d();
    for (std::size_t i = 0; i < cs.size(); ++i) {
        Formula g = to_formula(cs[i]);
        for (Mode m : {Mode::Strong, Mode::Weak}) {
            const SatVerdict a = decide_cnf(cs[i], 2, m);
            const SatVerdict& b = m == Mode::Strong ? v2.strong[i] : v2.weak[i];
            c.expect(a.status == b.status && a.status != Status::Unknown, "CNF and 2D verdicts agree");
            for (const SatVerdict* v : {&a, &b})
                if (v->status == Status::Sat) c.expect(v->witness && verify(g, *v->witness, m), "Sat witnesses verify");
        }
    }
    std::mt19937 rng(104);
    for (int t = 0; t < 200; ++t) {
        CnfFormula f = random_cnf(rng, 2 + rng() % 4, 2 + rng() % 7, 2);
        bool b = boolean_sat(f);
        for (std::size_t d : {3, 5}) {
            SatVerdict v = decide_cnf(f, d, Mode::Strong);
            c.expect((v.status == Status::Sat) == b && v.status != Status::Unknown, "odd-d matches 2-SAT");
            if (v.status == Status::Sat)
                c.expect(v.witness && verify(to_formula(f), *v.witness, Mode::Strong), "odd-d witnesses verify");
        }
    }
    c.note(std::to_string(cs.size()) + " corpus formulas x 2 modes; 200 2-CNFs at d = 3, 5");
    return c.outcome();
}

Outcome npc()
{
    Checker c;
    std::mt19937 rng(105);
    std::size_t sat = 0;
    for (int t = 0; t < 50; ++t) {
        std::size_t n = 2 + rng() % 4;
        CnfFormula f = random_cnf(rng, n, 2 * n + rng() % (4 * n), 3);
        for (auto& cl : f.clauses)
            while (cl.size() < std::min<std::size_t>(3, n)) {
                std::string v = "X" + std::to_string(1 + rng() % n);
                bool seen = false;
                for (const auto& l : cl) seen = seen || l.var == v;
                if (!seen) cl.push_back({v, rng() % 2 == 0});
            }
        SatVerdict b = decide_boolean(to_formula(f));
        SatVerdict q = decide_2d(bool_to_q2d(f), Mode::Strong);
        c.expect(b.status != Status::Unknown && b.status == q.status, "Boolean and 2D statuses agree");
        if (q.status == Status::Sat) {
            ++sat;
            auto w = decode_boolean_witness(to_formula(f), *q.witness, Mode::Strong);
            c.expect(w && verify(to_formula(f), *w, Mode::Strong), "2D witness decodes");
        }
    }
    c.note("50 3-CNFs, " + std::to_string(sat) + " Sat");
    return c.outcome();
}

Outcome staudt()
{
    Checker c;
    std::mt19937 rng(106);
    Frame3 f1 = standard_frame(1);
    for (int t = 0; t < 100; ++t) {
        Scalar a(qtest::random_rational(rng), t % 2 ? mpq_class(0) : qtest::random_rational(rng));
        Scalar b(qtest::random_rational(rng), t % 3 ? mpq_class(0) : qtest::random_rational(rng));
        Subspace xa = encode(scalar(a), f1), xb = encode(scalar(b), f1);
        c.expect(decode(mul(xa, xb, f1), f1) == scalar(a * b), "d=1 product");
        c.expect(decode(sub(xa, xb, f1), f1) == scalar(a - b), "d=1 difference");
        c.expect(decode(adjoint(xa, f1), f1) == scalar(a.conj()), "d=1 adjoint");
    }
    Frame3 f2 = standard_frame(2);
    for (int t = 0; t < 20; ++t) {
        Matrix a(2, 2), b(2, 2);
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j) {
                a.at(i, j) = Scalar(qtest::random_rational(rng), qtest::random_rational(rng));
                b.at(i, j) = Scalar(qtest::random_rational(rng), qtest::random_rational(rng));
            }
        Subspace xa = encode(a, f2), xb = encode(b, f2);
        c.expect(decode(mul(xa, xb, f2), f2) == a * b, "2x2 product");
        c.expect(decode(sub(xa, xb, f2), f2) == a - b, "2x2 difference");
        c.expect(decode(adjoint(xa, f2), f2) == a.conj_transpose(), "2x2 adjoint");
    }
    PolyPtr p = parse_poly("x*y - 6");
    Formula g = poly_to_formula(p);
    c.expect(verify(g, poly_witness_assignment(p, {{"x", scalar(2)}, {"y", scalar(3)}}, 1), Mode::Strong),
             "x*y - 6 strongly satisfied at x = 2, y = 3");
    c.note("100 scalar pairs, 20 matrix pairs; x*y - 6 formula length " + std::to_string(length(g)));
    return c.outcome();
}

Outcome pluecker()
{
    Checker c;
    std::mt19937 rng(107);
    std::set<std::size_t> grades;
    for (int t = 0; t < 200; ++t) {
        std::size_t d = 1 + rng() % 5;
        Subspace s = qtest::random_subspace(rng, d);
        grades.insert(s.dim());
        PlueckerVector v = to_pluecker(s);
        c.expect(from_pluecker(v) == s, "roundtrip");
        c.expect(to_pluecker(from_pluecker(v)) == v, "coordinates stable");
    }
    int lines = 0;
    for (int t = 0; t < 100; ++t) {
        std::size_t d = 1 + rng() % 5;
        Vec v = qtest::random_vector(rng, d);
        bool zero = true;
        for (const auto& x : v) zero = zero && x.is_zero();
        if (zero) continue;
        ++lines;
        Subspace s = Subspace::span(d, {v});
        Vec coords;
        for (const auto& [idx, x] : to_pluecker(s).coords) coords.push_back(x);
        c.expect(Subspace::span(d, {coords}) == s, "1D coordinates give the line itself");
    }
    c.expect(grades.size() == 6, "all grades exercised");
    c.note("200 roundtrips, grades 0.." + std::to_string(*grades.rbegin()) + "; " + std::to_string(lines) +
           " lines");
    return c.outcome();
}

Outcome gadgets()
{
    Checker c;
    Formula bp = big_psi(2);
    Assignment w2 = big_psi_witness(2);
    c.expect(verify(bp, w2, Mode::Strong), "big_psi(2) witness at d = 2");
    c.expect(verify(bp, direct_sum(w2, w2), Mode::Strong), "doubled placement at d = 4");

    const std::size_t top = 8;
    std::map<std::size_t, Assignment> verified;
    SatVerdict at1 = decide_boolean(bp);
    c.expect(at1.status == Status::Unsat, "big_psi(2) unsatisfiable at d = 1");
    verified.emplace(2, w2);
    for (std::size_t d = 3; d <= top; ++d)
        for (const auto& [a, wa] : verified) {
            auto it = verified.find(d - a);
            if (it == verified.end()) continue;
            Assignment s = direct_sum(wa, it->second);
            if (verify(bp, s, Mode::Strong)) {
                verified.emplace(d, s);
                break;
            }
        }
    std::string dims;
    for (const auto& [a, w] : verified) dims += (dims.empty() ? "" : ",") + std::to_string(a);
    for (const auto& [a, wa] : verified)
        for (const auto& [b, wb] : verified)
            if (a + b <= top) {
                c.expect(verified.count(a + b) > 0, "dimension set closed under addition");
                c.expect(verify(bp, direct_sum(wa, wb), Mode::Strong), "direct sum of witnesses verifies");
            }
    c.note("big_psi(2) verified at d in {" + dims + "}");

    Formula h = hagge_h();
    std::mt19937 rng(108);
    Assignment two = bind_all(2, {{"p", line({1, 0})}, {"q", line({0, 1})}, {"r", line({1, 1})}});
    for (std::size_t d = 2; d <= 6; ++d) {
        std::size_t most = 0;
        for (int t = 0; t < 1000; ++t) {
            Subspace v = eval(h, qtest::random_assignment(rng, d, {"p", "q", "r"}));
            most = std::max(most, v.dim());
            c.expect(v.dim() <= d / 2, "h stays within floor(d/2)");
        }
        Assignment w = two;
        for (std::size_t k = 1; k < d / 2; ++k) w = direct_sum(w, two);
        if (d % 2) w = direct_sum(w, zero_block(two, 1));
        c.expect(eval(h, w).dim() == d / 2, "constructed witness reaches floor(d/2)");
        c.note("d=" + std::to_string(d) + " random max " + std::to_string(most));
    }
    return c.outcome();
}

Outcome shrinking()
{
    Checker c;
    const auto& cs = corpus();
    const auto& v2 = corpus_2d();
    std::size_t cases = 0;
    auto check = [&](const Formula& f, const Assignment& a) {
        Formula g = nnf(f);
        Assignment doubled = a;
        for (const auto& [n, s] : a.bindings) doubled.bind(primed(n), complement(s));
        for (const auto& n : variables(g))
            if (!doubled.bindings.count(n)) doubled.bind(n, Subspace::zero(a.ambient));
        Subspace v = eval(g, doubled);
        c.expect(v == eval(f, a), "nnf value matches");
        if (v.is_zero()) return;
        ++cases;
        Subspace z = Subspace::span(a.ambient, {v.basis().row(0)});
        Assignment y = shrink_witness(g, doubled, z);
        Subspace support = Subspace::zero(a.ambient);
        for (const auto& [n, s] : y.bindings) {
            c.expect(s.dim() <= length(g), "shrunk dims at most |g|");
            c.expect(s.leq(doubled.at(n)), "shrunk values below the originals");
            support = join(support, s);
        }
        c.expect(z.leq(eval(g, y)), "shrunk assignment keeps the line");
        c.expect(support.dim() <= weak_dim_bound(f), "support join within n|f|");
    };
    for (std::size_t i = 0; i < cs.size(); ++i)
        if (v2.weak[i].status == Status::Sat) check(to_formula(cs[i]), *v2.weak[i].witness);
    std::mt19937 rng(109);
    const std::vector<std::string> vars{"X", "Y", "Z"};
    for (int t = 0; t < 300; ++t) {
        std::size_t d = 2 + rng() % 4;
        check(qtest::random_formula(rng, vars, 4), qtest::random_assignment(rng, d, vars));
    }
    for (int t = 0; t < 100; ++t) {
        std::size_t d = 1 + rng() % 4;
        Formula f = qtest::random_formula(rng, vars, 4);
        Assignment a = qtest::random_assignment(rng, d, vars);
        for (const auto& v : vars) a.bind(primed(v), complement(a.at(v)));
        c.expect(eval(nnf(f), a) == eval(f, a), "nnf round-trip");
    }
    c.note(std::to_string(cases) + " shrink cases; 100 nnf pairs");
    return c.outcome();
}

Outcome qelim()
{
    Checker c;
    Family pg = pairwise_generic(2, 2);
    Subspace a = pg.members[0], b = pg.members[1];
    std::vector<Subspace> ys{Subspace::zero(2), Subspace::full(2), a, complement(a), b};
    auto agrees = [&](const Formula& f, Mode mode, const std::map<std::string, Subspace>& consts) {
        QElimResult g = qelim2d(f, "X", consts, mode);
        c.expect(variables(g.formula).count("X") == 0, "X eliminated");
        for (const auto& y : ys) {
            TwoDOptions o;
            o.constants = consts;
            o.constants["Yc"] = y;
            SatVerdict ex = decide_2d(substitute(f, {{"Y", cst("Yc")}}), mode, o);
            c.expect(ex.status != Status::Unknown, "oracle decides");
            Assignment as;
            as.ambient = 2;
            as.bind("Y", y);
            for (const auto& [n, v] : consts) as.bind(n, v);
            for (const auto& [n, v] : g.fresh_constants) as.bind(n, v);
            Subspace val = eval(g.formula, as);
            bool truth = mode == Mode::Weak ? !val.is_zero() : val.is_full();
            c.expect(truth == (ex.status == Status::Sat), "qelim matches the existential oracle");
        }
    };
    std::mt19937 rng(110);
    for (int t = 0; t < 20; ++t) {
        Formula f = qtest::random_formula(rng, {"X", "Y"}, 3);
        for (Mode m : {Mode::Weak, Mode::Strong}) agrees(f, m, {});
    }
    Formula nc = parse("!C(X,Y)");
    for (Mode m : {Mode::Weak, Mode::Strong}) agrees(nc, m, {});
    QElimResult r = qelim2d(nc, "X", {}, Mode::Weak);
    for (const auto& y : ys) {
        Assignment as;
        as.ambient = 2;
        as.bind("Y", y);
        for (const auto& [n, v] : r.fresh_constants) as.bind(n, v);
        c.expect(eval(r.formula, as).is_zero() == (y.dim() != 1), "exists X: !C(X,Y) != 0 iff dim Y = 1");
    }
    c.note("20 formulas x 2 modes over Y in {0, 1, A, !A, B}");
    return c.outcome();
}

Outcome polynomials()
{
    Checker c;
    std::mt19937 rng(111);
    const std::vector<std::string> vars{"X", "Y", "Z"};
    int done = 0;
    std::size_t max_degree = 0;
    for (int t = 0; t < 400 && done < 20; ++t) {
        Formula f = qtest::random_formula(rng, vars, 3);
        Mode mode = t % 2 ? Mode::Weak : Mode::Strong;
        SatVerdict v = decide_2d(f, mode);
        if (v.status != Status::Sat) continue;
        ++done;
        PolySystem s = to_polysystem(f, 2, mode);
        PolySystem q = combine_quartic(s);
        PolySystem n = normalize(s);
        for (const PolySystem* p : {&s, &q, &n}) {
            max_degree = std::max(max_degree, p->degree());
            c.expect(p->degree() <= 4, "emitted degree at most 4");
        }
        auto point = poly_witness(s, *v.witness);
        c.expect(point && verify_poly_witness(s, *point), "witness zeroes the system");
        if (point) c.expect(verify_poly_witness(q, *point), "witness zeroes the quartic");
    }
    c.expect(done == 20, "20 Sat instances found");

    const std::vector<std::string> names{"a", "b", "c"};
    for (int t = 0; t < 50; ++t) {
        PolySystem s;
        s.variables = names;
        std::map<std::string, mpq_class> at;
        for (const auto& nm : names) at[nm] = static_cast<long>(rng() % 5) - 2;
        std::size_t k = 1 + rng() % 4;
        for (std::size_t i = 0; i < k; ++i) {
            Poly p;
            for (int m = 0; m < 3; ++m) {
                Poly term = Poly::constant(qtest::random_rational(rng, 3));
                for (int deg = static_cast<int>(rng() % 3); deg > 0; --deg) term = term * Poly::variable(names[rng() % 3]);
                p += term;
            }
            if (rng() % 2) p = p - Poly::constant(p.eval(at));
            s.equations.push_back(p);
        }
        PolySystem q = combine_quartic(s);
        c.expect(q.combined && q.combined->degree() <= 4, "quartic degree");
        if (!q.combined) continue;
        for (int probe = 0; probe < 10; ++probe) {
            std::map<std::string, mpq_class> pt = at;
            if (probe > 0)
                for (const auto& nm : names) pt[nm] = static_cast<long>(rng() % 5) - 2;
            bool all = true;
            for (const auto& e : s.equations) all = all && e.eval(pt) == 0;
            c.expect((q.combined->eval(pt) == 0) == all, "quartic zero set equals the system's");
        }
    }
    c.note("20 Sat instances, max degree " + std::to_string(max_degree) + "; 50 quartic systems");
    return c.outcome();
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Acceptance criteria runner"};
    std::vector<int> expected_fail;
    std::vector<int> only;
    app.add_option("--expect-fail", expected_fail, "Criteria whose FAIL is documented; exit 0 iff exactly these fail");
    app.add_option("--only", only, "Run only these criteria");
    CLI11_PARSE(app, argc, argv);

    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"lattice law suite", lattice_laws},
        {"example regression", worked_examples},
        {"counting", counting},
        {"CNF decider", cnf_decider},
        {"NP reduction to 2D", npc},
        {"von Staudt homomorphism", staudt},
        {"Pluecker coordinates", pluecker},
        {"dimension gadgets", gadgets},
        {"witness shrinking", shrinking},
        {"quantifier elimination", qelim},
        {"polynomial emission", polynomials},
    };
    std::set<int> failed;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        int id = static_cast<int>(i + 1);
        if (!only.empty() && std::find(only.begin(), only.end(), id) == only.end()) continue;
        auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (!o.pass) failed.insert(id);
        std::printf("%s %2d %s (%.1fs): %s\n", o.pass ? "PASS" : "FAIL", id, criteria[i].first.c_str(), secs,
                    o.detail.c_str());
        std::fflush(stdout);
    }
    std::set<int> expect(expected_fail.begin(), expected_fail.end());
    if (!only.empty()) {
        std::set<int> run(only.begin(), only.end());
        std::set<int> e;
        for (int x : expect)
            if (run.count(x)) e.insert(x);
        expect = e;
    }
    std::printf("%zu of %zu criteria failed\n", failed.size(), only.empty() ? criteria.size() : only.size());
    return failed == expect ? 0 : 1;
}
