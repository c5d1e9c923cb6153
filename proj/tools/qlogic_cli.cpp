#include "qlogic/count.hpp"
#include "qlogic/io.hpp"
#include "qlogic/pluecker.hpp"
#include "qlogic/reduce.hpp"
#include "qlogic/solve.hpp"
#include "qlogic/staudt.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <set>
#include <sstream>

using namespace qlogic;

namespace {

constexpr int kOk = 0;
constexpr int kNoWitness = 1;
constexpr int kUsage = 2;

struct FormulaInput {
    std::string file;
    std::string expr;
    std::vector<std::string> constants;

    void attach(CLI::App* app)
    {
        auto* f = app->add_option("-f,--formula", file, "formula file");
        auto* e = app->add_option("-e,--expr", expr, "formula text");
        f->excludes(e);
        app->add_option("--const", constants, "names parsed as constants");
    }
    bool given() const { return !file.empty() || !expr.empty(); }
    Formula load() const
    {
        if (!given()) throw std::invalid_argument("a formula is required (--formula or --expr)");
        std::string text = file.empty() ? expr : read_file(file);
        return parse(text, std::set<std::string>(constants.begin(), constants.end()));
    }
};

void emit(const std::string& path, const std::string& text)
{
    if (path.empty() || path == "-")
        std::cout << text << (text.empty() || text.back() != '\n' ? "\n" : "");
    else
        write_file(path, text + (text.empty() || text.back() != '\n' ? "\n" : ""));
}

std::map<std::string, Subspace> constants_from_file(const std::string& path)
{
    std::map<std::string, Subspace> out;
    if (path.empty()) return out;
    Assignment a = assignment_from_json(Json::parse(read_file(path)));
    return a.bindings;
}

Matrix scalar_matrix(const Scalar& v, std::size_t d) { return Matrix::identity(d).scaled(v); }

std::string matrix_text(const Matrix& m)
{
    return m.rows() == 1 && m.cols() == 1 ? m.at(0, 0).str() : m.str();
}

// ---------------------------------------------------------------- subcommands

int run_eval(const FormulaInput& in, const std::string& assignment_path, std::size_t d, const std::string& out)
{
    Formula f = in.load();
    Assignment a = assignment_from_json(Json::parse(read_file(assignment_path)));
    if (d != 0 && a.ambient != d) throw std::invalid_argument("assignment ambient differs from -d");
    Subspace v = eval(f, a);
    Json j = {{"value", to_json(v)}, {"dim", v.dim()}, {"strong", v.is_full()}, {"weak", !v.is_zero()}};
    emit(out, j.dump(2));
    return kOk;
}

struct SatOptions {
    std::string engine = "2d";
    std::size_t d = 2;
    std::string mode = "strong";
    std::string dimacs;
    std::string witness;
    std::string constants;
    std::string out;
    bool allow_large = false;
    std::size_t max_candidates = 2000000;
    std::size_t depth = 1;
    std::size_t max_pool = 40;
};

int run_sat(const FormulaInput& in, const SatOptions& o)
{
    Mode mode = mode_from_string(o.mode);
    SatVerdict v;
    std::optional<Formula> f;
    if (o.engine == "cnf") {
        if (o.dimacs.empty()) throw std::invalid_argument("the cnf engine reads --dimacs");
        CnfFormula cnf = parse_dimacs(read_file(o.dimacs));
        v = decide_cnf(cnf, o.d, mode);
        f = to_formula(cnf);
    } else {
        f = o.dimacs.empty() ? in.load() : to_formula(parse_dimacs(read_file(o.dimacs)));
        if (o.engine == "2d") {
            TwoDOptions opts;
            opts.allow_large = o.allow_large;
            opts.constants = constants_from_file(o.constants);
            v = decide_2d(*f, mode, opts);
        } else if (o.engine == "boolean") {
            v = decide_boolean(*f);
        } else if (o.engine == "search") {
            PoolConfig cfg;
            cfg.max_candidates = o.max_candidates;
            cfg.depth = o.depth;
            cfg.max_pool = o.max_pool;
            v = search(*f, o.d, mode, cfg);
        } else {
            throw std::invalid_argument("unknown engine " + o.engine);
        }
    }
    if (v.witness && !verify(*f, *v.witness, o.engine == "boolean" ? Mode::Strong : mode))
        throw std::logic_error("witness failed re-verification");
    emit(o.out, to_json(v).dump(2));
    if (!o.witness.empty()) {
        if (!v.witness) {
            std::cerr << "no witness: verdict " << to_string(v.status) << '\n';
            return kNoWitness;
        }
        write_file(o.witness, to_json(*v.witness).dump(2) + "\n");
    }
    return kOk;
}

struct ReduceOptions {
    std::string kind;
    std::string dimacs;
    std::size_t d = 2;
    std::size_t k = 1;
    std::string mode = "strong";
    std::string var = "X";
    std::string constants;
    std::string constants_out;
    std::string via = "psi";
    bool no_split = false;
    bool quartic = false;
    bool normalized = false;
    bool json = false;
    std::string out;
};

int run_reduce(const FormulaInput& in, const ReduceOptions& o)
{
    if (o.kind == "bool2q2d") {
        if (o.dimacs.empty()) throw std::invalid_argument("bool2q2d reads --dimacs");
        emit(o.out, print(bool_to_q2d(parse_dimacs(read_file(o.dimacs)))));
        return kOk;
    }
    Formula f = in.load();
    if (o.kind == "weak2strong") {
        emit(o.out, print(o.via == "multiple" ? strong_from_weak(f, o.d) : weak2strong_psi(f, o.d)));
    } else if (o.kind == "strong2weak") {
        emit(o.out, print(weak_from_strong(f, o.d)));
    } else if (o.kind == "lift") {
        emit(o.out, print(lift_dim(f, o.k, o.d)));
    } else if (o.kind == "qelim2d") {
        QElimResult r = qelim2d(f, o.var, constants_from_file(o.constants), mode_from_string(o.mode));
        emit(o.out, print(r.formula));
        Assignment fresh;
        fresh.ambient = 2;
        fresh.bindings = r.fresh_constants;
        if (o.constants_out.empty())
            std::cerr << to_json(fresh).dump() << '\n';
        else
            write_file(o.constants_out, to_json(fresh).dump(2) + "\n");
    } else if (o.kind == "poly") {
        PolySystem s = to_polysystem(f, o.d, mode_from_string(o.mode), !o.no_split, constants_from_file(o.constants));
        if (o.normalized) s = normalize(s);
        if (o.quartic) s = combine_quartic(s);
        emit(o.out, o.json ? s.json() : s.text());
    } else {
        throw std::invalid_argument("unknown reduction kind " + o.kind);
    }
    return kOk;
}

int run_staudt(const std::string& poly_text, std::size_t d, bool compile, const std::vector<std::string>& demo,
               const std::string& out)
{
    PolyPtr p = parse_poly(poly_text);
    if (compile == !demo.empty()) throw std::invalid_argument("choose exactly one of --compile and --demo");
    if (compile) {
        emit(out, print(poly_to_formula(p)));
        return kOk;
    }
    std::vector<std::string> vars = poly_variables(p);
    if (demo.size() != vars.size())
        throw std::invalid_argument("--demo needs one value per polynomial variable (" + std::to_string(vars.size()) + ")");
    Frame3 fr = standard_frame(d);
    std::map<std::string, Matrix> values;
    std::ostringstream os;
    os << "frame: standard, block " << d << ", ambient " << 3 * d << '\n';
    for (std::size_t i = 0; i < vars.size(); ++i) {
        values[vars[i]] = scalar_matrix(Scalar::parse(demo[i]), d);
        os << vars[i] << " = " << matrix_text(values[vars[i]]) << " encodes to " << encode(values[vars[i]], fr).str()
           << '\n';
    }
    Assignment a = poly_witness_assignment(p, values, d);
    Subspace root = eval(poly_term(p, frame_vars()), a);
    os << "p = " << print_poly(p) << " evaluates to " << root.str() << ", which decodes to "
       << matrix_text(*decode(root, fr)) << " (direct " << matrix_text(eval_poly(p, values, d)) << ")\n";
    os << "g_p strongly satisfied: " << (verify(poly_to_formula(p), a, Mode::Strong) ? "yes" : "no") << '\n';
    if (vars.size() >= 2) {
        Subspace xa = a.at(poly_var_name(vars[0])), xb = a.at(poly_var_name(vars[1]));
        os << "sub(" << vars[0] << ", " << vars[1] << ") decodes to " << matrix_text(*decode(sub(xa, xb, fr), fr)) << '\n';
        os << "adjoint(" << vars[0] << ") decodes to " << matrix_text(*decode(adjoint(xa, fr), fr)) << '\n';
        os << "mul(" << vars[0] << ", " << vars[1] << ") decodes to " << matrix_text(*decode(mul(xa, xb, fr), fr))
           << '\n';
    }
    emit(out, os.str());
    return kOk;
}

int run_plucker(bool to, const std::string& input, const std::string& out)
{
    Json j = Json::parse(read_file(input));
    if (to)
        emit(out, to_json(to_pluecker(subspace_from_json(j))).dump(2));
    else
        emit(out, to_json(from_pluecker(pluecker_from_json(j))).dump(2));
    return kOk;
}

int run_count(std::size_t n, bool enumerate, bool json, const std::string& out)
{
    if (n == 0) throw std::invalid_argument("--vars must be at least 1");
    Json j = {{"n", n}, {"card", card_F(n).get_str()}};
    Json phis = Json::object();
    for (std::size_t p = 2; p <= n; ++p) phis[std::to_string(p)] = phi(n, p).get_str();
    j["phi"] = phis;
    if (enumerate) j["closure"] = enumerate_signatures_2d(n).count();
    if (json) {
        emit(out, j.dump(2));
        return kOk;
    }
    std::ostringstream os;
    os << "n " << n << '\n';
    for (std::size_t p = 2; p <= n; ++p) os << "phi(" << n << "," << p << ") " << phi(n, p).get_str() << '\n';
    os << "card " << card_F(n).get_str() << '\n';
    if (enumerate) os << "closure " << j["closure"].get<std::size_t>() << '\n';
    emit(out, os.str());
    return kOk;
}

int run_gadget(const std::string& name, std::size_t d, std::size_t k, std::size_t m, std::size_t n,
               const std::string& out)
{
    Formula f;
    if (name == "h")
        f = hagge_h();
    else if (name == "psi12")
        f = psi12();
    else if (name == "psi")
        f = psi(k, m);
    else if (name == "bigpsi")
        f = big_psi(d);
    else if (name == "generic")
        f = n ? generic_f(d, n) : generic_f(d);
    else if (name == "ndist")
        f = ndist_psi(n);
    else if (name == "fneq")
        f = fneq2d();
    else if (name == "booltest")
        f = boolean_test_f(d);
    else
        throw std::invalid_argument("unknown gadget " + name);
    emit(out, print(f));
    return kOk;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact quantum-logic toolkit over finite-dimensional Grassmannians"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "qlogic 1.0");
    std::string seed;
    app.add_option("--seed", seed, "reserved; all constructions are deterministic");

    FormulaInput eval_in, sat_in, reduce_in;
    std::string eval_assignment, eval_out;
    std::size_t eval_d = 0;
    auto* ev = app.add_subcommand("eval", "evaluate a formula at an assignment");
    eval_in.attach(ev);
    ev->add_option("-a,--assignment", eval_assignment, "assignment JSON file")->required();
    ev->add_option("-d,--dim", eval_d, "expected ambient dimension");
    ev->add_option("-o,--out", eval_out, "output file");

    SatOptions so;
    auto* sat = app.add_subcommand("sat", "decide or search satisfiability");
    sat_in.attach(sat);
    sat->add_option("--engine", so.engine, "cnf, 2d, boolean or search")
        ->check(CLI::IsMember({"cnf", "2d", "boolean", "search"}));
    sat->add_option("-d,--dim", so.d, "ambient dimension")->check(CLI::PositiveNumber);
    sat->add_option("--mode", so.mode, "strong or weak")->check(CLI::IsMember({"strong", "weak"}));
    sat->add_option("--dimacs", so.dimacs, "DIMACS CNF file");
    sat->add_option("--witness", so.witness, "write the witness here; exit 1 when there is none");
    sat->add_option("--constants", so.constants, "assignment JSON with constant values (2d engine)");
    sat->add_flag("--allow-large", so.allow_large, "lift the 2d variable cap");
    sat->add_option("--max-candidates", so.max_candidates, "search budget");
    sat->add_option("--depth", so.depth, "search pool closure depth");
    sat->add_option("--max-pool", so.max_pool, "search pool size cap");
    sat->add_option("-o,--out", so.out, "verdict output file");

    ReduceOptions ro;
    auto* red = app.add_subcommand("reduce", "apply a reduction");
    reduce_in.attach(red);
    red->add_option("--kind", ro.kind, "bool2q2d, weak2strong, strong2weak, lift, qelim2d or poly")
        ->required()
        ->check(CLI::IsMember({"bool2q2d", "weak2strong", "strong2weak", "lift", "qelim2d", "poly"}));
    red->add_option("--dimacs", ro.dimacs, "DIMACS CNF file (bool2q2d)");
    red->add_option("-d,--dim", ro.d, "dimension")->check(CLI::PositiveNumber);
    red->add_option("-k", ro.k, "block dimension (lift)");
    red->add_option("--mode", ro.mode, "strong or weak")->check(CLI::IsMember({"strong", "weak"}));
    red->add_option("--var", ro.var, "variable to eliminate (qelim2d)");
    red->add_option("--constants", ro.constants, "assignment JSON with constant values");
    red->add_option("--constants-out", ro.constants_out, "fresh constants output (qelim2d)");
    red->add_option("--via", ro.via, "psi or multiple (weak2strong)")->check(CLI::IsMember({"psi", "multiple"}));
    red->add_flag("--no-split", ro.no_split, "keep Gaussian-rational unknowns (poly)");
    red->add_flag("--quartic", ro.quartic, "add the sum-of-squares quartic (poly)");
    red->add_flag("--normalized", ro.normalized, "coefficients in {0, +-1, +-2} (poly)");
    red->add_flag("--json", ro.json, "structured output (poly)");
    red->add_option("-o,--out", ro.out, "output file");

    std::string poly_text, st_out;
    std::size_t matdim = 1;
    bool compile = false;
    std::vector<std::string> demo;
    auto* st = app.add_subcommand("staudt", "ring arithmetic inside Gr(F^(3d))");
    st->add_option("--poly", poly_text, "polynomial")->required();
    st->add_option("--matdim", matdim, "matrix block size")->check(CLI::PositiveNumber);
    st->add_flag("--compile", compile, "print g_p");
    st->add_option("--demo", demo, "values of the polynomial variables");
    st->add_option("-o,--out", st_out, "output file");

    bool to = false, from = false;
    std::string pl_in, pl_out;
    auto* pl = app.add_subcommand("plucker", "Pluecker coordinates");
    auto* to_flag = pl->add_flag("--to", to, "subspace to coordinates");
    pl->add_flag("--from", from, "coordinates to subspace")->excludes(to_flag);
    pl->add_option("input", pl_in, "input JSON file")->required();
    pl->add_option("-o,--out", pl_out, "output file");

    std::size_t vars = 2;
    bool enumerate = false, count_json = false;
    std::string count_out;
    auto* cnt = app.add_subcommand("count", "formula counts");
    cnt->add_option("--vars", vars, "number of variables")->required();
    cnt->add_flag("--enumerate", enumerate, "closure enumeration (n <= 2)");
    cnt->add_flag("--json", count_json, "structured output");
    cnt->add_option("-o,--out", count_out, "output file");

    std::string gname, g_out;
    std::size_t gd = 2, gk = 1, gm = 2, gn = 0;
    auto* gad = app.add_subcommand("gadget", "print a gadget formula");
    gad->add_option("--name", gname, "h, psi12, psi, bigpsi, generic, ndist, fneq or booltest")->required();
    gad->add_option("-d,--dim", gd, "dimension");
    gad->add_option("-k", gk, "block dimension (psi)");
    gad->add_option("-m", gm, "block count (psi)");
    gad->add_option("-n", gn, "family size (generic, ndist)");
    gad->add_option("-o,--out", g_out, "output file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*ev) return run_eval(eval_in, eval_assignment, eval_d, eval_out);
        if (*sat) return run_sat(sat_in, so);
        if (*red) return run_reduce(reduce_in, ro);
        if (*st) return run_staudt(poly_text, matdim, compile, demo, st_out);
        if (*pl) {
            if (to == from) throw std::invalid_argument("choose exactly one of --to and --from");
            return run_plucker(to, pl_in, pl_out);
        }
        if (*cnt) return run_count(vars, enumerate, count_json, count_out);
        if (*gad) return run_gadget(gname, gd, gk, gm, gn, g_out);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}
