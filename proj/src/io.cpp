#include "qlogic/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace qlogic {

Json to_json(const Matrix& m)
{
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json r = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) r.push_back(m.at(i, j).str());
        rows.push_back(r);
    }
    return rows;
}

namespace {

Scalar scalar_from_json(const Json& j)
{
    if (j.is_number_integer()) return Scalar(j.get<long>());
    if (j.is_string()) return Scalar::parse(j.get<std::string>());
    throw std::invalid_argument("scalar must be a string or an integer");
}

std::vector<Vec> rows_from_json(const Json& j, std::size_t cols)
{
    if (!j.is_array()) throw std::invalid_argument("expected an array of rows");
    std::vector<Vec> rows;
    for (const auto& r : j) {
        if (!r.is_array() || r.size() != cols) throw std::invalid_argument("row length differs from column count");
        Vec v;
        for (const auto& x : r) v.push_back(scalar_from_json(x));
        rows.push_back(v);
    }
    return rows;
}

} // namespace

Matrix matrix_from_json(const Json& j)
{
    if (!j.is_array() || j.empty()) throw std::invalid_argument("matrix must be a nonempty array of rows");
    return Matrix::from_rows(rows_from_json(j, j.at(0).size()), j.at(0).size());
}

Json to_json(const Subspace& s) { return {{"ambient", s.ambient()}, {"basis", to_json(s.basis())}}; }

Subspace subspace_from_json(const Json& j)
{
    std::size_t d = j.at("ambient").get<std::size_t>();
    std::vector<Vec> rows = rows_from_json(j.at("basis"), d);
    return rows.empty() ? Subspace::zero(d) : Subspace::span(d, rows);
}

Json to_json(const Assignment& a)
{
    Json b = Json::object();
    for (const auto& [n, s] : a.bindings) b[n] = to_json(s);
    return {{"ambient", a.ambient}, {"bindings", b}};
}

Assignment assignment_from_json(const Json& j)
{
    Assignment a;
    a.ambient = j.at("ambient").get<std::size_t>();
    for (const auto& [n, s] : j.at("bindings").items()) {
        Subspace v = subspace_from_json(s);
        if (v.ambient() != a.ambient) throw std::invalid_argument("binding " + n + " has the wrong ambient dimension");
        a.bind(n, v);
    }
    return a;
}

Json to_json(const SatVerdict& v)
{
    Json j = {{"status", to_string(v.status)}, {"certificate", v.certificate}};
    j["witness"] = v.witness ? to_json(*v.witness) : Json(nullptr);
    return j;
}

SatVerdict verdict_from_json(const Json& j)
{
    SatVerdict v;
    v.status = status_from_string(j.at("status").get<std::string>());
    v.certificate = j.value("certificate", "");
    if (j.contains("witness") && !j.at("witness").is_null()) v.witness = assignment_from_json(j.at("witness"));
    return v;
}

Json to_json(const PlueckerVector& p)
{
    Json coords = Json::array();
    for (const auto& [idx, c] : p.coords) coords.push_back({idx, c.str()});
    return {{"ambient", p.ambient}, {"grade", p.grade}, {"coords", coords}};
}

PlueckerVector pluecker_from_json(const Json& j)
{
    PlueckerVector p;
    p.ambient = j.at("ambient").get<std::size_t>();
    p.grade = j.at("grade").get<std::size_t>();
    for (const auto& e : j.at("coords")) {
        auto idx = e.at(0).get<std::vector<std::size_t>>();
        if (idx.size() != p.grade) throw std::invalid_argument("index tuple length differs from grade");
        p.coords[idx] = scalar_from_json(e.at(1));
    }
    return p;
}

Mode mode_from_string(const std::string& s)
{
    if (s == "strong") return Mode::Strong;
    if (s == "weak") return Mode::Weak;
    throw std::invalid_argument("mode must be strong or weak");
}

Status status_from_string(const std::string& s)
{
    if (s == "sat") return Status::Sat;
    if (s == "unsat") return Status::Unsat;
    if (s == "unknown") return Status::Unknown;
    throw std::invalid_argument("unknown status " + s);
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_file(const std::string& path, const std::string& text)
{
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
}

} // namespace qlogic
