#ifndef QLOGIC_IO_HPP
#define QLOGIC_IO_HPP

#include "qlogic/pluecker.hpp"
#include "qlogic/solve.hpp"

#include <json.hpp>

#include <string>

namespace qlogic {

using Json = nlohmann::json;

// Subspace: {"ambient": d, "basis": [[scalar text, ...], ...]}
Json to_json(const Subspace& s);
Subspace subspace_from_json(const Json& j);

Json to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j);

// Assignment: {"ambient": d, "bindings": {name: Subspace}}
Json to_json(const Assignment& a);
Assignment assignment_from_json(const Json& j);

// Verdict: {"status", "certificate", "witness": Assignment or null}
Json to_json(const SatVerdict& v);
SatVerdict verdict_from_json(const Json& j);

// Pluecker vector: {"ambient", "grade", "coords": [[index tuple, scalar text], ...]}
Json to_json(const PlueckerVector& p);
PlueckerVector pluecker_from_json(const Json& j);

Mode mode_from_string(const std::string& s);
Status status_from_string(const std::string& s);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

} // namespace qlogic

#endif
