#pragma once

#include <nlohmann/json.hpp>
#include <string>

#include "liepoisson/dissipation.hpp"
#include "liepoisson/extensions.hpp"

namespace liepoisson {

using Json = nlohmann::json;

// Every parser raises SchemaError on malformed input; indices in JSON are 1-based.

Scalar scalar_from_json(const Json& j);  // string "p/q" or integer
std::vector<Triple> triples_from_json(const Json& j);
Json triples_to_json(const std::vector<Triple>& t);
Matrix matrix_from_json(const Json& j);
Json matrix_to_json(const Matrix& m);
ExactVec state_from_json(const Json& j);
Json vector_to_json(const ExactVec& v);

// {"dim": N, "labels": [...], "c": [{"i":1,"j":2,"k":3,"v":"1"}]}
LieAlgebra algebra_from_json(const Json& j);
Json algebra_to_json(const LieAlgebra& alg);

// {"g": <algebra>, "dimH": M, "h_labels": [...], "phi": [...], "kappa": [...], "L": [...], "R": [...]}
ExtendedStructure extension_from_json(const Json& j);
Json extension_to_json(const ExtendedStructure& spec);

// {"l", "k", "dimV", "dimW", and one triple list per tensor field of CocycleCoupling}
CocycleCoupling coupling_from_json(const Json& j);
Json coupling_to_json(const CocycleCoupling& spec);

// Observables are polynomials: {"arity": n, "monomials": [{"coeff": "1/2", "powers": [2,0,0]}]} ("terms" is an alias),
// {"quadratic": ["1", "1/2", ...]} for sum w_i z_i^2 / 2, {"linear": [...]}, or an expression string.
Polynomial polynomial_from_json(const Json& j, int arity);
Json polynomial_to_json(const Polynomial& p);

// Expressions such as "1/2*z1^2 + z2*z3 - 3". Variables are z1..zn.
Polynomial parse_polynomial(const std::string& text, int arity);
std::string to_string(const Polynomial& p);

// {"variant": "casimir", "psi": [[...]], "casimir": <observable>, "upsilon": [[...]], "a": "1"}
SymmetricBracketSpec dissipation_from_json(const Json& j, int dim);

Json report_to_json(const VerificationReport& r);

Json read_json_file(const std::string& path);

}  // namespace liepoisson
