#pragma once

#include "json.hpp"

#include "ratvar/mcrepr.hpp"

namespace ratvar {

// Complex numbers are [re, im] everywhere.
using Json = nlohmann::ordered_json;

Json to_json(Complex z);
Complex complex_from_json(const Json& j);

// [[re, im], ...], ascending coefficients.
Json to_json(const Polynomial& p);
Polynomial polynomial_from_json(const Json& j);

// {"p": ..., "q": ...}; "q" defaults to 1.
Json to_json(const RationalFunction& r);
RationalFunction rational_from_json(const Json& j);

// {"rows", "cols", "entries"} row-major; square inputs may give "n" instead.
Json to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const Json& j);

// rho is the string "inf" when unbounded.
Json to_json(const Representation& rep);
Representation representation_from_json(const Json& j);

}  // namespace ratvar
