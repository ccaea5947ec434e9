#pragma once

#include <string>

#include "json.hpp"
#include "valuator/decomp.hpp"
#include "valuator/homcheck.hpp"
#include "valuator/matroid.hpp"
#include "valuator/polynomial.hpp"

namespace valuator {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "valuator/1";

// {"ground": ["1","2",...], "bases": [["1","2"],...]}
Json matroid_to_json(const Matroid& m);
Matroid matroid_from_json(const Json& j);  // throws ValidationError on bad shape

// {"target": <matroid>, "faces": [<matroid>...]}; internal faces inferred.
Json decomposition_to_json(const Decomposition& d);
Decomposition decomposition_from_json(const Json& j);

// Sparse coefficient maps: {"0": 1, "1": 4, ...} for univariate output and
// {"t^i u^j": c} for bigraded output.  Coefficients are emitted as integers
// (every implemented invariant is integral); a non-integral coefficient is
// emitted as a "p/q" string.
Json upoly_to_json(const UPoly& p);
Json bpoly_to_json(const BPoly& p);

// {"<t^i u^j>": {"dims": {"0": n0, ...}, "homology": {...}}, ...} with the
// overall exactness verdict.
Json homreport_to_json(const HomologyReport& r);

Json parse_json_file(const std::string& path);  // throws ValidationError

}  // namespace valuator
