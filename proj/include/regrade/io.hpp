#pragma once

#include <complex>
#include <string>
#include <variant>

#include <json.hpp>

#include "regrade/algebra.hpp"
#include "regrade/group.hpp"
#include "regrade/pairing.hpp"

namespace regrade {

// Insertion-ordered JSON keeps every report byte-deterministic.
using json = nlohmann::ordered_json;

json group_to_json(const GroupSpec& g);
GroupSpec group_from_json(const json& j);
// "2x2", "4", "e" (trivial), or a JSON object {"moduli":[...]}.
GroupSpec group_from_spec(const std::string& s);

json element_to_json(const GroupElement& e);
GroupElement element_from_json(const json& j, const GroupSpec& g);

// Scalars: integers are emitted as JSON numbers; everything else as
// {"conductor": m, "coeffs": [["num","den"], ...]}. Inputs additionally
// accept decimal strings, "num/den" strings, and {"zeta":[m,k]}.
json scalar_to_json(const Cyclotomic& v);
Cyclotomic scalar_from_json(const json& j);
std::complex<double> scalar_approx(const Cyclotomic& v);

json bicharacter_to_json(const Bicharacter& b);
json cocycle_to_json(const Cocycle& c);
using Pairing = std::variant<Bicharacter, Cocycle>;
Pairing pairing_from_json(const json& j);
// Builtins: "grassmann", "pauli:<n>", "trivial", "trivial@<moduli>",
// "cocycle:<cocycle spec>", or a file path / inline JSON.
Pairing pairing_from_spec(const std::string& s);

// Cocycle builtins: "trivial", "trivial@<moduli>", "pauli<n>",
// "standard:<n>[^<k>]", or a file path / inline JSON of kind cocycle.
Cocycle cocycle_from_spec(const std::string& s);

json algebra_to_json(const GradedAlgebra& a);
GradedAlgebra algebra_from_json(const json& j);
// Builtin constructor grammar:
//   twisted:<cocycle>  pauli:<n>  grassmann:<r>  local:<v>,<c>
//   paperB  paperA2  tensor(<spec>,<spec>)  dsum(<spec>,<spec>)
//   over(<moduli>,<spec>)
// plus file paths and inline JSON objects.
GradedAlgebra algebra_from_spec(const std::string& s);

json load_json_input(const std::string& path_or_inline);

}  // namespace regrade
