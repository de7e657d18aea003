#pragma once

#include "knotshake/multisig.hpp"
#include "knotshake/shake.hpp"

#include <nlohmann/json.hpp>

namespace knotshake {

using nlohmann::json;

// Fits in int64: a JSON number, otherwise a decimal string.
json to_json(const BigInt& x);
BigInt big_from_json(const json& j);

json to_json(const Rational& x); // "p/q"
Rational rational_from_json(const json& j);

json to_json(const LaurentPoly& p); // {"lo": .., "coeffs": [..]}
LaurentPoly laurent_from_json(const json& j);

json to_json(const IntMatrix& m);
IntMatrix int_matrix_from_json(const json& j);

json to_json(const BranchedOrder& b);
json to_json(const ShakeReport& r);
json to_json(const GenusWitness& w);
json to_json(const Inertia& i);

// {"n": N, "matrix": [[poly, ..], ..]} or {"n": N, "seifert": [[int, ..], ..]}.
GroupRingForm group_ring_form_from_json(const json& j);

} // namespace knotshake
