#pragma once

// JSON readers and writers for groups, functions, projector families, irrep
// sets and distributions.

#include <nlohmann/json.hpp>

#include "topoq/algorithms.hpp"
#include "topoq/group.hpp"
#include "topoq/repr.hpp"
#include "topoq/setalg.hpp"

namespace topoq::io {

using Json = nlohmann::ordered_json;

/// {"kind":"cyclic","n":3} | {"kind":"product","of":[...]} |
/// {"kind":"dihedral","n":4} | {"kind":"symmetric","n":3} |
/// {"kind":"quaternion"} | {"kind":"table","table":[[...]]}.
/// Throws ValidationError for malformed specs and NotAGroup / TooLarge from
/// the constructors.
FiniteGroup parse_group(const Json& spec);

/// Non-negative integer array.
std::vector<std::size_t> parse_indices(const Json& j, const char* what);

/// A number or an [re, im] pair.
Complex parse_complex(const Json& j);
Json complex_json(Complex z);

/// Rectangular array of rows of complex entries.
LinearMap parse_matrix(const Json& j);
Json matrix_json(const LinearMap& m);
/// Object keyed by irrep index ("0", "1", ...) with matrix values or the
/// string "identity"; irreps that are not listed get the zero projector.
ProjectorFamily parse_projectors(const Json& j, const IrrepSet& irreps);

/// {"dims":[...], "irreps":[{"dim", "character", "matrices"}]}.
Json irreps_json(const IrrepSet& irreps);

/// {"outcomes":[{"label":..., "p":...}]}.
Json distribution_json(const Distribution& d);

}  // namespace topoq::io
