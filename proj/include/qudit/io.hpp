#pragma once

// JSON encodings. Complex matrices are row-major arrays of [re, im] pairs;
// tensor entries are {i, j, k, value} objects with 1-based indices.

#include <json.hpp>

#include "qudit/invariants.hpp"
#include "qudit/orbit_space.hpp"
#include "qudit/state_space.hpp"
#include "qudit/su_algebra.hpp"

namespace qudit::io {

using Json = nlohmann::json;

Json matrix_to_json(const ComplexMatrix& m);
/// Throws DomainError on malformed shape.
ComplexMatrix matrix_from_json(const Json& j);

Json to_json(const BasisSet& basis);
Json to_json(const StructureTensors& tensors);
Json to_json(const StateClassification& c);
Json to_json(const CasimirValues& c);
Json to_json(const OrbitCoordinates& c);
Json to_json(const StratumReport& s);
Json to_json(const ArcReport& a);
Json to_json(const PolyhedronReport& p);

/// {"N", "t", "S", "disc", "bezoutian_rank"} plus "casimirs" when given.
Json invariants_record(const TraceInvariants& t, const CasimirValues* casimirs = nullptr);

/// Accepts {"N":..., "xi":[...]} or {"N":..., "rho":[[[re,im],...],...]}.
HermitianMatrix state_from_json(const Json& record);

}  // namespace qudit::io
