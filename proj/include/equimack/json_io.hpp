#pragma once

#include <json.hpp>

#include "equimack/mackey.hpp"
#include "equimack/twists.hpp"

namespace equimack {

using Json = nlohmann::ordered_json;

// Integers are serialized as decimal strings so arbitrary precision survives
// the round trip; matrices are row-major, target rows by source columns.
Json matrix_to_json(const IntMatrix& m);
IntMatrix matrix_from_json(const Json& j);

Json group_to_json(const FiniteAbelianGroup& g);
FiniteAbelianGroup group_from_json(const Json& j);

Json lattice_to_json(const SubgroupLattice& lat);
std::string lattice_to_dot(const SubgroupLattice& lat);

Json twist_to_json(const Twist& a);
Twist twist_from_json(const LatticePtr& lat, const Json& j);

Json functor_to_json(const MackeyFunctor& m);
MackeyFunctor functor_from_json(const LatticePtr& lat, const Json& j);

Json morphism_to_json(const MackeyMorphism& phi);

Json report_to_json(const ValidationReport& rep);

/// Text Lewis diagram: levels by descending order, with the restriction and
/// transfer matrices along each covering edge of the subgroup lattice.
std::string render_lewis(const MackeyFunctor& m);

}  // namespace equimack
