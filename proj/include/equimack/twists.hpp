#pragma once

#include <optional>

#include "equimack/mackey.hpp"

namespace equimack {

/// Nonzero integer label per subgroup, with the top component fixed to 1.
struct Twist {
  LatticePtr lat;
  IntVec value;  // indexed by lattice position
};

Twist make_twist(const LatticePtr& lat, const IntVec& values);
Twist unit_twist(const LatticePtr& lat);

/// r_H = product of a_K over K >= H.
Int restriction_factor(const Twist& a, int h);

/// r_{J cap K} / r_J, computed as the product of a over the up-set difference
/// {K' >= J cap K, K' not >= J}; no division is performed.
Int twist_ratio(const Twist& a, int j, int k);

/// gcd(a_H, [G:H]) = 1 for every H.
bool is_unit_twist(const Twist& a);

Twist multiply_twists(const Twist& a, const Twist& b);

/// Canonical representative in prod_H (Z/[G:H])^x / {+-1}: reduce into
/// [1, [G:H]-1] then pick min(x, [G:H]-x). Idempotent.
Twist normalize(const Twist& a);
bool equivalent(const Twist& a, const Twist& b);

/// The Burnside Mackey functor with restrictions scaled by twist ratios;
/// equals burnside_mackey exactly when a = 1.
MackeyFunctor twisted_burnside(const Twist& a);

/// Twisted restriction matrix from level h to level k.
IntMatrix tres_matrix(const Twist& a, int h, int k);

/// Isomorphism A^a -> A^b where b agrees with a except b_F = a_F + [G:F].
MackeyMorphism elementary_shift_iso(const Twist& a, int f);
/// Isomorphism A^a -> A^b where b agrees with a except b_F = -a_F; the
/// components are diagonal, with sign -1 exactly on orbits H/J with J <= F.
MackeyMorphism negate_iso(const Twist& a, int f);
/// Composite shift/negation witness when equivalent(a, b); nullopt otherwise.
std::optional<MackeyMorphism> witness_iso(const Twist& a, const Twist& b);

}  // namespace equimack
