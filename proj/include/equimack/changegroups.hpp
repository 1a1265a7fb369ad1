#pragma once

#include "equimack/twists.hpp"

namespace equimack {

/// Levels at K <= H are copied from the ambient functor; Weyl actions are
/// re-expressed on the subgroup's own generators.
MackeyFunctor restrict_down(const MackeyFunctor& m, const SubgroupEmbedding& emb);

/// Induction along H <= G. The level at J is [G:HJ] copies of M(H cap J),
/// indexed by the least-element transversal of HJ-cosets; cross-copy structure
/// maps pick up the Weyl action of the H-part of the coset displacement.
MackeyFunctor induct_up(const MackeyFunctor& m, const SubgroupEmbedding& emb);

/// Restriction along G -> G/N: keeps the levels at H >= N.
MackeyFunctor qres(const MackeyFunctor& m, const QuotientInfo& q);

/// Inflation from G/N to G: levels at H >= N are copied, all others vanish.
MackeyFunctor inflate(const MackeyFunctor& m, const QuotientInfo& q);

/// Phi^N: level at H/N is M(H) modulo the images of transfers from J with
/// J not containing N, with a free basis chosen by Smith reduction. proj and
/// section (indexed by parent level, identity rows/cols for levels below N)
/// realize the quotient and a splitting of it.
struct GeometricFixedPoints {
  QuotientInfo q;
  MackeyFunctor phi;
  std::vector<IntMatrix> proj;
  std::vector<IntMatrix> section;
};

GeometricFixedPoints geometric_fixed_points(const MackeyFunctor& m, const QuotientInfo& q);

/// The twist alpha over G/N with alpha_{H/N} = a_H.
Twist phi_twist(const Twist& a, const QuotientInfo& q);

/// The twist over G extending alpha by 1 on subgroups not containing N.
Twist qind_twisted(const Twist& alpha, const QuotientInfo& q);

/// Explicit isomorphism A^{phi_twist(a)} -> Phi^N(A^a) over G/N.
MackeyMorphism phi_twist_witness(const Twist& a, const QuotientInfo& q);

}  // namespace equimack
