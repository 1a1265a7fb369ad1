#pragma once

#include "equimack/twists.hpp"

namespace equimack {

/// Hom(A^a, M) parametrized by tuples (gamma_H in M(H)): the solution lattice
/// of res^H_K(gamma_H) = (r^a_K / r^a_H) gamma_K together with Weyl
/// invariance of each gamma_H. Coordinates are concatenated level by level;
/// level h occupies [offsets[h], offsets[h] + m.rank(h)).
struct HomSpace {
  Twist a;
  MackeyFunctor m;
  std::vector<int> offsets;
  Lattice gamma_basis;
};

HomSpace gamma_space(const Twist& a, const MackeyFunctor& m);

/// The morphism A^a -> M sending H/J to tr^H_J(gamma_J). gamma is in the
/// concatenated coordinates of gamma_space.
MackeyMorphism morphism_from_gamma(const Twist& a, const MackeyFunctor& m, const IntVec& gamma);

/// Inverse of morphism_from_gamma: evaluate each component at H/H.
IntVec gamma_of_morphism(const MackeyMorphism& phi);

/// Levelwise bilinear maps theta[H]: M(H) (x) N(H) -> P(H) (Kronecker column
/// order: tensor index j * rank_N + k) satisfying the restriction square and
/// both Frobenius squares; the conjugation square is vacuous here.
struct DressPairing {
  MackeyFunctor m, n, p;
  std::vector<IntMatrix> theta;
};

/// The canonical pairing A^a, A^b -> A^{ab}:
/// theta_H(H/J (x) H/K) = (r^a_{JK} r^b_{JK}) / (r^a_J r^b_K) * [H:JK] * H/(J cap K),
/// with the scalar assembled from twist ratios, never by division.
DressPairing dress_pairing_box(const Twist& a, const Twist& b);

bool check_pairing(const DressPairing& d);

/// All Dress pairings A^a, A^b -> P, as the solution lattice of the
/// check_pairing conditions over the unknown theta entries (concatenated per
/// level, row-major within a level).
struct PairingSpace {
  Twist a, b;
  MackeyFunctor p;
  std::vector<int> offsets;
  Lattice pairings;
};

PairingSpace dress_space(const Twist& a, const Twist& b, const MackeyFunctor& p);

/// For each probe P: postcomposing Hom(A^{ab}, P) with the canonical pairing
/// must hit Dress pairings and induce a unimodular bijection of solution
/// lattices.
ValidationReport verify_box_law(const Twist& a, const Twist& b,
                                const std::vector<MackeyFunctor>& probes);

/// The standard probes {A, A^a, A^b, A^{ab}} plus one seeded random unit
/// twist.
std::vector<MackeyFunctor> default_probe_family(const Twist& a, const Twist& b,
                                                unsigned long seed);

}  // namespace equimack
