#pragma once

#include "equimack/boxhom.hpp"
#include "equimack/changegroups.hpp"

namespace equimack {

struct PicardClass {
  Twist representative;  // always normalized
};

/// Pic of the Mackey functor category: the twisted classes under the
/// componentwise sign quotient, prod_H (Z/[G:H])^x / {+-1}.
struct PicardGroup {
  LatticePtr lat;
  std::vector<PicardClass> classes;
  std::vector<std::vector<int>> table;  // table[i][j]: index of the product class
  int identity = 0;
};

PicardGroup picard_group(const LatticePtr& lat, long classCap = 1000000);
Int picard_order(const LatticePtr& lat);

/// Bounded search for an isomorphism A^a -> A^b: scans integer combinations of
/// the Hom-lattice basis with coefficients in [-bound, bound], pruning on the
/// poset-triangular diagonal of the components. Returns a verified
/// isomorphism, or nullopt when none exists within the bound (sound evidence
/// of non-isomorphism at this bound, not a proof).
std::optional<MackeyMorphism> refute_iso_bounded(const Twist& a, const Twist& b, long bound);

/// Pairwise check over Picard representatives: equivalent pairs must produce a
/// verified witness, inequivalent pairs must survive the bounded refutation.
ValidationReport verify_classification(const LatticePtr& lat, long bound);

/// Twist-level check of the split exact sequence for a quotient by N:
/// qind embeds Pic(G/N) injectively, phi_twist retracts it, and the class
/// count factors as |Pic(G/N)| times the number of classes trivial above N.
ValidationReport verify_splitting(const LatticePtr& lat, int n);

}  // namespace equimack
