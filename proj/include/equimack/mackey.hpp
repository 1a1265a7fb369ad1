#pragma once

#include <string>
#include <vector>

#include "equimack/burnside.hpp"
#include "equimack/groups.hpp"
#include "equimack/intlinalg.hpp"

namespace equimack {

struct MackeyLevel {
  int rank = 0;
  std::vector<std::string> basis;
};

/// A Mackey functor over the lattice's group: a free abelian level per
/// subgroup, restriction and transfer matrices for every comparable pair, and
/// one Weyl action matrix per generator of the ambient group (acting through
/// its image in G/H).
struct MackeyFunctor {
  LatticePtr lat;
  std::vector<MackeyLevel> levels;
  // resMaps[h][k] valid when k <= h, trMaps[h][j] valid when j <= h.
  std::vector<std::vector<IntMatrix>> resMaps;
  std::vector<std::vector<IntMatrix>> trMaps;
  std::vector<std::vector<IntMatrix>> weyl;  // weyl[h][g], g over group generators

  const IntMatrix& res(int h, int k) const;
  const IntMatrix& tr(int h, int j) const;
  int rank(int h) const { return levels[h].rank; }
};

/// Skeleton with zero-filled maps and identity Weyl actions, ready to populate.
MackeyFunctor make_skeleton(const LatticePtr& lat, const std::vector<int>& ranks);

MackeyFunctor burnside_mackey(const LatticePtr& lat);
MackeyFunctor zero_functor(const LatticePtr& lat);
MackeyFunctor direct_sum(const MackeyFunctor& a, const MackeyFunctor& b);

/// Action of an arbitrary group element on a level, composed from the stored
/// generator matrices.
IntMatrix weyl_element_matrix(const MackeyFunctor& m, int level, int elem);

struct ValidationReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

/// Checks axioms (i)-(vii). The double-coset identity is checked in its
/// abelian form res^H_L tr^H_J = sum over cosets h of JL in H of
/// tr^L_{J^L} c_{h^{-1}} res^J_{J^L}, which collapses to
/// [H:JL] tr res when the Weyl actions are trivial.
ValidationReport check_axioms(const MackeyFunctor& m);

struct MackeyMorphism {
  MackeyFunctor source;
  MackeyFunctor target;
  std::vector<IntMatrix> comp;  // one matrix per lattice index
};

MackeyMorphism identity_morphism(const MackeyFunctor& m);
bool check_morphism(const MackeyMorphism& phi);
bool is_isomorphism(const MackeyMorphism& phi);
MackeyMorphism compose(const MackeyMorphism& second, const MackeyMorphism& first);
MackeyMorphism invert_morphism(const MackeyMorphism& phi);

}  // namespace equimack
