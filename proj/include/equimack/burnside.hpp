#pragma once

#include "equimack/groups.hpp"
#include "equimack/intlinalg.hpp"

namespace equimack {

/// Element of A(H) for a subgroup H of the ambient group; the basis element at
/// position p is the orbit H/J with J = lat->below[H][p].
struct BurnsideElement {
  LatticePtr lat;
  int level = 0;
  IntVec coeff;
};

BurnsideElement burnside_basis(const LatticePtr& lat, int level, int j);
BurnsideElement burnside_unit(const LatticePtr& lat, int level);

/// H/J * H/K = [H : JK] * H/(J cap K), extended bilinearly.
BurnsideElement multiply(const BurnsideElement& x, const BurnsideElement& y);

/// res^H_K(H/J) = [H : JK] * K/(J cap K).
BurnsideElement restrict_to(const BurnsideElement& x, int k);

/// tr^H_J(J/L) = H/L.
BurnsideElement transfer_to(const BurnsideElement& x, int h);

/// Fixed-point counts: component at K of marks(H/J) is [H : J] when K <= J, else 0.
IntVec marks(const BurnsideElement& x);

// Matrix forms on the canonical bases (target rows, source columns).
IntMatrix res_matrix(const LatticePtr& lat, int h, int k);
IntMatrix tr_matrix(const LatticePtr& lat, int h, int j);
IntMatrix marks_matrix(const LatticePtr& lat, int h);
/// Column (j, k) holds the coefficients of H/J * H/K; tensor index j * n + k.
IntMatrix multiplication_matrix(const LatticePtr& lat, int h);

}  // namespace equimack
