#pragma once

#include <memory>
#include <string>
#include <vector>

#include "equimack/intlinalg.hpp"

namespace equimack {

/// Finite abelian group in canonical invariant-factor form: factors are >= 2
/// and each divides the next; the empty list is the trivial group. Elements
/// are mixed-radix indices in [0, order).
struct FiniteAbelianGroup {
  std::vector<long> factors;
  long order = 1;

  int numGens() const { return int(factors.size()); }
  std::vector<long> coords(int elem) const;
  int fromCoords(const std::vector<long>& c) const;
  int add(int a, int b) const;
  int neg(int a) const;
  long elementOrder(int a) const;
  bool operator==(const FiniteAbelianGroup& o) const { return factors == o.factors; }
  std::string name() const;  // e.g. "C2xC4"
};

/// factors need not be canonical; they are re-normalized. Each must be >= 2.
FiniteAbelianGroup make_group(const std::vector<long>& factors);

struct Subgroup {
  int index = 0;           // position in the canonical lattice ordering
  long order = 1;
  std::vector<int> elements;  // sorted element indices, contains 0
  std::vector<int> gens;      // a small generating set (0 means identity-only)
};

struct SubgroupLattice {
  FiniteAbelianGroup group;
  std::vector<Subgroup> subs;             // sorted by (order, elements lex)
  std::vector<std::vector<char>> leq;     // leq[a][b]: subs[a] <= subs[b]
  std::vector<std::vector<int>> meetTbl;
  std::vector<std::vector<int>> joinTbl;
  std::vector<std::vector<int>> below;      // below[h]: indices j <= h, canonically ordered
  std::vector<std::vector<int>> posInBelow; // posInBelow[h][j] = position of j in below[h], or -1

  int size() const { return int(subs.size()); }
  int bottom() const { return 0; }
  int top() const { return size() - 1; }
  bool contains(int h, int k) const;  // k <= h
  int meet(int h, int k) const;
  int join(int h, int k) const;
  /// [k : h] for h <= k.
  long indexOf(int h, int k) const;
  int findByElements(const std::vector<int>& elems) const;  // -1 if absent
};

using LatticePtr = std::shared_ptr<const SubgroupLattice>;

LatticePtr subgroup_lattice(const FiniteAbelianGroup& g, long orderCap = 512);

/// A subgroup H <= G presented as an abelian group in its own right, with the
/// dictionary between its lattice and the part of G's lattice below H.
struct SubgroupEmbedding {
  LatticePtr parent;
  int subgroupIndex = 0;       // H in the parent lattice
  FiniteAbelianGroup sub;      // canonical form of H
  LatticePtr subLattice;
  std::vector<int> elemToParent;   // sub element -> parent element
  std::vector<int> subToParent;    // sub lattice index -> parent lattice index
  std::vector<int> parentToSub;    // parent lattice index -> sub lattice index, or -1
};

SubgroupEmbedding embed_subgroup(const LatticePtr& lat, int h);

/// G/N in canonical form, with the order-isomorphism between subgroups of G
/// containing N and the full lattice of the quotient.
struct QuotientInfo {
  LatticePtr parent;
  int normalIndex = 0;         // N
  FiniteAbelianGroup quot;
  LatticePtr quotLattice;
  std::vector<int> elemProj;     // parent element -> quotient element
  std::vector<int> elemSection;  // quotient element -> a parent element with proj = id
  std::vector<int> toQuot;       // parent lattice index (>= N) -> quot lattice index, or -1
  std::vector<int> fromQuot;     // quot lattice index -> parent lattice index
};

QuotientInfo quotient(const LatticePtr& lat, int n);

}  // namespace equimack
