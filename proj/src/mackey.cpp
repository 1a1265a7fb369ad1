#include "equimack/mackey.hpp"

#include <set>
#include <sstream>

namespace equimack {

const IntMatrix& MackeyFunctor::res(int h, int k) const {
  if (!lat->contains(h, k)) throw InvalidInputError("res: target not below source level");
  return resMaps[h][k];
}

const IntMatrix& MackeyFunctor::tr(int h, int j) const {
  if (!lat->contains(h, j)) throw InvalidInputError("tr: source not below target level");
  return trMaps[h][j];
}

MackeyFunctor make_skeleton(const LatticePtr& lat, const std::vector<int>& ranks) {
  int n = lat->size();
  MackeyFunctor m;
  m.lat = lat;
  m.levels.resize(n);
  for (int h = 0; h < n; ++h) {
    m.levels[h].rank = ranks[h];
    for (int b = 0; b < ranks[h]; ++b) m.levels[h].basis.push_back("b" + std::to_string(b));
  }
  m.resMaps.assign(n, std::vector<IntMatrix>(n));
  m.trMaps.assign(n, std::vector<IntMatrix>(n));
  for (int h = 0; h < n; ++h)
    for (int k = 0; k < n; ++k)
      if (lat->contains(h, k)) {
        m.resMaps[h][k] = h == k ? IntMatrix::identity(ranks[h]) : IntMatrix::zero(ranks[k], ranks[h]);
        m.trMaps[h][k] = h == k ? IntMatrix::identity(ranks[h]) : IntMatrix::zero(ranks[h], ranks[k]);
      }
  int g = lat->group.numGens();
  m.weyl.resize(n);
  for (int h = 0; h < n; ++h) m.weyl[h].assign(g, IntMatrix::identity(ranks[h]));
  return m;
}

namespace {

std::string orbitLabel(const SubgroupLattice& lat, int h, int j) {
  return lat.group.name() + ":" + std::to_string(h) + "/" + std::to_string(j);
}

}  // namespace

MackeyFunctor burnside_mackey(const LatticePtr& lat) {
  int n = lat->size();
  std::vector<int> ranks(n);
  for (int h = 0; h < n; ++h) ranks[h] = int(lat->below[h].size());
  MackeyFunctor m = make_skeleton(lat, ranks);
  for (int h = 0; h < n; ++h) {
    m.levels[h].basis.clear();
    for (int j : lat->below[h]) m.levels[h].basis.push_back(orbitLabel(*lat, h, j));
    for (int k : lat->below[h]) {
      m.resMaps[h][k] = res_matrix(lat, h, k);
      m.trMaps[h][k] = tr_matrix(lat, h, k);
    }
  }
  return m;
}

MackeyFunctor zero_functor(const LatticePtr& lat) {
  return make_skeleton(lat, std::vector<int>(lat->size(), 0));
}

MackeyFunctor direct_sum(const MackeyFunctor& a, const MackeyFunctor& b) {
  if (a.lat != b.lat) throw InvalidInputError("direct_sum: functors over different groups");
  int n = a.lat->size();
  std::vector<int> ranks(n);
  for (int h = 0; h < n; ++h) ranks[h] = a.rank(h) + b.rank(h);
  MackeyFunctor m = make_skeleton(a.lat, ranks);
  auto block = [](const IntMatrix& x, const IntMatrix& y) {
    IntMatrix r(x.rows() + y.rows(), x.cols() + y.cols());
    for (int i = 0; i < x.rows(); ++i)
      for (int j = 0; j < x.cols(); ++j) r.at(i, j) = x.at(i, j);
    for (int i = 0; i < y.rows(); ++i)
      for (int j = 0; j < y.cols(); ++j) r.at(x.rows() + i, x.cols() + j) = y.at(i, j);
    return r;
  };
  for (int h = 0; h < n; ++h) {
    m.levels[h].basis.clear();
    for (const auto& s : a.levels[h].basis) m.levels[h].basis.push_back("l:" + s);
    for (const auto& s : b.levels[h].basis) m.levels[h].basis.push_back("r:" + s);
    for (int k : a.lat->below[h]) {
      m.resMaps[h][k] = block(a.resMaps[h][k], b.resMaps[h][k]);
      m.trMaps[h][k] = block(a.trMaps[h][k], b.trMaps[h][k]);
    }
    for (int g = 0; g < a.lat->group.numGens(); ++g)
      m.weyl[h][g] = block(a.weyl[h][g], b.weyl[h][g]);
  }
  return m;
}

IntMatrix weyl_element_matrix(const MackeyFunctor& m, int level, int elem) {
  auto co = m.lat->group.coords(elem);
  IntMatrix r = IntMatrix::identity(m.rank(level));
  for (size_t g = 0; g < co.size(); ++g)
    for (long t = 0; t < co[g]; ++t) r = m.weyl[level][g] * r;
  return r;
}

ValidationReport check_axioms(const MackeyFunctor& m) {
  ValidationReport rep;
  const auto& lat = *m.lat;
  int n = lat.size();
  auto fail = [&](const std::string& s) { rep.violations.push_back(s); };

  for (int h = 0; h < n; ++h) {
    if (!m.resMaps[h][h].isIdentity()) fail("res[" + std::to_string(h) + "->self] not identity");
    if (!m.trMaps[h][h].isIdentity()) fail("tr[self->" + std::to_string(h) + "] not identity");
  }
  // (ii)/(iv): transitivity over chains J <= K <= H
  for (int h = 0; h < n; ++h)
    for (int k : lat.below[h])
      for (int j : lat.below[k]) {
        if (m.resMaps[k][j] * m.resMaps[h][k] != m.resMaps[h][j])
          fail("restriction not transitive on chain (" + std::to_string(j) + "," +
               std::to_string(k) + "," + std::to_string(h) + ")");
        if (m.trMaps[h][k] * m.trMaps[k][j] != m.trMaps[h][j])
          fail("transfer not transitive on chain (" + std::to_string(j) + "," +
               std::to_string(k) + "," + std::to_string(h) + ")");
      }
  // (v): generator matrices give an action of G/H
  int gens = lat.group.numGens();
  for (int h = 0; h < n; ++h) {
    for (int g = 0; g < gens; ++g) {
      // order of the generator's image in G/H
      int e = lat.group.fromCoords([&] {
        std::vector<long> c(gens, 0);
        c[g] = 1;
        return c;
      }());
      long ord = 1;
      int acc = e;
      while (lat.posInBelow[h][0] >= 0 &&
             !std::binary_search(lat.subs[h].elements.begin(), lat.subs[h].elements.end(), acc)) {
        acc = lat.group.add(acc, e);
        ++ord;
      }
      IntMatrix pw = IntMatrix::identity(m.rank(h));
      for (long t = 0; t < ord; ++t) pw = m.weyl[h][g] * pw;
      if (!pw.isIdentity())
        fail("Weyl generator " + std::to_string(g) + " at level " + std::to_string(h) +
             " does not have order dividing " + std::to_string(ord));
      for (int g2 = g + 1; g2 < gens; ++g2)
        if (m.weyl[h][g] * m.weyl[h][g2] != m.weyl[h][g2] * m.weyl[h][g])
          fail("Weyl generators do not commute at level " + std::to_string(h));
    }
  }
  // (vi): Weyl actions commute with res and tr
  for (int h = 0; h < n; ++h)
    for (int k : lat.below[h])
      for (int g = 0; g < gens; ++g) {
        if (m.weyl[k][g] * m.resMaps[h][k] != m.resMaps[h][k] * m.weyl[h][g])
          fail("Weyl action does not commute with res on (" + std::to_string(k) + "," +
               std::to_string(h) + ")");
        if (m.weyl[h][g] * m.trMaps[h][k] != m.trMaps[h][k] * m.weyl[k][g])
          fail("Weyl action does not commute with tr on (" + std::to_string(k) + "," +
               std::to_string(h) + ")");
      }
  // (vii): abelian double-coset formula
  for (int h = 0; h < n; ++h)
    for (int jj : lat.below[h])
      for (int ll : lat.below[h]) {
        int jl = lat.join(jj, ll);
        int cap = lat.meet(jj, ll);
        IntMatrix lhs = m.resMaps[h][ll] * m.trMaps[h][jj];
        // canonical transversal of JL in H: least element per coset
        std::set<int> seen;
        IntMatrix rhs = IntMatrix::zero(m.rank(ll), m.rank(jj));
        for (int e : lat.subs[h].elements) {
          if (seen.count(e)) continue;
          for (int x : lat.subs[jl].elements) seen.insert(lat.group.add(e, x));
          rhs = rhs + m.trMaps[ll][cap] * weyl_element_matrix(m, cap, lat.group.neg(e)) *
                          m.resMaps[jj][cap];
        }
        if (lhs != rhs)
          fail("double-coset identity fails at H=" + std::to_string(h) + " J=" +
               std::to_string(jj) + " L=" + std::to_string(ll));
      }
  return rep;
}

MackeyMorphism identity_morphism(const MackeyFunctor& m) {
  MackeyMorphism phi{m, m, {}};
  for (int h = 0; h < m.lat->size(); ++h) phi.comp.push_back(IntMatrix::identity(m.rank(h)));
  return phi;
}

bool check_morphism(const MackeyMorphism& phi) {
  if (phi.source.lat != phi.target.lat)
    throw InvalidInputError("morphism endpoints over different groups");
  const auto& lat = *phi.source.lat;
  for (int h = 0; h < lat.size(); ++h) {
    if (phi.comp[h].rows() != phi.target.rank(h) || phi.comp[h].cols() != phi.source.rank(h))
      return false;
    for (int g = 0; g < lat.group.numGens(); ++g)
      if (phi.comp[h] * phi.source.weyl[h][g] != phi.target.weyl[h][g] * phi.comp[h]) return false;
    for (int k : lat.below[h]) {
      if (phi.comp[k] * phi.source.resMaps[h][k] != phi.target.resMaps[h][k] * phi.comp[h])
        return false;
      if (phi.comp[h] * phi.source.trMaps[h][k] != phi.target.trMaps[h][k] * phi.comp[k])
        return false;
    }
  }
  return true;
}

bool is_isomorphism(const MackeyMorphism& phi) {
  if (!check_morphism(phi)) return false;
  for (const auto& c : phi.comp) {
    if (c.rows() != c.cols()) return false;
    if (!is_unimodular(c)) return false;
  }
  return true;
}

MackeyMorphism compose(const MackeyMorphism& second, const MackeyMorphism& first) {
  if (first.target.lat != second.source.lat)
    throw InvalidInputError("composition over different groups");
  MackeyMorphism out{first.source, second.target, {}};
  for (size_t h = 0; h < first.comp.size(); ++h) out.comp.push_back(second.comp[h] * first.comp[h]);
  return out;
}

MackeyMorphism invert_morphism(const MackeyMorphism& phi) {
  MackeyMorphism out{phi.target, phi.source, {}};
  for (const auto& c : phi.comp) {
    auto inv = integer_inverse(c);
    if (!inv) throw InvalidInputError("morphism component is not unimodular");
    out.comp.push_back(*inv);
  }
  return out;
}

}  // namespace equimack
