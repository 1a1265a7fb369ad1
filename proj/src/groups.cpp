#include "equimack/groups.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace equimack {

std::vector<long> FiniteAbelianGroup::coords(int elem) const {
  std::vector<long> c(factors.size());
  long rem = elem;
  for (int i = int(factors.size()) - 1; i >= 0; --i) {
    c[i] = rem % factors[i];
    rem /= factors[i];
  }
  return c;
}

int FiniteAbelianGroup::fromCoords(const std::vector<long>& c) const {
  long idx = 0;
  for (size_t i = 0; i < factors.size(); ++i) {
    long x = ((c[i] % factors[i]) + factors[i]) % factors[i];
    idx = idx * factors[i] + x;
  }
  return int(idx);
}

int FiniteAbelianGroup::add(int a, int b) const {
  auto ca = coords(a), cb = coords(b);
  for (size_t i = 0; i < factors.size(); ++i) ca[i] += cb[i];
  return fromCoords(ca);
}

int FiniteAbelianGroup::neg(int a) const {
  auto c = coords(a);
  for (auto& x : c) x = -x;
  return fromCoords(c);
}

long FiniteAbelianGroup::elementOrder(int a) const {
  auto c = coords(a);
  long ord = 1;
  for (size_t i = 0; i < factors.size(); ++i) {
    long d = factors[i] / std::gcd(factors[i], c[i]);
    ord = std::lcm(ord, d);
  }
  return ord;
}

std::string FiniteAbelianGroup::name() const {
  if (factors.empty()) return "e";
  std::ostringstream os;
  for (size_t i = 0; i < factors.size(); ++i) os << (i ? "x" : "") << "C" << factors[i];
  return os.str();
}

FiniteAbelianGroup make_group(const std::vector<long>& factors) {
  std::map<long, std::vector<long>> primePowers;  // prime -> exponents, descending
  for (long f : factors) {
    if (f < 2) throw InvalidInputError("invariant factors must be >= 2");
    long rem = f;
    for (long p = 2; p * p <= rem; ++p) {
      if (rem % p) continue;
      long e = 0;
      while (rem % p == 0) { rem /= p; ++e; }
      primePowers[p].push_back(e);
    }
    if (rem > 1) primePowers[rem].push_back(1);
  }
  size_t chain = 0;
  for (auto& [p, es] : primePowers) {
    std::sort(es.rbegin(), es.rend());
    chain = std::max(chain, es.size());
  }
  // slot 0 is the largest invariant factor
  std::vector<long> inv(chain, 1);
  for (auto& [p, es] : primePowers)
    for (size_t i = 0; i < es.size(); ++i)
      for (long t = 0; t < es[i]; ++t) inv[i] *= p;
  std::reverse(inv.begin(), inv.end());
  FiniteAbelianGroup g;
  g.factors = inv;
  g.order = 1;
  for (long f : inv) g.order *= f;
  return g;
}

namespace {

std::vector<int> closure(const FiniteAbelianGroup& g, std::vector<int> elems) {
  std::set<int> have(elems.begin(), elems.end());
  have.insert(0);
  std::vector<int> work(have.begin(), have.end());
  while (!work.empty()) {
    int x = work.back();
    work.pop_back();
    for (int y : std::vector<int>(have.begin(), have.end())) {
      int z = g.add(x, y);
      if (have.insert(z).second) work.push_back(z);
    }
    int nx = g.neg(x);
    if (have.insert(nx).second) work.push_back(nx);
  }
  return {have.begin(), have.end()};
}

std::vector<int> smallGens(const FiniteAbelianGroup& g, const std::vector<int>& elems) {
  if (elems.size() == 1) return {0};
  std::vector<int> gens;
  std::set<int> cur{0};
  // prefer high-order elements so cyclic subgroups get a single generator
  std::vector<int> byOrder(elems);
  std::stable_sort(byOrder.begin(), byOrder.end(),
                   [&](int a, int b) { return g.elementOrder(a) > g.elementOrder(b); });
  for (int e : byOrder) {
    if (cur.count(e)) continue;
    gens.push_back(e);
    auto c = closure(g, [&] {
      std::vector<int> v(cur.begin(), cur.end());
      v.push_back(e);
      return v;
    }());
    cur = std::set<int>(c.begin(), c.end());
    if (cur.size() == elems.size()) break;
  }
  return gens;
}

}  // namespace

bool SubgroupLattice::contains(int h, int k) const {
  return leq.at(k).at(h) != 0;
}
int SubgroupLattice::meet(int h, int k) const { return meetTbl.at(h).at(k); }
int SubgroupLattice::join(int h, int k) const { return joinTbl.at(h).at(k); }

long SubgroupLattice::indexOf(int h, int k) const {
  if (!contains(k, h)) throw InvalidInputError("index: first subgroup not contained in second");
  return subs[k].order / subs[h].order;
}

int SubgroupLattice::findByElements(const std::vector<int>& elems) const {
  for (const auto& s : subs)
    if (s.elements == elems) return s.index;
  return -1;
}

LatticePtr subgroup_lattice(const FiniteAbelianGroup& g, long orderCap) {
  if (g.order > orderCap) throw ResourceLimitError("group order exceeds the configured cap");
  std::set<std::vector<int>> found;
  for (int e = 0; e < g.order; ++e) found.insert(closure(g, {e}));
  // close under join
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<std::vector<int>> snapshot(found.begin(), found.end());
    for (size_t i = 0; i < snapshot.size() && !grew; ++i)
      for (size_t j = i + 1; j < snapshot.size(); ++j) {
        std::vector<int> both(snapshot[i]);
        both.insert(both.end(), snapshot[j].begin(), snapshot[j].end());
        auto c = closure(g, both);
        if (found.insert(c).second) { grew = true; break; }
      }
  }
  auto lat = std::make_shared<SubgroupLattice>();
  lat->group = g;
  std::vector<std::vector<int>> all(found.begin(), found.end());
  std::sort(all.begin(), all.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  int n = int(all.size());
  lat->subs.resize(n);
  for (int i = 0; i < n; ++i) {
    lat->subs[i].index = i;
    lat->subs[i].order = long(all[i].size());
    lat->subs[i].elements = all[i];
    lat->subs[i].gens = smallGens(g, all[i]);
  }
  lat->leq.assign(n, std::vector<char>(n, 0));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      lat->leq[a][b] = std::includes(all[b].begin(), all[b].end(), all[a].begin(), all[a].end());
  lat->meetTbl.assign(n, std::vector<int>(n, -1));
  lat->joinTbl.assign(n, std::vector<int>(n, -1));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      std::vector<int> inter;
      std::set_intersection(all[a].begin(), all[a].end(), all[b].begin(), all[b].end(),
                            std::back_inserter(inter));
      int m = lat->findByElements(inter);
      if (m < 0) throw InternalConsistencyError("intersection of subgroups missing from lattice");
      lat->meetTbl[a][b] = m;
      std::vector<int> both(all[a]);
      both.insert(both.end(), all[b].begin(), all[b].end());
      int j = lat->findByElements(closure(g, both));
      if (j < 0) throw InternalConsistencyError("join of subgroups missing from lattice");
      lat->joinTbl[a][b] = j;
    }
  lat->below.assign(n, {});
  lat->posInBelow.assign(n, std::vector<int>(n, -1));
  for (int h = 0; h < n; ++h)
    for (int j = 0; j < n; ++j)
      if (lat->leq[j][h]) {
        lat->posInBelow[h][j] = int(lat->below[h].size());
        lat->below[h].push_back(j);
      }
  return lat;
}

namespace {

long posMod(const Int& v, long m) {
  Int r = v % m;
  if (r < 0) r += m;
  return long(r.get_si());
}

// Columns generating the preimage in Z^k of the subgroup's elements,
// together with the relation lattice diag(d).
IntMatrix preimageColumns(const FiniteAbelianGroup& g, const std::vector<int>& elems) {
  int k = g.numGens();
  IntMatrix m(k, k + int(elems.size()));
  for (int i = 0; i < k; ++i) m.at(i, i) = g.factors[i];
  for (size_t e = 0; e < elems.size(); ++e) {
    auto c = g.coords(elems[e]);
    for (int i = 0; i < k; ++i) m.at(i, k + int(e)) = c[i];
  }
  return m;
}

}  // namespace

SubgroupEmbedding embed_subgroup(const LatticePtr& lat, int h) {
  if (h < 0 || h >= lat->size()) throw InvalidInputError("embed_subgroup: bad lattice index");
  const FiniteAbelianGroup& g = lat->group;
  const Subgroup& H = lat->subs[h];
  int k = g.numGens();

  SubgroupEmbedding emb;
  emb.parent = lat;
  emb.subgroupIndex = h;

  // Basis of the preimage lattice L_H in Z^k, then H = L_H / diag(d)Z^k.
  IntMatrix pre = preimageColumns(g, H.elements);
  SmithDecomposition s1 = smith_normal_form(pre);
  auto uinv = integer_inverse(s1.u);
  if (!uinv) throw InternalConsistencyError("SNF transform not unimodular");
  IntMatrix basis(k, k);  // columns: Uinv * e_i * d_i
  for (int j = 0; j < k; ++j)
    for (int i = 0; i < k; ++i) basis.at(i, j) = uinv->at(i, j) * s1.d.at(j, j);
  // relations: C with basis * C = diag(d); C = D^{-1} U diag(d)
  IntMatrix c(k, k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      Int num = s1.u.at(i, j) * g.factors[j];
      if (num % s1.d.at(i, i) != 0) throw InternalConsistencyError("relation matrix not integral");
      c.at(i, j) = num / s1.d.at(i, i);
    }
  SmithDecomposition s2 = smith_normal_form(c);
  auto u2inv = integer_inverse(s2.u);
  if (!u2inv) throw InternalConsistencyError("SNF transform not unimodular");

  std::vector<long> facs;
  std::vector<int> gens;  // generator elements in the parent group
  for (int j = 0; j < k; ++j) {
    Int f = s2.d.at(j, j);
    if (f <= 1) continue;
    facs.push_back(long(f.get_si()));
    // generator: basis * (U2^{-1} e_j) reduced mod d
    std::vector<long> coord(k, 0);
    for (int i = 0; i < k; ++i) {
      Int v(0);
      for (int t = 0; t < k; ++t) v += basis.at(i, t) * u2inv->at(t, j);
      coord[i] = posMod(v, g.factors[i]);
    }
    gens.push_back(g.fromCoords(coord));
  }
  emb.sub = make_group(facs);
  if (emb.sub.factors != facs)
    throw InternalConsistencyError("SNF invariant factors not in canonical chain");
  if (emb.sub.order != H.order) throw InternalConsistencyError("subgroup type has wrong order");

  emb.elemToParent.resize(emb.sub.order);
  for (int e = 0; e < emb.sub.order; ++e) {
    auto co = emb.sub.coords(e);
    int pe = 0;
    for (size_t j = 0; j < gens.size(); ++j)
      for (long t = 0; t < co[j]; ++t) pe = g.add(pe, gens[j]);
    emb.elemToParent[e] = pe;
  }
  {
    std::vector<int> image(emb.elemToParent);
    std::sort(image.begin(), image.end());
    if (std::unique(image.begin(), image.end()) != image.end() || image != H.elements)
      throw InternalConsistencyError("subgroup embedding is not a bijection onto H");
  }

  emb.subLattice = subgroup_lattice(emb.sub, std::max<long>(512, emb.sub.order));
  emb.subToParent.assign(emb.subLattice->size(), -1);
  emb.parentToSub.assign(lat->size(), -1);
  for (int si = 0; si < emb.subLattice->size(); ++si) {
    std::vector<int> img;
    for (int e : emb.subLattice->subs[si].elements) img.push_back(emb.elemToParent[e]);
    std::sort(img.begin(), img.end());
    int pi = lat->findByElements(img);
    if (pi < 0) throw InternalConsistencyError("embedded subgroup missing from parent lattice");
    emb.subToParent[si] = pi;
    emb.parentToSub[pi] = si;
  }
  return emb;
}

QuotientInfo quotient(const LatticePtr& lat, int n) {
  if (n < 0 || n >= lat->size()) throw InvalidInputError("quotient: bad lattice index");
  const FiniteAbelianGroup& g = lat->group;
  const Subgroup& N = lat->subs[n];
  int k = g.numGens();

  QuotientInfo q;
  q.parent = lat;
  q.normalIndex = n;

  IntMatrix pre = preimageColumns(g, N.elements);
  SmithDecomposition s = smith_normal_form(pre);
  auto uinv = integer_inverse(s.u);
  if (!uinv) throw InternalConsistencyError("SNF transform not unimodular");

  std::vector<long> facs;
  std::vector<int> kept;
  for (int j = 0; j < k; ++j) {
    Int f = s.d.at(j, j);
    if (f <= 1) continue;
    facs.push_back(long(f.get_si()));
    kept.push_back(j);
  }
  q.quot = make_group(facs);
  if (q.quot.factors != facs)
    throw InternalConsistencyError("quotient invariant factors not in canonical chain");
  if (q.quot.order * N.order != g.order) throw InternalConsistencyError("quotient has wrong order");

  q.elemProj.resize(g.order);
  for (int e = 0; e < g.order; ++e) {
    auto co = g.coords(e);
    std::vector<long> qc(facs.size());
    for (size_t t = 0; t < kept.size(); ++t) {
      Int v(0);
      for (int i = 0; i < k; ++i) v += s.u.at(kept[t], i) * co[i];
      qc[t] = posMod(v, facs[t]);
    }
    q.elemProj[e] = q.quot.fromCoords(qc);
  }
  q.elemSection.resize(q.quot.order);
  for (int e = 0; e < q.quot.order; ++e) {
    auto qc = q.quot.coords(e);
    std::vector<long> lift(k, 0);
    for (size_t t = 0; t < kept.size(); ++t) lift[kept[t]] = qc[t];
    std::vector<long> co(k, 0);
    for (int i = 0; i < k; ++i) {
      Int v(0);
      for (int j = 0; j < k; ++j) v += uinv->at(i, j) * lift[j];
      co[i] = posMod(v, g.factors[i]);
    }
    q.elemSection[e] = g.fromCoords(co);
    if (q.elemProj[q.elemSection[e]] != e)
      throw InternalConsistencyError("quotient section is not a section");
  }

  q.quotLattice = subgroup_lattice(q.quot, std::max<long>(512, q.quot.order));
  q.toQuot.assign(lat->size(), -1);
  q.fromQuot.assign(q.quotLattice->size(), -1);
  for (int h = 0; h < lat->size(); ++h) {
    if (!lat->contains(h, n)) continue;
    std::set<int> img;
    for (int e : lat->subs[h].elements) img.insert(q.elemProj[e]);
    int qi = q.quotLattice->findByElements({img.begin(), img.end()});
    if (qi < 0) throw InternalConsistencyError("projected subgroup missing from quotient lattice");
    q.toQuot[h] = qi;
    q.fromQuot[qi] = h;
  }
  for (int v : q.fromQuot)
    if (v < 0) throw InternalConsistencyError("quotient correspondence is not onto");
  return q;
}

}  // namespace equimack
