#include "equimack/changegroups.hpp"

#include <algorithm>

namespace equimack {

namespace {

void requireSameGroup(const MackeyFunctor& m, const FiniteAbelianGroup& g, const char* what) {
  if (!(m.lat->group == g)) throw InvalidInputError(std::string(what) + ": group mismatch");
}

std::vector<long> unitCoords(int numGens, int g) {
  std::vector<long> c(numGens, 0);
  c[g] = 1;
  return c;
}

}  // namespace

MackeyFunctor restrict_down(const MackeyFunctor& m, const SubgroupEmbedding& emb) {
  requireSameGroup(m, emb.parent->group, "restrict_down");
  const auto& sl = *emb.subLattice;
  std::vector<int> ranks(sl.size());
  for (int hs = 0; hs < sl.size(); ++hs) ranks[hs] = m.rank(emb.subToParent[hs]);
  MackeyFunctor r = make_skeleton(emb.subLattice, ranks);
  for (int hs = 0; hs < sl.size(); ++hs) {
    int hp = emb.subToParent[hs];
    r.levels[hs].basis = m.levels[hp].basis;
    for (int ks : sl.below[hs]) {
      int kp = emb.subToParent[ks];
      r.resMaps[hs][ks] = m.resMaps[hp][kp];
      r.trMaps[hs][ks] = m.trMaps[hp][kp];
    }
    for (int g = 0; g < sl.group.numGens(); ++g) {
      int es = sl.group.fromCoords(unitCoords(sl.group.numGens(), g));
      r.weyl[hs][g] = weyl_element_matrix(m, hp, emb.elemToParent[es]);
    }
  }
  return r;
}

MackeyFunctor induct_up(const MackeyFunctor& m, const SubgroupEmbedding& emb) {
  requireSameGroup(m, emb.sub, "induct_up");
  const auto& L = *emb.parent;
  int hIdx = emb.subgroupIndex;
  const auto& hElems = L.subs[hIdx].elements;
  std::vector<int> p2s(L.group.order, -1);
  for (size_t i = 0; i < emb.elemToParent.size(); ++i) p2s[emb.elemToParent[i]] = int(i);

  int n = L.size();
  std::vector<int> subLevel(n), joinIdx(n);
  std::vector<std::vector<int>> transversal(n);
  for (int j = 0; j < n; ++j) {
    joinIdx[j] = L.join(hIdx, j);
    subLevel[j] = emb.parentToSub[L.meet(hIdx, j)];
    std::vector<char> seen(L.group.order, 0);
    for (int e = 0; e < L.group.order; ++e) {
      if (seen[e]) continue;
      transversal[j].push_back(e);
      for (int x : L.subs[joinIdx[j]].elements) seen[L.group.add(e, x)] = 1;
    }
  }
  // least h in H with g - h in J; valid only for g in H + J
  auto hPart = [&](int g, int j) {
    const auto& je = L.subs[j].elements;
    for (int h : hElems)
      if (std::binary_search(je.begin(), je.end(), L.group.add(g, L.group.neg(h)))) return h;
    throw InternalConsistencyError("coset displacement escapes H + J");
  };
  auto cosetRep = [&](int e, int j) {
    const auto& je = L.subs[joinIdx[j]].elements;
    for (int t : transversal[j])
      if (std::binary_search(je.begin(), je.end(), L.group.add(e, L.group.neg(t)))) return t;
    throw InternalConsistencyError("element missed every coset representative");
  };
  auto twistAt = [&](int j, int g) {  // Weyl matrix of g in H on the level under j
    return weyl_element_matrix(m, subLevel[j], p2s[g]);
  };

  std::vector<int> ranks(n);
  for (int j = 0; j < n; ++j) ranks[j] = int(transversal[j].size()) * m.rank(subLevel[j]);
  // find lat == L? skeleton wants the shared pointer
  MackeyFunctor r = make_skeleton(emb.parent, ranks);
  for (int j = 0; j < n; ++j) {
    r.levels[j].basis.clear();
    for (int t : transversal[j])
      for (const auto& s : m.levels[subLevel[j]].basis)
        r.levels[j].basis.push_back("c" + std::to_string(t) + ":" + s);
  }
  auto place = [](IntMatrix& dst, int r0, int c0, const IntMatrix& b) {
    for (int i = 0; i < b.rows(); ++i)
      for (int j = 0; j < b.cols(); ++j) dst.at(r0 + i, c0 + j) = b.at(i, j);
  };
  for (int j = 0; j < n; ++j) {
    int rj = m.rank(subLevel[j]);
    for (int k : L.below[j]) {
      if (k == j) continue;
      int rk = m.rank(subLevel[k]);
      IntMatrix res(ranks[k], ranks[j]), tr(ranks[j], ranks[k]);
      for (size_t up = 0; up < transversal[k].size(); ++up) {
        int u = transversal[k][up];
        int t = cosetRep(u, j);
        size_t tp = std::find(transversal[j].begin(), transversal[j].end(), t) -
                    transversal[j].begin();
        IntMatrix w = twistAt(j, hPart(L.group.add(u, L.group.neg(t)), j));
        place(res, int(up) * rk, int(tp) * rj,
              m.res(subLevel[j], subLevel[k]) * w);
        place(tr, int(tp) * rj, int(up) * rk,
              w * m.tr(subLevel[j], subLevel[k]));
      }
      r.resMaps[j][k] = res;
      r.trMaps[j][k] = tr;
    }
    for (int g = 0; g < L.group.numGens(); ++g) {
      int e = L.group.fromCoords(unitCoords(L.group.numGens(), g));
      IntMatrix w(ranks[j], ranks[j]);
      for (size_t tp = 0; tp < transversal[j].size(); ++tp) {
        int t = transversal[j][tp];
        int shifted = L.group.add(e, t);
        int t2 = cosetRep(shifted, j);
        size_t t2p = std::find(transversal[j].begin(), transversal[j].end(), t2) -
                     transversal[j].begin();
        place(w, int(t2p) * rj, int(tp) * rj,
              twistAt(j, hPart(L.group.add(shifted, L.group.neg(t2)), j)));
      }
      r.weyl[j][g] = w;
    }
  }
  return r;
}

MackeyFunctor qres(const MackeyFunctor& m, const QuotientInfo& q) {
  requireSameGroup(m, q.parent->group, "qres");
  const auto& ql = *q.quotLattice;
  std::vector<int> ranks(ql.size());
  for (int hq = 0; hq < ql.size(); ++hq) ranks[hq] = m.rank(q.fromQuot[hq]);
  MackeyFunctor r = make_skeleton(q.quotLattice, ranks);
  for (int hq = 0; hq < ql.size(); ++hq) {
    int h = q.fromQuot[hq];
    r.levels[hq].basis = m.levels[h].basis;
    for (int kq : ql.below[hq]) {
      r.resMaps[hq][kq] = m.resMaps[h][q.fromQuot[kq]];
      r.trMaps[hq][kq] = m.trMaps[h][q.fromQuot[kq]];
    }
    for (int g = 0; g < ql.group.numGens(); ++g) {
      int e = q.elemSection[ql.group.fromCoords(unitCoords(ql.group.numGens(), g))];
      r.weyl[hq][g] = weyl_element_matrix(m, h, e);
    }
  }
  return r;
}

MackeyFunctor inflate(const MackeyFunctor& m, const QuotientInfo& q) {
  if (!(m.lat->group == q.quot)) throw InvalidInputError("inflate: functor not over the quotient");
  const auto& L = *q.parent;
  std::vector<int> ranks(L.size(), 0);
  for (int h = 0; h < L.size(); ++h)
    if (q.toQuot[h] >= 0) ranks[h] = m.rank(q.toQuot[h]);
  MackeyFunctor r = make_skeleton(q.parent, ranks);
  for (int h = 0; h < L.size(); ++h) {
    if (q.toQuot[h] < 0) continue;
    int hq = q.toQuot[h];
    r.levels[h].basis = m.levels[hq].basis;
    for (int k : L.below[h]) {
      if (q.toQuot[k] < 0) continue;  // zero maps stay zero
      r.resMaps[h][k] = m.resMaps[hq][q.toQuot[k]];
      r.trMaps[h][k] = m.trMaps[hq][q.toQuot[k]];
    }
    for (int g = 0; g < L.group.numGens(); ++g) {
      int eq = q.elemProj[L.group.fromCoords(unitCoords(L.group.numGens(), g))];
      r.weyl[h][g] = weyl_element_matrix(m, hq, eq);
    }
  }
  return r;
}

GeometricFixedPoints geometric_fixed_points(const MackeyFunctor& m, const QuotientInfo& q) {
  requireSameGroup(m, q.parent->group, "geometric_fixed_points");
  const auto& L = *q.parent;
  int n = L.size();
  std::vector<IntMatrix> killed(n), proj(n), section(n);
  for (int h = 0; h < n; ++h) {
    if (q.toQuot[h] < 0) continue;
    IntMatrix t(m.rank(h), 0);
    for (int j : L.below[h])
      if (q.toQuot[j] < 0) t = t.hcat(m.trMaps[h][j]);
    killed[h] = t;
    if (t.cols() == 0) {
      proj[h] = IntMatrix::identity(m.rank(h));
      section[h] = IntMatrix::identity(m.rank(h));
      continue;
    }
    SmithDecomposition s = smith_normal_form(t);
    auto diag = s.diagonal();
    int rank = 0;
    for (const Int& d : diag)
      if (d != 0) {
        if (d != 1)
          throw UnrepresentableError("transfer quotient has torsion; levels cannot stay free");
        ++rank;
      }
    auto uinv = integer_inverse(s.u);
    if (!uinv) throw InternalConsistencyError("Smith row transform is not unimodular");
    int free = m.rank(h) - rank;
    IntMatrix p(free, m.rank(h)), sec(m.rank(h), free);
    for (int i = 0; i < free; ++i)
      for (int c = 0; c < m.rank(h); ++c) {
        p.at(i, c) = s.u.at(rank + i, c);
        sec.at(c, i) = uinv->at(c, rank + i);
      }
    proj[h] = p;
    section[h] = sec;
  }

  const auto& ql = *q.quotLattice;
  std::vector<int> ranks(ql.size());
  for (int hq = 0; hq < ql.size(); ++hq) ranks[hq] = proj[q.fromQuot[hq]].rows();
  MackeyFunctor phi = make_skeleton(q.quotLattice, ranks);
  auto descend = [&](const IntMatrix& map, int hSrc, int hDst, const char* what) {
    IntMatrix top = proj[hDst] * map;
    if (killed[hSrc].cols() > 0 && !(top * killed[hSrc]).isZero())
      throw InternalConsistencyError(std::string(what) +
                                     " does not descend to the transfer quotient");
    return top * section[hSrc];
  };
  for (int hq = 0; hq < ql.size(); ++hq) {
    int h = q.fromQuot[hq];
    for (int i = 0; i < ranks[hq]; ++i)
      phi.levels[hq].basis[i] = "q" + std::to_string(hq) + ":b" + std::to_string(i);
    for (int kq : ql.below[hq]) {
      int k = q.fromQuot[kq];
      phi.resMaps[hq][kq] = descend(m.res(h, k), h, k, "restriction");
      phi.trMaps[hq][kq] = descend(m.tr(h, k), k, h, "transfer");
    }
    for (int g = 0; g < ql.group.numGens(); ++g) {
      int e = q.elemSection[ql.group.fromCoords(unitCoords(ql.group.numGens(), g))];
      phi.weyl[hq][g] = descend(weyl_element_matrix(m, h, e), h, h, "Weyl action");
    }
  }
  return GeometricFixedPoints{q, phi, proj, section};
}

Twist phi_twist(const Twist& a, const QuotientInfo& q) {
  if (!(a.lat->group == q.parent->group)) throw InvalidInputError("phi_twist: group mismatch");
  IntVec v(q.quotLattice->size());
  for (int hq = 0; hq < q.quotLattice->size(); ++hq) v[hq] = a.value[q.fromQuot[hq]];
  return make_twist(q.quotLattice, v);
}

Twist qind_twisted(const Twist& alpha, const QuotientInfo& q) {
  if (!(alpha.lat->group == q.quot)) throw InvalidInputError("qind_twisted: twist not over the quotient");
  IntVec v(q.parent->size(), 1);
  for (int h = 0; h < q.parent->size(); ++h)
    if (q.toQuot[h] >= 0) v[h] = alpha.value[q.toQuot[h]];
  return make_twist(q.parent, v);
}

MackeyMorphism phi_twist_witness(const Twist& a, const QuotientInfo& q) {
  GeometricFixedPoints gfp = geometric_fixed_points(twisted_burnside(a), q);
  const auto& ql = *q.quotLattice;
  MackeyMorphism phi{twisted_burnside(phi_twist(a, q)), gfp.phi, {}};
  for (int hq = 0; hq < ql.size(); ++hq) {
    int h = q.fromQuot[hq];
    std::vector<IntVec> cols;
    for (int jq : ql.below[hq]) {
      int j = q.fromQuot[jq];
      IntVec e(a.lat->below[h].size());
      e[a.lat->posInBelow[h][j]] = 1;
      cols.push_back(gfp.proj[h].apply(e));
    }
    phi.comp.push_back(IntMatrix::fromColumns(gfp.phi.rank(hq), cols));
  }
  if (!is_isomorphism(phi))
    throw InternalConsistencyError("geometric fixed points of a twisted functor failed to match "
                                   "the truncated twist");
  return phi;
}

}  // namespace equimack
