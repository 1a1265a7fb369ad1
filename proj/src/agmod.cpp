#include "equimack/agmod.hpp"

namespace equimack {

AGModule twisted_module(const Twist& a) {
  const auto& lat = *a.lat;
  int n = lat.size();
  AGModule m{a.lat, n, {}, {}};
  for (int j = 0; j < n; ++j) m.basis.push_back(lat.group.name() + ":G/" + std::to_string(j));
  for (int h = 0; h < n; ++h) {
    IntMatrix act(n, n);
    for (int j = 0; j < n; ++j)
      act.at(lat.meet(j, h), j) = twist_ratio(a, j, h) * lat.indexOf(lat.join(j, h), lat.top());
    m.action.push_back(act);
  }
  return m;
}

ValidationReport check_module_axioms(const AGModule& m) {
  ValidationReport rep;
  const auto& lat = *m.lat;
  if (!m.action[lat.top()].isIdentity()) rep.violations.push_back("unit does not act as identity");
  for (int h = 0; h < lat.size(); ++h)
    for (int k = 0; k < lat.size(); ++k) {
      Int idx = lat.indexOf(lat.join(h, k), lat.top());
      if (m.action[h] * m.action[k] != m.action[lat.meet(h, k)] * idx)
        rep.violations.push_back("actions of G/" + std::to_string(h) + " and G/" +
                                 std::to_string(k) + " are incompatible with the ring product");
    }
  return rep;
}

AGModule eval_gg(const MackeyFunctor& m) {
  int top = m.lat->top();
  AGModule mod{m.lat, m.rank(top), m.levels[top].basis, {}};
  for (int h = 0; h < m.lat->size(); ++h) mod.action.push_back(m.tr(top, h) * m.res(top, h));
  return mod;
}

AGModule module_direct_sum(const AGModule& a, const AGModule& b) {
  if (a.lat->group != b.lat->group) throw InvalidInputError("module sum: group mismatch");
  AGModule m{a.lat, a.rank + b.rank, {}, {}};
  for (const auto& s : a.basis) m.basis.push_back("l:" + s);
  for (const auto& s : b.basis) m.basis.push_back("r:" + s);
  for (int h = 0; h < a.lat->size(); ++h) {
    IntMatrix act(m.rank, m.rank);
    for (int i = 0; i < a.rank; ++i)
      for (int j = 0; j < a.rank; ++j) act.at(i, j) = a.action[h].at(i, j);
    for (int i = 0; i < b.rank; ++i)
      for (int j = 0; j < b.rank; ++j) act.at(a.rank + i, a.rank + j) = b.action[h].at(i, j);
    m.action.push_back(act);
  }
  return m;
}

TensorUpResult tensor_up(const AGModule& mod) {
  const auto& lat = *mod.lat;
  int n = lat.size();
  std::vector<IntMatrix> proj(n), section(n), relMat(n);
  for (int h = 0; h < n; ++h) {
    int rh = int(lat.below[h].size());  // rank of A(H)
    int amb = rh * mod.rank;
    // balancing relations: for each ring basis G/K, A(H) basis H/J, module
    // basis v: (H/J * res G/K) (x) v - H/J (x) (G/K . v)
    std::vector<IntVec> rels;
    for (int k = 0; k < n; ++k) {
      IntVec resK = res_matrix(mod.lat, lat.top(), h).column(lat.posInBelow[lat.top()][k]);
      for (int jp = 0; jp < rh; ++jp) {
        BurnsideElement prod = multiply(
            BurnsideElement{mod.lat, h, [&] {
                              IntVec e(rh);
                              e[jp] = 1;
                              return e;
                            }()},
            BurnsideElement{mod.lat, h, resK});
        for (int v = 0; v < mod.rank; ++v) {
          IntVec rel(amb);
          for (int i = 0; i < rh; ++i) rel[i * mod.rank + v] += prod.coeff[i];
          for (int w = 0; w < mod.rank; ++w) rel[jp * mod.rank + w] -= mod.action[k].at(w, v);
          rels.push_back(std::move(rel));
        }
      }
    }
    IntMatrix r(amb, int(rels.size()));
    for (size_t c = 0; c < rels.size(); ++c)
      for (int i = 0; i < amb; ++i) r.at(i, int(c)) = rels[c][i];
    relMat[h] = r;
    SmithDecomposition s = smith_normal_form(r);
    int rank = 0;
    for (const Int& d : s.diagonal())
      if (d != 0) {
        if (d != 1) throw UnrepresentableError("tensored level has torsion");
        ++rank;
      }
    auto uinv = integer_inverse(s.u);
    if (!uinv) throw InternalConsistencyError("Smith row transform is not unimodular");
    int free = amb - rank;
    proj[h] = IntMatrix(free, amb);
    section[h] = IntMatrix(amb, free);
    for (int i = 0; i < free; ++i)
      for (int c = 0; c < amb; ++c) {
        proj[h].at(i, c) = s.u.at(rank + i, c);
        section[h].at(c, i) = uinv->at(c, rank + i);
      }
  }
  std::vector<int> ranks(n);
  for (int h = 0; h < n; ++h) ranks[h] = proj[h].rows();
  MackeyFunctor f = make_skeleton(mod.lat, ranks);
  for (int h = 0; h < n; ++h)
    for (int k : lat.below[h]) {
      if (k == h) continue;
      IntMatrix res = proj[k] * res_matrix(mod.lat, h, k).kron(IntMatrix::identity(mod.rank));
      IntMatrix tr = proj[h] * tr_matrix(mod.lat, h, k).kron(IntMatrix::identity(mod.rank));
      if (!(res * relMat[h]).isZero() || !(tr * relMat[k]).isZero())
        throw InternalConsistencyError("structure map does not descend past the balancing relations");
      f.resMaps[h][k] = res * section[h];
      f.trMaps[h][k] = tr * section[k];
    }
  return TensorUpResult{f, proj};
}

bool check_counit(const AGModule& mod) {
  TensorUpResult t = tensor_up(mod);
  AGModule e = eval_gg(t.functor);
  const auto& lat = *mod.lat;
  int top = lat.top();
  int unitPos = lat.posInBelow[top][top];
  IntMatrix c(e.rank, mod.rank);
  for (int v = 0; v < mod.rank; ++v) {
    IntVec vec(size_t(lat.below[top].size()) * mod.rank);
    vec[unitPos * mod.rank + v] = 1;
    IntVec img = t.proj[top].apply(vec);
    for (int i = 0; i < e.rank; ++i) c.at(i, v) = img[i];
  }
  if (c.rows() != c.cols() || !is_unimodular(c)) return false;
  for (int h = 0; h < lat.size(); ++h)
    if (c * mod.action[h] != e.action[h] * c) return false;
  return true;
}

}  // namespace equimack
