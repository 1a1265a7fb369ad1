#include "equimack/boxhom.hpp"

#include <numeric>
#include <random>

namespace equimack {

namespace {

std::vector<int> levelOffsets(const MackeyFunctor& m) {
  std::vector<int> off(m.lat->size() + 1, 0);
  for (int h = 0; h < m.lat->size(); ++h) off[h + 1] = off[h] + m.rank(h);
  return off;
}

}  // namespace

HomSpace gamma_space(const Twist& a, const MackeyFunctor& m) {
  if (a.lat->group != m.lat->group)
    throw InvalidInputError("gamma_space: twist and functor over different groups");
  const auto& lat = *m.lat;
  auto off = levelOffsets(m);
  int total = off.back();
  std::vector<IntVec> rows;
  auto addRow = [&](IntVec&& r) { rows.push_back(std::move(r)); };
  for (int h = 0; h < lat.size(); ++h) {
    for (int k : lat.below[h]) {
      if (k == h) continue;
      Int ratio = twist_ratio(a, h, k);
      const IntMatrix& r = m.res(h, k);
      for (int i = 0; i < r.rows(); ++i) {
        IntVec row(total);
        for (int j = 0; j < r.cols(); ++j) row[off[h] + j] = r.at(i, j);
        row[off[k] + i] -= ratio;
        addRow(std::move(row));
      }
    }
    for (int g = 0; g < lat.group.numGens(); ++g) {
      const IntMatrix& w = m.weyl[h][g];
      for (int i = 0; i < w.rows(); ++i) {
        IntVec row(total);
        for (int j = 0; j < w.cols(); ++j) row[off[h] + j] = w.at(i, j);
        row[off[h] + i] -= 1;
        addRow(std::move(row));
      }
    }
  }
  IntMatrix sys(int(rows.size()), total);
  for (size_t i = 0; i < rows.size(); ++i)
    for (int j = 0; j < total; ++j) sys.at(int(i), j) = rows[i][j];
  HomSpace hs{a, m, off, kernel_lattice(sys)};
  return hs;
}

MackeyMorphism morphism_from_gamma(const Twist& a, const MackeyFunctor& m, const IntVec& gamma) {
  const auto& lat = *m.lat;
  auto off = levelOffsets(m);
  if (int(gamma.size()) != off.back())
    throw InvalidInputError("gamma has wrong length for the target functor");
  auto level = [&](int h) {
    return IntVec(gamma.begin() + off[h], gamma.begin() + off[h] + m.rank(h));
  };
  for (int h = 0; h < lat.size(); ++h) {
    IntVec gh = level(h);
    for (int k : lat.below[h]) {
      if (k == h) continue;
      IntVec lhs = m.res(h, k).apply(gh);
      IntVec rhs = level(k);
      Int ratio = twist_ratio(a, h, k);
      for (size_t i = 0; i < lhs.size(); ++i)
        if (lhs[i] != ratio * rhs[i])
          throw InvalidInputError("gamma violates the twisted restriction constraint");
    }
    for (int g = 0; g < lat.group.numGens(); ++g)
      if (m.weyl[h][g].apply(gh) != gh)
        throw InvalidInputError("gamma is not Weyl-invariant");
  }
  MackeyMorphism phi{twisted_burnside(a), m, {}};
  for (int h = 0; h < lat.size(); ++h) {
    std::vector<IntVec> cols;
    for (int j : lat.below[h]) cols.push_back(m.tr(h, j).apply(level(j)));
    phi.comp.push_back(IntMatrix::fromColumns(m.rank(h), cols));
  }
  return phi;
}

IntVec gamma_of_morphism(const MackeyMorphism& phi) {
  const auto& lat = *phi.source.lat;
  IntVec gamma;
  for (int h = 0; h < lat.size(); ++h) {
    IntVec col = phi.comp[h].column(lat.posInBelow[h][h]);
    gamma.insert(gamma.end(), col.begin(), col.end());
  }
  return gamma;
}

DressPairing dress_pairing_box(const Twist& a, const Twist& b) {
  if (a.lat->group != b.lat->group)
    throw InvalidInputError("pairing requires twists over the same group");
  const auto& lat = *a.lat;
  DressPairing d{twisted_burnside(a), twisted_burnside(b),
                 twisted_burnside(multiply_twists(a, b)), {}};
  for (int h = 0; h < lat.size(); ++h) {
    const auto& basis = lat.below[h];
    int n = int(basis.size());
    IntMatrix th(n, n * n);
    for (int jc = 0; jc < n; ++jc)
      for (int kc = 0; kc < n; ++kc) {
        int j = basis[jc], k = basis[kc];
        Int s = twist_ratio(a, j, k) * twist_ratio(b, k, j) * lat.indexOf(lat.join(j, k), h);
        th.at(lat.posInBelow[h][lat.meet(j, k)], jc * n + kc) = s;
      }
    d.theta.push_back(th);
  }
  return d;
}

bool check_pairing(const DressPairing& d) {
  const auto& lat = *d.m.lat;
  for (int h = 0; h < lat.size(); ++h)
    for (int k : lat.below[h]) {
      if (k == h) continue;
      if (d.theta[k] * d.m.res(h, k).kron(d.n.res(h, k)) != d.p.res(h, k) * d.theta[h])
        return false;
      if (d.theta[h] * d.m.tr(h, k).kron(IntMatrix::identity(d.n.rank(h))) !=
          d.p.tr(h, k) * d.theta[k] * IntMatrix::identity(d.m.rank(k)).kron(d.n.res(h, k)))
        return false;
      if (d.theta[h] * IntMatrix::identity(d.m.rank(h)).kron(d.n.tr(h, k)) !=
          d.p.tr(h, k) * d.theta[k] * d.m.res(h, k).kron(IntMatrix::identity(d.n.rank(k))))
        return false;
    }
  return true;
}

PairingSpace dress_space(const Twist& a, const Twist& b, const MackeyFunctor& p) {
  if (a.lat->group != p.lat->group || b.lat->group != p.lat->group)
    throw InvalidInputError("dress_space: mismatched groups");
  const auto& lat = *p.lat;
  MackeyFunctor m = twisted_burnside(a);
  MackeyFunctor n = twisted_burnside(b);
  // unknowns: theta[h] entries, row-major, levels concatenated
  std::vector<int> off(lat.size() + 1, 0);
  for (int h = 0; h < lat.size(); ++h)
    off[h + 1] = off[h] + p.rank(h) * m.rank(h) * n.rank(h);
  int total = off.back();
  std::vector<IntVec> rows;
  // adds the (i, c) entry of sign * L * theta[lvl] * R to the equation row
  auto accum = [&](IntVec& row, int lvl, const IntMatrix& l, const IntMatrix& r, int i, int c,
                   int sign) {
    int innerCols = m.rank(lvl) * n.rank(lvl);
    for (int s = 0; s < l.cols(); ++s)
      for (int t = 0; t < innerCols; ++t)
        row[off[lvl] + s * innerCols + t] += sign * l.at(i, s) * r.at(t, c);
  };
  auto addEquations = [&](int lvlL, const IntMatrix& ll, const IntMatrix& lr, int lvlR,
                          const IntMatrix& rl, const IntMatrix& rr) {
    int outRows = ll.rows(), outCols = lr.cols();
    for (int i = 0; i < outRows; ++i)
      for (int c = 0; c < outCols; ++c) {
        IntVec row(total);
        accum(row, lvlL, ll, lr, i, c, 1);
        accum(row, lvlR, rl, rr, i, c, -1);
        rows.push_back(std::move(row));
      }
  };
  for (int h = 0; h < lat.size(); ++h)
    for (int k : lat.below[h]) {
      if (k == h) continue;
      addEquations(k, IntMatrix::identity(p.rank(k)), m.res(h, k).kron(n.res(h, k)),  //
                   h, p.res(h, k), IntMatrix::identity(m.rank(h) * n.rank(h)));
      addEquations(h, IntMatrix::identity(p.rank(h)),
                   m.tr(h, k).kron(IntMatrix::identity(n.rank(h))),  //
                   k, p.tr(h, k), IntMatrix::identity(m.rank(k)).kron(n.res(h, k)));
      addEquations(h, IntMatrix::identity(p.rank(h)),
                   IntMatrix::identity(m.rank(h)).kron(n.tr(h, k)),  //
                   k, p.tr(h, k), m.res(h, k).kron(IntMatrix::identity(n.rank(k))));
    }
  IntMatrix sys(int(rows.size()), total);
  for (size_t i = 0; i < rows.size(); ++i)
    for (int j = 0; j < total; ++j) sys.at(int(i), j) = rows[i][j];
  return PairingSpace{a, b, p, off, kernel_lattice(sys)};
}

std::vector<MackeyFunctor> default_probe_family(const Twist& a, const Twist& b,
                                                unsigned long seed) {
  const LatticePtr& lat = a.lat;
  std::vector<MackeyFunctor> probes{twisted_burnside(unit_twist(lat)), twisted_burnside(a),
                                    twisted_burnside(b),
                                    twisted_burnside(multiply_twists(a, b))};
  std::mt19937_64 rng(seed);
  IntVec v(lat->size(), 1);
  for (int h = 0; h + 1 < lat->size(); ++h) {
    long m = lat->indexOf(h, lat->top());
    std::uniform_int_distribution<long> d(1, m > 1 ? m - 1 : 1);
    long x = d(rng);
    while (std::gcd(x, m) != 1) x = d(rng);
    v[h] = x;
  }
  probes.push_back(twisted_burnside(make_twist(lat, v)));
  return probes;
}

ValidationReport verify_box_law(const Twist& a, const Twist& b,
                                const std::vector<MackeyFunctor>& probes) {
  ValidationReport rep;
  Twist ab = multiply_twists(a, b);
  DressPairing box = dress_pairing_box(a, b);
  for (size_t pi = 0; pi < probes.size(); ++pi) {
    const MackeyFunctor& p = probes[pi];
    std::string tag = "probe " + std::to_string(pi);
    HomSpace gs = gamma_space(ab, p);
    PairingSpace ds = dress_space(a, b, p);
    if (gs.gamma_basis.rank() != ds.pairings.rank()) {
      rep.violations.push_back(tag + ": Hom(A^{ab}, P) and Dress-pairing lattices have different ranks");
      continue;
    }
    std::vector<IntVec> coordCols;
    bool inside = true;
    for (const IntVec& gamma : gs.gamma_basis.basis) {
      MackeyMorphism phi = morphism_from_gamma(ab, p, gamma);
      IntVec flat;
      for (int h = 0; h < p.lat->size(); ++h) {
        IntMatrix th = phi.comp[h] * box.theta[h];
        for (int i = 0; i < th.rows(); ++i)
          for (int j = 0; j < th.cols(); ++j) flat.push_back(th.at(i, j));
      }
      auto coords = lattice_coordinates(ds.pairings, flat);
      if (!coords) {
        rep.violations.push_back(tag + ": composed pairing escapes the Dress-pairing lattice");
        inside = false;
        break;
      }
      coordCols.push_back(*coords);
    }
    if (!inside) continue;
    IntMatrix change = IntMatrix::fromColumns(ds.pairings.rank(), coordCols);
    if (change.rows() != change.cols() || !is_unimodular(change))
      rep.violations.push_back(tag + ": correspondence of solution lattices is not unimodular");
  }
  return rep;
}

}  // namespace equimack
