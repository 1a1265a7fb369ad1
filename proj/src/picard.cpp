#include "equimack/picard.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace equimack {

namespace {

/// Canonical unit representatives mod m after the sign identification.
std::vector<long> componentReps(long m) {
  if (m <= 2) return {1};
  std::vector<long> reps;
  for (long x = 1; 2 * x <= m; ++x)
    if (std::gcd(x, m) == 1) reps.push_back(x);
  return reps;
}

}  // namespace

PicardGroup picard_group(const LatticePtr& lat, long classCap) {
  int n = lat->size();
  std::vector<std::vector<long>> reps(n);
  long count = 1;
  for (int h = 0; h < n; ++h) {
    reps[h] = componentReps(lat->indexOf(h, lat->top()));
    count *= long(reps[h].size());
    if (count > classCap) throw ResourceLimitError("Picard class count exceeds the cap");
  }
  PicardGroup pg;
  pg.lat = lat;
  std::vector<int> pick(n, 0);
  std::map<IntVec, int> index;
  for (long c = 0; c < count; ++c) {
    IntVec v(n);
    for (int h = 0; h < n; ++h) v[h] = reps[h][pick[h]];
    index[v] = int(pg.classes.size());
    pg.classes.push_back(PicardClass{make_twist(lat, v)});
    for (int h = 0; h < n; ++h) {
      if (++pick[h] < int(reps[h].size())) break;
      pick[h] = 0;
    }
  }
  pg.identity = index.at(IntVec(n, 1));
  pg.table.assign(pg.classes.size(), std::vector<int>(pg.classes.size()));
  for (size_t i = 0; i < pg.classes.size(); ++i)
    for (size_t j = 0; j < pg.classes.size(); ++j) {
      Twist prod = normalize(
          multiply_twists(pg.classes[i].representative, pg.classes[j].representative));
      pg.table[i][j] = index.at(prod.value);
    }
  return pg;
}

Int picard_order(const LatticePtr& lat) {
  Int order = 1;
  for (int h = 0; h < lat->size(); ++h)
    order *= long(componentReps(lat->indexOf(h, lat->top())).size());
  return order;
}

std::optional<MackeyMorphism> refute_iso_bounded(const Twist& a, const Twist& b, long bound) {
  if (bound <= 0) throw InvalidInputError("search bound must be positive");
  if (a.lat->group != b.lat->group) return std::nullopt;
  HomSpace hom = gamma_space(a, twisted_burnside(b));
  int r = hom.gamma_basis.rank();
  if (r == 0) return std::nullopt;
  int n = a.lat->size();
  // A morphism built from gamma has poset-triangular components, so it is an
  // isomorphism exactly when every "diagonal" coordinate -- the J/J
  // coefficient of gamma_J -- is a unit. Search those n linear forms only.
  IntMatrix diag(n, r);
  for (int i = 0; i < r; ++i)
    for (int h = 0; h < n; ++h)
      diag.at(h, i) = hom.gamma_basis.basis[i][hom.offsets[h] + a.lat->posInBelow[h][h]];
  IntVec coeff(r);
  IntVec partial(n, Int(0));
  std::vector<std::vector<Int>> tailSpan(n);  // max extra |sum| from variables >= i
  for (int h = 0; h < n; ++h) {
    tailSpan[h].assign(r + 1, Int(0));
    for (int i = r - 1; i >= 0; --i)
      tailSpan[h][i] = tailSpan[h][i + 1] + abs(diag.at(h, i)) * bound;
  }
  std::optional<IntVec> found;
  auto dfs = [&](auto&& self, int i) -> void {
    if (found) return;
    for (int h = 0; h < n; ++h) {
      Int lo = partial[h] - tailSpan[h][i];
      Int hi = partial[h] + tailSpan[h][i];
      if (lo > 1 || hi < -1 || (lo > -1 && hi < 1)) return;
    }
    if (i == r) {
      for (int h = 0; h < n; ++h)
        if (partial[h] != 1 && partial[h] != -1) return;
      found = coeff;
      return;
    }
    for (long c = -bound; c <= bound && !found; ++c) {
      coeff[i] = c;
      for (int h = 0; h < n; ++h) partial[h] += c * diag.at(h, i);
      self(self, i + 1);
      for (int h = 0; h < n; ++h) partial[h] -= c * diag.at(h, i);
    }
  };
  dfs(dfs, 0);
  if (!found) return std::nullopt;
  IntVec gamma(hom.gamma_basis.ambient, Int(0));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < hom.gamma_basis.ambient; ++j)
      gamma[j] += (*found)[i] * hom.gamma_basis.basis[i][j];
  MackeyMorphism phi = morphism_from_gamma(a, hom.m, gamma);
  if (!is_isomorphism(phi))
    throw InternalConsistencyError("search produced a non-invertible candidate");
  return phi;
}

ValidationReport verify_classification(const LatticePtr& lat, long bound) {
  ValidationReport rep;
  PicardGroup pg = picard_group(lat);
  for (size_t i = 0; i < pg.classes.size(); ++i)
    for (size_t j = 0; j < pg.classes.size(); ++j) {
      const Twist& a = pg.classes[i].representative;
      const Twist& b = pg.classes[j].representative;
      if (equivalent(a, b)) {
        auto w = witness_iso(a, b);
        if (!w || !is_isomorphism(*w))
          rep.violations.push_back("no witness for equivalent classes " + std::to_string(i) +
                                   ", " + std::to_string(j));
      } else if (refute_iso_bounded(a, b, bound)) {
        rep.violations.push_back("isomorphism found between inequivalent classes " +
                                 std::to_string(i) + ", " + std::to_string(j));
      }
    }
  return rep;
}

ValidationReport verify_splitting(const LatticePtr& lat, int n) {
  ValidationReport rep;
  if (n == lat->bottom() || n == lat->top())
    throw InvalidInputError("splitting check needs a proper nontrivial subgroup");
  QuotientInfo q = quotient(lat, n);
  PicardGroup pgG = picard_group(lat);
  PicardGroup pgQ = picard_group(q.quotLattice);
  std::map<IntVec, int> classOf;
  for (size_t i = 0; i < pgG.classes.size(); ++i)
    classOf[pgG.classes[i].representative.value] = int(i);
  std::vector<int> image;
  for (const auto& cls : pgQ.classes) {
    Twist lifted = normalize(qind_twisted(cls.representative, q));
    auto it = classOf.find(lifted.value);
    if (it == classOf.end()) {
      rep.violations.push_back("lifted class escapes the enumerated Picard group");
      continue;
    }
    image.push_back(it->second);
    if (!equivalent(phi_twist(lifted, q), cls.representative))
      rep.violations.push_back("geometric fixed points fail to retract a lifted class");
  }
  std::sort(image.begin(), image.end());
  if (std::adjacent_find(image.begin(), image.end()) != image.end())
    rep.violations.push_back("lift of Picard classes is not injective");
  long kernel = 0;
  for (const auto& cls : pgG.classes) {
    bool trivialAbove = true;
    for (int h = 0; h < lat->size(); ++h)
      if (q.toQuot[h] >= 0 && cls.representative.value[h] != 1) trivialAbove = false;
    if (trivialAbove) ++kernel;
  }
  if (Int(long(pgG.classes.size())) != Int(long(pgQ.classes.size())) * kernel)
    rep.violations.push_back("class count does not factor through the splitting");
  return rep;
}

}  // namespace equimack
