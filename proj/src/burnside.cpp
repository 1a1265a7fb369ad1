#include "equimack/burnside.hpp"

namespace equimack {

namespace {

void checkLevel(const BurnsideElement& x) {
  if (int(x.coeff.size()) != int(x.lat->below[x.level].size()))
    throw InvalidInputError("Burnside element has wrong coefficient length for its level");
}

}  // namespace

BurnsideElement burnside_basis(const LatticePtr& lat, int level, int j) {
  if (!lat->contains(level, j)) throw InvalidInputError("basis subgroup not below the level");
  BurnsideElement e{lat, level, IntVec(lat->below[level].size())};
  e.coeff[lat->posInBelow[level][j]] = 1;
  return e;
}

BurnsideElement burnside_unit(const LatticePtr& lat, int level) {
  return burnside_basis(lat, level, level);
}

BurnsideElement multiply(const BurnsideElement& x, const BurnsideElement& y) {
  if (x.lat != y.lat || x.level != y.level)
    throw InvalidInputError("Burnside multiplication requires matching levels");
  checkLevel(x);
  checkLevel(y);
  const auto& lat = *x.lat;
  int h = x.level;
  const auto& basis = lat.below[h];
  BurnsideElement r{x.lat, h, IntVec(basis.size())};
  for (size_t a = 0; a < basis.size(); ++a) {
    if (x.coeff[a] == 0) continue;
    for (size_t b = 0; b < basis.size(); ++b) {
      if (y.coeff[b] == 0) continue;
      int j = basis[a], k = basis[b];
      long idx = lat.subs[h].order / lat.subs[lat.join(j, k)].order;
      r.coeff[lat.posInBelow[h][lat.meet(j, k)]] += x.coeff[a] * y.coeff[b] * idx;
    }
  }
  return r;
}

IntMatrix res_matrix(const LatticePtr& lat, int h, int k) {
  if (!lat->contains(h, k)) throw InvalidInputError("restriction target not below the level");
  const auto& src = lat->below[h];
  const auto& dst = lat->below[k];
  IntMatrix m(int(dst.size()), int(src.size()));
  for (size_t c = 0; c < src.size(); ++c) {
    int j = src[c];
    long idx = lat->subs[h].order / lat->subs[lat->join(j, k)].order;
    m.at(lat->posInBelow[k][lat->meet(j, k)], int(c)) = idx;
  }
  return m;
}

IntMatrix tr_matrix(const LatticePtr& lat, int h, int j) {
  if (!lat->contains(h, j)) throw InvalidInputError("transfer source not below the target");
  const auto& src = lat->below[j];
  const auto& dst = lat->below[h];
  IntMatrix m(int(dst.size()), int(src.size()));
  for (size_t c = 0; c < src.size(); ++c) m.at(lat->posInBelow[h][src[c]], int(c)) = 1;
  return m;
}

IntMatrix marks_matrix(const LatticePtr& lat, int h) {
  const auto& basis = lat->below[h];
  IntMatrix m(int(basis.size()), int(basis.size()));
  for (size_t r = 0; r < basis.size(); ++r)
    for (size_t c = 0; c < basis.size(); ++c)
      if (lat->contains(basis[c], basis[r]))
        m.at(int(r), int(c)) = lat->subs[h].order / lat->subs[basis[c]].order;
  return m;
}

IntMatrix multiplication_matrix(const LatticePtr& lat, int h) {
  const auto& basis = lat->below[h];
  int n = int(basis.size());
  IntMatrix m(n, n * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int j = basis[a], k = basis[b];
      long idx = lat->subs[h].order / lat->subs[lat->join(j, k)].order;
      m.at(lat->posInBelow[h][lat->meet(j, k)], a * n + b) = idx;
    }
  return m;
}

BurnsideElement restrict_to(const BurnsideElement& x, int k) {
  checkLevel(x);
  BurnsideElement r{x.lat, k, res_matrix(x.lat, x.level, k).apply(x.coeff)};
  return r;
}

BurnsideElement transfer_to(const BurnsideElement& x, int h) {
  checkLevel(x);
  BurnsideElement r{x.lat, h, tr_matrix(x.lat, h, x.level).apply(x.coeff)};
  return r;
}

IntVec marks(const BurnsideElement& x) {
  checkLevel(x);
  return marks_matrix(x.lat, x.level).apply(x.coeff);
}

}  // namespace equimack
