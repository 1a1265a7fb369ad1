#include "equimack/twists.hpp"

namespace equimack {

Twist make_twist(const LatticePtr& lat, const IntVec& values) {
  if (int(values.size()) != lat->size())
    throw InvalidInputError("twist needs one value per subgroup");
  for (const Int& v : values)
    if (v == 0) throw InvalidInputError("twist values must be nonzero");
  if (values[lat->top()] != 1)
    throw InvalidInputError("twist value at the whole group must be 1");
  return Twist{lat, values};
}

Twist unit_twist(const LatticePtr& lat) {
  return Twist{lat, IntVec(lat->size(), 1)};
}

Int restriction_factor(const Twist& a, int h) {
  Int r = 1;
  for (int k = 0; k < a.lat->size(); ++k)
    if (a.lat->contains(k, h)) r *= a.value[k];
  return r;
}

Int twist_ratio(const Twist& a, int j, int k) {
  int cap = a.lat->meet(j, k);
  Int r = 1;
  for (int kp = 0; kp < a.lat->size(); ++kp)
    if (a.lat->contains(kp, cap) && !a.lat->contains(kp, j)) r *= a.value[kp];
  return r;
}

bool is_unit_twist(const Twist& a) {
  for (int h = 0; h < a.lat->size(); ++h) {
    Int m = a.lat->indexOf(h, a.lat->top());
    Int g;
    mpz_gcd(g.get_mpz_t(), a.value[h].get_mpz_t(), m.get_mpz_t());
    if (g != 1) return false;
  }
  return true;
}

Twist multiply_twists(const Twist& a, const Twist& b) {
  if (a.lat->group != b.lat->group)
    throw InvalidInputError("twist product requires the same group");
  IntVec v(a.value);
  for (size_t i = 0; i < v.size(); ++i) v[i] *= b.value[i];
  return Twist{a.lat, v};
}

Twist normalize(const Twist& a) {
  if (!is_unit_twist(a)) throw InvalidInputError("only unit twists have a normal form");
  IntVec v(a.lat->size());
  for (int h = 0; h < a.lat->size(); ++h) {
    Int m = a.lat->indexOf(h, a.lat->top());
    if (m <= 2) {
      v[h] = 1;
      continue;
    }
    Int x = ((a.value[h] % m) + m) % m;
    Int y = m - x;
    v[h] = std::min(x, y);
  }
  return Twist{a.lat, v};
}

bool equivalent(const Twist& a, const Twist& b) {
  if (a.lat->group != b.lat->group) return false;
  return normalize(a).value == normalize(b).value;
}

IntMatrix tres_matrix(const Twist& a, int h, int k) {
  IntMatrix m = res_matrix(a.lat, h, k);
  const auto& src = a.lat->below[h];
  for (size_t c = 0; c < src.size(); ++c) {
    Int s = twist_ratio(a, src[c], k);
    for (int r = 0; r < m.rows(); ++r) m.at(r, int(c)) *= s;
  }
  return m;
}

MackeyFunctor twisted_burnside(const Twist& a) {
  MackeyFunctor m = burnside_mackey(a.lat);
  for (int h = 0; h < a.lat->size(); ++h)
    for (int k : a.lat->below[h]) m.resMaps[h][k] = tres_matrix(a, h, k);
  return m;
}

namespace {

/// Morphism A^a -> A^b sending H/J to tr^H_J(gamma[J]); gamma[J] is given in
/// the coordinates of level J.
MackeyMorphism spanFromGamma(const Twist& a, const Twist& b, const std::vector<IntVec>& gamma) {
  const auto& lat = *a.lat;
  MackeyMorphism phi{twisted_burnside(a), twisted_burnside(b), {}};
  for (int h = 0; h < lat.size(); ++h) {
    std::vector<IntVec> cols;
    for (int j : lat.below[h]) cols.push_back(phi.target.trMaps[h][j].apply(gamma[j]));
    phi.comp.push_back(IntMatrix::fromColumns(phi.target.rank(h), cols));
  }
  return phi;
}

}  // namespace

MackeyMorphism elementary_shift_iso(const Twist& a, int f) {
  const auto& lat = *a.lat;
  if (f == lat.top()) throw InvalidInputError("cannot shift the top component");
  if (!is_unit_twist(a)) throw InvalidInputError("shift witnesses require a unit twist");
  IntVec bv(a.value);
  bv[f] += lat.indexOf(f, lat.top());
  Twist b{a.lat, bv};
  std::vector<IntVec> gamma(lat.size());
  for (int h = 0; h < lat.size(); ++h) {
    IntVec g(lat.below[h].size());
    g[lat.posInBelow[h][h]] = 1;
    if (!lat.contains(f, h)) {
      // H/H - c_H * H/(F cap H)
      Int c = lat.indexOf(lat.join(f, h), lat.top());
      int cap = lat.meet(f, h);
      for (int k = 0; k < lat.size(); ++k)
        if (lat.contains(k, cap) && !lat.contains(k, h) && k != f) c *= a.value[k];
      g[lat.posInBelow[h][cap]] -= c;
    }
    gamma[h] = g;
  }
  MackeyMorphism phi = spanFromGamma(a, b, gamma);
  if (!is_isomorphism(phi)) throw InternalConsistencyError("shift witness failed verification");
  return phi;
}

MackeyMorphism negate_iso(const Twist& a, int f) {
  const auto& lat = *a.lat;
  if (f == lat.top()) throw InvalidInputError("cannot negate the top component");
  IntVec bv(a.value);
  bv[f] = -bv[f];
  MackeyMorphism phi{twisted_burnside(a), twisted_burnside(Twist{a.lat, bv}), {}};
  for (int h = 0; h < lat.size(); ++h) {
    IntMatrix c = IntMatrix::identity(int(lat.below[h].size()));
    for (size_t p = 0; p < lat.below[h].size(); ++p)
      if (lat.contains(f, lat.below[h][p])) c.at(int(p), int(p)) = -1;
    phi.comp.push_back(c);
  }
  if (!is_isomorphism(phi)) throw InternalConsistencyError("negation witness failed verification");
  return phi;
}

std::optional<MackeyMorphism> witness_iso(const Twist& a, const Twist& b) {
  if (a.lat->group != b.lat->group) return std::nullopt;
  if (!is_unit_twist(a) || !is_unit_twist(b)) return std::nullopt;
  if (!equivalent(a, b)) return std::nullopt;
  const auto& lat = *a.lat;
  Twist cur = a;
  MackeyMorphism phi = identity_morphism(twisted_burnside(a));
  for (int f = 0; f < lat.top(); ++f) {
    Int m = lat.indexOf(f, lat.top());
    if ((cur.value[f] - b.value[f]) % m != 0) {
      phi = compose(negate_iso(cur, f), phi);
      cur.value[f] = -cur.value[f];
    }
    while (cur.value[f] < b.value[f]) {
      phi = compose(elementary_shift_iso(cur, f), phi);
      cur.value[f] += m;
    }
    while (cur.value[f] > b.value[f]) {
      Twist down = cur;
      down.value[f] -= m;
      phi = compose(invert_morphism(elementary_shift_iso(down, f)), phi);
      cur = down;
    }
  }
  phi.target = twisted_burnside(b);
  if (!is_isomorphism(phi)) throw InternalConsistencyError("composite witness failed verification");
  return phi;
}

}  // namespace equimack
