#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "equimack/boxhom.hpp"

using namespace equimack;

TEST_CASE("Hom(A, M) is spanned by the images of the unit over C_2") {
  auto lat = subgroup_lattice(make_group({2}));
  Twist one = unit_twist(lat);
  MackeyFunctor a = burnside_mackey(lat);
  HomSpace hs = gamma_space(one, a);
  // endomorphisms of the Burnside functor over C_p form a rank-2 lattice
  CHECK(int(hs.gamma_basis.basis.size()) == 2);
  CHECK(hs.offsets == std::vector<int>{0, 1, 3});
  for (const IntVec& gamma : hs.gamma_basis.basis) {
    MackeyMorphism phi = morphism_from_gamma(one, a, gamma);
    CHECK(check_morphism(phi));
    CHECK(gamma_of_morphism(phi) == gamma);
  }
}

TEST_CASE("the identity endomorphism corresponds to the unit tuple") {
  for (auto factors : std::vector<std::vector<long>>{{4}, {2, 2}, {9}}) {
    auto lat = subgroup_lattice(make_group(factors));
    Twist one = unit_twist(lat);
    MackeyFunctor a = burnside_mackey(lat);
    // gamma_H = H/H at every level
    IntVec gamma;
    for (int h = 0; h < lat->size(); ++h) {
      IntVec unit(lat->below[h].size());
      unit[lat->posInBelow[h][h]] = 1;
      gamma.insert(gamma.end(), unit.begin(), unit.end());
    }
    MackeyMorphism phi = morphism_from_gamma(one, a, gamma);
    for (const auto& c : phi.comp) CHECK(c.isIdentity());
    CHECK(lattice_coordinates(gamma_space(one, a).gamma_basis, gamma).has_value());
  }
}

TEST_CASE("Hom into the zero functor is zero") {
  auto lat = subgroup_lattice(make_group({4}));
  HomSpace hs = gamma_space(unit_twist(lat), zero_functor(lat));
  CHECK(hs.gamma_basis.basis.empty());
}

TEST_CASE("morphism_from_gamma is linear and validates its input") {
  auto lat = subgroup_lattice(make_group({4}));
  Twist one = unit_twist(lat);
  MackeyFunctor a = burnside_mackey(lat);
  HomSpace hs = gamma_space(one, a);
  REQUIRE(hs.gamma_basis.basis.size() >= 2);
  IntVec x = hs.gamma_basis.basis[0], y = hs.gamma_basis.basis[1];
  IntVec sum(x.size());
  for (size_t i = 0; i < x.size(); ++i) sum[i] = x[i] + 3 * y[i];
  MackeyMorphism px = morphism_from_gamma(one, a, x);
  MackeyMorphism py = morphism_from_gamma(one, a, y);
  MackeyMorphism ps = morphism_from_gamma(one, a, sum);
  for (int h = 0; h < lat->size(); ++h)
    CHECK(ps.comp[h] == px.comp[h] + py.comp[h] * Int(3));
  CHECK_THROWS_AS(morphism_from_gamma(one, a, IntVec(3)), InvalidInputError);
}

TEST_CASE("the canonical untwisted pairing is Burnside multiplication") {
  for (auto factors : std::vector<std::vector<long>>{{4}, {2, 2}, {6}}) {
    auto lat = subgroup_lattice(make_group(factors));
    Twist one = unit_twist(lat);
    DressPairing d = dress_pairing_box(one, one);
    CHECK(check_pairing(d));
    for (int h = 0; h < lat->size(); ++h)
      CHECK(d.theta[h] == multiplication_matrix(lat, h));
  }
}

TEST_CASE("twisted pairing scalars on the Klein four group") {
  auto lat = subgroup_lattice(make_group({2, 2}));
  IntVec v(5, 1);
  for (int h = 0; h < 5; ++h)
    if (lat->subs[h].order == 2) v[h] = 3;
  Twist alpha = make_twist(lat, v);
  DressPairing d = dress_pairing_box(alpha, alpha);
  CHECK(check_pairing(d));
  int top = lat->top();
  int n = int(lat->below[top].size());
  // pick two distinct order-2 subgroups J, K: theta(K/J (x) K/K') lands on K/e
  // with coefficient (r_e)^2 / (r_J r_K) = 729 / 9 = 81
  std::vector<int> order2;
  for (int h = 0; h < 5; ++h)
    if (lat->subs[h].order == 2) order2.push_back(h);
  int pj = lat->posInBelow[top][order2[0]], pk = lat->posInBelow[top][order2[1]];
  IntVec col = d.theta[top].column(pj * n + pk);
  for (int i = 0; i < n; ++i)
    CHECK(col[i] == (i == lat->posInBelow[top][lat->bottom()] ? 81 : 0));
  // theta(K/K (x) K/J) = r^a_J / r^a_K * K/J = 3 * K/J
  int pt = lat->posInBelow[top][top];
  IntVec unitCol = d.theta[top].column(pt * n + pj);
  for (int i = 0; i < n; ++i) CHECK(unitCol[i] == (i == pj ? 3 : 0));
}

TEST_CASE("check_pairing rejects corrupted levels") {
  auto lat = subgroup_lattice(make_group({4}));
  Twist one = unit_twist(lat);
  DressPairing d = dress_pairing_box(one, one);
  d.theta[lat->top()].at(0, 0) += 1;
  CHECK_FALSE(check_pairing(d));
}

TEST_CASE("Dress pairings into a probe match morphisms out of the box product") {
  for (auto factors : std::vector<std::vector<long>>{{4}, {9}}) {
    auto lat = subgroup_lattice(make_group(factors));
    IntVec va(lat->size(), 1), vb(lat->size(), 1);
    va[0] = 2;
    vb[0] = lat->group.order - 2;
    Twist a = make_twist(lat, va), b = make_twist(lat, vb);
    Twist ab = multiply_twists(a, b);
    for (const Twist& probe : {unit_twist(lat), a, ab}) {
      MackeyFunctor p = twisted_burnside(probe);
      PairingSpace ps = dress_space(a, b, p);
      HomSpace hs = gamma_space(ab, p);
      CHECK(ps.pairings.basis.size() == hs.gamma_basis.basis.size());
    }
    PairingSpace zero = dress_space(a, b, zero_functor(lat));
    CHECK(zero.pairings.basis.empty());
    // the canonical pairing itself is in the solution lattice
    DressPairing canon = dress_pairing_box(a, b);
    IntVec flat;
    for (int h = 0; h < lat->size(); ++h) {
      const IntMatrix& th = canon.theta[h];
      for (int i = 0; i < th.rows(); ++i)
        for (int j = 0; j < th.cols(); ++j) flat.push_back(th.at(i, j));
    }
    PairingSpace ps = dress_space(a, b, canon.p);
    CHECK(lattice_coordinates(ps.pairings, flat).has_value());
  }
}

TEST_CASE("universal property of the box product") {
  auto c9 = subgroup_lattice(make_group({9}));
  Twist a = make_twist(c9, IntVec{Int(2), Int(1), Int(1)});
  Twist b = make_twist(c9, IntVec{Int(4), Int(1), Int(1)});
  std::vector<MackeyFunctor> probes{burnside_mackey(c9), twisted_burnside(a),
                                    twisted_burnside(make_twist(c9, IntVec{Int(8), Int(1), Int(1)}))};
  CHECK(verify_box_law(a, b, probes).ok());

  auto klein = subgroup_lattice(make_group({2, 2}));
  IntVec v(5, 1);
  for (int h = 0; h < 5; ++h)
    if (klein->subs[h].order == 2) v[h] = 3;
  Twist alpha = make_twist(klein, v);
  CHECK(verify_box_law(alpha, unit_twist(klein),
                       {burnside_mackey(klein), twisted_burnside(alpha)})
            .ok());
}
