#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "equimack/twists.hpp"

using namespace equimack;

namespace {

// The Klein four group with its order-2 subgroups named as usual: L and R are
// the factors, D the diagonal.
struct KleinSetup {
  LatticePtr lat;
  int e, L, D, R, K;
  Twist alpha;  // (1,3,3,3,1)
};

KleinSetup klein() {
  KleinSetup s;
  s.lat = subgroup_lattice(make_group({2, 2}));
  s.e = s.lat->bottom();
  s.K = s.lat->top();
  auto find = [&](std::vector<long> gen) {
    int g = s.lat->group.fromCoords(gen);
    std::vector<int> elems{0, g};
    std::sort(elems.begin(), elems.end());
    return s.lat->findByElements(elems);
  };
  s.L = find({1, 0});
  s.D = find({1, 1});
  s.R = find({0, 1});
  IntVec v(5, 1);
  v[s.L] = v[s.D] = v[s.R] = 3;
  s.alpha = make_twist(s.lat, v);
  return s;
}

}  // namespace

TEST_CASE("twist construction rules") {
  auto lat = subgroup_lattice(make_group({9}));
  CHECK_THROWS_AS(make_twist(lat, IntVec{Int(0), Int(1), Int(1)}), InvalidInputError);
  CHECK_THROWS_AS(make_twist(lat, IntVec{Int(2), Int(1), Int(3)}), InvalidInputError);
  CHECK_THROWS_AS(make_twist(lat, IntVec{Int(1), Int(1)}), InvalidInputError);
  CHECK(unit_twist(lat).value == IntVec(3, Int(1)));
}

TEST_CASE("restriction factors and ratios on the Klein example") {
  auto s = klein();
  CHECK(restriction_factor(s.alpha, s.e) == 27);
  CHECK(restriction_factor(s.alpha, s.L) == 3);
  CHECK(restriction_factor(s.alpha, s.D) == 3);
  CHECK(restriction_factor(s.alpha, s.K) == 1);
  // r_{D cap L} / r_D = 27 / 3, assembled without division
  CHECK(twist_ratio(s.alpha, s.D, s.L) == 9);
  CHECK(twist_ratio(s.alpha, s.L, s.L) == 1);
  CHECK(twist_ratio(s.alpha, s.K, s.L) == 3);
}

TEST_CASE("twisted Burnside functor reproduces the published Klein matrices") {
  auto s = klein();
  MackeyFunctor m = twisted_burnside(s.alpha);
  CHECK(check_axioms(m).ok());
  // transfers are untwisted
  MackeyFunctor plain = burnside_mackey(s.lat);
  for (int h = 0; h < 5; ++h)
    for (int k : s.lat->below[h]) CHECK(m.trMaps[h][k] == plain.trMaps[h][k]);
  // res from each order-2 subgroup to the bottom is (2 9)
  for (int t : {s.L, s.D, s.R}) {
    IntMatrix expected(1, 2);
    expected.at(0, 0) = 2;
    expected.at(0, 1) = 9;
    CHECK(m.resMaps[t][s.e] == expected);
  }
  // res from the top to T has rows (e, T): 2 on K/e, 9 on the other order-2
  // columns, and (2 on T, 3 on K/K) in the T row
  for (int t : {s.L, s.D, s.R}) {
    IntMatrix expected(2, 5);
    expected.at(0, s.lat->posInBelow[s.K][s.e]) = 2;
    for (int other : {s.L, s.D, s.R})
      if (other != t) expected.at(0, s.lat->posInBelow[s.K][other]) = 9;
    expected.at(1, s.lat->posInBelow[s.K][t]) = 2;
    expected.at(1, s.lat->posInBelow[s.K][s.K]) = 3;
    CHECK(m.resMaps[s.K][t] == expected);
  }
}

TEST_CASE("unit twist gives back the plain Burnside functor") {
  for (auto factors : std::vector<std::vector<long>>{{4}, {2, 2}, {6}}) {
    auto lat = subgroup_lattice(make_group(factors));
    MackeyFunctor a = burnside_mackey(lat);
    MackeyFunctor t = twisted_burnside(unit_twist(lat));
    for (int h = 0; h < lat->size(); ++h)
      for (int k : lat->below[h]) {
        CHECK(a.resMaps[h][k] == t.resMaps[h][k]);
        CHECK(a.trMaps[h][k] == t.trMaps[h][k]);
      }
  }
}

TEST_CASE("axioms hold for twisted functors with mixed-sign twists") {
  auto lat = subgroup_lattice(make_group({12}));
  IntVec v(lat->size(), 1);
  for (int h = 0; h + 1 < lat->size(); ++h) v[h] = (h % 3 == 0) ? -5 : (h % 3 == 1 ? 7 : 2);
  CHECK(check_axioms(twisted_burnside(make_twist(lat, v))).ok());
}

TEST_CASE("normalization into canonical sign-quotient representatives") {
  auto c9 = subgroup_lattice(make_group({9}));
  CHECK(normalize(make_twist(c9, IntVec{Int(7), Int(1), Int(1)})).value ==
        IntVec{Int(2), Int(1), Int(1)});
  CHECK(normalize(make_twist(c9, IntVec{Int(-2), Int(2), Int(1)})).value ==
        IntVec{Int(2), Int(1), Int(1)});
  auto c5 = subgroup_lattice(make_group({5}));
  CHECK(normalize(make_twist(c5, IntVec{Int(8), Int(1)})).value == IntVec{Int(2), Int(1)});
  // idempotent
  Twist t = make_twist(c9, IntVec{Int(13), Int(5), Int(1)});
  CHECK(normalize(normalize(t)).value == normalize(t).value);
  // only unit twists normalize
  CHECK_THROWS_AS(normalize(make_twist(c9, IntVec{Int(3), Int(1), Int(1)})), InvalidInputError);
}

TEST_CASE("unit twists and equivalence") {
  auto c9 = subgroup_lattice(make_group({9}));
  CHECK(is_unit_twist(make_twist(c9, IntVec{Int(2), Int(2), Int(1)})));
  CHECK_FALSE(is_unit_twist(make_twist(c9, IntVec{Int(6), Int(1), Int(1)})));
  Twist a = make_twist(c9, IntVec{Int(2), Int(1), Int(1)});
  Twist b = make_twist(c9, IntVec{Int(7), Int(1), Int(1)});
  Twist c = make_twist(c9, IntVec{Int(4), Int(1), Int(1)});
  CHECK(equivalent(a, b));
  CHECK(equivalent(b, a));
  CHECK_FALSE(equivalent(a, c));
  CHECK(equivalent(multiply_twists(a, a), c));
}

TEST_CASE("shift and negation witnesses are verified isomorphisms") {
  auto c9 = subgroup_lattice(make_group({9}));
  Twist a = make_twist(c9, IntVec{Int(2), Int(2), Int(1)});
  MackeyMorphism shift = elementary_shift_iso(a, 0);
  CHECK(is_isomorphism(shift));
  CHECK(shift.target.resMaps[2][0].at(0, 2) != a.value[0] * a.value[1]);  // twist moved
  MackeyMorphism neg = negate_iso(a, 1);
  CHECK(is_isomorphism(neg));
  auto s = klein();
  CHECK(is_isomorphism(elementary_shift_iso(s.alpha, s.D)));
  CHECK(is_isomorphism(negate_iso(s.alpha, s.e)));
  CHECK_THROWS_AS(elementary_shift_iso(a, c9->top()), InvalidInputError);
}

TEST_CASE("witness_iso composes shifts and negations across components") {
  auto c9 = subgroup_lattice(make_group({9}));
  Twist a = make_twist(c9, IntVec{Int(2), Int(1), Int(1)});
  Twist b = make_twist(c9, IntVec{Int(7), Int(1), Int(1)});
  auto w = witness_iso(a, b);
  REQUIRE(w.has_value());
  CHECK(is_isomorphism(*w));
  CHECK_FALSE(witness_iso(a, make_twist(c9, IntVec{Int(4), Int(1), Int(1)})).has_value());
  // multi-component walk: shift both components of a C_12 twist far away
  auto c12 = subgroup_lattice(make_group({12}));
  IntVec va(c12->size(), 1), vb(c12->size(), 1);
  va[0] = 5;
  vb[0] = -31;  // -31 = 5 - 3 * 12, so equivalent mod [G:e] = 12
  for (int h = 1; h + 1 < c12->size(); ++h) {
    long m = c12->indexOf(h, c12->top());
    if (m > 2) {
      vb[h] = 1 + 3 * m;
      break;
    }
  }
  auto w2 = witness_iso(make_twist(c12, va), make_twist(c12, vb));
  REQUIRE(w2.has_value());
  CHECK(is_isomorphism(*w2));
  // identity case
  auto w3 = witness_iso(make_twist(c9, IntVec{Int(4), Int(4), Int(1)}),
                        make_twist(c9, IntVec{Int(4), Int(4), Int(1)}));
  REQUIRE(w3.has_value());
  for (const auto& comp : w3->comp) CHECK(comp.isIdentity());
}

TEST_CASE("tres matrices compose transitively") {
  auto s = klein();
  for (int k : {s.L, s.D, s.R})
    CHECK(tres_matrix(s.alpha, k, s.e) * tres_matrix(s.alpha, s.K, k) ==
          tres_matrix(s.alpha, s.K, s.e));
}
