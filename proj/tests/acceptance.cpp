// End-to-end acceptance sweep: one pass/fail line per criterion, exit 1 if
// anything fails. Everything here is exact integer arithmetic; randomized
// parts use fixed seeds.
#include <iostream>
#include <numeric>
#include <random>

#include "equimack/agmod.hpp"
#include "equimack/boxhom.hpp"
#include "equimack/changegroups.hpp"
#include "equimack/picard.hpp"

using namespace equimack;

namespace {

std::vector<std::vector<long>> allAbelianUpTo16() {
  return {{2},    {3},       {4},    {2, 2}, {5},    {6},    {7},       {8},
          {2, 4}, {2, 2, 2}, {9},    {3, 3}, {10},   {11},   {12},      {2, 6},
          {13},   {14},      {15},   {16},   {2, 8}, {4, 4}, {2, 2, 4}, {2, 2, 2, 2}};
}

long picardComponent(long m) {
  if (m <= 2) return 1;
  long units = 0;
  for (long x = 1; x < m; ++x)
    if (std::gcd(x, m) == 1) ++units;
  return units / 2;
}

bool criterion1() {
  for (long p : {2L, 3L, 5L}) {
    auto lat = subgroup_lattice(make_group({p}));
    MackeyFunctor m = burnside_mackey(lat);
    IntMatrix res(1, 2), tr(2, 1);
    res.at(0, 0) = p;
    res.at(0, 1) = 1;
    tr.at(0, 0) = 1;
    if (m.resMaps[1][0] != res || m.trMaps[1][0] != tr) return false;
  }
  auto lat = subgroup_lattice(make_group({2, 2}));
  IntVec v(5, 1);
  std::vector<int> order2;
  for (int h = 0; h < 5; ++h)
    if (lat->subs[h].order == 2) {
      v[h] = 3;
      order2.push_back(h);
    }
  MackeyFunctor m = twisted_burnside(make_twist(lat, v));
  int top = lat->top();
  for (int t : order2) {
    // rows indexed (e, T), columns by the canonical basis at the top
    IntMatrix expected(2, 5);
    expected.at(0, lat->posInBelow[top][0]) = 2;
    for (int other : order2)
      if (other != t) expected.at(0, lat->posInBelow[top][other]) = 9;
    expected.at(1, lat->posInBelow[top][t]) = 2;
    expected.at(1, lat->posInBelow[top][top]) = 3;
    if (m.resMaps[top][t] != expected) return false;
    IntMatrix row(1, 2);
    row.at(0, 0) = 2;
    row.at(0, 1) = 9;
    if (m.resMaps[t][0] != row) return false;
  }
  return true;
}

bool criterion2() {
  std::mt19937 rng(20240815);
  std::uniform_int_distribution<int> entry(-9, 8);
  auto sampleEntry = [&] {
    int x = entry(rng);
    return x >= 0 ? x + 1 : x;  // [-9,9] without 0
  };
  int twistCount = 0;
  long marksProducts = 0;
  for (const auto& factors : allAbelianUpTo16()) {
    auto lat = subgroup_lattice(make_group(factors));
    if (!check_axioms(burnside_mackey(lat)).ok()) return false;
    int perGroup = lat->group.order <= 9 ? 6 : (lat->group.order <= 15 ? 4 : 2);
    for (int t = 0; t < perGroup; ++t) {
      IntVec v(lat->size(), 1);
      for (int h = 0; h + 1 < lat->size(); ++h) v[h] = sampleEntry();
      if (!check_axioms(twisted_burnside(make_twist(lat, v))).ok()) return false;
      ++twistCount;
    }
    // marks multiplicativity on random products at every level
    std::uniform_int_distribution<int> coeff(-5, 5);
    for (int h = 0; h < lat->size(); ++h)
      for (int trial = 0; trial < 6; ++trial) {
        int n = int(lat->below[h].size());
        BurnsideElement x{lat, h, IntVec(n)}, y{lat, h, IntVec(n)};
        for (int i = 0; i < n; ++i) {
          x.coeff[i] = coeff(rng);
          y.coeff[i] = coeff(rng);
        }
        IntVec mx = marks(x), my = marks(y), mxy = marks(multiply(x, y));
        for (int i = 0; i < n; ++i)
          if (mxy[i] != mx[i] * my[i]) return false;
        ++marksProducts;
      }
  }
  return twistCount >= 100 && marksProducts >= 1000;
}

bool criterion3() {
  for (const auto& factors :
       std::vector<std::vector<long>>{{4}, {5}, {8}, {9}, {6}, {2, 2}}) {
    auto lat = subgroup_lattice(make_group(factors));
    PicardGroup pic = picard_group(lat);
    for (const auto& ca : pic.classes)
      for (const auto& cb : pic.classes) {
        const Twist& a = ca.representative;
        const Twist& b = cb.representative;
        if (!verify_box_law(a, b, default_probe_family(a, b, 20240815)).ok()) return false;
      }
    DressPairing d = dress_pairing_box(unit_twist(lat), unit_twist(lat));
    for (int h = 0; h < lat->size(); ++h)
      if (d.theta[h] != multiplication_matrix(lat, h)) return false;
  }
  return true;
}

bool criterion4() {
  for (const auto& factors : allAbelianUpTo16()) {
    auto lat = subgroup_lattice(make_group(factors));
    Int expected = 1;
    for (int h = 0; h < lat->size(); ++h)
      expected *= picardComponent(lat->indexOf(h, lat->top()));
    if (picard_order(lat) != expected) return false;
  }
  auto order = [](std::vector<long> f) {
    return picard_order(subgroup_lattice(make_group(f)));
  };
  return order({3}) == 1 && order({5}) == 2 && order({7}) == 3 && order({8}) == 2 &&
         order({9}) == 3 && order({2, 2}) == 1 && order({4}) == 1;
}

bool criterion5() {
  for (const auto& factors :
       std::vector<std::vector<long>>{{4}, {5}, {8}, {9}, {6}, {2, 2}}) {
    auto lat = subgroup_lattice(make_group(factors));
    long bound = lat->group.order * lat->group.order;
    if (!verify_classification(lat, bound).ok()) return false;
  }
  return true;
}

bool criterion6() {
  for (const auto& factors : std::vector<std::vector<long>>{{4}, {8}, {9}, {6}, {2, 2}}) {
    auto lat = subgroup_lattice(make_group(factors));
    for (int n = 1; n + 1 < lat->size(); ++n) {
      if (!verify_splitting(lat, n).ok()) return false;
      auto q = quotient(lat, n);
      PicardGroup quotPic = picard_group(q.quotLattice);
      for (const auto& c : quotPic.classes) {
        Twist round = phi_twist(qind_twisted(c.representative, q), q);
        if (normalize(round).value != c.representative.value) return false;
      }
    }
  }
  return true;
}

bool criterion7() {
  for (long p : {2L, 3L, 5L}) {
    auto lat = subgroup_lattice(make_group({p}));
    auto gfp = geometric_fixed_points(burnside_mackey(lat), quotient(lat, 1));
    if (gfp.phi.rank(0) != 1) return false;
  }
  for (const auto& factors : std::vector<std::vector<long>>{{4}, {9}, {2, 2}}) {
    auto lat = subgroup_lattice(make_group(factors));
    IntVec v(lat->size(), 1);
    v[0] = 1 + 2 * int(lat->group.order);
    for (int h = 1; h + 1 < lat->size(); ++h) v[h] = -1;
    Twist a = make_twist(lat, v);
    for (int n = 1; n + 1 < lat->size(); ++n) {
      MackeyMorphism w = phi_twist_witness(a, quotient(lat, n));
      if (!is_isomorphism(w)) return false;
    }
  }
  return true;
}

bool criterion8() {
  for (const auto& factors : std::vector<std::vector<long>>{{4}, {9}}) {
    auto lat = subgroup_lattice(make_group(factors));
    PicardGroup pic = picard_group(lat);
    for (const auto& c : pic.classes) {
      const Twist& a = c.representative;
      AGModule fromFunctor = eval_gg(twisted_burnside(a));
      AGModule direct = twisted_module(a);
      if (fromFunctor.rank != direct.rank) return false;
      for (int h = 0; h < lat->size(); ++h)
        if (fromFunctor.action[h] != direct.action[h]) return false;
      if (!check_module_axioms(direct).ok()) return false;
      if (!check_counit(direct)) return false;
    }
    if (!check_counit(twisted_module(unit_twist(lat)))) return false;
  }
  return true;
}

}  // namespace

int main() {
  struct Criterion {
    const char* what;
    bool (*check)();
  };
  Criterion criteria[] = {
      {"1: exact Lewis diagrams for A over C_p and the twisted Klein example", criterion1},
      {"2: Mackey axioms for A and sampled A^a over all abelian |G| <= 16, marks multiplicativity",
       criterion2},
      {"3: box product universal property over unit-twist class pairs and probe families",
       criterion3},
      {"4: Picard orders match the closed form with spot values", criterion4},
      {"5: classification by witnesses and bounded refutations", criterion5},
      {"6: Picard splitting along every proper quotient, phi after qind is the identity",
       criterion6},
      {"7: geometric fixed points of plain and twisted Burnside functors", criterion7},
      {"8: module-side evaluation, axioms, and counit isomorphisms", criterion8},
  };
  bool allOk = true;
  for (const auto& c : criteria) {
    bool ok = false;
    try {
      ok = c.check();
    } catch (const std::exception& e) {
      std::cout << "FAIL " << c.what << " (exception: " << e.what() << ")\n";
      allOk = false;
      continue;
    }
    std::cout << (ok ? "PASS " : "FAIL ") << c.what << "\n";
    if (!ok) allOk = false;
  }
  return allOk ? 0 : 1;
}
