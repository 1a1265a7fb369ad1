#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "equimack/agmod.hpp"

using namespace equimack;

TEST_CASE("evaluating a twisted functor at the top level gives the twisted module") {
  for (auto factors : std::vector<std::vector<long>>{{4}, {9}, {2, 2}, {6}}) {
    auto lat = subgroup_lattice(make_group(factors));
    IntVec v(lat->size(), 1);
    v[0] = 1 + 2 * int(lat->group.order);
    Twist a = make_twist(lat, v);
    AGModule fromFunctor = eval_gg(twisted_burnside(a));
    AGModule direct = twisted_module(a);
    REQUIRE(fromFunctor.rank == direct.rank);
    for (int h = 0; h < lat->size(); ++h) CHECK(fromFunctor.action[h] == direct.action[h]);
    CHECK(check_module_axioms(direct).ok());
  }
}

TEST_CASE("module axioms notice corrupted actions") {
  auto lat = subgroup_lattice(make_group({4}));
  AGModule m = twisted_module(unit_twist(lat));
  CHECK(check_module_axioms(m).ok());
  m.action[0].at(0, 0) += 1;
  CHECK_FALSE(check_module_axioms(m).ok());
  AGModule m2 = twisted_module(unit_twist(lat));
  m2.action[lat->top()] = m2.action[lat->top()] * Int(2);  // breaks the unit law
  CHECK_FALSE(check_module_axioms(m2).ok());
}

TEST_CASE("structure constants of the untwisted module") {
  // G/H acting on G/J gives [G:HJ] G/(H cap J); over C_4 the middle subgroup
  // squares to 2 copies of itself
  auto lat = subgroup_lattice(make_group({4}));
  AGModule m = twisted_module(unit_twist(lat));
  int mid = 1;
  REQUIRE(lat->subs[mid].order == 2);
  IntVec col = m.action[mid].column(mid);
  CHECK(col == IntVec{Int(0), Int(2), Int(0)});
  CHECK(m.action[0].column(0) == IntVec{Int(4), Int(0), Int(0)});
  CHECK(m.action[lat->top()].isIdentity());
}

TEST_CASE("direct sums of modules") {
  auto lat = subgroup_lattice(make_group({9}));
  AGModule a = twisted_module(unit_twist(lat));
  AGModule s = module_direct_sum(a, a);
  CHECK(s.rank == 2 * a.rank);
  CHECK(check_module_axioms(s).ok());
  CHECK(int(s.basis.size()) == s.rank);
}

TEST_CASE("tensoring the free module back up recovers the Burnside functor") {
  for (auto factors : std::vector<std::vector<long>>{{4}, {2, 2}, {6}}) {
    auto lat = subgroup_lattice(make_group(factors));
    TensorUpResult t = tensor_up(twisted_module(unit_twist(lat)));
    CHECK(check_axioms(t.functor).ok());
    MackeyFunctor b = burnside_mackey(lat);
    for (int h = 0; h < lat->size(); ++h) CHECK(t.functor.rank(h) == b.rank(h));
  }
}

TEST_CASE("tensoring up a twisted module keeps the axioms") {
  auto c9 = subgroup_lattice(make_group({9}));
  Twist a = make_twist(c9, IntVec{Int(2), Int(1), Int(1)});
  TensorUpResult t = tensor_up(twisted_module(a));
  CHECK(check_axioms(t.functor).ok());
  for (int h = 0; h < c9->size(); ++h)
    CHECK(t.functor.rank(h) == int(c9->below[h].size()));
}

TEST_CASE("the zero module tensors up to the zero functor") {
  auto lat = subgroup_lattice(make_group({4}));
  AGModule z{lat, 0, {}, {}};
  for (int h = 0; h < lat->size(); ++h) z.action.push_back(IntMatrix(0, 0));
  TensorUpResult t = tensor_up(z);
  for (int h = 0; h < lat->size(); ++h) CHECK(t.functor.rank(h) == 0);
}

TEST_CASE("the counit of the adjunction is an isomorphism") {
  auto c4 = subgroup_lattice(make_group({4}));
  auto c9 = subgroup_lattice(make_group({9}));
  CHECK(check_counit(twisted_module(unit_twist(c4))));
  CHECK(check_counit(twisted_module(make_twist(c4, IntVec{Int(5), Int(1), Int(1)}))));
  CHECK(check_counit(twisted_module(make_twist(c9, IntVec{Int(2), Int(1), Int(1)}))));
  AGModule a = twisted_module(unit_twist(c4));
  CHECK(check_counit(module_direct_sum(a, a)));
}
