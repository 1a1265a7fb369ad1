#pragma once

#include "equimack/twists.hpp"

namespace equimack {

/// Module over the Burnside ring of the whole group, presented by one action
/// matrix per basis element G/H of the ring.
struct AGModule {
  LatticePtr lat;
  int rank = 0;
  std::vector<std::string> basis;
  std::vector<IntMatrix> action;  // action[h]: the action of G/H
};

/// The twisted Burnside module: basis G/J, with G/H acting by
/// (r_{J cap H} / r_J) * [G:JH] * G/(J cap H).
AGModule twisted_module(const Twist& a);

/// Unit law plus action[H] action[K] = [G:HK] action[H cap K] for all pairs
/// (the expansion of G/H * G/K in the Burnside ring).
ValidationReport check_module_axioms(const AGModule& m);

/// Evaluation at the top level: G/H acts by tr o res.
AGModule eval_gg(const MackeyFunctor& m);

AGModule module_direct_sum(const AGModule& a, const AGModule& b);

/// Levelwise A(H) (x)_{A(G)} M: the integral cokernel of the balancing
/// relations x ring-action (x) id - id (x) module-action, with a free basis
/// chosen by Smith reduction; proj[h] maps A(H) (x) M (Kronecker order:
/// ring index * rank + module index) onto the chosen basis.
struct TensorUpResult {
  MackeyFunctor functor;
  std::vector<IntMatrix> proj;
};

TensorUpResult tensor_up(const AGModule& m);

/// The adjunction round trip: the map v -> proj_G(G/G (x) v) into
/// eval_gg(tensor_up(M)) must be a unimodular module isomorphism.
bool check_counit(const AGModule& m);

}  // namespace equimack
