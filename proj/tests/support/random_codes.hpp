#pragma once

// Random valid codes built by conjugating the trivial code through a random
// Clifford gate sequence: commutation, independence and involution properties
// hold by construction, and signed generators appear naturally.

#include <random>
#include <span>

#include "qec/circuit.hpp"
#include "qec/code.hpp"

namespace qec::testsupport {

struct RandomStabilizer {
  StabilizerCode code;
  LogicalOperators logicals;
};

inline std::vector<Gate> random_clifford_gates(std::mt19937& rng, int n, int count) {
  std::vector<Gate> gates;
  std::uniform_int_distribution<int> kind(0, 2), qubit(0, n - 1);
  for (int i = 0; i < count; ++i) {
    int q = qubit(rng);
    switch (kind(rng)) {
      case 0: gates.push_back(Gate::h(q)); break;
      case 1: gates.push_back(Gate::p(q)); break;
      default: {
        if (n < 2) { gates.push_back(Gate::h(q)); break; }
        int t = qubit(rng);
        while (t == q) t = qubit(rng);
        gates.push_back(Gate::cnot(q, t));
      }
    }
  }
  return gates;
}

inline PauliWord unit_z(int n, int q) {
  PauliWord w(n);
  w.z[q] = 1;
  return w;
}

inline PauliWord unit_x(int n, int q) {
  PauliWord w(n);
  w.x[q] = 1;
  return w;
}

inline RandomStabilizer random_stabilizer_code(std::mt19937& rng, int n, int k) {
  auto gates = random_clifford_gates(rng, n, 4 * n * n);
  std::span<const Gate> gs(gates);
  std::vector<PauliWord> gens;
  for (int i = 0; i < n - k; ++i) gens.push_back(conjugate_through(unit_z(n, i), gs));
  LogicalOperators ops;
  for (int j = 0; j < k; ++j) {
    ops.zbar.push_back(conjugate_through(unit_z(n, n - k + j), gs));
    ops.xbar.push_back(conjugate_through(unit_x(n, n - k + j), gs));
  }
  return {StabilizerCode(n, k, gens), ops};
}

inline SubsystemCode random_subsystem_code(std::mt19937& rng, int n, int k, int r) {
  auto gates = random_clifford_gates(rng, n, 4 * n * n);
  std::span<const Gate> gs(gates);
  int s = n - k - r;
  SubsystemCode code;
  code.n = n;
  code.k = k;
  code.r = r;
  for (int i = 0; i < s; ++i) code.stabilizer.push_back(conjugate_through(unit_z(n, i), gs));
  for (int i = 0; i < r; ++i) {
    code.gauge_z.push_back(conjugate_through(unit_z(n, s + i), gs));
    code.gauge_x.push_back(conjugate_through(unit_x(n, s + i), gs));
  }
  code.validate();
  return code;
}

}  // namespace qec::testsupport
