#pragma once

#include <complex>
#include <string>
#include <vector>

#include "qec/circuit.hpp"

namespace qec {

using cplx = std::complex<double>;

inline constexpr int kDefaultMaxQubits = 12;

/*
 * Dense 2^n state.  Basis index packs qubit 1 as the most significant bit, so
 * the ket |0101> of the paper sits at index 0b0101.
 */
struct StateVector {
  int n = 0;
  std::vector<cplx> amp;

  StateVector() = default;
  explicit StateVector(int n_, int max_qubits = kDefaultMaxQubits);

  static StateVector basis(int n, uint64_t index, int max_qubits = kDefaultMaxQubits);

  // Product state from a string over {0,1,+,-}, qubit 1 first.
  static StateVector product(const std::string& spec, int max_qubits = kDefaultMaxQubits);

  uint64_t dim() const { return amp.size(); }
  double norm() const;
  void normalize();

  // Bit of qubit q (0-based) within basis index idx.
  bool bit(uint64_t idx, int q) const { return (idx >> (n - 1 - q)) & 1; }
  uint64_t mask(int q) const { return uint64_t(1) << (n - 1 - q); }
};

void apply_gate_inplace(StateVector& s, const Gate& g);
StateVector apply_gate(const StateVector& s, const Gate& g);
StateVector apply_circuit(const StateVector& s, const Circuit& c);

// Exact action of i^phase * prod X^x Z^z; no normalization needed.
StateVector apply_pauli(const StateVector& s, const PauliWord& p);

// (1/|S|) sum_{M in S} M |s>, enumerating subset products with exact phases.
// Throws if -I shows up in the enumeration (invalid code).
StateVector stabilizer_projector_apply(const StateVector& s, const StabilizerCode& code);

bool is_stabilized(const StateVector& s, const PauliWord& p, double tol = 1e-9);

double inner_product_abs(const StateVector& a, const StateVector& b);
cplx inner_product(const StateVector& a, const StateVector& b);
double distance(const StateVector& a, const StateVector& b);

// Debug dump: one `<bitstring> <re> <im>` line per amplitude above cutoff.
std::string dump_amplitudes(const StateVector& s, double cutoff = 1e-12);

}  // namespace qec
