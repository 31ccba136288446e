#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qec/code.hpp"

namespace qec {

enum class GateKind { H, P, X, Z, CNOT, CPauli };
enum class PauliLetter { X, Y, Z };

/*
 * Gate set {H, P, X, Z, CNOT, controlled-Pauli}.  Controlled-Pauli letters use
 * the same real convention as PauliWord: the Y target applies XZ = [[0,-1],[1,0]],
 * matching the X^a Z^b boxes of the standard-form encoder.  Qubits are 0-based
 * in memory and 1-based in the text format.
 */
struct Gate {
  GateKind kind;
  int q0 = -1;                          // target (1q) or control (2q)
  int q1 = -1;                          // target for 2q kinds
  PauliLetter letter = PauliLetter::X;  // CPauli only

  static Gate h(int q) { return {GateKind::H, q}; }
  static Gate p(int q) { return {GateKind::P, q}; }
  static Gate x(int q) { return {GateKind::X, q}; }
  static Gate z(int q) { return {GateKind::Z, q}; }
  static Gate cnot(int c, int t) { return {GateKind::CNOT, c, t}; }
  static Gate cpauli(int c, int t, PauliLetter l) { return {GateKind::CPauli, c, t, l}; }

  bool operator==(const Gate&) const = default;
};

enum class WireRole { Zero, Gauge, Message };

struct Circuit {
  int n = 0;
  std::vector<Gate> gates;
  std::vector<WireRole> roles;    // size n
  std::vector<int> message_wires; // wire of logical qubit j, in logical order
  std::vector<int> gauge_wires;   // wire of gauge qubit i, in gauge order
  bool gauge_free = false;        // false: gauge wires pledged |0> (std-form methods)

  explicit Circuit(int n_ = 0) : n(n_), roles(n_, WireRole::Zero) {}

  void set_roles_from_lists();
  void validate() const;
  bool operator==(const Circuit&) const = default;
};

// Exact Clifford action U w U^dagger for a single gate / a gate sequence,
// phases included.  CPauli-Y is conjugated as CX o CZ (C[XZ] = C[X]C[Z]).
PauliWord conjugate_through(const PauliWord& w, const Gate& g);
PauliWord conjugate_through(PauliWord w, std::span<const Gate> gates);

// The logical operators a circuit realizes: pullbacks U Z_w U^dagger and
// U X_w U^dagger over its message wires.
LogicalOperators realized_logicals(const Circuit& c);

/*
 * Removes diagonal actions that provably hit a wire still in |0>: plain Z
 * gates, controlled-Z targets, and the Z half of a controlled-Y (which then
 * degrades to CNOT).  Gauge wires count as |0> only when the layout pledges
 * them to zero.
 */
Circuit elide_redundant_z(const Circuit& c);

// Tracks which wires are provably still |0>; shared by the elision pass and
// the gate-bound repair search.
struct ElisionState {
  std::vector<bool> zero;

  static ElisionState from_layout(const Circuit& c);

  // Applies one gate: returns the gate to keep (possibly rewritten CY->CX) or
  // nullopt when it acts trivially on the current state.
  std::optional<Gate> step(const Gate& g);
};

struct GateReport {
  int h = 0, p = 0, x = 0, z = 0, cnot = 0, cpauli = 0;
  int two_qubit = 0;
  bool bound_ok = false;  // 2*two_qubit <= s'(2n-1-k-s') + 2k(n-k-s'), s' = h
  std::string to_text() const;
};
GateReport gate_report(const Circuit& c);

// Circuit file:  header `circuit n=<int>`, layout comments
// `# wire <q> = zero|gauge|message`, optional `# gauge = free|zero`,
// then one gate per line.
std::string format_circuit_file(const Circuit& c);
Circuit parse_circuit_file(std::istream& in);
Circuit load_circuit_file(const std::string& path);

}  // namespace qec
