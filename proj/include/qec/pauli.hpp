#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace qec {

// Thrown for malformed text inputs (Pauli strings, code files, circuit files).
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Thrown when an input violates a documented precondition or invariant.
struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

using Bits = std::vector<uint8_t>;  // GF(2) vector, one byte per entry

/*
 * An n-qubit Pauli word  i^phase_exp * X^{x_1}Z^{z_1} (x) ... (x) X^{x_n}Z^{z_n}.
 *
 * The per-qubit letter decoding is the real convention
 *   (0,0) -> I, (1,0) -> X, (0,1) -> Z, (1,1) -> Y = XZ,
 * so a word with phase_exp 0 and bits (1|1) is the real rotation XZ.
 * phase_exp is tracked mod 4; the word is an involution iff
 * phase_exp == (number of Y letters) mod 2.
 */
struct PauliWord {
  int n = 0;
  int phase_exp = 0;  // mod 4
  Bits x, z;

  PauliWord() = default;
  explicit PauliWord(int n_) : n(n_), x(n_, 0), z(n_, 0) {}

  static PauliWord identity(int n) { return PauliWord(n); }

  bool is_identity_bits() const;
  int weight() const;           // qubits with a nonzero letter
  int y_count() const;          // qubits with letter Y
  bool is_involution() const { return ((phase_exp & 1) == (y_count() & 1)); }

  bool operator==(const PauliWord&) const = default;
};

// tau and its inverse.  to_symplectic drops the phase.
Bits to_symplectic(const PauliWord& p);
PauliWord from_symplectic(const Bits& v, int phase_exp = 0);

// x_u . z_v + z_u . x_v (mod 2): 0 iff the operators commute.
int symplectic_product(const PauliWord& u, const PauliWord& v);

// Exact group product u*v, phase included (Z^b X^a = (-1)^{ab} X^a Z^b per qubit).
PauliWord multiply(const PauliWord& u, const PauliWord& v);

/*
 * Pauli string grammar: optional sign prefix +, -, +i, -i, then letters
 * from {I,X,Y,Z}.  A letter Y denotes the Hermitian Pauli Y = i*XZ, so
 * parsing adds one factor of i per Y; printing removes it again, which
 * makes parse/print round-trip and keeps string letters standard.
 */
PauliWord parse_pauli(const std::string& s, int expected_n = -1);
std::string to_string(const PauliWord& p);

}  // namespace qec
