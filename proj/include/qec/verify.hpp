#pragma once

#include "qec/circuit.hpp"
#include "qec/code.hpp"
#include "qec/report.hpp"
#include "qec/simulator.hpp"

namespace qec {

inline constexpr double kVerifyTol = 1e-9;

struct GaugeSetting {
  enum Mode { Zero, Amplitude } mode = Zero;
  cplx a{1, 0}, b{0, 0};

  static GaugeSetting zero() { return {}; }
  static GaugeSetting amplitude(cplx a_, cplx b_) { return {Amplitude, a_, b_}; }
};

/*
 * Runs the encoder on every basis message and checks, per message:
 *   (1) the output is fixed by every stabilizer generator,
 *   (2) Z-bar_i eigenvalue is (-1)^{alpha_i},
 *   (3) the X-bar_i image verifies as the bit-flipped message (sector check),
 *   (4) outputs for distinct messages are orthogonal.
 * Gauge wires follow the layout pledge; GaugeSetting::Amplitude prepares the
 * encoded gauge qubits in a|0>+b|1> (via the declared gauge x operators) for
 * must-be-zero circuits, or the physical wires for free-gauge circuits.
 */
Report verify_encoder(const SubsystemCode& code, const LogicalOperators& logical,
                      const Circuit& c, const GaugeSetting& gauge = {});

// Logical all-zero test: fixed by the stabilizer and all k logical Zs.
bool logical_zero_check(const StateVector& state, const SubsystemCode& code,
                        const LogicalOperators& logical, double tol = kVerifyTol);

// Encodes the given basis message with the circuit (gauge wires |0>).
StateVector encode_basis_message(const Circuit& c, uint64_t alpha);

/*
 * Synthesizes via methods 1, 2 and conjugation (gauge |0> everywhere), runs
 * verify_encoder with each method's realized logicals, and checks the three
 * 2^k-dimensional encoding spans coincide.  Gate counts are reported.
 */
Report cross_method_consistency(const SubsystemCode& code);

}  // namespace qec
