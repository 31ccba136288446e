#pragma once

#include "qec/circuit.hpp"
#include "qec/code.hpp"

namespace qec {

struct SynthOptions {
  bool elide = true;  // redundant-Z elision pass
};

struct SynthResult {
  Circuit circuit;
  LogicalOperators logicals;  // what the circuit realizes; commutes with the gauge group
  StandardForm sf;            // the standard form the seeds were read from
};

/*
 * Lemma-style standard form encoder: seed CNOT fans for the encoded X
 * operators (ascending j), then one block per primary generator in the order
 * G_{s'}, ..., G_1 (H, then P^{phase_exp} on the pivot, then the controlled
 * X^a Z^b fan).  A trailing X/Z layer repairs generator signs when the exact
 * phase bookkeeping demands it; for phase-free codes it is empty.
 */
Circuit synthesize_stabilizer_encoder(const StandardForm& sf, const LogicalOperators& logical,
                                      const SynthOptions& opts = {});

// Algorithm "standard form method 1": encoder of S_A's standard form; all
// non-message wires must be |0>.  Layout tags the first min(r, middle) middle
// wires as (must-be-zero) gauge wires.
SynthResult synthesize_subsystem_m1(const SubsystemCode& code,
                                    const AugmentChoice& choice = AugmentChoice::gauge_z(),
                                    const SynthOptions& opts = {});

// Algorithm "standard form method 2": primary generators from S's own
// standard form (pi_1), encoded operators from S_A's standard form computed
// in pi_1's frame (pi_2 stays off the first s' columns).
SynthResult synthesize_subsystem_m2(const SubsystemCode& code,
                                    const AugmentChoice& choice = AugmentChoice::gauge_z(),
                                    const SynthOptions& opts = {});

}  // namespace qec
