#pragma once

#include "qec/circuit.hpp"
#include "qec/code.hpp"
#include "qec/report.hpp"

namespace qec {

// Gate actions on a whole check matrix under conjugation (exact phases).
// Qubit indices are 0-based here; the text formats are 1-based.
CheckMatrix conj_h(const CheckMatrix& m, int qubit);
CheckMatrix conj_p(const CheckMatrix& m, int qubit);
CheckMatrix conj_cnot(const CheckMatrix& m, int control, int target);

struct ClearResult {
  CheckMatrix matrix;
  std::vector<Gate> gates;
};

// Per-qubit (0,1)->H, (1,1)->P pass leaving the row in (a|0) form.
ClearResult clear_z_part(const CheckMatrix& m, int row);

// CNOT fan from the pivot clearing every other X entry of the row; requires
// the row in (a|0) form with a_pivot = 1.
ClearResult clear_x_to_unit(const CheckMatrix& m, int row, int pivot);

struct TranscriptStep {
  std::string label;
  std::vector<Gate> gates;  // forward (decoding) direction
  CheckMatrix after;
};

struct ConjOptions {
  // Skip the global-step H on a gauge pivot whose partner row is already the
  // matching Z unit (the pair lands with swapped x/z roles).  Off reproduces
  // the literal gate sequence of the worked example.
  bool trivial_h_elide = true;
};

struct ConjResult {
  Circuit encoder;               // reversed transcript, gates inverted
  std::vector<Gate> transcript;  // forward direction
  std::vector<TranscriptStep> steps;
  LogicalOperators logicals;     // exact pullbacks U Z_w U^dagger / U X_w U^dagger
};

/*
 * Conjugation method: transform [S; G_Z; G_X] to the trivial form (stabilizer
 * rows -> Z units, gauge pairs -> X/Z units on one wire each), then reverse
 * the transcript.  Input layout: stabilizer pivots |0>, gauge pivots free,
 * remaining wires carry the message.
 */
ConjResult synthesize_conjugation_encoder(const SubsystemCode& code,
                                          const ConjOptions& opts = {});

std::string format_transcript(const ConjResult& res, int n);

// For each computational-basis gauge initialization and basis message: the
// output must stay stabilized by S and keep the same logical-Z eigenvalues it
// had with gauge wires at |0>.
Report gauge_robustness_check(const SubsystemCode& code, const Circuit& c);

}  // namespace qec
