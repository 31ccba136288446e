#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "qec/check_matrix.hpp"

namespace qec {

struct LogicalOperators {
  std::vector<PauliWord> xbar, zbar;
  int k() const { return static_cast<int>(xbar.size()); }
};

// [[n,k]] stabilizer code: n-k independent, mutually commuting involutions
// whose group avoids -I.
struct StabilizerCode {
  int n = 0;
  int k = 0;
  CheckMatrix generators;

  StabilizerCode() = default;
  StabilizerCode(int n_, int k_, std::vector<PauliWord> gens);

  void validate() const;
};

// [[n,k,r]] subsystem code.  stabilizer holds z_1..z_s (s = n-k-r); gauge_z
// and gauge_x hold the r hyperbolic pairs (z_{s+i}, x_{s+i}).
struct SubsystemCode {
  int n = 0;
  int k = 0;
  int r = 0;
  std::vector<PauliWord> stabilizer;
  std::vector<PauliWord> gauge_z;
  std::vector<PauliWord> gauge_x;
  std::optional<LogicalOperators> declared_logicals;

  int s() const { return n - k - r; }

  void validate() const;

  // All gauge-group generator rows: stabilizer + gauge_z + gauge_x.
  std::vector<PauliWord> gauge_group_rows() const;

  // The [[n,k+r]] stabilizer code defined by S alone (Lemma on gauge
  // structure: S fixes a 2^{k+r}-dimensional space).
  StabilizerCode stabilizer_code_of_s() const;
};

/*
 * Column-permuted block form
 *   [ I_{s'} A1 A2 | B  0        C ]
 *   [ 0      0  0  | D  I_{m-s'} E ]
 * with m = n-k rows.  With relaxed=true the leading X block is upper
 * triangular with unit diagonal instead of exact identity.
 */
struct StandardForm {
  CheckMatrix matrix;
  int n = 0;
  int k = 0;
  int s_prime = 0;
  bool relaxed = false;

  int m() const { return n - k; }
  int middle() const { return n - k - s_prime; }

  // Named block views (copies), indexed [row][col] within the block.
  std::vector<Bits> block_a1() const;
  std::vector<Bits> block_a2() const;
  std::vector<Bits> block_b() const;
  std::vector<Bits> block_c() const;
  std::vector<Bits> block_d() const;
  std::vector<Bits> block_e() const;
};

StandardForm standard_form(const StabilizerCode& code, bool relaxed = false);

// Eq.-style read-off of the k encoded operator pairs, un-permuted to original
// qubit labels.  Requires a strict (non-relaxed) form.
LogicalOperators derive_logical_operators(const StandardForm& sf, int k);

// Primary generators carry X content (rows 0..s'-1 of the standard form).
std::pair<std::vector<int>, std::vector<int>> classify_generators(const StandardForm& sf);

struct AugmentChoice {
  enum Kind { GaugeZ, GaugeX, Explicit } kind = GaugeZ;
  std::vector<PauliWord> rows;  // for Explicit

  static AugmentChoice gauge_z() { return {GaugeZ, {}}; }
  static AugmentChoice gauge_x() { return {GaugeX, {}}; }
  static AugmentChoice explicit_rows(std::vector<PauliWord> r) {
    return {Explicit, std::move(r)};
  }
};

// S_A = <S, chosen gauge rows>: an [[n,k]] stabilizer code.
StabilizerCode augmented_stabilizer(const SubsystemCode& code, const AugmentChoice& choice);

// Symplectic Gram-Schmidt over the span of raw generators: the radical
// becomes the stabilizer, the rest is paired into hyperbolic (x,z) pairs.
SubsystemCode canonicalize_gauge(const std::vector<PauliWord>& raw_generators,
                                 int n, int k, int r);

// Adjusts Eq.-derived logicals (centralize S_A) by gauge-z factors so they
// commute with the whole gauge group; eigenvalues on S_A-stabilized states
// are unchanged.
LogicalOperators gauge_commuting_logicals(const SubsystemCode& code,
                                          const LogicalOperators& raw);

// Minimum-weight representative of word * <group rows> (ties: lexicographically
// smallest bit pattern).  Enumerates the coset; guarded to <= 2^20 elements.
PauliWord reduce_to_min_weight(const PauliWord& word, const std::vector<PauliWord>& group_rows);

// Code specification file:
//   code n=<int> k=<int> r=<int>
//   [stabilizer] / [gauge_x] / [gauge_z] sections, one Pauli string per line.
SubsystemCode parse_code_file(std::istream& in);
SubsystemCode load_code_file(const std::string& path);
std::string format_code_file(const SubsystemCode& code);

}  // namespace qec
