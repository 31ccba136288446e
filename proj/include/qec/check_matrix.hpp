#pragma once

#include <utility>
#include <vector>

#include "qec/pauli.hpp"

namespace qec {

/*
 * A list of Pauli words viewed as an m x 2n GF(2) matrix in (X|Z) block form,
 * plus the qubit-column permutation accumulated by column swaps.
 *
 * perm[c] is the original (0-based) qubit label currently sitting in column c;
 * a fresh matrix has the identity permutation.  Column swaps relabel qubits,
 * so they always act on the X and Z parts together.
 */
struct CheckMatrix {
  int n = 0;
  std::vector<PauliWord> rows;
  std::vector<int> perm;

  CheckMatrix() = default;
  explicit CheckMatrix(int n_) : n(n_), perm(n_) {
    for (int i = 0; i < n_; ++i) perm[i] = i;
  }
  CheckMatrix(int n_, std::vector<PauliWord> rows_) : CheckMatrix(n_) {
    rows = std::move(rows_);
    for (const auto& r : rows)
      if (r.n != n)
        throw ValidationError("CheckMatrix: row size mismatch");
  }

  int row_count() const { return static_cast<int>(rows.size()); }

  void swap_columns(int a, int b);

  // Re-express a row given in this matrix's column order in original qubit
  // labels (inverts perm).
  PauliWord unpermuted(const PauliWord& row) const;

  // Re-express a word given in original labels in this matrix's column order.
  PauliWord permuted(const PauliWord& word) const;

  bool identity_perm() const;
};

enum class Block { X, Z };

struct RrefResult {
  CheckMatrix matrix;
  int rank = 0;
};

/*
 * Reduced row echelon form of one block, restricted to [row_begin,row_end) x
 * [col_begin,col_end).  Pivots are placed on consecutive columns starting at
 * col_begin; when the expected pivot column is zero in all remaining rows the
 * next nonzero column is swapped in (qubit relabeling, recorded in perm).
 * Row operations are Pauli multiplications, so phases stay exact.  With
 * full_reduce=false only rows below each pivot are cleared (upper-triangular
 * leading block).
 */
RrefResult rref_block(const CheckMatrix& m, int row_begin, int row_end, Block block,
                      int col_begin, int col_end, bool full_reduce = true);

// In-place flavor used by the standard-form and conjugation pipelines.
int rref_block_inplace(CheckMatrix& m, int row_begin, int row_end, Block block,
                       int col_begin, int col_end, bool full_reduce = true);

std::vector<Bits> symplectic_rows(const std::vector<PauliWord>& rows);
std::vector<Bits> symplectic_rows(const CheckMatrix& m);

}  // namespace qec
