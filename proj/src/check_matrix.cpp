#include "qec/check_matrix.hpp"

#include <algorithm>

namespace qec {

void CheckMatrix::swap_columns(int a, int b) {
  if (a == b) return;
  for (auto& r : rows) {
    std::swap(r.x[a], r.x[b]);
    std::swap(r.z[a], r.z[b]);
  }
  std::swap(perm[a], perm[b]);
}

PauliWord CheckMatrix::unpermuted(const PauliWord& row) const {
  PauliWord out(n);
  out.phase_exp = row.phase_exp;
  for (int c = 0; c < n; ++c) {
    out.x[perm[c]] = row.x[c];
    out.z[perm[c]] = row.z[c];
  }
  return out;
}

PauliWord CheckMatrix::permuted(const PauliWord& word) const {
  PauliWord out(n);
  out.phase_exp = word.phase_exp;
  for (int c = 0; c < n; ++c) {
    out.x[c] = word.x[perm[c]];
    out.z[c] = word.z[perm[c]];
  }
  return out;
}

bool CheckMatrix::identity_perm() const {
  for (int i = 0; i < n; ++i)
    if (perm[i] != i) return false;
  return true;
}

static const Bits& block_bits(const PauliWord& row, Block b) {
  return b == Block::X ? row.x : row.z;
}

int rref_block_inplace(CheckMatrix& m, int row_begin, int row_end, Block block,
                       int col_begin, int col_end, bool full_reduce) {
  if (row_begin < 0 || row_end > m.row_count() || row_begin > row_end ||
      col_begin < 0 || col_end > m.n || col_begin > col_end)
    throw ValidationError("rref_block: range out of bounds");
  int rank = 0;
  int row = row_begin;
  int col = col_begin;
  while (row < row_end && col < col_end) {
    // Find a pivot in column `col` at or below `row`; if the column is dead,
    // pull in the next live column (simultaneous X/Z swap = qubit relabel).
    int prow = -1;
    for (int c = col; c < col_end && prow < 0; ++c) {
      for (int r = row; r < row_end; ++r) {
        if (block_bits(m.rows[r], block)[c]) {
          if (c != col) m.swap_columns(col, c);
          prow = r;
          break;
        }
      }
    }
    if (prow < 0) break;
    std::swap(m.rows[row], m.rows[prow]);
    int lo = full_reduce ? row_begin : row + 1;
    for (int r = lo; r < row_end; ++r) {
      if (r != row && block_bits(m.rows[r], block)[col])
        m.rows[r] = multiply(m.rows[r], m.rows[row]);
    }
    ++rank;
    ++row;
    ++col;
  }
  return rank;
}

RrefResult rref_block(const CheckMatrix& m, int row_begin, int row_end, Block block,
                      int col_begin, int col_end, bool full_reduce) {
  RrefResult res{m, 0};
  res.rank = rref_block_inplace(res.matrix, row_begin, row_end, block, col_begin,
                                col_end, full_reduce);
  return res;
}

std::vector<Bits> symplectic_rows(const std::vector<PauliWord>& rows) {
  std::vector<Bits> out;
  out.reserve(rows.size());
  for (const auto& r : rows) out.push_back(to_symplectic(r));
  return out;
}

std::vector<Bits> symplectic_rows(const CheckMatrix& m) {
  return symplectic_rows(m.rows);
}

}  // namespace qec
