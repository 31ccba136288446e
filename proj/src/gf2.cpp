#include "qec/gf2.hpp"

#include <algorithm>

namespace qec {

void xor_into(Bits& dst, const Bits& src) {
  for (size_t i = 0; i < dst.size(); ++i) dst[i] ^= src[i];
}

std::vector<int> gf2_rref(std::vector<Bits>& rows) {
  std::vector<int> pivots;
  if (rows.empty()) return pivots;
  size_t cols = rows[0].size();
  size_t next = 0;
  for (size_t c = 0; c < cols && next < rows.size(); ++c) {
    size_t r = next;
    while (r < rows.size() && !rows[r][c]) ++r;
    if (r == rows.size()) continue;
    std::swap(rows[next], rows[r]);
    for (size_t j = 0; j < rows.size(); ++j)
      if (j != next && rows[j][c]) xor_into(rows[j], rows[next]);
    pivots.push_back(static_cast<int>(c));
    ++next;
  }
  rows.resize(next);
  return pivots;
}

int gf2_rank(std::vector<Bits> rows) {
  return static_cast<int>(gf2_rref(rows).size());
}

std::optional<Bits> gf2_solve(const std::vector<Bits>& basis, const Bits& target) {
  if (basis.empty()) {
    for (auto b : target)
      if (b) return std::nullopt;
    return Bits{};
  }
  size_t m = basis.size(), cols = basis[0].size();
  // Augment each row with an indicator of which inputs it mixes.
  std::vector<Bits> work(m, Bits(cols + m, 0));
  for (size_t i = 0; i < m; ++i) {
    std::copy(basis[i].begin(), basis[i].end(), work[i].begin());
    work[i][cols + i] = 1;
  }
  Bits t(cols + m, 0);
  std::copy(target.begin(), target.end(), t.begin());
  size_t next = 0;
  for (size_t c = 0; c < cols && next < m; ++c) {
    size_t r = next;
    while (r < m && !work[r][c]) ++r;
    if (r == m) continue;
    std::swap(work[next], work[r]);
    for (size_t j = 0; j < m; ++j)
      if (j != next && work[j][c]) xor_into(work[j], work[next]);
    if (t[c]) xor_into(t, work[next]);
    ++next;
  }
  for (size_t c = 0; c < cols; ++c)
    if (t[c]) return std::nullopt;
  Bits coeffs(m, 0);
  for (size_t i = 0; i < m; ++i) coeffs[i] = t[cols + i];
  return coeffs;
}

bool gf2_in_span(const std::vector<Bits>& basis, const Bits& target) {
  return gf2_solve(basis, target).has_value();
}

bool gf2_same_span(const std::vector<Bits>& a, const std::vector<Bits>& b) {
  auto ra = a, rb = b;
  gf2_rref(ra);
  gf2_rref(rb);
  return ra == rb;
}

std::optional<Bits> gf2_solve_system(const std::vector<Bits>& a_rows, const Bits& rhs) {
  size_t m = a_rows.size();
  if (rhs.size() != m) throw ValidationError("gf2_solve_system: rhs size mismatch");
  size_t cols = m ? a_rows[0].size() : 0;
  std::vector<Bits> aug(m, Bits(cols + 1, 0));
  for (size_t i = 0; i < m; ++i) {
    std::copy(a_rows[i].begin(), a_rows[i].end(), aug[i].begin());
    aug[i][cols] = rhs[i] & 1;
  }
  std::vector<int> pivot_col;
  size_t next = 0;
  for (size_t c = 0; c < cols && next < m; ++c) {
    size_t r = next;
    while (r < m && !aug[r][c]) ++r;
    if (r == m) continue;
    std::swap(aug[next], aug[r]);
    for (size_t j = 0; j < m; ++j)
      if (j != next && aug[j][c]) xor_into(aug[j], aug[next]);
    pivot_col.push_back(static_cast<int>(c));
    ++next;
  }
  for (size_t r = next; r < m; ++r)
    if (aug[r][cols]) return std::nullopt;
  Bits u(cols, 0);
  for (size_t r = 0; r < pivot_col.size(); ++r) u[pivot_col[r]] = aug[r][cols];
  return u;
}

}  // namespace qec
