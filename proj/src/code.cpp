#include "qec/code.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "qec/gf2.hpp"

namespace qec {

StabilizerCode::StabilizerCode(int n_, int k_, std::vector<PauliWord> gens)
    : n(n_), k(k_), generators(n_, std::move(gens)) {
  validate();
}

static void check_involution(const PauliWord& g, const std::string& what, int idx) {
  if (!g.is_involution())
    throw ValidationError(what + " row " + std::to_string(idx + 1) + " (" +
                          to_string(g) + ") is not an involution");
}

void StabilizerCode::validate() const {
  if (n <= 0 || k < 0 || k > n) throw ValidationError("StabilizerCode: bad (n,k)");
  if (generators.row_count() != n - k)
    throw ValidationError("StabilizerCode: expected " + std::to_string(n - k) +
                          " generators, got " + std::to_string(generators.row_count()));
  const auto& rows = generators.rows;
  for (int i = 0; i < (int)rows.size(); ++i) {
    if (rows[i].n != n) throw ValidationError("StabilizerCode: generator size mismatch");
    check_involution(rows[i], "stabilizer", i);
  }
  for (int i = 0; i < (int)rows.size(); ++i)
    for (int j = i + 1; j < (int)rows.size(); ++j)
      if (symplectic_product(rows[i], rows[j]))
        throw ValidationError("stabilizer rows " + std::to_string(i + 1) + " (" +
                              to_string(rows[i]) + ") and " + std::to_string(j + 1) +
                              " (" + to_string(rows[j]) + ") anticommute");
  if (gf2_rank(symplectic_rows(rows)) != n - k)
    throw ValidationError("stabilizer rows are GF(2)-dependent");
  // Independent commuting involutions generate a -I-free group: every element
  // is a product over a unique subset and squares to +I.
}

void SubsystemCode::validate() const {
  if (n <= 0 || k < 0 || r < 0 || k + r > n)
    throw ValidationError("SubsystemCode: bad (n,k,r)");
  if ((int)stabilizer.size() != s())
    throw ValidationError("SubsystemCode: expected " + std::to_string(s()) +
                          " stabilizer rows, got " + std::to_string(stabilizer.size()));
  if ((int)gauge_z.size() != r || (int)gauge_x.size() != r)
    throw ValidationError("SubsystemCode: expected " + std::to_string(r) +
                          " gauge_z and gauge_x rows");
  auto all_z = stabilizer;
  all_z.insert(all_z.end(), gauge_z.begin(), gauge_z.end());
  for (int i = 0; i < (int)all_z.size(); ++i) check_involution(all_z[i], "z-type", i);
  for (int i = 0; i < r; ++i) check_involution(gauge_x[i], "gauge_x", i);
  for (int i = 0; i < (int)all_z.size(); ++i)
    for (int j = i + 1; j < (int)all_z.size(); ++j)
      if (symplectic_product(all_z[i], all_z[j]))
        throw ValidationError("z-type rows " + std::to_string(i + 1) + " and " +
                              std::to_string(j + 1) + " anticommute");
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j)
      if (symplectic_product(gauge_x[i], gauge_x[j]))
        throw ValidationError("gauge_x rows " + std::to_string(i + 1) + " and " +
                              std::to_string(j + 1) + " anticommute");
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < s(); ++j)
      if (symplectic_product(gauge_x[i], stabilizer[j]))
        throw ValidationError("gauge_x row " + std::to_string(i + 1) +
                              " anticommutes with stabilizer row " + std::to_string(j + 1));
    for (int j = 0; j < r; ++j) {
      int want = (i == j) ? 1 : 0;
      if (symplectic_product(gauge_x[i], gauge_z[j]) != want)
        throw ValidationError("gauge pair (" + std::to_string(i + 1) + "," +
                              std::to_string(j + 1) + ") violates hyperbolic commutation");
    }
  }
  if (gf2_rank(symplectic_rows(gauge_group_rows())) != n - k + r)
    throw ValidationError("gauge group rows are GF(2)-dependent (rank != n-k+r)");
}

std::vector<PauliWord> SubsystemCode::gauge_group_rows() const {
  auto rows = stabilizer;
  rows.insert(rows.end(), gauge_z.begin(), gauge_z.end());
  rows.insert(rows.end(), gauge_x.begin(), gauge_x.end());
  return rows;
}

StabilizerCode SubsystemCode::stabilizer_code_of_s() const {
  return StabilizerCode(n, k + r, stabilizer);
}

// ---- standard form ---------------------------------------------------------

static Bits block_view(const CheckMatrix& m, Block b, int r0, int r1, int c0, int c1,
                       int row) {
  Bits out;
  for (int c = c0; c < c1; ++c)
    out.push_back(b == Block::X ? m.rows[row].x[c] : m.rows[row].z[c]);
  return out;
}

static std::vector<Bits> block_rows(const CheckMatrix& m, Block b, int r0, int r1,
                                    int c0, int c1) {
  std::vector<Bits> out;
  for (int r = r0; r < r1; ++r) out.push_back(block_view(m, b, r0, r1, c0, c1, r));
  return out;
}

std::vector<Bits> StandardForm::block_a1() const {
  return block_rows(matrix, Block::X, 0, s_prime, s_prime, m());
}
std::vector<Bits> StandardForm::block_a2() const {
  return block_rows(matrix, Block::X, 0, s_prime, m(), n);
}
std::vector<Bits> StandardForm::block_b() const {
  return block_rows(matrix, Block::Z, 0, s_prime, 0, s_prime);
}
std::vector<Bits> StandardForm::block_c() const {
  return block_rows(matrix, Block::Z, 0, s_prime, m(), n);
}
std::vector<Bits> StandardForm::block_d() const {
  return block_rows(matrix, Block::Z, s_prime, m(), 0, s_prime);
}
std::vector<Bits> StandardForm::block_e() const {
  return block_rows(matrix, Block::Z, s_prime, m(), m(), n);
}

static StandardForm standard_form_of_matrix(CheckMatrix work, int n, int k, bool relaxed) {
  int m = n - k;
  int sp = rref_block_inplace(work, 0, m, Block::X, 0, n, /*full_reduce=*/!relaxed);
  int zrank = rref_block_inplace(work, sp, m, Block::Z, sp, n, /*full_reduce=*/true);
  if (sp + zrank != m)
    throw ValidationError("standard form: generators not independent (rank " +
                          std::to_string(sp + zrank) + " of " + std::to_string(m) + ")");
  // Clear the middle Z block of the primary rows so the first block row reads
  // (I A1 A2 | B 0 C); the secondary rows are pure-Z, so X parts are untouched.
  for (int r = 0; r < sp; ++r)
    for (int c = sp; c < m; ++c)
      if (work.rows[r].z[c]) work.rows[r] = multiply(work.rows[r], work.rows[sp + (c - sp)]);

  StandardForm sf;
  sf.matrix = std::move(work);
  sf.n = n;
  sf.k = k;
  sf.s_prime = sp;
  sf.relaxed = relaxed;

  for (int r = 0; r < sp; ++r) {
    for (int c = 0; c < sp; ++c) {
      uint8_t want = (c == r) ? 1 : 0;
      uint8_t got = sf.matrix.rows[r].x[c];
      bool ok = relaxed ? (c < r ? got == 0 : (c == r ? got == 1 : true)) : got == want;
      if (!ok) throw ValidationError("standard form: leading X block malformed");
    }
  }
  for (int r = sp; r < m; ++r) {
    for (int c = 0; c < n; ++c)
      if (sf.matrix.rows[r].x[c])
        throw ValidationError("standard form: secondary row has X content");
    for (int c = sp; c < m; ++c)
      if (sf.matrix.rows[r].z[c] != (uint8_t)(c == r ? 1 : 0))
        throw ValidationError("standard form: middle Z block malformed");
  }
  for (int r = 0; r < sp; ++r)
    for (int c = sp; c < m; ++c)
      if (sf.matrix.rows[r].z[c])
        throw ValidationError("standard form: primary middle Z block not cleared");
  return sf;
}

StandardForm standard_form(const StabilizerCode& code, bool relaxed) {
  code.validate();
  return standard_form_of_matrix(code.generators, code.n, code.k, relaxed);
}

LogicalOperators derive_logical_operators(const StandardForm& sf, int k) {
  if (k != sf.k) throw ValidationError("derive_logical_operators: k mismatch");
  if (sf.relaxed)
    throw ValidationError("derive_logical_operators requires the strict standard form");
  if (sf.matrix.row_count() != sf.m())
    throw ValidationError("derive_logical_operators: malformed standard form");
  int n = sf.n, m = sf.m(), sp = sf.s_prime;
  auto a2 = sf.block_a2();  // s' x k
  auto c = sf.block_c();    // s' x k
  auto e = sf.block_e();    // (m-s') x k

  LogicalOperators ops;
  for (int j = 0; j < k; ++j) {
    PauliWord zb(n);  // (0 0 0 | A2^t 0 I_k)
    for (int i = 0; i < sp; ++i) zb.z[i] = a2[i][j];
    zb.z[m + j] = 1;
    PauliWord xb(n);  // (0 E^t I_k | C^t 0 0)
    for (int i = 0; i < m - sp; ++i) xb.x[sp + i] = e[i][j];
    xb.x[m + j] = 1;
    for (int i = 0; i < sp; ++i) xb.z[i] = c[i][j];
    ops.zbar.push_back(sf.matrix.unpermuted(zb));
    ops.xbar.push_back(sf.matrix.unpermuted(xb));
  }
  return ops;
}

std::pair<std::vector<int>, std::vector<int>> classify_generators(const StandardForm& sf) {
  std::vector<int> primary, secondary;
  for (int r = 0; r < sf.matrix.row_count(); ++r) {
    bool has_x = false;
    for (int c = 0; c < sf.n; ++c) has_x |= (sf.matrix.rows[r].x[c] != 0);
    (has_x ? primary : secondary).push_back(r);
  }
  return {primary, secondary};
}

StabilizerCode augmented_stabilizer(const SubsystemCode& code, const AugmentChoice& choice) {
  code.validate();
  std::vector<PauliWord> extra;
  switch (choice.kind) {
    case AugmentChoice::GaugeZ: extra = code.gauge_z; break;
    case AugmentChoice::GaugeX: extra = code.gauge_x; break;
    case AugmentChoice::Explicit: extra = choice.rows; break;
  }
  if ((int)extra.size() != code.r)
    throw ValidationError("augmented_stabilizer: need exactly r rows");
  auto rows = code.stabilizer;
  rows.insert(rows.end(), extra.begin(), extra.end());
  try {
    return StabilizerCode(code.n, code.k, rows);
  } catch (const ValidationError& e) {
    throw ValidationError(std::string("augmented_stabilizer: chosen rows do not extend S "
                                      "to a stabilizer: ") + e.what());
  }
}

SubsystemCode canonicalize_gauge(const std::vector<PauliWord>& raw_generators,
                                 int n, int k, int r) {
  if (raw_generators.empty()) throw ValidationError("canonicalize_gauge: no generators");
  // Independent basis of the span, in first-seen order.
  std::vector<PauliWord> basis;
  std::vector<Bits> seen;
  for (const auto& g : raw_generators) {
    if (g.n != n) throw ValidationError("canonicalize_gauge: row size mismatch");
    auto v = to_symplectic(g);
    if (!gf2_in_span(seen, v)) {
      basis.push_back(g);
      seen.push_back(v);
    }
  }
  if ((int)basis.size() != n - k + r)
    throw ValidationError("canonicalize_gauge: span rank " + std::to_string(basis.size()) +
                          " does not match n-k+r = " + std::to_string(n - k + r));

  std::vector<PauliWord> xs, zs, radical;
  std::vector<PauliWord> work = basis;
  while (!work.empty()) {
    // First row that anticommutes with a later one starts a hyperbolic pair.
    int pi = -1, pj = -1;
    for (int i = 0; i < (int)work.size() && pi < 0; ++i)
      for (int j = i + 1; j < (int)work.size(); ++j)
        if (symplectic_product(work[i], work[j])) {
          pi = i;
          pj = j;
          break;
        }
    if (pi < 0) {
      radical.insert(radical.end(), work.begin(), work.end());
      break;
    }
    PauliWord xop = work[pi], zop = work[pj];
    work.erase(work.begin() + pj);
    work.erase(work.begin() + pi);
    for (auto& w : work) {
      if (symplectic_product(w, zop)) w = multiply(w, xop);
      if (symplectic_product(w, xop)) w = multiply(w, zop);
    }
    xs.push_back(xop);
    zs.push_back(zop);
  }
  if ((int)xs.size() != r)
    throw ValidationError("canonicalize_gauge: found " + std::to_string(xs.size()) +
                          " hyperbolic pairs, expected r = " + std::to_string(r));

  SubsystemCode code;
  code.n = n;
  code.k = k;
  code.r = r;
  code.stabilizer = radical;
  code.gauge_x = xs;
  code.gauge_z = zs;
  code.validate();
  return code;
}

LogicalOperators gauge_commuting_logicals(const SubsystemCode& code,
                                          const LogicalOperators& raw) {
  LogicalOperators out = raw;
  for (int j = 0; j < out.k(); ++j) {
    for (int i = 0; i < code.r; ++i) {
      // A gauge-z factor flips commutation with x_{s+i} and nothing else.
      if (symplectic_product(out.zbar[j], code.gauge_x[i]))
        out.zbar[j] = multiply(out.zbar[j], code.gauge_z[i]);
      if (symplectic_product(out.xbar[j], code.gauge_x[i]))
        out.xbar[j] = multiply(out.xbar[j], code.gauge_z[i]);
    }
  }
  return out;
}

PauliWord reduce_to_min_weight(const PauliWord& word, const std::vector<PauliWord>& group_rows) {
  std::vector<Bits> basis = symplectic_rows(group_rows);
  gf2_rref(basis);
  if (basis.size() > 20)
    throw ValidationError("reduce_to_min_weight: group too large to enumerate");
  PauliWord best = word;
  auto better = [](const PauliWord& a, const PauliWord& b) {
    if (a.weight() != b.weight()) return a.weight() < b.weight();
    return to_symplectic(a) < to_symplectic(b);
  };
  size_t count = size_t(1) << basis.size();
  PauliWord cur = word;
  // Gray-code walk over the coset.
  std::vector<PauliWord> gens;
  for (const auto& v : basis) gens.push_back(from_symplectic(v));
  for (size_t g = 1; g < count; ++g) {
    size_t gray = g ^ (g >> 1), prev = (g - 1) ^ ((g - 1) >> 1);
    size_t bit = gray ^ prev;
    int idx = 0;
    while (!((bit >> idx) & 1)) ++idx;
    cur = multiply(cur, gens[idx]);
    if (better(cur, best)) {
      best = cur;
      best.phase_exp = word.phase_exp;  // representative up to sign
    }
  }
  return best;
}

// ---- code file io -----------------------------------------------------------

static bool parse_header(const std::string& line, int& n, int& k, int& r) {
  std::istringstream ss(line);
  std::string tag;
  ss >> tag;
  if (tag != "code") return false;
  n = k = r = -1;
  std::string kv;
  while (ss >> kv) {
    auto eq = kv.find('=');
    if (eq == std::string::npos) return false;
    std::string key = kv.substr(0, eq);
    int val;
    try {
      val = std::stoi(kv.substr(eq + 1));
    } catch (...) {
      return false;
    }
    if (key == "n") n = val;
    else if (key == "k") k = val;
    else if (key == "r") r = val;
    else return false;
  }
  return n >= 0 && k >= 0 && r >= 0;
}

SubsystemCode parse_code_file(std::istream& in) {
  SubsystemCode code;
  std::string line;
  int lineno = 0;
  bool have_header = false;
  std::vector<PauliWord>* section = nullptr;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    // trim
    size_t b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos) continue;
    size_t e = line.find_last_not_of(" \t\r");
    line = line.substr(b, e - b + 1);
    if (!have_header) {
      if (!parse_header(line, code.n, code.k, code.r))
        throw ParseError("line " + std::to_string(lineno) +
                         ": expected header 'code n=<int> k=<int> r=<int>'");
      have_header = true;
      continue;
    }
    if (line.front() == '[') {
      if (line == "[stabilizer]") section = &code.stabilizer;
      else if (line == "[gauge_x]") section = &code.gauge_x;
      else if (line == "[gauge_z]") section = &code.gauge_z;
      else throw ParseError("line " + std::to_string(lineno) + ": unknown section " + line);
      continue;
    }
    if (!section)
      throw ParseError("line " + std::to_string(lineno) + ": Pauli row outside any section");
    try {
      section->push_back(parse_pauli(line, code.n));
    } catch (const ParseError& pe) {
      throw ParseError("line " + std::to_string(lineno) + ": " + pe.what());
    }
  }
  if (!have_header) throw ParseError("missing 'code n=.. k=.. r=..' header");
  try {
    code.validate();
  } catch (const ValidationError& ve) {
    throw ValidationError(std::string("code file invalid: ") + ve.what());
  }
  return code;
}

SubsystemCode load_code_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open code file: " + path);
  return parse_code_file(in);
}

std::string format_code_file(const SubsystemCode& code) {
  std::ostringstream out;
  out << "code n=" << code.n << " k=" << code.k << " r=" << code.r << "\n";
  out << "[stabilizer]\n";
  for (const auto& g : code.stabilizer) out << to_string(g) << "\n";
  if (code.r > 0) {
    out << "[gauge_x]\n";
    for (const auto& g : code.gauge_x) out << to_string(g) << "\n";
    out << "[gauge_z]\n";
    for (const auto& g : code.gauge_z) out << to_string(g) << "\n";
  }
  return out.str();
}

}  // namespace qec
