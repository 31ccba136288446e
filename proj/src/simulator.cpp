#include "qec/simulator.hpp"

#include <bit>
#include <cmath>
#include <sstream>

namespace qec {

static const cplx kIPow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

StateVector::StateVector(int n_, int max_qubits) : n(n_) {
  if (n_ < 0 || n_ > max_qubits)
    throw ValidationError("StateVector: n = " + std::to_string(n_) +
                          " exceeds cap " + std::to_string(max_qubits));
  amp.assign(uint64_t(1) << n_, cplx(0, 0));
}

StateVector StateVector::basis(int n, uint64_t index, int max_qubits) {
  StateVector s(n, max_qubits);
  s.amp[index] = 1.0;
  return s;
}

StateVector StateVector::product(const std::string& spec, int max_qubits) {
  int n = (int)spec.size();
  StateVector s(n, max_qubits);
  s.amp[0] = 1.0;
  const double rs2 = 1.0 / std::sqrt(2.0);
  for (int q = 0; q < n; ++q) {
    char c = spec[q];
    if (c == '0') continue;
    StateVector next(n, max_qubits);
    uint64_t m = s.mask(q);
    for (uint64_t i = 0; i < s.dim(); ++i) {
      if (s.amp[i] == cplx(0, 0)) continue;
      if (i & m) throw ValidationError("product: internal");
      switch (c) {
        case '1': next.amp[i | m] += s.amp[i]; break;
        case '+':
          next.amp[i] += rs2 * s.amp[i];
          next.amp[i | m] += rs2 * s.amp[i];
          break;
        case '-':
          next.amp[i] += rs2 * s.amp[i];
          next.amp[i | m] -= rs2 * s.amp[i];
          break;
        default:
          throw ParseError(std::string("product: bad state char '") + c + "'");
      }
    }
    s = std::move(next);
  }
  return s;
}

double StateVector::norm() const {
  double acc = 0;
  for (const auto& a : amp) acc += std::norm(a);
  return std::sqrt(acc);
}

void StateVector::normalize() {
  double nm = norm();
  if (nm <= 0) throw ValidationError("StateVector: zero norm");
  if (std::abs(nm - 1.0) > 1e-12)
    for (auto& a : amp) a /= nm;
}

void apply_gate_inplace(StateVector& s, const Gate& g) {
  if (g.q0 < 0 || g.q0 >= s.n ||
      ((g.kind == GateKind::CNOT || g.kind == GateKind::CPauli) &&
       (g.q1 < 0 || g.q1 >= s.n)))
    throw ValidationError("apply_gate: qubit out of range");
  const double rs2 = 1.0 / std::sqrt(2.0);
  uint64_t m0 = s.mask(g.q0);
  switch (g.kind) {
    case GateKind::H: {
      for (uint64_t i = 0; i < s.dim(); ++i) {
        if (i & m0) continue;
        cplx a = s.amp[i], b = s.amp[i | m0];
        s.amp[i] = rs2 * (a + b);
        s.amp[i | m0] = rs2 * (a - b);
      }
      break;
    }
    case GateKind::P:
      for (uint64_t i = 0; i < s.dim(); ++i)
        if (i & m0) s.amp[i] *= kIPow[1];
      break;
    case GateKind::X:
      for (uint64_t i = 0; i < s.dim(); ++i)
        if (!(i & m0)) std::swap(s.amp[i], s.amp[i | m0]);
      break;
    case GateKind::Z:
      for (uint64_t i = 0; i < s.dim(); ++i)
        if (i & m0) s.amp[i] = -s.amp[i];
      break;
    case GateKind::CNOT: {
      uint64_t mt = s.mask(g.q1);
      for (uint64_t i = 0; i < s.dim(); ++i)
        if ((i & m0) && !(i & mt)) std::swap(s.amp[i], s.amp[i | mt]);
      break;
    }
    case GateKind::CPauli: {
      uint64_t mt = s.mask(g.q1);
      switch (g.letter) {
        case PauliLetter::X:
          for (uint64_t i = 0; i < s.dim(); ++i)
            if ((i & m0) && !(i & mt)) std::swap(s.amp[i], s.amp[i | mt]);
          break;
        case PauliLetter::Z:
          for (uint64_t i = 0; i < s.dim(); ++i)
            if ((i & m0) && (i & mt)) s.amp[i] = -s.amp[i];
          break;
        case PauliLetter::Y:  // real XZ: |0> -> |1>, |1> -> -|0>
          for (uint64_t i = 0; i < s.dim(); ++i) {
            if (!(i & m0) || (i & mt)) continue;
            cplx lo = s.amp[i], hi = s.amp[i | mt];
            s.amp[i] = -hi;
            s.amp[i | mt] = lo;
          }
          break;
      }
      break;
    }
  }
  double nm = s.norm();
  if (std::abs(nm - 1.0) > 1e-12 && nm > 0)
    for (auto& a : s.amp) a /= nm;
}

StateVector apply_gate(const StateVector& s, const Gate& g) {
  StateVector out = s;
  apply_gate_inplace(out, g);
  return out;
}

StateVector apply_circuit(const StateVector& s, const Circuit& c) {
  if (s.n != c.n) throw ValidationError("apply_circuit: size mismatch");
  StateVector out = s;
  for (const auto& g : c.gates) apply_gate_inplace(out, g);
  return out;
}

StateVector apply_pauli(const StateVector& s, const PauliWord& p) {
  if (s.n != p.n) throw ValidationError("apply_pauli: size mismatch");
  uint64_t flip = 0, zmask = 0;
  for (int q = 0; q < p.n; ++q) {
    if (p.x[q]) flip |= s.mask(q);
    if (p.z[q]) zmask |= s.mask(q);
  }
  StateVector out(s.n);
  cplx phase = kIPow[p.phase_exp % 4];
  for (uint64_t i = 0; i < s.dim(); ++i) {
    if (s.amp[i] == cplx(0, 0)) continue;
    // Z acts first: i^p (-1)^{z.b} |b xor x>
    int sign = std::popcount(i & zmask) & 1;
    out.amp[i ^ flip] += (sign ? -phase : phase) * s.amp[i];
  }
  return out;
}

StateVector stabilizer_projector_apply(const StateVector& s, const StabilizerCode& code) {
  if (s.n != code.n) throw ValidationError("projector: size mismatch");
  int m = code.generators.row_count();
  if (m > 20) throw ValidationError("projector: group too large to enumerate");
  StateVector acc(s.n);
  PauliWord cur = PauliWord::identity(code.n);
  uint64_t count = uint64_t(1) << m;
  for (uint64_t g = 0; g < count; ++g) {
    if (g > 0) {
      uint64_t gray = g ^ (g >> 1), prev = (g - 1) ^ ((g - 1) >> 1);
      uint64_t bit = gray ^ prev;
      int idx = std::countr_zero(bit);
      cur = multiply(cur, code.generators.rows[idx]);
    }
    if (cur.is_identity_bits() && cur.phase_exp != 0)
      throw ValidationError("projector: -I (or iI) found in generated group");
    StateVector term = apply_pauli(s, cur);
    for (uint64_t i = 0; i < acc.dim(); ++i) acc.amp[i] += term.amp[i];
  }
  double scale = 1.0 / double(count);
  for (auto& a : acc.amp) a *= scale;
  return acc;
}

bool is_stabilized(const StateVector& s, const PauliWord& p, double tol) {
  StateVector img = apply_pauli(s, p);
  double acc = 0;
  for (uint64_t i = 0; i < s.dim(); ++i) acc += std::norm(img.amp[i] - s.amp[i]);
  return std::sqrt(acc) < tol;
}

cplx inner_product(const StateVector& a, const StateVector& b) {
  if (a.n != b.n) throw ValidationError("inner_product: size mismatch");
  cplx acc(0, 0);
  for (uint64_t i = 0; i < a.dim(); ++i) acc += std::conj(a.amp[i]) * b.amp[i];
  return acc;
}

double inner_product_abs(const StateVector& a, const StateVector& b) {
  return std::abs(inner_product(a, b));
}

double distance(const StateVector& a, const StateVector& b) {
  double acc = 0;
  for (uint64_t i = 0; i < a.dim(); ++i) acc += std::norm(a.amp[i] - b.amp[i]);
  return std::sqrt(acc);
}

std::string dump_amplitudes(const StateVector& s, double cutoff) {
  std::ostringstream out;
  for (uint64_t i = 0; i < s.dim(); ++i) {
    if (std::abs(s.amp[i]) <= cutoff) continue;
    for (int q = 0; q < s.n; ++q) out << (s.bit(i, q) ? '1' : '0');
    out << " " << s.amp[i].real() << " " << s.amp[i].imag() << "\n";
  }
  return out.str();
}

}  // namespace qec
