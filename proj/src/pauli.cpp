#include "qec/pauli.hpp"

#include <sstream>

namespace qec {

bool PauliWord::is_identity_bits() const {
  for (int i = 0; i < n; ++i)
    if (x[i] || z[i]) return false;
  return true;
}

int PauliWord::weight() const {
  int w = 0;
  for (int i = 0; i < n; ++i) w += (x[i] | z[i]);
  return w;
}

int PauliWord::y_count() const {
  int c = 0;
  for (int i = 0; i < n; ++i) c += (x[i] & z[i]);
  return c;
}

Bits to_symplectic(const PauliWord& p) {
  Bits v(2 * p.n);
  for (int i = 0; i < p.n; ++i) {
    v[i] = p.x[i];
    v[p.n + i] = p.z[i];
  }
  return v;
}

PauliWord from_symplectic(const Bits& v, int phase_exp) {
  if (v.size() % 2 != 0)
    throw ValidationError("from_symplectic: vector length must be even, got " +
                          std::to_string(v.size()));
  int n = static_cast<int>(v.size()) / 2;
  PauliWord p(n);
  for (int i = 0; i < n; ++i) {
    p.x[i] = v[i] & 1;
    p.z[i] = v[n + i] & 1;
  }
  p.phase_exp = ((phase_exp % 4) + 4) % 4;
  return p;
}

int symplectic_product(const PauliWord& u, const PauliWord& v) {
  if (u.n != v.n)
    throw ValidationError("symplectic_product: dimension mismatch " +
                          std::to_string(u.n) + " vs " + std::to_string(v.n));
  int acc = 0;
  for (int i = 0; i < u.n; ++i) acc ^= (u.x[i] & v.z[i]) ^ (u.z[i] & v.x[i]);
  return acc;
}

PauliWord multiply(const PauliWord& u, const PauliWord& v) {
  if (u.n != v.n)
    throw ValidationError("multiply: dimension mismatch " + std::to_string(u.n) +
                          " vs " + std::to_string(v.n));
  PauliWord r(u.n);
  int cross = 0;  // commuting Z^{z_u} past X^{x_v} costs (-1)^{z_u . x_v}
  for (int i = 0; i < u.n; ++i) {
    cross ^= (u.z[i] & v.x[i]);
    r.x[i] = u.x[i] ^ v.x[i];
    r.z[i] = u.z[i] ^ v.z[i];
  }
  r.phase_exp = (u.phase_exp + v.phase_exp + 2 * cross) % 4;
  return r;
}

PauliWord parse_pauli(const std::string& s, int expected_n) {
  size_t pos = 0;
  int phase = 0;
  if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
    if (s[pos] == '-') phase += 2;
    ++pos;
    if (pos < s.size() && s[pos] == 'i') {
      phase += 1;
      ++pos;
    }
  }
  if (pos >= s.size()) throw ParseError("empty Pauli string: '" + s + "'");
  PauliWord p(static_cast<int>(s.size() - pos));
  for (int i = 0; pos < s.size(); ++pos, ++i) {
    switch (s[pos]) {
      case 'I': case 'i': break;
      case 'X': p.x[i] = 1; break;
      case 'Z': p.z[i] = 1; break;
      case 'Y':
        p.x[i] = 1;
        p.z[i] = 1;
        phase += 1;  // Y = i * XZ
        break;
      default:
        throw ParseError(std::string("bad Pauli letter '") + s[pos] + "' in '" + s + "'");
    }
  }
  if (expected_n >= 0 && p.n != expected_n)
    throw ParseError("Pauli string '" + s + "' has " + std::to_string(p.n) +
                     " letters, expected " + std::to_string(expected_n));
  p.phase_exp = phase % 4;
  return p;
}

std::string to_string(const PauliWord& p) {
  static const char* prefix[4] = {"", "+i", "-", "-i"};
  int rel = ((p.phase_exp - p.y_count()) % 4 + 4) % 4;
  std::string out = prefix[rel];
  for (int i = 0; i < p.n; ++i) {
    int code = p.x[i] | (p.z[i] << 1);
    out += "IXZY"[code];
  }
  return out;
}

}  // namespace qec
