#include "qec/circuit.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace qec {

void Circuit::set_roles_from_lists() {
  roles.assign(n, WireRole::Zero);
  for (int w : message_wires) roles[w] = WireRole::Message;
  for (int w : gauge_wires) roles[w] = WireRole::Gauge;
}

void Circuit::validate() const {
  if ((int)roles.size() != n) throw ValidationError("circuit: roles size mismatch");
  auto in_range = [&](int q) { return q >= 0 && q < n; };
  for (const auto& g : gates) {
    bool two = (g.kind == GateKind::CNOT || g.kind == GateKind::CPauli);
    if (!in_range(g.q0) || (two && !in_range(g.q1)))
      throw ValidationError("circuit: gate qubit out of range");
    if (two && g.q0 == g.q1)
      throw ValidationError("circuit: control and target coincide");
  }
  for (int w : message_wires)
    if (!in_range(w) || roles[w] != WireRole::Message)
      throw ValidationError("circuit: message wire list inconsistent with roles");
  for (int w : gauge_wires)
    if (!in_range(w) || roles[w] != WireRole::Gauge)
      throw ValidationError("circuit: gauge wire list inconsistent with roles");
}

// ---- conjugation -----------------------------------------------------------

static void conj_h_bit(PauliWord& w, int q) {
  if (w.x[q] && w.z[q]) w.phase_exp = (w.phase_exp + 2) % 4;  // H (XZ) H = -XZ
  std::swap(w.x[q], w.z[q]);
}

static void conj_p_bit(PauliWord& w, int q) {
  if (w.x[q]) w.phase_exp = (w.phase_exp + 1) % 4;  // P X P^t = i XZ, P XZ P^t = i X
  w.z[q] ^= w.x[q];
}

static void conj_x_bit(PauliWord& w, int q) {
  if (w.z[q]) w.phase_exp = (w.phase_exp + 2) % 4;
}

static void conj_z_bit(PauliWord& w, int q) {
  if (w.x[q]) w.phase_exp = (w.phase_exp + 2) % 4;
}

static void conj_cnot_bits(PauliWord& w, int c, int t) {
  // No phase in the canonical X^a Z^b form.
  w.x[t] ^= w.x[c];
  w.z[c] ^= w.z[t];
}

static void conj_cz_bits(PauliWord& w, int c, int t) {
  if (w.x[c] && w.x[t]) w.phase_exp = (w.phase_exp + 2) % 4;
  w.z[t] ^= w.x[c];
  w.z[c] ^= w.x[t];
}

PauliWord conjugate_through(const PauliWord& w, const Gate& g) {
  PauliWord r = w;
  switch (g.kind) {
    case GateKind::H: conj_h_bit(r, g.q0); break;
    case GateKind::P: conj_p_bit(r, g.q0); break;
    case GateKind::X: conj_x_bit(r, g.q0); break;
    case GateKind::Z: conj_z_bit(r, g.q0); break;
    case GateKind::CNOT: conj_cnot_bits(r, g.q0, g.q1); break;
    case GateKind::CPauli:
      switch (g.letter) {
        case PauliLetter::X: conj_cnot_bits(r, g.q0, g.q1); break;
        case PauliLetter::Z: conj_cz_bits(r, g.q0, g.q1); break;
        case PauliLetter::Y:  // C[XZ] = C[X] C[Z]: inner CZ first
          conj_cz_bits(r, g.q0, g.q1);
          conj_cnot_bits(r, g.q0, g.q1);
          break;
      }
      break;
  }
  return r;
}

PauliWord conjugate_through(PauliWord w, std::span<const Gate> gates) {
  for (const auto& g : gates) w = conjugate_through(w, g);
  return w;
}

LogicalOperators realized_logicals(const Circuit& c) {
  LogicalOperators ops;
  for (int w : c.message_wires) {
    PauliWord zop(c.n), xop(c.n);
    zop.z[w] = 1;
    xop.x[w] = 1;
    ops.zbar.push_back(conjugate_through(zop, std::span<const Gate>(c.gates)));
    ops.xbar.push_back(conjugate_through(xop, std::span<const Gate>(c.gates)));
  }
  return ops;
}

// ---- redundant-Z elision ----------------------------------------------------

ElisionState ElisionState::from_layout(const Circuit& c) {
  ElisionState st;
  st.zero.resize(c.n);
  for (int w = 0; w < c.n; ++w)
    st.zero[w] = c.roles[w] == WireRole::Zero ||
                 (c.roles[w] == WireRole::Gauge && !c.gauge_free);
  return st;
}

std::optional<Gate> ElisionState::step(const Gate& g) {
  switch (g.kind) {
    case GateKind::H:
      zero[g.q0] = false;
      return g;
    case GateKind::P:
    case GateKind::Z:
      if (zero[g.q0]) return std::nullopt;  // diagonal, fixes |0>
      return g;
    case GateKind::X:
      zero[g.q0] = false;
      return g;
    case GateKind::CNOT:
      zero[g.q1] = false;
      return g;
    case GateKind::CPauli:
      switch (g.letter) {
        case PauliLetter::X:
          zero[g.q1] = false;
          return g;
        case PauliLetter::Z:
          if (zero[g.q1]) return std::nullopt;
          return g;
        case PauliLetter::Y:
          if (zero[g.q1]) {
            // XZ|0> = X|0>: keep only the X half.
            zero[g.q1] = false;
            return Gate::cpauli(g.q0, g.q1, PauliLetter::X);
          }
          return g;
      }
  }
  return g;
}

Circuit elide_redundant_z(const Circuit& c) {
  Circuit out = c;
  out.gates.clear();
  auto st = ElisionState::from_layout(c);
  for (const auto& g : c.gates)
    if (auto kept = st.step(g)) out.gates.push_back(*kept);
  return out;
}

// ---- report ----------------------------------------------------------------

GateReport gate_report(const Circuit& c) {
  GateReport rep;
  for (const auto& g : c.gates) {
    switch (g.kind) {
      case GateKind::H: ++rep.h; break;
      case GateKind::P: ++rep.p; break;
      case GateKind::X: ++rep.x; break;
      case GateKind::Z: ++rep.z; break;
      case GateKind::CNOT: ++rep.cnot; break;
      case GateKind::CPauli: ++rep.cpauli; break;
    }
  }
  rep.two_qubit = rep.cnot + rep.cpauli;
  int n = c.n, k = (int)c.message_wires.size(), sp = rep.h;
  // Exact integer form of  two_qubit <= (2n-1-k-s')s'/2 + k(n-k-s').
  rep.bound_ok = 2 * rep.two_qubit <= sp * (2 * n - 1 - k - sp) + 2 * k * (n - k - sp);
  return rep;
}

std::string GateReport::to_text() const {
  std::ostringstream out;
  out << "gates: h=" << h << " p=" << p << " x=" << x << " z=" << z
      << " cnot=" << cnot << " cpauli=" << cpauli
      << " two-qubit=" << two_qubit
      << " bound=" << (bound_ok ? "ok" : "exceeded");
  return out.str();
}

// ---- file io ----------------------------------------------------------------

static const char* role_name(WireRole r) {
  switch (r) {
    case WireRole::Zero: return "zero";
    case WireRole::Gauge: return "gauge";
    case WireRole::Message: return "message";
  }
  return "?";
}

static char letter_name(PauliLetter l) {
  switch (l) {
    case PauliLetter::X: return 'X';
    case PauliLetter::Y: return 'Y';
    case PauliLetter::Z: return 'Z';
  }
  return '?';
}

std::string format_circuit_file(const Circuit& c) {
  std::ostringstream out;
  out << "circuit n=" << c.n << "\n";
  out << "# gauge = " << (c.gauge_free ? "free" : "zero") << "\n";
  for (int w = 0; w < c.n; ++w)
    out << "# wire " << (w + 1) << " = " << role_name(c.roles[w]) << "\n";
  for (const auto& g : c.gates) {
    switch (g.kind) {
      case GateKind::H: out << "h " << g.q0 + 1 << "\n"; break;
      case GateKind::P: out << "p " << g.q0 + 1 << "\n"; break;
      case GateKind::X: out << "x " << g.q0 + 1 << "\n"; break;
      case GateKind::Z: out << "z " << g.q0 + 1 << "\n"; break;
      case GateKind::CNOT:
        out << "cnot " << g.q0 + 1 << " " << g.q1 + 1 << "\n";
        break;
      case GateKind::CPauli:
        out << "cpauli " << g.q0 + 1 << " " << g.q1 + 1 << " " << letter_name(g.letter)
            << "\n";
        break;
    }
  }
  return out.str();
}

Circuit parse_circuit_file(std::istream& in) {
  std::string line;
  int lineno = 0;
  bool have_header = false;
  Circuit c;
  auto fail = [&](const std::string& msg) -> void {
    throw ParseError("circuit line " + std::to_string(lineno) + ": " + msg);
  };
  while (std::getline(in, line)) {
    ++lineno;
    size_t b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos) continue;
    size_t e = line.find_last_not_of(" \t\r");
    line = line.substr(b, e - b + 1);
    if (line[0] == '#') {
      std::istringstream ss(line.substr(1));
      std::string word;
      ss >> word;
      if (word == "wire") {
        int q;
        std::string eq, role;
        if (!(ss >> q >> eq >> role) || eq != "=") continue;
        if (!have_header) fail("wire comment before header");
        if (q < 1 || q > c.n) fail("wire index out of range");
        if (role == "zero") c.roles[q - 1] = WireRole::Zero;
        else if (role == "gauge") {
          c.roles[q - 1] = WireRole::Gauge;
          c.gauge_wires.push_back(q - 1);
        } else if (role == "message") {
          c.roles[q - 1] = WireRole::Message;
          c.message_wires.push_back(q - 1);
        } else fail("unknown wire role '" + role + "'");
      } else if (word == "gauge") {
        std::string eq, pol;
        if ((ss >> eq >> pol) && eq == "=") c.gauge_free = (pol == "free");
      }
      continue;
    }
    if (!have_header) {
      std::istringstream ss(line);
      std::string tag, kv;
      ss >> tag >> kv;
      if (tag != "circuit" || kv.rfind("n=", 0) != 0) fail("expected 'circuit n=<int>'");
      int n;
      try {
        n = std::stoi(kv.substr(2));
      } catch (...) {
        fail("bad n");
        n = 0;
      }
      c = Circuit(n);
      have_header = true;
      continue;
    }
    std::istringstream ss(line);
    std::string op;
    ss >> op;
    auto rd_q = [&]() {
      int q;
      if (!(ss >> q) || q < 1 || q > c.n) fail("bad qubit index");
      return q - 1;
    };
    if (op == "h") c.gates.push_back(Gate::h(rd_q()));
    else if (op == "p") c.gates.push_back(Gate::p(rd_q()));
    else if (op == "x") c.gates.push_back(Gate::x(rd_q()));
    else if (op == "z") c.gates.push_back(Gate::z(rd_q()));
    else if (op == "cnot") {
      int a = rd_q(), b2 = rd_q();
      c.gates.push_back(Gate::cnot(a, b2));
    } else if (op == "cpauli") {
      int a = rd_q(), b2 = rd_q();
      std::string l;
      if (!(ss >> l) || l.size() != 1) fail("bad cpauli letter");
      PauliLetter pl;
      if (l == "X") pl = PauliLetter::X;
      else if (l == "Y") pl = PauliLetter::Y;
      else if (l == "Z") pl = PauliLetter::Z;
      else { fail("bad cpauli letter"); pl = PauliLetter::X; }
      c.gates.push_back(Gate::cpauli(a, b2, pl));
    } else fail("unknown gate '" + op + "'");
  }
  if (!have_header) throw ParseError("missing 'circuit n=<int>' header");
  c.validate();
  return c;
}

Circuit load_circuit_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open circuit file: " + path);
  return parse_circuit_file(in);
}

}  // namespace qec
