#include "qec/verify.hpp"

#include <cmath>
#include <sstream>

#include "qec/conjugation.hpp"
#include "qec/synth.hpp"

namespace qec {
namespace {

std::string msg_tag(uint64_t alpha, int k) {
  std::string bits;
  for (int j = 0; j < k; ++j) bits += ((alpha >> j) & 1) ? '1' : '0';
  return "msg=" + (k ? bits : std::string("-"));
}

// Eigenvalue of an involution on an eigenstate: +1, -1, or 0 (not an eigenstate).
int eigen_sign(const StateVector& s, const PauliWord& p, double tol) {
  StateVector img = apply_pauli(s, p);
  if (distance(img, s) < tol) return +1;
  for (auto& a : img.amp) a = -a;
  if (distance(img, s) < tol) return -1;
  return 0;
}

}  // namespace

StateVector encode_basis_message(const Circuit& c, uint64_t alpha) {
  StateVector in(c.n);
  uint64_t idx = 0;
  for (size_t j = 0; j < c.message_wires.size(); ++j)
    if ((alpha >> j) & 1) idx |= in.mask(c.message_wires[j]);
  in.amp[idx] = 1.0;
  return apply_circuit(in, c);
}

Report verify_encoder(const SubsystemCode& code, const LogicalOperators& logical,
                      const Circuit& c, const GaugeSetting& gauge) {
  if (code.n != c.n)
    throw ValidationError("verify_encoder: circuit and code qubit counts differ");
  if ((int)c.message_wires.size() != code.k)
    throw ValidationError("verify_encoder: circuit has " +
                          std::to_string(c.message_wires.size()) +
                          " message wires, code has k=" + std::to_string(code.k));
  if (logical.k() != code.k)
    throw ValidationError("verify_encoder: logical operator count mismatch");

  const int k = code.k;
  const double tol = kVerifyTol;
  Report rep;

  auto prepare = [&](uint64_t alpha) {
    if (gauge.mode == GaugeSetting::Zero) return encode_basis_message(c, alpha);
    if (c.gauge_free) {
      // Physical gauge wires exist: feed them a|0> + b|1>.
      StateVector in(c.n);
      uint64_t idx = 0;
      for (size_t j = 0; j < c.message_wires.size(); ++j)
        if ((alpha >> j) & 1) idx |= in.mask(c.message_wires[j]);
      in.amp[idx] = 1.0;
      for (int w : c.gauge_wires) {
        StateVector flipped = in;
        for (uint64_t i = 0; i < in.dim(); ++i) {
          if (!(i & in.mask(w))) {
            flipped.amp[i | in.mask(w)] = in.amp[i];
            flipped.amp[i] = 0;
          }
        }
        StateVector mixed(c.n);
        for (uint64_t i = 0; i < in.dim(); ++i)
          mixed.amp[i] = gauge.a * in.amp[i] + gauge.b * flipped.amp[i];
        in = std::move(mixed);
      }
      in.normalize();
      return apply_circuit(in, c);
    }
    // Must-be-zero gauge wires: act on the encoded gauge qubits instead,
    // through the declared gauge x operators.
    StateVector out = encode_basis_message(c, alpha);
    for (int i = 0; i < code.r; ++i) {
      StateVector moved = apply_pauli(out, code.gauge_x[i]);
      StateVector mixed(c.n);
      for (uint64_t t = 0; t < out.dim(); ++t)
        mixed.amp[t] = gauge.a * out.amp[t] + gauge.b * moved.amp[t];
      out = std::move(mixed);
    }
    out.normalize();
    return out;
  };

  std::vector<StateVector> outputs;
  for (uint64_t alpha = 0; alpha < (uint64_t(1) << k); ++alpha)
    outputs.push_back(prepare(alpha));

  auto sector_checks = [&](const StateVector& st, uint64_t alpha, const std::string& tag,
                           bool record) {
    bool all_ok = true;
    for (int i = 0; i < (int)code.stabilizer.size(); ++i) {
      bool ok = is_stabilized(st, code.stabilizer[i], tol);
      all_ok &= ok;
      if (record)
        rep.add(tag + " stabilizer[" + std::to_string(i + 1) + "]", ok,
                ok ? "" : "output not fixed by " + to_string(code.stabilizer[i]));
    }
    for (int j = 0; j < k; ++j) {
      int want = ((alpha >> j) & 1) ? -1 : +1;
      int got = eigen_sign(st, logical.zbar[j], tol);
      bool ok = (got == want);
      all_ok &= ok;
      if (record)
        rep.add(tag + " zbar[" + std::to_string(j + 1) + "]", ok,
                ok ? "" : "eigenvalue " + std::to_string(got) + ", expected " +
                              std::to_string(want));
    }
    return all_ok;
  };

  for (uint64_t alpha = 0; alpha < (uint64_t(1) << k); ++alpha) {
    std::string tag = msg_tag(alpha, k);
    sector_checks(outputs[alpha], alpha, tag, /*record=*/true);
    // (3) X-bar flips the message up to gauge action: the image must verify
    // as the flipped message.
    for (int j = 0; j < k; ++j) {
      StateVector img = apply_pauli(outputs[alpha], logical.xbar[j]);
      bool ok = sector_checks(img, alpha ^ (uint64_t(1) << j), tag, /*record=*/false);
      rep.add(tag + " xbar[" + std::to_string(j + 1) + "] sector", ok,
              ok ? "" : "X-bar image fails the flipped-message checks");
    }
  }
  for (uint64_t a = 0; a < (uint64_t(1) << k); ++a)
    for (uint64_t b = a + 1; b < (uint64_t(1) << k); ++b) {
      double ov = inner_product_abs(outputs[a], outputs[b]);
      rep.add(msg_tag(a, k) + "/" + msg_tag(b, k) + " orthogonal", ov < tol,
              ov < tol ? "" : "overlap " + std::to_string(ov));
    }
  return rep;
}

bool logical_zero_check(const StateVector& state, const SubsystemCode& code,
                        const LogicalOperators& logical, double tol) {
  if (state.n != code.n) throw ValidationError("logical_zero_check: size mismatch");
  for (const auto& srow : code.stabilizer)
    if (!is_stabilized(state, srow, tol)) return false;
  for (const auto& zb : logical.zbar)
    if (!is_stabilized(state, zb, tol)) return false;
  return true;
}

Report cross_method_consistency(const SubsystemCode& code) {
  Report rep;
  SynthResult m1 = synthesize_subsystem_m1(code);
  SynthResult m2 = synthesize_subsystem_m2(code);
  ConjResult conj = synthesize_conjugation_encoder(code);

  struct Entry {
    std::string name;
    const Circuit* circuit;
    const LogicalOperators* logicals;
  };
  const Entry entries[] = {{"method1", &m1.circuit, &m1.logicals},
                           {"method2", &m2.circuit, &m2.logicals},
                           {"conjugation", &conj.encoder, &conj.logicals}};

  std::vector<std::vector<StateVector>> outs;
  for (const auto& e : entries) {
    Report sub = verify_encoder(code, *e.logicals, *e.circuit, GaugeSetting::zero());
    const CheckLine* bad = sub.first_failure();
    rep.add(e.name + " verifies", sub.ok(),
            sub.ok() ? gate_report(*e.circuit).to_text()
                     : bad->id + (bad->detail.empty() ? "" : ": " + bad->detail));
    std::vector<StateVector> states;
    for (uint64_t a = 0; a < (uint64_t(1) << code.k); ++a)
      states.push_back(encode_basis_message(*e.circuit, a));
    outs.push_back(std::move(states));
  }

  // Span equality: method-1 outputs are orthonormal, so projecting onto them
  // must absorb the other methods' outputs completely.
  for (int m = 1; m < 3; ++m) {
    double worst = 0;
    for (const auto& st : outs[m]) {
      StateVector resid = st;
      for (const auto& basis : outs[0]) {
        cplx coef = inner_product(basis, st);
        for (uint64_t i = 0; i < resid.dim(); ++i) resid.amp[i] -= coef * basis.amp[i];
      }
      double nrm = 0;
      for (const auto& a : resid.amp) nrm += std::norm(a);
      worst = std::max(worst, std::sqrt(nrm));
    }
    rep.add(entries[m].name + " span matches method1", worst < kVerifyTol,
            "residual " + std::to_string(worst));
  }
  return rep;
}

}  // namespace qec
