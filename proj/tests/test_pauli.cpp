#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qec/pauli.hpp"
#include "support/dense_oracle.hpp"

using namespace qec;
namespace ts = qec::testsupport;

static PauliWord word(const std::string& s) { return parse_pauli(s); }

TEST_CASE("to_symplectic drops phase and splits blocks") {
  auto p = word("XIXXX");
  CHECK(to_symplectic(p) == Bits{1, 0, 1, 1, 1, 0, 0, 0, 0, 0});
  auto q = word("IXZXY");
  CHECK(to_symplectic(q) == Bits{0, 1, 0, 1, 1, 0, 0, 1, 0, 1});
  CHECK(to_symplectic(PauliWord::identity(6)) == Bits(12, 0));
}

TEST_CASE("from_symplectic") {
  auto zzzz = from_symplectic(Bits{0, 0, 0, 0, 1, 1, 1, 1}, 0);
  CHECK(zzzz == word("ZZZZ"));
  CHECK(from_symplectic(Bits(8, 0), 0) == PauliWord::identity(4));
  // real convention: (1,1) decodes to the rotation XZ (phase 0)
  auto yy = from_symplectic(Bits{1, 1, 1, 1}, 0);
  CHECK(yy.x == Bits{1, 1});
  CHECK(yy.z == Bits{1, 1});
  CHECK(yy.phase_exp == 0);
  CHECK_THROWS_AS(from_symplectic(Bits{1, 0, 1}, 0), ValidationError);
}

TEST_CASE("from/to round trips") {
  std::mt19937 rng(7);
  for (int t = 0; t < 50; ++t) {
    Bits v(10);
    for (auto& b : v) b = rng() & 1;
    CHECK(to_symplectic(from_symplectic(v, int(rng() % 4))) == v);
  }
  auto p = word("IXZXY");
  CHECK(from_symplectic(to_symplectic(p), p.phase_exp) == p);
}

TEST_CASE("symplectic product commutation") {
  CHECK(symplectic_product(word("XXXX"), word("ZZZZ")) == 0);
  CHECK(symplectic_product(word("X"), word("Z")) == 1);
  std::mt19937 rng(3);
  for (int t = 0; t < 40; ++t) {
    Bits u(8), v(8);
    for (auto& b : u) b = rng() & 1;
    for (auto& b : v) b = rng() & 1;
    auto pu = from_symplectic(u), pv = from_symplectic(v);
    CHECK(symplectic_product(pu, pu) == 0);
    CHECK(symplectic_product(pu, pv) == symplectic_product(pv, pu));
  }
  CHECK_THROWS_AS(symplectic_product(word("XX"), word("X")), ValidationError);
}

TEST_CASE("multiply matches the dense matrix product") {
  // X*Z = XZ (real Y, phase 0); Z*X picks up the sign.
  auto xz = multiply(word("X"), word("Z"));
  CHECK(xz.x == Bits{1});
  CHECK(xz.z == Bits{1});
  CHECK(xz.phase_exp == 0);
  auto zx = multiply(word("Z"), word("X"));
  CHECK(zx.phase_exp == 2);
  CHECK(ts::approx_equal(ts::pauli_matrix(zx),
                         ts::matmul(ts::pauli_matrix(word("Z")), ts::pauli_matrix(word("X")))));

  auto sq = multiply(word("X"), word("X"));
  CHECK(sq == PauliWord::identity(1));

  // Exhaustive phase-exactness on one and two qubits, all phases.
  for (int n = 1; n <= 2; ++n) {
    int patterns = 1 << (2 * n);
    for (int pa = 0; pa < patterns; ++pa)
      for (int fa = 0; fa < 4; ++fa)
        for (int pb = 0; pb < patterns; ++pb)
          for (int fb = 0; fb < 4; ++fb) {
            Bits va(2 * n), vb(2 * n);
            for (int i = 0; i < 2 * n; ++i) {
              va[i] = (pa >> i) & 1;
              vb[i] = (pb >> i) & 1;
            }
            auto a = from_symplectic(va, fa), b = from_symplectic(vb, fb);
            auto prod = multiply(a, b);
            CHECK(ts::approx_equal(ts::pauli_matrix(prod),
                                   ts::matmul(ts::pauli_matrix(a), ts::pauli_matrix(b))));
          }
  }
}

TEST_CASE("multiply associativity on random 3-qubit words") {
  std::mt19937 rng(11);
  for (int t = 0; t < 200; ++t) {
    auto rnd = [&]() {
      Bits v(6);
      for (auto& b : v) b = rng() & 1;
      return from_symplectic(v, int(rng() % 4));
    };
    auto a = rnd(), b = rnd(), c = rnd();
    CHECK(multiply(multiply(a, b), c) == multiply(a, multiply(b, c)));
    CHECK(ts::approx_equal(ts::pauli_matrix(multiply(a, b)),
                           ts::matmul(ts::pauli_matrix(a), ts::pauli_matrix(b))));
  }
}

TEST_CASE("string round trips and conventions") {
  // Letters denote the Hermitian Paulis: a word parsed from Y letters is an
  // involution.
  auto w = word("IXZXY");
  CHECK(w.phase_exp == 1);
  CHECK(w.is_involution());
  CHECK(to_string(w) == "IXZXY");
  CHECK(to_string(word("-iXIZY")) == "-iXIZY");
  CHECK(to_string(word("-XX")) == "-XX");
  // The real XZ prints as -iY.
  CHECK(to_string(multiply(word("X"), word("Z"))) == "-iY");
  CHECK_THROWS_AS(word("XQ"), ParseError);
  CHECK_THROWS_AS(word(""), ParseError);
  CHECK_THROWS_AS(parse_pauli("XX", 3), ParseError);
}
