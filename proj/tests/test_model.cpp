#include "faraday/model.hpp"

#include "lab_frame_oracle.hpp"

#include <doctest.h>

#include <cmath>

using namespace faraday;

namespace {

double max_gap(const Matrix9& a, const Matrix9& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

}  // namespace

TEST_CASE("basis numbering round-trips") {
  for (int i = 0; i < kDim; ++i) {
    CHECK(slot(kAllBasis[i]) == i);
    CHECK(number(kAllBasis[i]) == i + 1);
    CHECK_FALSE(label(kAllBasis[i]).empty());
  }
}

TEST_CASE("case names parse") {
  CHECK(parse_case("I") == CaseKind::CaseI);
  CHECK(parse_case("1") == CaseKind::CaseI);
  CHECK(parse_case("II") == CaseKind::CaseII);
  CHECK(parse_case("CaseII") == CaseKind::CaseII);
  CHECK_THROWS_AS(parse_case("III"), InvalidConfig);
  CHECK(parse_case(to_string(CaseKind::CaseII)) == CaseKind::CaseII);
}

TEST_CASE("hamiltonian matches the lab-frame construction") {
  // Raw energies with W1 = 1000, W2 = 700: only the detunings survive.
  LevelFrequencies f;
  f.w0 = 3.0;
  f.photon_b = 1000.0;
  f.photon_a = 700.0;

  SUBCASE("case I") {
    f.w1_plus = f.w1_minus = f.w0 + f.photon_b;
    f.w2 = f.w0 + f.photon_b + f.photon_a + 5.0;
    const GateConfig c =
        config_from_frequencies(CaseKind::CaseI, f, 1.0, 2.5, 1.0);
    CHECK(c.delta1 == doctest::Approx(0.0));
    CHECK(c.delta2 == doctest::Approx(5.0));
    CHECK(max_gap(build_hamiltonian(c),
                  oracle::lab_frame_hamiltonian(f, 1.0, 2.5)) < 1e-9);
  }
  SUBCASE("case II") {
    f.w1_minus = f.w0 + f.photon_b;
    f.w1_plus = f.w1_minus + 15.0;
    f.w2 = f.w0 + f.photon_b + f.photon_a + 30.0;
    const GateConfig c =
        config_from_frequencies(CaseKind::CaseII, f, 1.0, 2.5, 1.0);
    CHECK(c.delta1 == doctest::Approx(15.0));
    CHECK(c.delta2 == doctest::Approx(30.0));
    CHECK(max_gap(build_hamiltonian(c),
                  oracle::lab_frame_hamiltonian(f, 1.0, 2.5)) < 1e-9);
  }
  SUBCASE("resonance conditions are enforced") {
    f.w1_minus = f.w0 + f.photon_b + 1.0;
    f.w1_plus = f.w1_minus;
    f.w2 = f.w0 + f.photon_b + f.photon_a;
    CHECK_THROWS_AS(config_from_frequencies(CaseKind::CaseII, f, 1, 1, 1),
                    InvalidConfig);
  }
}

TEST_CASE("hamiltonian entries for a concrete case II config") {
  GateConfig c;
  c.kind = CaseKind::CaseII;
  c.lambda1 = 1.0;
  c.lambda2 = 2.0;
  c.delta1 = 3.0;
  c.delta2 = 4.0;
  const Matrix9 h = build_hamiltonian(c);

  CHECK(h(0, 0).real() == 4.0);
  CHECK(h(1, 1).real() == 3.0);
  CHECK(h(3, 3).real() == 3.0);
  CHECK(h(2, 2).real() == 0.0);
  CHECK(std::abs(h(6, 1)) == 1.0);
  CHECK(std::abs(h(8, 3)) == 1.0);
  CHECK(std::abs(h(5, 2)) == 1.0);
  CHECK(std::abs(h(7, 4)) == 1.0);
  CHECK(std::abs(h(0, 1)) == 2.0);
  CHECK(std::abs(h(0, 4)) == 2.0);
  CHECK(max_gap(h, h.adjoint()) == 0.0);

  // Twelve off-diagonal nonzeros (six couplings, both triangles).
  int nonzero = 0;
  for (int i = 0; i < kDim; ++i)
    for (int j = 0; j < kDim; ++j)
      if (i != j && h(i, j) != Complex{}) ++nonzero;
  CHECK(nonzero == 12);
}

TEST_CASE("decoupled pairs have no links to the rest") {
  const Matrix9 h = build_hamiltonian(GateConfig{});
  const int pairs[2][2] = {{slot(Basis::APlusBPlus), slot(Basis::APlusUpMinus)},
                           {slot(Basis::AMinusBMinus),
                            slot(Basis::AMinusUpPlus)}};
  for (const auto& p : pairs) {
    for (int k = 0; k < kDim; ++k) {
      if (k == p[0] || k == p[1]) continue;
      CHECK(h(p[0], k) == Complex{});
      CHECK(h(p[1], k) == Complex{});
    }
  }
}

TEST_CASE("config validation") {
  GateConfig c;
  CHECK_NOTHROW(c.validate());
  c.delta1 = 1.0;
  CHECK_THROWS_AS(c.validate(), InvalidConfig);
  c = GateConfig{};
  c.lambda1 = 0.0;
  CHECK_THROWS_AS(c.validate(), InvalidConfig);
  c = GateConfig{};
  c.time = -1.0;
  CHECK_THROWS_AS(c.validate(), InvalidConfig);
  c = GateConfig{};
  c.lambda2 = std::nan("");
  CHECK_THROWS_AS(c.validate(), InvalidConfig);
}

TEST_CASE("input embedding") {
  const QubitInput q{Complex{0.6, 0}, Complex{0, 0.8}, Complex{0.8, 0},
                     Complex{0.6, 0}};
  const Vector9 v = embed_input(q);
  CHECK(std::abs(amp(v, Basis::APlusBPlus) - Complex{0.48, 0}) < 1e-15);
  CHECK(std::abs(amp(v, Basis::APlusBMinus) - Complex{0.36, 0}) < 1e-15);
  CHECK(std::abs(amp(v, Basis::AMinusBPlus) - Complex{0, 0.64}) < 1e-15);
  CHECK(std::abs(amp(v, Basis::AMinusBMinus) - Complex{0, 0.48}) < 1e-15);
  for (int i = 0; i < 5; ++i) CHECK(v(i) == Complex{});
  CHECK(v.squaredNorm() == doctest::Approx(1.0).epsilon(1e-14));

  CHECK_THROWS_AS(embed_input(QubitInput{1.0, 1.0, 1.0, 0.0}), InvalidInput);
  CHECK_THROWS_AS(embed_input(QubitInput{1.0, 0.0, 0.5, 0.0}), InvalidInput);
}

TEST_CASE("real and basis input helpers") {
  const QubitInput q = QubitInput::real(0.25, kBeta2.plus, kBeta2.minus);
  CHECK(std::norm(q.alpha_minus) == doctest::Approx(0.25));
  CHECK(std::norm(q.alpha_plus) == doctest::Approx(0.75));
  CHECK_NOTHROW(q.validate());

  const Vector9 v = embed_input(QubitInput::basis(Basis::APlusBMinus));
  CHECK(amp(v, Basis::APlusBMinus) == Complex{1.0, 0.0});
  CHECK(v.squaredNorm() == 1.0);
  CHECK_THROWS(QubitInput::basis(Basis::Upper));
}
