#pragma once

// Test-only Hamiltonian built from raw energies: each basis state's energy
// is its atomic level plus the photons still in the field, and the couplings
// are read straight off the interaction terms. Shifting by w0 + W1 + W2
// should reproduce the library's rotating-frame matrix.

#include "faraday/model.hpp"

namespace faraday::oracle {

inline Matrix9 lab_frame_hamiltonian(const LevelFrequencies& f, double l1,
                                     double l2) {
  const double a = f.photon_a;
  const double b = f.photon_b;
  const double e[kDim] = {f.w2,          a + f.w1_plus,    a + f.w1_minus,
                          a + f.w1_plus, a + f.w1_minus,   a + b + f.w0,
                          a + b + f.w0,  a + b + f.w0,     a + b + f.w0};
  Matrix9 h = Matrix9::Zero();
  for (int i = 0; i < kDim; ++i) h(i, i) = e[i] - (f.w0 + a + b);
  // 1-based pairs
  const int lower[4][2] = {{7, 2}, {9, 4}, {6, 3}, {8, 5}};
  const int upper[2][2] = {{1, 2}, {1, 5}};
  for (const auto& p : lower) {
    h(p[0] - 1, p[1] - 1) = l1;
    h(p[1] - 1, p[0] - 1) = l1;
  }
  for (const auto& p : upper) {
    h(p[0] - 1, p[1] - 1) = l2;
    h(p[1] - 1, p[0] - 1) = l2;
  }
  return h;
}

}  // namespace faraday::oracle
