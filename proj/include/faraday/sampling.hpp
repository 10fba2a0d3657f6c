#pragma once

// Seeded generators for randomized property checks.

#include "faraday/model.hpp"

#include <random>

namespace faraday {

using Rng = std::mt19937_64;

// Random valid config: either case, lambda1 in [0.5, 2], lambda2 in [0, 7],
// delta1 in [5, 70] (CaseII), delta2 in [-70, 70], time in [0, 2pi].
GateConfig random_config(Rng& rng);

// Normalized complex amplitudes with uniform phases.
QubitInput random_input(Rng& rng);

// Real amplitudes of either sign.
QubitInput random_real_input(Rng& rng);

// Swaps + and - on both qubits.
QubitInput mirrored(const QubitInput& q);

}  // namespace faraday
