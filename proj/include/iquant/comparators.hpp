#pragma once

#include <array>

#include "iquant/qstate.hpp"

namespace iquant {

// Standard two-qubit correlation measures plus a three-qubit global discord,
// used as comparators for the interference quantifiers on Werner families.
// All entropies are base 2, so every measure is normalized to 1 at maximal
// correlation.

// Wootters concurrence via the spin-flipped spectrum, computed as the
// singular values of Psi^T (sigma_y x sigma_y) Psi for rho = Psi Psi^dagger
// (numerically stable for singular states).
double concurrence(const DensityMatrix& m);

// h((1 + sqrt(1 - C^2))/2) with h the binary entropy and C the concurrence.
double entanglement_of_formation(const DensityMatrix& m);

struct DiscordResult {
  double value = 0.0;
  bool converged = false;
  // Optimal projective measurement (Bloch angles) on the measured party.
  double theta = 0.0;
  double phi = 0.0;
  int evaluations = 0;
};

// Quantum discord with projective measurements on the chosen party
// ('A' or 'B'): S(rho_other) - S(rho) + min over bases of the conditional
// entropy. Optimization is a deterministic 64x32 grid over the Bloch angles
// followed by Nelder-Mead refinement (converged when the simplex value spread
// drops below 1e-9; non-convergence is reported through the flag, with the
// best value found).
DiscordResult discord_2q(const DensityMatrix& m, char measured_party);

struct GlobalDiscordResult {
  double value = 0.0;
  bool converged = false;
  std::array<double, 6> angles{};  // (theta, phi) per qubit at the optimum
  int evaluations = 0;
};

// Global discord for three qubits: minimum over products of local projective
// measurements Phi of
//   [S(Phi(rho)) - S(rho)] - sum_j [S(Phi_j(rho_j)) - S(rho_j)].
// Same grid-plus-refinement strategy (8x4 Bloch-angle grid per qubit).
GlobalDiscordResult global_discord_3q(const DensityMatrix& m);

}  // namespace iquant
