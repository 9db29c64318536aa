#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <string>
#include <vector>

#include "iquant/errors.hpp"

namespace iquant {

// Basis convention. dim 4: indices 1..4 (documentation, 1-based) correspond to
// |00>, |01>, |10>, |11> with qubit A most significant. dim 8: indices 1..8
// correspond to |000> .. |111> for qubits A, B, C. Storage is 0-based.
// For each particle, bit value 0 means slit 1 and bit value 1 means slit 2.

struct PureState {
  Eigen::VectorXcd amps;

  int dim() const { return static_cast<int>(amps.size()); }
  int qubits() const { return dim() == 2 ? 1 : dim() == 4 ? 2 : 3; }
  double norm_deviation() const { return std::abs(amps.norm() - 1.0); }
};

// Density matrix of a two- or three-qubit system. Hermitian exactly as stored:
// construction symmetrizes via (M + M^dagger)/2 and forces a real diagonal.
struct DensityMatrix {
  Eigen::MatrixXcd entries;

  int dim() const { return static_cast<int>(entries.rows()); }
  int qubits() const { return dim() == 4 ? 2 : 3; }
};

struct ValidationTolerances {
  double trace_tol = 1e-12;  // |tr(rho) - 1| must not exceed this
  double eig_floor = 1e-10;  // minimum eigenvalue must be >= -eig_floor
};

struct ValidationReport {
  double hermiticity_deviation = 0.0;
  double trace_deviation = 0.0;
  double min_eigenvalue = 0.0;
  bool ok = false;
  std::vector<std::string> issues;
};

// Builds a DensityMatrix from raw entries (dim 4 or 8), symmetrizing.
// If hermiticity_deviation is non-null it receives max_ij |raw_ij - sym_ij|.
DensityMatrix density_from_entries(const Eigen::MatrixXcd& raw,
                                   double* hermiticity_deviation = nullptr);

ValidationReport validate(const DensityMatrix& m, const ValidationTolerances& tol = {});

// Throws TraceDeviation / NegativeEigenvalue / NonHermitian with the offending
// magnitude when the corresponding invariant fails.
void enforce_valid(const DensityMatrix& m, const ValidationTolerances& tol = {});

// Rank-1 projector |v><v|. Throws NormDeviation if ||v|| is off by more than 1e-9.
DensityMatrix from_pure(const PureState& v);

// p |psi-><psi-| + (1-p)/4 I with psi- = (|01> - |10>)/sqrt(2).
DensityMatrix werner_2q(double p);

// p |GHZ><GHZ| + (1-p)/8 I with GHZ = (|000> + |111>)/sqrt(2).
DensityMatrix werner_ghz(double p);

// Named-state parser. Accepted names:
//   bell-phi+  bell-phi-  bell-psi+  bell-psi-  ghz  w
//   phased-w(phi1,phi2)   phi(theta,phi)   psi(theta,phi)
//   ghz-alpha(alpha,phi)  product(t1,p1,t2,p2[,t3,p3])
// Angles are radians. Throws UnknownState for anything else.
PureState standard_state(const std::string& name);

// Typed constructors behind the parser.
PureState phi_state(double theta, double phi);        // cos t|00> + e^{i p} sin t|11>
PureState psi_state(double theta, double phi);        // cos t|01> + e^{i p} sin t|10>
PureState ghz_alpha_state(double alpha, double phi);  // cos a|000> + e^{i p} sin a|111>
PureState phased_w_state(double phi1, double phi2);   // (|100> + e^{i phi1}|010> + e^{i phi2}|001>)/sqrt(3)
PureState product_state(const std::vector<double>& angles);  // {t1,p1,t2,p2[,t3,p3]}

// Reproducible pseudo-random density matrix: mixture of `rank` random pure
// states with random convex weights. Identical (dim, rank, seed) gives a
// bit-identical matrix. dim must be 4 or 8, 1 <= rank <= dim.
DensityMatrix random_density(int dim, int rank, std::uint64_t seed);

// (U1 x U2 [x U3]) m (U1 x U2 [x U3])^dagger, qubit A leftmost factor.
// Each unitary must satisfy ||U^dagger U - I||_max <= 1e-9.
DensityMatrix apply_local_unitary(const DensityMatrix& m,
                                  const std::vector<Eigen::Matrix2cd>& us);

// Partial trace keeping the listed qubits (0 = A, ascending order kept).
DensityMatrix partial_trace_keep(const DensityMatrix& m, const std::vector<int>& keep);

// Single-qubit reduced state.
Eigen::Matrix2cd reduced_qubit(const DensityMatrix& m, int qubit);

}  // namespace iquant
