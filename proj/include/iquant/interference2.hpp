#pragma once

#include <array>

#include "iquant/qstate.hpp"
#include "iquant/report.hpp"

namespace iquant {

// Coefficient groups of the two-qubit far-field coincidence density. With
// u = 2 k theta zA and v = 2 k theta zB the density over one period is
//
//   (1/L^4) [ 1 + 2 ( cc cos u cos v + ss sin u sin v
//                   + sc sin u cos v + cs cos u sin v
//                   + a_cos cos u + a_sin sin u
//                   + b_cos cos v + b_sin sin v ) ]
//
// where each group is a signed sum of off-diagonal entries rho_ij = R_ij + i I_ij
// (1-based indices in the slit basis). All groups ignore the diagonal.
struct CoefficientGroups2Q {
  // two-particle modes
  double cc = 0.0;  // R23 + R14
  double ss = 0.0;  // R23 - R14
  double sc = 0.0;  // I23 + I14
  double cs = 0.0;  // I14 - I23
  // single-particle modes
  double a_cos = 0.0;  // R13 + R24
  double a_sin = 0.0;  // I13 + I24
  double b_cos = 0.0;  // R12 + R34
  double b_sin = 0.0;  // I12 + I34

  double pair(int t1, int t2) const;    // t: 0 = cos, 1 = sin; (t1,t2) = (A,B)
  double single(int axis, int t) const; // axis: 0 = A, 1 = B
};

CoefficientGroups2Q coefficient_groups_2q(const DensityMatrix& m);

struct I2Result {
  CoefficientGroups2Q groups;
  std::array<ModeImbalance, 4> modes;  // cc, ss, sc, cs
  double total = 0.0;                  // 2 * sum of the four imbalances
};

// Assembles the quantifier from already-computed groups (used both by the
// closed-form path and by the Fourier-extraction oracle).
I2Result i2_from_groups(const CoefficientGroups2Q& g);

// Two-qubit interference quantifier
//   I2 = 2 * ( |cc^2 - 4 (a_cos b_cos)^2| + |ss^2 - 4 (a_sin b_sin)^2|
//            + |sc^2 - 4 (a_sin b_cos)^2| + |cs^2 - 4 (a_cos b_sin)^2| ).
// Reported raw (no clamping above 1).
I2Result i2_quantifier(const DensityMatrix& m);

}  // namespace iquant
