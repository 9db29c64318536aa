#pragma once

#include <string>

namespace iquant {

// One linearly independent oscillatory detection mode.
//
// two_particle_sq holds the squared genuine multi-particle coefficient of the
// mode (the three-particle coefficient for triple modes) and single_product_sq
// the squared product of the lower-order coefficients that could explain the
// same oscillation, both with the mode's fixed prefactors folded in, so that
//
//   imbalance == |two_particle_sq - single_product_sq|
//
// holds for every record. A nonzero imbalance signals oscillation in the
// coincidence rate that cannot be produced by independent lower-order
// interference, which is what the quantifiers accumulate.
struct ModeImbalance {
  std::string label;
  double two_particle_sq = 0.0;
  double single_product_sq = 0.0;
  double imbalance = 0.0;
};

}  // namespace iquant
