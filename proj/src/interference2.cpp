#include "iquant/interference2.hpp"

#include <cmath>

namespace iquant {

double CoefficientGroups2Q::pair(int t1, int t2) const {
  if (t1 == 0) return t2 == 0 ? cc : cs;
  return t2 == 0 ? sc : ss;
}

double CoefficientGroups2Q::single(int axis, int t) const {
  if (axis == 0) return t == 0 ? a_cos : a_sin;
  return t == 0 ? b_cos : b_sin;
}

CoefficientGroups2Q coefficient_groups_2q(const DensityMatrix& m) {
  if (m.dim() != 4)
    throw DimensionMismatch("coefficient_groups_2q expects a 4x4 density matrix");
  // 1-based entry access matching the documented basis order.
  auto R = [&](int i, int j) { return m.entries(i - 1, j - 1).real(); };
  auto I = [&](int i, int j) { return m.entries(i - 1, j - 1).imag(); };

  CoefficientGroups2Q g;
  g.cc = R(2, 3) + R(1, 4);
  g.ss = R(2, 3) - R(1, 4);
  g.sc = I(2, 3) + I(1, 4);
  g.cs = I(1, 4) - I(2, 3);
  g.a_cos = R(1, 3) + R(2, 4);
  g.a_sin = I(1, 3) + I(2, 4);
  g.b_cos = R(1, 2) + R(3, 4);
  g.b_sin = I(1, 2) + I(3, 4);
  return g;
}

I2Result i2_from_groups(const CoefficientGroups2Q& g) {
  static const char* kLabel[4] = {"cc", "ss", "sc", "cs"};
  static const int kPattern[4][2] = {{0, 0}, {1, 1}, {1, 0}, {0, 1}};

  I2Result r;
  r.groups = g;
  double sum = 0.0;
  for (int mode = 0; mode < 4; ++mode) {
    const int tA = kPattern[mode][0];
    const int tB = kPattern[mode][1];
    const double T = g.pair(tA, tB);
    const double prod = g.single(0, tA) * g.single(1, tB);

    ModeImbalance& mi = r.modes[mode];
    mi.label = kLabel[mode];
    mi.two_particle_sq = T * T;
    mi.single_product_sq = 4.0 * prod * prod;
    mi.imbalance = std::abs(mi.two_particle_sq - mi.single_product_sq);
    sum += mi.imbalance;
  }
  r.total = 2.0 * sum;
  return r;
}

I2Result i2_quantifier(const DensityMatrix& m) {
  return i2_from_groups(coefficient_groups_2q(m));
}

}  // namespace iquant
