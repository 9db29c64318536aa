#include "iquant/interference3.hpp"

#include <cmath>

namespace iquant {

const std::array<std::array<int, 3>, 8> kTripleModePattern = {{
    {0, 0, 0},  // ccc
    {0, 0, 1},  // ccs
    {0, 1, 0},  // csc
    {1, 0, 0},  // scc
    {1, 1, 0},  // ssc
    {0, 1, 1},  // css
    {1, 1, 1},  // sss
    {1, 0, 1},  // scs
}};

const std::array<const char*, 8> kTripleModeLabel = {
    "ccc", "ccs", "csc", "scc", "ssc", "css", "sss", "scs"};

double CoefficientGroups3Q::triple(int mode) const {
  switch (mode) {
    case 0: return t_ccc;
    case 1: return t_ccs;
    case 2: return t_csc;
    case 3: return t_scc;
    case 4: return t_ssc;
    case 5: return t_css;
    case 6: return t_sss;
    default: return t_scs;
  }
}

double CoefficientGroups3Q::pair(int p, int t1, int t2) const {
  const int mode = 2 * t1 + t2;  // cc, cs, sc, ss
  switch (p) {
    case 0:
      return mode == 0 ? ab_cc : mode == 1 ? ab_cs : mode == 2 ? ab_sc : ab_ss;
    case 1:
      return mode == 0 ? ac_cc : mode == 1 ? ac_cs : mode == 2 ? ac_sc : ac_ss;
    default:
      return mode == 0 ? bc_cc : mode == 1 ? bc_cs : mode == 2 ? bc_sc : bc_ss;
  }
}

double CoefficientGroups3Q::single(int axis, int t) const {
  switch (axis) {
    case 0: return t == 0 ? a_cos : a_sin;
    case 1: return t == 0 ? b_cos : b_sin;
    default: return t == 0 ? c_cos : c_sin;
  }
}

CoefficientGroups3Q coefficient_groups_3q(const DensityMatrix& m) {
  if (m.dim() != 8)
    throw DimensionMismatch("coefficient_groups_3q expects an 8x8 density matrix");
  auto R = [&](int i, int j) { return m.entries(i - 1, j - 1).real(); };
  auto I = [&](int i, int j) { return m.entries(i - 1, j - 1).imag(); };

  CoefficientGroups3Q g;
  g.t_ccc =  R(1, 8) + R(2, 7) + R(3, 6) + R(4, 5);
  g.t_ccs =  I(1, 8) - I(2, 7) + I(3, 6) - I(4, 5);
  g.t_csc =  I(1, 8) + I(2, 7) - I(3, 6) - I(4, 5);
  g.t_scc =  I(1, 8) + I(2, 7) + I(3, 6) + I(4, 5);
  g.t_ssc = -R(1, 8) - R(2, 7) + R(3, 6) + R(4, 5);
  g.t_css = -R(1, 8) + R(2, 7) + R(3, 6) - R(4, 5);
  g.t_sss = -I(1, 8) + I(2, 7) + I(3, 6) - I(4, 5);
  g.t_scs = -R(1, 8) + R(2, 7) - R(3, 6) + R(4, 5);

  g.ab_cc =  R(1, 7) + R(2, 8) + R(3, 5) + R(4, 6);
  g.ab_cs =  I(1, 7) + I(2, 8) - I(3, 5) - I(4, 6);
  g.ab_sc =  I(1, 7) + I(2, 8) + I(3, 5) + I(4, 6);
  g.ab_ss = -R(1, 7) - R(2, 8) + R(3, 5) + R(4, 6);

  g.ac_cc =  R(1, 6) + R(2, 5) + R(3, 8) + R(4, 7);
  g.ac_cs =  I(1, 6) - I(2, 5) + I(3, 8) - I(4, 7);
  g.ac_sc =  I(1, 6) + I(2, 5) + I(3, 8) + I(4, 7);
  g.ac_ss = -R(1, 6) + R(2, 5) - R(3, 8) + R(4, 7);

  g.bc_cc =  R(1, 4) + R(2, 3) + R(5, 8) + R(6, 7);
  g.bc_cs =  I(1, 4) - I(2, 3) + I(5, 8) - I(6, 7);
  g.bc_sc =  I(1, 4) + I(2, 3) + I(5, 8) + I(6, 7);
  g.bc_ss = -R(1, 4) + R(2, 3) - R(5, 8) + R(6, 7);

  g.a_cos = R(1, 5) + R(2, 6) + R(3, 7) + R(4, 8);
  g.a_sin = I(1, 5) + I(2, 6) + I(3, 7) + I(4, 8);
  g.b_cos = R(1, 3) + R(2, 4) + R(5, 7) + R(6, 8);
  g.b_sin = I(1, 3) + I(2, 4) + I(5, 7) + I(6, 8);
  g.c_cos = R(1, 2) + R(3, 4) + R(5, 6) + R(7, 8);
  g.c_sin = I(1, 2) + I(3, 4) + I(5, 6) + I(7, 8);
  return g;
}

std::array<ModeImbalance, 8> ghz_mode_imbalances(const CoefficientGroups3Q& g) {
  std::array<ModeImbalance, 8> out;
  for (int mode = 0; mode < 8; ++mode) {
    const int tA = kTripleModePattern[mode][0];
    const int tB = kTripleModePattern[mode][1];
    const int tC = kTripleModePattern[mode][2];

    const double T = g.triple(mode);
    const double sA = g.single(0, tA);
    const double sB = g.single(1, tB);
    const double sC = g.single(2, tC);
    const double P1 = sA * g.pair(2, tB, tC);  // a * bc
    const double P2 = sB * g.pair(1, tA, tC);  // b * ac
    const double P3 = sC * g.pair(0, tA, tB);  // c * ab
    const double S = sA * sB * sC;
    const double lower = P1 + P2 + P3 - 4.0 * S;

    ModeImbalance& mi = out[mode];
    mi.label = kTripleModeLabel[mode];
    mi.two_particle_sq = 4.0 * T * T;
    mi.single_product_sq = 16.0 * lower * lower;
    mi.imbalance = std::abs(mi.two_particle_sq - mi.single_product_sq);
  }
  return out;
}

std::array<ModeImbalance, 12> w_mode_imbalances(const CoefficientGroups3Q& g) {
  static const char* kPairName[3] = {"AB", "AC", "BC"};
  static const int kAxes[3][2] = {{0, 1}, {0, 2}, {1, 2}};
  static const char* kModeName[4] = {"cc", "cs", "sc", "ss"};

  std::array<ModeImbalance, 12> out;
  int idx = 0;
  for (int p = 0; p < 3; ++p) {
    for (int mode = 0; mode < 4; ++mode) {
      const int t1 = mode >> 1;
      const int t2 = mode & 1;
      const double P = g.pair(p, t1, t2);
      const double prod = g.single(kAxes[p][0], t1) * g.single(kAxes[p][1], t2);

      ModeImbalance& mi = out[idx++];
      mi.label = std::string(kPairName[p]) + ":" + kModeName[mode];
      mi.two_particle_sq = 4.0 * P * P;
      mi.single_product_sq = 16.0 * prod * prod;
      mi.imbalance = std::abs(mi.two_particle_sq - mi.single_product_sq);
    }
  }
  return out;
}

I3Result i3_from_groups(const CoefficientGroups3Q& g) {
  I3Result r;
  r.groups = g;
  r.ghz_modes = ghz_mode_imbalances(g);
  r.w_modes = w_mode_imbalances(g);

  double ghz_sum = 0.0;
  for (const auto& mi : r.ghz_modes) ghz_sum += mi.imbalance;
  r.i_ghz = 0.25 * ghz_sum;

  double pair_sums[3] = {0.0, 0.0, 0.0};
  for (int p = 0; p < 3; ++p)
    for (int mode = 0; mode < 4; ++mode) pair_sums[p] += r.w_modes[4 * p + mode].imbalance;
  r.pair_sum_ab = pair_sums[0];
  r.pair_sum_ac = pair_sums[1];
  r.pair_sum_bc = pair_sums[2];

  const double norm = (9.0 / 8.0) * (9.0 / 8.0) * (9.0 / 8.0);
  r.i_w = norm * r.pair_sum_ab * r.pair_sum_ac * r.pair_sum_bc;
  r.total = r.i_ghz + r.i_w;
  return r;
}

I3Result i3_quantifier(const DensityMatrix& m) {
  return i3_from_groups(coefficient_groups_3q(m));
}

double i_ghz(const DensityMatrix& m) { return i3_quantifier(m).i_ghz; }
double i_w(const DensityMatrix& m) { return i3_quantifier(m).i_w; }

}  // namespace iquant
