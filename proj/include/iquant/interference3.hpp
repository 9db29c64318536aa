#pragma once

#include <array>

#include "iquant/qstate.hpp"
#include "iquant/report.hpp"

namespace iquant {

// Coefficient groups of the three-qubit far-field coincidence density. With
// u = 2 k theta zA, v = 2 k theta zB, w = 2 k theta zC the density over one
// period is (1/L^6) [ 1 + 2 * sum(group * mode) ] over 26 oscillatory modes:
// 8 triple modes (products of three trig factors), 12 pair modes, 6 single
// modes. Groups are signed sums of four off-diagonal entries each
// (rho_ij = R_ij + i I_ij, 1-based slit-basis indices); the diagonal never
// enters. Triple modes are ordered ccc, ccs, csc, scc, ssc, css, sss, scs
// (pattern letters are the trig kinds on axes A, B, C).
struct CoefficientGroups3Q {
  // three-particle groups
  double t_ccc = 0.0;  //  R18 + R27 + R36 + R45
  double t_ccs = 0.0;  //  I18 - I27 + I36 - I45
  double t_csc = 0.0;  //  I18 + I27 - I36 - I45
  double t_scc = 0.0;  //  I18 + I27 + I36 + I45
  double t_ssc = 0.0;  // -R18 - R27 + R36 + R45
  double t_css = 0.0;  // -R18 + R27 + R36 - R45
  double t_sss = 0.0;  // -I18 + I27 + I36 - I45
  double t_scs = 0.0;  // -R18 + R27 - R36 + R45
  // two-particle groups, pair AB (first letter = A trig, second = B trig)
  double ab_cc = 0.0;  //  R17 + R28 + R35 + R46
  double ab_cs = 0.0;  //  I17 + I28 - I35 - I46
  double ab_sc = 0.0;  //  I17 + I28 + I35 + I46
  double ab_ss = 0.0;  // -R17 - R28 + R35 + R46
  // pair AC
  double ac_cc = 0.0;  //  R16 + R25 + R38 + R47
  double ac_cs = 0.0;  //  I16 - I25 + I38 - I47
  double ac_sc = 0.0;  //  I16 + I25 + I38 + I47
  double ac_ss = 0.0;  // -R16 + R25 - R38 + R47
  // pair BC
  double bc_cc = 0.0;  //  R14 + R23 + R58 + R67
  double bc_cs = 0.0;  //  I14 - I23 + I58 - I67
  double bc_sc = 0.0;  //  I14 + I23 + I58 + I67
  double bc_ss = 0.0;  // -R14 + R23 - R58 + R67
  // single-particle groups
  double a_cos = 0.0;  //  R15 + R26 + R37 + R48
  double a_sin = 0.0;  //  I15 + I26 + I37 + I48
  double b_cos = 0.0;  //  R13 + R24 + R57 + R68
  double b_sin = 0.0;  //  I13 + I24 + I57 + I68
  double c_cos = 0.0;  //  R12 + R34 + R56 + R78
  double c_sin = 0.0;  //  I12 + I34 + I56 + I78

  double triple(int mode) const;         // mode 0..7 in the order above
  double pair(int p, int t1, int t2) const;  // p: 0=AB 1=AC 2=BC; t: 0=cos 1=sin
  double single(int axis, int t) const;      // axis: 0=A 1=B 2=C
};

// Trig pattern (0 = cos, 1 = sin) per axis for each triple mode, and labels.
extern const std::array<std::array<int, 3>, 8> kTripleModePattern;
extern const std::array<const char*, 8> kTripleModeLabel;

CoefficientGroups3Q coefficient_groups_3q(const DensityMatrix& m);

// GHZ-like imbalances, one per triple mode. For mode (tA,tB,tC):
//   T  = matching triple group
//   P1 = a_{tA} * bc_{tB tC},  P2 = b_{tB} * ac_{tA tC},  P3 = c_{tC} * ab_{tA tB}
//   S  = a_{tA} * b_{tB} * c_{tC}
//   imbalance = 4 |T^2 - 4 (P1 + P2 + P3 - 4 S)^2|
// The subtracted combination 2(P1+P2+P3) - 8S is the triple oscillation
// amplitude reproducible by independent lower-order interference; it equals T
// identically on every (bi)separable factorization, so the imbalance vanishes
// there and reduces to 4 T^2 on GHZ-class states.
std::array<ModeImbalance, 8> ghz_mode_imbalances(const CoefficientGroups3Q& g);

// W-like imbalances, four per particle pair (mode order cc, cs, sc, ss within
// each pair, pairs ordered AB, AC, BC):
//   imbalance = 4 |P^2 - 4 (s1 s2)^2|
// with P the pair group and s1, s2 the matching single-particle groups.
std::array<ModeImbalance, 12> w_mode_imbalances(const CoefficientGroups3Q& g);

struct I3Result {
  CoefficientGroups3Q groups;
  std::array<ModeImbalance, 8> ghz_modes;
  std::array<ModeImbalance, 12> w_modes;
  double pair_sum_ab = 0.0;  // sum of the four AB mode imbalances
  double pair_sum_ac = 0.0;
  double pair_sum_bc = 0.0;
  double i_ghz = 0.0;  // (1/4) * sum of the eight GHZ-mode imbalances
  double i_w = 0.0;    // (9/8)^3 * pair_sum_ab * pair_sum_ac * pair_sum_bc
  double total = 0.0;  // i_ghz + i_w, reported raw
};

I3Result i3_from_groups(const CoefficientGroups3Q& g);
I3Result i3_quantifier(const DensityMatrix& m);

double i_ghz(const DensityMatrix& m);
double i_w(const DensityMatrix& m);

}  // namespace iquant
