#include "iquant/doubleslit.hpp"

#include <array>
#include <cmath>
#include <complex>
#include <cstdio>
#include <vector>

#include "iquant/errors.hpp"

namespace iquant {

namespace {

double ipow(double base, int exp) {
  double out = 1.0;
  for (int i = 0; i < exp; ++i) out *= base;
  return out;
}

// Signed detector coordinate sum s_X(z) = sum_axes sigma * z_axis with
// sigma = -1 for slit 1 (bit 0) and +1 for slit 2 (bit 1).
double slit_coordinate_sum(int state, int nq, const double* z) {
  double s = 0.0;
  for (int a = 0; a < nq; ++a) {
    const int bit = (state >> (nq - 1 - a)) & 1;
    s += (bit != 0 ? 1.0 : -1.0) * z[a];
  }
  return s;
}

// <z|rho|z> with per-axis slit amplitudes exp(i k theta sigma z) / L. The
// quadratic form is evaluated directly from the density matrix so that this
// density is an oracle independent of the closed-form coefficient tables.
double density_impl(const DensityMatrix& m, const SlitGeometry& g,
                    const double* z, int nq, bool envelope) {
  const int dim = 1 << nq;
  std::array<std::complex<double>, 8> v{};
  std::array<double, 8> s{};
  for (int x = 0; x < dim; ++x) {
    s[static_cast<size_t>(x)] = slit_coordinate_sum(x, nq, z);
    v[static_cast<size_t>(x)] =
        std::polar(1.0, g.k * g.theta * s[static_cast<size_t>(x)]);
  }
  std::complex<double> acc = 0.0;
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j)
      acc += v[static_cast<size_t>(i)] * m.entries(i, j) *
             std::conj(v[static_cast<size_t>(j)]);
  const double inv = 1.0 / ipow(g.L, 2 * nq);
  double val = acc.real() * inv;
  if (envelope) {
    // Keep the first-order 1/r amplitude envelopes on the no-interference
    // (diagonal) terms: rho_xx / (L^{2n-1} (L + 2 theta s_x)).
    const double lpow = ipow(g.L, 2 * nq - 1);
    for (int x = 0; x < dim; ++x) {
      const double den = g.L + 2.0 * g.theta * s[static_cast<size_t>(x)];
      if (den <= 0.0) {
        char msg[160];
        std::snprintf(msg, sizeof(msg),
                      "envelope denominator %.6g <= 0 for basis state %d",
                      den, x + 1);
        throw EnvelopeSingularity(msg, std::vector<double>(z, z + nq));
      }
      val += m.entries(x, x).real() * (1.0 / (lpow * den) - inv);
    }
  }
  return val;
}

std::vector<double> grid_positions(const SlitGeometry& g, int n) {
  const double ell = g.period();
  std::vector<double> z(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i)
    z[static_cast<size_t>(i)] = -0.5 * ell + ell * static_cast<double>(i) / n;
  return z;
}

// cos/sin of u_i = 2 k theta z_i = -pi + 2 pi i / n on the sampling grid.
void trig_tables(int n, std::vector<double>& c, std::vector<double>& s) {
  c.resize(static_cast<size_t>(n));
  s.resize(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    const double u = -std::numbers::pi + 2.0 * std::numbers::pi * i / n;
    c[static_cast<size_t>(i)] = std::cos(u);
    s[static_cast<size_t>(i)] = std::sin(u);
  }
}

}  // namespace

std::optional<std::string> SlitGeometry::farfield_warning() const {
  const double excursion = 2.0 * theta * (period() / 2.0);
  if (excursion > L / 100.0) {
    char msg[200];
    std::snprintf(msg, sizeof(msg),
                  "far-field approximation is marginal: transverse excursion "
                  "%.6g over one period exceeds L/100 = %.6g",
                  excursion, L / 100.0);
    return std::string(msg);
  }
  return std::nullopt;
}

double farfield_density_2q(const DensityMatrix& m, const SlitGeometry& g,
                           double zA, double zB, bool envelope) {
  if (m.dim() != 4)
    throw DimensionMismatch("farfield_density_2q needs a dim-4 state");
  const double z[2] = {zA, zB};
  return density_impl(m, g, z, 2, envelope);
}

double farfield_density_3q(const DensityMatrix& m, const SlitGeometry& g,
                           double zA, double zB, double zC, bool envelope) {
  if (m.dim() != 8)
    throw DimensionMismatch("farfield_density_3q needs a dim-8 state");
  const double z[3] = {zA, zB, zC};
  return density_impl(m, g, z, 3, envelope);
}

GridDensity sample_grid(const DensityMatrix& m, const SlitGeometry& g,
                        int n, bool envelope) {
  if (n < 1) throw ParameterOutOfRange("sample_grid: grid size must be >= 1");
  const int nq = m.qubits();
  const std::vector<double> z = grid_positions(g, n);
  GridDensity out;
  out.axis_names = (nq == 2) ? std::vector<std::string>{"zA", "zB"}
                             : std::vector<std::string>{"zA", "zB", "zC"};
  out.axes.assign(static_cast<size_t>(nq), z);
  if (nq == 2) {
    out.values.reserve(static_cast<size_t>(n) * static_cast<size_t>(n));
    for (int iA = 0; iA < n; ++iA)
      for (int iB = 0; iB < n; ++iB)
        out.values.push_back(farfield_density_2q(
            m, g, z[static_cast<size_t>(iA)], z[static_cast<size_t>(iB)], envelope));
  } else {
    out.values.reserve(static_cast<size_t>(n) * static_cast<size_t>(n) *
                       static_cast<size_t>(n));
    for (int iA = 0; iA < n; ++iA)
      for (int iB = 0; iB < n; ++iB)
        for (int iC = 0; iC < n; ++iC)
          out.values.push_back(farfield_density_3q(
              m, g, z[static_cast<size_t>(iA)], z[static_cast<size_t>(iB)],
              z[static_cast<size_t>(iC)], envelope));
  }
  return out;
}

GridDensity marginal_pattern(const DensityMatrix& m, const SlitGeometry& g,
                             char particle, int n) {
  if (n < 2) throw GridTooCoarse("marginal_pattern: need at least 2 samples");
  const int nq = m.qubits();
  const int axis = particle == 'A' ? 0 : particle == 'B' ? 1 : particle == 'C' ? 2 : -1;
  if (axis < 0 || axis >= nq)
    throw ParameterOutOfRange(std::string("marginal_pattern: no particle '") +
                              particle + "' in this system");
  const std::vector<double> z = grid_positions(g, n);
  GridDensity out;
  out.axis_names = {std::string("z") + particle};
  out.axes = {z};
  out.values.assign(static_cast<size_t>(n), 0.0);
  const double norm = (nq == 2) ? static_cast<double>(n)
                                : static_cast<double>(n) * static_cast<double>(n);
  for (int i = 0; i < n; ++i) {
    double sum = 0.0;
    if (nq == 2) {
      for (int jo = 0; jo < n; ++jo) {
        const double zA = (axis == 0) ? z[static_cast<size_t>(i)] : z[static_cast<size_t>(jo)];
        const double zB = (axis == 1) ? z[static_cast<size_t>(i)] : z[static_cast<size_t>(jo)];
        sum += farfield_density_2q(m, g, zA, zB, false);
      }
    } else {
      for (int jo = 0; jo < n; ++jo)
        for (int ko = 0; ko < n; ++ko) {
          double zz[3];
          int other = 0;
          for (int a = 0; a < 3; ++a) {
            if (a == axis) {
              zz[a] = z[static_cast<size_t>(i)];
            } else {
              zz[a] = z[static_cast<size_t>(other == 0 ? jo : ko)];
              ++other;
            }
          }
          sum += farfield_density_3q(m, g, zz[0], zz[1], zz[2], false);
        }
    }
    out.values[static_cast<size_t>(i)] = sum / norm;
  }
  return out;
}

CoefficientGroups2Q extract_mode_coefficients_2q(
    const std::function<double(double, double)>& density,
    const SlitGeometry& g, int n) {
  if (n < 8)
    throw GridTooCoarse("extract_mode_coefficients_2q: need n >= 8 samples per axis");
  const std::vector<double> z = grid_positions(g, n);
  std::vector<double> c, s;
  trig_tables(n, c, s);

  std::vector<double> values(static_cast<size_t>(n) * static_cast<size_t>(n));
  for (int iA = 0; iA < n; ++iA)
    for (int iB = 0; iB < n; ++iB)
      values[static_cast<size_t>(iA * n + iB)] =
          density(z[static_cast<size_t>(iA)], z[static_cast<size_t>(iB)]);

  double cc = 0.0, ss = 0.0, sc = 0.0, cs = 0.0;
  std::vector<double> margA(static_cast<size_t>(n), 0.0);
  std::vector<double> margB(static_cast<size_t>(n), 0.0);
  for (int iA = 0; iA < n; ++iA) {
    for (int iB = 0; iB < n; ++iB) {
      const double v = values[static_cast<size_t>(iA * n + iB)];
      cc += v * c[static_cast<size_t>(iA)] * c[static_cast<size_t>(iB)];
      ss += v * s[static_cast<size_t>(iA)] * s[static_cast<size_t>(iB)];
      sc += v * s[static_cast<size_t>(iA)] * c[static_cast<size_t>(iB)];
      cs += v * c[static_cast<size_t>(iA)] * s[static_cast<size_t>(iB)];
      margA[static_cast<size_t>(iA)] += v;
      margB[static_cast<size_t>(iB)] += v;
    }
  }
  const double l4 = ipow(g.L, 4);
  const double n2 = static_cast<double>(n) * static_cast<double>(n);
  CoefficientGroups2Q out;
  out.cc = 2.0 * l4 * cc / n2;
  out.ss = 2.0 * l4 * ss / n2;
  out.sc = 2.0 * l4 * sc / n2;
  out.cs = 2.0 * l4 * cs / n2;
  double ac = 0.0, as = 0.0, bc = 0.0, bs = 0.0;
  for (int i = 0; i < n; ++i) {
    ac += (margA[static_cast<size_t>(i)] / n) * c[static_cast<size_t>(i)];
    as += (margA[static_cast<size_t>(i)] / n) * s[static_cast<size_t>(i)];
    bc += (margB[static_cast<size_t>(i)] / n) * c[static_cast<size_t>(i)];
    bs += (margB[static_cast<size_t>(i)] / n) * s[static_cast<size_t>(i)];
  }
  out.a_cos = l4 * ac / n;
  out.a_sin = l4 * as / n;
  out.b_cos = l4 * bc / n;
  out.b_sin = l4 * bs / n;
  return out;
}

CoefficientGroups3Q extract_mode_coefficients_3q(
    const std::function<double(double, double, double)>& density,
    const SlitGeometry& g, int n) {
  if (n < 8)
    throw GridTooCoarse("extract_mode_coefficients_3q: need n >= 8 samples per axis");
  const std::vector<double> z = grid_positions(g, n);
  std::vector<double> c, s;
  trig_tables(n, c, s);

  std::array<double, 8> trip{};
  std::array<double, 4> pab{}, pac{}, pbc{};  // mode index 2*t1 + t2
  std::vector<double> margA(static_cast<size_t>(n), 0.0);
  std::vector<double> margB(static_cast<size_t>(n), 0.0);
  std::vector<double> margC(static_cast<size_t>(n), 0.0);
  for (int iA = 0; iA < n; ++iA) {
    const double ca = c[static_cast<size_t>(iA)], sa = s[static_cast<size_t>(iA)];
    for (int iB = 0; iB < n; ++iB) {
      const double cb = c[static_cast<size_t>(iB)], sb = s[static_cast<size_t>(iB)];
      for (int iC = 0; iC < n; ++iC) {
        const double cg = c[static_cast<size_t>(iC)], sg = s[static_cast<size_t>(iC)];
        const double v = density(z[static_cast<size_t>(iA)],
                                 z[static_cast<size_t>(iB)],
                                 z[static_cast<size_t>(iC)]);
        const double ta[2] = {ca, sa}, tb[2] = {cb, sb}, tc[2] = {cg, sg};
        for (int t = 0; t < 8; ++t) {
          const auto& p = kTripleModePattern[static_cast<size_t>(t)];
          trip[static_cast<size_t>(t)] += v * ta[p[0]] * tb[p[1]] * tc[p[2]];
        }
        for (int t1 = 0; t1 < 2; ++t1)
          for (int t2 = 0; t2 < 2; ++t2) {
            pab[static_cast<size_t>(2 * t1 + t2)] += v * ta[t1] * tb[t2];
            pac[static_cast<size_t>(2 * t1 + t2)] += v * ta[t1] * tc[t2];
            pbc[static_cast<size_t>(2 * t1 + t2)] += v * tb[t1] * tc[t2];
          }
        margA[static_cast<size_t>(iA)] += v;
        margB[static_cast<size_t>(iB)] += v;
        margC[static_cast<size_t>(iC)] += v;
      }
    }
  }
  const double l6 = ipow(g.L, 6);
  const double n3 =
      static_cast<double>(n) * static_cast<double>(n) * static_cast<double>(n);
  CoefficientGroups3Q out;
  out.t_ccc = 4.0 * l6 * trip[0] / n3;
  out.t_ccs = 4.0 * l6 * trip[1] / n3;
  out.t_csc = 4.0 * l6 * trip[2] / n3;
  out.t_scc = 4.0 * l6 * trip[3] / n3;
  out.t_ssc = 4.0 * l6 * trip[4] / n3;
  out.t_css = 4.0 * l6 * trip[5] / n3;
  out.t_sss = 4.0 * l6 * trip[6] / n3;
  out.t_scs = 4.0 * l6 * trip[7] / n3;
  out.ab_cc = 2.0 * l6 * pab[0] / n3;
  out.ab_cs = 2.0 * l6 * pab[1] / n3;
  out.ab_sc = 2.0 * l6 * pab[2] / n3;
  out.ab_ss = 2.0 * l6 * pab[3] / n3;
  out.ac_cc = 2.0 * l6 * pac[0] / n3;
  out.ac_cs = 2.0 * l6 * pac[1] / n3;
  out.ac_sc = 2.0 * l6 * pac[2] / n3;
  out.ac_ss = 2.0 * l6 * pac[3] / n3;
  out.bc_cc = 2.0 * l6 * pbc[0] / n3;
  out.bc_cs = 2.0 * l6 * pbc[1] / n3;
  out.bc_sc = 2.0 * l6 * pbc[2] / n3;
  out.bc_ss = 2.0 * l6 * pbc[3] / n3;
  const double n2 = static_cast<double>(n) * static_cast<double>(n);
  double singles[6] = {0, 0, 0, 0, 0, 0};  // a_cos a_sin b_cos b_sin c_cos c_sin
  for (int i = 0; i < n; ++i) {
    singles[0] += (margA[static_cast<size_t>(i)] / n2) * c[static_cast<size_t>(i)];
    singles[1] += (margA[static_cast<size_t>(i)] / n2) * s[static_cast<size_t>(i)];
    singles[2] += (margB[static_cast<size_t>(i)] / n2) * c[static_cast<size_t>(i)];
    singles[3] += (margB[static_cast<size_t>(i)] / n2) * s[static_cast<size_t>(i)];
    singles[4] += (margC[static_cast<size_t>(i)] / n2) * c[static_cast<size_t>(i)];
    singles[5] += (margC[static_cast<size_t>(i)] / n2) * s[static_cast<size_t>(i)];
  }
  out.a_cos = l6 * singles[0] / n;
  out.a_sin = l6 * singles[1] / n;
  out.b_cos = l6 * singles[2] / n;
  out.b_sin = l6 * singles[3] / n;
  out.c_cos = l6 * singles[4] / n;
  out.c_sin = l6 * singles[5] / n;
  return out;
}

OracleReport oracle_verify(const DensityMatrix& m, const SlitGeometry& g, int n) {
  OracleReport r;
  r.dim = m.dim();
  auto push = [](std::vector<GroupDeviation>& rows, const char* label,
                 double closed, double extracted) {
    GroupDeviation d;
    d.label = label;
    d.closed_form = closed;
    d.extracted = extracted;
    d.deviation = std::abs(extracted - closed);
    rows.push_back(std::move(d));
  };
  if (m.dim() == 4) {
    const CoefficientGroups2Q closed = coefficient_groups_2q(m);
    const CoefficientGroups2Q ex = extract_mode_coefficients_2q(
        [&](double zA, double zB) { return farfield_density_2q(m, g, zA, zB); },
        g, n);
    push(r.groups, "cc", closed.cc, ex.cc);
    push(r.groups, "ss", closed.ss, ex.ss);
    push(r.groups, "sc", closed.sc, ex.sc);
    push(r.groups, "cs", closed.cs, ex.cs);
    push(r.groups, "a_cos", closed.a_cos, ex.a_cos);
    push(r.groups, "a_sin", closed.a_sin, ex.a_sin);
    push(r.groups, "b_cos", closed.b_cos, ex.b_cos);
    push(r.groups, "b_sin", closed.b_sin, ex.b_sin);
    push(r.totals, "i2", i2_from_groups(closed).total, i2_from_groups(ex).total);
  } else {
    const CoefficientGroups3Q closed = coefficient_groups_3q(m);
    const CoefficientGroups3Q ex = extract_mode_coefficients_3q(
        [&](double zA, double zB, double zC) {
          return farfield_density_3q(m, g, zA, zB, zC);
        },
        g, n);
    push(r.groups, "t_ccc", closed.t_ccc, ex.t_ccc);
    push(r.groups, "t_ccs", closed.t_ccs, ex.t_ccs);
    push(r.groups, "t_csc", closed.t_csc, ex.t_csc);
    push(r.groups, "t_scc", closed.t_scc, ex.t_scc);
    push(r.groups, "t_ssc", closed.t_ssc, ex.t_ssc);
    push(r.groups, "t_css", closed.t_css, ex.t_css);
    push(r.groups, "t_sss", closed.t_sss, ex.t_sss);
    push(r.groups, "t_scs", closed.t_scs, ex.t_scs);
    push(r.groups, "ab_cc", closed.ab_cc, ex.ab_cc);
    push(r.groups, "ab_cs", closed.ab_cs, ex.ab_cs);
    push(r.groups, "ab_sc", closed.ab_sc, ex.ab_sc);
    push(r.groups, "ab_ss", closed.ab_ss, ex.ab_ss);
    push(r.groups, "ac_cc", closed.ac_cc, ex.ac_cc);
    push(r.groups, "ac_cs", closed.ac_cs, ex.ac_cs);
    push(r.groups, "ac_sc", closed.ac_sc, ex.ac_sc);
    push(r.groups, "ac_ss", closed.ac_ss, ex.ac_ss);
    push(r.groups, "bc_cc", closed.bc_cc, ex.bc_cc);
    push(r.groups, "bc_cs", closed.bc_cs, ex.bc_cs);
    push(r.groups, "bc_sc", closed.bc_sc, ex.bc_sc);
    push(r.groups, "bc_ss", closed.bc_ss, ex.bc_ss);
    push(r.groups, "a_cos", closed.a_cos, ex.a_cos);
    push(r.groups, "a_sin", closed.a_sin, ex.a_sin);
    push(r.groups, "b_cos", closed.b_cos, ex.b_cos);
    push(r.groups, "b_sin", closed.b_sin, ex.b_sin);
    push(r.groups, "c_cos", closed.c_cos, ex.c_cos);
    push(r.groups, "c_sin", closed.c_sin, ex.c_sin);
    const I3Result ci = i3_from_groups(closed);
    const I3Result ei = i3_from_groups(ex);
    push(r.totals, "i_ghz", ci.i_ghz, ei.i_ghz);
    push(r.totals, "i_w", ci.i_w, ei.i_w);
    push(r.totals, "i3", ci.total, ei.total);
  }
  for (const GroupDeviation& d : r.groups)
    r.max_group_deviation = std::max(r.max_group_deviation, d.deviation);
  for (const GroupDeviation& d : r.totals)
    r.max_total_deviation = std::max(r.max_total_deviation, d.deviation);
  r.max_deviation = std::max(r.max_group_deviation, r.max_total_deviation);
  return r;
}

}  // namespace iquant
