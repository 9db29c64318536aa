#pragma once

#include <functional>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "iquant/interference2.hpp"
#include "iquant/interference3.hpp"
#include "iquant/qstate.hpp"

namespace iquant {

// Geometry of the double-slit arrangement: every particle passes its own
// two-slit screen and is detected on a screen at distance L. theta is the
// slit half-opening angle, k the wavenumber. In the far-field limit the
// coincidence pattern is periodic in every detector coordinate with period
// ell = pi / (k * theta).
struct SlitGeometry {
  double L = 1.0;
  double theta = 0.01;
  double k = 2000.0 * std::numbers::pi;
  double d = 0.0;  // slit spacing; recorded for provenance, never used

  double period() const { return std::numbers::pi / (k * theta); }

  // Far-field validity wants the transverse excursion 2*theta*(ell/2) to be
  // much smaller than L; returns a warning when it exceeds L/100.
  std::optional<std::string> farfield_warning() const;
};

struct GridDensity {
  std::vector<std::string> axis_names;        // {"zA","zB"} or {"zA","zB","zC"}, 1D for marginals
  std::vector<std::vector<double>> axes;      // sample positions per axis
  std::vector<double> values;                 // row-major over the axes
};

// Joint coincidence probability density at one point (normalization 1/L^{2n}).
//
// envelope == false (oracle mode): constant far-field amplitudes
// exp(-+ i k theta z)/L per slit; diagonal terms are constant and the
// oscillatory part carries exactly the coefficient-group structure.
//
// envelope == true (display mode): the diagonal terms keep their z-dependent
// amplitude envelopes 1 / (L^{2n-1} (L + 2 theta sum_X sigma_X z_X)), with
// sigma_X = -1 for slit 1 and +1 for slit 2. Throws EnvelopeSingularity when
// a denominator is <= 0 at the evaluated point.
double farfield_density_2q(const DensityMatrix& m, const SlitGeometry& g,
                           double zA, double zB, bool envelope = false);
double farfield_density_3q(const DensityMatrix& m, const SlitGeometry& g,
                           double zA, double zB, double zC, bool envelope = false);

// Samples the joint density on an n-per-axis grid over one period
// [-ell/2, ell/2) per axis.
GridDensity sample_grid(const DensityMatrix& m, const SlitGeometry& g,
                        int n, bool envelope = false);

// Single-particle detection pattern: oracle-mode joint density averaged over
// the other particles' coordinates across one period. particle is 'A', 'B'
// or 'C'. The result is constant + 2 (x_cos cos + x_sin sin) / L^{2n} with
// that particle's single-particle coefficient groups.
GridDensity marginal_pattern(const DensityMatrix& m, const SlitGeometry& g,
                             char particle, int n = 16);

// Fourier extraction of every coefficient group from a grid-evaluable joint
// density (one period per axis, rectangle rule, n samples per axis). The
// integrands are trig polynomials with at most two harmonics per axis, so the
// rectangle rule is exact to machine precision for n >= 8 (default 16); n < 8
// throws GridTooCoarse. Single-particle groups are extracted from the
// one-dimensional marginals. Summation order is fixed, so results are
// bit-reproducible.
CoefficientGroups2Q extract_mode_coefficients_2q(
    const std::function<double(double, double)>& density,
    const SlitGeometry& g, int n = 16);
CoefficientGroups3Q extract_mode_coefficients_3q(
    const std::function<double(double, double, double)>& density,
    const SlitGeometry& g, int n = 16);

struct GroupDeviation {
  std::string label;
  double closed_form = 0.0;
  double extracted = 0.0;
  double deviation = 0.0;
};

struct OracleReport {
  int dim = 0;
  std::vector<GroupDeviation> groups;  // one row per coefficient group
  std::vector<GroupDeviation> totals;  // assembled quantifiers (i2 / i_ghz, i_w, i3)
  double max_group_deviation = 0.0;
  double max_total_deviation = 0.0;
  double max_deviation = 0.0;
};

// Cross-validation: extracts all groups from the oracle-mode density of m,
// compares them to the closed-form groups, assembles the quantifier(s) from
// the extracted values through the same imbalance formulas, and compares the
// totals. Deviations are data, not errors.
OracleReport oracle_verify(const DensityMatrix& m, const SlitGeometry& g, int n = 16);

}  // namespace iquant
