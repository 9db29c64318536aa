#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "iquant/doubleslit.hpp"

using namespace iquant;

namespace {

constexpr double kPi = std::numbers::pi;

// Coincidence density reassembled from the closed-form coefficient groups.
// Every interference mode enters the physical pattern with weight 2.
double series_2q(const CoefficientGroups2Q& gr, double uA, double uB) {
  const double cA = std::cos(uA), sA = std::sin(uA);
  const double cB = std::cos(uB), sB = std::sin(uB);
  return 1.0 + 2.0 * (gr.cc * cA * cB + gr.ss * sA * sB + gr.sc * sA * cB +
                      gr.cs * cA * sB + gr.a_cos * cA + gr.a_sin * sA +
                      gr.b_cos * cB + gr.b_sin * sB);
}

double series_3q(const CoefficientGroups3Q& gr, double uA, double uB, double uC) {
  const double cA = std::cos(uA), sA = std::sin(uA);
  const double cB = std::cos(uB), sB = std::sin(uB);
  const double cC = std::cos(uC), sC = std::sin(uC);
  double v = 1.0;
  v += 2.0 * (gr.t_ccc * cA * cB * cC + gr.t_ccs * cA * cB * sC +
              gr.t_csc * cA * sB * cC + gr.t_scc * sA * cB * cC +
              gr.t_ssc * sA * sB * cC + gr.t_css * cA * sB * sC +
              gr.t_sss * sA * sB * sC + gr.t_scs * sA * cB * sC);
  v += 2.0 * (gr.ab_cc * cA * cB + gr.ab_cs * cA * sB + gr.ab_sc * sA * cB +
              gr.ab_ss * sA * sB);
  v += 2.0 * (gr.ac_cc * cA * cC + gr.ac_cs * cA * sC + gr.ac_sc * sA * cC +
              gr.ac_ss * sA * sC);
  v += 2.0 * (gr.bc_cc * cB * cC + gr.bc_cs * cB * sC + gr.bc_sc * sB * cC +
              gr.bc_ss * sB * sC);
  v += 2.0 * (gr.a_cos * cA + gr.a_sin * sA + gr.b_cos * cB + gr.b_sin * sB +
              gr.c_cos * cC + gr.c_sin * sC);
  return v;
}

}  // namespace

TEST_CASE("geometry defaults: period and far-field check") {
  SlitGeometry g;
  CHECK(g.period() == doctest::Approx(0.05).epsilon(1e-14));
  CHECK(!g.farfield_warning().has_value());

  // Long-wavelength setup: one period spans z excursions comparable to L.
  SlitGeometry bad{1.0, 0.01, 2.0 * kPi};
  const auto w = bad.farfield_warning();
  REQUIRE(w.has_value());
  CHECK(w->find("far-field") != std::string::npos);
}

TEST_CASE("pointwise density matches the series built from the groups, dim 4") {
  const SlitGeometry g;
  for (std::uint64_t seed : {11u, 12u, 13u}) {
    const DensityMatrix m = random_density(4, 3, seed);
    const CoefficientGroups2Q gr = coefficient_groups_2q(m);
    for (int i = 0; i < 7; ++i)
      for (int j = 0; j < 7; ++j) {
        const double zA = -0.025 + 0.05 * i / 7.0;
        const double zB = -0.025 + 0.05 * j / 7.0;
        const double u = 2.0 * g.k * g.theta;
        const double direct = farfield_density_2q(m, g, zA, zB);
        const double series = series_2q(gr, u * zA, u * zB);
        CHECK(std::abs(direct - series) < 1e-12);
      }
  }
}

TEST_CASE("pointwise density matches the series built from the groups, dim 8") {
  const SlitGeometry g;
  const DensityMatrix m = random_density(8, 5, 99);
  const CoefficientGroups3Q gr = coefficient_groups_3q(m);
  const double u = 2.0 * g.k * g.theta;
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j)
      for (int l = 0; l < 5; ++l) {
        const double zA = -0.02 + 0.01 * i;
        const double zB = -0.02 + 0.01 * j;
        const double zC = -0.02 + 0.01 * l;
        const double direct = farfield_density_3q(m, g, zA, zB, zC);
        const double series = series_3q(gr, u * zA, u * zB, u * zC);
        CHECK(std::abs(direct - series) < 1e-12);
      }
}

TEST_CASE("oracle cross-validation agrees with the closed forms") {
  const SlitGeometry g;
  for (const char* name : {"bell-phi+", "bell-psi-", "phi(0.6,1.3)"}) {
    const OracleReport r = oracle_verify(from_pure(standard_state(name)), g);
    CHECK(r.dim == 4);
    CHECK(r.groups.size() == 8);
    CHECK(r.totals.size() == 1);
    CHECK(r.totals[0].label == "i2");
    CHECK(r.max_deviation < 1e-9);
  }
  for (const char* name : {"ghz", "w", "phased-w(0.7,2.4)"}) {
    const OracleReport r = oracle_verify(from_pure(standard_state(name)), g);
    CHECK(r.dim == 8);
    CHECK(r.groups.size() == 26);
    CHECK(r.totals.size() == 3);
    CHECK(r.totals[0].label == "i_ghz");
    CHECK(r.totals[1].label == "i_w");
    CHECK(r.totals[2].label == "i3");
    CHECK(r.max_deviation < 1e-9);
  }
  CHECK(oracle_verify(random_density(4, 4, 404), g).max_deviation < 1e-9);
  CHECK(oracle_verify(random_density(8, 6, 808), g).max_deviation < 1e-9);
  CHECK(oracle_verify(werner_2q(0.75), g).max_deviation < 1e-9);
  CHECK(oracle_verify(werner_ghz(0.6), g).max_deviation < 1e-9);
}

TEST_CASE("extraction is exact for any admissible sample count") {
  // The integrands are trig polynomials of per-axis degree <= 2, so the
  // rectangle rule has no discretization error; n only changes the rounding.
  const SlitGeometry g;
  const DensityMatrix m = random_density(4, 2, 2024);
  auto dens = [&](double zA, double zB) { return farfield_density_2q(m, g, zA, zB); };
  const CoefficientGroups2Q a = extract_mode_coefficients_2q(dens, g, 8);
  const CoefficientGroups2Q b = extract_mode_coefficients_2q(dens, g, 16);
  const CoefficientGroups2Q c = extract_mode_coefficients_2q(dens, g, 33);
  for (const CoefficientGroups2Q* ex : {&b, &c}) {
    CHECK(std::abs(ex->cc - a.cc) < 1e-10);
    CHECK(std::abs(ex->ss - a.ss) < 1e-10);
    CHECK(std::abs(ex->sc - a.sc) < 1e-10);
    CHECK(std::abs(ex->cs - a.cs) < 1e-10);
    CHECK(std::abs(ex->a_cos - a.a_cos) < 1e-10);
    CHECK(std::abs(ex->a_sin - a.a_sin) < 1e-10);
    CHECK(std::abs(ex->b_cos - a.b_cos) < 1e-10);
    CHECK(std::abs(ex->b_sin - a.b_sin) < 1e-10);
  }
}

TEST_CASE("extracted groups do not depend on the geometry") {
  const DensityMatrix m = random_density(8, 4, 515);
  const SlitGeometry g1;                              // k*theta = 20 pi
  const SlitGeometry g2{2.0, 0.02, 4000.0 * kPi};     // k*theta = 80 pi, L = 2
  const OracleReport r1 = oracle_verify(m, g1);
  const OracleReport r2 = oracle_verify(m, g2);
  REQUIRE(r1.groups.size() == r2.groups.size());
  for (size_t i = 0; i < r1.groups.size(); ++i) {
    CHECK(r1.groups[i].label == r2.groups[i].label);
    CHECK(std::abs(r1.groups[i].extracted - r2.groups[i].extracted) < 1e-12);
  }
  CHECK(r2.max_deviation < 1e-9);
}

TEST_CASE("averaging the third detector recovers the reduced two-particle pattern") {
  const SlitGeometry g{2.0, 0.01, 2000.0 * kPi};
  const DensityMatrix m = random_density(8, 3, 31);
  const DensityMatrix red = partial_trace_keep(m, {0, 1});
  const int n = 16;
  const double ell = g.period();
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) {
      const double zA = -0.4 * ell + 0.2 * ell * i;
      const double zB = -0.4 * ell + 0.2 * ell * j;
      double avg = 0.0;
      for (int kk = 0; kk < n; ++kk) {
        const double zC = -0.5 * ell + ell * kk / n;
        avg += farfield_density_3q(m, g, zA, zB, zC);
      }
      avg /= n;
      const double reduced = farfield_density_2q(red, g, zA, zB) / (g.L * g.L);
      CHECK(std::abs(avg - reduced) < 1e-12);
    }
}

TEST_CASE("display-mode envelopes: exact at the origin, raise the GHZ diagonal") {
  const SlitGeometry g;
  const DensityMatrix ghz = from_pure(standard_state("ghz"));
  CHECK(farfield_density_3q(ghz, g, 0.0, 0.0, 0.0, true) ==
        farfield_density_3q(ghz, g, 0.0, 0.0, 0.0, false));
  // Populated diagonal entries sit at s = -+ zA; 1/(L -+ 2 theta zA) averages
  // above 1/L, so the envelope density exceeds the flat-amplitude one.
  for (double z : {0.005, 0.01, 0.02}) {
    const double flat = farfield_density_3q(ghz, g, z, 0.0, 0.0, false);
    const double env = farfield_density_3q(ghz, g, z, 0.0, 0.0, true);
    CHECK(env > flat);
  }
}

TEST_CASE("display mode reports the point where an envelope denominator vanishes") {
  const SlitGeometry g{0.01, 0.5, 2.0 * kPi};
  const DensityMatrix m = from_pure(standard_state("bell-phi+"));
  try {
    farfield_density_2q(m, g, 0.5, 0.5, true);
    FAIL("expected EnvelopeSingularity");
  } catch (const EnvelopeSingularity& e) {
    REQUIRE(e.position.size() == 2);
    CHECK(e.position[0] == doctest::Approx(0.5));
    CHECK(e.position[1] == doctest::Approx(0.5));
  }
  // Flat-amplitude mode has no denominator and stays finite everywhere.
  CHECK(std::isfinite(farfield_density_2q(m, g, 0.5, 0.5, false)));
}

TEST_CASE("sample_grid layout: axes, names, row-major values") {
  const SlitGeometry g;
  const DensityMatrix m = from_pure(standard_state("bell-psi+"));
  const GridDensity gd = sample_grid(m, g, 6);
  REQUIRE(gd.axis_names == std::vector<std::string>{"zA", "zB"});
  REQUIRE(gd.axes.size() == 2);
  REQUIRE(gd.axes[0].size() == 6);
  CHECK(gd.axes[0][0] == doctest::Approx(-0.025).epsilon(1e-14));
  REQUIRE(gd.values.size() == 36);
  for (int iA = 0; iA < 6; ++iA)
    for (int iB = 0; iB < 6; ++iB)
      CHECK(gd.values[static_cast<size_t>(iA * 6 + iB)] ==
            farfield_density_2q(m, g, gd.axes[0][static_cast<size_t>(iA)],
                                gd.axes[1][static_cast<size_t>(iB)]));

  const GridDensity gd3 = sample_grid(from_pure(standard_state("w")), g, 4);
  CHECK(gd3.axis_names == std::vector<std::string>{"zA", "zB", "zC"});
  CHECK(gd3.values.size() == 64);
  CHECK_THROWS_AS(sample_grid(m, g, 0), ParameterOutOfRange);
}

TEST_CASE("maximally entangled states have flat single-particle patterns") {
  const SlitGeometry g;
  for (const char* name : {"bell-psi-", "bell-phi+", "bell-phi-", "bell-psi+"}) {
    const DensityMatrix m = from_pure(standard_state(name));
    for (char p : {'A', 'B'}) {
      const GridDensity marg = marginal_pattern(m, g, p, 24);
      double lo = marg.values[0], hi = marg.values[0];
      for (double v : marg.values) {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
      }
      CHECK(hi - lo < 1e-14);
      CHECK(marg.values[0] == doctest::Approx(1.0).epsilon(1e-12));  // 1/L^4
    }
  }
  for (char p : {'A', 'B', 'C'}) {
    const GridDensity marg = marginal_pattern(from_pure(standard_state("ghz")), g, p, 12);
    double lo = marg.values[0], hi = marg.values[0];
    for (double v : marg.values) {
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
    CHECK(hi - lo < 1e-14);
  }
}

TEST_CASE("a coherent single particle keeps its own fringe in the marginal") {
  const SlitGeometry g;
  // (|0> + |1>)/sqrt(2) on A, |0> on B: rho_13 = 1/2 so a_cos = 1/2 and the
  // A marginal is (1 + cos uA)/L^4 while B stays flat.
  const DensityMatrix m = from_pure(product_state({kPi / 4, 0.0, 0.0, 0.0}));
  const int n = 20;
  const GridDensity mA = marginal_pattern(m, g, 'A', n);
  REQUIRE(mA.axis_names == std::vector<std::string>{"zA"});
  for (int i = 0; i < n; ++i) {
    const double u = 2.0 * g.k * g.theta * mA.axes[0][static_cast<size_t>(i)];
    CHECK(std::abs(mA.values[static_cast<size_t>(i)] - (1.0 + std::cos(u))) < 1e-12);
  }
  const GridDensity mB = marginal_pattern(m, g, 'B', n);
  for (double v : mB.values) CHECK(std::abs(v - 1.0) < 1e-14);
}

TEST_CASE("guard rails: coarse grids, unknown particles, wrong dimensions") {
  const SlitGeometry g;
  const DensityMatrix m2 = from_pure(standard_state("bell-phi+"));
  const DensityMatrix m3 = from_pure(standard_state("ghz"));
  auto d2 = [&](double zA, double zB) { return farfield_density_2q(m2, g, zA, zB); };
  auto d3 = [&](double zA, double zB, double zC) {
    return farfield_density_3q(m3, g, zA, zB, zC);
  };
  CHECK_THROWS_AS(extract_mode_coefficients_2q(d2, g, 7), GridTooCoarse);
  CHECK_THROWS_AS(extract_mode_coefficients_3q(d3, g, 7), GridTooCoarse);
  CHECK_THROWS_AS(marginal_pattern(m2, g, 'A', 1), GridTooCoarse);
  CHECK_THROWS_AS(marginal_pattern(m2, g, 'C', 16), ParameterOutOfRange);
  CHECK_THROWS_AS(marginal_pattern(m3, g, 'D', 16), ParameterOutOfRange);
  CHECK_THROWS_AS(farfield_density_2q(m3, g, 0.0, 0.0), DimensionMismatch);
  CHECK_THROWS_AS(farfield_density_3q(m2, g, 0.0, 0.0, 0.0), DimensionMismatch);
}
