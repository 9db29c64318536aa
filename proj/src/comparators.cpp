#include "iquant/comparators.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <vector>

#include "iquant/errors.hpp"

namespace iquant {

namespace {

// Base-2 von Neumann entropy; tiny negative eigenvalues from rounding are
// treated as zero (0 log 0 = 0).
double entropy_bits(const Eigen::MatrixXcd& rho) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rho, Eigen::EigenvaluesOnly);
  double s = 0.0;
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
    const double l = es.eigenvalues()(i);
    if (l > 0.0) s -= l * std::log2(l);
  }
  return s;
}

double shannon_bits(const std::vector<double>& p) {
  double s = 0.0;
  for (double x : p)
    if (x > 0.0) s -= x * std::log2(x);
  return s;
}

double binary_entropy(double x) {
  if (x <= 0.0 || x >= 1.0) return 0.0;
  return -x * std::log2(x) - (1.0 - x) * std::log2(1.0 - x);
}

// Projective measurement direction on the Bloch sphere:
// |m+> = (cos(t/2), e^{i phi} sin(t/2)), |m-> orthogonal.
void bloch_projectors(double theta, double phi, Eigen::Vector2cd& mp,
                      Eigen::Vector2cd& mm) {
  const double c = std::cos(0.5 * theta);
  const double s = std::sin(0.5 * theta);
  mp(0) = c;
  mp(1) = std::polar(s, phi);
  mm(0) = -std::polar(s, -phi);
  mm(1) = c;
}

struct NmOutcome {
  std::vector<double> x;
  double f = 0.0;
  bool converged = false;
};

// Deterministic Nelder-Mead (reflection 1, expansion 2, contraction 0.5,
// shrink 0.5). Converges when the simplex value spread drops below ftol.
NmOutcome nelder_mead(const std::function<double(const std::vector<double>&)>& f,
                      const std::vector<double>& start, double step, double ftol,
                      int max_iter) {
  const size_t n = start.size();
  std::vector<std::vector<double>> xs(n + 1, start);
  for (size_t i = 0; i < n; ++i) xs[i + 1][i] += step;
  std::vector<double> fs(n + 1);
  for (size_t i = 0; i <= n; ++i) fs[i] = f(xs[i]);

  NmOutcome out;
  for (int iter = 0; iter < max_iter; ++iter) {
    std::vector<size_t> order(n + 1);
    for (size_t i = 0; i <= n; ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](size_t a, size_t b) { return fs[a] < fs[b]; });
    const size_t best = order[0], second = order[n - 1], worst = order[n];
    if (fs[worst] - fs[best] < ftol) {
      out.x = xs[best];
      out.f = fs[best];
      out.converged = true;
      return out;
    }
    std::vector<double> centroid(n, 0.0);
    for (size_t i = 0; i <= n; ++i) {
      if (i == worst) continue;
      for (size_t d = 0; d < n; ++d) centroid[d] += xs[i][d] / static_cast<double>(n);
    }
    auto blend = [&](double coeff) {
      std::vector<double> x(n);
      for (size_t d = 0; d < n; ++d)
        x[d] = centroid[d] + coeff * (centroid[d] - xs[worst][d]);
      return x;
    };
    const std::vector<double> xr = blend(1.0);
    const double fr = f(xr);
    if (fr < fs[best]) {
      const std::vector<double> xe = blend(2.0);
      const double fe = f(xe);
      if (fe < fr) {
        xs[worst] = xe;
        fs[worst] = fe;
      } else {
        xs[worst] = xr;
        fs[worst] = fr;
      }
    } else if (fr < fs[second]) {
      xs[worst] = xr;
      fs[worst] = fr;
    } else {
      const std::vector<double> xc = blend(-0.5);
      const double fc = f(xc);
      if (fc < fs[worst]) {
        xs[worst] = xc;
        fs[worst] = fc;
      } else {
        const size_t keep = order[0];
        for (size_t i = 0; i <= n; ++i) {
          if (i == keep) continue;
          for (size_t d = 0; d < n; ++d)
            xs[i][d] = xs[keep][d] + 0.5 * (xs[i][d] - xs[keep][d]);
          fs[i] = f(xs[i]);
        }
      }
    }
  }
  size_t best = 0;
  for (size_t i = 1; i <= n; ++i)
    if (fs[i] < fs[best]) best = i;
  out.x = xs[best];
  out.f = fs[best];
  out.converged = false;
  return out;
}

}  // namespace

double concurrence(const DensityMatrix& m) {
  if (m.dim() != 4) throw DimensionMismatch("concurrence needs a two-qubit state");
  Eigen::Matrix4cd flip = Eigen::Matrix4cd::Zero();  // sigma_y x sigma_y
  flip(0, 3) = -1.0;
  flip(1, 2) = 1.0;
  flip(2, 1) = 1.0;
  flip(3, 0) = -1.0;

  // With rho = Psi Psi^dagger, the spin-flipped spectrum (the square roots of
  // the eigenvalues of rho rho_tilde) equals the singular values of the
  // complex symmetric matrix Psi^T (sigma_y x sigma_y) Psi. Computing it by
  // SVD keeps full precision when rho is (nearly) singular, where taking
  // sqrt of near-zero eigenvalues of the Hermitian product would not.
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> es(m.entries);
  const Eigen::Vector4d sq = es.eigenvalues().cwiseMax(0.0).cwiseSqrt();
  const Eigen::Matrix4cd psi = es.eigenvectors() * sq.asDiagonal();
  const Eigen::Matrix4cd a = psi.transpose() * flip * psi;
  Eigen::JacobiSVD<Eigen::Matrix4cd> svd(a);
  const Eigen::Vector4d lam = svd.singularValues();  // descending
  const double c = lam(0) - lam(1) - lam(2) - lam(3);
  return std::max(0.0, c);
}

double entanglement_of_formation(const DensityMatrix& m) {
  const double c = std::min(1.0, concurrence(m));
  const double x = 0.5 * (1.0 + std::sqrt(1.0 - c * c));
  return binary_entropy(x);
}

DiscordResult discord_2q(const DensityMatrix& m, char measured_party) {
  if (m.dim() != 4) throw DimensionMismatch("discord_2q needs a two-qubit state");
  if (measured_party != 'A' && measured_party != 'B')
    throw ParameterOutOfRange("discord_2q: measured party must be 'A' or 'B'");
  const bool measure_a = measured_party == 'A';
  const Eigen::Matrix2cd rho_other = reduced_qubit(m, measure_a ? 1 : 0);
  const double s_other = entropy_bits(rho_other);
  const double s_total = entropy_bits(m.entries);

  int evals = 0;
  // Average conditional entropy of the unmeasured qubit after a projective
  // measurement along (theta, phi) on the measured qubit.
  auto cond_entropy = [&](double theta, double phi) {
    ++evals;
    Eigen::Vector2cd mp, mm;
    bloch_projectors(theta, phi, mp, mm);
    double ce = 0.0;
    for (const Eigen::Vector2cd& k : {mp, mm}) {
      Eigen::Matrix2cd cond = Eigen::Matrix2cd::Zero();
      for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c)
          for (int a = 0; a < 2; ++a)
            for (int b = 0; b < 2; ++b) {
              const int row = measure_a ? 2 * a + r : 2 * r + a;
              const int col = measure_a ? 2 * b + c : 2 * c + b;
              cond(r, c) += std::conj(k(a)) * m.entries(row, col) * k(b);
            }
      const double p = cond.trace().real();
      if (p > 1e-15) ce += p * entropy_bits(cond / p);
    }
    return ce;
  };

  double best_theta = 0.0, best_phi = 0.0;
  double best_ce = cond_entropy(0.0, 0.0);
  for (int i = 0; i < 64; ++i) {
    const double theta = std::numbers::pi * i / 63.0;
    for (int j = 0; j < 32; ++j) {
      const double phi = 2.0 * std::numbers::pi * j / 32.0;
      const double ce = cond_entropy(theta, phi);
      if (ce < best_ce) {
        best_ce = ce;
        best_theta = theta;
        best_phi = phi;
      }
    }
  }
  const NmOutcome nm = nelder_mead(
      [&](const std::vector<double>& x) { return cond_entropy(x[0], x[1]); },
      {best_theta, best_phi}, 0.1, 1e-9, 300);

  DiscordResult out;
  out.value = s_other - s_total + std::min(best_ce, nm.f);
  out.converged = nm.converged;
  out.theta = nm.x[0];
  out.phi = nm.x[1];
  out.evaluations = evals;
  return out;
}

GlobalDiscordResult global_discord_3q(const DensityMatrix& m) {
  if (m.dim() != 8) throw DimensionMismatch("global_discord_3q needs a three-qubit state");
  const double s_total = entropy_bits(m.entries);
  Eigen::Matrix2cd marg[3];
  double s_marg[3];
  for (int j = 0; j < 3; ++j) {
    marg[j] = reduced_qubit(m, j);
    s_marg[j] = entropy_bits(marg[j]);
  }

  int evals = 0;
  // x = (thetaA, phiA, thetaB, phiB, thetaC, phiC). The product measurement
  // dephases the state; the objective is the global discord candidate
  // [S(Phi(rho)) - S(rho)] - sum_j [S(Phi_j(rho_j)) - S(rho_j)].
  auto objective = [&](const std::vector<double>& x) {
    ++evals;
    Eigen::Vector2cd mp[3], mm[3];
    double local_term = 0.0;
    for (int j = 0; j < 3; ++j) {
      bloch_projectors(x[static_cast<size_t>(2 * j)], x[static_cast<size_t>(2 * j + 1)],
                       mp[j], mm[j]);
      const double p0 = (mp[j].adjoint() * marg[j] * mp[j])(0).real();
      const double p1 = (mm[j].adjoint() * marg[j] * mm[j])(0).real();
      local_term += shannon_bits({p0, p1}) - s_marg[j];
    }
    std::vector<double> q(8, 0.0);
    for (int k = 0; k < 8; ++k) {
      const Eigen::Vector2cd& va = ((k >> 2) & 1) ? mm[0] : mp[0];
      const Eigen::Vector2cd& vb = ((k >> 1) & 1) ? mm[1] : mp[1];
      const Eigen::Vector2cd& vc = (k & 1) ? mm[2] : mp[2];
      Eigen::Matrix<std::complex<double>, 8, 1> w;
      for (int xbit = 0; xbit < 8; ++xbit)
        w(xbit) = va((xbit >> 2) & 1) * vb((xbit >> 1) & 1) * vc(xbit & 1);
      q[static_cast<size_t>(k)] = (w.adjoint() * m.entries * w)(0).real();
    }
    return (shannon_bits(q) - s_total) - local_term;
  };

  std::vector<double> best(6, 0.0);
  double best_f = objective(best);
  std::vector<std::pair<double, double>> dirs;
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 4; ++j)
      dirs.emplace_back(std::numbers::pi * i / 7.0, 2.0 * std::numbers::pi * j / 4.0);
  for (const auto& [ta, pa] : dirs)
    for (const auto& [tb, pb] : dirs)
      for (const auto& [tc, pc] : dirs) {
        const std::vector<double> x = {ta, pa, tb, pb, tc, pc};
        const double f = objective(x);
        if (f < best_f) {
          best_f = f;
          best = x;
        }
      }
  const NmOutcome nm = nelder_mead(objective, best, 0.1, 1e-9, 600);

  GlobalDiscordResult out;
  out.value = std::min(best_f, nm.f);
  out.converged = nm.converged;
  for (int i = 0; i < 6; ++i) out.angles[static_cast<size_t>(i)] = nm.x[static_cast<size_t>(i)];
  out.evaluations = evals;
  return out;
}

}  // namespace iquant
