#include "iquant/qstate.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <complex>
#include <cstdio>
#include <numbers>
#include <random>

namespace iquant {

using std::complex;
using cd = complex<double>;

namespace {

constexpr double kPi = std::numbers::pi;

void check_density_dim(int dim) {
  if (dim != 4 && dim != 8)
    throw DimensionMismatch("density matrix dimension must be 4 or 8, got " + std::to_string(dim));
}

// Deterministic uniform/Gaussian source. std::normal_distribution is
// implementation-defined, which would break the bit-identical-per-seed
// contract, so Box-Muller is spelled out.
struct Rng {
  explicit Rng(std::uint64_t seed) : eng(seed) {}

  double uniform() { return static_cast<double>(eng() >> 11) * 0x1.0p-53; }

  double gauss() {
    if (have_spare) {
      have_spare = false;
      return spare;
    }
    double u1 = 1.0 - uniform();  // in (0, 1], keeps log finite
    double u2 = uniform();
    double r = std::sqrt(-2.0 * std::log(u1));
    spare = r * std::sin(2.0 * kPi * u2);
    have_spare = true;
    return r * std::cos(2.0 * kPi * u2);
  }

  std::mt19937_64 eng;
  bool have_spare = false;
  double spare = 0.0;
};

}  // namespace

DensityMatrix density_from_entries(const Eigen::MatrixXcd& raw, double* hermiticity_deviation) {
  if (raw.rows() != raw.cols())
    throw DimensionMismatch("density matrix must be square");
  check_density_dim(static_cast<int>(raw.rows()));
  const int dim = static_cast<int>(raw.rows());

  Eigen::MatrixXcd sym(dim, dim);
  double dev = 0.0;
  for (int i = 0; i < dim; ++i) {
    sym(i, i) = cd(raw(i, i).real(), 0.0);
    dev = std::max(dev, std::abs(raw(i, i) - sym(i, i)));
    for (int j = i + 1; j < dim; ++j) {
      cd avg = 0.5 * (raw(i, j) + std::conj(raw(j, i)));
      sym(i, j) = avg;
      sym(j, i) = std::conj(avg);
      dev = std::max(dev, std::abs(raw(i, j) - avg));
      dev = std::max(dev, std::abs(raw(j, i) - std::conj(avg)));
    }
  }
  if (hermiticity_deviation) *hermiticity_deviation = dev;
  return DensityMatrix{std::move(sym)};
}

ValidationReport validate(const DensityMatrix& m, const ValidationTolerances& tol) {
  ValidationReport rep;
  const int dim = m.dim();

  double herm = 0.0;
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j)
      herm = std::max(herm, std::abs(m.entries(i, j) - std::conj(m.entries(j, i))));
  rep.hermiticity_deviation = herm;

  rep.trace_deviation = std::abs(m.entries.trace() - cd(1.0, 0.0));

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m.entries, Eigen::EigenvaluesOnly);
  rep.min_eigenvalue = es.eigenvalues().minCoeff();

  char buf[128];
  if (herm > 0.0) {
    std::snprintf(buf, sizeof buf, "hermiticity deviation %.3g", herm);
    rep.issues.push_back(buf);
  }
  if (rep.trace_deviation > tol.trace_tol) {
    std::snprintf(buf, sizeof buf, "trace deviation %.17g exceeds %.3g", rep.trace_deviation,
                  tol.trace_tol);
    rep.issues.push_back(buf);
  }
  if (rep.min_eigenvalue < -tol.eig_floor) {
    std::snprintf(buf, sizeof buf, "negative eigenvalue %.17g below floor -%.3g",
                  rep.min_eigenvalue, tol.eig_floor);
    rep.issues.push_back(buf);
  }
  rep.ok = rep.issues.empty();
  return rep;
}

void enforce_valid(const DensityMatrix& m, const ValidationTolerances& tol) {
  ValidationReport rep = validate(m, tol);
  if (rep.hermiticity_deviation > 0.0)
    throw NonHermitian("stored matrix is not Hermitian; construct via density_from_entries",
                       rep.hermiticity_deviation);
  if (rep.trace_deviation > tol.trace_tol) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "trace deviates from 1 by %.17g", rep.trace_deviation);
    throw TraceDeviation(buf, rep.trace_deviation);
  }
  if (rep.min_eigenvalue < -tol.eig_floor) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "minimum eigenvalue %.17g is negative", rep.min_eigenvalue);
    throw NegativeEigenvalue(buf, rep.min_eigenvalue);
  }
}

DensityMatrix from_pure(const PureState& v) {
  check_density_dim(v.dim());
  double dev = v.norm_deviation();
  if (dev > 1e-9) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "pure-state norm deviates from 1 by %.3g", dev);
    throw NormDeviation(buf, dev);
  }
  Eigen::MatrixXcd outer = v.amps * v.amps.adjoint();
  return density_from_entries(outer);
}

DensityMatrix werner_2q(double p) {
  if (!(p >= 0.0 && p <= 1.0))
    throw ParameterOutOfRange("werner_2q: p must be in [0, 1]");
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(4, 4);
  const double noise = (1.0 - p) / 4.0;
  for (int i = 0; i < 4; ++i) m(i, i) = noise;
  // singlet projector: |01><01|/2 + |10><10|/2 - (|01><10| + h.c.)/2
  m(1, 1) += p * 0.5;
  m(2, 2) += p * 0.5;
  m(1, 2) -= p * 0.5;
  m(2, 1) -= p * 0.5;
  return density_from_entries(m);
}

DensityMatrix werner_ghz(double p) {
  if (!(p >= 0.0 && p <= 1.0))
    throw ParameterOutOfRange("werner_ghz: p must be in [0, 1]");
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(8, 8);
  const double noise = (1.0 - p) / 8.0;
  for (int i = 0; i < 8; ++i) m(i, i) = noise;
  m(0, 0) += p * 0.5;
  m(7, 7) += p * 0.5;
  m(0, 7) += p * 0.5;
  m(7, 0) += p * 0.5;
  return density_from_entries(m);
}

PureState phi_state(double theta, double phi) {
  Eigen::VectorXcd a = Eigen::VectorXcd::Zero(4);
  a(0) = std::cos(theta);
  a(3) = std::polar(std::sin(theta), phi);
  return PureState{a};
}

PureState psi_state(double theta, double phi) {
  Eigen::VectorXcd a = Eigen::VectorXcd::Zero(4);
  a(1) = std::cos(theta);
  a(2) = std::polar(std::sin(theta), phi);
  return PureState{a};
}

PureState ghz_alpha_state(double alpha, double phi) {
  Eigen::VectorXcd a = Eigen::VectorXcd::Zero(8);
  a(0) = std::cos(alpha);
  a(7) = std::polar(std::sin(alpha), phi);
  return PureState{a};
}

PureState phased_w_state(double phi1, double phi2) {
  const double r = 1.0 / std::sqrt(3.0);
  Eigen::VectorXcd a = Eigen::VectorXcd::Zero(8);
  a(4) = r;                    // |100>
  a(2) = std::polar(r, phi1);  // |010>
  a(1) = std::polar(r, phi2);  // |001>
  return PureState{a};
}

PureState product_state(const std::vector<double>& angles) {
  if (angles.size() != 4 && angles.size() != 6)
    throw UnknownState("product state needs 4 or 6 angles (theta,phi per qubit)");
  const int nq = static_cast<int>(angles.size()) / 2;
  Eigen::VectorXcd a = Eigen::VectorXcd::Ones(1);
  for (int q = 0; q < nq; ++q) {
    Eigen::Vector2cd one;
    one(0) = std::cos(angles[2 * q]);
    one(1) = std::polar(std::sin(angles[2 * q]), angles[2 * q + 1]);
    Eigen::VectorXcd next(a.size() * 2);
    for (int i = 0; i < a.size(); ++i) {
      next(2 * i) = a(i) * one(0);
      next(2 * i + 1) = a(i) * one(1);
    }
    a = std::move(next);
  }
  return PureState{a};
}

namespace {

PureState fixed_amplitudes(int dim, std::vector<std::pair<int, cd>> entries) {
  Eigen::VectorXcd a = Eigen::VectorXcd::Zero(dim);
  for (auto& [idx, val] : entries) a(idx) = val;
  return PureState{a};
}

// Splits "name(a,b,...)" into the base name and numeric arguments.
std::pair<std::string, std::vector<double>> split_name(const std::string& raw) {
  auto open = raw.find('(');
  if (open == std::string::npos) return {raw, {}};
  if (raw.back() != ')')
    throw UnknownState("malformed state name '" + raw + "': missing ')'");
  std::string base = raw.substr(0, open);
  std::string args = raw.substr(open + 1, raw.size() - open - 2);
  std::vector<double> vals;
  std::size_t pos = 0;
  while (pos <= args.size()) {
    auto comma = args.find(',', pos);
    std::string tok = args.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    try {
      std::size_t used = 0;
      vals.push_back(std::stod(tok, &used));
      while (used < tok.size() && std::isspace(static_cast<unsigned char>(tok[used]))) ++used;
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw UnknownState("malformed argument '" + tok + "' in state name '" + raw + "'");
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return {base, vals};
}

void need_args(const std::string& name, const std::vector<double>& args, std::size_t n) {
  if (args.size() != n)
    throw UnknownState("state '" + name + "' takes " + std::to_string(n) + " argument(s), got " +
                       std::to_string(args.size()));
}

}  // namespace

PureState standard_state(const std::string& name) {
  auto [base, args] = split_name(name);
  const double s2 = 1.0 / std::sqrt(2.0);
  const double s3 = 1.0 / std::sqrt(3.0);

  if (base == "bell-phi+") { need_args(base, args, 0); return fixed_amplitudes(4, {{0, s2}, {3, s2}}); }
  if (base == "bell-phi-") { need_args(base, args, 0); return fixed_amplitudes(4, {{0, s2}, {3, -s2}}); }
  if (base == "bell-psi+") { need_args(base, args, 0); return fixed_amplitudes(4, {{1, s2}, {2, s2}}); }
  if (base == "bell-psi-") { need_args(base, args, 0); return fixed_amplitudes(4, {{1, s2}, {2, -s2}}); }
  if (base == "ghz")       { need_args(base, args, 0); return fixed_amplitudes(8, {{0, s2}, {7, s2}}); }
  if (base == "w")         { need_args(base, args, 0); return fixed_amplitudes(8, {{1, s3}, {2, s3}, {4, s3}}); }
  if (base == "phased-w")  { need_args(base, args, 2); return phased_w_state(args[0], args[1]); }
  if (base == "phi")       { need_args(base, args, 2); return phi_state(args[0], args[1]); }
  if (base == "psi")       { need_args(base, args, 2); return psi_state(args[0], args[1]); }
  if (base == "ghz-alpha") { need_args(base, args, 2); return ghz_alpha_state(args[0], args[1]); }
  if (base == "product") {
    if (args.size() != 4 && args.size() != 6)
      throw UnknownState("state 'product' takes 4 or 6 arguments, got " + std::to_string(args.size()));
    return product_state(args);
  }
  throw UnknownState("unknown state name '" + base + "'");
}

DensityMatrix random_density(int dim, int rank, std::uint64_t seed) {
  if (dim != 4 && dim != 8)
    throw ParameterOutOfRange("random_density: dim must be 4 or 8");
  if (rank < 1 || rank > dim)
    throw ParameterOutOfRange("random_density: rank must be in [1, dim]");

  Rng rng(seed);

  std::vector<double> weights(rank);
  double wsum = 0.0;
  for (int k = 0; k < rank; ++k) {
    weights[k] = rng.uniform();
    wsum += weights[k];
  }
  if (wsum < 1e-12) {
    for (int k = 0; k < rank; ++k) weights[k] = 1.0;
    wsum = rank;
  }

  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  for (int k = 0; k < rank; ++k) {
    Eigen::VectorXcd v(dim);
    for (int i = 0; i < dim; ++i) {
      double re = rng.gauss();
      double im = rng.gauss();
      v(i) = cd(re, im);
    }
    v.normalize();
    m += (weights[k] / wsum) * (v * v.adjoint());
  }
  return density_from_entries(m);
}

DensityMatrix apply_local_unitary(const DensityMatrix& m, const std::vector<Eigen::Matrix2cd>& us) {
  const int nq = m.qubits();
  if (static_cast<int>(us.size()) != nq)
    throw ArityMismatch("expected " + std::to_string(nq) + " local unitaries, got " +
                        std::to_string(us.size()));
  for (const auto& u : us) {
    double dev = (u.adjoint() * u - Eigen::Matrix2cd::Identity()).cwiseAbs().maxCoeff();
    if (dev > 1e-9) {
      char buf[96];
      std::snprintf(buf, sizeof buf, "matrix deviates from unitarity by %.3g", dev);
      throw NonUnitary(buf, dev);
    }
  }
  Eigen::MatrixXcd full = us[0];
  for (int q = 1; q < nq; ++q) {
    Eigen::MatrixXcd next(full.rows() * 2, full.cols() * 2);
    for (int i = 0; i < full.rows(); ++i)
      for (int j = 0; j < full.cols(); ++j)
        next.block<2, 2>(2 * i, 2 * j) = full(i, j) * us[q];
    full = std::move(next);
  }
  Eigen::MatrixXcd out = full * m.entries * full.adjoint();
  return density_from_entries(out);
}

DensityMatrix partial_trace_keep(const DensityMatrix& m, const std::vector<int>& keep) {
  const int nq = m.qubits();
  for (std::size_t i = 0; i < keep.size(); ++i) {
    if (keep[i] < 0 || keep[i] >= nq)
      throw DimensionMismatch("partial_trace_keep: qubit index out of range");
    if (i > 0 && keep[i] <= keep[i - 1])
      throw DimensionMismatch("partial_trace_keep: keep list must be strictly ascending");
  }
  const int nk = static_cast<int>(keep.size());
  const int nt = nq - nk;
  // The result must itself be a supported DensityMatrix, so only the
  // three-qubit -> two-qubit reduction is available here; use reduced_qubit
  // for single-qubit marginals.
  if (nq != 3 || nk != 2)
    throw DimensionMismatch("partial_trace_keep: supported reduction is 3 qubits -> 2 qubits");

  std::vector<int> traced;
  for (int q = 0; q < nq; ++q)
    if (std::find(keep.begin(), keep.end(), q) == keep.end()) traced.push_back(q);

  // Bit position of qubit q (A most significant).
  auto shift = [nq](int q) { return nq - 1 - q; };

  const int dk = 1 << nk;
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(dk, dk);
  for (int a = 0; a < dk; ++a) {
    for (int b = 0; b < dk; ++b) {
      cd acc = 0.0;
      for (int t = 0; t < (1 << nt); ++t) {
        int ia = 0, ib = 0;
        for (int q = 0; q < nk; ++q) {
          int bit_a = (a >> (nk - 1 - q)) & 1;
          int bit_b = (b >> (nk - 1 - q)) & 1;
          ia |= bit_a << shift(keep[q]);
          ib |= bit_b << shift(keep[q]);
        }
        for (int q = 0; q < nt; ++q) {
          int bit = (t >> (nt - 1 - q)) & 1;
          ia |= bit << shift(traced[q]);
          ib |= bit << shift(traced[q]);
        }
        acc += m.entries(ia, ib);
      }
      out(a, b) = acc;
    }
  }
  return density_from_entries(out);
}

Eigen::Matrix2cd reduced_qubit(const DensityMatrix& m, int qubit) {
  const int nq = m.qubits();
  if (qubit < 0 || qubit >= nq)
    throw DimensionMismatch("reduced_qubit: qubit index out of range");
  const int sh = nq - 1 - qubit;
  Eigen::Matrix2cd out = Eigen::Matrix2cd::Zero();
  const int dim = m.dim();
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      if ((i & ~(1 << sh)) != (j & ~(1 << sh))) continue;
      out((i >> sh) & 1, (j >> sh) & 1) += m.entries(i, j);
    }
  }
  return out;
}

}  // namespace iquant
