#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace iquant {

// Common base so callers can catch everything this library throws.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// ---- state construction / validation ----

class NonHermitian : public Error {
 public:
  NonHermitian(const std::string& msg, double dev) : Error(msg), deviation(dev) {}
  double deviation;
};

class TraceDeviation : public Error {
 public:
  TraceDeviation(const std::string& msg, double dev) : Error(msg), deviation(dev) {}
  double deviation;
};

class NegativeEigenvalue : public Error {
 public:
  NegativeEigenvalue(const std::string& msg, double eig) : Error(msg), eigenvalue(eig) {}
  double eigenvalue;
};

class NormDeviation : public Error {
 public:
  NormDeviation(const std::string& msg, double dev) : Error(msg), deviation(dev) {}
  double deviation;
};

class ParameterOutOfRange : public Error {
 public:
  using Error::Error;
};

class UnknownState : public Error {
 public:
  using Error::Error;
};

class NonUnitary : public Error {
 public:
  NonUnitary(const std::string& msg, double dev) : Error(msg), deviation(dev) {}
  double deviation;
};

class ArityMismatch : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

// ---- double-slit simulator ----

class GridTooCoarse : public Error {
 public:
  using Error::Error;
};

// Display-mode envelope denominator crossed zero at `position`.
class EnvelopeSingularity : public Error {
 public:
  EnvelopeSingularity(const std::string& msg, std::vector<double> pos)
      : Error(msg), position(std::move(pos)) {}
  std::vector<double> position;
};

// ---- optimization ----

class NonConvergence : public Error {
 public:
  NonConvergence(const std::string& msg, double best) : Error(msg), best_value(best) {}
  double best_value;
};

// ---- file formats / CLI ----

class ParseError : public Error {
 public:
  ParseError(const std::string& msg, int line_, int col_)
      : Error(msg), line(line_), col(col_) {}
  int line;
  int col;
};

class DimUnsupported : public Error {
 public:
  using Error::Error;
};

class UnknownFamily : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace iquant
