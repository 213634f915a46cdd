#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace liepoisson {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class AntisymmetryViolation : public Error {
 public:
  // 1-based indices of the offending entry c[i][j][k].
  AntisymmetryViolation(int i, int j, int k);
  int i, j, k;
};

class DimensionMismatch : public Error {
 public:
  DimensionMismatch(std::size_t expected, std::size_t got);
};

class ShapeError : public Error {
 public:
  using Error::Error;
};

class NotASubalgebra : public Error {
 public:
  NotASubalgebra(int i, int j);
  int i, j;  // 1-based indices in the total algebra
};

class GradientUnavailable : public Error {
 public:
  GradientUnavailable() : Error("observable has neither a gradient nor a value function") {}
};

class MissingCasimir : public Error {
 public:
  MissingCasimir() : Error("symmetric bracket variant needs a casimir") {}
};

class MissingPsi : public Error {
 public:
  MissingPsi() : Error("symmetric bracket variant needs psi") {}
};

class MissingEntropy : public Error {
 public:
  MissingEntropy() : Error("metriplectic system has no entropy generator") {}
};

class NonFiniteState : public Error {
 public:
  explicit NonFiniteState(long step);
  long step;
};

class UnknownMonitor : public Error {
 public:
  explicit UnknownMonitor(const std::string& name) : Error("unknown monitor: " + name) {}
};

class InsufficientData : public Error {
 public:
  using Error::Error;
};

class UnknownEntry : public Error {
 public:
  explicit UnknownEntry(const std::string& name) : Error("unknown catalog entry: " + name) {}
};

// Malformed external input (JSON fixtures, observables, CLI state strings).
class SchemaError : public Error {
 public:
  using Error::Error;
};

}  // namespace liepoisson
