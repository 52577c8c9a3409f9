#pragma once

#include <stdexcept>
#include <string>

namespace spdk {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Non-finite entries, rank mismatches, malformed arguments.
class InvalidInputError : public Error {
 public:
  using Error::Error;
};

// Matrix failed the positive-definiteness certification.
class NotSpdError : public Error {
 public:
  using Error::Error;
};

// Iterative scheme exceeded its hard cap.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

// Argument at or below a pole of a special function.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Parameter combination outside sampler support.
class UnsupportedParamsError : public Error {
 public:
  using Error::Error;
};

// Rejection sampler acceptance fell below the hard floor.
class SamplerAbortError : public Error {
 public:
  using Error::Error;
};

// Transform output left the cone.
class BoundaryViolationError : public Error {
 public:
  using Error::Error;
};

// Constant feature columns; no permutation test possible.
class DegenerateInputError : public Error {
 public:
  using Error::Error;
};

class IllPosedFitError : public Error {
 public:
  using Error::Error;
};

// Too many transform outputs discarded to trust the experiment.
class ExperimentInvalidError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace spdk
