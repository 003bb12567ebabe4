#pragma once

#include <stdexcept>
#include <string>

namespace piid {

// Base class for all library errors. The three broad categories map to CLI
// exit codes: ConfigError -> 2, IoError -> 3, SolveError -> 4.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

class SolveError : public Error {
 public:
  using Error::Error;
};

// Numerical/domain failures.
class NotPositiveDefinite : public SolveError {
 public:
  using SolveError::SolveError;
};

class NoConvergence : public SolveError {
 public:
  using SolveError::SolveError;
};

class DegenerateData : public SolveError {
 public:
  using SolveError::SolveError;
};

class ZeroVariance : public SolveError {
 public:
  using SolveError::SolveError;
};

class UnboundedBilinearRange : public SolveError {
 public:
  using SolveError::SolveError;
};

class AllGridInfeasible : public SolveError {
 public:
  using SolveError::SolveError;
};

class KTooLarge : public ConfigError {
 public:
  using ConfigError::ConfigError;
};

class NonPositiveDenominator : public ConfigError {
 public:
  using ConfigError::ConfigError;
};

class InfeasibleCondition : public SolveError {
 public:
  using SolveError::SolveError;
};

class EmptyGroup : public SolveError {
 public:
  using SolveError::SolveError;
};

}  // namespace piid
