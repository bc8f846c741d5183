#pragma once

#include <stdexcept>
#include <string>

namespace opo {

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class InvalidParams : public Error {
public:
  using Error::Error;
};

// |D| fell below the configured epsilon; only reachable at threshold.
class DegenerateDenominator : public Error {
public:
  using Error::Error;
};

class NoInstability : public Error {
public:
  using Error::Error;
};

class QuadratureNonConvergence : public Error {
public:
  using Error::Error;
};

// k = (0,0): the two detectors would look at the same mode.
class DegenerateMode : public Error {
public:
  using Error::Error;
};

class ZeroDenominator : public Error {
public:
  using Error::Error;
};

class UndefinedPolarization : public Error {
public:
  using Error::Error;
};

class OracleError : public Error {
public:
  using Error::Error;
};

class ConfigError : public Error {
public:
  ConfigError(const std::string& what, int line = 0)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}

  int line() const noexcept { return line_; }

private:
  int line_;
};

} // namespace opo
