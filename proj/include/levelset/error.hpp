#ifndef LEVELSET_ERROR_HPP
#define LEVELSET_ERROR_HPP

#include <stdexcept>
#include <string>

namespace levelset {

/// Bad bounds, counts or parameters in a grid/model/config. CLI exit code 2.
class ConfigError : public std::runtime_error {
public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// API misuse: mismatched grids, inadmissible time step, empty query region.
class UsageError : public std::runtime_error {
public:
  explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

/// Non-finite values produced during a run. Carries the simulated time at
/// which the blowup was detected. CLI exit code 3.
class NumericsError : public std::runtime_error {
public:
  NumericsError(const std::string& what, double time)
      : std::runtime_error(what), time_(time) {}
  double time() const { return time_; }

private:
  double time_;
};

/// Filesystem failures while writing or reading artifacts. CLI exit code 4.
class IoError : public std::runtime_error {
public:
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace levelset

#endif
