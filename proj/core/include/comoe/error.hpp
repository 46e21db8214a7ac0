#pragma once

#include <stdexcept>
#include <string>

namespace comoe {

/// Shape or width disagreement between operands.
class DimensionError : public std::invalid_argument {
 public:
  explicit DimensionError(const std::string& what) : std::invalid_argument(what) {}
};

/// Invalid or inconsistent configuration (bad config file, unknown ids,
/// unmapped nations, duplicate expert ids, ...).
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// File parse/serialization failures; carries a line number when known.
class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

/// Metric that is undefined for the given input (e.g. single-class AUC).
class MetricError : public std::runtime_error {
 public:
  explicit MetricError(const std::string& what) : std::runtime_error(what) {}
};

/// Numerical failure during training; names the offending parameter block.
class NumericsError : public std::runtime_error {
 public:
  explicit NumericsError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace comoe
