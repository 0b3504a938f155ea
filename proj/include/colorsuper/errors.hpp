#pragma once

#include <stdexcept>
#include <string>

namespace colorsuper {

/// Mismatched grading-vector lengths or basis index out of range.
class DimensionError : public std::invalid_argument {
 public:
  explicit DimensionError(const std::string& what) : std::invalid_argument(what) {}
};

/// Symplectic pairing requested on an odd-length grading vector, or
/// a pairing used with an algebra it does not fit.
class PairingError : public std::invalid_argument {
 public:
  explicit PairingError(const std::string& what) : std::invalid_argument(what) {}
};

/// An Element refers to basis indices that do not exist in the algebra.
class ElementError : public std::invalid_argument {
 public:
  explicit ElementError(const std::string& what) : std::invalid_argument(what) {}
};

/// Malformed file or JSON document; the message names the defect.
class SchemaError : public std::runtime_error {
 public:
  explicit SchemaError(const std::string& what) : std::runtime_error(what) {}
};

/// Catalog or generator lookup with a name that is not registered.
class UnknownNameError : public std::invalid_argument {
 public:
  explicit UnknownNameError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace colorsuper
