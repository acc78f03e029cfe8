#pragma once

#include <stdexcept>
#include <string>

namespace casimir {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad tensor input (asymmetric, non-finite).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Configuration that no energy can be assigned to: coincident atoms,
/// atoms below the plate, contact without the contact flag, and so on.
class GeometryError : public Error {
 public:
  using Error::Error;
};

}  // namespace casimir
