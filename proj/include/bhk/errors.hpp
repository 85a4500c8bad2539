#pragma once

#include <stdexcept>

namespace bhk {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or inadmissible user data (singular matrix, non-symmetry generator, ...).
class InputError : public Error {
 public:
  using Error::Error;
};

/// A configured size bound (group order, cone rank, basis size) was exceeded.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// An operation that needs deg in M and deg^v in N was given data without them.
class NotCalabiYau : public Error {
 public:
  using Error::Error;
};

/// A potential (or a sector restriction of one) failed the nondegeneracy test.
class DegeneratePotential : public Error {
 public:
  using Error::Error;
};

}  // namespace bhk
