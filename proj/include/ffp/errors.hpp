#pragma once

#include <stdexcept>
#include <string>

namespace ffp {

// Base class for every error raised by the library.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A configured enumeration cap was exceeded.
class size_limit_error : public error {
 public:
  using error::error;
};

// Operands live in different ambient sizes (n or d).
class dimension_error : public error {
 public:
  using error::error;
};

// Input violates an operation's precondition.
class domain_error : public error {
 public:
  using error::error;
};

// Malformed text input (rationals, partitions, cycle notation, JSON).
class parse_error : public error {
 public:
  using error::error;
};

// Series operation needs coefficients beyond the known truncation order,
// or a leading coefficient vanishes where a unit is required.
class truncation_error : public error {
 public:
  using error::error;
};

// An internal invariant failed. Seeing one of these is a bug.
class invariant_error : public error {
 public:
  using error::error;
};

}  // namespace ffp
