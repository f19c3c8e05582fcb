#pragma once

#include <stdexcept>
#include <string>

namespace blaschke {

/// Base of every error raised by the library. The CLI maps the subclasses
/// onto exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the mathematical domain (λ ∉ (0,1), n < 1, p < 1, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Working precision would exceed PrecisionPolicy::max_bits.
class PrecisionExhausted : public Error {
 public:
  using Error::Error;
};

/// FFT grid violates grid ≥ 2·kmax+2 or its aliasing bound misses the target.
class GridTooSmall : public Error {
 public:
  using Error::Error;
};

/// Adaptive quadrature hit the panel limit.
class NonConvergence : public Error {
 public:
  using Error::Error;
};

/// Series does not reach far enough for a certified tail.
class InsufficientRange : public Error {
 public:
  using Error::Error;
};

/// Region boundaries are not ordered for this n.
class OrderingError : public Error {
 public:
  using Error::Error;
};

/// Operation precondition not met (interval straddles φ₊, empty window, ...).
class PreconditionViolation : public Error {
 public:
  using Error::Error;
};

class DegenerateFit : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace blaschke
