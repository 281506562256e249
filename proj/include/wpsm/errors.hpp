#pragma once
/// Error types raised by the library. Claim failures are never exceptions;
/// these signal bad input or a broken internal construction.

#include <stdexcept>
#include <string>

namespace wpsm {

/// Invalid family/rank combination or malformed construction input.
struct ConstructionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Index or parameter outside its admissible range.
struct RangeError : std::out_of_range {
  using std::out_of_range::out_of_range;
};

/// An operation was called on data that violates its precondition.
struct PreconditionError : std::logic_error {
  using std::logic_error::logic_error;
};

/// A derived quantity that must be an integer (or must satisfy a structural
/// identity) did not. This always means a bug in a construction.
struct InternalInconsistency : std::logic_error {
  using std::logic_error::logic_error;
};

/// A degree was rejected by the divisibility gate for cohomology dimensions.
struct CongruenceError : std::domain_error {
  using std::domain_error::domain_error;
};

/// A center element does not belong to the given root datum.
struct ElementDomainError : std::domain_error {
  using std::domain_error::domain_error;
};

}  // namespace wpsm
