#ifndef JOINALG_RATIONAL_HPP
#define JOINALG_RATIONAL_HPP

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace joinalg {

/// Exact rational scalar. GMP keeps every result in lowest terms with a
/// positive denominator.
using Scalar = mpq_class;

/// Input that cannot be parsed or does not satisfy a declared shape.
class MalformedInput : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An operation was asked to run on inputs that violate its precondition.
class PreconditionFailed : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A mathematical construction failed a check that valid inputs cannot fail.
class ConstructionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parses "p", "-p", "p/q" (q != 0). Throws MalformedInput otherwise.
Scalar parse_scalar(std::string_view text);

/// "p" for integers, "p/q" otherwise.
std::string to_string(const Scalar& value);

inline bool is_zero(const Scalar& value) { return sgn(value) == 0; }

/// Exact square root of a non-negative rational when numerator and
/// denominator are both perfect squares.
std::optional<Scalar> rational_sqrt(const Scalar& value);

}  // namespace joinalg

#endif  // JOINALG_RATIONAL_HPP
