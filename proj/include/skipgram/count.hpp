#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace skipgram {

/// Exact, unbounded integer used for every count. Counting paths never touch
/// floating point; values stay nonnegative by construction.
using Count = boost::multiprecision::cpp_int;

/// Raised when an arithmetic step the derivation guarantees to be exact is not.
/// Seeing this means a bug in the library, never bad user input.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Divides `numerator` by `denominator`, throwing InvariantViolation if the
/// remainder is nonzero.
Count exact_divide(const Count& numerator, const Count& denominator);

/// Plain decimal rendering, no grouping.
std::string to_decimal(const Count& value);

}  // namespace skipgram
