#include "skipgram/count.hpp"

namespace skipgram {

Count exact_divide(const Count& numerator, const Count& denominator) {
  if (denominator == 0) {
    throw InvariantViolation("exact_divide: division by zero");
  }
  Count quotient;
  Count remainder;
  boost::multiprecision::divide_qr(numerator, denominator, quotient, remainder);
  if (remainder != 0) {
    throw InvariantViolation("exact_divide: " + numerator.str() + " is not divisible by " +
                             denominator.str());
  }
  return quotient;
}

std::string to_decimal(const Count& value) { return value.str(); }

}  // namespace skipgram
