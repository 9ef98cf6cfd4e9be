#ifndef ODDLEN_ERRORS_HPP
#define ODDLEN_ERRORS_HPP

#include <stdexcept>

namespace oddlen {

// Coefficient arithmetic left the int64 range.
struct OverflowError : std::overflow_error {
  using std::overflow_error::overflow_error;
};

// A polynomial division that must be exact left a remainder.
struct InexactDivision : std::domain_error {
  using std::domain_error::domain_error;
};

// The requested enumeration is larger than the configured group-size cap.
struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

} // namespace oddlen

#endif // ODDLEN_ERRORS_HPP
