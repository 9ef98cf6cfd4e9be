#include "oddlen/family.hpp"

#include <stdexcept>

namespace oddlen {

Family parse_family(std::string_view s) {
  if (s == "A" || s == "a") return Family::A;
  if (s == "B" || s == "b") return Family::B;
  if (s == "D" || s == "d") return Family::D;
  throw std::invalid_argument("unsupported root family '" + std::string(s) + "' (expected A, B or D)");
}

char family_char(Family f) {
  switch (f) {
  case Family::A: return 'A';
  case Family::B: return 'B';
  case Family::D: return 'D';
  }
  return '?';
}

std::string to_string(Family f) { return std::string(1, family_char(f)); }

} // namespace oddlen
