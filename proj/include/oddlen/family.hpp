#ifndef ODDLEN_FAMILY_HPP
#define ODDLEN_FAMILY_HPP

#include <string>
#include <string_view>

namespace oddlen {

// Root-system families: A_{n-1} (symmetric group S_n), B_n (all signed
// permutations) and D_n (signed permutations with an even number of
// negative entries).
enum class Family { A, B, D };

Family parse_family(std::string_view text);
char family_char(Family f);
std::string to_string(Family f);

// Smallest generator label; type A uses [1, n-1], B and D use [0, n-1].
constexpr int first_generator(Family f) { return f == Family::A ? 1 : 0; }

} // namespace oddlen

#endif // ODDLEN_FAMILY_HPP
