#ifndef ODDLEN_VERIFY_HPP
#define ODDLEN_VERIFY_HPP

#include "oddlen/family.hpp"
#include "oddlen/indexset.hpp"

#include <functional>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace oddlen {

enum class Tier { Fast, Full, Extended };
Tier parse_tier(std::string_view text);
std::string to_string(Tier t);

/// Per-family enumeration ceiling of a tier: A 8/9/10, B and D 6/7/8.
int tier_n_max(Tier t, Family f);

struct SweepConfig {
  std::set<Family> families{Family::A, Family::B, Family::D};
  Tier tier = Tier::Fast;
  // Overrides every per-family ceiling (still clamped to the enumeration
  // budget) and caps the formula-only sweeps.
  std::optional<int> n_override;
  // Restrict to these checks; empty runs everything.
  std::vector<std::string> only;
};

struct CheckRecord {
  std::string check;
  std::optional<Family> family;  // empty for family-free checks
  int n = 0;
  std::optional<IndexSet> set;
  bool ok = false;
  std::string detail;
};

using RecordSink = std::function<void(const CheckRecord&)>;

struct CheckInfo {
  std::string name;
  std::string summary;
};
const std::vector<CheckInfo>& check_catalog();
/// Throws invalid_argument for an unknown check name.
void validate_check_names(const std::vector<std::string>& names);

struct VerifySummary {
  std::size_t records = 0;
  std::size_t failures = 0;
  bool ok() const { return failures == 0; }
};

VerifySummary run_verify(const SweepConfig& config, const RecordSink& sink);

} // namespace oddlen

#endif // ODDLEN_VERIFY_HPP
