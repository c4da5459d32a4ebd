#pragma once

#include <set>
#include <string>
#include <vector>

#include "latkit/catalog.hpp"

namespace latkit {

enum class ClaimStatus { Pass, Fail, Discrepancy };
std::string to_string(ClaimStatus s);

struct ClaimResult {
  std::string id;
  std::string tag;
  std::string locator;  // which statement is being checked
  std::string expected;
  std::string computed;
  bool pass = false;  // expected == computed
  /// Set when the expected value is known not to hold; such claims are
  /// reported but do not affect the exit status.
  bool known_discrepancy = false;
  std::string note;
  double millis = 0;

  ClaimStatus status() const {
    if (pass) return ClaimStatus::Pass;
    return known_discrepancy ? ClaimStatus::Discrepancy : ClaimStatus::Fail;
  }
};

struct ReproOptions {
  std::set<std::string> tags;  // empty: all
  FaultSet faults;
};

/// Claim tags in report order.
const std::vector<std::string>& known_tags();

/// Runs the selected claims in a fixed order. Construction errors become
/// failed claims. Throws InputError for unknown tags or fault ids.
std::vector<ClaimResult> repro_all(const ReproOptions& opts = {});

/// True iff no claim has status Fail.
bool all_pass(const std::vector<ClaimResult>& results);

}  // namespace latkit
