#pragma once

#include <string>
#include <vector>

#include "wick/brst.hpp"
#include "wick/render.hpp"

namespace wick {

inline constexpr const char* kEngineVersion = "wick/0.1.0";

struct ClaimResult {
  std::string claim;
  bool verified = false;
  std::string residual;  // rendered, empty when verified
  double wall_ms = 0.0;
};

struct Report {
  std::string datum;
  std::string engine = kEngineVersion;
  std::string root_system;
  uint64_t seed = 0;
  std::vector<ClaimResult> claims;
  bool all_ok() const;
};

/// The CLI claim names.
const std::vector<std::string>& claim_names();
bool claim_applicable(const Datum& dt, const std::string& claim);

/// Runs the selected claims (expanding "all" and "identities" to their
/// applicable sub-checks) and assembles a deterministic report. Claims fan
/// out over `workers` threads; rows are merged in claim order.
Report run_claims(const Datum& dt, const std::vector<std::string>& claims, uint64_t seed,
                  int workers = 1);

/// JSON omits wall times unless with_timings is set, so that reports are
/// byte-identical for a fixed seed.
std::string report_to_json(const Report& r, bool with_timings = false);
std::string report_to_text(const Report& r);
std::string report_to_latex(const Report& r);

}  // namespace wick
