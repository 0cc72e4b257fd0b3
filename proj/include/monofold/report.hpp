#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace monofold {

/// Inputs and both computed outputs of a failed comparison, kept so a
/// failure can be reproduced.
struct Witness {
  std::string description;
  std::vector<double> lhs;
  std::vector<double> rhs;
};

/// Result of checking one identity against an independent reference.
/// Invariant: pass == (max_abs_error <= tolerance). Exact (integer)
/// identities use tolerance 0.
struct OracleReport {
  std::string name;
  double tolerance = 0.0;
  double max_abs_error = 0.0;
  std::size_t cases = 0;
  bool pass = false;
  std::optional<Witness> witness;
};

inline OracleReport make_report(std::string name, double tolerance, double max_abs_error,
                                std::size_t cases, std::optional<Witness> witness = {}) {
  OracleReport r;
  r.name = std::move(name);
  r.tolerance = tolerance;
  r.max_abs_error = max_abs_error;
  r.cases = cases;
  r.pass = max_abs_error <= tolerance;
  if (!r.pass) r.witness = std::move(witness);
  return r;
}

}  // namespace monofold
