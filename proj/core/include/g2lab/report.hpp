#pragma once

#include <string>
#include <vector>

namespace g2lab {

/// One verified identity or bound: worst residual seen over all trials.
struct CheckRecord {
  std::string name;
  int trials = 0;
  double maxResidual = 0.0;
  double tolerance = 0.0;
  bool pass = true;
};

/// Structured pass/fail record for an identity or verification suite.
struct Report {
  std::vector<CheckRecord> checks;

  void add(const std::string& name, int trials, double residual, double tol);
  /// Merge the worst residual of a named check (creates it if missing).
  void absorb(const std::string& name, double residual, double tol);
  bool allPass() const;
  double worstResidual() const;

  /// One line per check: name, trials, max residual, pass/fail.
  std::string text() const;
  /// CSV with header: check,trials,max_residual,tolerance,pass
  std::string csv() const;
};

}  // namespace g2lab
