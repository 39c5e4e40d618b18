#include "g2lab/report.hpp"

#include <algorithm>
#include <cstdio>

namespace g2lab {

void Report::add(const std::string& name, int trials, double residual,
                 double tol) {
  checks.push_back({name, trials, residual, tol, residual <= tol});
}

void Report::absorb(const std::string& name, double residual, double tol) {
  for (auto& c : checks) {
    if (c.name == name) {
      c.trials += 1;
      c.maxResidual = std::max(c.maxResidual, residual);
      c.pass = c.maxResidual <= c.tolerance;
      return;
    }
  }
  checks.push_back({name, 1, residual, tol, residual <= tol});
}

bool Report::allPass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

double Report::worstResidual() const {
  double w = 0.0;
  for (const auto& c : checks) w = std::max(w, c.maxResidual);
  return w;
}

std::string Report::text() const {
  std::string out;
  char buf[256];
  for (const auto& c : checks) {
    std::snprintf(buf, sizeof buf, "%-44s trials=%-6d max_residual=%.3e %s\n",
                  c.name.c_str(), c.trials, c.maxResidual,
                  c.pass ? "pass" : "FAIL");
    out += buf;
  }
  return out;
}

std::string Report::csv() const {
  std::string out = "check,trials,max_residual,tolerance,pass\n";
  char buf[256];
  for (const auto& c : checks) {
    std::snprintf(buf, sizeof buf, "%s,%d,%.17g,%.17g,%d\n", c.name.c_str(),
                  c.trials, c.maxResidual, c.tolerance, c.pass ? 1 : 0);
    out += buf;
  }
  return out;
}

}  // namespace g2lab
