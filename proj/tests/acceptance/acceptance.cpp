// Runs every registered check and prints one verdict line per acceptance
// criterion, followed by informational lines. Exit status 1 if any criterion
// fails.

#include <chrono>
#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include "umbracal/verify.hpp"

namespace {

const std::map<int, const char*> kCriteria{
    {1, "Hermite number sequences, exact"},
    {2, "Newton-binomial vs direct sum, m in {2,3,4}, n <= 16"},
    {3, "Gaussian Mellin integrals vs Gamma(nu/2)/2"},
    {4, "quartic Gaussian integral vs Gamma(1/4)/2"},
    {5, "super-Gaussian integral vs sqrt(pi) e^{(alpha/2)^4}"},
    {6, "erf series vs quadrature, |x| <= 2"},
    {7, "derivative series of e^{x^2} and e^{-x^3}"},
    {8, "Gabor Hermite series vs direct quadrature"},
    {9, "Airy-exponential identity and Ai(0)"},
    {10, "multinomial expansion vs three-variable polynomials"},
    {11, "heat equation: closed form, Airy route, semigroup"},
    {12, "lacunary routes and figure data"},
    {13, "heat polynomials solve d_y = d_x^m"},
};

}  // namespace

int main() {
  using umbracal::CheckResult;
  const auto start = std::chrono::steady_clock::now();
  const auto report = umbracal::run_suite(umbracal::Suite::kAll);
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  std::map<int, std::vector<const CheckResult*>> by_criterion;
  std::vector<const CheckResult*> info, supporting;
  for (const auto& c : report.checks) {
    if (c.informational) {
      info.push_back(&c);
    } else if (c.criterion > 0) {
      by_criterion[c.criterion].push_back(&c);
    } else {
      supporting.push_back(&c);
    }
  }

  bool all = true;
  for (const auto& [id, title] : kCriteria) {
    const auto it = by_criterion.find(id);
    bool ok = it != by_criterion.end();
    std::string detail = ok ? "" : " (no checks registered)";
    if (ok) {
      for (const CheckResult* c : it->second) {
        ok = ok && c->passed;
        char buf[160];
        std::snprintf(buf, sizeof buf, "%s %s=%.3g/%.3g", detail.empty() ? " " : ",", c->name.c_str(),
                      c->measured, c->tolerance);
        detail += buf;
      }
    }
    all = all && ok;
    std::printf("%s criterion %2d: %s;%s\n", ok ? "PASS" : "FAIL", id, title, detail.c_str());
  }

  int supporting_failed = 0;
  for (const CheckResult* c : supporting) {
    if (!c->passed) {
      ++supporting_failed;
      std::printf("FAIL supporting check %s: %.3g > %.3g\n", c->name.c_str(), c->measured, c->tolerance);
    }
  }
  std::printf("supporting checks: %zu run, %d failed\n", supporting.size(), supporting_failed);
  for (const CheckResult* c : info) {
    std::printf("INFO criterion %2d: %s = %.3g (%s)\n", c->criterion, c->name.c_str(), c->measured, c->note.c_str());
  }
  std::printf("%s in %.1f s\n", all && supporting_failed == 0 ? "ALL PASS" : "FAILURES", seconds);
  return all && supporting_failed == 0 ? 0 : 1;
}
