// Acceptance gate: one line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include "flagflow/checks.hpp"

using namespace flagflow;

namespace {

struct Criterion {
  std::string title;
  std::vector<std::string> check_ids;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

}  // namespace

int main() {
  const uint64_t seed = 7;
  const auto t0 = std::chrono::steady_clock::now();
  const auto results = run_suite("all", seed);
  const double suite_time = seconds_since(t0);

  std::map<std::string, const CheckResult*> by_id;
  for (const auto& r : results) by_id[r.id] = &r;

  const std::vector<Criterion> criteria = {
      {"weight/rho identity, d=2..6, both fields",
       {"rootdata.weight-rho-identity"}},
      {"Killing form vs ad-trace oracle", {"rootdata.killing-ad-oracle"}},
      {"Jacobian class function vs adjoint determinant",
       {"jordan.jacobian-determinant"}},
      {"proximality function vs adjoint spectral radius",
       {"jordan.proximality-spectral-radius"}},
      {"cocycle relation and section independence",
       {"period-identity.cocycle-relation",
        "period-identity.section-independence"}},
      {"period identity on the shipped Schottky specs",
       {"period-identity.spec-periods"}},
      {"pairing laws: basis independence, SL-invariance, homogeneity",
       {"pairing.basis-independence", "pairing.sl-invariance",
        "pairing.homogeneity"}},
      {"multiflow equivariance", {"period-identity.multiflow-equivariance"}},
      {"regularity of the period 2-form over zero-patterns",
       {"geometry.regularity-rank", "geometry.contact-test"}},
      {"neutral signature of the Killing metric", {"geometry.signature"}},
      {"unit weights admissible on every shipped spec",
       {"zeta.admissibility-baseline"}},
      {"zeta product vs series, closed form, twist conjugation",
       {"zeta.product-vs-series", "zeta.closed-form",
        "zeta.conjugation-invariance"}},
  };

  int failures = 0;
  int idx = 1;
  for (const auto& c : criteria) {
    bool pass = true;
    double max_err = 0.0;
    for (const auto& id : c.check_ids) {
      const auto it = by_id.find(id);
      if (it == by_id.end()) {
        pass = false;
        continue;
      }
      pass = pass && it->second->pass;
      if (it->second->max_error > max_err) max_err = it->second->max_error;
    }
    std::printf("criterion %2d %s  max_error=%.3e  %s\n", idx,
                pass ? "PASS" : "FAIL", max_err, c.title.c_str());
    if (!pass) ++failures;
    ++idx;
  }

  // determinism: the full suite twice more must format byte-identically
  const auto rerun1 = format_report("all", seed, run_suite("all", seed));
  const auto rerun2 = format_report("all", seed, run_suite("all", seed));
  const double total_time = seconds_since(t0);
  const bool deterministic = rerun1 == rerun2;
  const bool fast = suite_time < 60.0;
  std::printf("criterion 13 %s  suite_time=%.1fs total=%.1fs  %s\n",
              (deterministic && fast) ? "PASS" : "FAIL", suite_time,
              total_time, "deterministic full suite under 60 s");
  if (!(deterministic && fast)) ++failures;

  if (failures > 0) std::printf("%d criterion(s) FAILED\n", failures);
  return failures == 0 ? 0 : 1;
}
