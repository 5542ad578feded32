// Acceptance suite: runs every exit criterion at desk scale and prints one
// pass/fail line per criterion. Everything is exact equality; there are no
// tolerances to configure.

#include <chrono>
#include <cstdio>
#include <vector>

#include "superschur/driver.hpp"

using namespace superschur;

int main() {
  using clock = std::chrono::steady_clock;
  std::vector<CheckResult> results;
  int index = 0, failures = 0;

  auto run = [&](CheckResult (*fn)()) {
    const auto t0 = clock::now();
    CheckResult r = fn();
    const long ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(clock::now() - t0).count();
    ++index;
    if (!r.pass) ++failures;
    std::printf("[%2d/11] %s  %s (%ld ms)\n        %s\n", index, r.pass ? "PASS" : "FAIL",
                r.name.c_str(), ms, r.detail.c_str());
    std::fflush(stdout);
    results.push_back(std::move(r));
  };

  run(+[] { return check_class_sum_grid_gl(); });
  run(+[] { return check_class_sum_grid_q(); });
  run(+[] { return check_image_consistency(1); });
  run(+[] { return check_quotient_well_defined(1); });
  run(+[] { return check_round_trip(); });
  run(+[] { return check_diffop_factorization(); });
  run(+[] { return check_tree_action_matches(); });
  run(+[] { return check_entry_evaluation_ratio(); });
  run(+[] { return check_duality_instances(); });
  run(+[] { return check_group_sanity(); });
  run(+[] { return check_negative_controls(); });

  if (failures == 0)
    std::printf("acceptance: all 11 criteria passed\n");
  else
    std::printf("acceptance: %d of 11 criteria FAILED\n", failures);
  return failures == 0 ? 0 : 1;
}
