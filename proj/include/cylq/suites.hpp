#pragma once

#include <functional>
#include <vector>

#include "cylq/identities.hpp"

namespace cylq {

using ReportTask = std::function<std::vector<CheckReport>()>;

// Runs independent tasks (in parallel when allowed) and returns all reports
// sorted by name.
std::vector<CheckReport> run_tasks(const std::vector<ReportTask> &tasks, Exec exec = Exec::parallel);

// 2-row profiles (l - b, b), 0 <= b <= l, for 1 <= l <= max_level.
std::vector<Profile> two_row_profiles(int max_level);
// Every profile of the given rank with 1 <= level <= max_level.
std::vector<Profile> profiles_of_rank(int rank, int max_level);

struct RelGrid {
  std::vector<CheckReport> reports;
  int skipped = 0;  // grid points where some S term is inadmissible
};

// rel_0..rel_l for 1 <= l <= max_level, 0 <= t <= t_max and every v with
// entries in [v_lo, v_hi].
RelGrid rel_grid(int max_level, int t_max, int v_lo, int v_hi, Caps caps, bool mutate = false);

// Every admissible (l, i) with 2 <= l <= max_level.
std::vector<CheckReport> four_term_all(int max_level, Caps caps, bool mutate = false);

// Product formula against the 2-row display (q_cap_display) and against
// enumeration at z = 1 (q_cap_enum); DHK product against gf_dhk at z = 1.
std::vector<CheckReport> products_suite(int max_level, int q_cap_display, int q_cap_enum);

// Round trip in both directions and statistic transport between tight
// partitions of (l - a, a) and DHK_{a,l}, weight <= cap. The residuals are
// generating functions of the offending objects.
std::vector<CheckReport> bijection_suite(int level, int ground, int cap);

// C multisum against all cylindric partitions of (l - b, b) and (b, l - b).
std::vector<CheckReport> all_cylindric_suite(int max_level, Caps caps);

// Level-1 formula against tight enumeration for ranks 2..max_rank.
std::vector<CheckReport> level1_suite(int max_rank, Caps caps);

// Report-only shape check on tight generating functions of 2-row profiles.
std::vector<CheckReport> unimodal_suite(int max_level, Caps caps);

// Everything above, for levels up to max_level, at the given caps.
std::vector<CheckReport> check_all(int max_level, Caps caps, bool mutate = false);

// True iff every asserted report passed.
bool all_asserted_ok(const std::vector<CheckReport> &reports);

}  // namespace cylq
