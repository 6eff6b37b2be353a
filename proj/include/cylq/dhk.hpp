#pragma once

#include <stdexcept>
#include <vector>

#include "cylq/abacus.hpp"
#include "cylq/cylinder.hpp"
#include "cylq/exec.hpp"
#include "cylq/series.hpp"

namespace cylq {

// (level + 1)-colored partition lambda_1 >= ... >= lambda_s = 0 with
// lambda_i - lambda_{i+1} = |u_i - u_{i+1}|, u_s = ground and exactly one zero
// part. The color sequence determines everything; `parts` is derived.
struct DHKPartition {
  int level = 1;
  int ground = 0;
  std::vector<int> colors;
  std::vector<int> parts;

  // The final 0 part is not counted.
  int num_parts() const { return static_cast<int>(parts.size()) - 1; }
  int weight() const;

  bool operator==(const DHKPartition &o) const {
    return level == o.level && ground == o.ground && colors == o.colors;
  }
};

struct NotTight : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

DHKPartition dhk_from_colors(int level, const std::vector<int> &colors);

// All DHK partitions of weight <= cap, sorted by weight then colors.
std::vector<DHKPartition> enumerate_dhk(int level, int ground, int weight_cap);

// sum z^{#parts} q^{wt}; parts are >= 1 so z_cap = q_cap loses nothing.
Series gf_dhk(int level, int ground, int q_cap, int z_cap);

// Tight 2-row partition of profile (level - a, a) -> DHK partition in class
// (a, level): parts are the reversed vacancy counts of its abacus and colors
// the reversed yoke shapes. Throws NotTight for a non-tight input.
DHKPartition dhk_from_tight(const std::vector<Row> &rows, const Profile &profile);

// Inverse: place yokes with shapes given by the reversed colors as far left as
// possible, then read the rows off the abacus.
TwoRowPartition tight_from_dhk(const DHKPartition &lambda);

}  // namespace cylq
