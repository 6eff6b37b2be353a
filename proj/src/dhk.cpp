#include "cylq/dhk.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <string>

namespace cylq {

int DHKPartition::weight() const { return std::accumulate(parts.begin(), parts.end(), 0); }

DHKPartition dhk_from_colors(int level, const std::vector<int> &colors) {
  if (level < 1) throw std::invalid_argument("cylq: DHK level must be >= 1");
  if (colors.empty()) throw std::invalid_argument("cylq: DHK color sequence is empty");
  for (int u : colors)
    if (u < 0 || u > level)
      throw std::invalid_argument("cylq: DHK color " + std::to_string(u) + " outside [0, level]");
  const std::size_t s = colors.size();
  if (s >= 2 && colors[s - 2] == colors[s - 1])
    throw std::invalid_argument("cylq: DHK partition would have two zero parts");

  DHKPartition out{level, colors.back(), colors, std::vector<int>(s, 0)};
  for (std::size_t i = s - 1; i-- > 0;)
    out.parts[i] = out.parts[i + 1] + std::abs(colors[i] - colors[i + 1]);
  return out;
}

namespace {

// Grows color sequences from the ground part upward; `rev` holds the colors
// from smallest part to largest.
void grow(int level, int cap, std::vector<int> &rev, int top_part, int weight,
          std::vector<DHKPartition> &out) {
  std::vector<int> colors(rev.rbegin(), rev.rend());
  out.push_back(dhk_from_colors(level, colors));
  const int u = rev.back();
  const bool at_ground = rev.size() == 1;
  for (int next = 0; next <= level; ++next) {
    if (at_ground && next == u) continue;  // a second zero part
    const int part = top_part + std::abs(next - u);
    if (weight + part > cap) continue;
    rev.push_back(next);
    grow(level, cap, rev, part, weight + part, out);
    rev.pop_back();
  }
}

}  // namespace

std::vector<DHKPartition> enumerate_dhk(int level, int ground, int weight_cap) {
  if (level < 1) throw std::invalid_argument("cylq: DHK level must be >= 1");
  if (ground < 0 || ground > level) throw std::invalid_argument("cylq: DHK ground color outside [0, level]");
  if (weight_cap < 0) throw std::invalid_argument("cylq: weight cap must be >= 0");
  std::vector<DHKPartition> out;
  std::vector<int> rev{ground};
  grow(level, weight_cap, rev, 0, 0, out);
  std::sort(out.begin(), out.end(), [](const DHKPartition &x, const DHKPartition &y) {
    const int wx = x.weight(), wy = y.weight();
    return wx != wy ? wx < wy : x.colors < y.colors;
  });
  return out;
}

Series gf_dhk(int level, int ground, int q_cap, int z_cap) {
  Series s(q_cap, z_cap);
  for (const auto &lambda : enumerate_dhk(level, ground, q_cap)) s.add_to(lambda.weight(), lambda.num_parts(), 1);
  return s;
}

DHKPartition dhk_from_tight(const std::vector<Row> &rows, const Profile &profile) {
  const Abacus2 ab = abacus_from_cylindric(rows, profile);
  if (!is_tight(rows) || !is_tight_abacus(ab))
    throw NotTight("cylq: partition is not tight; the DHK bijection needs a tight partition");
  const YokeStats st = yoke_stats(ab);
  for (std::size_t i = 1; i < st.shape_seq.size(); ++i)
    if (st.vacancy_counts[i] - st.vacancy_counts[i - 1] != std::abs(st.shape_seq[i] - st.shape_seq[i - 1]))
      throw std::logic_error("cylq: vacancy gap law fails on a tight abacus");
  std::vector<int> colors(st.shape_seq.rbegin(), st.shape_seq.rend());
  DHKPartition out = dhk_from_colors(ab.level, colors);
  if (!std::equal(out.parts.begin(), out.parts.end(), st.vacancy_counts.rbegin()))
    throw std::logic_error("cylq: derived parts disagree with vacancy counts");
  return out;
}

TwoRowPartition tight_from_dhk(const DHKPartition &lambda) {
  const DHKPartition checked = dhk_from_colors(lambda.level, lambda.colors);
  // Yoke i has the color of part s - i.
  std::vector<int> shapes(checked.colors.rbegin() + 1, checked.colors.rend());
  return cylindric_from_abacus(tight_abacus_from_shapes(checked.level, checked.ground, shapes));
}

}  // namespace cylq
