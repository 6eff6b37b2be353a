#include "cylq/abacus.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace cylq {

namespace {

// Conjugate partition as a vector of length `len` (zero padded).
std::vector<int> conjugate(const Row &row, int len) {
  std::vector<int> out(static_cast<std::size_t>(len), 0);
  for (int part : row)
    for (int j = 0; j < std::min(part, len); ++j) ++out[static_cast<std::size_t>(j)];
  return out;
}

Row conjugate_back(const std::vector<int> &conj) {
  Row out;
  for (std::size_t j = 0; j < conj.size(); ++j)
    for (int k = 0; k < conj[j]; ++k) {
      if (static_cast<int>(out.size()) <= k) out.push_back(0);
      ++out[static_cast<std::size_t>(k)];
    }
  return out;
}

void require_two_rows(const Profile &profile) {
  if (profile.rank() != 2) throw std::invalid_argument("cylq: the abacus model needs a 2-row profile");
  if (profile.level() < 1) throw std::invalid_argument("cylq: the abacus model needs level >= 1");
}

}  // namespace

void validate_abacus(const Abacus2 &ab) {
  if (ab.level < 1) throw std::invalid_argument("cylq: abacus level must be >= 1");
  const int a = ab.background_shape;
  if (a < 0 || a > ab.level) throw std::invalid_argument("cylq: background shape outside [0, level]");
  Yoke prev{0, a};
  for (std::size_t k = 0; k < ab.yokes.size(); ++k) {
    const Yoke &y = ab.yokes[k];
    if (y.shape < 0 || y.shape > ab.level)
      throw std::invalid_argument("cylq: yoke " + std::to_string(k + 1) + " has shape outside [0, level]");
    if (y.bottom <= prev.bottom || y.top() <= prev.top())
      throw std::invalid_argument("cylq: yoke " + std::to_string(k + 1) + " crosses or touches its left neighbour");
    prev = y;
  }
  if (!ab.yokes.empty() && ab.yokes.front() == Yoke{1, a})
    throw std::invalid_argument("cylq: yoke 1 continues the sea; abacus is not in canonical form");
}

Abacus2 abacus_from_cylindric(const std::vector<Row> &rows, const Profile &profile) {
  require_two_rows(profile);
  if (!is_cylindric(rows, profile))
    throw std::invalid_argument("cylq: input is not a cylindric partition of the given profile");
  const int a = profile[2];
  const CylindricPartition p = canonical_partition(rows);
  const int count = p.max_part();
  const auto top = conjugate(p.rows[0], count);
  const auto bottom = conjugate(p.rows[1], count);

  Abacus2 ab{profile.level(), a, {}};
  for (int k = 1; k <= count; ++k) {
    const auto j = static_cast<std::size_t>(count - k);  // conjugate index Y + 1 - k, 0-based
    const int b = k + bottom[j];
    const int t = a + k + top[j];
    ab.yokes.push_back({b, t - b});
  }
  return ab;
}

TwoRowPartition cylindric_from_abacus(const Abacus2 &ab) {
  validate_abacus(ab);
  const int a = ab.background_shape;
  const int count = static_cast<int>(ab.yokes.size());
  std::vector<int> top(static_cast<std::size_t>(count)), bottom(static_cast<std::size_t>(count));
  for (int k = 1; k <= count; ++k) {
    const Yoke &y = ab.yokes[static_cast<std::size_t>(k - 1)];
    const auto j = static_cast<std::size_t>(count - k);
    bottom[j] = y.bottom - k;
    top[j] = y.top() - a - k;
  }
  return {canonical_partition({conjugate_back(top), conjugate_back(bottom)}),
          Profile({ab.level - a, a})};
}

bool is_tight_abacus(const Abacus2 &ab) {
  validate_abacus(ab);
  Yoke prev{0, ab.background_shape};
  for (const Yoke &y : ab.yokes) {
    const bool movable = y.bottom - 1 > prev.bottom && y.top() - 1 > prev.top();
    if (movable) return false;
    prev = y;
  }
  return true;
}

YokeStats yoke_stats(const Abacus2 &ab) {
  validate_abacus(ab);
  const int a = ab.background_shape;
  YokeStats st;
  st.shape_seq.push_back(a);
  st.vacancy_counts.push_back(0);
  for (std::size_t i = 0; i < ab.yokes.size(); ++i) {
    const Yoke &y = ab.yokes[i];
    const int k = static_cast<int>(i) + 1;
    // Sites 1 .. bottom-1 on string 2 hold k-1 beads; sites a+1 .. top-1 on
    // string 1 likewise.
    st.shape_seq.push_back(y.shape);
    st.vacancy_counts.push_back((y.bottom - k) + (y.top() - a - k));
  }
  return st;
}

Abacus2 tight_abacus_from_shapes(int level, int background_shape, const std::vector<int> &shapes) {
  Abacus2 ab{level, background_shape, {}};
  Yoke prev{0, background_shape};
  for (int s : shapes) {
    // Smallest bottom with bottom > prev.bottom and bottom + s > prev.top().
    const int b = prev.bottom + 1 + std::max(0, prev.shape - s);
    ab.yokes.push_back({b, s});
    prev = ab.yokes.back();
  }
  validate_abacus(ab);
  return ab;
}

}  // namespace cylq
