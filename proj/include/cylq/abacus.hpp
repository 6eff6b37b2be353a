#pragma once

#include <vector>

#include "cylq/cylinder.hpp"

namespace cylq {

// One yoke: a bead at `bottom` on string 2 joined to a bead at
// bottom + shape on string 1.
struct Yoke {
  int bottom = 0;
  int shape = 0;
  int top() const { return bottom + shape; }
  bool operator==(const Yoke &) const = default;
};

// 2-string abacus of type A_{level - a, a}, stored as its finite deviation
// from the sea. The sea yokes sit at (-k, -k + a) for k >= 0; yoke 0 is the
// one at (0, a). `yokes` lists yokes 1..Y left to right.
//
// Invariants (checked by validate_abacus):
//   - shapes lie in [0, level];
//   - bottom sites strictly increase from >= 1, top sites strictly increase
//     from > a (yokes neither cross nor share a site with the sea);
//   - yoke 1 is not the sea continuation (1, a + 1), so Y is minimal.
struct Abacus2 {
  int level = 1;
  int background_shape = 0;
  std::vector<Yoke> yokes;
  bool operator==(const Abacus2 &) const = default;
};

// Per-yoke statistics, indexed from yoke 0.
//   shape_seq[i]      shape of yoke i (shape_seq[0] = background shape);
//   vacancy_counts[i] vacancies on both strings strictly left of yoke i's
//                     two beads, counted from yoke 0 (so entry 0 is 0).
struct YokeStats {
  std::vector<int> shape_seq;
  std::vector<int> vacancy_counts;
  bool operator==(const YokeStats &) const = default;
};

void validate_abacus(const Abacus2 &ab);

// Row s of the partition is read off string s: its j-th part counts the
// beads to the right of the j-th vacancy. The abacus has max(pi) yokes.
Abacus2 abacus_from_cylindric(const std::vector<Row> &rows, const Profile &profile);

// Inverse of abacus_from_cylindric; the profile is (level - a, a).
struct TwoRowPartition {
  CylindricPartition partition;
  Profile profile;
};
TwoRowPartition cylindric_from_abacus(const Abacus2 &ab);

// True iff no yoke can move one site left on both strings without touching
// its left neighbour (yoke 0 for the first).
bool is_tight_abacus(const Abacus2 &ab);

YokeStats yoke_stats(const Abacus2 &ab);

// Leftmost placement of yokes with the given shapes (yoke 1 first) on the sea
// of `background_shape`. The result is tight.
Abacus2 tight_abacus_from_shapes(int level, int background_shape, const std::vector<int> &shapes);

}  // namespace cylq
