#pragma once

#include <functional>
#include <vector>

#include "cylq/exec.hpp"
#include "cylq/series.hpp"

namespace cylq {

// Composition c = (c_1, ..., c_r) with r >= 2 and c_i >= 0. Entries are
// 1-indexed in the accessors below, matching the usual notation; storage is
// 0-indexed.
class Profile {
 public:
  explicit Profile(std::vector<int> c);

  int rank() const { return static_cast<int>(c_.size()); }
  int level() const { return level_; }
  // c_i for 1 <= i <= r; index 0 is read as c_r.
  int operator[](int i) const;
  const std::vector<int> &entries() const { return c_; }

  // Cyclic rotation (c_{1+s}, ..., c_r, c_1, ..., c_s).
  Profile rotated(int s) const;

  bool operator==(const Profile &) const = default;
  auto operator<=>(const Profile &) const = default;

 private:
  std::vector<int> c_;
  int level_ = 0;
};

using Row = std::vector<int>;

struct PartitionStats {
  int max_part = 0;
  int weight = 0;
};

// r-tuple of partitions in canonical form (positive parts only, each row
// weakly decreasing). Part pi^{(i)}_j reads as 0 beyond the stored length.
struct CylindricPartition {
  std::vector<Row> rows;

  int part(int row, int j) const;  // 0-indexed row, 1-indexed j
  PartitionStats stats() const;
  int weight() const { return stats().weight; }
  int max_part() const { return stats().max_part; }

  bool operator==(const CylindricPartition &) const = default;
  auto operator<=>(const CylindricPartition &) const = default;
};

// Strips trailing zeros; throws on negative parts or a row that increases.
CylindricPartition canonical_partition(std::vector<Row> rows);

// Row dominance with wrap-around:
//   pi^{(i)}_j >= pi^{(i+1)}_{j + c_{i+1}}  for 1 <= i < r,
//   pi^{(r)}_j >= pi^{(1)}_{j + c_1}.
// The wrap-around inequality is the one for the last row; it is the reading
// consistent with the abacus model. Throws on a row count mismatch or a row
// that is not weakly decreasing.
bool is_cylindric(const std::vector<Row> &rows, const Profile &profile);

// True iff no positive integer occurs as a part in every row.
bool is_tight(const std::vector<Row> &rows);

using PartitionVisitor = std::function<void(const CylindricPartition &)>;

// Visits every cylindric partition of weight <= weight_cap once, in no
// particular order.
void for_each_cylindric(const Profile &profile, int weight_cap, const PartitionVisitor &visit);

// All cylindric partitions of weight <= weight_cap, sorted by weight then
// lexicographically by rows. The parallel path splits the search on the value
// of the first cell.
std::vector<CylindricPartition> enumerate_cylindric(const Profile &profile, int weight_cap,
                                                    Exec exec = Exec::parallel);
std::vector<CylindricPartition> enumerate_tight(const Profile &profile, int weight_cap,
                                                Exec exec = Exec::parallel);

// sum z^max q^wt over the given partitions.
Series gf_from_partitions(const std::vector<CylindricPartition> &parts, int q_cap, int z_cap);

// Shorthands: enumeration generating functions at caps (cap, cap).
Series gf_cylindric(const Profile &profile, int cap);
Series gf_tight(const Profile &profile, int cap);

// I_c: the 1-indexed positions with c_i > 0.
std::vector<int> profile_support(const Profile &profile);

// c(J) for a nonempty J contained in I_c (1-indexed, any order):
//   c_i - 1 if i in J and i-1 not in J,
//   c_i + 1 if i not in J and i-1 in J,
//   c_i     otherwise,
// with index 0 read as r.
Profile profile_child(const Profile &profile, const std::vector<int> &subset);

// Nonempty subsets of I_c, each sorted ascending.
std::vector<std::vector<int>> nonempty_support_subsets(const Profile &profile);

}  // namespace cylq
