#include "cylq/cylinder.hpp"

#include <algorithm>
#include <exception>
#include <numeric>
#include <stdexcept>
#include <string>

namespace cylq {

Profile::Profile(std::vector<int> c) : c_(std::move(c)) {
  if (c_.size() < 2) throw std::invalid_argument("cylq: profile needs rank >= 2");
  for (int v : c_)
    if (v < 0) throw std::invalid_argument("cylq: profile entries must be >= 0");
  level_ = std::accumulate(c_.begin(), c_.end(), 0);
}

int Profile::operator[](int i) const {
  if (i == 0) return c_.back();
  if (i < 1 || i > rank()) throw std::out_of_range("cylq: profile index out of range");
  return c_[static_cast<std::size_t>(i - 1)];
}

Profile Profile::rotated(int s) const {
  const int r = rank();
  s = ((s % r) + r) % r;
  std::vector<int> out(c_.begin() + s, c_.end());
  out.insert(out.end(), c_.begin(), c_.begin() + s);
  return Profile(std::move(out));
}

int CylindricPartition::part(int row, int j) const {
  const Row &p = rows.at(static_cast<std::size_t>(row));
  return (j >= 1 && j <= static_cast<int>(p.size())) ? p[static_cast<std::size_t>(j - 1)] : 0;
}

PartitionStats CylindricPartition::stats() const {
  PartitionStats s;
  for (const Row &r : rows) {
    if (!r.empty()) s.max_part = std::max(s.max_part, r.front());
    s.weight = std::accumulate(r.begin(), r.end(), s.weight);
  }
  return s;
}

namespace {

void validate_rows(const std::vector<Row> &rows) {
  for (const Row &r : rows) {
    for (std::size_t j = 0; j < r.size(); ++j) {
      if (r[j] < 0) throw std::invalid_argument("cylq: negative part");
      if (j > 0 && r[j] > r[j - 1]) throw std::invalid_argument("cylq: row is not weakly decreasing");
    }
  }
}

int part_at(const Row &r, int j) {
  return (j >= 1 && j <= static_cast<int>(r.size())) ? r[static_cast<std::size_t>(j - 1)] : 0;
}

}  // namespace

CylindricPartition canonical_partition(std::vector<Row> rows) {
  validate_rows(rows);
  for (Row &r : rows)
    while (!r.empty() && r.back() == 0) r.pop_back();
  return CylindricPartition{std::move(rows)};
}

bool is_cylindric(const std::vector<Row> &rows, const Profile &profile) {
  const int r = profile.rank();
  if (static_cast<int>(rows.size()) != r)
    throw std::invalid_argument("cylq: expected " + std::to_string(r) + " rows, got " +
                                std::to_string(rows.size()));
  validate_rows(rows);
  // Row k (0-indexed) dominates row k+1 shifted by c_{k+2}; the last row
  // dominates the first shifted by c_1.
  for (int k = 0; k < r; ++k) {
    const Row &upper = rows[static_cast<std::size_t>(k)];
    const Row &lower = rows[static_cast<std::size_t>((k + 1) % r)];
    const int offset = profile[(k + 1) % r + 1];
    for (int j = 1; j + offset <= static_cast<int>(lower.size()); ++j)
      if (part_at(upper, j) < part_at(lower, j + offset)) return false;
  }
  return true;
}

bool is_tight(const std::vector<Row> &rows) {
  if (rows.empty()) return true;
  // A value is in every row iff it is in the first row and all others.
  for (int v : rows.front()) {
    if (v <= 0) continue;
    bool everywhere = true;
    for (std::size_t i = 1; i < rows.size() && everywhere; ++i)
      everywhere = std::find(rows[i].begin(), rows[i].end(), v) != rows[i].end();
    if (everywhere) return false;
  }
  return true;
}

namespace {

// Depth-first filler for the cells (row, col) of a cylindric partition.
// Cells are visited in increasing order of (col - d_row, row) with
// d_row = c_2 + ... + c_{row+1}; every upper bound of a cell then comes
// earlier in the order (when the level is positive), so each cell ranges
// over [0, min(bounds, remaining weight)].
class CellFiller {
 public:
  CellFiller(const Profile &profile, int cap) : profile_(profile), cap_(cap) {
    const int r = profile.rank();
    std::vector<int> d(static_cast<std::size_t>(r), 0);
    for (int k = 1; k < r; ++k) d[static_cast<std::size_t>(k)] = d[static_cast<std::size_t>(k - 1)] + profile[k + 1];
    for (int k = 0; k < r; ++k)
      for (int j = 1; j <= cap; ++j) cells_.push_back({k, j, j - d[static_cast<std::size_t>(k)]});
    std::sort(cells_.begin(), cells_.end(), [](const Cell &a, const Cell &b) {
      return a.pos != b.pos ? a.pos < b.pos : a.row < b.row;
    });
    slot_.assign(static_cast<std::size_t>(r) * static_cast<std::size_t>(cap + 1), -1);
    for (std::size_t i = 0; i < cells_.size(); ++i)
      slot_[key(cells_[i].row, cells_[i].col)] = static_cast<int>(i);
    for (Cell &cell : cells_) {
      cell.left = cell.col > 1 ? slot_[key(cell.row, cell.col - 1)] : -1;
      // Upper neighbour across rows: row k-1 at col - c_{k+1}; for row 0 the
      // last row at col - c_1.
      const int above = cell.row == 0 ? r - 1 : cell.row - 1;
      const int col = cell.col - profile[cell.row + 1];
      cell.above = col >= 1 ? slot_[key(above, col)] : -1;
      if (cell.above >= 0 && cell.above >= static_cast<int>(&cell - cells_.data())) {
        // Only possible at level 0, where all rows coincide; results are
        // filtered through is_cylindric instead.
        cell.above = -1;
        needs_filter_ = true;
      }
    }
    values_.assign(cells_.size(), 0);
  }

  int cell_count() const { return static_cast<int>(cells_.size()); }

  // Upper bound for the first cell.
  int first_bound() const { return cap_; }

  // Fixes the first cell to `first` and visits the whole subtree.
  template <typename Emit>
  void run_subtree(int first, Emit &&emit) {
    if (cells_.empty()) {
      emit_current(0, emit);
      return;
    }
    values_[0] = first;
    descend(1, cap_ - first, emit);
  }

 private:
  struct Cell {
    int row, col, pos;
    int left = -1, above = -1;
  };

  std::size_t key(int row, int col) const {
    return static_cast<std::size_t>(row) * static_cast<std::size_t>(cap_ + 1) + static_cast<std::size_t>(col);
  }

  template <typename Emit>
  void descend(std::size_t idx, int remaining, Emit &emit) {
    if (idx == cells_.size() || remaining == 0) {
      emit_current(idx, emit);
      return;
    }
    const Cell &cell = cells_[idx];
    int ub = remaining;
    if (cell.left >= 0) ub = std::min(ub, values_[static_cast<std::size_t>(cell.left)]);
    if (cell.above >= 0) ub = std::min(ub, values_[static_cast<std::size_t>(cell.above)]);
    for (int v = ub; v >= 0; --v) {
      values_[idx] = v;
      descend(idx + 1, remaining - v, emit);
    }
    values_[idx] = 0;
  }

  // Cells from `filled` on are zero.
  template <typename Emit>
  void emit_current(std::size_t filled, Emit &emit) {
    CylindricPartition p;
    p.rows.resize(static_cast<std::size_t>(profile_.rank()));
    for (std::size_t i = 0; i < filled; ++i) {
      const Cell &cell = cells_[i];
      if (values_[i] == 0) continue;
      Row &row = p.rows[static_cast<std::size_t>(cell.row)];
      if (static_cast<int>(row.size()) < cell.col) row.resize(static_cast<std::size_t>(cell.col), 0);
      row[static_cast<std::size_t>(cell.col - 1)] = values_[i];
    }
    if (needs_filter_ && !is_cylindric(p.rows, profile_)) return;
    emit(std::move(p));
  }

  const Profile &profile_;
  int cap_;
  std::vector<Cell> cells_;
  std::vector<int> slot_;
  std::vector<int> values_;
  bool needs_filter_ = false;
};

void sort_canonical(std::vector<CylindricPartition> &parts) {
  std::vector<std::pair<int, std::size_t>> order;
  order.reserve(parts.size());
  for (std::size_t i = 0; i < parts.size(); ++i) order.emplace_back(parts[i].weight(), i);
  std::sort(order.begin(), order.end(), [&](const auto &a, const auto &b) {
    if (a.first != b.first) return a.first < b.first;
    return parts[a.second].rows < parts[b.second].rows;
  });
  std::vector<CylindricPartition> sorted;
  sorted.reserve(parts.size());
  for (const auto &[w, i] : order) sorted.push_back(std::move(parts[i]));
  parts = std::move(sorted);
}

}  // namespace

void for_each_cylindric(const Profile &profile, int weight_cap, const PartitionVisitor &visit) {
  if (weight_cap < 0) throw std::invalid_argument("cylq: weight cap must be >= 0");
  CellFiller filler(profile, weight_cap);
  auto emit = [&](CylindricPartition &&p) { visit(p); };
  if (filler.cell_count() == 0) {
    filler.run_subtree(0, emit);
    return;
  }
  for (int v = 0; v <= filler.first_bound(); ++v) filler.run_subtree(v, emit);
}

std::vector<CylindricPartition> enumerate_cylindric(const Profile &profile, int weight_cap, Exec exec) {
  if (weight_cap < 0) throw std::invalid_argument("cylq: weight cap must be >= 0");
  std::vector<CylindricPartition> out;
  if (exec == Exec::serial || weight_cap == 0 || worker_threads() == 1) {
    for_each_cylindric(profile, weight_cap, [&](const CylindricPartition &p) { out.push_back(p); });
  } else {
    const int branches = weight_cap + 1;
    std::vector<std::vector<CylindricPartition>> buckets(static_cast<std::size_t>(branches));
    std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 1) num_threads(worker_threads())
    for (int v = 0; v < branches; ++v) {
      try {
        CellFiller filler(profile, weight_cap);
        auto &bucket = buckets[static_cast<std::size_t>(v)];
        filler.run_subtree(v, [&](CylindricPartition &&p) { bucket.push_back(std::move(p)); });
      } catch (...) {
#pragma omp critical(cylq_enum_failure)
        failure = std::current_exception();
      }
    }
    if (failure) std::rethrow_exception(failure);
    for (auto &b : buckets) std::move(b.begin(), b.end(), std::back_inserter(out));
  }
  sort_canonical(out);
  return out;
}

std::vector<CylindricPartition> enumerate_tight(const Profile &profile, int weight_cap, Exec exec) {
  auto all = enumerate_cylindric(profile, weight_cap, exec);
  std::vector<CylindricPartition> out;
  for (auto &p : all)
    if (is_tight(p.rows)) out.push_back(std::move(p));
  return out;
}

Series gf_from_partitions(const std::vector<CylindricPartition> &parts, int q_cap, int z_cap) {
  Series s(q_cap, z_cap);
  for (const auto &p : parts) {
    const auto st = p.stats();
    if (st.weight > q_cap)
      throw std::invalid_argument("cylq: partition of weight " + std::to_string(st.weight) +
                                  " exceeds q cap " + std::to_string(q_cap));
    s.add_to(st.weight, st.max_part, 1);
  }
  return s;
}

Series gf_cylindric(const Profile &profile, int cap) {
  return gf_from_partitions(enumerate_cylindric(profile, cap), cap, cap);
}

Series gf_tight(const Profile &profile, int cap) {
  return gf_from_partitions(enumerate_tight(profile, cap), cap, cap);
}

std::vector<int> profile_support(const Profile &profile) {
  std::vector<int> out;
  for (int i = 1; i <= profile.rank(); ++i)
    if (profile[i] > 0) out.push_back(i);
  return out;
}

Profile profile_child(const Profile &profile, const std::vector<int> &subset) {
  const int r = profile.rank();
  if (subset.empty()) throw std::invalid_argument("cylq: c(J) needs a nonempty J");
  std::vector<bool> in(static_cast<std::size_t>(r + 1), false);
  for (int i : subset) {
    if (i < 1 || i > r || profile[i] == 0)
      throw std::invalid_argument("cylq: J must be a subset of the support I_c");
    in[static_cast<std::size_t>(i)] = true;
  }
  std::vector<int> out(static_cast<std::size_t>(r));
  for (int i = 1; i <= r; ++i) {
    const bool here = in[static_cast<std::size_t>(i)];
    const bool prev = in[static_cast<std::size_t>(i == 1 ? r : i - 1)];
    int v = profile[i];
    if (here && !prev) v -= 1;
    else if (!here && prev) v += 1;
    out[static_cast<std::size_t>(i - 1)] = v;
  }
  return Profile(std::move(out));
}

std::vector<std::vector<int>> nonempty_support_subsets(const Profile &profile) {
  const auto support = profile_support(profile);
  const std::size_t k = support.size();
  std::vector<std::vector<int>> out;
  for (std::size_t mask = 1; mask < (std::size_t{1} << k); ++mask) {
    std::vector<int> subset;
    for (std::size_t b = 0; b < k; ++b)
      if (mask & (std::size_t{1} << b)) subset.push_back(support[b]);
    out.push_back(std::move(subset));
  }
  return out;
}

}  // namespace cylq
