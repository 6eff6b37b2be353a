#include "cylq/suites.hpp"

#include <algorithm>
#include <exception>
#include <string>
#include <tuple>

#include "cylq/dhk.hpp"

namespace cylq {

std::vector<CheckReport> run_tasks(const std::vector<ReportTask> &tasks, Exec exec) {
  std::vector<std::vector<CheckReport>> results(tasks.size());
  const int n = static_cast<int>(tasks.size());
  if (exec == Exec::serial || worker_threads() == 1) {
    for (int i = 0; i < n; ++i) results[static_cast<std::size_t>(i)] = tasks[static_cast<std::size_t>(i)]();
  } else {
    std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 1) num_threads(worker_threads())
    for (int i = 0; i < n; ++i) {
      try {
        results[static_cast<std::size_t>(i)] = tasks[static_cast<std::size_t>(i)]();
      } catch (...) {
#pragma omp critical(cylq_suite_failure)
        failure = std::current_exception();
      }
    }
    if (failure) std::rethrow_exception(failure);
  }
  std::vector<CheckReport> out;
  for (auto &r : results) out.insert(out.end(), r.begin(), r.end());
  std::stable_sort(out.begin(), out.end(), [](const CheckReport &a, const CheckReport &b) { return a.name < b.name; });
  return out;
}

std::vector<Profile> two_row_profiles(int max_level) {
  return profiles_of_rank(2, max_level);
}

std::vector<Profile> profiles_of_rank(int rank, int max_level) {
  std::vector<Profile> out;
  std::vector<int> c(static_cast<std::size_t>(rank), 0);
  auto rec = [&](auto &&self, int i, int left) -> void {
    if (i == rank - 1) {
      c[static_cast<std::size_t>(i)] = left;
      out.emplace_back(c);
      return;
    }
    for (int x = left; x >= 0; --x) {
      c[static_cast<std::size_t>(i)] = x;
      self(self, i + 1, left - x);
    }
  };
  for (int l = 1; l <= max_level; ++l) rec(rec, 0, l);
  return out;
}

RelGrid rel_grid(int max_level, int t_max, int v_lo, int v_hi, Caps caps, bool mutate) {
  std::vector<std::tuple<int, int, int, VectorV>> points;
  int skipped = 0;
  for (int l = 1; l <= max_level; ++l) {
    VectorV v(static_cast<std::size_t>(l), v_lo);
    while (true) {
      for (int t = 0; t <= t_max; ++t)
        for (int j = 0; j <= l; ++j) {
          if (rel_admissible(l, j, t, v, caps))
            points.emplace_back(l, j, t, v);
          else
            ++skipped;
        }
      std::size_t k = 0;
      while (k < v.size() && v[k] == v_hi) v[k++] = v_lo;
      if (k == v.size()) break;
      ++v[k];
    }
  }
  std::vector<ReportTask> tasks;
  for (const auto &[l, j, t, v] : points)
    tasks.push_back([=] { return std::vector<CheckReport>{check_rel(l, j, t, v, caps, mutate)}; });
  return {run_tasks(tasks), skipped};
}

std::vector<CheckReport> four_term_all(int max_level, Caps caps, bool mutate) {
  std::vector<ReportTask> tasks;
  for (int l = 2; l <= max_level; ++l)
    for (int i = 1; 2 * i <= l; ++i)
      tasks.push_back([=] { return std::vector<CheckReport>{check_four_term(l, i, caps, mutate)}; });
  return run_tasks(tasks);
}

namespace {

std::string lb(const char *prefix, int l, int b) {
  return std::string(prefix) + "/l=" + std::to_string(l) + "/b=" + std::to_string(b);
}

std::string profile_name(const Profile &p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.entries().size(); ++i) s += (i ? "," : "") + std::to_string(p.entries()[i]);
  return s + ")";
}

}  // namespace

std::vector<CheckReport> products_suite(int max_level, int q_cap_display, int q_cap_enum) {
  std::vector<ReportTask> tasks;
  for (int l = 1; l <= max_level; ++l)
    for (int b = 0; b <= l; ++b) {
      tasks.push_back([=] {
        const Profile p({l - b, b});
        return std::vector<CheckReport>{
            make_report(lb("product/display", l, b),
                        eval_product_univariate(p, q_cap_display) - eval_product_two_row(l, b, q_cap_display)),
            make_report(lb("product/dhk", l, b),
                        eval_product_dhk(l, b, q_cap_enum) - series_at_z1(gf_dhk(l, b, q_cap_enum, q_cap_enum))),
        };
      });
    }
  std::vector<Profile> enum_profiles = two_row_profiles(max_level);
  for (const auto &p : profiles_of_rank(3, std::min(max_level, 2))) enum_profiles.push_back(p);
  for (const auto &p : enum_profiles)
    tasks.push_back([=] {
      return std::vector<CheckReport>{make_report("product/enum/c=" + profile_name(p),
                                                  eval_product_univariate(p, q_cap_enum) -
                                                      series_at_z1(gf_tight(p, q_cap_enum)))};
    });
  return run_tasks(tasks);
}

std::vector<CheckReport> bijection_suite(int level, int ground, int cap) {
  const Profile profile({level - ground, ground});
  Series bad_tight(cap, cap), bad_dhk(cap, cap), transport(cap, cap);
  for (const auto &p : enumerate_tight(profile, cap)) {
    const DHKPartition lambda = dhk_from_tight(p.rows, profile);
    const TwoRowPartition back = tight_from_dhk(lambda);
    if (back.partition != p || back.profile != profile) bad_tight.add_to(p.weight(), p.max_part(), 1);
    transport.add_to(p.weight(), p.max_part(), 1);
    transport.add_to(lambda.weight(), lambda.num_parts(), -1);
  }
  for (const auto &lambda : enumerate_dhk(level, ground, cap)) {
    const TwoRowPartition pi = tight_from_dhk(lambda);
    if (pi.profile != profile || !is_tight(pi.partition.rows) ||
        dhk_from_tight(pi.partition.rows, pi.profile) != lambda)
      bad_dhk.add_to(lambda.weight(), lambda.num_parts(), 1);
  }
  const std::string tag = "/l=" + std::to_string(level) + "/a=" + std::to_string(ground) + "/cap=" + std::to_string(cap);
  return {make_report("bijection/roundtrip-tight" + tag, bad_tight),
          make_report("bijection/roundtrip-dhk" + tag, bad_dhk),
          make_report("bijection/transport" + tag, transport)};
}

std::vector<CheckReport> all_cylindric_suite(int max_level, Caps caps) {
  std::vector<ReportTask> tasks;
  for (int l = 1; l <= max_level; ++l)
    for (int b = 0; b <= l / 2; ++b)
      tasks.push_back([=] {
        const Series c = eval_C_multisum(l, b, caps);
        std::vector<CheckReport> out;
        std::vector<Profile> orientations{Profile({l - b, b})};
        if (2 * b != l) orientations.emplace_back(std::vector<int>{b, l - b});
        for (const Profile &p : orientations) {
          const Series e = series_recap(gf_cylindric(p, caps.q_cap), caps.q_cap, caps.z_cap);
          out.push_back(make_report(lb("allcyl", l, b) + "/c=" + profile_name(p), c - e));
        }
        return out;
      });
  return run_tasks(tasks);
}

std::vector<CheckReport> level1_suite(int max_rank, Caps caps) {
  std::vector<ReportTask> tasks;
  for (int r = 2; r <= max_rank; ++r)
    for (int pos = 0; pos < r; ++pos)
      tasks.push_back([=] {
        std::vector<int> c(static_cast<std::size_t>(r), 0);
        c[static_cast<std::size_t>(pos)] = 1;
        const Profile p(c);
        return std::vector<CheckReport>{make_report(
            "level1/c=" + profile_name(p),
            eval_level1(r, caps) - series_recap(gf_tight(p, caps.q_cap), caps.q_cap, caps.z_cap))};
      });
  return run_tasks(tasks);
}

std::vector<CheckReport> unimodal_suite(int max_level, Caps caps) {
  std::vector<ReportTask> tasks;
  for (const auto &p : two_row_profiles(max_level))
    tasks.push_back([=] {
      const Series t = series_recap(gf_tight(p, caps.q_cap), caps.q_cap, caps.z_cap);
      return std::vector<CheckReport>{unimodal_report("unimodal/c=" + profile_name(p), t)};
    });
  return run_tasks(tasks);
}

std::vector<CheckReport> check_all(int max_level, Caps caps, bool mutate) {
  if (max_level < 1) throw std::invalid_argument("cylq: max level must be >= 1");
  std::vector<ReportTask> tasks;
  auto one = [](CheckReport r) { return std::vector<CheckReport>{std::move(r)}; };

  std::vector<Profile> cw_profiles = two_row_profiles(max_level);
  for (const auto &p : profiles_of_rank(3, std::min(max_level, 2))) cw_profiles.push_back(p);
  for (const auto &p : cw_profiles) tasks.push_back([=] { return one(check_cw(p, caps, mutate)); });

  for (int l = 1; l <= max_level; ++l) {
    for (auto mode : {DiamondMode::multisum_S, DiamondMode::multisum_T, DiamondMode::enumeration})
      tasks.push_back([=] { return check_diamond(l, caps, mode, mutate); });
    tasks.push_back([=] { return check_mode_agreement(l, caps); });
    for (int a = 0; a <= l; ++a) {
      tasks.push_back([=] { return one(check_tight_rec2(l - a, a, caps, mutate)); });
      tasks.push_back([=] { return one(check_dhk_rec(l, a, caps, mutate)); });
      tasks.push_back([=] { return bijection_suite(l, a, caps.q_cap); });
    }
  }
  tasks.push_back([=] { return rel_grid(std::min(max_level, 2), 1, -1, 1, caps, mutate).reports; });
  tasks.push_back([=] { return four_term_all(max_level, caps, mutate); });
  tasks.push_back([=] { return products_suite(max_level, caps.q_cap, caps.q_cap); });
  tasks.push_back([=] { return all_cylindric_suite(max_level, caps); });
  tasks.push_back([=] { return level1_suite(std::max(2, std::min(max_level, 4)), caps); });
  tasks.push_back([=] { return unimodal_suite(max_level, caps); });
  return run_tasks(tasks);
}

bool all_asserted_ok(const std::vector<CheckReport> &reports) {
  return std::all_of(reports.begin(), reports.end(), [](const CheckReport &r) { return !r.asserted || r.ok(); });
}

}  // namespace cylq
