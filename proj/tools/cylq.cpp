// cylq: tables, check suites and the tight/DHK bijection from the command line.
//
// Exit codes: 0 success, 1 an asserted check failed, 2 bad parameters,
// 3 bijection input is not tight. Data goes to stdout (or --out), diagnostics
// to stderr.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "cylq/dhk.hpp"
#include "cylq/identities.hpp"
#include "cylq/io.hpp"
#include "cylq/suites.hpp"

using namespace cylq;

namespace {

struct BadParams : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct Options {
  std::string format = "json";
  std::string out;

  std::string kind;  // enumerate kind / gf source / check suite / bijection direction
  std::string profile;
  std::optional<int> level, ground, b, rank, cap;
  int t = 0;
  std::string v;
  int q_cap = 12, z_cap = 12;
  int max_level = 4;
  bool mutate = false;
  std::string mode = "all";
  std::string input;
};

std::vector<int> parse_ints(const std::string &text, const char *what) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception &) {
      throw BadParams(std::string("cylq: --") + what + " expects comma-separated integers, got '" + text + "'");
    }
  }
  if (out.empty()) throw BadParams(std::string("cylq: --") + what + " is empty");
  return out;
}

template <typename T>
T need(const std::optional<T> &x, const char *flag) {
  if (!x) throw BadParams(std::string("cylq: this command needs --") + flag);
  return *x;
}

Profile need_profile(const Options &o) {
  if (o.profile.empty()) throw BadParams("cylq: this command needs --profile");
  return Profile(parse_ints(o.profile, "profile"));
}

Caps caps(const Options &o) {
  if (o.q_cap < 0 || o.z_cap < 0) throw BadParams("cylq: caps must be >= 0");
  return {o.q_cap, o.z_cap};
}

struct Result {
  std::string text;
  int code = 0;
};

Result cmd_enumerate(const Options &o, Format f) {
  const int cap = o.cap.value_or(10);
  if (cap < 0) throw BadParams("cylq: --cap must be >= 0");
  if (o.kind == "dhk") return {format_dhk_list(enumerate_dhk(need(o.level, "level"), need(o.ground, "ground"), cap), f)};
  const Profile p = need_profile(o);
  const auto parts = o.kind == "cyl" ? enumerate_cylindric(p, cap) : enumerate_tight(p, cap);
  return {format_partitions(p, parts, f)};
}

Series gf_series(const Options &o) {
  const Caps c = caps(o);
  const std::string &src = o.kind;
  if (src == "enum-tight") return series_recap(gf_tight(need_profile(o), c.q_cap), c.q_cap, c.z_cap);
  if (src == "enum-cyl") return series_recap(gf_cylindric(need_profile(o), c.q_cap), c.q_cap, c.z_cap);
  if (src == "enum-dhk") return gf_dhk(need(o.level, "level"), need(o.ground, "ground"), c.q_cap, c.z_cap);
  if (src == "multisum-T") return eval_T_multisum(need(o.level, "level"), o.b.value_or(0), c);
  if (src == "multisum-C") return eval_C_multisum(need(o.level, "level"), o.b.value_or(0), c);
  if (src == "level1") return eval_level1(need(o.rank, "rank"), c);
  if (src == "product") return eval_product_univariate(need_profile(o), c.q_cap);
  // S
  const int level = need(o.level, "level");
  const VectorV v = o.v.empty() ? VectorV(static_cast<std::size_t>(level), 0) : parse_ints(o.v, "v");
  return eval_S(level, o.t, v, c);
}

DiamondMode parse_mode(const std::string &m) {
  if (m == "S") return DiamondMode::multisum_S;
  if (m == "T") return DiamondMode::multisum_T;
  if (m == "enum") return DiamondMode::enumeration;
  throw BadParams("cylq: --mode must be S, T, enum or all");
}

std::vector<CheckReport> run_check(const Options &o) {
  const Caps c = caps(o);
  const std::string &suite = o.kind;
  if (o.max_level < 1) throw BadParams("cylq: --max-level must be >= 1");
  auto levels = [&]() {
    std::vector<int> ls;
    if (o.level) {
      ls.push_back(*o.level);
    } else {
      for (int l = 1; l <= o.max_level; ++l) ls.push_back(l);
    }
    return ls;
  };
  auto profiles = [&](bool with_rank3) {
    if (!o.profile.empty()) return std::vector<Profile>{need_profile(o)};
    auto ps = two_row_profiles(o.max_level);
    if (with_rank3)
      for (const auto &p : profiles_of_rank(3, std::min(o.max_level, 2))) ps.push_back(p);
    return ps;
  };
  auto grounds = [&](int l) {
    std::vector<int> as;
    if (o.ground) {
      as.push_back(*o.ground);
    } else {
      for (int a = 0; a <= l; ++a) as.push_back(a);
    }
    return as;
  };

  std::vector<ReportTask> tasks;
  auto one = [](CheckReport r) { return std::vector<CheckReport>{std::move(r)}; };
  if (suite == "all") return check_all(o.max_level, c, o.mutate);
  if (suite == "cw") {
    for (const auto &p : profiles(true)) tasks.push_back([=] { return one(check_cw(p, c, o.mutate)); });
  } else if (suite == "diamond") {
    std::vector<DiamondMode> modes;
    if (o.mode == "all")
      modes = {DiamondMode::multisum_S, DiamondMode::multisum_T, DiamondMode::enumeration};
    else
      modes = {parse_mode(o.mode)};
    for (int l : levels()) {
      for (auto m : modes) tasks.push_back([=] { return check_diamond(l, c, m, o.mutate); });
      if (modes.size() > 1) tasks.push_back([=] { return check_mode_agreement(l, c); });
    }
  } else if (suite == "rec2") {
    for (const auto &p : profiles(false)) {
      if (p.rank() != 2) throw BadParams("cylq: rec2 needs a 2-row profile");
      tasks.push_back([=] { return one(check_tight_rec2(p[1], p[2], c, o.mutate)); });
    }
  } else if (suite == "dhkrec") {
    for (int l : levels())
      for (int a : grounds(l)) tasks.push_back([=] { return one(check_dhk_rec(l, a, c, o.mutate)); });
  } else if (suite == "fourterm") {
    if (o.level) {
      for (int i = 1; 2 * i <= *o.level; ++i) tasks.push_back([=] { return one(check_four_term(*o.level, i, c, o.mutate)); });
      if (tasks.empty()) throw BadParams("cylq: the four-term relations need level >= 2");
    } else {
      return four_term_all(std::max(o.max_level, 2), c, o.mutate);
    }
  } else if (suite == "rel") {
    const int max_l = o.level.value_or(std::min(o.max_level, 2));
    return rel_grid(max_l, 1, -1, 1, c, o.mutate).reports;
  } else if (suite == "bijection") {
    const int cap = o.cap.value_or(c.q_cap);
    for (int l : levels())
      for (int a : grounds(l)) tasks.push_back([=] { return bijection_suite(l, a, cap); });
  } else if (suite == "products") {
    return products_suite(o.level.value_or(o.max_level), c.q_cap, c.q_cap);
  } else if (suite == "unimodal") {
    if (o.profile.empty()) return unimodal_suite(o.max_level, c);
    const Series t = series_recap(gf_tight(need_profile(o), c.q_cap), c.q_cap, c.z_cap);
    return {unimodal_report("unimodal/c=(" + o.profile + ")", t)};
  }
  return run_tasks(tasks);
}

Json read_input(const std::string &arg) {
  if (arg.empty()) throw BadParams("cylq: bijection needs --input");
  const auto first = arg.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && arg[first] == '{') return Json::parse(arg);
  std::ifstream in(arg);
  if (!in) throw BadParams("cylq: cannot read input file '" + arg + "'");
  return Json::parse(in);
}

Result cmd_bijection(const Options &o, Format f) {
  const Json in = read_input(o.input);
  Json out;
  std::ostringstream plain;
  if (o.kind == "to-dhk") {
    const ProfiledRows pr = partition_from_json(in);
    if (pr.profile.rank() != 2) throw BadParams("cylq: the bijection needs a 2-row profile");
    const CylindricPartition pi = canonical_partition(pr.rows);
    const DHKPartition lambda = dhk_from_tight(pi.rows, pr.profile);
    out = Json{{"dhk", dhk_to_json(lambda)},
               {"text", dhk_to_string(lambda)},
               {"weight", lambda.weight()},
               {"num_parts", lambda.num_parts()},
               {"source_weight", pi.weight()},
               {"source_max", pi.max_part()}};
    plain << dhk_to_string(lambda) << "\nweight " << lambda.weight() << " parts " << lambda.num_parts() << '\n';
  } else {
    const DHKPartition lambda = dhk_from_json(in);
    const TwoRowPartition pi = tight_from_dhk(lambda);
    out = Json{{"partition", partition_to_json(pi.profile, pi.partition)},
               {"weight", pi.partition.weight()},
               {"max", pi.partition.max_part()},
               {"source_weight", lambda.weight()},
               {"source_num_parts", lambda.num_parts()}};
    plain << "profile " << pi.profile[1] << ',' << pi.profile[2] << " rows " << out["partition"]["rows"].dump()
          << "\nweight " << pi.partition.weight() << " max " << pi.partition.max_part() << '\n';
  }
  if (f == Format::plain) return {plain.str()};
  if (f == Format::csv) throw BadParams("cylq: bijection output supports json and plain");
  return {out.dump(2) + "\n"};
}

void add_output_flags(CLI::App *sub, Options &o) {
  sub->add_option("--format", o.format, "json, csv or plain")
      ->check(CLI::IsMember({"json", "csv", "plain"}))
      ->capture_default_str();
  sub->add_option("--out", o.out, "write data here instead of stdout");
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"Tight cylindric partitions, DHK partitions and their q-series identities"};
  app.require_subcommand(1);
  Options o;

  auto *en = app.add_subcommand("enumerate", "list partitions up to a weight cap");
  en->add_option("kind", o.kind, "cyl, tight or dhk")->required()->check(CLI::IsMember({"cyl", "tight", "dhk"}));
  en->add_option("--profile", o.profile, "comma-separated profile, e.g. 3,0");
  en->add_option("--level", o.level);
  en->add_option("--ground", o.ground);
  en->add_option("--cap", o.cap, "weight cap (default 10)");
  add_output_flags(en, o);

  auto *gf = app.add_subcommand("gf", "print a generating function as a truncated series");
  gf->add_option("source", o.kind)
      ->required()
      ->check(CLI::IsMember({"enum-tight", "enum-cyl", "enum-dhk", "multisum-T", "multisum-C", "level1", "product", "S"}));
  gf->add_option("--profile", o.profile);
  gf->add_option("--level", o.level);
  gf->add_option("--ground", o.ground);
  gf->add_option("--b", o.b);
  gf->add_option("--t", o.t);
  gf->add_option("--v", o.v, "comma-separated vector for S");
  gf->add_option("--rank", o.rank);
  gf->add_option("--qcap", o.q_cap)->capture_default_str();
  gf->add_option("--zcap", o.z_cap)->capture_default_str();
  add_output_flags(gf, o);

  auto *ck = app.add_subcommand("check", "run identity checks and print one report per instance");
  ck->add_option("suite", o.kind)
      ->required()
      ->check(CLI::IsMember(
          {"cw", "diamond", "rec2", "dhkrec", "fourterm", "rel", "bijection", "products", "unimodal", "all"}));
  ck->add_option("--max-level", o.max_level)->capture_default_str();
  ck->add_option("--level", o.level);
  ck->add_option("--ground", o.ground);
  ck->add_option("--profile", o.profile);
  ck->add_option("--qcap", o.q_cap)->capture_default_str();
  ck->add_option("--zcap", o.z_cap)->capture_default_str();
  ck->add_option("--cap", o.cap, "weight cap for bijection (default qcap)");
  ck->add_option("--mode", o.mode, "diamond realization: S, T, enum or all")->capture_default_str();
  ck->add_flag("--mutate", o.mutate, "perturb each identity; the run should then fail");
  add_output_flags(ck, o);

  auto *bj = app.add_subcommand("bijection", "map between tight 2-row partitions and DHK partitions");
  bj->add_option("direction", o.kind)->required()->check(CLI::IsMember({"to-dhk", "to-tight"}));
  bj->add_option("--input", o.input, "JSON object or a path to a file holding one")->required();
  add_output_flags(bj, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return 2;
  }

  Result result;
  try {
    const Format f = parse_format(o.format);
    if (*en) {
      result = cmd_enumerate(o, f);
    } else if (*gf) {
      result = {format_series(gf_series(o), f)};
    } else if (*ck) {
      const auto reports = run_check(o);
      result = {format_reports(reports, f), all_asserted_ok(reports) ? 0 : 1};
      for (const auto &r : reports)
        if (r.asserted && !r.ok()) std::cerr << "failed: " << r.name << '\n';
    } else {
      result = cmd_bijection(o, f);
    }
  } catch (const NotTight &e) {
    std::cerr << e.what() << '\n';
    return 3;
  } catch (const std::overflow_error &e) {
    std::cerr << e.what() << " (try smaller caps)\n";
    return 2;
  } catch (const std::exception &e) {
    std::cerr << e.what() << '\n';
    return 2;
  }

  if (o.out.empty()) {
    std::cout << result.text;
  } else {
    std::ofstream file(o.out);
    if (!file) {
      std::cerr << "cylq: cannot write '" << o.out << "'\n";
      return 2;
    }
    file << result.text;
  }
  return result.code;
}
