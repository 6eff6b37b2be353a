#include "cylq/io.hpp"

#include <sstream>
#include <stdexcept>

namespace cylq {

Format parse_format(const std::string &name) {
  if (name == "json") return Format::json;
  if (name == "csv") return Format::csv;
  if (name == "plain") return Format::plain;
  throw std::invalid_argument("cylq: unknown format '" + name + "'");
}

namespace {

Json term_json(const Term &t) { return Json::array({t.n, t.m, std::to_string(t.coeff)}); }

Coeff parse_coeff(const Json &j) {
  if (j.is_number_integer()) return j.get<Coeff>();
  const std::string s = j.get<std::string>();
  std::size_t used = 0;
  const long long v = std::stoll(s, &used);
  if (used != s.size()) throw std::invalid_argument("cylq: bad coefficient '" + s + "'");
  return static_cast<Coeff>(v);
}

std::string dump(const Json &j) { return j.dump(2) + "\n"; }

std::string join(const std::vector<int> &v, const char *sep) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? sep : "") << v[i];
  return os.str();
}

std::string rows_text(const CylindricPartition &p) {
  std::string out;
  for (std::size_t i = 0; i < p.rows.size(); ++i) out += (i ? ";" : "") + join(p.rows[i], " ");
  return out;
}

}  // namespace

Json series_to_json(const Series &s) {
  Json terms = Json::array();
  for (const auto &t : s.terms()) terms.push_back(term_json(t));
  return Json{{"q_cap", s.q_cap()}, {"z_cap", s.z_cap()}, {"terms", terms}};
}

Series series_from_json(const Json &j) {
  Series s(j.at("q_cap").get<int>(), j.at("z_cap").get<int>());
  for (const auto &t : j.at("terms")) {
    const int n = t.at(0).get<int>(), m = t.at(1).get<int>();
    if (n < 0 || m < 0 || n > s.q_cap() || m > s.z_cap())
      throw std::invalid_argument("cylq: series term outside its caps");
    s.add_to(n, m, parse_coeff(t.at(2)));
  }
  return s;
}

Json partition_to_json(const Profile &profile, const CylindricPartition &p) {
  return Json{{"profile", profile.entries()}, {"rows", p.rows}};
}

ProfiledRows partition_from_json(const Json &j) {
  return {Profile(j.at("profile").get<std::vector<int>>()), j.at("rows").get<std::vector<Row>>()};
}

Json abacus_to_json(const Abacus2 &ab) {
  Json yokes = Json::array();
  for (const auto &y : ab.yokes) yokes.push_back(Json::array({y.bottom, y.shape}));
  return Json{{"level", ab.level}, {"background_shape", ab.background_shape}, {"yokes", yokes}};
}

Abacus2 abacus_from_json(const Json &j) {
  Abacus2 ab{j.at("level").get<int>(), j.at("background_shape").get<int>(), {}};
  for (const auto &y : j.at("yokes")) ab.yokes.push_back({y.at(0).get<int>(), y.at(1).get<int>()});
  validate_abacus(ab);
  return ab;
}

Json dhk_to_json(const DHKPartition &lambda) {
  return Json{{"level", lambda.level}, {"ground", lambda.ground}, {"colors", lambda.colors}, {"parts", lambda.parts}};
}

DHKPartition dhk_from_json(const Json &j) {
  DHKPartition out = dhk_from_colors(j.at("level").get<int>(), j.at("colors").get<std::vector<int>>());
  if (j.contains("ground") && j.at("ground").get<int>() != out.ground)
    throw std::invalid_argument("cylq: ground color disagrees with the last color");
  return out;
}

Json report_to_json(const CheckReport &r) {
  Json j{{"name", r.name},
         {"q_cap", r.q_cap},
         {"z_cap", r.z_cap},
         {"ok", r.ok()},
         {"first_nonzero", r.first_nonzero ? term_json(*r.first_nonzero) : Json(nullptr)}};
  if (!r.asserted) j["asserted"] = false;
  return j;
}

std::string format_series(const Series &s, Format f) {
  std::ostringstream os;
  switch (f) {
    case Format::json:
      return dump(series_to_json(s));
    case Format::csv:
      os << "n,m,coeff\n";
      for (const auto &t : s.terms()) os << t.n << ',' << t.m << ',' << t.coeff << '\n';
      return os.str();
    case Format::plain:
      if (s.z_cap() == 0) {
        for (int n = 0; n <= s.q_cap(); ++n) os << (n ? "," : "") << s.at(n, 0);
        os << '\n';
      } else {
        for (int n = 0; n <= s.q_cap(); ++n) {
          os << n << ':';
          for (int m = 0; m <= s.z_cap(); ++m) os << (m ? "," : " ") << s.at(n, m);
          os << '\n';
        }
      }
      return os.str();
  }
  return {};
}

std::string format_reports(const std::vector<CheckReport> &reports, Format f) {
  std::ostringstream os;
  switch (f) {
    case Format::json: {
      Json arr = Json::array();
      for (const auto &r : reports) arr.push_back(report_to_json(r));
      return dump(arr);
    }
    case Format::csv:
      os << "name,q_cap,z_cap,ok,asserted,n,m,coeff\n";
      for (const auto &r : reports) {
        os << r.name << ',' << r.q_cap << ',' << r.z_cap << ',' << (r.ok() ? "true" : "false") << ','
           << (r.asserted ? "true" : "false");
        if (r.first_nonzero)
          os << ',' << r.first_nonzero->n << ',' << r.first_nonzero->m << ',' << r.first_nonzero->coeff;
        else
          os << ",,,";
        os << '\n';
      }
      return os.str();
    case Format::plain:
      for (const auto &r : reports) {
        os << (r.ok() ? "PASS" : r.asserted ? "FAIL" : "NOTE") << ' ' << r.name;
        if (r.first_nonzero)
          os << "  first nonzero at q^" << r.first_nonzero->n << " z^" << r.first_nonzero->m << ": "
             << r.first_nonzero->coeff;
        os << '\n';
      }
      return os.str();
  }
  return {};
}

std::string format_partitions(const Profile &profile, const std::vector<CylindricPartition> &parts, Format f) {
  std::ostringstream os;
  switch (f) {
    case Format::json: {
      Json arr = Json::array();
      for (const auto &p : parts) arr.push_back(partition_to_json(profile, p));
      return dump(arr);
    }
    case Format::csv:
      os << "weight,max,rows\n";
      for (const auto &p : parts) os << p.weight() << ',' << p.max_part() << ',' << rows_text(p) << '\n';
      return os.str();
    case Format::plain:
      for (const auto &p : parts) os << "wt " << p.weight() << " max " << p.max_part() << "  " << rows_text(p) << '\n';
      return os.str();
  }
  return {};
}

std::string dhk_to_string(const DHKPartition &lambda) {
  std::string out;
  for (std::size_t i = 0; i < lambda.parts.size(); ++i)
    out += (i ? "+" : "") + std::to_string(lambda.parts[i]) + "_" + std::to_string(lambda.colors[i]);
  return out;
}

std::string format_dhk_list(const std::vector<DHKPartition> &parts, Format f) {
  std::ostringstream os;
  switch (f) {
    case Format::json: {
      Json arr = Json::array();
      for (const auto &p : parts) arr.push_back(dhk_to_json(p));
      return dump(arr);
    }
    case Format::csv:
      os << "weight,parts,colors\n";
      for (const auto &p : parts) os << p.weight() << ',' << p.num_parts() << ',' << join(p.colors, " ") << '\n';
      return os.str();
    case Format::plain:
      for (const auto &p : parts) os << "wt " << p.weight() << "  " << dhk_to_string(p) << '\n';
      return os.str();
  }
  return {};
}

}  // namespace cylq
