#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "cylq/abacus.hpp"
#include "cylq/cylinder.hpp"
#include "cylq/dhk.hpp"
#include "cylq/identities.hpp"
#include "cylq/series.hpp"

namespace cylq {

// Keys keep insertion order so emitted documents are stable and readable.
using Json = nlohmann::ordered_json;

enum class Format { json, csv, plain };

Format parse_format(const std::string &name);

// {"q_cap":N,"z_cap":M,"terms":[[n,m,"coeff"],...]}, terms sorted by (n, m).
Json series_to_json(const Series &s);
Series series_from_json(const Json &j);

struct ProfiledRows {
  Profile profile;
  std::vector<Row> rows;
};

// {"profile":[...],"rows":[[...],...]}
Json partition_to_json(const Profile &profile, const CylindricPartition &p);
ProfiledRows partition_from_json(const Json &j);

// {"level":L,"background_shape":a,"yokes":[[bottom,shape],...]}
Json abacus_to_json(const Abacus2 &ab);
Abacus2 abacus_from_json(const Json &j);

// {"level":L,"ground":a,"colors":[...],"parts":[...]}; parts are ignored on
// load and recomputed from the colors.
Json dhk_to_json(const DHKPartition &lambda);
DHKPartition dhk_from_json(const Json &j);

// {"name":...,"q_cap":N,"z_cap":M,"ok":bool,"first_nonzero":[n,m,"coeff"]|null}
// plus "asserted":false for report-only entries.
Json report_to_json(const CheckReport &r);

// Text renderings. CSV series: header n,m,coeff with nonzero rows sorted by
// (n, m). Plain series: the q-coefficients as a comma list when z_cap is 0,
// otherwise one "n: c_0,c_1,...,c_zcap" line per q power.
std::string format_series(const Series &s, Format f);
std::string format_reports(const std::vector<CheckReport> &reports, Format f);
std::string format_partitions(const Profile &profile, const std::vector<CylindricPartition> &parts, Format f);
std::string format_dhk_list(const std::vector<DHKPartition> &parts, Format f);

// "8_2+7_3+...+0_0"
std::string dhk_to_string(const DHKPartition &lambda);

}  // namespace cylq
