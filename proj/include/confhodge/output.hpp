#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "confhodge/dgcomplex.hpp"
#include "confhodge/genfun.hpp"
#include "confhodge/verify.hpp"

namespace confhodge::io {

enum class Format { json, csv, text };
Format parse_format(const std::string& name);  // throws std::invalid_argument

// Coefficients are emitted as JSON numbers when they fit in 64 bits and as
// decimal strings otherwise, so emitted documents re-serialize byte-for-byte.
nlohmann::ordered_json int_to_json(const Int& v);

// Signed-series output (gf / strand / specialize). zmode renders the t slot
// as z and drops the u column.
std::string format_series(const TruncatedSeries& s, int genus, int punctures,
                          Format f, bool zmode = false);

// Hodge-table output; signed_mode emits c = (-1)^i h under the key/column c.
std::string format_table(const genfun::HodgeTable& table, int tmax, Format f,
                         bool signed_mode = false);

// Oracle dimension table at fixed n.
std::string format_dim_table(const dg::GradedDimTable& table, int genus, int n,
                             Format f);

nlohmann::ordered_json report_to_json(const verify::CheckReport& r);
std::string format_reports(const std::vector<verify::CheckReport>& reports);

}  // namespace confhodge::io
