#pragma once

#include <nlohmann/json_fwd.hpp>
#include <string>

#include "ncfree/freespace.hpp"
#include "ncfree/series.hpp"

namespace ncfree {

// Canonical series form: terms as (word, re, im) triples sorted by
// (length, lexicographic word), rationals as "p/q" strings.
nlohmann::json series_to_json(const NCSeries& s);
NCSeries series_from_json(const nlohmann::json& j);
std::string series_to_string(const NCSeries& s); // pretty JSON + trailing newline
NCSeries series_from_string(const std::string& text);
NCSeries load_series_file(const std::string& path);
void save_series_file(const NCSeries& s, const std::string& path);

nlohmann::json freespace_to_json(const FreeSpace& s);
FreeSpace freespace_from_json(const nlohmann::json& j);

// "{1,4,5}{2,3}{6,8}{7}" with n inferred from the elements.
Partition parse_partition(const std::string& literal);

} // namespace ncfree
