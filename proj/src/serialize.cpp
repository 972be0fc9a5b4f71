#include "ncfree/serialize.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <fstream>

#include "ncfree/errors.hpp"

namespace ncfree {

using nlohmann::json;

json series_to_json(const NCSeries& s) {
    json terms = json::array();
    for (const auto& [w, c] : s.terms()) // shortlex order by construction
        terms.push_back(json::array({w, rat_to_string(c.re), rat_to_string(c.im)}));
    return json{{"nvars", s.nvars()}, {"degree_cap", s.degree_cap()}, {"terms", terms}};
}

NCSeries series_from_json(const json& j) {
    try {
        NCSeries s(j.at("nvars").get<int>(), j.at("degree_cap").get<int>());
        for (const auto& t : j.at("terms")) {
            if (!t.is_array() || t.size() != 3)
                throw domain_error("series term must be [word, re, im]");
            Word w = t[0].get<Word>();
            s.set_coef(w, GaussRat(rat_from_string(t[1].get<std::string>()),
                                   rat_from_string(t[2].get<std::string>())));
        }
        return s;
    } catch (const json::exception& e) {
        throw domain_error(std::string("bad series JSON: ") + e.what());
    }
}

std::string series_to_string(const NCSeries& s) { return series_to_json(s).dump(2) + "\n"; }

NCSeries series_from_string(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw domain_error(std::string("bad series JSON: ") + e.what());
    }
    return series_from_json(j);
}

NCSeries load_series_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw domain_error("cannot open series file '" + path + "'");
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return series_from_string(text);
}

void save_series_file(const NCSeries& s, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw domain_error("cannot write series file '" + path + "'");
    out << series_to_string(s);
}

json freespace_to_json(const FreeSpace& s) {
    json families = json::array();
    json family_r = json::array();
    for (std::size_t f = 0; f < s.families().size(); ++f) {
        families.push_back(s.families()[f]);
        family_r.push_back(series_to_json(s.family_series()[f]));
    }
    return json{{"variables", s.variables()},
                {"families", families},
                {"family_r", family_r},
                {"degree_cap", s.degree_cap()},
                {"tracial", s.tracial()}};
}

FreeSpace freespace_from_json(const json& j) {
    try {
        std::vector<NCSeries> series;
        for (const auto& sj : j.at("family_r")) series.push_back(series_from_json(sj));
        return FreeSpace(j.at("variables").get<std::vector<std::string>>(),
                         j.at("families").get<std::vector<std::vector<std::string>>>(),
                         std::move(series), j.at("degree_cap").get<int>(),
                         j.at("tracial").get<bool>());
    } catch (const json::exception& e) {
        throw domain_error(std::string("bad free-space JSON: ") + e.what());
    }
}

Partition parse_partition(const std::string& literal) {
    std::vector<std::vector<int>> blocks;
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < literal.size() && std::isspace(static_cast<unsigned char>(literal[pos]))) ++pos;
    };
    skip_ws();
    if (pos == literal.size()) throw domain_error("empty partition literal");
    while (pos < literal.size()) {
        skip_ws();
        if (pos == literal.size()) break;
        if (literal[pos] != '{') throw domain_error("expected '{' in partition literal");
        ++pos;
        std::vector<int> block;
        while (true) {
            skip_ws();
            std::size_t start = pos;
            while (pos < literal.size() && std::isdigit(static_cast<unsigned char>(literal[pos])))
                ++pos;
            if (start == pos) throw domain_error("expected element in partition literal");
            block.push_back(std::stoi(literal.substr(start, pos - start)));
            skip_ws();
            if (pos < literal.size() && literal[pos] == ',') {
                ++pos;
                continue;
            }
            if (pos < literal.size() && literal[pos] == '}') {
                ++pos;
                break;
            }
            throw domain_error("expected ',' or '}' in partition literal");
        }
        blocks.push_back(std::move(block));
        skip_ws();
    }
    int n = 0;
    for (const auto& b : blocks)
        for (int e : b) n = std::max(n, e);
    return Partition(n, std::move(blocks));
}

} // namespace ncfree
