/**
 * @brief Stable JSON documents for spectra, degree bounds and certificates.
 *
 * Objects are key-sorted (nlohmann::json's default map) and every float is
 * rounded to 12 significant digits, so identical inputs give byte-identical
 * output.
 */
#pragma once

#include <cmath>
#include <cstdio>
#include <string>

#include <json.hpp>

#include "pcover/covers.hpp"
#include "pcover/gain.hpp"
#include "pcover/spectra.hpp"

namespace pcover {

using json = nlohmann::json;

inline double round_significant(double x, int digits = 12) {
    if (x == 0.0 || !std::isfinite(x)) return x == 0.0 ? 0.0 : x;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, x);
    const double r = std::strtod(buf, nullptr);
    return r == 0.0 ? 0.0 : r; // no negative zero
}

inline json to_json(const SpectrumReport& r) {
    json ev = json::array();
    for (double x : r.eigenvalues) ev.push_back(round_significant(x));
    json clusters = json::array();
    for (const auto& c : r.clusters) clusters.push_back({{"value", round_significant(c.value)}, {"multiplicity", c.multiplicity}});
    return {{"source", r.source}, {"n", r.size()}, {"eigenvalues", ev}, {"clusters", clusters}};
}

inline json to_json(const DegreeBoundTable& t) {
    json rows = json::array();
    for (const auto& row : t.rows)
        rows.push_back({{"s", row.s}, {"bound", round_significant(row.bound)}, {"integer_bound", row.integer_bound}});
    json minimal = json::array();
    for (std::int64_t deg = 1; deg <= t.max_integer_bound(); ++deg)
        if (auto s = t.minimal_size_for_degree(deg)) minimal.push_back({{"degree", deg}, {"s", *s}});
    return {{"rows", rows}, {"minimal_s", minimal}};
}

inline json to_json(const BoundSearch& search, bool include_rows = false) {
    json entries = json::array();
    for (const auto& e : search.entries) {
        auto table = to_json(e.table);
        json entry = {{"sign", to_string(e.sign)}, {"twist", e.twist}, {"minimal_s", table["minimal_s"]}};
        if (include_rows) {
            entry["rows"] = table["rows"];
            entry["spectrum"] = to_json(e.spectrum);
        }
        entries.push_back(entry);
    }
    json best = json::array();
    for (const auto& b : search.best)
        best.push_back({{"degree", b.degree}, {"s", b.s}, {"sign", to_string(b.sign)}, {"twist", b.twist}});
    return {{"p", search.p.value()}, {"dims", search.dims}, {"n", search.n}, {"entries", entries}, {"best", best}};
}

inline json to_json(const CoverCheck& c) {
    json v = json::array();
    for (const auto& x : c.violations)
        v.push_back({{"kind", to_string(x.kind)}, {"u", x.u}, {"v", x.v}, {"detail", x.detail}});
    json out = {{"ok", c.ok()}, {"violations", v}};
    out["fold"] = c.fold ? json(*c.fold) : json(nullptr);
    return out;
}

inline json vertex_list(const std::vector<VertexId>& vs) {
    json a = json::array();
    for (auto v : vs) a.push_back(v);
    return a;
}

} // namespace pcover
