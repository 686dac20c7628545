#pragma once

// JSON forms of results. Dimensions are decimal strings; keys keep
// insertion order so output is byte-stable.

#include "hwdim/classify.hpp"
#include "hwdim/heightmin.hpp"

#include <json.hpp>

#include <sstream>
#include <string>

namespace hwdim {

using Json = nlohmann::ordered_json;

inline Json to_json(const DominantWeight& w) { return Json(w.coeffs()); }

inline Json to_json(const BoundValue& b)
{
    Json j;
    j["long"] = b.long_bound;
    if (b.short_bound) j["short"] = *b.short_bound;
    j["coroot"] = b.coroot_bound;
    return j;
}

inline Json to_json(const ClassifiedModule& m)
{
    Json j;
    j["type"] = to_string(m.type);
    j["rank"] = m.type.rank;
    j["coefficients"] = to_json(m.weight);
    j["weight"] = to_string(m.weight);
    j["dim"] = to_string(m.dim);
    j["bound"] = to_json(m.bound);
    j["duality"] = to_string(m.duality);
    Json orbit = Json::array();
    for (const auto& w : m.orbit) orbit.push_back(to_json(w));
    j["orbit"] = orbit;
    j["tag"] = m.tag;
    return j;
}

inline Json to_json(const FamilyDescriptor& f)
{
    Json j;
    j["name"] = f.name;
    j["constraint"] = f.constraint;
    j["weight"] = f.weight_pattern;
    j["dim"] = f.dim_formula;
    return j;
}

inline Json to_json(const CutoffRecord& c)
{
    Json j;
    j["bound"] = to_string(c.bound);
    j["c0"] = c.c0;
    j["cmax"] = c.cmax;
    j["t_mono"] = to_string(c.t_mono);
    j["t_star"] = c.t_star;
    j["min_dim_at_t_star"] = to_string(c.min_dim_at_t_star);
    j["max_bound_at_t_star"] = to_string(c.max_bound_at_t_star);
    return j;
}

inline Json to_json(const ClassificationResult& r)
{
    Json j;
    j["type"] = to_string(r.type);
    j["bound"] = to_string(r.bound);
    j["count"] = r.modules.size();
    j["finite_window"] = r.finite_window;
    if (r.window_height) j["window_height"] = *r.window_height;
    if (r.cutoff) j["cutoff"] = to_json(*r.cutoff);
    if (!r.families.empty()) {
        Json fams = Json::array();
        for (const auto& f : r.families) fams.push_back(to_json(f));
        j["families"] = fams;
        Json res = Json::array();
        for (const auto& w : r.residue) res.push_back(to_json(w));
        j["residue"] = res;
    }
    Json mods = Json::array();
    for (const auto& m : r.modules) mods.push_back(to_json(m));
    j["modules"] = mods;
    return j;
}

inline Json to_json(const PqModule& m)
{
    Json j = to_json(m.module);
    j["p"] = to_string(m.p);
    j["q"] = to_string(m.q);
    j["clauses"] = m.clauses;
    Json rows = Json::array();
    for (const auto& r : m.table6) rows.push_back(Json{{"row", r.row}, {"parameter", r.parameter}});
    j["table6"] = rows;
    return j;
}

inline Json to_json(const HeightMinimum& h)
{
    Json j;
    j["type"] = to_string(h.type);
    j["t"] = h.t;
    j["min_dim"] = to_string(h.min_dim);
    Json ws = Json::array();
    for (const auto& w : h.minimizing_weights) ws.push_back(to_json(w));
    j["minimizers"] = ws;
    return j;
}

// Roots are written as their simple-root coefficient vectors.
inline Json root_json(const RootSystem& rs, std::size_t k) { return Json(rs.root_coefficients()[k]); }

inline std::size_t root_from_json(const RootSystem& rs, const Json& j)
{
    const auto c = j.get<std::vector<int>>();
    for (std::size_t k = 0; k < rs.num_positive_roots(); ++k)
        if (rs.root_coefficients()[k] == c) return k;
    throw std::invalid_argument("not a positive root of " + to_string(rs.type()) + ": " + j.dump());
}

inline Json to_json(const RootSystem& rs, const InjectionCertificate& c)
{
    Json j;
    j["type"] = to_string(c.type);
    j["s"] = c.s;
    j["j"] = c.j;
    Json map = Json::array();
    for (const auto& p : c.mapping) map.push_back(Json{{"source", root_json(rs, p.source)}, {"target", root_json(rs, p.target)}});
    j["mapping"] = map;
    if (c.fallback) {
        j["fallback"] = Json{{"source", root_json(rs, c.fallback->source)},
                             {"target1", root_json(rs, c.fallback->target1)},
                             {"target2", root_json(rs, c.fallback->target2)}};
    } else {
        j["fallback"] = nullptr;
    }
    return j;
}

inline InjectionCertificate certificate_from_json(const RootSystem& rs, const Json& j)
{
    InjectionCertificate c;
    c.type = parse_type(j.at("type").get<std::string>());
    if (c.type != rs.type()) throw std::invalid_argument("certificate type does not match root system");
    c.s = j.at("s").get<int>();
    c.j = j.at("j").get<int>();
    for (const auto& p : j.at("mapping"))
        c.mapping.push_back({root_from_json(rs, p.at("source")), root_from_json(rs, p.at("target"))});
    if (j.contains("fallback") && !j.at("fallback").is_null()) {
        const auto& f = j.at("fallback");
        c.fallback = FallbackRecord{root_from_json(rs, f.at("source")), root_from_json(rs, f.at("target1")),
                                    root_from_json(rs, f.at("target2"))};
    }
    return c;
}

// One line per pair, "source -> target", then "fallback source -> target1 + target2".
inline std::string certificate_text(const RootSystem& rs, const InjectionCertificate& c)
{
    std::ostringstream out;
    out << "certificate " << to_string(c.type) << " s=" << c.s << " j=" << c.j << "\n";
    for (const auto& p : c.mapping) out << root_label(rs, p.source) << " -> " << root_label(rs, p.target) << "\n";
    if (c.fallback)
        out << "fallback " << root_label(rs, c.fallback->source) << " -> " << root_label(rs, c.fallback->target1)
            << " + " << root_label(rs, c.fallback->target2) << "\n";
    return out.str();
}

} // namespace hwdim
