#pragma once

// Command-line front end. run_cli() is the whole program; main() only
// forwards argv, so tests can drive it in-process.

#include "hwdim/hwdim.hpp"
#include "hwdim/json_io.hpp"
#include "hwdim/suites.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

namespace hwdim::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_check_failed = 1;
inline constexpr int exit_usage = 2;
inline constexpr int exit_table_mismatch = 3;

inline constexpr int default_max_rank = 12;
inline constexpr int default_max_height = 8;
inline constexpr long long default_dim_cap = 1'000'000;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

inline std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
    return out + "\"";
}

inline std::string render_csv(const Table& t)
{
    std::ostringstream out;
    auto line = [&](const std::vector<std::string>& r) {
        for (std::size_t i = 0; i < r.size(); ++i) out << (i ? "," : "") << csv_field(r[i]);
        out << "\n";
    };
    line(t.header);
    for (const auto& r : t.rows) line(r);
    return out.str();
}

// Left-aligned columns; the last column is not padded.
inline std::string render_columns(const Table& t)
{
    std::vector<std::size_t> w(t.header.size(), 0);
    auto measure = [&](const std::vector<std::string>& r) {
        for (std::size_t i = 0; i < r.size() && i < w.size(); ++i) w[i] = std::max(w[i], r[i].size());
    };
    measure(t.header);
    for (const auto& r : t.rows) measure(r);
    std::ostringstream out;
    auto line = [&](const std::vector<std::string>& r) {
        std::string s;
        for (std::size_t i = 0; i < r.size(); ++i) {
            s += r[i];
            if (i + 1 < r.size()) s += std::string(w[i] - r[i].size() + 2, ' ');
        }
        out << s << "\n";
    };
    line(t.header);
    for (const auto& r : t.rows) line(r);
    return out.str();
}

struct Output {
    Json json;
    std::string text;
    Table table;
    int code = exit_ok;
};

struct Config {
    std::string format = "text";
    std::string output;
    bool seedless = false;
    std::string ranks;
    std::optional<int> max_rank;
    std::optional<int> max_height;
    std::string cap;
    bool certificates = false;

    std::string type_spec;
    std::string weight_spec;
    std::string number; // height for minheight, dimension for search
    std::string table_id;
    std::string suite;
};

// ---------------------------------------------------------------------------
// Argument conversion

inline LieType parse_type_arg(const std::string& s)
{
    try {
        return parse_type(s);
    } catch (const std::exception& e) {
        throw UsageError(e.what());
    }
}

inline DominantWeight parse_weight_arg(const std::string& s, int rank)
{
    std::vector<int> c;
    std::stringstream in(s);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (item.empty() || item.size() > 6 || !std::all_of(item.begin(), item.end(), ::isdigit))
            throw UsageError("weight '" + s + "' must be comma-separated non-negative integers");
        c.push_back(std::stoi(item));
    }
    if (static_cast<int>(c.size()) != rank)
        throw UsageError("weight '" + s + "' has " + std::to_string(c.size()) + " coefficients, rank is " +
                         std::to_string(rank));
    return DominantWeight(c);
}

inline BigInt parse_positive(const std::string& s, const std::string& what)
{
    if (s.empty() || s.size() > 30 || !std::all_of(s.begin(), s.end(), ::isdigit))
        throw UsageError(what + " '" + s + "' must be a positive integer");
    BigInt v(s);
    if (v <= 0) throw UsageError(what + " must be positive");
    return v;
}

inline std::pair<int, int> parse_ranks(const std::string& s)
{
    static const std::regex re(R"((\d{1,4})\.\.(\d{1,4}))");
    std::smatch m;
    if (!std::regex_match(s, m, re)) throw UsageError("--ranks '" + s + "' must look like A..B");
    const int lo = std::stoi(m[1]), hi = std::stoi(m[2]);
    if (lo < 1 || hi < lo) throw UsageError("--ranks needs 1 <= A <= B");
    return {lo, hi};
}

inline int max_rank(const Config& c) { return c.max_rank.value_or(default_max_rank); }

inline void check_rank_cap(const Config& c, LieType t)
{
    if (t.rank > max_rank(c))
        throw UsageError("rank " + std::to_string(t.rank) + " exceeds the rank cap " + std::to_string(max_rank(c)) +
                         " (raise it with --max-rank)");
}

inline Table module_table(const std::vector<ClassifiedModule>& ms)
{
    Table t{{"type", "weight", "coefficients", "dim", "long_bound", "short_bound", "coroot_bound", "duality", "tag"}, {}};
    for (const auto& m : ms)
        t.rows.push_back({to_string(m.type), to_string(m.weight), coeff_string(m.weight), to_string(m.dim),
                          std::to_string(m.bound.long_bound),
                          m.bound.short_bound ? std::to_string(*m.bound.short_bound) : "", std::to_string(m.bound.coroot_bound),
                          to_string(m.duality), m.tag});
    return t;
}

// ---------------------------------------------------------------------------
// Subcommands

inline Output cmd_dim(const Config& c)
{
    const LieType t = parse_type_arg(c.type_spec);
    const auto rs = build(t);
    const auto w = parse_weight_arg(c.weight_spec, t.rank);
    const auto m = make_module(rs, w);
    Output o;
    o.json = to_json(m);
    o.table = module_table({m});
    std::ostringstream s;
    s << "type " << to_string(t) << "\n"
      << "weight " << to_string(w) << " (" << coeff_string(w) << ")\n"
      << "dim " << to_string(m.dim) << "\n"
      << "bound long " << m.bound.long_bound;
    if (m.bound.short_bound) s << " short " << *m.bound.short_bound;
    s << " coroot " << m.bound.coroot_bound << "\n"
      << "duality " << to_string(m.duality) << "\n";
    o.text = s.str();
    return o;
}

inline Output cmd_minheight(const Config& c)
{
    const LieType t = parse_type_arg(c.type_spec);
    check_rank_cap(c, t);
    const BigInt hb = parse_positive(c.number, "height");
    if (hb > c.max_height.value_or(default_max_height))
        throw UsageError("height exceeds the height cap " + std::to_string(c.max_height.value_or(default_max_height)));
    const int h = static_cast<int>(hb);
    const auto rs = build(t);
    const auto hm = min_dim_at_height(rs, h);
    const auto mf = min_fundamental(rs);
    Output o;
    o.json = to_json(hm);
    o.json["s"] = mf.s;
    std::ostringstream s;
    s << "type " << to_string(t) << "\n"
      << "height " << h << "\n"
      << "s " << mf.s << "\n"
      << "min_dim " << to_string(hm.min_dim) << "\n"
      << "minimizers " << detail::weights_string(hm.minimizing_weights) << "\n";
    try {
        const auto rep = verify_theorem1(rs, h);
        o.json["brute_force"] = Json{{"status", rep.pass ? "PASS" : "FAIL"}, {"enumerated", to_string(rep.enumerated)}};
        s << "brute_force " << (rep.pass ? "PASS" : "FAIL") << " over " << to_string(rep.enumerated) << " weights\n";
        if (!rep.pass) o.code = exit_check_failed;
    } catch (const CapExceeded& e) {
        o.json["brute_force"] = Json{{"status", "SKIP"}, {"reason", e.what()}};
        s << "brute_force SKIP " << e.what() << "\n";
    }
    o.table = {{"type", "height", "s", "min_dim", "minimizer"}, {}};
    for (const auto& w : hm.minimizing_weights)
        o.table.rows.push_back({to_string(t), std::to_string(h), std::to_string(mf.s), to_string(hm.min_dim), to_string(w)});
    if (c.certificates) {
        Json certs = Json::array();
        o.table = {{"type", "j", "source", "target", "kind"}, {}};
        for (int j = 1; j <= t.rank; ++j) {
            const auto cert = find_injection(rs, j);
            certs.push_back(to_json(rs, cert));
            s << certificate_text(rs, cert);
            for (const auto& p : cert.mapping)
                o.table.rows.push_back({to_string(t), std::to_string(j), root_label(rs, p.source), root_label(rs, p.target), "pair"});
            if (cert.fallback)
                o.table.rows.push_back({to_string(t), std::to_string(j), root_label(rs, cert.fallback->source),
                                        root_label(rs, cert.fallback->target1) + "+" + root_label(rs, cert.fallback->target2),
                                        "fallback"});
        }
        o.json["certificates"] = certs;
    }
    o.text = s.str();
    return o;
}

inline Output cmd_classify(const Config& c)
{
    const LieType t = parse_type_arg(c.type_spec);
    check_rank_cap(c, t);
    const auto rs = build(t);
    const auto res = classify_bounded(rs, std::nullopt, c.max_height.value_or(default_window_height));
    Output o;
    o.json = to_json(res);
    o.table = module_table(res.modules);
    std::ostringstream s;
    s << "type " << to_string(t) << "\n"
      << "bound " << to_string(res.bound) << "\n";
    if (res.cutoff)
        s << "cutoff t*=" << res.cutoff->t_star << " t_mono=" << to_string(res.cutoff->t_mono) << " f_s(t*)="
          << to_string(res.cutoff->min_dim_at_t_star) << " bound(t*)=" << to_string(res.cutoff->max_bound_at_t_star) << "\n";
    for (const auto& f : res.families)
        s << "family " << f.name << ": " << f.weight_pattern << " (" << f.constraint << "), dim " << f.dim_formula << "\n";
    if (res.finite_window) {
        s << "window height <= " << *res.window_height << "\n";
        if (!res.families.empty() && t.rank == 2) s << "residue " << detail::weights_string(res.residue) << "\n";
    }
    s << "solutions " << res.modules.size() << "\n" << render_columns(module_table(res.modules));
    o.text = s.str();
    return o;
}

inline Output cmd_pq(const Config& c)
{
    const LieType t = parse_type_arg(c.type_spec);
    check_rank_cap(c, t);
    const BigInt cap = c.cap.empty() ? BigInt(default_dim_cap) : parse_positive(c.cap, "--cap");
    const int hmax = c.max_height.value_or(default_max_height);
    const auto rs = build(t);
    const auto cat = pq_catalogue(rs, cap, hmax);
    Output o;
    o.json["type"] = to_string(t);
    o.json["dim_cap"] = to_string(cap);
    o.json["height_cap"] = hmax;
    o.json["heights_scanned"] = cat.heights_scanned;
    Json mods = Json::array();
    for (const auto& m : cat.modules) mods.push_back(to_json(m));
    o.json["modules"] = mods;
    o.table = {{"type", "weight", "coefficients", "dim", "p", "q", "duality", "clauses", "rows"}, {}};
    for (const auto& m : cat.modules) {
        std::vector<std::string> rows;
        for (const auto& r : m.table6) rows.push_back(r.row);
        o.table.rows.push_back({to_string(t), to_string(m.module.weight), coeff_string(m.module.weight),
                                to_string(m.module.dim), to_string(m.p), to_string(m.q), to_string(m.module.duality),
                                detail::join(m.clauses, ";"), detail::join(rows, ";")});
    }
    std::ostringstream s;
    s << "type " << to_string(t) << "\n"
      << "dim cap " << to_string(cap) << ", heights 0.." << cat.heights_scanned - 1 << "\n"
      << "hits " << cat.modules.size() << "\n"
      << render_columns(o.table);
    o.text = s.str();
    return o;
}

inline Output cmd_duality(const Config& c)
{
    const LieType t = parse_type_arg(c.type_spec);
    const auto rs = build(t);
    const auto w = parse_weight_arg(c.weight_spec, t.rank);
    const Duality d = duality_indicator(rs, w);
    const auto symp = derived_symplectic_fundamentals(rs);
    const auto dual_perm = minus_w0(rs);
    const auto dual = permute_weight(dual_perm, w);
    Output o;
    o.json["type"] = to_string(t);
    o.json["coefficients"] = to_json(w);
    o.json["weight"] = to_string(w);
    o.json["dual_weight"] = to_string(dual);
    o.json["self_dual"] = is_self_dual(rs, w);
    o.json["duality"] = to_string(d);
    o.json["symplectic_fundamentals"] = Json(std::vector<int>(symp.begin(), symp.end()));
    o.json["closed_form"] = to_string(table2_indicator(t, w, E6Labeling::bourbaki));
    o.table = {{"type", "weight", "dual_weight", "self_dual", "duality", "closed_form"},
               {{to_string(t), to_string(w), to_string(dual), is_self_dual(rs, w) ? "yes" : "no", to_string(d),
                 to_string(table2_indicator(t, w, E6Labeling::bourbaki))}}};
    std::vector<std::string> nodes;
    for (int i : symp) nodes.push_back("L" + std::to_string(i));
    std::ostringstream s;
    s << "type " << to_string(t) << "\n"
      << "weight " << to_string(w) << "\n"
      << "dual " << to_string(dual) << "\n"
      << "duality " << to_string(d) << "\n"
      << "symplectic fundamentals {" << detail::join(nodes) << "}\n"
      << "closed form " << to_string(table2_indicator(t, w, E6Labeling::bourbaki)) << "\n";
    o.text = s.str();
    return o;
}

inline Output cmd_search(const Config& c)
{
    const LieType t = parse_type_arg(c.type_spec);
    check_rank_cap(c, t);
    const BigInt d = parse_positive(c.number, "dimension");
    const int hmax = c.max_height.value_or(default_max_height);
    const auto rs = build(t);
    const BigInt size = simplex_size(rs.rank() + 1, hmax); // weights of height <= hmax
    if (size > default_enumeration_cap)
        throw UsageError("search needs " + to_string(size) + " weights, enumeration cap is " +
                         std::to_string(default_enumeration_cap) + "; lower --max-height");
    const auto ws = search_dimension(rs, d, hmax);
    Output o;
    o.json["type"] = to_string(t);
    o.json["dim"] = to_string(d);
    o.json["height_cap"] = hmax;
    std::vector<ClassifiedModule> ms;
    for (const auto& w : ws) ms.push_back(make_module(rs, w));
    Json mods = Json::array();
    for (const auto& m : ms) mods.push_back(to_json(m));
    o.json["modules"] = mods;
    o.table = module_table(ms);
    o.text = "type " + to_string(t) + "\ndim " + to_string(d) + ", heights 0.." + std::to_string(hmax) + "\nfound " +
             std::to_string(ms.size()) + "\n" + render_columns(o.table);
    return o;
}

// ---------------------------------------------------------------------------
// tables: regenerate and compare with the bundled transcriptions.

inline Output table1(const Config& c)
{
    const auto [lo, hi] = c.ranks.empty() ? std::pair{3, default_max_rank} : parse_ranks(c.ranks);
    Output o;
    o.table = {{"type", "weight", "coefficients", "dim", "printed"}, {}};
    Json rows = Json::array(), bad = Json::array();
    std::ostringstream s;
    for (LieType t : types_in_rank_range(std::max(lo, 3), hi)) {
        if (t.family == Family::G) continue;
        const auto rs = build(t);
        const auto res = classify_bounded(rs);
        std::set<DominantWeight> reps;
        for (const auto& m : res.modules)
            if (height(m.weight) > 0) reps.insert(orbit_representative(rs, m.weight));
        std::map<DominantWeight, std::string> printed;
        for (const auto& r : table1_rows_for(t)) printed[orbit_representative(rs, r.weight(t.rank))] = r.dim_label;
        s << "# " << to_string(t) << "\n";
        for (const auto& w : reps) {
            const std::string dim = to_string(weyl_dim(rs, w));
            const std::string label = printed.count(w) ? printed[w] : "-";
            o.table.rows.push_back({to_string(t), to_string(w), coeff_string(w), dim, label});
            rows.push_back(Json{{"type", to_string(t)}, {"weight", to_string(w)}, {"coefficients", to_json(w)}, {"dim", dim},
                                {"printed", label}});
            s << to_string(w) << " " << dim << (label == "-" ? "" : "  [" + label + "]") << "\n";
        }
        std::vector<DominantWeight> ws;
        for (const auto& m : res.modules) ws.push_back(m.weight);
        const auto diff = compare_table1(rs, ws);
        for (const auto& m : diff.missing) bad.push_back(Json{{"type", to_string(t)}, {"kind", "missing"}, {"detail", m}});
        for (const auto& m : diff.extra) bad.push_back(Json{{"type", to_string(t)}, {"kind", "extra"}, {"detail", m}});
        for (const auto& m : diff.dim_mismatch) bad.push_back(Json{{"type", to_string(t)}, {"kind", "dim"}, {"detail", m}});
    }
    for (const auto& b : bad)
        s << "mismatch " << b["type"].get<std::string>() << " " << b["kind"].get<std::string>() << ": "
          << b["detail"].get<std::string>() << "\n";
    o.json = Json{{"table", 1}, {"ranks", {lo, hi}}, {"rows", rows}, {"mismatches", bad}};
    o.text = s.str();
    o.code = bad.empty() ? exit_ok : exit_table_mismatch;
    return o;
}

inline Output table3(const Config& c)
{
    const auto [lo, hi] = c.ranks.empty() ? std::pair{1, default_max_rank} : parse_ranks(c.ranks);
    Output o;
    o.table = {{"type", "symplectic_fundamentals", "printed", "match"}, {}};
    Json rows = Json::array();
    bool ok = true;
    auto show = [](const std::set<int>& xs) {
        std::vector<std::string> v;
        for (int i : xs) v.push_back("L" + std::to_string(i));
        return "{" + detail::join(v) + "}";
    };
    for (LieType t : types_in_rank_range(lo, hi)) {
        const auto got = derived_symplectic_fundamentals(build(t));
        const auto want = symplectic_fundamentals(t);
        ok = ok && got == want;
        o.table.rows.push_back({to_string(t), show(got), show(want), got == want ? "yes" : "no"});
        rows.push_back(Json{{"type", to_string(t)},
                            {"symplectic_fundamentals", std::vector<int>(got.begin(), got.end())},
                            {"printed", std::vector<int>(want.begin(), want.end())},
                            {"match", got == want}});
    }
    o.json = Json{{"table", 3}, {"ranks", {lo, hi}}, {"rows", rows}};
    o.text = render_columns(o.table);
    o.code = ok ? exit_ok : exit_table_mismatch;
    return o;
}

inline Output table4(const Config&)
{
    Output o;
    o.table = {{"type", "s", "degree", "printed_degree", "identity", "formula"}, {}};
    Json rows = Json::array();
    bool ok = true;
    for (const auto& row : table4_rows()) {
        const auto rs = build(row.type);
        const int s = min_fundamental(rs).s;
        const int deg = f_poly(rs, s).degree();
        const bool id = table4_identity_holds(rs, row.f, 20);
        ok = ok && id && deg == row.printed_degree;
        o.table.rows.push_back({to_string(row.type), std::to_string(s), std::to_string(deg),
                                std::to_string(row.printed_degree), id ? "yes" : "no", row.formula});
        rows.push_back(Json{{"type", to_string(row.type)}, {"s", s}, {"degree", deg}, {"printed_degree", row.printed_degree},
                            {"identity", id}, {"formula", row.formula}});
    }
    o.json = Json{{"table", 4}, {"rows", rows}};
    o.text = render_columns(o.table);
    o.code = ok ? exit_ok : exit_table_mismatch;
    return o;
}

inline char duality_mark(Duality d)
{
    switch (d) {
    case Duality::orthogonal: return '+';
    case Duality::symplectic: return '-';
    default: return 'o';
    }
}

inline constexpr long long default_table6_cap = 1000;

inline Output table6(const Config& c)
{
    const auto [lo, hi] = c.ranks.empty() ? std::pair{1, default_max_rank} : parse_ranks(c.ranks);
    const BigInt cap = c.cap.empty() ? BigInt(default_table6_cap) : parse_positive(c.cap, "--cap");
    Output o;
    o.table = {{"pq", "row", "parameter", "type", "weight", "dim", "mark", "duality", "status"}, {}};
    Json rows = Json::array();
    bool ok = true;
    for (const auto& row : table6_rows()) {
        for (long long p = row.sporadic ? 0 : 1;; ++p) {
            if (row.value(p) > cap) break;
            const auto inst = row.instance(p);
            if (!row.sporadic && inst && inst->type.rank > hi) break; // ranks grow with the parameter
            if (inst && inst->type.rank >= lo && inst->type.rank <= hi && row.primes_ok(p)) {
                const auto rs = build(inst->type);
                const BigInt d = weyl_dim(rs, inst->weight);
                const Duality du = duality_indicator(rs, inst->weight);
                std::string status = "ok";
                if (d != row.value(p)) status = "dim mismatch";
                else if (row.duality != 'o' && row.duality != duality_mark(du)) status = "duality mismatch";
                ok = ok && status == "ok";
                const std::string param = row.sporadic ? "" : std::to_string(p);
                o.table.rows.push_back({to_string(row.value(p)), row.label(), param, to_string(inst->type),
                                        to_string(inst->weight), to_string(d), std::string(1, row.duality),
                                        to_string(du), status});
                rows.push_back(Json{{"pq", to_string(row.value(p))}, {"row", row.label()}, {"parameter", param},
                                    {"type", to_string(inst->type)}, {"weight", to_string(inst->weight)},
                                    {"dim", to_string(d)}, {"mark", std::string(1, row.duality)},
                                    {"duality", to_string(du)}, {"status", status}});
            }
            if (row.sporadic) break;
        }
    }
    o.json = Json{{"table", 6}, {"ranks", {lo, hi}}, {"dim_cap", to_string(cap)}, {"rows", rows}};
    o.text = render_columns(o.table);
    o.code = ok ? exit_ok : exit_table_mismatch;
    return o;
}

inline Output cmd_tables(const Config& c)
{
    if (c.table_id == "1") return table1(c);
    if (c.table_id == "3") return table3(c);
    if (c.table_id == "4") return table4(c);
    if (c.table_id == "6") return table6(c);
    throw UsageError("unknown table '" + c.table_id + "'; choose 1, 3, 4 or 6");
}

// ---------------------------------------------------------------------------
// verify

inline Output cmd_verify(const Config& c)
{
    SuiteOptions opt;
    if (!c.ranks.empty()) {
        const auto [lo, hi] = parse_ranks(c.ranks);
        opt.min_rank = lo;
        opt.max_rank = hi;
    }
    if (c.max_rank) opt.max_rank = *c.max_rank;
    opt.max_height = c.max_height;
    if (!c.cap.empty()) opt.dim_cap = parse_positive(c.cap, "--cap");
    const auto rep = run_suite(c.suite, opt);
    Output o;
    o.table = {{"status", "check", "detail"}, {}};
    Json checks = Json::array();
    std::ostringstream s;
    for (const auto& ch : rep.checks) {
        o.table.rows.push_back({to_string(ch.status), ch.name, ch.detail});
        checks.push_back(Json{{"status", to_string(ch.status)}, {"check", ch.name}, {"detail", ch.detail}});
        s << to_string(ch.status) << " " << ch.name << (ch.detail.empty() ? "" : ": " + ch.detail) << "\n";
    }
    const Json summary{{"pass", rep.count(Status::pass)}, {"fail", rep.count(Status::fail)}, {"skip", rep.count(Status::skip)}};
    s << rep.suite << ": " << rep.count(Status::pass) << " passed, " << rep.count(Status::fail) << " failed, "
      << rep.count(Status::skip) << " skipped\n";
    o.json = Json{{"suite", rep.suite}, {"checks", checks}, {"summary", summary}};
    o.text = s.str();
    o.code = rep.ok() ? exit_ok : exit_check_failed;
    return o;
}

// ---------------------------------------------------------------------------

inline std::string render(const Output& o, const std::string& format)
{
    if (format == "json") return o.json.dump(2) + "\n";
    if (format == "csv") return render_csv(o.table);
    return o.text;
}

inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    Config c;
    CLI::App app{"Dimensions of irreducible highest weight modules of simple Lie algebras", "hwdim"};
    app.require_subcommand(1);
    app.fallthrough();
    app.footer("Defaults: rank <= " + std::to_string(default_max_rank) + ", height <= " + std::to_string(default_max_height) +
               ", dim cap " + std::to_string(default_dim_cap) + ", enumeration cap " +
               std::to_string(default_enumeration_cap) + " (tables 6: dim cap " + std::to_string(default_table6_cap) + ").\nExit codes: 0 ok, 1 check failed, 2 usage error, 3 table mismatch.");
    app.add_option("--format", c.format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
    app.add_option("--output", c.output, "Write output to PATH instead of stdout");
    app.add_option("--ranks", c.ranks, "Rank range A..B");
    app.add_option("--max-rank", c.max_rank, "Rank cap")->check(CLI::PositiveNumber);
    app.add_option("--max-height", c.max_height, "Height cap")->check(CLI::PositiveNumber);
    app.add_option("--cap", c.cap, "Dimension cap");
    app.add_flag("--seedless", c.seedless, "Reserved; rejected (no randomness is used anywhere)");

    auto* dim = app.add_subcommand("dim", "Dimension, bounds and duality of V(lambda)");
    dim->add_option("type", c.type_spec, "Lie type, e.g. C3")->required();
    dim->add_option("weight", c.weight_spec, "Coefficients a_1,...,a_n")->required();

    auto* mh = app.add_subcommand("minheight", "Least dimension among weights of height t");
    mh->add_option("type", c.type_spec, "Lie type")->required();
    mh->add_option("t", c.number, "Height")->required();
    mh->add_flag("--certificates", c.certificates, "Also print injection certificates for every node");

    auto* cl = app.add_subcommand("classify", "All lambda with dim V(lambda) <= bound^2");
    cl->add_option("type", c.type_spec, "Lie type")->required();

    auto* pq = app.add_subcommand("pq", "Weights whose dimension is a product of two primes");
    pq->add_option("type", c.type_spec, "Lie type")->required();

    auto* du = app.add_subcommand("duality", "Self-duality and the invariant form of V(lambda)");
    du->add_option("type", c.type_spec, "Lie type")->required();
    du->add_option("weight", c.weight_spec, "Coefficients a_1,...,a_n")->required();

    auto* tb = app.add_subcommand("tables", "Regenerate a reference table and compare with the bundled copy");
    tb->add_option("id", c.table_id, "Table id: 1, 3, 4 or 6")->required();

    auto* vf = app.add_subcommand("verify", "Run a verification suite");
    vf->add_option("suite", c.suite, "theorem1, lemma2, lemma33, bounds, pq or duality")
        ->required()
        ->check(CLI::IsMember(suite_names()));

    auto* se = app.add_subcommand("search", "Weights of a given dimension");
    se->add_option("type", c.type_spec, "Lie type")->required();
    se->add_option("dim", c.number, "Dimension")->required();

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    }
    if (c.seedless) {
        err << "error: --seedless is reserved; every computation is already deterministic\n";
        return exit_usage;
    }

    Output o;
    try {
        if (dim->parsed()) o = cmd_dim(c);
        else if (mh->parsed()) o = cmd_minheight(c);
        else if (cl->parsed()) o = cmd_classify(c);
        else if (pq->parsed()) o = cmd_pq(c);
        else if (du->parsed()) o = cmd_duality(c);
        else if (tb->parsed()) o = cmd_tables(c);
        else if (vf->parsed()) o = cmd_verify(c);
        else if (se->parsed()) o = cmd_search(c);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    }

    const std::string text = render(o, c.format);
    if (c.output.empty()) {
        out << text;
    } else {
        std::ofstream f(c.output, std::ios::binary);
        if (!f) {
            err << "error: cannot write " << c.output << "\n";
            return exit_usage;
        }
        f << text;
    }
    return o.code;
}

} // namespace hwdim::cli
