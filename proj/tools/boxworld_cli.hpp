#ifndef BOXWORLD_TOOLS_CLI_HPP
#define BOXWORLD_TOOLS_CLI_HPP

// Command-line front end. Exit codes: 0 success or PASS (including the
// expected hybrid exception), 1 verification FAIL or invalid checked input,
// 2 usage or input error.

#include "boxworld/boxworld.hpp"
#include "boxworld/oracle.hpp"

#include <CLI11.hpp>

#include <cstddef>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace boxworld::cli {

enum class Command { spec, vertices, group, verify, chsh, check };

struct RunConfig {
    Command command = Command::spec;
    std::string system_path;
    std::string input_path;
    std::string format = "json";
    /// group: "generate" or "search"; verify theorem2: group to test.
    std::string group_mode = "generate";
    /// verify: "theorem1" or "theorem2".
    std::string theorem;
    std::size_t bound_dim = 16;
    std::size_t bound_effects = 64;
    bool oracle = false;
    bool quiet = false;
};

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

class UsageError : public Error {
public:
    using Error::Error;
};

struct ParseOutcome {
    std::optional<RunConfig> config;
    int exit_code = kExitOk;
};

inline ParseOutcome parse_args(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    CLI::App app{"Exact boxworld state spaces and reversible dynamics", "boxworld"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("-s,--system", cfg.system_path, "System spec JSON file");
    app.add_option("-i,--input", cfg.input_path, "Input state, table or map JSON file");
    app.add_option("-o,--output-format", cfg.format, "Output format")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    app.add_option("--bound-dim", cfg.bound_dim, "Largest affine dimension for vertex enumeration")
        ->check(CLI::PositiveNumber);
    app.add_option("--bound-effects", cfg.bound_effects, "Largest extremal-effect count for the group search")
        ->check(CLI::PositiveNumber);
    app.add_flag("--oracle", cfg.oracle, "Cross-check with brute-force oracles where defined");
    app.add_flag("-q,--quiet", cfg.quiet, "Suppress diagnostics on stderr");

    auto* spec = app.add_subcommand("spec", "Dimensions, effect counts and Gram tables");
    auto* vertices = app.add_subcommand("vertices", "Vertices of the state polytope");
    auto* group = app.add_subcommand("group", "Reversible group, generated or searched");
    auto* gen_flag = group->add_flag("--generate", "Close the trivial generators (default)");
    auto* search_flag = group->add_flag("--search", "Exhaustive search over extremal-effect bijections");
    gen_flag->excludes(search_flag);
    auto* verify = app.add_subcommand("verify", "Verify theorem1 or theorem2");
    verify->add_option("theorem", cfg.theorem, "theorem1 | theorem2")
        ->required()
        ->check(CLI::IsMember({"theorem1", "theorem2"}));
    std::string verify_group = "search";
    verify->add_option("--group", verify_group, "Group for theorem2")->check(CLI::IsMember({"generate", "search"}));
    auto* chsh = app.add_subcommand("chsh", "CHSH value of a two-gbit state");
    auto* check = app.add_subcommand("check", "Validate a table, state or map with witnesses");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return {std::nullopt, kExitOk};
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return {std::nullopt, kExitUsage};
    }
    if (*spec) cfg.command = Command::spec;
    if (*vertices) cfg.command = Command::vertices;
    if (*group) {
        cfg.command = Command::group;
        cfg.group_mode = search_flag->count() ? "search" : "generate";
    }
    if (*verify) {
        cfg.command = Command::verify;
        cfg.group_mode = verify_group;
    }
    if (*chsh) cfg.command = Command::chsh;
    if (*check) cfg.command = Command::check;
    return {cfg, kExitOk};
}

/// A rendered report in all three formats plus its exit code.
struct Report {
    Json json;
    std::string text;
    std::string csv;
    int exit_code = kExitOk;
};

namespace detail {

inline Json rational_list(const RVector& v) {
    Json out = Json::array();
    for (const auto& x : v) out.push_back(to_string(x));
    return out;
}

inline Json matrix_rows(const RMatrix& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(rational_list(m.row(i)));
    return rows;
}

inline std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
    return out;
}

inline SystemSpec load_system(const RunConfig& cfg) {
    if (cfg.system_path.empty()) throw UsageError("this command needs -s/--system");
    return system_from_json(read_json_file(cfg.system_path));
}

inline Json load_input(const RunConfig& cfg) {
    if (cfg.input_path.empty()) throw UsageError("this command needs -i/--input");
    return read_json_file(cfg.input_path);
}

inline Json action_json(const EffectCatalog& cat, const std::vector<std::size_t>& perm) {
    Json a = Json::array();
    for (auto p : perm) a.push_back(to_string(cat.label(p)));
    return a;
}

inline Json factorization_json(const std::optional<LabelFactorization>& f) {
    if (!f || !f->local_relabellings) return Json{{"factorizable", false}};
    return Json{{"factorizable", true},
                {"site_perm", f->site_perm},
                {"measurement_perm", f->measurement_perm},
                {"outcome_perm", f->outcome_perm}};
}

inline Report spec_report(const SystemSpec& sys) {
    EffectCatalog cat(sys);
    Report r;
    Json sites = Json::array();
    std::ostringstream text, csv;
    text << "system " << sys.describe() << "\n";
    text << "  dimension D = " << sys.dim() << ", extremal effects = " << cat.size() << "\n";
    csv << "site,effect_a,effect_b,gram\n";
    for (std::size_t i = 0; i < sys.size(); ++i) {
        const SiteSpec& s = sys.site(i);
        auto labels = local_labels(s);
        Json names = Json::array();
        for (const auto& l : labels) names.push_back(to_string(l));
        RMatrix g = gram_local_table(s);
        sites.push_back(Json{{"outcomes", s.outcome_counts()},
                             {"measurements", s.measurements()},
                             {"dim", s.dim()},
                             {"extremal_effects", s.effect_count()},
                             {"effects", names},
                             {"gram", matrix_rows(g)}});
        text << "  site " << i << ": M = " << s.measurements() << ", D_i = " << s.dim() << "\n";
        for (std::size_t a = 0; a < labels.size(); ++a) {
            std::vector<std::string> row;
            for (std::size_t b = 0; b < labels.size(); ++b) {
                row.push_back(to_string(g(a, b)));
                csv << i << "," << to_string(labels[a]) << "," << to_string(labels[b]) << "," << to_string(g(a, b))
                    << "\n";
            }
            text << "    " << to_string(labels[a]) << ": " << join(row, " ") << "\n";
        }
    }
    text << "  trivial group order = " << trivial_group_order(sys) << "\n";
    r.json = Json{{"command", "spec"},
                  {"system", to_json(sys)},
                  {"dim", sys.dim()},
                  {"extremal_effects", cat.size()},
                  {"gram_invariant", sys.gram_invariant()},
                  {"trivial_group_order", trivial_group_order(sys).str()},
                  {"sites", sites}};
    r.text = text.str();
    r.csv = csv.str();
    return r;
}

inline Report vertices_report(const RunConfig& cfg, const SystemSpec& sys) {
    EffectCatalog cat(sys);
    auto vrep = enumerate_vertices(cat, {cfg.bound_dim});
    Report r;
    Json verts = Json::array();
    std::ostringstream text, csv;
    csv << "index,class";
    for (std::size_t j = 0; j < sys.dim(); ++j) csv << ",v" << j;
    csv << "\n";
    for (std::size_t i = 0; i < vrep.vertices.size(); ++i) {
        verts.push_back(Json{{"index", i},
                             {"class", to_string(vrep.classes[i])},
                             {"values", rational_list(vrep.vertices[i].values)}});
        csv << i << "," << to_string(vrep.classes[i]);
        for (const auto& x : vrep.vertices[i].values) csv << "," << to_string(x);
        csv << "\n";
        std::vector<std::string> vals;
        for (const auto& x : vrep.vertices[i].values) vals.push_back(to_string(x));
        text << "  " << i << " [" << to_string(vrep.classes[i]) << "] (" << join(vals, ", ") << ")\n";
    }
    const auto pure = vrep.count(VertexClass::pure_product);
    const auto other = vrep.count(VertexClass::non_local);
    r.json = Json{{"command", "vertices"},
                  {"system", to_json(sys)},
                  {"basis", kBasisName},
                  {"count", vrep.vertices.size()},
                  {"pure_product", pure},
                  {"non_local", other},
                  {"vertices", verts}};
    r.text = "system " + sys.describe() + ": " + std::to_string(vrep.vertices.size()) + " vertices (" +
             std::to_string(pure) + " pure-product, " + std::to_string(other) + " non-local)\n" + text.str();
    r.csv = csv.str();
    if (cfg.oracle) {
        if (sys.dim() - 1 > 8) {
            r.json["oracle"] = Json{{"vertices_agree", nullptr}, {"note", "brute force limited to D-1 <= 8"}};
        } else {
            auto brute = oracle::brute_force_vertices(cat);
            bool agree = brute == vrep.vertices;
            r.json["oracle"] = Json{{"vertices_agree", agree}};
            r.text += std::string("oracle: brute-force vertices ") + (agree ? "agree" : "DISAGREE") + "\n";
            if (!agree) r.exit_code = kExitFail;
        }
    }
    return r;
}

inline Report group_report(const RunConfig& cfg, const SystemSpec& sys) {
    EffectCatalog cat(sys);
    TransformGroup g;
    std::vector<std::vector<std::size_t>> perms;
    Json search_json;
    if (cfg.group_mode == "search") {
        SearchOptions so;
        so.max_effects = cfg.bound_effects;
        auto res = search_reversible_group(cat, so);
        g = std::move(res.group);
        perms = std::move(res.permutations);
        search_json = Json{{"pruning", to_string(res.pruning)},
                           {"nodes", res.stats.nodes},
                           {"pruned", res.stats.pruned},
                           {"dependent", res.stats.dependent},
                           {"leaves", res.stats.leaves},
                           {"accepted", res.stats.accepted}};
    } else {
        g = trivial_group(cat);
        for (const auto& t : g.elements()) perms.push_back(*label_action(cat, t));
    }
    Report r;
    Json elems = Json::array();
    std::ostringstream text, csv;
    text << to_string(g.provenance()) << " group on " << sys.describe() << ": order " << g.order() << "\n";
    csv << "index";
    for (const auto& l : cat.labels()) csv << "," << to_string(l);
    csv << "\n";
    for (std::size_t i = 0; i < g.order(); ++i) {
        elems.push_back(Json{{"index", i},
                             {"action", action_json(cat, perms[i])},
                             {"matrix", matrix_rows(g.elements()[i].matrix())}});
        csv << i;
        std::vector<std::string> act;
        for (auto p : perms[i]) {
            csv << "," << to_string(cat.label(p));
            act.push_back(to_string(cat.label(p)));
        }
        csv << "\n";
        text << "  " << i << ": " << join(act, " ") << "\n";
    }
    r.json = Json{{"command", "group"},
                  {"system", to_json(sys)},
                  {"provenance", to_string(g.provenance())},
                  {"order", g.order()},
                  {"trivial_group_order", trivial_group_order(sys).str()},
                  {"effects", action_json(cat, [&] {
                       std::vector<std::size_t> id(cat.size());
                       for (std::size_t i = 0; i < id.size(); ++i) id[i] = i;
                       return id;
                   }())}};
    if (!search_json.is_null()) r.json["search"] = search_json;
    r.json["elements"] = elems;
    r.text = text.str();
    r.csv = csv.str();
    return r;
}

inline Report theorem1_report(const RunConfig& cfg, const SystemSpec& sys) {
    EffectCatalog cat(sys);
    Theorem1Options opts;
    opts.search.max_effects = cfg.bound_effects;
    opts.audit = cfg.oracle;
    auto t = verify_theorem1(cat, opts);
    Report r;
    Json facts = Json::array();
    for (std::size_t i = 0; i < t.factorizations.size(); ++i) {
        Json f = factorization_json(t.factorizations[i]);
        f["element"] = i;
        f["in_generated_group"] = t.generated.contains(t.search.group.elements()[i]);
        facts.push_back(f);
    }
    std::string note;
    if (t.status == VerdictStatus::exception_expected)
        note = "system lies outside the theorem's hypotheses; the searched group "
               "strictly exceeds site permutations and local relabellings";
    r.json = Json{{"command", "verify"},
                  {"theorem", "theorem1"},
                  {"system", to_json(sys)},
                  {"status", to_string(t.status)},
                  {"hypotheses_hold", t.hypotheses_hold},
                  {"orders",
                   Json{{"formula", t.formula_order.str()},
                        {"generated", t.generated_order},
                        {"searched", t.searched_order}}},
                  {"setwise_equal", t.setwise_equal},
                  {"extra_elements", t.extra_elements},
                  {"unfactorable", t.unfactorable},
                  {"search",
                   Json{{"pruning", to_string(t.search.pruning)},
                        {"nodes", t.search.stats.nodes},
                        {"pruned", t.search.stats.pruned},
                        {"dependent", t.search.stats.dependent},
                        {"leaves", t.search.stats.leaves},
                        {"accepted", t.search.stats.accepted}}},
                  {"audit", t.audit_agrees ? Json(*t.audit_agrees) : Json(nullptr)},
                  {"note", note},
                  {"factorizations", facts}};
    std::ostringstream text;
    text << "theorem1 " << to_string(t.status) << " on " << sys.describe() << "\n"
         << "  orders: formula " << t.formula_order << ", generated " << t.generated_order << ", searched "
         << t.searched_order << "\n"
         << "  setwise equal: " << (t.setwise_equal ? "yes" : "no") << ", extra elements: " << t.extra_elements
         << ", unfactorable: " << t.unfactorable << "\n";
    if (t.audit_agrees) text << "  unpruned audit: " << (*t.audit_agrees ? "agrees" : "DISAGREES") << "\n";
    if (!note.empty()) text << "  note: " << note << "\n";
    r.text = text.str();
    r.csv = "theorem,system,status,formula,generated,searched,setwise_equal,extra,unfactorable\ntheorem1,\"" +
            sys.describe() + "\"," + to_string(t.status) + "," + t.formula_order.str() + "," +
            std::to_string(t.generated_order) + "," + std::to_string(t.searched_order) + "," +
            (t.setwise_equal ? "true" : "false") + "," + std::to_string(t.extra_elements) + "," +
            std::to_string(t.unfactorable) + "\n";
    r.exit_code = t.status == VerdictStatus::fail ? kExitFail : kExitOk;
    return r;
}

inline Report theorem2_report(const RunConfig& cfg, const SystemSpec& sys) {
    EffectCatalog cat(sys);
    auto vrep = enumerate_vertices(cat, {cfg.bound_dim});
    TransformGroup g;
    if (cfg.group_mode == "generate") {
        g = trivial_group(cat);
    } else {
        SearchOptions so;
        so.max_effects = cfg.bound_effects;
        g = search_reversible_group(cat, so).group;
    }
    auto t = verify_theorem2(cat, g, vrep);
    Report r;
    r.json = Json{{"command", "verify"},
                  {"theorem", "theorem2"},
                  {"system", to_json(sys)},
                  {"status", to_string(t.status)},
                  {"group", Json{{"provenance", to_string(g.provenance())}, {"order", g.order()}}},
                  {"vertices", Json{{"pure_product", t.pure_vertices}, {"non_local", t.other_vertices}}},
                  {"pure_to_pure", t.pure_to_pure},
                  {"non_local_closed", t.others_closed},
                  {"failures", t.failures}};
    std::ostringstream text;
    text << "theorem2 " << to_string(t.status) << " on " << sys.describe() << "\n"
         << "  " << to_string(g.provenance()) << " group of order " << g.order() << " over " << t.pure_vertices
         << " pure-product and " << t.other_vertices << " non-local vertices\n";
    for (const auto& f : t.failures) text << "  " << f << "\n";
    if (cfg.oracle && sys.dim() - 1 <= 8) {
        bool agree = oracle::brute_force_vertices(cat) == vrep.vertices;
        r.json["oracle"] = Json{{"vertices_agree", agree}};
        text << "  oracle: brute-force vertices " << (agree ? "agree" : "DISAGREE") << "\n";
        if (!agree) t.status = VerdictStatus::fail;
    }
    r.text = text.str();
    r.csv = "theorem,system,status,group_order,pure_product,non_local,pure_to_pure,non_local_closed\ntheorem2,\"" +
            sys.describe() + "\"," + to_string(t.status) + "," + std::to_string(g.order()) + "," +
            std::to_string(t.pure_vertices) + "," + std::to_string(t.other_vertices) + "," +
            (t.pure_to_pure ? "true" : "false") + "," + (t.others_closed ? "true" : "false") + "\n";
    r.exit_code = t.status == VerdictStatus::pass ? kExitOk : kExitFail;
    return r;
}

enum class InputKind { table, state, map };

inline InputKind classify_input(const Json& j) {
    if (j.is_array() || (j.is_object() && j.contains("entries"))) return InputKind::table;
    if (j.is_object() && j.contains("values")) return InputKind::state;
    if (j.is_object() && j.contains("matrix")) return InputKind::map;
    throw ParseError("input: expected a probability table, a state {\"values\":...} or a map {\"matrix\":...}");
}

inline Json state_check_json(const EffectCatalog& cat, const StateVector& s, bool& ok) {
    if (s.dim() != cat.system().dim())
        throw ParseError("state has " + std::to_string(s.dim()) + " values; system dimension is " +
                         std::to_string(cat.system().dim()));
    auto c = is_state(cat, s);
    ok = c.ok;
    Json j{{"is_state", c.ok}, {"identity_value", to_string(c.identity_value)}};
    if (c.violated) j["violated"] = Json{{"effect", to_string(*c.violated)}, {"value", to_string(c.violated_value)}};
    if (c.ok) j["pure_product"] = is_pure_product(cat, s);
    return j;
}

inline Report check_report(const RunConfig& cfg, const SystemSpec& sys) {
    EffectCatalog cat(sys);
    Json in = load_input(cfg);
    Report r;
    std::ostringstream text;
    bool ok = true;
    switch (classify_input(in)) {
        case InputKind::table: {
            auto table = table_from_json(in);
            check_table_complete(sys, table);
            r.json = Json{{"command", "check"}, {"system", to_json(sys)}, {"kind", "table"}};
            std::string normalized_error;
            try {
                check_table_normalized(sys, table);
            } catch (const TableError& e) {
                normalized_error = e.what();
            }
            auto ns = is_nonsignalling(sys, table);
            r.json["normalized"] = normalized_error.empty();
            if (!normalized_error.empty()) r.json["normalization_error"] = normalized_error;
            r.json["nonsignalling"] = ns.ok;
            if (ns.witness) {
                const auto& w = *ns.witness;
                r.json["witness"] = Json{{"site", w.site},
                                         {"settings", w.settings},
                                         {"outcomes", w.outcomes},
                                         {"setting_a", w.setting_a},
                                         {"setting_b", w.setting_b},
                                         {"marginal_a", to_string(w.marginal_a)},
                                         {"marginal_b", to_string(w.marginal_b)}};
            }
            ok = normalized_error.empty() && ns.ok;
            text << "table: normalized " << (normalized_error.empty() ? "yes" : "no") << ", non-signalling "
                 << (ns.ok ? "yes" : "no") << "\n";
            if (ns.witness)
                text << "  witness: setting " << ns.witness->setting_a << " vs " << ns.witness->setting_b << " at site "
                     << ns.witness->site << " gives marginal " << to_string(ns.witness->marginal_a) << " vs "
                     << to_string(ns.witness->marginal_b) << "\n";
            if (ok) {
                auto s = state_from_table(sys, table);
                bool state_ok = true;
                Json sc = state_check_json(cat, s, state_ok);
                r.json["state"] = to_json(s);
                r.json["state_check"] = sc;
                ok = state_ok;
                if (cfg.oracle) {
                    bool agree = oracle::state_by_marginals(sys, table) == s;
                    r.json["oracle"] = Json{{"marginal_route_agrees", agree}};
                    text << "  oracle: marginal route " << (agree ? "agrees" : "DISAGREES") << "\n";
                    ok = ok && agree;
                }
            }
            break;
        }
        case InputKind::state: {
            auto s = state_from_json(in);
            r.json = Json{{"command", "check"}, {"system", to_json(sys)}, {"kind", "state"}};
            Json sc = state_check_json(cat, s, ok);
            for (auto it = sc.begin(); it != sc.end(); ++it) r.json[it.key()] = it.value();
            text << "state: " << (ok ? "valid" : "invalid") << ", identity value " << sc["identity_value"].get<std::string>()
                 << "\n";
            if (sc.contains("violated"))
                text << "  violated: " << sc["violated"]["effect"].get<std::string>() << " = "
                     << sc["violated"]["value"].get<std::string>() << "\n";
            if (ok) r.json["table"] = to_json(table_from_state(sys, s));
            break;
        }
        case InputKind::map: {
            auto t = map_from_json(in);
            if (t.dim() != sys.dim()) throw ParseError("map dimension does not match the system");
            auto rev = check_reversible(cat, t);
            auto fwd = rev.invertible ? rev.forward : is_allowed(cat, t);
            r.json = Json{{"command", "check"},
                          {"system", to_json(sys)},
                          {"kind", "map"},
                          {"allowed", fwd.ok},
                          {"identity_fixed", fwd.identity_fixed},
                          {"invertible", rev.invertible},
                          {"reversible", rev.ok}};
            if (fwd.witness) r.json["witness"] = to_string(*fwd.witness);
            if (rev.permutation) r.json["action"] = action_json(cat, *rev.permutation);
            ok = fwd.ok;
            text << "map: allowed " << (fwd.ok ? "yes" : "no") << ", reversible " << (rev.ok ? "yes" : "no") << "\n";
            if (fwd.witness) text << "  witness: " << to_string(*fwd.witness) << "\n";
            break;
        }
    }
    r.json["valid"] = ok;
    r.text = text.str();
    r.csv = "kind,valid\n" + r.json["kind"].get<std::string>() + "," + (ok ? "true" : "false") + "\n";
    r.exit_code = ok ? kExitOk : kExitFail;
    return r;
}

inline Report chsh_report(const RunConfig& cfg) {
    const SystemSpec sys = cfg.system_path.empty() ? systems::gbits(2) : load_system(cfg);
    if (!(sys == systems::gbits(2))) throw UsageError("chsh needs the two-gbit system");
    Json in = load_input(cfg);
    StateVector s = classify_input(in) == InputKind::table ? state_from_table(sys, table_from_json(in))
                                                           : state_from_json(in);
    require_state(EffectCatalog(sys), s);
    Report r;
    Json corr = Json::object();
    std::ostringstream csv;
    csv << "x,y,correlator\n";
    const char* names[] = {"X", "Z"};
    for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 2; ++y) {
            auto e = correlator(s, x, y);
            corr[std::string(names[x]) + names[y]] = to_string(e);
            csv << names[x] << "," << names[y] << "," << to_string(e) << "\n";
        }
    const Rational value = chsh_value(s);
    r.json = Json{{"command", "chsh"}, {"chsh", to_string(value)}, {"correlators", corr}};
    r.text = "CHSH = " + to_string(value) + "\n";
    r.csv = csv.str();
    return r;
}

inline void emit(const RunConfig& cfg, const Report& r, std::ostream& out) {
    if (cfg.format == "json")
        out << r.json.dump(2) << "\n";
    else if (cfg.format == "csv")
        out << r.csv;
    else
        out << r.text;
}

inline void emit_error(const RunConfig& cfg, const char* kind, const std::string& message, std::ostream& out,
                       std::ostream& err) {
    if (cfg.format == "json") out << Json{{"error", Json{{"kind", kind}, {"message", message}}}}.dump(2) << "\n";
    if (!cfg.quiet) err << "boxworld: " << message << "\n";
}

}  // namespace detail

inline int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    try {
        Report report;
        switch (cfg.command) {
            case Command::spec: report = detail::spec_report(detail::load_system(cfg)); break;
            case Command::vertices: report = detail::vertices_report(cfg, detail::load_system(cfg)); break;
            case Command::group: report = detail::group_report(cfg, detail::load_system(cfg)); break;
            case Command::verify: {
                auto sys = detail::load_system(cfg);
                report = cfg.theorem == "theorem1" ? detail::theorem1_report(cfg, sys) : detail::theorem2_report(cfg, sys);
                break;
            }
            case Command::chsh: report = detail::chsh_report(cfg); break;
            case Command::check: report = detail::check_report(cfg, detail::load_system(cfg)); break;
        }
        detail::emit(cfg, report, out);
        return report.exit_code;
    } catch (const UsageError& e) {
        detail::emit_error(cfg, "usage", e.what(), out, err);
    } catch (const ParseError& e) {
        detail::emit_error(cfg, "parse", e.what(), out, err);
    } catch (const DimensionGuardError& e) {
        detail::emit_error(cfg, "bound", e.what(), out, err);
    } catch (const SearchBoundError& e) {
        detail::emit_error(cfg, "bound", e.what(), out, err);
    } catch (const Error& e) {
        detail::emit_error(cfg, "input", e.what(), out, err);
    }
    return kExitUsage;
}

inline int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    auto parsed = parse_args(argc, argv, out, err);
    if (!parsed.config) return parsed.exit_code;
    return run(*parsed.config, out, err);
}

}  // namespace boxworld::cli

#endif  // BOXWORLD_TOOLS_CLI_HPP
