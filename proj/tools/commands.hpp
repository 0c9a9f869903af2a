#ifndef HADWIGER_TOOLS_COMMANDS_HPP
#define HADWIGER_TOOLS_COMMANDS_HPP

// Command implementations behind the `hadwiger` executable. Each command
// takes a validated RunConfig, writes to the given streams and returns the
// process exit code, so tests can drive them without spawning processes.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "hadwiger/hadwiger.hpp"
#include "json.hpp"

namespace hadwiger::cli {

inline constexpr const char* kToolVersion = "1.0.0";

/// Exit codes. Findings that falsify an assumed delta or alpha are reported
/// with their own codes rather than as failures.
enum ExitCode : int {
    kOk = 0,
    kUsage = 1,
    kParse = 2,
    kMinDegreeExceeded = 3,
    kIndependenceShortfall = 4,
    kResourceLimit = 5,
    kNeighborhoodMinor = 6,
    kInternal = 7,
};

enum class OutputFormat { text, structured };

struct RunConfig {
    std::string command;
    std::string input;
    std::string output;
    OutputFormat format = OutputFormat::text;

    std::optional<int> t;
    std::optional<int> delta;
    std::optional<int> alpha;
    Provenance mode = Provenance::proven;
    bool mode_given = false;
    bool audit = false;

    std::optional<long long> n; // alpha, gen
    bool conjectured = false;   // bounds-table

    std::string family; // gen
    std::vector<std::size_t> parts;
    std::vector<std::vector<std::size_t>> blocks;
    std::size_t paste_k = 0;
    int target = 0;
    std::size_t max_rejections = 64;

    std::uint64_t seed = 1;
    std::size_t n_min = 6;
    std::size_t n_max = 12;
    std::size_t samples = 100;
    std::size_t exhaustive_max_n = 9;
    bool seeded = true;

    std::size_t oracle_cap = kDefaultOracleCap;
};

class usage_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// HADWIGER_ORACLE_CAP, if set to a positive integer, else the library default.
inline std::size_t default_oracle_cap_from_env()
{
    if (const char* s = std::getenv("HADWIGER_ORACLE_CAP")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(s, &end, 10);
        if (end != s && *end == '\0' && v > 0)
            return static_cast<std::size_t>(v);
    }
    return kDefaultOracleCap;
}

/// FNV-1a, 64 bit, as 16 hex digits.
inline std::string fnv1a_hex(const std::string& bytes)
{
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    std::ostringstream os;
    os << std::hex << std::setw(16) << std::setfill('0') << h;
    return os.str();
}

// ---------------------------------------------------------------- json ---

using nlohmann::json;

inline json graph_to_json(const Graph& g)
{
    json edges = json::array();
    for (auto [u, v] : g.edges())
        edges.push_back({u, v});
    return {{"vertices", g.vertices().to_vector()}, {"edges", edges}};
}

inline Graph graph_from_json(const json& j)
{
    Graph g;
    for (Vertex v : j.at("vertices").get<std::vector<Vertex>>())
        g.add_vertex(v);
    for (const auto& e : j.at("edges"))
        g.add_edge(e.at(0).get<Vertex>(), e.at(1).get<Vertex>());
    return g;
}

inline json model_to_json(const MinorModel& m)
{
    json sets = json::array();
    for (const auto& b : m.branch_sets)
        sets.push_back(b.to_vector());
    return sets;
}

inline MinorModel model_from_json(const json& j)
{
    MinorModel m;
    for (const auto& s : j)
        m.branch_sets.push_back(VertexSet::from(s.get<std::vector<Vertex>>()));
    return m;
}

inline json trace_to_json(const Lemma1Trace& trace)
{
    json steps = json::array();
    for (const auto& s : trace.steps) {
        json js = {{"v", s.chosen_v},
                   {"d", s.degree_d},
                   {"T", s.independent_T.to_vector()},
                   {"color_of_v", s.palette_color_of_v}};
        js["z"] = s.contracted_z ? json(*s.contracted_z) : json(nullptr);
        steps.push_back(js);
    }
    return {{"steps", steps}, {"base_case", trace.base_case}};
}

inline Lemma1Trace trace_from_json(const json& j)
{
    Lemma1Trace trace;
    trace.base_case = j.at("base_case").get<std::size_t>();
    for (const auto& js : j.at("steps")) {
        Lemma1Step s;
        s.chosen_v = js.at("v").get<Vertex>();
        s.degree_d = js.at("d").get<std::size_t>();
        s.independent_T = VertexSet::from(js.at("T").get<std::vector<Vertex>>());
        if (!js.at("z").is_null())
            s.contracted_z = js.at("z").get<Vertex>();
        s.palette_color_of_v = js.at("color_of_v").get<int>();
        trace.steps.push_back(std::move(s));
    }
    return trace;
}

inline json row_to_json(const BoundRow& r)
{
    json j = {{"t", r.t},
              {"delta", r.delta},
              {"delta_provenance", to_string(r.delta_provenance)},
              {"alpha", r.alpha},
              {"chi_bound", r.chi_bound},
              {"hadwiger_target", r.hadwiger_target}};
    j["edge_coeffs"] = r.edge_coeffs ? json{{"coeff", r.edge_coeffs->coeff},
                                            {"constant", r.edge_coeffs->constant},
                                            {"min_vertices", r.edge_coeffs->min_vertices}}
                                     : json(nullptr);
    j["best_known_chi"] = r.best_known_chi ? json(*r.best_known_chi) : json(nullptr);
    if (r.t >= 6) {
        const Rational b = theorem_bound_b(r.delta, r.t);
        j["theorem_bound_b"] = {{"num", b.num()}, {"den", b.den()}, {"floor", b.floor()}};
        j["theorem_bound_c"] = theorem_bound_c(r.delta, r.t);
    }
    return j;
}

inline BoundRow row_from_json(const json& j)
{
    BoundRow r;
    r.t = j.at("t").get<int>();
    r.delta = j.at("delta").get<int>();
    r.delta_provenance = j.at("delta_provenance").get<std::string>() == "proven" ? Provenance::proven
                                                                                : Provenance::conjectured;
    r.alpha = j.at("alpha").get<int>();
    r.chi_bound = j.at("chi_bound").get<int>();
    r.hadwiger_target = j.at("hadwiger_target").get<int>();
    if (!j.at("edge_coeffs").is_null()) {
        const auto& e = j.at("edge_coeffs");
        r.edge_coeffs = ExtremalBound{r.t + 1, e.at("coeff").get<int>(), e.at("constant").get<int>(),
                                      e.at("min_vertices").get<int>()};
    }
    if (!j.at("best_known_chi").is_null())
        r.best_known_chi = j.at("best_known_chi").get<int>();
    return r;
}

inline json config_to_json(const RunConfig& c)
{
    auto opt = [](const auto& o) { return o ? json(*o) : json(nullptr); };
    return {{"command", c.command},
            {"input", c.input},
            {"output", c.output},
            {"format", c.format == OutputFormat::text ? "text" : "structured"},
            {"t", opt(c.t)},
            {"delta", opt(c.delta)},
            {"alpha", opt(c.alpha)},
            {"mode", to_string(c.mode)},
            {"audit", c.audit},
            {"n", opt(c.n)},
            {"conjectured", c.conjectured},
            {"family", c.family},
            {"parts", c.parts},
            {"blocks", c.blocks},
            {"paste_k", c.paste_k},
            {"target", c.target},
            {"max_rejections", c.max_rejections},
            {"seed", c.seed},
            {"n_min", c.n_min},
            {"n_max", c.n_max},
            {"samples", c.samples},
            {"exhaustive_max_n", c.exhaustive_max_n},
            {"seeded", c.seeded},
            {"oracle_cap", c.oracle_cap}};
}

/// Common envelope of every structured report.
inline json envelope(const RunConfig& cfg, const std::optional<std::string>& input_bytes)
{
    json j;
    j["tool"] = "hadwiger";
    j["version"] = kToolVersion;
    j["config"] = config_to_json(cfg);
    j["input_hash"] = input_bytes ? json(fnv1a_hex(*input_bytes)) : json(nullptr);
    return j;
}

inline void emit(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

// ------------------------------------------------------------- helpers ---

struct LoadedGraph {
    Graph graph;
    std::string bytes;
};

inline LoadedGraph load_input(const RunConfig& cfg)
{
    if (cfg.input.empty())
        throw usage_error("an input graph file is required");
    std::ifstream in(cfg.input, std::ios::binary);
    if (!in)
        throw usage_error("cannot open '" + cfg.input + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    LoadedGraph lg;
    lg.bytes = buf.str();
    std::istringstream parse(lg.bytes);
    lg.graph = read_graph(parse);
    return lg;
}

inline std::size_t min_degree_of(const Graph& g) { return g.empty() ? 0 : min_degree_vertex(g).degree; }

// --------------------------------------------------------------- color ---

inline void validate_color(const RunConfig& cfg)
{
    if (cfg.t && (*cfg.t < 2 || *cfg.t > 10) && !(cfg.delta && cfg.alpha))
        throw usage_error("--t must be in 2..10 unless --delta and --alpha are both given");
    if (cfg.t && *cfg.t < 2)
        throw usage_error("--t must be at least 2");
    if (!cfg.t && !(cfg.delta && cfg.alpha))
        throw usage_error("give --t, or both --delta and --alpha");
    if (cfg.mode == Provenance::conjectured) {
        if (cfg.delta || cfg.alpha)
            throw usage_error("--mode conjectured conflicts with --delta/--alpha overrides");
        if (!cfg.t || *cfg.t < 6 || *cfg.t > 8)
            throw usage_error("--mode conjectured needs --t in 6..8");
    }
    if (cfg.audit && !cfg.t)
        throw usage_error("--audit needs --t");
    if ((cfg.delta && *cfg.delta < 1) || (cfg.alpha && *cfg.alpha < 1))
        throw usage_error("--delta and --alpha must be positive");
}

inline int cmd_color(const RunConfig& cfg, std::ostream& out, std::ostream& err)
{
    validate_color(cfg);
    const LoadedGraph in = load_input(cfg);
    int delta = 0, alpha = 0;
    if (cfg.t && *cfg.t <= 10) {
        const BoundRow row = table_row(*cfg.t, cfg.mode);
        delta = row.delta;
        alpha = row.alpha;
    }
    if (cfg.delta)
        delta = *cfg.delta;
    if (cfg.alpha)
        alpha = *cfg.alpha;
    if (delta - alpha + 2 < 2)
        throw usage_error("palette delta - alpha + 2 must be at least 2");
    const int t = cfg.t.value_or(2);

    Lemma1Options opts;
    opts.audit = cfg.audit;
    opts.oracle_cap = cfg.oracle_cap;

    json report = envelope(cfg, in.bytes);
    report["delta"] = delta;
    report["alpha"] = alpha;
    report["palette_bound"] = delta - alpha + 2;
    const bool structured = cfg.format == OutputFormat::structured;
    try {
        const ColorReport r = color_lemma1(in.graph, t, delta, alpha, opts);
        if (structured) {
            report["status"] = "colored";
            report["colors_used"] = r.colors_used;
            report["proper"] = r.proper;
            json colors = json::object();
            for (Vertex v : in.graph.vertices())
                colors[std::to_string(v)] = r.coloring.color_of(v);
            report["coloring"] = colors;
            report["trace"] = trace_to_json(r.trace);
            emit(out, report);
        } else {
            out << "colors used: " << r.colors_used << " (palette bound " << r.palette_bound
                << " = delta " << delta << " - alpha " << alpha << " + 2)\n";
            out << "proper: " << (r.proper ? "yes" : "no") << '\n';
            out << "steps: " << r.trace.steps.size() << '\n';
            for (Vertex v : in.graph.vertices())
                out << v << ' ' << r.coloring.color_of(v) << '\n';
        }
        return kOk;
    } catch (const min_degree_exceeded& e) {
        if (structured) {
            report["status"] = "min_degree_exceeded";
            report["vertex"] = e.vertex;
            report["degree"] = e.degree;
            report["witness"] = graph_to_json(e.graph);
            emit(out, report);
        } else {
            out << "MinDegreeExceeded: " << e.what() << "\nwitness graph:\n";
            write_edge_list(out, e.graph);
        }
        return kMinDegreeExceeded;
    } catch (const independence_shortfall& e) {
        if (structured) {
            report["status"] = "independence_shortfall";
            report["vertex"] = e.vertex;
            report["found"] = e.found;
            report["required"] = e.required;
            report["witness"] = graph_to_json(e.neighborhood);
            emit(out, report);
        } else {
            out << "IndependenceShortfall: " << e.what() << "\nneighborhood graph:\n";
            write_edge_list(out, e.neighborhood);
        }
        return kIndependenceShortfall;
    } catch (const neighborhood_minor_found& e) {
        if (structured) {
            report["status"] = "neighborhood_minor_found";
            report["vertex"] = e.vertex;
            report["witness"] = graph_to_json(e.neighborhood);
            report["model"] = model_to_json(e.model);
            emit(out, report);
        } else {
            out << "audit: " << e.what() << '\n';
            write_model(out, e.model);
        }
        return kNeighborhoodMinor;
    } catch (const palette_exhausted& e) {
        err << "internal error: " << e.what() << '\n';
        return kInternal;
    }
}

// --------------------------------------------------------- check-minor ---

inline int cmd_check_minor(const RunConfig& cfg, std::ostream& out, std::ostream&)
{
    if (!cfg.t || *cfg.t < 1)
        throw usage_error("check-minor needs --t >= 1 (the clique order)");
    const LoadedGraph in = load_input(cfg);
    const auto t = static_cast<std::size_t>(*cfg.t);
    const auto model = has_clique_minor(in.graph, t, cfg.oracle_cap);
    std::optional<bool> forced;
    if (extremal_bound(*cfg.t))
        forced = edge_count_forces_minor(in.graph, *cfg.t);

    if (cfg.format == OutputFormat::structured) {
        json report = envelope(cfg, in.bytes);
        report["clique_order"] = t;
        report["has_minor"] = model.has_value();
        report["model"] = model ? model_to_json(*model) : json(nullptr);
        report["edge_count_forces_minor"] = forced ? json(*forced) : json(nullptr);
        emit(out, report);
    } else if (model) {
        out << "minor found: K" << t << '\n';
        write_model(out, *model);
    } else {
        out << "no K" << t << " minor\n";
    }
    return kOk;
}

// --------------------------------------------------------------- alpha ---

inline int cmd_alpha(const RunConfig& cfg, std::ostream& out, std::ostream&)
{
    if (!cfg.n || *cfg.n < 1)
        throw usage_error("alpha needs --n >= 1");
    if (!cfg.t || *cfg.t < 2)
        throw usage_error("alpha needs --t >= 2");
    std::vector<AlphaBound> bounds{lemma2_alpha(*cfg.n, *cfg.t, AlphaVariant::a)};
    if (*cfg.t >= 5)
        bounds.push_back(lemma2_alpha(*cfg.n, *cfg.t, AlphaVariant::b));
    bounds.push_back(lemma2_alpha(*cfg.n, *cfg.t, AlphaVariant::c));

    if (cfg.format == OutputFormat::structured) {
        json report = envelope(cfg, std::nullopt);
        report["gamma"] = gamma_constant();
        json vs = json::object();
        for (const auto& b : bounds)
            vs[std::string(1, to_char(b.variant))] = b.alpha;
        report["alpha"] = vs;
        emit(out, report);
        return kOk;
    }
    out << "K" << *cfg.t + 1 << "-minor-free graphs on " << *cfg.n
        << " vertices have an independent set of size:\n";
    for (const auto& b : bounds)
        out << "  variant " << to_char(b.variant) << ": " << b.alpha << '\n';
    out << "  (gamma = " << std::setprecision(12) << gamma_constant() << ")\n";
    return kOk;
}

// -------------------------------------------------------- bounds-table ---

inline int cmd_bounds_table(const RunConfig& cfg, std::ostream& out, std::ostream&)
{
    const auto rows = bounds_table(cfg.conjectured ? Provenance::conjectured : Provenance::proven);
    if (cfg.format == OutputFormat::structured) {
        json report = envelope(cfg, std::nullopt);
        json arr = json::array();
        for (const auto& r : rows)
            arr.push_back(row_to_json(r));
        report["rows"] = arr;
        emit(out, report);
        return kOk;
    }
    out << std::left << std::setw(4) << "t" << std::setw(11) << "edges<=" << std::setw(7) << "delta"
        << std::setw(13) << "provenance" << std::setw(7) << "alpha" << std::setw(6) << "chi"
        << std::setw(8) << "greedy" << std::setw(8) << "thm-b" << std::setw(8) << "thm-c"
        << "best-known\n";
    for (const auto& r : rows) {
        std::string edges = "-";
        if (r.edge_coeffs)
            edges = std::to_string(r.edge_coeffs->coeff) + "n-" + std::to_string(r.edge_coeffs->constant);
        std::string tb = "-", tc = "-";
        if (r.t >= 6) {
            tb = std::to_string(theorem_bound_b(r.delta, r.t).floor());
            tc = std::to_string(static_cast<long long>(std::floor(theorem_bound_c(r.delta, r.t))));
        }
        out << std::setw(4) << r.t << std::setw(11) << edges << std::setw(7) << r.delta << std::setw(13)
            << to_string(r.delta_provenance) << std::setw(7) << r.alpha << std::setw(6) << r.chi_bound
            << std::setw(8) << r.delta + 1 << std::setw(8) << tb << std::setw(8) << tc
            << (r.best_known_chi ? std::to_string(*r.best_known_chi) : "-") << '\n';
    }
    return kOk;
}

// ----------------------------------------------------------------- gen ---

inline GenSpec spec_from_config(const RunConfig& cfg)
{
    if (cfg.family.empty())
        throw usage_error("gen needs --family");
    GenSpec spec;
    try {
        spec.family = family_from_string(cfg.family);
    } catch (const std::invalid_argument& e) {
        throw usage_error(e.what());
    }
    if (cfg.n) {
        if (*cfg.n < 1)
            throw usage_error("--n must be positive");
        spec.n = static_cast<std::size_t>(*cfg.n);
    }
    spec.seed = cfg.seed;
    spec.parts = cfg.parts;
    spec.blocks = cfg.blocks;
    spec.paste_k = cfg.paste_k;
    spec.target_t_plus_1 = cfg.target;
    spec.max_rejections = cfg.max_rejections;
    spec.oracle_cap = cfg.oracle_cap;
    return spec;
}

inline json spec_to_json(const GenSpec& s)
{
    return {{"family", to_string(s.family)},
            {"n", s.n},
            {"seed", s.seed},
            {"parts", s.parts},
            {"blocks", s.blocks},
            {"paste_k", s.paste_k},
            {"target_t_plus_1", s.target_t_plus_1},
            {"max_rejections", s.max_rejections},
            {"oracle_cap", s.oracle_cap}};
}

inline int cmd_gen(const RunConfig& cfg, std::ostream& out, std::ostream&)
{
    const GenSpec spec = spec_from_config(cfg);
    const Graph g = generate(spec);
    const std::string text = to_edge_list(g);
    json meta = envelope(cfg, std::nullopt);
    meta["spec"] = spec_to_json(spec);
    meta["vertices"] = g.order();
    meta["edges"] = g.size();
    meta["edge_list_hash"] = fnv1a_hex(text);
    if (auto target = family_target(spec))
        meta["excludes_clique_minor"] = *target;

    if (cfg.output.empty()) {
        out << text;
        return kOk;
    }
    std::ofstream f(cfg.output, std::ios::binary);
    if (!f)
        throw usage_error("cannot write '" + cfg.output + "'");
    f << text;
    std::ofstream side(cfg.output + ".meta.json", std::ios::binary);
    side << meta.dump(2) << '\n';
    if (cfg.format == OutputFormat::structured)
        emit(out, meta);
    else
        out << "wrote " << cfg.output << " (" << g.order() << " vertices, " << g.size() << " edges)\n";
    return kOk;
}

// ---------------------------------------------------- search-mindegree ---

namespace detail {

/// Calls f on every labeled graph on n vertices whose minimum degree is at
/// least `min_deg`. Edges are decided pair by pair; a branch dies once some
/// vertex cannot reach min_deg with its remaining pairs.
template <typename F>
void enumerate_min_degree(std::size_t n, std::size_t min_deg, F&& f)
{
    std::vector<Edge> pairs;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            pairs.emplace_back(u, v);
    std::vector<std::size_t> remaining(n, n - 1), degree(n, 0);
    Graph g(n);
    auto rec = [&](auto& self, std::size_t i) -> void {
        if (i == pairs.size()) {
            f(g);
            return;
        }
        const auto [u, v] = pairs[i];
        --remaining[u];
        --remaining[v];
        g.add_edge(u, v);
        ++degree[u];
        ++degree[v];
        self(self, i + 1);
        g.remove_edge(u, v);
        --degree[u];
        --degree[v];
        if (degree[u] + remaining[u] >= min_deg && degree[v] + remaining[v] >= min_deg)
            self(self, i + 1);
        ++remaining[u];
        ++remaining[v];
    };
    if (n == 0 || n - 1 < min_deg)
        return;
    rec(rec, 0);
}

} // namespace detail

struct SeedWitness {
    std::string name;
    Graph graph;
    std::size_t min_degree = 0;
    bool minor_free = false;
    std::optional<MinorModel> model;
    bool tight = false;
};

struct SearchSummary {
    int t = 0;
    int conjectured_delta = 0;
    std::vector<SeedWitness> seeded;
    std::size_t exhaustive_candidates = 0;
    std::size_t random_graphs = 0;
    std::size_t max_min_degree = 0;
    std::vector<Graph> counterexamples;
};

inline std::vector<std::pair<std::string, std::vector<std::size_t>>> seeded_corpus(int t)
{
    switch (t) {
    case 6: return {{"K_{1,2,2,2,2}", {1, 2, 2, 2, 2}}};
    case 7: return {{"K_{2,2,2,2,2}", {2, 2, 2, 2, 2}}};
    case 8: return {{"K_{2,2,2,3,3}", {2, 2, 2, 3, 3}}, {"K_{1,2,2,2,2,2}", {1, 2, 2, 2, 2, 2}}};
    default: return {};
    }
}

inline SearchSummary search_mindegree(const RunConfig& cfg)
{
    if (!cfg.t || *cfg.t < 6 || *cfg.t > 8)
        throw usage_error("search-mindegree needs --t in 6..8");
    if (cfg.n_min < 1 || cfg.n_min > cfg.n_max)
        throw usage_error("need 1 <= --n-min <= --n-max");
    if (cfg.n_max > cfg.oracle_cap)
        throw resource_limit_error("search-mindegree", cfg.oracle_cap, cfg.n_max);
    if (cfg.exhaustive_max_n > 9)
        throw usage_error("--exhaustive-max-n is limited to 9");

    SearchSummary s;
    s.t = *cfg.t;
    s.conjectured_delta = table_row(s.t, Provenance::conjectured).delta;
    const auto forbidden = static_cast<std::size_t>(s.t + 1);
    const auto conj = static_cast<std::size_t>(s.conjectured_delta);

    auto consider = [&](const Graph& g) {
        const std::size_t d = min_degree_of(g);
        s.max_min_degree = std::max(s.max_min_degree, d);
        if (d > conj)
            s.counterexamples.push_back(g);
    };

    if (cfg.seeded)
        for (const auto& [name, parts] : seeded_corpus(s.t)) {
            SeedWitness w;
            w.name = name;
            w.graph = named::complete_multipartite(parts);
            w.min_degree = min_degree_of(w.graph);
            w.model = has_clique_minor(w.graph, forbidden, cfg.oracle_cap);
            w.minor_free = !w.model;
            w.tight = w.minor_free && w.min_degree == conj;
            if (w.minor_free)
                consider(w.graph);
            s.seeded.push_back(std::move(w));
        }

    for (std::size_t n = cfg.n_min; n <= std::min(cfg.n_max, cfg.exhaustive_max_n); ++n)
        detail::enumerate_min_degree(n, conj + 1, [&](const Graph& g) {
            ++s.exhaustive_candidates;
            if (!has_clique_minor(g, forbidden, cfg.oracle_cap))
                consider(g);
        });

    for (std::size_t i = 0; i < cfg.samples; ++i) {
        GenSpec spec;
        spec.family = Family::filtered_random;
        spec.seed = cfg.seed + i;
        spec.n = cfg.n_min + static_cast<std::size_t>((cfg.seed + i) % (cfg.n_max - cfg.n_min + 1));
        spec.target_t_plus_1 = static_cast<int>(forbidden);
        spec.max_rejections = cfg.max_rejections;
        spec.oracle_cap = cfg.oracle_cap;
        consider(generate(spec));
        ++s.random_graphs;
    }
    return s;
}

inline int cmd_search_mindegree(const RunConfig& cfg, std::ostream& out, std::ostream&)
{
    const SearchSummary s = search_mindegree(cfg);
    if (cfg.format == OutputFormat::structured) {
        json report = envelope(cfg, std::nullopt);
        report["t"] = s.t;
        report["conjectured_delta"] = s.conjectured_delta;
        json seeded = json::array();
        for (const auto& w : s.seeded)
            seeded.push_back({{"name", w.name},
                              {"vertices", w.graph.order()},
                              {"edges", w.graph.size()},
                              {"min_degree", w.min_degree},
                              {"minor_free", w.minor_free},
                              {"tight", w.tight},
                              {"model", w.model ? model_to_json(*w.model) : json(nullptr)}});
        report["seeded"] = seeded;
        report["exhaustive_candidates"] = s.exhaustive_candidates;
        report["random_graphs"] = s.random_graphs;
        report["max_min_degree"] = s.max_min_degree;
        json ce = json::array();
        for (const auto& g : s.counterexamples)
            ce.push_back(graph_to_json(g));
        report["counterexamples"] = ce;
        emit(out, report);
    } else {
        out << "conjecture: every K" << s.t + 1 << "-minor-free graph has minimum degree <= "
            << s.conjectured_delta << '\n';
        for (const auto& w : s.seeded) {
            out << "seeded " << w.name << ": n=" << w.graph.order() << " m=" << w.graph.size()
                << " min degree " << w.min_degree << ", "
                << (w.minor_free ? "K" + std::to_string(s.t + 1) + "-minor-free"
                                 : "HAS a K" + std::to_string(s.t + 1) + " minor")
                << (w.tight ? " (tight)" : "") << '\n';
            if (w.model)
                write_model(out, *w.model);
        }
        out << "exhaustive candidates (min degree > " << s.conjectured_delta
            << "): " << s.exhaustive_candidates << '\n';
        out << "random minor-free graphs: " << s.random_graphs << '\n';
        out << "largest min degree among minor-free graphs: " << s.max_min_degree << '\n';
        out << "counterexamples: " << s.counterexamples.size() << '\n';
        for (const auto& g : s.counterexamples)
            write_edge_list(out, g);
    }
    return s.counterexamples.empty() ? kOk : kMinDegreeExceeded;
}

// ------------------------------------------------------------ dispatch ---

/// Runs cfg.command, mapping library exceptions to exit codes.
inline int run(const RunConfig& cfg, std::ostream& out, std::ostream& err)
{
    try {
        if (cfg.command == "color")
            return cmd_color(cfg, out, err);
        if (cfg.command == "check-minor")
            return cmd_check_minor(cfg, out, err);
        if (cfg.command == "alpha")
            return cmd_alpha(cfg, out, err);
        if (cfg.command == "bounds-table")
            return cmd_bounds_table(cfg, out, err);
        if (cfg.command == "gen")
            return cmd_gen(cfg, out, err);
        if (cfg.command == "search-mindegree")
            return cmd_search_mindegree(cfg, out, err);
        throw usage_error("unknown command '" + cfg.command + "'");
    } catch (const usage_error& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const parse_error& e) {
        err << cfg.input << ": " << e.what() << '\n';
        return kParse;
    } catch (const resource_limit_error& e) {
        err << "error: " << e.what() << " (raise --cap or HADWIGER_ORACLE_CAP)\n";
        return kResourceLimit;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::logic_error& e) {
        err << "internal error: " << e.what() << '\n';
        return kInternal;
    }
}

} // namespace hadwiger::cli

#endif // HADWIGER_TOOLS_COMMANDS_HPP
