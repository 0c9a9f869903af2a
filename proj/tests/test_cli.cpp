#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "commands.hpp"

using namespace hadwiger;
using namespace hadwiger::cli;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run_cfg(const RunConfig& cfg)
{
    std::ostringstream out, err;
    const int code = run(cfg, out, err);
    return {code, out.str(), err.str()};
}

class TempDir {
public:
    TempDir()
    {
        path_ = std::filesystem::temp_directory_path()
              / ("hadwiger_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) + "_"
                 + ::testing::UnitTest::GetInstance()->current_test_info()->name());
        std::filesystem::create_directories(path_);
    }
    ~TempDir() { std::filesystem::remove_all(path_); }

    std::string write(const std::string& name, const std::string& text) const
    {
        const auto p = path_ / name;
        std::ofstream(p) << text;
        return p.string();
    }
    std::string file(const std::string& name) const { return (path_ / name).string(); }

private:
    std::filesystem::path path_;
};

std::string planar_file(const TempDir& dir, std::size_t n, std::uint64_t seed)
{
    GenSpec s;
    s.family = Family::planar_triangulation;
    s.n = n;
    s.seed = seed;
    return dir.write("planar.el", to_edge_list(generate(s)));
}

} // namespace

TEST(Cli, ColorPlanar)
{
    TempDir dir;
    RunConfig cfg;
    cfg.command = "color";
    cfg.input = planar_file(dir, 20, 4);
    cfg.t = 4;
    const Result r = run_cfg(cfg);
    EXPECT_EQ(r.code, kOk) << r.err;
    EXPECT_NE(r.out.find("palette bound 5"), std::string::npos);
    EXPECT_NE(r.out.find("proper: yes"), std::string::npos);
}

TEST(Cli, ColorStructuredRoundTrip)
{
    TempDir dir;
    RunConfig cfg;
    cfg.command = "color";
    cfg.input = planar_file(dir, 18, 9);
    cfg.t = 4;
    cfg.format = OutputFormat::structured;
    const Result r = run_cfg(cfg);
    ASSERT_EQ(r.code, kOk) << r.err;
    const json j = json::parse(r.out);
    EXPECT_EQ(j.at("tool"), "hadwiger");
    EXPECT_EQ(j.at("version"), kToolVersion);
    EXPECT_EQ(j.at("config").at("t"), 4);
    EXPECT_EQ(j.at("status"), "colored");
    EXPECT_LE(j.at("colors_used").get<int>(), 5);

    std::ifstream in(cfg.input);
    std::stringstream bytes;
    bytes << in.rdbuf();
    EXPECT_EQ(j.at("input_hash"), fnv1a_hex(bytes.str()));

    // The trace in the report replays to the reported coloring.
    const Graph g = read_graph_file(cfg.input);
    const Lemma1Trace trace = trace_from_json(j.at("trace"));
    const Coloring c = replay_lemma1_trace(g, trace, j.at("palette_bound").get<int>());
    for (Vertex v : g.vertices())
        EXPECT_EQ(c.color_of(v), j.at("coloring").at(std::to_string(v)).get<int>());
    EXPECT_EQ(trace_to_json(trace), j.at("trace"));

    EXPECT_EQ(run_cfg(cfg).out, r.out);
}

TEST(Cli, ColorOverridesOnK6MinorFreeInput)
{
    TempDir dir;
    RunConfig cfg;
    cfg.command = "color";
    cfg.input = dir.write("k22222.el", to_edge_list(named::complete_multipartite({2, 2, 2, 2, 2})));
    cfg.t = 7;
    EXPECT_EQ(run_cfg(cfg).code, kOk);

    GenSpec s;
    s.family = Family::filtered_random;
    s.n = 10;
    s.seed = 2;
    s.target_t_plus_1 = 6;
    s.max_rejections = 16;
    cfg.input = dir.write("k6free.el", to_edge_list(generate(s)));
    cfg.t = 5;
    cfg.delta = 7;
    cfg.alpha = 2;
    const Result r = run_cfg(cfg);
    EXPECT_EQ(r.code, kOk) << r.err;
    EXPECT_NE(r.out.find("palette bound 7"), std::string::npos);
}

TEST(Cli, ColorMinDegreeExceeded)
{
    TempDir dir;
    RunConfig cfg;
    cfg.command = "color";
    cfg.input = dir.write("g.el", to_edge_list(named::complete_multipartite({1, 2, 2, 2, 2, 2})));
    cfg.t = 6;
    cfg.mode = Provenance::conjectured;
    cfg.mode_given = true;
    Result r = run_cfg(cfg);
    EXPECT_EQ(r.code, kMinDegreeExceeded);
    EXPECT_NE(r.out.find("witness graph:\n11 50\n"), std::string::npos);

    cfg.format = OutputFormat::structured;
    r = run_cfg(cfg);
    EXPECT_EQ(r.code, kMinDegreeExceeded);
    const json j = json::parse(r.out);
    EXPECT_EQ(j.at("status"), "min_degree_exceeded");
    EXPECT_EQ(j.at("degree"), 9);
    EXPECT_EQ(graph_from_json(j.at("witness")), named::complete_multipartite({1, 2, 2, 2, 2, 2}));
}

TEST(Cli, ColorIndependenceShortfall)
{
    TempDir dir;
    RunConfig cfg;
    cfg.command = "color";
    cfg.input = dir.write("k6.el", to_edge_list(named::complete(6)));
    cfg.t = 4;
    EXPECT_EQ(run_cfg(cfg).code, kIndependenceShortfall);
    cfg.audit = true;
    EXPECT_EQ(run_cfg(cfg).code, kNeighborhoodMinor);
}

TEST(Cli, ColorUsageErrors)
{
    TempDir dir;
    RunConfig cfg;
    cfg.command = "color";
    cfg.input = dir.write("p.el", to_edge_list(named::path(3)));
    EXPECT_EQ(run_cfg(cfg).code, kUsage);
    cfg.t = 5;
    cfg.mode = Provenance::conjectured;
    EXPECT_EQ(run_cfg(cfg).code, kUsage);
    cfg.t = 6;
    cfg.delta = 7;
    EXPECT_EQ(run_cfg(cfg).code, kUsage);
    cfg = RunConfig{};
    cfg.command = "color";
    cfg.t = 4;
    cfg.input = dir.file("missing.el");
    EXPECT_EQ(run_cfg(cfg).code, kUsage);
}

TEST(Cli, ParseErrorsCarryLineNumbers)
{
    TempDir dir;
    RunConfig cfg;
    cfg.command = "color";
    cfg.t = 4;
    cfg.input = dir.write("bad.el", "3 2\n0 1\n1 x\n");
    const Result r = run_cfg(cfg);
    EXPECT_EQ(r.code, kParse);
    EXPECT_NE(r.err.find("line 3"), std::string::npos) << r.err;
}

TEST(Cli, CheckMinorPetersen)
{
    TempDir dir;
    RunConfig cfg;
    cfg.command = "check-minor";
    cfg.input = dir.write("petersen.el", to_edge_list(named::petersen()));
    cfg.t = 5;
    Result r = run_cfg(cfg);
    EXPECT_EQ(r.code, kOk);
    EXPECT_EQ(r.out.rfind("minor found: K5\n", 0), 0u);

    cfg.format = OutputFormat::structured;
    r = run_cfg(cfg);
    const json j = json::parse(r.out);
    EXPECT_TRUE(j.at("has_minor").get<bool>());
    EXPECT_TRUE(validate_model(named::petersen(), model_from_json(j.at("model"))));
    EXPECT_FALSE(j.at("edge_count_forces_minor").get<bool>());

    cfg.t = 6;
    cfg.format = OutputFormat::text;
    EXPECT_EQ(run_cfg(cfg).out, "no K6 minor\n");
}

TEST(Cli, CheckMinorCap)
{
    TempDir dir;
    RunConfig cfg;
    cfg.command = "check-minor";
    cfg.input = dir.write("p.el", to_edge_list(named::path(12)));
    cfg.t = 3;
    cfg.oracle_cap = 10;
    EXPECT_EQ(run_cfg(cfg).code, kResourceLimit);
}

TEST(Cli, Alpha)
{
    RunConfig cfg;
    cfg.command = "alpha";
    cfg.n = 21;
    cfg.t = 8;
    Result r = run_cfg(cfg);
    EXPECT_EQ(r.code, kOk);
    EXPECT_NE(r.out.find("variant b: 3"), std::string::npos);

    cfg.format = OutputFormat::structured;
    r = run_cfg(cfg);
    const json j = json::parse(r.out);
    EXPECT_EQ(j.at("alpha").at("b"), 3);
    EXPECT_TRUE(j.at("input_hash").is_null());

    cfg.t = 4;
    r = run_cfg(cfg);
    EXPECT_FALSE(json::parse(r.out).at("alpha").contains("b"));

    cfg.n.reset();
    EXPECT_EQ(run_cfg(cfg).code, kUsage);
}

TEST(Cli, BoundsTable)
{
    RunConfig cfg;
    cfg.command = "bounds-table";
    Result r = run_cfg(cfg);
    EXPECT_EQ(r.code, kOk);
    std::istringstream lines(r.out);
    std::string line;
    std::size_t count = 0;
    while (std::getline(lines, line))
        ++count;
    EXPECT_EQ(count, 10u);

    cfg.format = OutputFormat::structured;
    r = run_cfg(cfg);
    const json j = json::parse(r.out);
    const auto table = bounds_table();
    ASSERT_EQ(j.at("rows").size(), table.size());
    for (std::size_t i = 0; i < table.size(); ++i)
        EXPECT_EQ(row_from_json(j.at("rows")[i]), table[i]);
    EXPECT_EQ(j.at("rows")[7].at("theorem_bound_b").at("floor"), 20);

    cfg.conjectured = true;
    EXPECT_EQ(json::parse(run_cfg(cfg).out).at("rows").size(), 3u);
}

TEST(Cli, GenWritesSidecar)
{
    TempDir dir;
    RunConfig cfg;
    cfg.command = "gen";
    cfg.family = "clique_paste";
    cfg.blocks = {{2, 2, 2, 2, 2}, {2, 2, 2, 2, 2}};
    cfg.paste_k = 5;
    cfg.seed = 3;
    cfg.output = dir.file("paste.el");
    EXPECT_EQ(run_cfg(cfg).code, kOk);
    const Graph g = read_graph_file(cfg.output);
    EXPECT_EQ(g.order(), 15u);
    EXPECT_EQ(g.size(), 70u);
    std::ifstream side(cfg.output + ".meta.json");
    const json meta = json::parse(side);
    EXPECT_EQ(meta.at("spec").at("family"), "clique_paste");
    EXPECT_EQ(meta.at("edges"), 70);
    EXPECT_EQ(meta.at("config").at("seed"), 3);

    cfg.output.clear();
    EXPECT_EQ(run_cfg(cfg).out, to_edge_list(g));

    cfg.paste_k = 6;
    EXPECT_EQ(run_cfg(cfg).code, kUsage);
    cfg.family = "grid";
    EXPECT_EQ(run_cfg(cfg).code, kUsage);
}

TEST(Cli, SearchMindegreeSeeded)
{
    RunConfig cfg;
    cfg.command = "search-mindegree";
    cfg.t = 7;
    cfg.samples = 0;
    cfg.exhaustive_max_n = 0;
    cfg.format = OutputFormat::structured;
    Result r = run_cfg(cfg);
    EXPECT_EQ(r.code, kOk) << r.err;
    const json j = json::parse(r.out);
    ASSERT_EQ(j.at("seeded").size(), 1u);
    EXPECT_EQ(j.at("seeded")[0].at("min_degree"), 8);
    EXPECT_TRUE(j.at("seeded")[0].at("minor_free").get<bool>());
    EXPECT_TRUE(j.at("seeded")[0].at("tight").get<bool>());

    cfg.t = 5;
    EXPECT_EQ(run_cfg(cfg).code, kUsage);
}

TEST(Cli, SearchMindegreeRandom)
{
    RunConfig cfg;
    cfg.command = "search-mindegree";
    cfg.t = 6;
    cfg.seeded = false;
    cfg.n_min = 8;
    cfg.n_max = 10;
    cfg.samples = 5;
    cfg.max_rejections = 8;
    const Result r = run_cfg(cfg);
    EXPECT_EQ(r.code, kOk) << r.err;
    EXPECT_NE(r.out.find("random minor-free graphs: 5"), std::string::npos);
    EXPECT_NE(r.out.find("counterexamples: 0"), std::string::npos);
}

TEST(Cli, UnknownCommand)
{
    RunConfig cfg;
    cfg.command = "frobnicate";
    EXPECT_EQ(run_cfg(cfg).code, kUsage);
}

TEST(Cli, EnumerateMinDegree)
{
    std::size_t count = 0;
    cli::detail::enumerate_min_degree(4, 3, [&](const Graph& g) {
        EXPECT_EQ(g, named::complete(4));
        ++count;
    });
    EXPECT_EQ(count, 1u);
    count = 0;
    cli::detail::enumerate_min_degree(4, 0, [&](const Graph&) { ++count; });
    EXPECT_EQ(count, 64u);
    count = 0;
    // Labeled 2-regular-or-more graphs on 4 vertices: C4 (3 labelings), K4 minus an edge (6), K4.
    cli::detail::enumerate_min_degree(4, 2, [&](const Graph&) { ++count; });
    EXPECT_EQ(count, 10u);
}

TEST(Cli, Fnv1a)
{
    EXPECT_EQ(fnv1a_hex(""), "cbf29ce484222325");
    EXPECT_EQ(fnv1a_hex("a"), "af63dc4c8601ec8c");
}
