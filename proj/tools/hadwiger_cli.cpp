#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "commands.hpp"

using hadwiger::cli::OutputFormat;
using hadwiger::cli::RunConfig;

namespace {

std::vector<std::size_t> parse_sizes(const std::string& s)
{
    std::vector<std::size_t> out;
    std::stringstream ss(s);
    for (std::string item; std::getline(ss, item, ',');)
        out.push_back(std::stoul(item));
    return out;
}

// "2,2,2,2,2;2,2,2,3,3" -> two blocks
std::vector<std::vector<std::size_t>> parse_blocks(const std::string& s)
{
    std::vector<std::vector<std::size_t>> out;
    std::stringstream ss(s);
    for (std::string block; std::getline(ss, block, ';');)
        out.push_back(parse_sizes(block));
    return out;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Clique-minor tools: contraction coloring, exact K_t minor tests, bound tables"};
    app.require_subcommand(1);
    app.set_version_flag("--version", hadwiger::cli::kToolVersion);

    RunConfig cfg;
    cfg.oracle_cap = hadwiger::cli::default_oracle_cap_from_env();
    std::string format = "text";
    std::string mode = "proven";
    std::string parts, blocks;
    int t = 0, delta = 0, alpha = 0;
    long long n = 0;

    auto common = [&](CLI::App* sub) {
        sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "structured"}));
        sub->add_option("--cap", cfg.oracle_cap, "Minor oracle vertex cap (default 40 or $HADWIGER_ORACLE_CAP)")
            ->check(CLI::PositiveNumber);
    };

    auto* color = app.add_subcommand("color", "Color a graph with the contraction algorithm");
    color->add_option("input", cfg.input, "Edge-list or DIMACS .col file")->required();
    color->add_option("--t", t, "The graph is assumed K_{t+1}-minor-free (2..10)");
    color->add_option("--delta", delta, "Override the assumed minimum-degree bound");
    color->add_option("--alpha", alpha, "Override the assumed independence guarantee");
    color->add_option("--mode", mode, "Bound row to use")->check(CLI::IsMember({"proven", "conjectured"}));
    color->add_flag("--audit", cfg.audit, "Check every neighborhood graph is K_t-minor-free");
    common(color);

    auto* check = app.add_subcommand("check-minor", "Decide whether a graph has a K_t minor");
    check->add_option("input", cfg.input, "Edge-list or DIMACS .col file")->required();
    check->add_option("--t", t, "Clique order")->required();
    common(check);

    auto* alpha_cmd = app.add_subcommand("alpha", "Independent-set guarantees for K_{t+1}-minor-free graphs");
    alpha_cmd->add_option("--n", n, "Vertex count")->required();
    alpha_cmd->add_option("--t", t, "The graphs are K_{t+1}-minor-free")->required();
    common(alpha_cmd);

    auto* table = app.add_subcommand("bounds-table", "Per-t chromatic bound table");
    table->add_flag("--conjectured", cfg.conjectured, "Use the conjectured minimum-degree rows");
    common(table);

    auto* gen = app.add_subcommand("gen", "Generate a clique-minor-free graph");
    gen->add_option("--family", cfg.family, "forest | series_parallel | planar_triangulation | "
                                            "complete_multipartite | clique_paste | filtered_random")
        ->required();
    gen->add_option("--n", n, "Vertex count (size-driven families)");
    gen->add_option("--seed", cfg.seed, "RNG seed");
    gen->add_option("--parts", parts, "Part sizes, e.g. 2,2,2,2,2");
    gen->add_option("--blocks", blocks, "Blocks for clique_paste, e.g. '2,2,2,2,2;2,2,2,2,2'");
    gen->add_option("--paste-k", cfg.paste_k, "Paste clique size");
    gen->add_option("--target", cfg.target, "Excluded clique minor order (filtered_random)");
    gen->add_option("--max-rejections", cfg.max_rejections, "Stop after this many consecutive rejections");
    gen->add_option("-o,--output", cfg.output, "Edge-list output file (sidecar: <file>.meta.json)");
    common(gen);

    auto* search = app.add_subcommand("search-mindegree", "Look for counterexamples to a conjectured minimum-degree bound");
    search->add_option("--t", t, "6, 7 or 8")->required();
    search->add_option("--seed", cfg.seed, "First seed for random graphs");
    search->add_option("--n-min", cfg.n_min, "Smallest vertex count");
    search->add_option("--n-max", cfg.n_max, "Largest vertex count");
    search->add_option("--samples", cfg.samples, "Number of random minor-free graphs");
    search->add_option("--exhaustive-max-n", cfg.exhaustive_max_n, "Enumerate all graphs up to this size (<= 9)");
    search->add_option("--max-rejections", cfg.max_rejections, "Random growth stops after this many rejections");
    search->add_flag("!--no-seeded", cfg.seeded, "Skip the extremal seed graphs");
    common(search);

    CLI11_PARSE(app, argc, argv);

    for (auto* sub : app.get_subcommands())
        cfg.command = sub->get_name();
    auto* sub = app.get_subcommands().front();
    auto given = [sub](const char* name) {
        const auto* opt = sub->get_option_no_throw(name);
        return opt && opt->count() > 0;
    };
    if (given("--t"))
        cfg.t = t;
    if (given("--delta"))
        cfg.delta = delta;
    if (given("--alpha"))
        cfg.alpha = alpha;
    if (given("--n"))
        cfg.n = n;
    if (given("--mode")) {
        cfg.mode_given = true;
        cfg.mode = mode == "conjectured" ? hadwiger::Provenance::conjectured : hadwiger::Provenance::proven;
    }
    cfg.format = format == "structured" ? OutputFormat::structured : OutputFormat::text;
    try {
        if (!parts.empty())
            cfg.parts = parse_sizes(parts);
        if (!blocks.empty())
            cfg.blocks = parse_blocks(blocks);
    } catch (const std::exception&) {
        std::cerr << "error: malformed --parts/--blocks list\n";
        return hadwiger::cli::kUsage;
    }
    return hadwiger::cli::run(cfg, std::cout, std::cerr);
}
