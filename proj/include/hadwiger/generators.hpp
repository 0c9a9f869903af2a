#ifndef HADWIGER_GENERATORS_HPP
#define HADWIGER_GENERATORS_HPP

#include <array>
#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "graph.hpp"
#include "minor_oracle.hpp"
#include "named_graphs.hpp"

namespace hadwiger {

enum class Family {
    forest,
    series_parallel,
    planar_triangulation,
    complete_multipartite,
    clique_paste,
    filtered_random,
};

inline const char* to_string(Family f)
{
    switch (f) {
    case Family::forest: return "forest";
    case Family::series_parallel: return "series_parallel";
    case Family::planar_triangulation: return "planar_triangulation";
    case Family::complete_multipartite: return "complete_multipartite";
    case Family::clique_paste: return "clique_paste";
    case Family::filtered_random: return "filtered_random";
    }
    return "?";
}

inline Family family_from_string(const std::string& s)
{
    for (Family f : {Family::forest, Family::series_parallel, Family::planar_triangulation,
                     Family::complete_multipartite, Family::clique_paste, Family::filtered_random})
        if (s == to_string(f))
            return f;
    throw std::invalid_argument("unknown graph family '" + s + "'");
}

/// Everything that determines a generated graph.
///
/// `n` drives forest, series_parallel, planar_triangulation and
/// filtered_random; the multipartite families take their size from `parts`
/// and `blocks`.
struct GenSpec {
    Family family = Family::forest;
    std::size_t n = 1;
    std::uint64_t seed = 0;
    std::vector<std::size_t> parts;               // complete_multipartite
    std::vector<std::vector<std::size_t>> blocks; // clique_paste, each block complete multipartite
    std::size_t paste_k = 0;                      // clique_paste
    int target_t_plus_1 = 0;                      // excluded clique minor, 0 = family default
    std::size_t max_rejections = 64;              // filtered_random
    std::size_t oracle_cap = kDefaultOracleCap;
};

/// The K_{t+1} minor a family excludes, when known.
inline std::optional<int> family_target(const GenSpec& spec)
{
    switch (spec.family) {
    case Family::forest: return 3;
    case Family::series_parallel: return 4;
    case Family::planar_triangulation: return 5;
    default: break;
    }
    if (spec.target_t_plus_1 > 0)
        return spec.target_t_plus_1;
    return std::nullopt;
}

namespace detail {

// Portable bounded draw; std::uniform_int_distribution differs between
// standard libraries.
inline std::size_t uniform_below(std::mt19937_64& rng, std::size_t bound)
{
    const std::uint64_t b = bound;
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % b;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return static_cast<std::size_t>(x % b);
}

template <typename T>
void shuffle(std::vector<T>& v, std::mt19937_64& rng)
{
    for (std::size_t i = v.size(); i > 1; --i)
        std::swap(v[i - 1], v[uniform_below(rng, i)]);
}

inline void collect_cliques(const Graph& g, VertexSet cur, VertexSet cand, std::size_t need,
                            std::vector<VertexSet>& out)
{
    if (need == 0) {
        out.push_back(cur);
        return;
    }
    while (cand.count() >= need) {
        const Vertex v = cand.first();
        cand.reset(v);
        VertexSet next = cur;
        next.set(v);
        collect_cliques(g, next, cand & g.neighbors(v), need - 1, out);
    }
}

/// All k-cliques in ascending lexicographic order.
inline std::vector<VertexSet> cliques_of_size(const Graph& g, std::size_t k)
{
    std::vector<VertexSet> out;
    collect_cliques(g, {}, g.vertices(), k, out);
    return out;
}

inline void require_n(const GenSpec& spec)
{
    if (spec.n < 1)
        throw std::invalid_argument(std::string(to_string(spec.family)) + ": n must be at least 1");
    VertexSet::check_id(spec.n - 1);
}

inline Graph gen_forest(const GenSpec& spec, std::mt19937_64& rng)
{
    Graph g(spec.n);
    for (Vertex v = 1; v < spec.n; ++v)
        if (uniform_below(rng, 10) != 0)
            g.add_edge(v, static_cast<Vertex>(uniform_below(rng, v)));
    return g;
}

// Grows from one edge by parallel steps (new vertex joined to both ends of
// an edge), series steps (subdivide an edge) and pendant vertices.
inline Graph gen_series_parallel(const GenSpec& spec, std::mt19937_64& rng)
{
    Graph g(spec.n);
    if (spec.n < 2)
        return g;
    g.add_edge(0, 1);
    std::vector<Edge> edges{{0, 1}};
    for (Vertex v = 2; v < spec.n; ++v) {
        const std::size_t at = uniform_below(rng, edges.size());
        const auto [a, b] = edges[at];
        switch (uniform_below(rng, 3)) {
        case 0:
            g.add_edge(v, a);
            g.add_edge(v, b);
            edges.emplace_back(a, v);
            edges.emplace_back(b, v);
            break;
        case 1:
            g.remove_edge(a, b);
            g.add_edge(a, v);
            g.add_edge(v, b);
            edges[at] = {a, v};
            edges.emplace_back(v, b);
            break;
        default:
            g.add_edge(v, a);
            edges.emplace_back(a, v);
            break;
        }
    }
    return g;
}

// Stacked triangulation: each new vertex goes into a random face of the
// current triangulation (outer face included) and joins its three corners.
inline Graph gen_planar_triangulation(const GenSpec& spec, std::mt19937_64& rng)
{
    Graph g(spec.n);
    if (spec.n < 3) {
        if (spec.n == 2)
            g.add_edge(0, 1);
        return g;
    }
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(0, 2);
    std::vector<std::array<Vertex, 3>> faces{{0, 1, 2}, {0, 1, 2}};
    for (Vertex v = 3; v < spec.n; ++v) {
        const std::size_t at = uniform_below(rng, faces.size());
        const auto [a, b, c] = faces[at];
        g.add_edge(v, a);
        g.add_edge(v, b);
        g.add_edge(v, c);
        faces[at] = {a, b, v};
        faces.push_back({b, c, v});
        faces.push_back({a, c, v});
    }
    return g;
}

inline Graph multipartite_block(const std::vector<std::size_t>& parts)
{
    if (parts.empty())
        throw std::invalid_argument("complete_multipartite: no parts given");
    std::size_t n = 0;
    for (auto p : parts) {
        if (p == 0)
            throw std::invalid_argument("complete_multipartite: empty part");
        n += p;
    }
    VertexSet::check_id(n - 1);
    return named::complete_multipartite(parts);
}

// Glues each block onto the growing graph along a random k-clique of each,
// matched by a random bijection. No edge is ever removed.
inline Graph gen_clique_paste(const GenSpec& spec, std::mt19937_64& rng)
{
    if (spec.blocks.empty())
        throw std::invalid_argument("clique_paste: no blocks given");
    const std::size_t k = spec.paste_k;
    if (k < 1)
        throw std::invalid_argument("clique_paste: paste clique size must be at least 1");
    for (const auto& b : spec.blocks)
        if (b.size() < k)
            throw std::invalid_argument("clique_paste: paste clique size " + std::to_string(k)
                                        + " exceeds a block's clique number "
                                        + std::to_string(b.size()));

    Graph g = multipartite_block(spec.blocks.front());
    for (std::size_t i = 1; i < spec.blocks.size(); ++i) {
        const Graph block = multipartite_block(spec.blocks[i]);
        const auto host_cliques = cliques_of_size(g, k);
        const auto block_cliques = cliques_of_size(block, k);
        const auto host = host_cliques[uniform_below(rng, host_cliques.size())].to_vector();
        auto glued = block_cliques[uniform_below(rng, block_cliques.size())].to_vector();
        shuffle(glued, rng);

        std::vector<Vertex> image(block.id_bound(), VertexSet::npos);
        for (std::size_t j = 0; j < k; ++j)
            image[glued[j]] = host[j];
        Vertex next = static_cast<Vertex>(g.id_bound());
        for (Vertex v : block.vertices())
            if (image[v] == VertexSet::npos) {
                image[v] = next++;
                g.add_vertex(image[v]);
            }
        for (auto [u, v] : block.edges())
            g.add_edge(image[u], image[v]);
    }
    return g;
}

inline Graph gen_filtered_random(const GenSpec& spec, std::mt19937_64& rng)
{
    if (spec.target_t_plus_1 < 1)
        throw std::invalid_argument("filtered_random: target clique order must be positive");
    if (spec.n > spec.oracle_cap)
        throw resource_limit_error("filtered_random", spec.oracle_cap, spec.n);
    const auto target = static_cast<std::size_t>(spec.target_t_plus_1);
    Graph g(spec.n);
    std::vector<Edge> open;
    for (Vertex u = 0; u < spec.n; ++u)
        for (Vertex v = u + 1; v < spec.n; ++v)
            open.emplace_back(u, v);
    // Adding edges never destroys a minor, so a rejected pair stays rejected.
    std::size_t consecutive = 0;
    while (!open.empty() && consecutive < spec.max_rejections) {
        const std::size_t at = uniform_below(rng, open.size());
        const auto [u, v] = open[at];
        open[at] = open.back();
        open.pop_back();
        g.add_edge(u, v);
        if (has_clique_minor(g, target, spec.oracle_cap)) {
            g.remove_edge(u, v);
            ++consecutive;
        } else {
            consecutive = 0;
        }
    }
    return g;
}

} // namespace detail

/// Deterministic in `spec`. Every family excludes its target clique minor
/// by construction, except filtered_random which is checked edge by edge.
inline Graph generate(const GenSpec& spec)
{
    std::mt19937_64 rng(spec.seed);
    switch (spec.family) {
    case Family::forest:
        detail::require_n(spec);
        return detail::gen_forest(spec, rng);
    case Family::series_parallel:
        detail::require_n(spec);
        return detail::gen_series_parallel(spec, rng);
    case Family::planar_triangulation:
        detail::require_n(spec);
        return detail::gen_planar_triangulation(spec, rng);
    case Family::complete_multipartite:
        return detail::multipartite_block(spec.parts);
    case Family::clique_paste:
        return detail::gen_clique_paste(spec, rng);
    case Family::filtered_random:
        detail::require_n(spec);
        return detail::gen_filtered_random(spec, rng);
    }
    throw std::invalid_argument("generate: unknown family");
}

/// True iff g has no K_{t_plus_1} minor.
inline bool certify(const Graph& g, int t_plus_1, std::size_t cap = kDefaultOracleCap)
{
    if (t_plus_1 < 1)
        throw std::invalid_argument("certify: clique order must be positive");
    return !has_clique_minor(g, static_cast<std::size_t>(t_plus_1), cap);
}

} // namespace hadwiger

#endif // HADWIGER_GENERATORS_HPP
