#ifndef HADWIGER_GRAPH_HPP
#define HADWIGER_GRAPH_HPP

#include <algorithm>
#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "vertex_set.hpp"

namespace hadwiger {

using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected graph over sparse vertex ids in [0, kMaxVertices).
///
/// Ids are stable: induced subgraphs and contractions keep the ids of the
/// vertices that survive. Adjacency is one bitset per id, so copies are
/// cheap fixed-size value copies.
class Graph {
public:
    Graph() = default;

    /// Edgeless graph on {0, ..., n-1}.
    explicit Graph(std::size_t n) : vertices_(VertexSet::range(n)) {}

    Graph(std::size_t n, const std::vector<Edge>& edges) : Graph(n)
    {
        for (auto [u, v] : edges)
            add_edge(u, v);
    }

    void add_vertex(Vertex v) { vertices_.set(v); }

    /// Adds uv; a repeated edge is a no-op. Self-loops and unknown ids throw.
    void add_edge(Vertex u, Vertex v)
    {
        require_vertex(u);
        require_vertex(v);
        if (u == v)
            throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
        if (adj_[u].test(v))
            return;
        adj_[u].set(v);
        adj_[v].set(u);
        ++m_;
    }

    void remove_edge(Vertex u, Vertex v)
    {
        if (!has_edge(u, v))
            return;
        adj_[u].reset(v);
        adj_[v].reset(u);
        --m_;
    }

    void remove_vertex(Vertex v)
    {
        require_vertex(v);
        for (Vertex u : adj_[v])
            adj_[u].reset(v);
        m_ -= adj_[v].count();
        adj_[v] = VertexSet{};
        vertices_.reset(v);
    }

    const VertexSet& vertices() const { return vertices_; }
    bool has_vertex(Vertex v) const { return vertices_.test(v); }
    bool has_edge(Vertex u, Vertex v) const { return u < kMaxVertices && adj_[u].test(v); }

    const VertexSet& neighbors(Vertex v) const
    {
        require_vertex(v);
        return adj_[v];
    }
    std::size_t degree(Vertex v) const { return neighbors(v).count(); }

    /// Union of neighborhoods of s, minus s itself.
    VertexSet neighborhood(const VertexSet& s) const
    {
        VertexSet out;
        for (Vertex v : s)
            out |= adj_[v];
        return out - s;
    }

    std::size_t order() const { return vertices_.count(); }
    std::size_t size() const { return m_; }
    bool empty() const { return vertices_.empty(); }

    /// Edges as (u, v) with u < v, ascending.
    std::vector<Edge> edges() const
    {
        std::vector<Edge> out;
        out.reserve(m_);
        for (Vertex u : vertices_)
            for (Vertex v = adj_[u].next(u + 1); v != VertexSet::npos; v = adj_[u].next(v + 1))
                out.emplace_back(u, v);
        return out;
    }

    /// Largest id in use + 1 (0 for the empty graph).
    std::size_t id_bound() const
    {
        Vertex last = 0;
        bool any = false;
        for (Vertex v : vertices_) {
            last = v;
            any = true;
        }
        return any ? last + 1 : 0;
    }

    friend bool operator==(const Graph& a, const Graph& b)
    {
        if (a.vertices_ != b.vertices_ || a.m_ != b.m_)
            return false;
        for (Vertex v : a.vertices_)
            if (a.adj_[v] != b.adj_[v])
                return false;
        return true;
    }

    void require_vertex(Vertex v) const
    {
        if (!has_vertex(v))
            throw std::invalid_argument("unknown vertex id " + std::to_string(v));
    }
    void require_subset(const VertexSet& s) const
    {
        if (!s.subset_of(vertices_))
            throw std::invalid_argument("unknown vertex id " + std::to_string((s - vertices_).first()));
    }

private:
    VertexSet vertices_;
    std::array<VertexSet, kMaxVertices> adj_{};
    std::size_t m_ = 0;
};

/// g[s]; ids preserved.
inline Graph induced_subgraph(const Graph& g, const VertexSet& s)
{
    g.require_subset(s);
    Graph h;
    for (Vertex v : s)
        h.add_vertex(v);
    for (Vertex u : s)
        for (Vertex v : g.neighbors(u) & s)
            if (u < v)
                h.add_edge(u, v);
    return h;
}

inline Graph without_vertex(const Graph& g, Vertex v)
{
    Graph h = g;
    h.remove_vertex(v);
    return h;
}

struct Contraction {
    Graph graph;
    Vertex z;
};

/// Merges s into one vertex z = min(s). z becomes adjacent to N(s) \ s;
/// loops and parallel edges vanish. s need not induce a connected subgraph.
inline Contraction contract_set(const Graph& g, const VertexSet& s)
{
    if (s.empty())
        throw std::invalid_argument("contract_set: empty vertex set");
    g.require_subset(s);
    const Vertex z = s.first();
    const VertexSet outside = g.neighborhood(s);
    Graph h = g;
    for (Vertex v : s)
        h.remove_vertex(v);
    h.add_vertex(z);
    for (Vertex u : outside)
        h.add_edge(z, u);
    return {std::move(h), z};
}

struct MinDegree {
    Vertex vertex;
    std::size_t degree;
};

/// Minimum-degree vertex, smallest id on ties.
inline MinDegree min_degree_vertex(const Graph& g)
{
    if (g.empty())
        throw std::invalid_argument("min_degree_vertex: empty graph");
    MinDegree best{VertexSet::npos, static_cast<std::size_t>(-1)};
    for (Vertex v : g.vertices()) {
        std::size_t d = g.degree(v);
        if (d < best.degree)
            best = {v, d};
    }
    return best;
}

inline bool is_independent_set(const Graph& g, const VertexSet& s)
{
    g.require_subset(s);
    for (Vertex v : s)
        if (g.neighbors(v).intersects(s))
            return false;
    return true;
}

inline bool is_clique(const Graph& g, const VertexSet& s)
{
    g.require_subset(s);
    const std::size_t k = s.count();
    for (Vertex v : s)
        if ((g.neighbors(v) & s).count() != k - 1)
            return false;
    return true;
}

/// Vertices reachable from `from` inside `within`.
inline VertexSet reachable(const Graph& g, const VertexSet& from, const VertexSet& within)
{
    VertexSet seen = from & within;
    VertexSet frontier = seen;
    while (frontier.any()) {
        VertexSet next;
        for (Vertex v : frontier)
            next |= g.neighbors(v);
        next &= within;
        next -= seen;
        seen |= next;
        frontier = next;
    }
    return seen;
}

/// True iff g[s] is connected (the empty set counts as disconnected).
inline bool is_connected_subset(const Graph& g, const VertexSet& s)
{
    if (s.empty())
        return false;
    VertexSet start;
    start.set(s.first());
    return reachable(g, start, s) == s;
}

/// Total vertex -> color map. Colors are 0-based; -1 marks an unassigned id.
struct Coloring {
    std::vector<int> assignment;
    int palette_size = 0;

    bool has_color(Vertex v) const { return v < assignment.size() && assignment[v] >= 0; }
    int color_of(Vertex v) const { return has_color(v) ? assignment[v] : -1; }
    void assign(Vertex v, int c)
    {
        if (assignment.size() <= v)
            assignment.resize(v + 1, -1);
        assignment[v] = c;
    }

    std::size_t colors_used() const
    {
        std::vector<int> seen;
        for (int c : assignment)
            if (c >= 0)
                seen.push_back(c);
        std::sort(seen.begin(), seen.end());
        return static_cast<std::size_t>(std::unique(seen.begin(), seen.end()) - seen.begin());
    }

    friend bool operator==(const Coloring&, const Coloring&) = default;
};

/// Throws std::invalid_argument if c leaves a vertex of g uncolored or
/// colors an id outside g.
inline bool is_proper_coloring(const Graph& g, const Coloring& c)
{
    for (Vertex v = 0; v < c.assignment.size(); ++v)
        if (c.assignment[v] >= 0 && !g.has_vertex(v))
            throw std::invalid_argument("coloring assigns unknown vertex " + std::to_string(v));
    for (Vertex v : g.vertices())
        if (!c.has_color(v))
            throw std::invalid_argument("coloring is partial: vertex " + std::to_string(v)
                                        + " uncolored");
    for (auto [u, v] : g.edges())
        if (c.assignment[u] == c.assignment[v])
            return false;
    return true;
}

} // namespace hadwiger

#endif // HADWIGER_GRAPH_HPP
