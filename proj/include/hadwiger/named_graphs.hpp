#ifndef HADWIGER_NAMED_GRAPHS_HPP
#define HADWIGER_NAMED_GRAPHS_HPP

#include <numeric>
#include <stdexcept>
#include <vector>

#include "graph.hpp"

namespace hadwiger::named {

inline Graph complete(std::size_t n)
{
    Graph g(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            g.add_edge(u, v);
    return g;
}

inline Graph path(std::size_t n)
{
    Graph g(n);
    for (Vertex v = 1; v < n; ++v)
        g.add_edge(v - 1, v);
    return g;
}

inline Graph cycle(std::size_t n)
{
    if (n < 3)
        throw std::invalid_argument("cycle needs at least 3 vertices");
    Graph g = path(n);
    g.add_edge(0, static_cast<Vertex>(n - 1));
    return g;
}

/// K_{1,leaves} with centre 0.
inline Graph star(std::size_t leaves)
{
    Graph g(leaves + 1);
    for (Vertex v = 1; v <= leaves; ++v)
        g.add_edge(0, v);
    return g;
}

/// Outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5.
inline Graph petersen()
{
    Graph g(10);
    for (Vertex i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);
        g.add_edge(5 + i, 5 + (i + 2) % 5);
        g.add_edge(i, 5 + i);
    }
    return g;
}

/// Parts occupy consecutive id ranges in the given order.
inline Graph complete_multipartite(const std::vector<std::size_t>& parts)
{
    const std::size_t n = std::accumulate(parts.begin(), parts.end(), std::size_t{0});
    Graph g(n);
    std::vector<std::size_t> part_of;
    for (std::size_t p = 0; p < parts.size(); ++p)
        part_of.insert(part_of.end(), parts[p], p);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (part_of[u] != part_of[v])
                g.add_edge(u, v);
    return g;
}

} // namespace hadwiger::named

#endif // HADWIGER_NAMED_GRAPHS_HPP
