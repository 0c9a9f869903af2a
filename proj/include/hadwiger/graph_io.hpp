#ifndef HADWIGER_GRAPH_IO_HPP
#define HADWIGER_GRAPH_IO_HPP

#include <array>
#include <cctype>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "errors.hpp"
#include "graph.hpp"

namespace hadwiger {

namespace detail {

inline bool blank_or_comment(const std::string& line)
{
    for (char ch : line) {
        if (ch == '#')
            return true;
        if (!std::isspace(static_cast<unsigned char>(ch)))
            return false;
    }
    return true;
}

inline void expect_end(std::istringstream& iss, std::size_t ln)
{
    std::string rest;
    if (iss >> rest)
        throw parse_error("unexpected trailing token '" + rest + "'", ln);
}

inline void check_vertex_count(long long n, std::size_t ln)
{
    if (n < 0)
        throw parse_error("negative vertex count", ln);
    if (static_cast<unsigned long long>(n) > kMaxVertices)
        throw parse_error("vertex count " + std::to_string(n) + " exceeds capacity "
                              + std::to_string(kMaxVertices),
                          ln);
}

} // namespace detail

/// Edge-list text: header `n m`, then m lines `u v` with 0-based ids.
/// Blank lines and `#` comments are skipped.
inline Graph read_edge_list(std::istream& in)
{
    std::string line;
    std::size_t ln = 0;
    bool have_header = false;
    long long n = 0, m = 0, seen = 0;
    Graph g;
    while (std::getline(in, line)) {
        ++ln;
        if (detail::blank_or_comment(line))
            continue;
        std::istringstream iss(line);
        if (!have_header) {
            if (!(iss >> n >> m))
                throw parse_error("expected header 'n m'", ln);
            detail::expect_end(iss, ln);
            detail::check_vertex_count(n, ln);
            if (m < 0)
                throw parse_error("negative edge count", ln);
            g = Graph(static_cast<std::size_t>(n));
            have_header = true;
            continue;
        }
        long long u = 0, v = 0;
        if (!(iss >> u >> v))
            throw parse_error("expected edge 'u v'", ln);
        detail::expect_end(iss, ln);
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw parse_error("vertex id out of range [0, " + std::to_string(n) + ")", ln);
        if (u == v)
            throw parse_error("self-loop", ln);
        if (g.has_edge(static_cast<Vertex>(u), static_cast<Vertex>(v)))
            throw parse_error("duplicate edge", ln);
        if (++seen > m)
            throw parse_error("more edges than declared in header", ln);
        g.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
    if (!have_header)
        throw parse_error("missing header 'n m'", ln == 0 ? 1 : ln);
    if (seen != m)
        throw parse_error("header declares " + std::to_string(m) + " edges, found "
                              + std::to_string(seen),
                          ln);
    return g;
}

/// DIMACS `.col`: `c` comments, `p edge n m`, `e u v` with 1-based ids.
/// Repeated edges (common in published instances) are merged.
inline Graph read_dimacs(std::istream& in)
{
    std::string line;
    std::size_t ln = 0;
    bool have_header = false;
    long long n = 0;
    Graph g;
    while (std::getline(in, line)) {
        ++ln;
        if (detail::blank_or_comment(line))
            continue;
        std::istringstream iss(line);
        std::string tag;
        iss >> tag;
        if (tag == "c")
            continue;
        if (tag == "p") {
            if (have_header)
                throw parse_error("second 'p' line", ln);
            std::string kind;
            long long m = 0;
            if (!(iss >> kind >> n >> m) || (kind != "edge" && kind != "edges" && kind != "col"))
                throw parse_error("expected 'p edge n m'", ln);
            detail::expect_end(iss, ln);
            detail::check_vertex_count(n, ln);
            g = Graph(static_cast<std::size_t>(n));
            have_header = true;
        } else if (tag == "e") {
            if (!have_header)
                throw parse_error("edge before 'p' line", ln);
            long long u = 0, v = 0;
            if (!(iss >> u >> v))
                throw parse_error("expected 'e u v'", ln);
            detail::expect_end(iss, ln);
            if (u < 1 || v < 1 || u > n || v > n)
                throw parse_error("vertex id out of range [1, " + std::to_string(n) + "]", ln);
            if (u == v)
                throw parse_error("self-loop", ln);
            g.add_edge(static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1));
        } else {
            throw parse_error("unknown line type '" + tag + "'", ln);
        }
    }
    if (!have_header)
        throw parse_error("missing 'p edge n m' line", ln == 0 ? 1 : ln);
    return g;
}

/// Detects DIMACS by its first meaningful line starting with `c` or `p`.
inline Graph read_graph(std::istream& in)
{
    std::stringstream buf;
    buf << in.rdbuf();
    const std::string text = buf.str();
    std::istringstream probe(text);
    std::string line;
    bool dimacs = false;
    while (std::getline(probe, line)) {
        if (detail::blank_or_comment(line))
            continue;
        std::istringstream iss(line);
        std::string tag;
        iss >> tag;
        dimacs = tag == "c" || tag == "p";
        break;
    }
    std::istringstream in2(text);
    return dimacs ? read_dimacs(in2) : read_edge_list(in2);
}

inline Graph read_graph_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open '" + path + "'");
    return read_graph(in);
}

/// Writes the edge-list format: `n m`, then `u v` with u < v ascending.
/// Ids are renumbered densely in ascending order, which is the identity
/// for graphs on {0, ..., n-1}.
inline void write_edge_list(std::ostream& out, const Graph& g)
{
    std::array<Vertex, kMaxVertices> dense{};
    Vertex next = 0;
    for (Vertex v : g.vertices())
        dense[v] = next++;
    out << g.order() << ' ' << g.size() << '\n';
    for (auto [u, v] : g.edges())
        out << dense[u] << ' ' << dense[v] << '\n';
}

inline std::string to_edge_list(const Graph& g)
{
    std::ostringstream os;
    write_edge_list(os, g);
    return os.str();
}

} // namespace hadwiger

#endif // HADWIGER_GRAPH_IO_HPP
