#ifndef HADWIGER_COLORING_HPP
#define HADWIGER_COLORING_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "graph.hpp"
#include "independent_set.hpp"
#include "minor_oracle.hpp"

namespace hadwiger {

/// delta - alpha + 2. Requires delta >= alpha - 1.
inline int palette_bound(int delta, int alpha)
{
    if (delta < alpha - 1)
        throw std::invalid_argument("palette_bound: delta " + std::to_string(delta)
                                    + " < alpha - 1 = " + std::to_string(alpha - 1));
    return delta - alpha + 2;
}

/// The graph at some recursion level has minimum degree above the assumed
/// bound. `graph` is that level's graph, a minor of the input.
class min_degree_exceeded : public std::runtime_error {
public:
    min_degree_exceeded(Vertex v, std::size_t degree, int delta, Graph graph)
        : std::runtime_error("minimum degree " + std::to_string(degree) + " at vertex "
                             + std::to_string(v) + " exceeds assumed bound "
                             + std::to_string(delta))
        , vertex(v)
        , degree(degree)
        , graph(std::move(graph))
    {
    }
    Vertex vertex;
    std::size_t degree;
    Graph graph;
};

/// The neighborhood graph of `vertex` has a maximum independent set smaller
/// than alpha - (delta - d).
class independence_shortfall : public std::runtime_error {
public:
    independence_shortfall(Vertex v, Graph neighborhood, std::size_t found, std::size_t required)
        : std::runtime_error("neighborhood of vertex " + std::to_string(v)
                             + " has independence number " + std::to_string(found) + " < required "
                             + std::to_string(required))
        , vertex(v)
        , neighborhood(std::move(neighborhood))
        , found(found)
        , required(required)
    {
    }
    Vertex vertex;
    Graph neighborhood;
    std::size_t found;
    std::size_t required;
};

/// Audit mode found a K_t minor in a neighborhood graph, so the input was
/// not K_{t+1}-minor-free.
class neighborhood_minor_found : public std::runtime_error {
public:
    neighborhood_minor_found(Vertex v, Graph neighborhood, MinorModel model)
        : std::runtime_error("neighborhood of vertex " + std::to_string(v) + " has a K"
                             + std::to_string(model.order()) + " minor")
        , vertex(v)
        , neighborhood(std::move(neighborhood))
        , model(std::move(model))
    {
    }
    Vertex vertex;
    Graph neighborhood;
    MinorModel model;
};

/// Every palette color already appears on N(v) when v is lifted. Cannot
/// happen when the preconditions hold.
class palette_exhausted : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

struct Lemma1Step {
    Vertex chosen_v = 0;
    std::size_t degree_d = 0;
    VertexSet independent_T;
    std::optional<Vertex> contracted_z; // empty when d = 0
    int palette_color_of_v = -1;

    friend bool operator==(const Lemma1Step&, const Lemma1Step&) = default;
};

/// Steps in descent order; steps[0] acts on the input graph.
struct Lemma1Trace {
    std::vector<Lemma1Step> steps;
    std::size_t base_case = 0;

    friend bool operator==(const Lemma1Trace&, const Lemma1Trace&) = default;
};

struct ColorReport {
    Coloring coloring;
    std::size_t colors_used = 0;
    int palette_bound = 0;
    int delta_used = 0;
    int alpha_used = 0;
    bool proper = false;
    Lemma1Trace trace;
};

struct Lemma1Options {
    /// Check with the minor oracle that every neighborhood graph is
    /// K_t-minor-free before using it.
    bool audit = false;
    std::size_t oracle_cap = kDefaultOracleCap;
    std::size_t mis_cap = kDefaultMisCap;
};

namespace detail {

// Undoes the descent: base vertex gets color 0, isolated vertices copy the
// color of the smallest colored id, contracted stars give T the color of z
// and v the least color missing from N(v).
inline Coloring lift_lemma1(std::vector<Lemma1Step>& steps, const std::vector<VertexSet>& nbrs,
                            const Graph& base, int palette)
{
    Coloring c;
    c.palette_size = palette;
    if (!base.empty())
        c.assign(base.vertices().first(), 0);
    for (std::size_t i = steps.size(); i-- > 0;) {
        auto& step = steps[i];
        const Vertex v = step.chosen_v;
        if (!step.contracted_z) {
            int color = 0;
            for (Vertex u = 0; u < c.assignment.size(); ++u)
                if (u != v && c.has_color(u)) {
                    color = c.assignment[u];
                    break;
                }
            c.assign(v, color);
            step.palette_color_of_v = color;
            continue;
        }
        const int cz = c.color_of(*step.contracted_z);
        for (Vertex w : step.independent_T)
            c.assign(w, cz);
        std::vector<bool> present(static_cast<std::size_t>(palette) + 1, false);
        std::size_t distinct = 0;
        for (Vertex u : nbrs[i]) {
            const int cu = c.color_of(u);
            if (cu < 0 || cu >= palette)
                throw palette_exhausted("neighbor " + std::to_string(u) + " of vertex "
                                        + std::to_string(v) + " has color outside the palette");
            if (!present[static_cast<std::size_t>(cu)]) {
                present[static_cast<std::size_t>(cu)] = true;
                ++distinct;
            }
        }
        if (distinct > static_cast<std::size_t>(palette - 1))
            throw palette_exhausted("vertex " + std::to_string(v) + " sees " + std::to_string(distinct)
                                    + " colors on its neighbors; at most "
                                    + std::to_string(palette - 1) + " allowed");
        int free = 0;
        while (present[static_cast<std::size_t>(free)])
            ++free;
        c.assign(v, free);
        step.palette_color_of_v = free;
    }
    return c;
}

} // namespace detail

/// Colors a K_{t+1}-minor-free graph with at most delta - alpha + 2 colors
/// by repeatedly contracting a minimum-degree vertex v together with a
/// maximum independent set T of its neighborhood, then lifting the coloring
/// of the smaller graph back.
///
/// delta and alpha are the caller's assumptions: every K_{t+1}-minor-free
/// graph has a vertex of degree <= delta, and every K_t-minor-free graph on
/// delta vertices has an independent set of size alpha. When the input
/// breaks either assumption the run stops with min_degree_exceeded or
/// independence_shortfall, which carry the offending graph.
inline ColorReport color_lemma1(const Graph& g, int t, int delta, int alpha,
                                const Lemma1Options& opts = {})
{
    if (t < 2)
        throw std::invalid_argument("color_lemma1: t must be at least 2");
    if (delta < 1 || alpha < 1)
        throw std::invalid_argument("color_lemma1: delta and alpha must be positive");
    const int palette = palette_bound(delta, alpha);
    if (palette < 2)
        throw std::invalid_argument("color_lemma1: palette delta - alpha + 2 must be at least 2");

    ColorReport report;
    report.palette_bound = palette;
    report.delta_used = delta;
    report.alpha_used = alpha;

    std::vector<VertexSet> nbrs;
    Graph cur = g;
    while (cur.order() > 1) {
        const auto [v, d] = min_degree_vertex(cur);
        if (d > static_cast<std::size_t>(delta))
            throw min_degree_exceeded(v, d, delta, cur);
        if (d == 0) {
            report.trace.steps.push_back({v, 0, {}, std::nullopt, -1});
            nbrs.emplace_back();
            cur.remove_vertex(v);
            continue;
        }
        const VertexSet nv = cur.neighbors(v);
        Graph h = induced_subgraph(cur, nv);
        if (opts.audit)
            if (auto model = has_clique_minor(h, static_cast<std::size_t>(t), opts.oracle_cap))
                throw neighborhood_minor_found(v, std::move(h), std::move(*model));
        const VertexSet independent = max_independent_set(h, opts.mis_cap);
        const long long required = alpha - (delta - static_cast<long long>(d));
        if (static_cast<long long>(independent.count()) < required)
            throw independence_shortfall(v, std::move(h), independent.count(),
                                         static_cast<std::size_t>(required));
        VertexSet star = independent;
        star.set(v);
        auto [next, z] = contract_set(cur, star);
        report.trace.steps.push_back({v, d, independent, z, -1});
        nbrs.push_back(nv);
        cur = std::move(next);
    }
    report.trace.base_case = cur.order();

    report.coloring = detail::lift_lemma1(report.trace.steps, nbrs, cur, palette);
    report.colors_used = report.coloring.colors_used();
    report.proper = is_proper_coloring(g, report.coloring);
    if (!report.proper)
        throw std::logic_error("color_lemma1 produced an improper coloring");
    return report;
}

/// Re-executes a recorded trace on g without any search and returns the
/// resulting coloring. Throws std::invalid_argument if the trace does not
/// fit g.
inline Coloring replay_lemma1_trace(const Graph& g, const Lemma1Trace& trace, int palette)
{
    std::vector<Lemma1Step> steps = trace.steps;
    std::vector<VertexSet> nbrs;
    Graph cur = g;
    for (const auto& step : steps) {
        if (!cur.has_vertex(step.chosen_v))
            throw std::invalid_argument("trace names vertex " + std::to_string(step.chosen_v)
                                        + " absent at its step");
        if (cur.degree(step.chosen_v) != step.degree_d)
            throw std::invalid_argument("trace degree mismatch at vertex "
                                        + std::to_string(step.chosen_v));
        nbrs.push_back(cur.neighbors(step.chosen_v));
        if (!step.contracted_z) {
            cur.remove_vertex(step.chosen_v);
            continue;
        }
        VertexSet star = step.independent_T;
        star.set(step.chosen_v);
        if (!step.independent_T.subset_of(cur.neighbors(step.chosen_v)))
            throw std::invalid_argument("trace set T is not inside N(v)");
        auto [next, z] = contract_set(cur, star);
        if (z != *step.contracted_z)
            throw std::invalid_argument("trace contracted vertex mismatch");
        cur = std::move(next);
    }
    if (cur.order() != trace.base_case)
        throw std::invalid_argument("trace base case size mismatch");
    return detail::lift_lemma1(steps, nbrs, cur, palette);
}

/// Minimum-degree elimination order (smallest id on ties).
inline std::vector<Vertex> degeneracy_order(const Graph& g)
{
    std::vector<Vertex> order;
    order.reserve(g.order());
    Graph cur = g;
    while (!cur.empty()) {
        const Vertex v = min_degree_vertex(cur).vertex;
        order.push_back(v);
        cur.remove_vertex(v);
    }
    return order;
}

inline std::size_t degeneracy(const Graph& g)
{
    std::size_t k = 0;
    Graph cur = g;
    while (!cur.empty()) {
        const auto [v, d] = min_degree_vertex(cur);
        k = std::max(k, d);
        cur.remove_vertex(v);
    }
    return k;
}

/// Greedy coloring in reverse degeneracy order; uses at most
/// degeneracy(g) + 1 colors.
inline Coloring greedy_degeneracy_color(const Graph& g)
{
    const auto order = degeneracy_order(g);
    Coloring c;
    int palette = 0;
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        std::vector<bool> taken(order.size() + 1, false);
        for (Vertex u : g.neighbors(*it))
            if (c.has_color(u))
                taken[static_cast<std::size_t>(c.assignment[u])] = true;
        int color = 0;
        while (taken[static_cast<std::size_t>(color)])
            ++color;
        c.assign(*it, color);
        palette = std::max(palette, color + 1);
    }
    c.palette_size = palette;
    return c;
}

} // namespace hadwiger

#endif // HADWIGER_COLORING_HPP
