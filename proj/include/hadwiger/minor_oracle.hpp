#ifndef HADWIGER_MINOR_ORACLE_HPP
#define HADWIGER_MINOR_ORACLE_HPP

#include <cstddef>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "errors.hpp"
#include "extremal.hpp"
#include "graph.hpp"

namespace hadwiger {

inline constexpr std::size_t kDefaultOracleCap = 40;

/// Witness of a K_t minor: t disjoint connected branch sets, pairwise joined
/// by at least one host edge.
struct MinorModel {
    std::vector<VertexSet> branch_sets;

    std::size_t order() const { return branch_sets.size(); }
    friend bool operator==(const MinorModel&, const MinorModel&) = default;
};

/// Independent check of the three model invariants against g.
inline bool validate_model(const Graph& g, const MinorModel& m)
{
    VertexSet used;
    for (const auto& b : m.branch_sets) {
        if (!b.subset_of(g.vertices()) || b.intersects(used) || !is_connected_subset(g, b))
            return false;
        used |= b;
    }
    for (std::size_t i = 0; i < m.branch_sets.size(); ++i)
        for (std::size_t j = i + 1; j < m.branch_sets.size(); ++j)
            if (!g.neighborhood(m.branch_sets[i]).intersects(m.branch_sets[j]))
                return false;
    return true;
}

/// Lines `set_i: v1 v2 ...`, i from 0.
inline void write_model(std::ostream& out, const MinorModel& m)
{
    for (std::size_t i = 0; i < m.branch_sets.size(); ++i) {
        out << "set_" << i << ':';
        for (Vertex v : m.branch_sets[i])
            out << ' ' << v;
        out << '\n';
    }
}

/// True means g certainly has a K_{t_plus_1} minor because it exceeds the
/// known extremal edge count. False is inconclusive, including when g is
/// below the row's vertex minimum.
inline bool edge_count_forces_minor(const Graph& g, int t_plus_1)
{
    const auto row = extremal_bound(t_plus_1);
    if (!row)
        throw std::invalid_argument("edge_count_forces_minor: no extremal bound for K"
                                    + std::to_string(t_plus_1));
    const auto n = static_cast<long long>(g.order());
    if (n < row->min_vertices)
        return false;
    return static_cast<long long>(g.size()) > row->coeff * n - row->constant;
}

namespace detail {

/// Removes isolated vertices, and for t >= 3 peels degree-1 vertices until
/// none remain.
inline VertexSet minor_core(const Graph& g, std::size_t t)
{
    VertexSet live = g.vertices();
    bool changed = true;
    while (changed) {
        changed = false;
        for (Vertex v : live) {
            const std::size_t d = (g.neighbors(v) & live).count();
            if (d == 0 || (t >= 3 && d == 1)) {
                live.reset(v);
                changed = true;
            }
        }
    }
    return live;
}

inline std::size_t edges_within(const Graph& g, const VertexSet& s)
{
    std::size_t twice = 0;
    for (Vertex v : s)
        twice += (g.neighbors(v) & s).count();
    return twice / 2;
}

inline bool extend_clique(const Graph& g, VertexSet& clique, VertexSet cand, std::size_t need)
{
    if (need == 0)
        return true;
    while (cand.count() >= need) {
        const Vertex v = cand.first();
        cand.reset(v);
        clique.set(v);
        if (extend_clique(g, clique, cand & g.neighbors(v), need - 1))
            return true;
        clique.reset(v);
    }
    return false;
}

/// A K_t subgraph inside `live`, if the greedy pass or (t <= 8) exact search
/// finds one.
inline std::optional<VertexSet> find_clique(const Graph& g, const VertexSet& live, std::size_t t)
{
    for (Vertex v : live) {
        VertexSet clique{v};
        VertexSet cand = g.neighbors(v) & live;
        while (cand.any() && clique.count() < t) {
            Vertex best = cand.first();
            std::size_t best_deg = 0;
            for (Vertex u : cand) {
                const std::size_t d = (g.neighbors(u) & cand).count();
                if (d > best_deg) {
                    best = u;
                    best_deg = d;
                }
            }
            clique.set(best);
            cand &= g.neighbors(best);
        }
        if (clique.count() >= t)
            return clique;
    }
    if (t <= 8) {
        VertexSet clique;
        if (extend_clique(g, clique, live, t))
            return clique;
    }
    return std::nullopt;
}

/// Width of a min-fill elimination ordering of g[live]; an upper bound on
/// treewidth. Stops early once the width reaches `stop_at`.
inline std::size_t treewidth_upper_bound(const Graph& g, const VertexSet& live, std::size_t stop_at)
{
    std::vector<VertexSet> adj(kMaxVertices);
    for (Vertex v : live)
        adj[v] = g.neighbors(v) & live;
    VertexSet remaining = live;
    std::size_t width = 0;
    while (remaining.any()) {
        Vertex pick = VertexSet::npos;
        std::size_t best_fill = static_cast<std::size_t>(-1), best_deg = 0;
        for (Vertex v : remaining) {
            std::size_t fill = 0;
            for (Vertex u : adj[v])
                fill += (adj[v] - adj[u]).count() - 1;
            fill /= 2;
            const std::size_t d = adj[v].count();
            if (fill < best_fill || (fill == best_fill && d < best_deg)) {
                pick = v;
                best_fill = fill;
                best_deg = d;
            }
        }
        width = std::max(width, best_deg);
        if (width >= stop_at)
            return width;
        const VertexSet nb = adj[pick];
        for (Vertex u : nb) {
            adj[u] |= nb;
            adj[u].reset(u);
            adj[u].reset(pick);
        }
        remaining.reset(pick);
    }
    return width;
}

/// Backtracking over branch-set labelings. Every undecided vertex either
/// joins an existing branch set, opens the next one, or is discarded; sets
/// are numbered by opening order so each partial model is reached once.
/// Branch sets may be temporarily disconnected as long as the undecided
/// vertices can still join their pieces.
class CliqueMinorSearch {
public:
    CliqueMinorSearch(const Graph& g, const VertexSet& live, std::size_t t)
        : g_(g)
        , t_(t)
        , avail_(live)
    {
        sets_.reserve(t);
        reach_.reserve(t);
    }

    std::optional<MinorModel> run()
    {
        if (dfs())
            return MinorModel{sets_};
        return std::nullopt;
    }

private:
    bool adjacent(std::size_t i, std::size_t j) const { return reach_[i].intersects(sets_[j]); }

    bool dfs()
    {
        const std::size_t k = sets_.size();
        if (k + avail_.count() < t_ && k < t_)
            return false;

        bool all_adjacent = true;
        for (std::size_t i = 0; i < k && all_adjacent; ++i)
            for (std::size_t j = i + 1; j < k && all_adjacent; ++j)
                all_adjacent = adjacent(i, j);

        std::vector<bool> connected(k);
        bool all_connected = true;
        for (std::size_t l = 0; l < k; ++l) {
            connected[l] = is_connected_subset(g_, sets_[l]);
            all_connected = all_connected && connected[l];
        }
        if (k == t_ && all_adjacent && all_connected)
            return true;
        if (avail_.empty())
            return false;

        // Components of the undecided vertices.
        comps_.clear();
        VertexSet rest = avail_;
        while (rest.any()) {
            VertexSet seed{rest.first()};
            VertexSet c = reachable(g_, seed, avail_);
            comps_.push_back(c);
            rest -= c;
        }

        for (std::size_t l = 0; l < k; ++l) {
            if (connected[l])
                continue;
            VertexSet seed{sets_[l].first()};
            if (!sets_[l].subset_of(reachable(g_, seed, sets_[l] | avail_)))
                return false;
        }
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = i + 1; j < k; ++j) {
                if (adjacent(i, j))
                    continue;
                bool joinable = false;
                for (const auto& c : comps_)
                    if (c.intersects(reach_[i]) && c.intersects(reach_[j])) {
                        joinable = true;
                        break;
                    }
                if (!joinable)
                    return false;
            }
        // Unopened sets are pairwise adjacent, so all of them live in one
        // component, and that component must touch every open set.
        if (k < t_) {
            bool room = false;
            for (const auto& c : comps_)
                if (c.count() >= t_ - k && touches_all(c)) {
                    room = true;
                    break;
                }
            if (!room)
                return false;
        }

        const Vertex w = pick_vertex();
        const VertexSet comp = component_of(w);

        if (k == t_) {
            std::size_t touched = 0, which = 0;
            for (std::size_t l = 0; l < k; ++l)
                if (comp.intersects(reach_[l])) {
                    ++touched;
                    which = l;
                }
            if (touched == 0 || (touched == 1 && connected[which])) {
                // Nothing in this component can add an adjacency.
                avail_ -= comp;
                const bool found = dfs();
                avail_ |= comp;
                return found;
            }
        }

        avail_.reset(w);
        for (std::size_t l = 0; l < k; ++l) {
            if (!comp.intersects(reach_[l]))
                continue;
            const VertexSet saved = reach_[l];
            sets_[l].set(w);
            reach_[l] |= g_.neighbors(w);
            const bool found = dfs();
            if (found)
                return true;
            sets_[l].reset(w);
            reach_[l] = saved;
        }
        if (k < t_ && comp.count() >= t_ - k && touches_all(comp)) {
            sets_.push_back(VertexSet{w});
            reach_.push_back(g_.neighbors(w));
            if (dfs())
                return true;
            sets_.pop_back();
            reach_.pop_back();
        }
        if (dfs())
            return true;
        avail_.set(w);
        return false;
    }

    bool touches_all(const VertexSet& c) const
    {
        for (const auto& r : reach_)
            if (!c.intersects(r))
                return false;
        return true;
    }

    VertexSet component_of(Vertex w) const
    {
        for (const auto& c : comps_)
            if (c.test(w))
                return c;
        return {};
    }

    // Most open sets adjacent first, then highest degree among undecided
    // vertices, then smallest id.
    Vertex pick_vertex() const
    {
        Vertex best = VertexSet::npos;
        std::size_t best_score = 0;
        for (Vertex v : avail_) {
            std::size_t touching = 0;
            for (const auto& r : reach_)
                touching += r.test(v) ? 1 : 0;
            const std::size_t score = touching * kMaxVertices + (g_.neighbors(v) & avail_).count() + 1;
            if (score > best_score) {
                best = v;
                best_score = score;
            }
        }
        return best;
    }

    const Graph& g_;
    std::size_t t_;
    VertexSet avail_;
    std::vector<VertexSet> sets_;
    std::vector<VertexSet> reach_; // union of member neighborhoods, per set
    std::vector<VertexSet> comps_; // scratch, rebuilt at every node
};

} // namespace detail

/// Exact K_t minor test. Returns a witness model, or nullopt when g has no
/// K_t minor. Throws resource_limit_error when g has more than `cap`
/// vertices.
inline std::optional<MinorModel> has_clique_minor(const Graph& g, std::size_t t,
                                                  std::size_t cap = kDefaultOracleCap)
{
    if (t == 0)
        throw std::invalid_argument("has_clique_minor: t must be at least 1");
    if (g.order() > cap)
        throw resource_limit_error("has_clique_minor", cap, g.order());
    if (t == 1) {
        if (g.empty())
            return std::nullopt;
        return MinorModel{{VertexSet{g.vertices().first()}}};
    }

    const VertexSet live = detail::minor_core(g, t);
    if (live.count() < t || detail::edges_within(g, live) < t * (t - 1) / 2)
        return std::nullopt;

    if (auto clique = detail::find_clique(g, live, t)) {
        MinorModel m;
        for (Vertex v : *clique) {
            if (m.branch_sets.size() == t)
                break;
            m.branch_sets.push_back(VertexSet{v});
        }
        return m;
    }
    // A K_t minor forces treewidth >= t-1.
    if (detail::treewidth_upper_bound(g, live, t - 1) < t - 1)
        return std::nullopt;

    return detail::CliqueMinorSearch(g, live, t).run();
}

} // namespace hadwiger

#endif // HADWIGER_MINOR_ORACLE_HPP
