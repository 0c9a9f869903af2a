#ifndef HADWIGER_INDEPENDENT_SET_HPP
#define HADWIGER_INDEPENDENT_SET_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "errors.hpp"
#include "graph.hpp"

namespace hadwiger {

inline constexpr std::size_t kDefaultMisCap = 64;

namespace detail {

/// Branch and bound for the independence number of g[p]: branch in/out on a
/// maximum-degree vertex, prune with a greedy clique cover.
class IndependenceNumber {
public:
    explicit IndependenceNumber(const Graph& g) : g_(g) {}

    std::size_t operator()(const VertexSet& p)
    {
        best_ = 0;
        search(p, 0);
        return best_;
    }

private:
    void search(VertexSet p, std::size_t cur)
    {
        // Degree <= 1 vertices always belong to some maximum set.
        for (bool again = true; again;) {
            again = false;
            for (Vertex v : p) {
                const VertexSet nb = g_.neighbors(v) & p;
                if (nb.count() <= 1) {
                    ++cur;
                    p -= nb;
                    p.reset(v);
                    again = true;
                    break;
                }
            }
        }
        if (p.empty()) {
            best_ = std::max(best_, cur);
            return;
        }
        if (cur + clique_cover(p) <= best_)
            return;

        Vertex pivot = p.first();
        std::size_t pivot_deg = 0;
        for (Vertex v : p) {
            const std::size_t d = (g_.neighbors(v) & p).count();
            if (d > pivot_deg) {
                pivot = v;
                pivot_deg = d;
            }
        }
        VertexSet in = p - g_.neighbors(pivot);
        in.reset(pivot);
        search(in, cur + 1);
        p.reset(pivot);
        search(p, cur);
    }

    std::size_t clique_cover(const VertexSet& p)
    {
        cliques_.clear();
        for (Vertex v : p) {
            bool placed = false;
            for (auto& c : cliques_)
                if (c.subset_of(g_.neighbors(v))) {
                    c.set(v);
                    placed = true;
                    break;
                }
            if (!placed)
                cliques_.push_back(VertexSet{v});
        }
        return cliques_.size();
    }

    const Graph& g_;
    std::size_t best_ = 0;
    std::vector<VertexSet> cliques_;
};

} // namespace detail

/// Exact maximum independent set. Among all maximum sets, returns the
/// lexicographically least one (ascending ids).
inline VertexSet max_independent_set(const Graph& g, std::size_t cap = kDefaultMisCap)
{
    if (g.order() > cap)
        throw resource_limit_error("max_independent_set", cap, g.order());
    detail::IndependenceNumber alpha(g);
    VertexSet pool = g.vertices();
    std::size_t need = alpha(pool);
    VertexSet chosen;
    for (Vertex v : g.vertices()) {
        if (need == 0)
            break;
        if (!pool.test(v))
            continue;
        VertexSet rest = pool - g.neighbors(v);
        rest.reset(v);
        if (!(g.neighbors(v) & pool).any() || alpha(rest) + 1 == need) {
            chosen.set(v);
            pool = rest;
            --need;
        } else {
            pool.reset(v);
        }
    }
    return chosen;
}

inline std::size_t independence_number(const Graph& g, std::size_t cap = kDefaultMisCap)
{
    if (g.order() > cap)
        throw resource_limit_error("independence_number", cap, g.order());
    return detail::IndependenceNumber(g)(g.vertices());
}

/// (80 - sqrt(5392)) / 126 = 0.0521410...
inline double gamma_constant()
{
    return static_cast<double>((80.0L - std::sqrt(5392.0L)) / 126.0L);
}

enum class AlphaVariant { a, b, c };

inline char to_char(AlphaVariant v)
{
    return v == AlphaVariant::a ? 'a' : v == AlphaVariant::b ? 'b' : 'c';
}

/// Guaranteed independent-set size for an n-vertex K_{t+1}-minor-free graph.
struct AlphaBound {
    long long n;
    long long t;
    AlphaVariant variant;
    long long alpha;
};

namespace detail {

inline long long ceil_div(long long a, long long b) { return a >= 0 ? (a + b - 1) / b : -((-a) / b); }

// (2 - gamma) * alpha * t >= n, decided exactly: with s = sqrt(5392) the
// inequality reads s*alpha*t >= 126n - 172*alpha*t.
inline bool variant_c_holds(long long n, long long t, long long alpha)
{
    const __int128 at = static_cast<__int128>(alpha) * t;
    const __int128 rhs = static_cast<__int128>(126) * n - 172 * at;
    if (rhs <= 0)
        return true;
    return 5392 * at * at >= rhs * rhs;
}

} // namespace detail

/// Smallest positive alpha satisfying the chosen inequality:
///   (a) (2alpha - 1) t >= n
///   (b) (2alpha - 1)(2t - 5) >= 2n - 5, t >= 5
///   (c) (2 - gamma) alpha t >= n
inline AlphaBound lemma2_alpha(long long n, long long t, AlphaVariant variant)
{
    if (n < 1)
        throw std::invalid_argument("lemma2_alpha: n must be positive");
    if (t < 2)
        throw std::invalid_argument("lemma2_alpha: t must be at least 2");
    long long alpha = 1;
    switch (variant) {
    case AlphaVariant::a:
        alpha = detail::ceil_div(detail::ceil_div(n, t) + 1, 2);
        break;
    case AlphaVariant::b:
        if (t < 5)
            throw std::invalid_argument("lemma2_alpha: variant b needs t >= 5, got "
                                        + std::to_string(t));
        if (2 * n - 5 > 0)
            alpha = detail::ceil_div(detail::ceil_div(2 * n - 5, 2 * t - 5) + 1, 2);
        break;
    case AlphaVariant::c: {
        const double approx = static_cast<double>(n) / ((2.0 - gamma_constant()) * static_cast<double>(t));
        alpha = std::max(1LL, static_cast<long long>(std::floor(approx)) - 1);
        while (alpha > 1 && detail::variant_c_holds(n, t, alpha - 1))
            --alpha;
        while (!detail::variant_c_holds(n, t, alpha))
            ++alpha;
        break;
    }
    }
    return {n, t, variant, std::max(1LL, alpha)};
}

} // namespace hadwiger

#endif // HADWIGER_INDEPENDENT_SET_HPP
