#ifndef HADWIGER_VERTEX_SET_HPP
#define HADWIGER_VERTEX_SET_HPP

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <stdexcept>
#include <string>
#include <vector>

// Largest vertex id + 1 a Graph can hold. Raise by defining this before
// including any hadwiger header.
#ifndef HADWIGER_MAX_VERTICES
#define HADWIGER_MAX_VERTICES 64
#endif

namespace hadwiger {

using Vertex = unsigned;

inline constexpr std::size_t kMaxVertices = HADWIGER_MAX_VERTICES;

/// Fixed-capacity bitset over vertex ids [0, kMaxVertices).
class VertexSet {
public:
    static constexpr std::size_t kWords = (kMaxVertices + 63) / 64;
    static constexpr Vertex npos = static_cast<Vertex>(-1);

    class iterator {
    public:
        using iterator_category = std::forward_iterator_tag;
        using value_type = Vertex;
        using difference_type = std::ptrdiff_t;
        using pointer = const Vertex*;
        using reference = Vertex;

        iterator() = default;
        iterator(const VertexSet* s, Vertex v) : set_(s), v_(v) {}

        Vertex operator*() const { return v_; }
        iterator& operator++()
        {
            v_ = set_->next(v_ + 1);
            return *this;
        }
        iterator operator++(int)
        {
            auto old = *this;
            ++*this;
            return old;
        }
        bool operator==(const iterator& o) const { return v_ == o.v_; }

    private:
        const VertexSet* set_ = nullptr;
        Vertex v_ = npos;
    };

    constexpr VertexSet() = default;
    VertexSet(std::initializer_list<Vertex> vs)
    {
        for (Vertex v : vs)
            set(v);
    }
    template <typename Range>
    static VertexSet from(const Range& r)
    {
        VertexSet s;
        for (auto v : r)
            s.set(static_cast<Vertex>(v));
        return s;
    }
    /// {0, 1, ..., n-1}
    static VertexSet range(std::size_t n)
    {
        check_id(n == 0 ? 0 : n - 1);
        VertexSet s;
        for (std::size_t w = 0; w < kWords && n > 0; ++w) {
            std::size_t take = n < 64 ? n : 64;
            s.words_[w] = take == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << take) - 1);
            n -= take;
        }
        return s;
    }

    static void check_id(std::size_t v)
    {
        if (v >= kMaxVertices)
            throw std::invalid_argument("vertex id " + std::to_string(v) + " exceeds capacity "
                                        + std::to_string(kMaxVertices));
    }

    void set(Vertex v)
    {
        check_id(v);
        words_[v >> 6] |= std::uint64_t{1} << (v & 63);
    }
    void reset(Vertex v)
    {
        if (v < kMaxVertices)
            words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
    }
    bool test(Vertex v) const
    {
        return v < kMaxVertices && ((words_[v >> 6] >> (v & 63)) & 1u);
    }
    bool contains(Vertex v) const { return test(v); }

    std::size_t count() const
    {
        std::size_t c = 0;
        for (auto w : words_)
            c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }
    std::size_t size() const { return count(); }
    bool empty() const
    {
        for (auto w : words_)
            if (w)
                return false;
        return true;
    }
    bool any() const { return !empty(); }

    /// Smallest member >= from, or npos.
    Vertex next(Vertex from) const
    {
        if (from >= kMaxVertices)
            return npos;
        std::size_t w = from >> 6;
        std::uint64_t word = words_[w] & (~std::uint64_t{0} << (from & 63));
        while (true) {
            if (word)
                return static_cast<Vertex>(w * 64 + static_cast<std::size_t>(std::countr_zero(word)));
            if (++w == kWords)
                return npos;
            word = words_[w];
        }
    }
    Vertex first() const { return next(0); }

    iterator begin() const { return iterator(this, first()); }
    iterator end() const { return iterator(this, npos); }

    std::vector<Vertex> to_vector() const { return {begin(), end()}; }

    bool intersects(const VertexSet& o) const
    {
        for (std::size_t i = 0; i < kWords; ++i)
            if (words_[i] & o.words_[i])
                return true;
        return false;
    }
    bool subset_of(const VertexSet& o) const
    {
        for (std::size_t i = 0; i < kWords; ++i)
            if (words_[i] & ~o.words_[i])
                return false;
        return true;
    }

    VertexSet& operator|=(const VertexSet& o)
    {
        for (std::size_t i = 0; i < kWords; ++i)
            words_[i] |= o.words_[i];
        return *this;
    }
    VertexSet& operator&=(const VertexSet& o)
    {
        for (std::size_t i = 0; i < kWords; ++i)
            words_[i] &= o.words_[i];
        return *this;
    }
    VertexSet& operator-=(const VertexSet& o)
    {
        for (std::size_t i = 0; i < kWords; ++i)
            words_[i] &= ~o.words_[i];
        return *this;
    }
    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

    friend bool operator==(const VertexSet&, const VertexSet&) = default;

    /// Lexicographic comparison of ascending member lists.
    friend bool lex_less(const VertexSet& a, const VertexSet& b)
    {
        auto ia = a.begin(), ib = b.begin();
        for (; ia != a.end() && ib != b.end(); ++ia, ++ib)
            if (*ia != *ib)
                return *ia < *ib;
        return ia == a.end() && ib != b.end();
    }

private:
    std::array<std::uint64_t, kWords> words_{};
};

} // namespace hadwiger

#endif // HADWIGER_VERTEX_SET_HPP
