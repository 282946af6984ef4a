#ifndef BERGEHIT_VERTEX_SET_HPP
#define BERGEHIT_VERTEX_SET_HPP

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace bergehit {

using Vertex = std::uint32_t;
using EdgeId = std::uint32_t;

/// Membership bitset over the vertex range 0..n-1.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(std::size_t n) : n_(n), words_((n + 63) / 64, 0) {}
    VertexSet(std::size_t n, std::initializer_list<Vertex> members) : VertexSet(n) {
        for (Vertex v : members) insert(v);
    }

    static VertexSet full(std::size_t n) {
        VertexSet s(n);
        for (Vertex v = 0; v < n; ++v) s.insert(v);
        return s;
    }

    std::size_t universe() const noexcept { return n_; }

    bool contains(Vertex v) const noexcept {
        return v < n_ && ((words_[v >> 6] >> (v & 63)) & 1U) != 0;
    }
    void insert(Vertex v) { words_.at(v >> 6) |= std::uint64_t{1} << (v & 63); }
    void erase(Vertex v) { words_.at(v >> 6) &= ~(std::uint64_t{1} << (v & 63)); }

    std::size_t size() const noexcept {
        std::size_t c = 0;
        for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }
    bool empty() const noexcept {
        for (auto w : words_)
            if (w != 0) return false;
        return true;
    }

    bool intersects(const VertexSet& other) const noexcept {
        for (std::size_t i = 0; i < words_.size() && i < other.words_.size(); ++i)
            if ((words_[i] & other.words_[i]) != 0) return true;
        return false;
    }

    VertexSet& operator|=(const VertexSet& o) {
        for (std::size_t i = 0; i < words_.size() && i < o.words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    VertexSet& operator&=(const VertexSet& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= i < o.words_.size() ? o.words_[i] : 0;
        return *this;
    }
    /// Set difference.
    VertexSet& operator-=(const VertexSet& o) {
        for (std::size_t i = 0; i < words_.size() && i < o.words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }

    /// Members in ascending order.
    std::vector<Vertex> members() const {
        std::vector<Vertex> out;
        for (std::size_t i = 0; i < words_.size(); ++i) {
            std::uint64_t w = words_[i];
            while (w != 0) {
                out.push_back(static_cast<Vertex>(i * 64 + static_cast<std::size_t>(std::countr_zero(w))));
                w &= w - 1;
            }
        }
        return out;
    }

    friend bool operator==(const VertexSet&, const VertexSet&) = default;

private:
    std::size_t n_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace bergehit

#endif  // BERGEHIT_VERTEX_SET_HPP
