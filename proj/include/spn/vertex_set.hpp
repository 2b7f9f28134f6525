#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <vector>

#include "spn/words.hpp"

namespace spn {

/// Subset of [0, universe) as a bitmask with a cached cardinality.
class VertexSet {
public:
    VertexSet() = default;

    explicit VertexSet(VertexId universe)
        : universe_(universe), words_((universe + 63) / 64, 0) {}

    static VertexSet full(VertexId universe) {
        VertexSet s(universe);
        for (VertexId v = 0; v < universe; ++v) s.insert(v);
        return s;
    }

    static VertexSet of(VertexId universe, std::initializer_list<VertexId> ids) {
        VertexSet s(universe);
        for (VertexId v : ids) s.insert(v);
        return s;
    }

    VertexId universe() const { return universe_; }
    int cardinality() const { return cardinality_; }
    bool empty() const { return cardinality_ == 0; }

    bool contains(VertexId v) const {
        return (words_[v >> 6] >> (v & 63)) & 1u;
    }

    void insert(VertexId v) {
        std::uint64_t& w = words_[v >> 6];
        std::uint64_t bit = std::uint64_t{1} << (v & 63);
        if (!(w & bit)) {
            w |= bit;
            ++cardinality_;
        }
    }

    void erase(VertexId v) {
        std::uint64_t& w = words_[v >> 6];
        std::uint64_t bit = std::uint64_t{1} << (v & 63);
        if (w & bit) {
            w &= ~bit;
            --cardinality_;
        }
    }

    VertexSet complement() const {
        VertexSet out(universe_);
        for (std::size_t i = 0; i < words_.size(); ++i) out.words_[i] = ~words_[i];
        if (universe_ & 63)
            out.words_.back() &= (std::uint64_t{1} << (universe_ & 63)) - 1;
        out.cardinality_ = static_cast<int>(universe_) - cardinality_;
        return out;
    }

    bool intersects(const VertexSet& other) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & other.words_[i]) return true;
        return false;
    }

    bool is_subset_of(const VertexSet& other) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~other.words_[i]) return false;
        return true;
    }

    /// Ascending vertex ids.
    std::vector<VertexId> to_vector() const {
        std::vector<VertexId> out;
        out.reserve(cardinality_);
        for (std::size_t i = 0; i < words_.size(); ++i) {
            std::uint64_t w = words_[i];
            while (w) {
                int b = std::countr_zero(w);
                out.push_back(static_cast<VertexId>(i * 64 + b));
                w &= w - 1;
            }
        }
        return out;
    }

    template <class Fn>
    void for_each(Fn&& fn) const {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            std::uint64_t w = words_[i];
            while (w) {
                int b = std::countr_zero(w);
                fn(static_cast<VertexId>(i * 64 + b));
                w &= w - 1;
            }
        }
    }

    bool operator==(const VertexSet& other) const {
        return universe_ == other.universe_ && words_ == other.words_;
    }

    /// Lexicographic order on the sorted id sequence.
    bool lex_less(const VertexSet& other) const {
        auto a = to_vector();
        auto b = other.to_vector();
        return a < b;
    }

    std::size_t hash() const {
        std::size_t h = std::hash<VertexId>{}(universe_);
        for (std::uint64_t w : words_) h = h * 1099511628211ULL + w;
        return h;
    }

private:
    VertexId universe_ = 0;
    int cardinality_ = 0;
    std::vector<std::uint64_t> words_;
};

struct VertexSetHash {
    std::size_t operator()(const VertexSet& s) const { return s.hash(); }
};

}  // namespace spn
