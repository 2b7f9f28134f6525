#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <vector>

#include "spn/vertex_set.hpp"
#include "spn/words.hpp"

namespace spn {

/// Sierpinski graph S_p^n on the words [p]_0^n. Two words are adjacent when
/// there is a position h such that they share the prefix before h, differ at
/// h, and each word's tail after h repeats the other word's digit at h.
/// Immutable after construction.
class SierpinskiGraph {
public:
    SierpinskiGraph(int p, int n, std::uint64_t max_vertices = default_max_vertices)
        : codec_(p, n) {
        if (codec_.vertex_count() > max_vertices)
            throw parameter_error("p^n exceeds the configured vertex limit");
        build_adjacency();
    }

    int p() const { return codec_.p(); }
    int n() const { return codec_.n(); }
    VertexId vertex_count() const { return codec_.vertex_count(); }
    const WordCodec& codec() const { return codec_; }

    std::size_t edge_count() const { return neighbors_.size() / 2; }

    int degree(VertexId v) const {
        return static_cast<int>(offsets_[v + 1] - offsets_[v]);
    }

    /// Sorted neighbor ids of v.
    const VertexId* neighbors_begin(VertexId v) const { return neighbors_.data() + offsets_[v]; }
    const VertexId* neighbors_end(VertexId v) const { return neighbors_.data() + offsets_[v + 1]; }

    template <class Fn>
    void for_each_neighbor(VertexId v, Fn&& fn) const {
        for (auto it = neighbors_begin(v); it != neighbors_end(v); ++it) fn(*it);
    }

    bool adjacent(VertexId u, VertexId v) const {
        return std::binary_search(neighbors_begin(u), neighbors_end(u), v);
    }

    /// True for the constant words i^n.
    bool is_extreme(VertexId v) const {
        const int p = codec_.p();
        std::uint8_t last = static_cast<std::uint8_t>(v % p);
        for (int t = 1; t < codec_.n(); ++t) {
            v /= p;
            if (v % p != last) return false;
        }
        return true;
    }

    /// Vertex set {st : t in [p]_0^k} of the subgraph copy of S_p^k selected
    /// by the given prefix (possibly empty; must be shorter than n). Thanks
    /// to the digit-major encoding this is a contiguous id range.
    VertexSet subgraph_vertices(const std::vector<std::uint8_t>& prefix) const {
        if (static_cast<int>(prefix.size()) >= codec_.n() && !prefix.empty())
            throw parameter_error("prefix must be shorter than n");
        VertexId base = 0;
        for (std::uint8_t d : prefix) {
            if (d >= codec_.p()) throw parameter_error("prefix digit out of range");
            base = base * codec_.p() + d;
        }
        VertexId block = 1;
        for (int t = 0; t < codec_.n() - static_cast<int>(prefix.size()); ++t)
            block *= codec_.p();
        VertexSet out(vertex_count());
        for (VertexId v = base * block; v < (base + 1) * block; ++v) out.insert(v);
        return out;
    }

    /// Vertices whose neighborhood induces a complete graph.
    VertexSet simplicial_vertices() const {
        VertexSet out(vertex_count());
        for (VertexId v = 0; v < vertex_count(); ++v) {
            bool clique = true;
            for (auto a = neighbors_begin(v); clique && a != neighbors_end(v); ++a)
                for (auto b = a + 1; b != neighbors_end(v); ++b)
                    if (!adjacent(*a, *b)) {
                        clique = false;
                        break;
                    }
            if (clique) out.insert(v);
        }
        return out;
    }

    VertexSet complement(const VertexSet& x) const { return x.complement(); }

    void write_edgelist(std::ostream& os) const {
        for (VertexId u = 0; u < vertex_count(); ++u)
            for (auto it = neighbors_begin(u); it != neighbors_end(u); ++it)
                if (u < *it) os << u << ' ' << *it << '\n';
    }

    void write_dot(std::ostream& os) const {
        os << "graph S_" << p() << "_" << n() << " {\n";
        for (VertexId v = 0; v < vertex_count(); ++v)
            os << "  v" << v << " [label=\"" << codec_.format(v) << "\"];\n";
        for (VertexId u = 0; u < vertex_count(); ++u)
            for (auto it = neighbors_begin(u); it != neighbors_end(u); ++it)
                if (u < *it) os << "  v" << u << " -- v" << *it << ";\n";
        os << "}\n";
    }

private:
    // Neighbors of i_1..i_n: p-1 words differing only in the last digit, and
    // one bridge word per position h whose tail i_{h+1}..i_n is a constant
    // run of some digit b != i_h; the bridge is prefix, b, then (i_h)^{n-h}.
    // Only the maximal constant suffix can produce a bridge, so degrees are
    // p-1 (extreme vertices) or p.
    void build_adjacency() {
        const int p = codec_.p();
        const int n = codec_.n();
        const VertexId count = codec_.vertex_count();
        std::vector<std::vector<VertexId>> adj(count);

        std::vector<VertexId> pow(n + 1, 1);
        for (int t = 1; t <= n; ++t) pow[t] = pow[t - 1] * p;

        for (VertexId v = 0; v < count; ++v) {
            auto digits = codec_.decode(v);
            for (int b = 0; b < p; ++b)
                if (b != digits[n - 1]) adj[v].push_back(v - digits[n - 1] + b);
            // h runs over 0-based positions; tail must be the constant run b^(n-1-h).
            for (int h = n - 2; h >= 0; --h) {
                std::uint8_t b = digits[n - 1];
                bool constant_tail = true;
                for (int t = h + 1; t < n; ++t)
                    if (digits[t] != b) {
                        constant_tail = false;
                        break;
                    }
                if (!constant_tail) break;  // shorter tails can't be constant either
                if (b == digits[h]) continue;
                VertexId prefix = v / pow[n - h];
                VertexId tail = 0;  // the other endpoint's tail is (i_h)^(n-1-h)
                for (int t = 0; t < n - 1 - h; ++t) tail = tail * p + digits[h];
                adj[v].push_back((prefix * p + b) * pow[n - 1 - h] + tail);
            }
        }

        offsets_.assign(count + 1, 0);
        for (VertexId v = 0; v < count; ++v) {
            std::sort(adj[v].begin(), adj[v].end());
            offsets_[v + 1] = offsets_[v] + adj[v].size();
        }
        neighbors_.reserve(offsets_[count]);
        for (VertexId v = 0; v < count; ++v)
            neighbors_.insert(neighbors_.end(), adj[v].begin(), adj[v].end());
    }

    WordCodec codec_;
    std::vector<std::size_t> offsets_;
    std::vector<VertexId> neighbors_;
};

}  // namespace spn
