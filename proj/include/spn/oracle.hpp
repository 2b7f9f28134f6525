#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <deque>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <unordered_map>
#include <vector>

#include "spn/graph.hpp"
#include "spn/vertex_set.hpp"

namespace spn {

class enumeration_limit_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// All-pairs hop distances plus geodesic queries. The geodesic DAG from a
/// source u is implicit in the distance matrix: w's predecessors are the
/// neighbors v with dist(u,v) + 1 == dist(u,w). Immutable after build.
class GeodesicOracle {
public:
    explicit GeodesicOracle(const SierpinskiGraph& g, unsigned workers = 1)
        : graph_(&g), count_(g.vertex_count()), dist_(std::size_t{count_} * count_) {
        if (workers <= 1) {
            for (VertexId s = 0; s < count_; ++s) bfs_from(s);
        } else {
            std::vector<std::thread> pool;
            std::atomic<VertexId> next{0};
            for (unsigned t = 0; t < workers; ++t)
                pool.emplace_back([&] {
                    for (VertexId s = next++; s < count_; s = next++) bfs_from(s);
                });
            for (auto& th : pool) th.join();
        }
    }

    const SierpinskiGraph& graph() const { return *graph_; }
    VertexId vertex_count() const { return count_; }

    int dist(VertexId u, VertexId v) const {
        return dist_[std::size_t{u} * count_ + v];
    }

    /// True iff w lies on some geodesic between u and v (inclusive).
    bool on_some_geodesic(VertexId u, VertexId v, VertexId w) const {
        return dist(u, w) + dist(w, v) == dist(u, v);
    }

    /// Number of distinct shortest u,v-paths (1 for u == v).
    std::uint64_t count_geodesics(VertexId u, VertexId v) const {
        std::lock_guard<std::mutex> lock(count_mutex_);
        auto it = count_rows_.find(u);
        if (it == count_rows_.end()) it = count_rows_.emplace(u, count_row(u)).first;
        return it->second[v];
    }

    /// All geodesics from u to v as vertex sequences, in a deterministic
    /// order. Throws enumeration_limit_error past max_paths.
    std::vector<std::vector<VertexId>> enumerate_geodesics(VertexId u, VertexId v,
                                                           std::size_t max_paths = 64) const {
        std::vector<std::vector<VertexId>> paths;
        std::vector<VertexId> walk{v};
        enumerate_rec(u, v, walk, paths, max_paths);
        return paths;
    }

    /// True iff some geodesic from u to v avoids blocked \ {u, v}.
    /// Layered search over the interval {w : d(u,w)+d(w,v) = d(u,v)}.
    bool exists_geodesic_avoiding(VertexId u, VertexId v, const VertexSet& blocked) const {
        if (u == v) return true;
        const int d = dist(u, v);
        std::vector<VertexId> frontier{u}, next;
        std::vector<std::uint8_t> seen(count_, 0);
        seen[u] = 1;
        for (int layer = 0; layer < d; ++layer) {
            next.clear();
            for (VertexId w : frontier) {
                bool done = false;
                graph_->for_each_neighbor(w, [&](VertexId x) {
                    if (done || seen[x]) return;
                    if (dist(u, x) != layer + 1 || dist(x, v) != d - layer - 1) return;
                    if (x == v) {
                        done = true;
                        return;
                    }
                    if (blocked.contains(x)) return;
                    seen[x] = 1;
                    next.push_back(x);
                });
                if (done) return true;
            }
            if (next.empty()) return false;
            frontier.swap(next);
        }
        return false;
    }

    /// True iff some x in X \ {u, v} lies on a geodesic between u and v.
    bool some_blocker_on_any_geodesic(VertexId u, VertexId v, const VertexSet& x_set) const {
        const int d = dist(u, v);
        bool found = false;
        x_set.for_each([&](VertexId x) {
            if (found || x == u || x == v) return;
            if (dist(u, x) + dist(x, v) == d) found = true;
        });
        return found;
    }

    /// Interval criterion: H is convex iff no outside vertex lies on a
    /// geodesic between two vertices of H.
    bool is_convex(const VertexSet& h) const {
        auto members = h.to_vector();
        for (std::size_t i = 0; i < members.size(); ++i)
            for (std::size_t j = i + 1; j < members.size(); ++j) {
                const VertexId u = members[i], v = members[j];
                const int d = dist(u, v);
                for (VertexId w = 0; w < count_; ++w)
                    if (!h.contains(w) && dist(u, w) + dist(w, v) == d) return false;
            }
        return true;
    }

private:
    void bfs_from(VertexId s) {
        std::uint16_t* row = dist_.data() + std::size_t{s} * count_;
        std::fill(row, row + count_, std::uint16_t(0xffff));
        row[s] = 0;
        std::deque<VertexId> queue{s};
        while (!queue.empty()) {
            VertexId w = queue.front();
            queue.pop_front();
            graph_->for_each_neighbor(w, [&](VertexId x) {
                if (row[x] == 0xffff) {
                    row[x] = static_cast<std::uint16_t>(row[w] + 1);
                    queue.push_back(x);
                }
            });
        }
    }

    std::vector<std::uint64_t> count_row(VertexId u) const {
        std::vector<VertexId> order(count_);
        for (VertexId v = 0; v < count_; ++v) order[v] = v;
        std::sort(order.begin(), order.end(),
                  [&](VertexId a, VertexId b) { return dist(u, a) < dist(u, b); });
        std::vector<std::uint64_t> counts(count_, 0);
        counts[u] = 1;
        for (VertexId v : order) {
            if (v == u) continue;
            std::uint64_t total = 0;
            graph_->for_each_neighbor(v, [&](VertexId w) {
                if (dist(u, w) + 1 == dist(u, v)) total += counts[w];
            });
            counts[v] = total;
        }
        return counts;
    }

    void enumerate_rec(VertexId u, VertexId tip, std::vector<VertexId>& walk,
                       std::vector<std::vector<VertexId>>& paths, std::size_t max_paths) const {
        if (tip == u) {
            paths.emplace_back(walk.rbegin(), walk.rend());
            if (paths.size() > max_paths)
                throw enumeration_limit_error("geodesic enumeration limit exceeded");
            return;
        }
        graph_->for_each_neighbor(tip, [&](VertexId w) {
            if (dist(u, w) + 1 != dist(u, tip)) return;
            walk.push_back(w);
            enumerate_rec(u, w, walk, paths, max_paths);
            walk.pop_back();
        });
    }

    const SierpinskiGraph* graph_;
    VertexId count_;
    std::vector<std::uint16_t> dist_;
    mutable std::mutex count_mutex_;
    mutable std::unordered_map<VertexId, std::vector<std::uint64_t>> count_rows_;
};

}  // namespace spn
