#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "chaingraph/graph.hpp"
#include "chaingraph/kernels.hpp"

namespace chaingraph::kernels::detail {

// Each edge kept once, pointing from lower to higher (degree, id) rank.
// Out-lists stay sorted by id, so a triangle u < w < x (by rank) is found
// exactly once by intersecting out(u) with out(w).
struct OrientedGraph {
    std::vector<std::size_t> offsets;
    std::vector<NodeId> targets;

    explicit OrientedGraph(const SimpleGraph& g) {
        const std::size_t n = g.node_count();
        auto ranks_below = [&](NodeId a, NodeId b) {
            auto da = g.degree(a), db = g.degree(b);
            return da < db || (da == db && a < b);
        };
        offsets.assign(n + 1, 0);
        for (NodeId v = 0; v < n; ++v)
            for (NodeId u : g.neighbors(v))
                if (ranks_below(v, u)) ++offsets[v + 1];
        for (std::size_t i = 0; i < n; ++i) offsets[i + 1] += offsets[i];
        targets.resize(offsets.back());
        for (NodeId v = 0; v < n; ++v) {
            std::size_t k = offsets[v];
            for (NodeId u : g.neighbors(v))
                if (ranks_below(v, u)) targets[k++] = u;
        }
    }

    [[nodiscard]] std::span<const NodeId> out(NodeId v) const {
        return {targets.data() + offsets[v], targets.data() + offsets[v + 1]};
    }
};

// Calls f(x) for every id present in both sorted ranges.
template <class F>
inline void for_each_common(std::span<const NodeId> a, std::span<const NodeId> b, F&& f) {
    auto i = a.begin(), j = b.begin();
    while (i != a.end() && j != b.end()) {
        if (*i < *j) {
            ++i;
        } else if (*j < *i) {
            ++j;
        } else {
            f(*i);
            ++i;
            ++j;
        }
    }
}

// Reusable breadth-first search state. `stamp` avoids clearing distances per run.
class BfsWorkspace {
  public:
    explicit BfsWorkspace(std::size_t n) : dist_(n, 0), stamp_(n, 0), queue_(n) {}

    SourceStats run(const SimpleGraph& g, NodeId source) {
        ++epoch_;
        SourceStats s;
        std::size_t head = 0, tail = 0;
        queue_[tail++] = source;
        stamp_[source] = epoch_;
        dist_[source] = 0;
        s.farthest = source;
        while (head < tail) {
            NodeId v = queue_[head++];
            std::uint32_t dv = dist_[v];
            s.distance_sum += dv;
            if (dv > s.eccentricity || (dv == s.eccentricity && v < s.farthest)) {
                s.eccentricity = dv;
                s.farthest = v;
            }
            for (NodeId u : g.neighbors(v)) {
                if (stamp_[u] == epoch_) continue;
                stamp_[u] = epoch_;
                dist_[u] = dv + 1;
                queue_[tail++] = u;
            }
        }
        s.reached = static_cast<std::uint32_t>(tail);
        return s;
    }

  private:
    std::vector<std::uint32_t> dist_;
    std::vector<std::uint32_t> stamp_;
    std::vector<NodeId> queue_;
    std::uint32_t epoch_ = 0;
};

}  // namespace chaingraph::kernels::detail
