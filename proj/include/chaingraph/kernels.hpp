#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "chaingraph/graph.hpp"

// Hot loops behind the metrics. Each kernel exists twice: `serial` is the
// reference, `parallel` splits the outer loop across OpenMP threads. Outputs
// are per-node or per-source arrays of integers, so both variants return
// identical results for any thread count; callers reduce them in index order.
namespace chaingraph::kernels {

struct SourceStats {
    std::uint64_t distance_sum = 0;  // sum of hop counts to every reached node
    std::uint32_t reached = 0;       // nodes reached, source included
    std::uint32_t eccentricity = 0;  // largest hop count seen
    NodeId farthest = 0;             // smallest id at distance `eccentricity`

    friend bool operator==(const SourceStats&, const SourceStats&) = default;
};

namespace serial {
/// Entry v = number of edges among v's neighbors (triangles through v).
std::vector<std::uint64_t> triangles_per_node(const SimpleGraph& g);
/// One breadth-first search per source.
std::vector<SourceStats> bfs_from_sources(const SimpleGraph& g, std::span<const NodeId> sources);
}  // namespace serial

namespace parallel {
std::vector<std::uint64_t> triangles_per_node(const SimpleGraph& g);
std::vector<SourceStats> bfs_from_sources(const SimpleGraph& g, std::span<const NodeId> sources);
}  // namespace parallel

/// Threads the parallel kernels will use (1 without OpenMP).
int max_threads();
void set_threads(int n);

}  // namespace chaingraph::kernels
