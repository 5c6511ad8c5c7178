#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string_view>
#include <vector>

#include "chaingraph/graph.hpp"

namespace chaingraph {

/// degree -> number of nodes with that degree.
struct DegreeHistogram {
    std::map<std::uint64_t, std::uint64_t> entries;
    bool weighted = false;
    std::uint64_t n = 0;
};

/// Plain degree: distinct neighbors, +1 if the node has any loop.
/// Weighted degree: sum of incident edge weights plus the node's loop count.
std::vector<std::uint64_t> node_degrees(const TransactionGraph& g, bool weighted);
DegreeHistogram degree_distribution(const TransactionGraph& g, bool weighted);

struct ComponentSize {
    std::size_t nodes = 0;
    std::size_t edges = 0;
};

/// Component ids are assigned in order of each component's smallest node id.
struct ComponentSet {
    std::vector<std::uint32_t> assignment;  // node -> component id
    std::vector<ComponentSize> sizes;       // component id -> (nodes, edges)
    std::optional<std::uint32_t> largest;   // most nodes; ties go to the smaller id

    [[nodiscard]] std::size_t count() const noexcept { return sizes.size(); }
    /// Node ids of one component, ascending.
    [[nodiscard]] std::vector<NodeId> members(std::uint32_t id) const;
};

ComponentSet connected_components(const SimpleGraph& g);

/// The largest component as a standalone graph; empty graph when g is empty.
InducedSubgraph largest_component(const SimpleGraph& g, const ComponentSet& components);
InducedSubgraph largest_component(const SimpleGraph& g);

/// 3 * triangles / connected triplets, or 0 when there are no triplets.
double transitivity(const SimpleGraph& g);

/// Mean over all nodes of the local clustering coefficient (0 for degree < 2).
double average_local_clustering(const SimpleGraph& g);

struct LocalClusteringSummary {
    double average_all = 0.0;       // nodes of degree < 2 count as 0
    double average_eligible = 0.0;  // only nodes of degree >= 2
    std::size_t eligible_nodes = 0;
    double transitivity = 0.0;
};

/// Both clustering forms from one triangle count.
LocalClusteringSummary clustering_summary(const SimpleGraph& g);

struct ExactnessPolicy {
    std::size_t exact_threshold = 50'000;
    std::size_t sample_sources = 1'000;
    std::uint64_t seed = 1;
};

enum class DistanceMethod { exact, sampled, lower_bound };
std::string_view to_string(DistanceMethod m);

struct DistanceSummary {
    double average_distance = 0.0;  // hops
    std::uint32_t diameter = 0;     // hops
    DistanceMethod average_method = DistanceMethod::exact;
    DistanceMethod diameter_method = DistanceMethod::exact;
    std::size_t sources = 0;  // BFS sources used for the average
    std::uint64_t seed = 0;
    std::size_t node_count = 0;
    std::size_t edge_count = 0;
};

/// Average shortest-path length and diameter of a connected graph.
///
/// Up to `policy.exact_threshold` nodes, BFS runs from every node. Above it,
/// BFS runs from `sample_sources` nodes drawn with `seed`; the average is
/// taken over the sampled sources' pair distances and the diameter becomes a
/// lower bound (double sweep combined with the sampled eccentricities).
/// Throws std::invalid_argument if g is disconnected.
DistanceSummary distance_summary(const SimpleGraph& g, const ExactnessPolicy& policy = {});

/// One row of the general-metrics table.
struct MetricsReport {
    std::size_t n = 0;
    std::size_t m = 0;
    double avg_clustering = 0.0;
    double transitivity = 0.0;
    std::size_t num_components = 0;
    std::size_t largest_component_nodes = 0;
    std::size_t largest_component_edges = 0;
};

MetricsReport general_metrics(const SimpleGraph& g, const ComponentSet& components);
MetricsReport general_metrics(const TransactionGraph& g);

}  // namespace chaingraph
