#include "chaingraph/metrics.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <random>
#include <stdexcept>

#include "chaingraph/kernels.hpp"

namespace chaingraph {

std::vector<std::uint64_t> node_degrees(const TransactionGraph& g, bool weighted) {
    std::vector<std::uint64_t> deg(g.node_count(), 0);
    g.for_each_edge([&](NodeId u, NodeId v, const EdgeData& e) {
        const std::uint64_t add = weighted ? e.weight : 1;
        deg[u] += add;
        deg[v] += add;
    });
    for (NodeId v = 0; v < g.node_count(); ++v) {
        const auto loops = g.loop_count(v);
        if (loops > 0) deg[v] += weighted ? loops : 1;
    }
    return deg;
}

DegreeHistogram degree_distribution(const TransactionGraph& g, bool weighted) {
    DegreeHistogram h;
    h.weighted = weighted;
    h.n = g.node_count();
    for (auto d : node_degrees(g, weighted)) ++h.entries[d];
    return h;
}

std::vector<NodeId> ComponentSet::members(std::uint32_t id) const {
    std::vector<NodeId> out;
    out.reserve(id < sizes.size() ? sizes[id].nodes : 0);
    for (NodeId v = 0; v < assignment.size(); ++v)
        if (assignment[v] == id) out.push_back(v);
    return out;
}

ComponentSet connected_components(const SimpleGraph& g) {
    constexpr auto unset = std::numeric_limits<std::uint32_t>::max();
    const std::size_t n = g.node_count();
    ComponentSet cs;
    cs.assignment.assign(n, unset);
    std::vector<NodeId> queue;
    queue.reserve(n);

    for (NodeId start = 0; start < n; ++start) {
        if (cs.assignment[start] != unset) continue;
        const auto id = static_cast<std::uint32_t>(cs.sizes.size());
        ComponentSize size;
        std::size_t degree_sum = 0;
        queue.clear();
        queue.push_back(start);
        cs.assignment[start] = id;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            NodeId v = queue[head];
            degree_sum += g.degree(v);
            for (NodeId u : g.neighbors(v)) {
                if (cs.assignment[u] != unset) continue;
                cs.assignment[u] = id;
                queue.push_back(u);
            }
        }
        size.nodes = queue.size();
        size.edges = degree_sum / 2;
        cs.sizes.push_back(size);
        if (!cs.largest || size.nodes > cs.sizes[*cs.largest].nodes) cs.largest = id;
    }
    return cs;
}

InducedSubgraph largest_component(const SimpleGraph& g, const ComponentSet& components) {
    if (!components.largest) return {};
    auto nodes = components.members(*components.largest);
    return induced_subgraph(g, nodes);
}

InducedSubgraph largest_component(const SimpleGraph& g) { return largest_component(g, connected_components(g)); }

LocalClusteringSummary clustering_summary(const SimpleGraph& g) {
    LocalClusteringSummary s;
    const std::size_t n = g.node_count();
    if (n == 0) return s;
    const auto tri = kernels::parallel::triangles_per_node(g);

    // Fixed index-order reduction keeps the doubles identical across thread counts.
    double local_sum = 0.0;
    std::uint64_t closed = 0, triplets = 0;
    for (NodeId v = 0; v < n; ++v) {
        const std::uint64_t d = g.degree(v);
        if (d < 2) continue;
        const std::uint64_t pairs = d * (d - 1) / 2;
        local_sum += static_cast<double>(tri[v]) / static_cast<double>(pairs);
        closed += tri[v];
        triplets += pairs;
        ++s.eligible_nodes;
    }
    s.average_all = local_sum / static_cast<double>(n);
    s.average_eligible = s.eligible_nodes ? local_sum / static_cast<double>(s.eligible_nodes) : 0.0;
    // Each triangle closes one triplet at each of its three corners, so `closed` = 3 * triangles.
    s.transitivity = triplets ? static_cast<double>(closed) / static_cast<double>(triplets) : 0.0;
    return s;
}

double transitivity(const SimpleGraph& g) { return clustering_summary(g).transitivity; }

double average_local_clustering(const SimpleGraph& g) { return clustering_summary(g).average_all; }

std::string_view to_string(DistanceMethod m) {
    switch (m) {
        case DistanceMethod::exact: return "EXACT";
        case DistanceMethod::sampled: return "SAMPLED";
        case DistanceMethod::lower_bound: return "LOWER_BOUND";
    }
    return "UNKNOWN";
}

namespace {

double mean_pair_distance(std::span<const kernels::SourceStats> stats, std::size_t n) {
    std::uint64_t total = 0;
    for (const auto& s : stats) total += s.distance_sum;
    return static_cast<double>(total) / (static_cast<double>(stats.size()) * static_cast<double>(n - 1));
}

std::uint32_t max_eccentricity(std::span<const kernels::SourceStats> stats) {
    std::uint32_t d = 0;
    for (const auto& s : stats) d = std::max(d, s.eccentricity);
    return d;
}

}  // namespace

DistanceSummary distance_summary(const SimpleGraph& g, const ExactnessPolicy& policy) {
    const std::size_t n = g.node_count();
    DistanceSummary out;
    out.node_count = n;
    out.edge_count = g.edge_count();
    out.seed = policy.seed;
    if (n == 0) throw std::invalid_argument("distance_summary: empty graph");

    const NodeId first = 0;
    auto probe = kernels::serial::bfs_from_sources(g, std::span(&first, 1));
    if (probe[0].reached != n)
        throw std::invalid_argument("distance_summary: graph is disconnected (" + std::to_string(probe[0].reached) +
                                    " of " + std::to_string(n) + " nodes reachable)");
    if (n == 1) {
        out.sources = 1;
        return out;
    }

    if (n <= policy.exact_threshold) {
        std::vector<NodeId> all(n);
        std::iota(all.begin(), all.end(), NodeId{0});
        auto stats = kernels::parallel::bfs_from_sources(g, all);
        out.average_distance = mean_pair_distance(stats, n);
        out.diameter = max_eccentricity(stats);
        out.sources = n;
        return out;
    }

    std::vector<NodeId> sources;
    const std::size_t k = std::max<std::size_t>(1, std::min(policy.sample_sources, n));
    sources.reserve(k);
    {
        std::vector<NodeId> all(n);
        std::iota(all.begin(), all.end(), NodeId{0});
        std::mt19937_64 rng(policy.seed);
        std::sample(all.begin(), all.end(), std::back_inserter(sources), k, rng);
    }
    auto stats = kernels::parallel::bfs_from_sources(g, sources);
    out.average_distance = mean_pair_distance(stats, n);
    out.average_method = DistanceMethod::sampled;
    out.sources = k;

    std::uint32_t diameter = max_eccentricity(stats);
    if (k == n) {
        out.diameter = diameter;
        out.diameter_method = DistanceMethod::exact;
        return out;
    }
    // Double sweep from the highest-degree node (smallest id on ties).
    NodeId hub = 0;
    for (NodeId v = 1; v < n; ++v)
        if (g.degree(v) > g.degree(hub)) hub = v;
    auto sweep1 = kernels::serial::bfs_from_sources(g, std::span(&hub, 1));
    NodeId far = sweep1[0].farthest;
    auto sweep2 = kernels::serial::bfs_from_sources(g, std::span(&far, 1));
    out.diameter = std::max({diameter, sweep1[0].eccentricity, sweep2[0].eccentricity});
    out.diameter_method = DistanceMethod::lower_bound;
    return out;
}

MetricsReport general_metrics(const SimpleGraph& g, const ComponentSet& components) {
    MetricsReport r;
    r.n = g.node_count();
    r.m = g.edge_count();
    auto cl = clustering_summary(g);
    r.avg_clustering = cl.average_all;
    r.transitivity = cl.transitivity;
    r.num_components = components.count();
    if (components.largest) {
        r.largest_component_nodes = components.sizes[*components.largest].nodes;
        r.largest_component_edges = components.sizes[*components.largest].edges;
    }
    return r;
}

MetricsReport general_metrics(const TransactionGraph& g) {
    SimpleGraph simple = project_simple(g);
    return general_metrics(simple, connected_components(simple));
}

}  // namespace chaingraph
