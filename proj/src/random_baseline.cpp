#include "chaingraph/random_baseline.hpp"

#include <limits>
#include <random>
#include <stdexcept>
#include <unordered_set>

namespace chaingraph {

std::uint64_t max_simple_edges(std::uint64_t n) {
    if (n < 2) return 0;
    return (n % 2 == 0) ? (n / 2) * (n - 1) : n * ((n - 1) / 2);
}

namespace {

// Draws `count` distinct unordered pairs in draw order.
std::vector<std::pair<NodeId, NodeId>> sample_pairs(std::uint64_t n, std::uint64_t count, std::mt19937_64& rng) {
    std::vector<std::pair<NodeId, NodeId>> pairs;
    pairs.reserve(count);
    std::unordered_set<std::uint64_t> seen;
    seen.reserve(count * 2);
    std::uniform_int_distribution<std::uint64_t> pick(0, n - 1);
    while (pairs.size() < count) {
        auto a = static_cast<NodeId>(pick(rng));
        auto b = static_cast<NodeId>(pick(rng));
        if (a == b) continue;
        if (a > b) std::swap(a, b);
        if (seen.insert((std::uint64_t(a) << 32) | b).second) pairs.emplace_back(a, b);
    }
    return pairs;
}

}  // namespace

SimpleGraph gnm_random_graph(const GnmParams& p) {
    if (p.n > std::numeric_limits<NodeId>::max()) throw std::invalid_argument("gnm: too many nodes");
    const std::uint64_t total = max_simple_edges(p.n);
    if (p.m > total)
        throw std::invalid_argument("gnm: m = " + std::to_string(p.m) + " exceeds the " + std::to_string(total) +
                                    " possible edges on " + std::to_string(p.n) + " nodes");
    std::mt19937_64 rng(p.seed);

    if (p.m <= total / 2) return SimpleGraph(p.n, sample_pairs(p.n, p.m, rng));

    // Dense: choose the pairs to omit, then take every other pair.
    auto omitted = sample_pairs(p.n, total - p.m, rng);
    std::unordered_set<std::uint64_t> skip;
    skip.reserve(omitted.size() * 2);
    for (auto [a, b] : omitted) skip.insert((std::uint64_t(a) << 32) | b);
    std::vector<std::pair<NodeId, NodeId>> edges;
    edges.reserve(p.m);
    for (NodeId a = 0; a < p.n; ++a)
        for (NodeId b = a + 1; b < p.n; ++b)
            if (!skip.contains((std::uint64_t(a) << 32) | b)) edges.emplace_back(a, b);
    return SimpleGraph(p.n, std::move(edges));
}

std::uint64_t derive_trial_seed(std::uint64_t seed, std::uint64_t trial) {
    std::seed_seq seq{std::uint32_t(seed), std::uint32_t(seed >> 32), std::uint32_t(trial), std::uint32_t(trial >> 32)};
    std::uint32_t words[2];
    seq.generate(std::begin(words), std::end(words));
    return (std::uint64_t(words[0]) << 32) | words[1];
}

std::optional<double> small_world_sigma(double cc, double L, double cc_rg, double L_rg) {
    if (!(L > 0.0) || !(L_rg > 0.0))
        throw std::invalid_argument("small_world_sigma: average distances must be positive");
    if (cc == 0.0) return 0.0;
    if (cc_rg == 0.0) return std::nullopt;
    return (cc / cc_rg) / (L / L_rg);
}

SmallWorldReport small_world_report(const SimpleGraph& subject, std::size_t trials, std::uint64_t seed,
                                    const ExactnessPolicy& policy) {
    if (trials == 0) throw std::invalid_argument("small_world_report: trials must be >= 1");
    SmallWorldReport r;
    r.n = subject.node_count();
    r.m = subject.edge_count();
    r.trials = trials;
    r.seed = seed;
    r.cc = average_local_clustering(subject);
    r.subject_distance = distance_summary(subject, policy);
    r.L = r.subject_distance.average_distance;

    double cc_sum = 0.0, L_sum = 0.0;
    for (std::size_t t = 0; t < trials; ++t) {
        RandomTrial trial;
        trial.seed = derive_trial_seed(seed, t);
        SimpleGraph rg = gnm_random_graph({r.n, r.m, trial.seed});
        trial.clustering = average_local_clustering(rg);
        auto main = largest_component(rg);
        trial.component_nodes = main.graph.node_count();
        ExactnessPolicy trial_policy = policy;
        trial_policy.seed = trial.seed;
        auto dist = distance_summary(main.graph, trial_policy);
        trial.average_distance = dist.average_distance;
        trial.method = dist.average_method;
        cc_sum += trial.clustering;
        L_sum += trial.average_distance;
        r.trial_results.push_back(trial);
    }
    r.cc_rg = cc_sum / static_cast<double>(trials);
    r.L_rg = L_sum / static_cast<double>(trials);
    r.sigma = small_world_sigma(r.cc, r.L, r.cc_rg, r.L_rg);
    return r;
}

}  // namespace chaingraph
