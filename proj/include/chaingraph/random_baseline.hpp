#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "chaingraph/graph.hpp"
#include "chaingraph/metrics.hpp"

namespace chaingraph {

/// Uniform random graph with exactly `m` distinct edges on `n` nodes.
/// The expected edge probability of the equivalent G(n, p) is 2m / (n(n-1)).
struct GnmParams {
    std::uint64_t n = 0;
    std::uint64_t m = 0;
    std::uint64_t seed = 0;
};

[[nodiscard]] std::uint64_t max_simple_edges(std::uint64_t n);

/// Samples m pairs without replacement (or, when m exceeds half of all pairs,
/// samples the pairs to leave out). Same params, same graph.
/// Throws std::invalid_argument if m > n(n-1)/2 or n does not fit a NodeId.
SimpleGraph gnm_random_graph(const GnmParams& params);

/// Per-trial seed, a pure function of (seed, trial).
[[nodiscard]] std::uint64_t derive_trial_seed(std::uint64_t seed, std::uint64_t trial);

/// Small-world coefficient (cc / cc_rg) / (L / L_rg).
/// Returns 0 when cc == 0 and std::nullopt (UNDEFINED) when cc > 0 but cc_rg == 0.
/// Throws std::invalid_argument when L or L_rg is not positive.
std::optional<double> small_world_sigma(double cc, double L, double cc_rg, double L_rg);

struct RandomTrial {
    std::uint64_t seed = 0;
    double clustering = 0.0;        // average local clustering of the whole instance
    double average_distance = 0.0;  // over the instance's largest component
    std::size_t component_nodes = 0;
    DistanceMethod method = DistanceMethod::exact;
};

struct SmallWorldReport {
    std::size_t n = 0;
    std::size_t m = 0;
    double cc = 0.0;
    double L = 0.0;
    double cc_rg = 0.0;
    double L_rg = 0.0;
    std::optional<double> sigma;  // nullopt = UNDEFINED
    std::size_t trials = 0;
    std::uint64_t seed = 0;
    DistanceSummary subject_distance;
    std::vector<RandomTrial> trial_results;
};

/// Compares a connected subject (normally a largest component) against
/// `trials` G(n, m) instances of the same size. cc and cc_rg are average
/// local clustering; L_rg is measured on each instance's largest component.
SmallWorldReport small_world_report(const SimpleGraph& subject, std::size_t trials, std::uint64_t seed,
                                    const ExactnessPolicy& policy = {});

}  // namespace chaingraph
