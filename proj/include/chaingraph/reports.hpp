#pragma once

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "chaingraph/metrics.hpp"
#include "chaingraph/miners.hpp"
#include "chaingraph/random_baseline.hpp"

namespace chaingraph {

/// Shortest text that round-trips to the same double.
std::string format_double(double v);
std::string format_sigma(const std::optional<double>& sigma);

/// Comment block written at the top of every output file.
struct Provenance {
    std::string tool_version;
    std::string command;
    std::string config_hash;
    std::uint64_t seed = 0;
    std::vector<std::string> snapshots;  // "start:count" or an input file name

    /// One line per field, each starting with `marker` ('#' for CSV, '%' for Pajek).
    void write(std::ostream& out, char marker) const;
};

void write_degree_csv(const DegreeHistogram& h, std::ostream& out);
/// log10 of degree and count; zero-degree and zero-count bins are skipped.
void write_degree_loglog_csv(const DegreeHistogram& h, std::ostream& out);

inline constexpr std::string_view kMetricsHeader =
    "blocks,nodes,edges,avg_clus_coeff,transitivity,components,nodes_largest_comp,edges_largest_comp";
void write_metrics_row(const MetricsReport& r, std::string_view blocks_label, std::ostream& out);

inline constexpr std::string_view kDistanceHeader =
    "nodes_main_comp,edges_main_comp,avg_distance,avg_distance_method,diameter,diameter_method,sources,seed";
void write_distance_row(const DistanceSummary& d, std::ostream& out);

inline constexpr std::string_view kSmallWorldHeader =
    "blocks,nodes,edges,cc,L,cc_RG,L_RG,sigma,trials,seed,L_method,L_RG_method";
void write_smallworld_row(const SmallWorldReport& r, std::string_view blocks_label, std::ostream& out);

void write_miners_csv(const MinerHistogram& h, std::ostream& out);
void write_miner_distribution_csv(const MinerHistogram& h, std::ostream& out);

}  // namespace chaingraph
